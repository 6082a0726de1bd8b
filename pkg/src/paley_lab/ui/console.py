"""Rich console utilities for output formatting."""

from __future__ import annotations

import platform
from collections.abc import Callable, Iterator, Sequence
from contextlib import contextmanager

from rich.console import Console
from rich.panel import Panel
from rich.progress import BarColumn, Progress, SpinnerColumn, TaskProgressColumn, TextColumn
from rich.table import Table
from rich.text import Text

from paley_lab import __version__
from paley_lab.claims.base import ClaimResult, ClaimStatus

TABLE_WIDTH = 100

STATUS_STYLES: dict[ClaimStatus, str] = {
    "PASS": "green",
    "FAIL": "bold red",
    "DIFF": "yellow",
}


def create_console() -> Console:
    """Create the stdout console; plain lines are never highlighted or wrapped."""
    # Windows-specific console settings
    if platform.system() == "Windows":
        return Console(legacy_windows=True, emoji=False, highlight=False, soft_wrap=True)
    return Console(highlight=False, soft_wrap=True)


def create_error_console() -> Console:
    return Console(stderr=True, highlight=False)


def print_banner(console: Console) -> None:
    """Print the Paley Lab banner."""
    banner_text = Text()
    banner_text.append("PALEY ", style="bold blue")
    banner_text.append("LAB", style="bold yellow")

    tagline = Text("Paley graphs, Hadamard matrices and their groups", style="dim italic")

    panel = Panel(
        Text.assemble(banner_text, "\n", tagline),
        border_style="blue",
        padding=(0, 2),
        subtitle=f"v{__version__}",
        subtitle_align="right",
    )

    console.print(panel)
    console.print()


def print_success(console: Console, message: str) -> None:
    """Print a success message."""
    console.print(f"[green]{message}[/green]")


def print_warning(console: Console, message: str) -> None:
    """Print a warning message."""
    console.print(f"[yellow]{message}[/yellow]")


def print_error(console: Console, message: str) -> None:
    """Print an error message."""
    console.print(f"[red]{message}[/red]")


def print_claim_lines(console: Console, results: Sequence[ClaimResult]) -> None:
    """One `STATUS name expected=.. computed=..` line per result, without markup."""
    for result in results:
        console.print(result.line, markup=False)


def print_claim_table(console: Console, results: Sequence[ClaimResult]) -> None:
    """Render `verify all` results as a fixed-width table with a status summary."""
    table = Table(title="Verified Claims", show_header=True, header_style="bold magenta")
    table.add_column("Claim", style="cyan", no_wrap=True)
    table.add_column("Source", style="dim")
    table.add_column("Expected")
    table.add_column("Computed")
    table.add_column("Status", justify="center", width=6)

    for result in results:
        table.add_row(
            result.claim.name,
            result.claim.source,
            result.expected,
            result.computed,
            Text(result.status, style=STATUS_STYLES[result.status]),
        )

    console.print(table, width=TABLE_WIDTH)

    counts = {status: sum(r.status == status for r in results) for status in STATUS_STYLES}
    summary = "  ".join(f"{status}={count}" for status, count in counts.items())
    console.print(summary, markup=False)


@contextmanager
def claim_progress(console: Console, total: int) -> Iterator[Callable[[ClaimResult], None]]:
    """Yield a callback that advances a progress bar, shown only on a terminal."""
    if not console.is_terminal:
        yield lambda result: None
        return

    with Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        BarColumn(),
        TaskProgressColumn(),
        console=console,
        transient=True,
    ) as progress:
        task = progress.add_task("Checking claims...", total=total)

        def advance(result: ClaimResult) -> None:
            progress.update(task, description=f"Checked: {result.claim.name}")
            progress.advance(task)

        yield advance
