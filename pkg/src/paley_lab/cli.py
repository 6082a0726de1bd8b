"""Paley Lab CLI - Main entry point."""

from __future__ import annotations

import logging
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import cast

import typer
from rich.logging import RichHandler
from rich.panel import Panel
from rich.table import Table

from paley_lab import __version__
from paley_lab.claims import (
    MODULE_NAMES,
    Claim,
    ModuleName,
    carlitz_claim,
    design_claim,
    exit_code,
    get_all_claims,
    get_claim,
    lenstra_claim,
    mcconnel_claims,
    paley_aut_claim,
    run_claims,
    tournament_claim,
)
from paley_lab.config import (
    DEFAULT_CONFIG_TEMPLATE,
    SECTION_TYPES,
    Config,
    get_config_paths,
    load_config,
    load_config_from_file,
)
from paley_lab.core.exporter import (
    EXPORT_FORMATS,
    ExportFormat,
    design_to_text,
    export_graph,
    matrix_to_text,
    parse_design_text,
    parse_matrix_text,
    parse_sign_matrix,
    write_text,
)
from paley_lab.core.field import FiniteField, make_field
from paley_lab.core.graph import Graph, srg_params
from paley_lab.core.groups import (
    PermutationGroup,
    design_automorphisms,
    graph_automorphisms,
    tournament_automorphisms,
)
from paley_lab.core.hadamard import (
    SignMatrix,
    compound_counts,
    compound_dimensions,
    is_hadamard,
    paley_coverage,
    paley_I,
    paley_II,
    paley_III,
    pg_design,
    qr_design,
    sylvester,
)
from paley_lab.core.paley import generalized_paley, paley_graph, paley_tournament, peisert_graph
from paley_lab.core.residues import canonical_two_squares, two_squares_gauss, two_squares_jacobsthal
from paley_lab.errors import PaleyLabError
from paley_lab.ui.console import (
    claim_progress,
    create_console,
    create_error_console,
    print_banner,
    print_claim_lines,
    print_claim_table,
    print_error,
    print_success,
    print_warning,
)

app = typer.Typer(
    name="paley-lab",
    help="Build and verify Paley graphs, Hadamard matrices and their automorphism groups.",
    no_args_is_help=True,
)
console = create_console()
err_console = create_error_console()


class State:
    """Global state container for CLI."""

    def __init__(self) -> None:
        self.config: Config = Config()  # Default until loaded


state = State()

GRAPH_KINDS = ("paley", "tournament", "genpaley", "peisert")
SRG_FAMILIES = ("paley", "peisert", "genpaley")
HADAMARD_KINDS = ("sylvester", "paley1", "paley2", "paley3")
DESIGN_KINDS = ("qr", "pg")
AUT_KINDS = ("graph", "tournament", "design")
TWO_SQUARES_METHODS = ("jacobsthal", "gauss")


def _configure_logging(verbose: bool) -> None:
    """Send library logs to stderr through rich; DEBUG with --verbose, else WARNING."""
    logger = logging.getLogger("paley_lab")
    logger.handlers.clear()
    logger.addHandler(RichHandler(console=err_console, show_time=False, show_path=False))
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)


@contextmanager
def _reported_errors() -> Iterator[None]:
    """Map library errors to exit 2 and file errors to exit 1."""
    try:
        yield
    except PaleyLabError as e:
        print_error(err_console, f"Error: {e}")
        raise typer.Exit(2) from e
    except OSError as e:
        print_error(err_console, f"File error: {e}")
        raise typer.Exit(1) from e


def _require_choice(value: str, choices: tuple[str, ...], hint: str) -> str:
    if value not in choices:
        raise typer.BadParameter(f"{value!r} is not one of: {', '.join(choices)}", param_hint=hint)
    return value


def _require_option(value: int | None, hint: str, why: str) -> int:
    if value is None:
        raise typer.BadParameter(f"required {why}", param_hint=hint)
    return value


def _emit(text: str, out: Path | None) -> None:
    """Print text unchanged, or write it to out."""
    if out is None:
        console.print(text, end="", markup=False)
        return
    write_text(out, text)
    print_success(console, f"Wrote {out}")


def _read(path: Path) -> str:
    return path.read_text(encoding="utf-8")


def _print_group(group: PermutationGroup) -> None:
    console.print(f"order={group.order}", markup=False)
    for g in group.generators:
        console.print(g.cycle_notation(), markup=False)


def _print_config_locations(xdg_path: Path, cwd_path: Path, *, verbose: bool = False) -> None:
    """Print config file locations and their status.

    Args:
        xdg_path: Path to the global XDG config file.
        cwd_path: Path to the local CWD config file.
        verbose: If True, use detailed format with spacing (for config_path).
                 If False, use compact format (for config_show).
    """
    if verbose:
        console.print("[bold]Config file locations:[/bold]\n")

        xdg_status = "[green]exists[/green]" if xdg_path.exists() else "[dim]not found[/dim]"
        console.print(f"  Global (XDG): {xdg_path}")
        console.print(f"                {xdg_status}\n")

        cwd_status = (
            "[green]exists (overrides global)[/green]"
            if cwd_path.exists()
            else "[dim]not found[/dim]"
        )
        console.print(f"  Local (CWD):  {cwd_path}")
        console.print(f"                {cwd_status}")
    else:
        console.print("\n[bold]Config locations:[/bold]")
        xdg_status = "[green]exists[/green]" if xdg_path.exists() else "[dim]not found[/dim]"
        console.print(f"  Global: {xdg_path} ({xdg_status})")

        cwd_status = "[green]exists[/green]" if cwd_path.exists() else "[dim]not found[/dim]"
        console.print(f"  Local:  {cwd_path} ({cwd_status})")


# Shared CLI options
P_OPTION = typer.Option(..., "--p", help="Characteristic p of the field")
E_OPTION = typer.Option(1, "--e", help="Extension degree e, so q = p^e")
M_OPTION = typer.Option(None, "--m", help="Order m of the connection subgroup (genpaley)")
OUT_OPTION = typer.Option(None, "--out", "-o", help="Write to this file instead of stdout")
SLOW_OPTION = typer.Option(
    False, "--slow", help="Include claims registered as slow (also [verify] slow in config)"
)
VERIFY_P_OPTION = typer.Option(None, "--p", help="Check a single field of characteristic p")
VERIFY_E_OPTION = typer.Option(1, "--e", help="Extension degree used with --p")
VERIFY_Q_OPTION = typer.Option(None, "--q", help="Check a single field order q")
VERIFY_D_OPTION = typer.Option(None, "--d", help="Index d of the coset subgroup, used with --p")


@app.command("two-squares")
def two_squares(
    p: int = typer.Argument(..., help="A prime p = 1 mod 4"),
    method: str = typer.Option("jacobsthal", "--method", help="jacobsthal or gauss"),
) -> None:
    """Write a prime p = 1 mod 4 as a sum of two squares."""
    _require_choice(method, TWO_SQUARES_METHODS, "--method")
    with _reported_errors():
        a, b = two_squares_jacobsthal(p) if method == "jacobsthal" else two_squares_gauss(p)
    a, b = canonical_two_squares(a, b)
    console.print(f"{p} = {a}^2 + {b}^2", markup=False)


def _graph_for(kind: str, F: FiniteField, m: int | None) -> Graph:
    if kind == "paley":
        return paley_graph(F)
    if kind == "tournament":
        return paley_tournament(F)
    if kind == "peisert":
        return peisert_graph(F)
    order = _require_option(m, "--m", "for genpaley")
    return generalized_paley(F, order)[0]


@app.command()
def build(
    kind: str = typer.Argument(..., help="paley, tournament, genpaley or peisert"),
    p: int = P_OPTION,
    e: int = E_OPTION,
    m: int | None = M_OPTION,
    fmt: str | None = typer.Option(
        None, "--format", "-f", help="dot, edges or matrix (default: [output] format)"
    ),
    out: Path | None = OUT_OPTION,
) -> None:
    """Build a graph from the Paley family and export it."""
    _require_choice(kind, GRAPH_KINDS, "KIND")
    fmt = fmt or state.config.output.format
    _require_choice(fmt, EXPORT_FORMATS, "--format")
    with _reported_errors():
        G = _graph_for(kind, make_field(p, e), m)
        _emit(export_graph(G, cast(ExportFormat, fmt)), out)


@app.command()
def srg(
    p: int = P_OPTION,
    e: int = E_OPTION,
    family: str = typer.Option("paley", "--family", help="paley, peisert or genpaley"),
    m: int | None = M_OPTION,
) -> None:
    """Print the strongly regular parameters of a graph in the Paley family."""
    _require_choice(family, SRG_FAMILIES, "--family")
    with _reported_errors():
        G = _graph_for(family, make_field(p, e), m)
    console.print(str(srg_params(G)), markup=False)


# Field subcommand group
field_app = typer.Typer(name="field", help="Inspect finite fields.", no_args_is_help=True)
app.add_typer(field_app)


@field_app.command("info")
def field_info(p: int = P_OPTION, e: int = E_OPTION) -> None:
    """Print p, e, q, the modulus (high to low) and the primitive root."""
    with _reported_errors():
        F = make_field(p, e)
    for line in (
        f"p={F.p}",
        f"e={F.e}",
        f"q={F.q}",
        f"modulus={' '.join(map(str, F.modulus))}",
        f"omega={F.omega}",
    ):
        console.print(line, markup=False)


# Hadamard subcommand group
hadamard_app = typer.Typer(
    name="hadamard", help="Build and check Hadamard matrices.", no_args_is_help=True
)
app.add_typer(hadamard_app)


def _hadamard_matrices(kind: str, k: int | None, q: int | None) -> list[SignMatrix]:
    if kind == "sylvester":
        return [sylvester(_require_option(k, "--k", "for sylvester"))]
    if kind == "paley1":
        return [paley_I(_require_option(q, "--q", "for paley1"))]
    if kind == "paley2":
        return [paley_II(_require_option(q, "--q", "for paley2"))]
    k = _require_option(k, "--k", "for paley3")
    return paley_III(k, max_k=state.config.limits.paley3_max_k)


@hadamard_app.command("build")
def hadamard_build(
    kind: str = typer.Argument(..., help="sylvester, paley1, paley2 or paley3"),
    k: int | None = typer.Option(None, "--k", help="Order 2^k (sylvester, paley3)"),
    q: int | None = typer.Option(None, "--q", help="Field order (paley1, paley2)"),
    out: Path | None = OUT_OPTION,
) -> None:
    """Build Hadamard matrices; paley3 prints every block of the partition."""
    _require_choice(kind, HADAMARD_KINDS, "KIND")
    with _reported_errors():
        matrices = _hadamard_matrices(kind, k, q)
        _emit("\n".join(matrix_to_text(H) for H in matrices), out)


@hadamard_app.command("check")
def hadamard_check(
    file: Path = typer.Argument(..., help="Matrix file: 'order m' then m rows of + and -"),
) -> None:
    """Check HH^T = mI exactly."""
    with _reported_errors():
        H = parse_sign_matrix(_read(file))
        check = is_hadamard(H)
    if check:
        console.print(f"PASS hadamard order={H.order}", markup=False)
        return
    i, j = check.failing_pair or (0, 0)
    console.print(f"FAIL rows {i} and {j} are not orthogonal", markup=False)
    raise typer.Exit(1)


def _braced(values: tuple[int, ...] | list[int]) -> str:
    return "{" + ",".join(map(str, values)) + "}"


@hadamard_app.command("coverage")
def hadamard_coverage(
    limit: int = typer.Option(200, "--limit", help="Largest order considered"),
) -> None:
    """Orders up to limit reached by Sylvester and Paley constructions."""
    with _reported_errors():
        report = paley_coverage(limit)
        dimensions = compound_dimensions(limit)
    console.print(f"limit={report.limit}", markup=False)
    console.print(f"achievable={_braced(report.achievable)}", markup=False)
    console.print(f"exceptions={_braced(report.exceptions)}", markup=False)
    console.print(f"compound_dimensions={_braced(dimensions)}", markup=False)


@hadamard_app.command("compound")
def hadamard_compound(
    n: int = typer.Option(..., "--n", help="Hadamard order 4n"),
    order: int = typer.Option(..., "--order", help="Order N of the design automorphism group"),
) -> None:
    """Simplex compound counts d1 = (4n-1)!/N and D = 2^(4n-3) d1/n."""
    with _reported_errors():
        counts = compound_counts(n, order)
    console.print(f"d1={counts.d1} D={counts.D}", markup=False)


# Design subcommand group
design_app = typer.Typer(name="design", help="Build Hadamard designs.", no_args_is_help=True)
app.add_typer(design_app)


@design_app.command("build")
def design_build(
    kind: str = typer.Argument(..., help="qr or pg"),
    q: int | None = typer.Option(None, "--q", help="Field order q = 3 mod 4 (qr)"),
    k: int | None = typer.Option(None, "--k", help="Dimension k of F_2^k (pg)"),
    out: Path | None = OUT_OPTION,
) -> None:
    """Build the quadratic residue design or the PG(k-1, 2) hyperplane design."""
    _require_choice(kind, DESIGN_KINDS, "KIND")
    with _reported_errors():
        if kind == "qr":
            D = qr_design(_require_option(q, "--q", "for qr"))
        else:
            D = pg_design(_require_option(k, "--k", "for pg"))
        _emit(design_to_text(D), out)


@app.command()
def aut(
    kind: str = typer.Argument(..., help="graph, tournament or design"),
    file: Path = typer.Argument(..., help="Adjacency matrix, or design text for 'design'"),
) -> None:
    """Print the automorphism group order and one generator per line."""
    _require_choice(kind, AUT_KINDS, "KIND")
    limits = state.config.limits
    with _reported_errors():
        text = _read(file)
        if kind == "design":
            group = design_automorphisms(
                parse_design_text(text),
                max_points=limits.design_max_points,
            )
        else:
            search = tournament_automorphisms if kind == "tournament" else graph_automorphisms
            group = search(
                parse_matrix_text(text),
                max_vertices=limits.iso_max_vertices,
            )
    _print_group(group)


# Verify subcommand group
verify_app = typer.Typer(
    name="verify", help="Check published claims by direct computation.", no_args_is_help=True
)
app.add_typer(verify_app)


def _run_verification(claims: list[Claim], *, table: bool = False) -> None:
    """Run claims, print one line each (or the table), and exit 1 on any FAIL."""
    if not claims:
        print_warning(err_console, "No claims selected.")
        raise typer.Exit(0)
    config = state.config
    with claim_progress(err_console, len(claims)) as advance:
        results = run_claims(
            claims,
            limits=config.limits,
            parallel=config.verify.parallel_config,
            on_done=advance,
        )
    if table:
        print_claim_table(console, results)
    else:
        print_claim_lines(console, results)
    raise typer.Exit(exit_code(results))


def _include_slow(slow: bool) -> bool:
    return slow or state.config.verify.slow


@verify_app.command("table1")
def verify_table1() -> None:
    """Orders m = 0 mod 4 up to 200 not reached by Paley and Sylvester."""
    report = paley_coverage(200)
    console.print(f"exceptions={_braced(report.exceptions)}", markup=False)
    _run_verification([get_claim("table1")])


@verify_app.command("carlitz")
def verify_carlitz(
    p: int | None = VERIFY_P_OPTION,
    e: int = VERIFY_E_OPTION,
    slow: bool = SLOW_OPTION,
) -> None:
    """chi-preserving permutations fixing 0 and 1 are field automorphisms."""
    if p is not None:
        _run_verification([carlitz_claim(p**e)])
    else:
        _run_verification(get_all_claims(include_slow=_include_slow(slow), group="carlitz"))


@verify_app.command("theorem41")
def verify_theorem41(
    q: int | None = VERIFY_Q_OPTION,
    slow: bool = SLOW_OPTION,
) -> None:
    """Aut P(q) equals the maps v -> a v^gamma + b with a a square."""
    if q is not None:
        _run_verification([paley_aut_claim(q)])
    else:
        _run_verification(get_all_claims(include_slow=_include_slow(slow), group="theorem41"))


def _index_case(p: int | None, e: int, d: int | None) -> tuple[int, int] | None:
    if p is None and d is None:
        return None
    p = _require_option(p, "--p", "together with --d")
    d = _require_option(d, "--d", "together with --p")
    return p**e, d


@verify_app.command("mcconnel")
def verify_mcconnel(
    p: int | None = VERIFY_P_OPTION,
    e: int = VERIFY_E_OPTION,
    d: int | None = VERIFY_D_OPTION,
    slow: bool = SLOW_OPTION,
) -> None:
    """Coset-preserving maps and the order of the group they generate."""
    case = _index_case(p, e, d)
    if case is not None:
        _run_verification(mcconnel_claims(*case))
    else:
        _run_verification(get_all_claims(include_slow=_include_slow(slow), group="mcconnel"))


@verify_app.command("lenstra")
def verify_lenstra(
    p: int | None = VERIFY_P_OPTION,
    e: int = VERIFY_E_OPTION,
    d: int | None = VERIFY_D_OPTION,
    slow: bool = SLOW_OPTION,
) -> None:
    """Maps permuting the difference classes form the normalizer."""
    case = _index_case(p, e, d)
    if case is not None:
        _run_verification([lenstra_claim(*case)])
    else:
        _run_verification(get_all_claims(include_slow=_include_slow(slow), group="lenstra"))


@verify_app.command("tournament")
def verify_tournament(
    q: int | None = VERIFY_Q_OPTION,
    slow: bool = SLOW_OPTION,
) -> None:
    """Paley tournament automorphism groups have order q(q-1)e/2."""
    if q is not None:
        _run_verification([tournament_claim(q)])
    else:
        _run_verification(get_all_claims(include_slow=_include_slow(slow), group="tournament"))


@verify_app.command("design")
def verify_design(
    q: int | None = VERIFY_Q_OPTION,
    slow: bool = SLOW_OPTION,
) -> None:
    """Automorphism orders of the quadratic residue designs."""
    if q is not None:
        _run_verification([design_claim(q)])
    else:
        _run_verification(get_all_claims(include_slow=_include_slow(slow), group="design"))


@verify_app.command("all")
def verify_all(
    only: str | None = typer.Option(
        None, "--only", help=f"Restrict to one module: {', '.join(MODULE_NAMES)}"
    ),
    slow: bool = SLOW_OPTION,
) -> None:
    """Run every registered claim and print a summary table."""
    if only is not None:
        _require_choice(only, MODULE_NAMES, "--only")
    print_banner(err_console)
    claims = get_all_claims(
        include_slow=_include_slow(slow), module=cast("ModuleName | None", only)
    )
    _run_verification(claims, table=True)


# Config subcommand group
config_app = typer.Typer(
    name="config",
    help="Manage Paley Lab configuration.",
    no_args_is_help=True,
)
app.add_typer(config_app)


@config_app.command("init")
def config_init(
    global_config: bool = typer.Option(
        True,
        "--global/--local",
        help="Create in XDG config (--global) or current directory (--local)",
    ),
    force: bool = typer.Option(
        False,
        "--force",
        "-f",
        help="Overwrite existing config file",
    ),
) -> None:
    """Generate a default configuration file with comments."""
    xdg_path, cwd_path = get_config_paths()
    target = xdg_path if global_config else cwd_path

    if target.exists() and not force:
        console.print(f"[yellow]Config already exists: {target}[/yellow]")
        console.print("[dim]Use --force to overwrite[/dim]")
        raise typer.Exit(1)

    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(DEFAULT_CONFIG_TEMPLATE)
    except OSError as e:
        console.print(f"[red]Permission denied: {target}[/red]")
        console.print(f"[dim]Check write permissions for {target.parent}[/dim]")
        raise typer.Exit(1) from e

    location = "global" if global_config else "local"
    console.print(f"[green]Created {location} config:[/green] {target}")


@config_app.command("show")
def config_show(
    resolved: bool = typer.Option(
        True,
        "--resolved/--raw",
        help="Show merged config (--resolved) or raw file (--raw)",
    ),
) -> None:
    """Display the active configuration and its source."""
    config = state.config
    xdg_path, cwd_path = get_config_paths()

    source_text = str(config._source) if config._source else "[dim]defaults only[/dim]"
    console.print(
        Panel.fit(
            f"[bold]Active config:[/bold] {source_text}",
            title="Configuration Source",
        )
    )

    if resolved:
        table = Table(title="Resolved Configuration", show_header=True)
        table.add_column("Section", style="cyan")
        table.add_column("Key", style="green")
        table.add_column("Value")

        for section_name in SECTION_TYPES:
            section = getattr(config, section_name)
            for key, value in vars(section).items():
                if not key.startswith("_"):
                    table.add_row(section_name, key, str(value))

        console.print(table)
    else:
        if config._source and config._source.exists():
            console.print(config._source.read_text(), markup=False)
        else:
            console.print("[dim]No config file found[/dim]")

    _print_config_locations(xdg_path, cwd_path, verbose=False)


@config_app.command("path")
def config_path() -> None:
    """Show configuration file locations and status."""
    xdg_path, cwd_path = get_config_paths()
    _print_config_locations(xdg_path, cwd_path, verbose=True)


@app.callback()
def main(
    version: bool = typer.Option(
        False,
        "--version",
        "-v",
        help="Show version and exit",
        is_eager=True,
    ),
    config_file: Path | None = typer.Option(
        None,
        "--config",
        "-c",
        help="Path to config file (overrides default locations)",
        exists=True,
        readable=True,
    ),
    verbose: bool = typer.Option(
        False,
        "--verbose",
        "-V",
        help="Log search progress to stderr",
    ),
) -> None:
    """Paley Lab - exact constructions and checks for Paley graphs and Hadamard matrices."""
    if version:
        console.print(f"Paley Lab v{__version__}")
        raise typer.Exit(0)

    _configure_logging(verbose)

    try:
        state.config = load_config_from_file(config_file) if config_file else load_config()
    except ValueError as e:
        print_error(err_console, f"Config error: {e}")
        raise typer.Exit(1) from e


if __name__ == "__main__":
    app()
