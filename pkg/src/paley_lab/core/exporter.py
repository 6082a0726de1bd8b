"""Text formats for graphs, sign matrices and designs, and their parsers."""

from __future__ import annotations

from pathlib import Path
from typing import Literal, get_args

import numpy as np

from paley_lab.core.graph import Graph
from paley_lab.core.hadamard import IncidenceDesign, SignMatrix, make_design
from paley_lab.errors import InvalidArgumentError

ExportFormat = Literal["dot", "edges", "matrix"]
EXPORT_FORMATS: tuple[str, ...] = get_args(ExportFormat)

_SIGN_CHARS = {1: "+", -1: "-", 0: "0"}
_SIGN_VALUES = {char: value for value, char in _SIGN_CHARS.items()}


def _content_lines(text: str) -> list[str]:
    """Non-blank lines with ``#`` comments removed."""
    lines = (line.split("#", 1)[0].strip() for line in text.splitlines())
    return [line for line in lines if line]


def graph_to_dot(G: Graph, name: str = "G") -> str:
    """DOT source listing every vertex, then every edge in ascending order."""
    kind, arrow = ("digraph", "->") if G.directed else ("graph", "--")
    lines = [f"{kind} {name} {{"]
    lines.extend(f"  {v};" for v in range(G.n))
    lines.extend(f"  {u} {arrow} {v};" for u, v in G.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_edge_list(G: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in G.edges())


def graph_to_matrix_text(G: Graph) -> str:
    return "".join("".join(map(str, row)) + "\n" for row in G.adjacency_matrix().tolist())


def export_graph(G: Graph, fmt: ExportFormat = "edges") -> str:
    """Render G in one of the export formats.

    Raises:
        InvalidArgumentError: If fmt is not a known format.
    """
    if fmt == "dot":
        return graph_to_dot(G)
    if fmt == "edges":
        return graph_to_edge_list(G)
    if fmt == "matrix":
        return graph_to_matrix_text(G)
    raise InvalidArgumentError(f"unsupported export format: {fmt}")


def parse_matrix_text(text: str) -> Graph:
    """Read rows of 0/1 characters; whitespace inside a row is ignored.

    The graph is directed exactly when the matrix is not symmetric.
    """
    rows = []
    for number, line in enumerate(_content_lines(text), start=1):
        cells = "".join(line.split())
        if set(cells) - {"0", "1"}:
            raise InvalidArgumentError(f"line {number}: adjacency rows may only contain 0 and 1")
        rows.append([int(c) for c in cells])
    if not rows:
        raise InvalidArgumentError("adjacency matrix is empty")
    return Graph.from_matrix(rows)


def matrix_to_text(H: SignMatrix) -> str:
    lines = [f"order {H.order}"]
    lines.extend("".join(_SIGN_CHARS[x] for x in row) for row in H.rows())
    return "\n".join(lines) + "\n"


def parse_sign_matrix(text: str) -> SignMatrix:
    """Read ``order m`` followed by m rows of ``+``, ``-`` and ``0`` characters."""
    lines = _content_lines(text)
    header = lines[0].split() if lines else []
    if len(header) != 2 or header[0] != "order" or not header[1].isdigit():
        raise InvalidArgumentError("sign matrix text must start with 'order <m>'")
    m = int(header[1])
    body = lines[1:]
    if len(body) != m:
        raise InvalidArgumentError(f"expected {m} matrix rows, got {len(body)}")
    rows = []
    for number, line in enumerate(body, start=2):
        if len(line) != m or set(line) - set(_SIGN_VALUES):
            raise InvalidArgumentError(f"line {number}: expected {m} characters from '+-0'")
        rows.append([_SIGN_VALUES[c] for c in line])
    return SignMatrix(np.array(rows, dtype=np.int64))


def design_to_text(D: IncidenceDesign) -> str:
    lines = [f"points {D.points} blocks {len(D.blocks)}"]
    lines.extend(" ".join(map(str, block)) for block in D.blocks)
    return "\n".join(lines) + "\n"


def parse_design_text(text: str) -> IncidenceDesign:
    """Read ``points P blocks B`` followed by B lines of point indices."""
    lines = _content_lines(text)
    header = lines[0].split() if lines else []
    if (
        len(header) != 4
        or header[0] != "points"
        or header[2] != "blocks"
        or not (header[1].isdigit() and header[3].isdigit())
    ):
        raise InvalidArgumentError("design text must start with 'points <P> blocks <B>'")
    points, count = int(header[1]), int(header[3])
    body = lines[1:]
    if len(body) != count:
        raise InvalidArgumentError(f"expected {count} blocks, got {len(body)}")
    blocks = []
    for number, line in enumerate(body, start=2):
        try:
            block = [int(x) for x in line.split()]
        except ValueError as e:
            raise InvalidArgumentError(f"line {number}: {e}") from e
        if any(not 0 <= x < points for x in block):
            raise InvalidArgumentError(f"line {number}: point index outside 0..{points - 1}")
        blocks.append(block)
    return make_design(points, blocks)


def write_text(path: Path, text: str) -> None:
    """Write text as UTF-8, creating parent directories."""
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
