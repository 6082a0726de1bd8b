"""Tests for the text formats."""

from __future__ import annotations

from pathlib import Path

import pytest

from paley_lab.core.exporter import (
    design_to_text,
    export_graph,
    graph_to_dot,
    matrix_to_text,
    parse_design_text,
    parse_matrix_text,
    parse_sign_matrix,
    write_text,
)
from paley_lab.core.field import FiniteField
from paley_lab.core.graph import Graph, path_graph
from paley_lab.core.hadamard import paley_I, qr_design, sylvester
from paley_lab.core.paley import paley_graph, paley_tournament
from paley_lab.errors import InvalidArgumentError


class TestGraphExport:
    """Tests for DOT, edge list and matrix output."""

    def test_edge_list(self):
        assert export_graph(path_graph(3), "edges") == "0 1\n1 2\n"

    def test_matrix(self):
        assert export_graph(path_graph(3), "matrix") == "010\n101\n010\n"

    def test_dot_undirected(self):
        text = graph_to_dot(path_graph(2))
        assert text == "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n"

    def test_dot_directed(self, f7: FiniteField):
        text = export_graph(paley_tournament(f7), "dot")
        assert text.startswith("digraph G {")
        assert "  0 -> 1;" in text
        assert "  1 -> 0;" not in text

    def test_isolated_vertices_survive_dot(self):
        text = graph_to_dot(Graph(3, (0, 0, 0)))
        assert "  2;" in text

    def test_unknown_format(self):
        with pytest.raises(InvalidArgumentError, match="unsupported export format"):
            export_graph(path_graph(2), "gml")  # type: ignore[arg-type]


class TestMatrixParsing:
    """Tests for reading 0/1 adjacency text."""

    def test_reads_exported_matrix(self, f13: FiniteField):
        G = paley_graph(f13)
        assert parse_matrix_text(export_graph(G, "matrix")) == G

    def test_tournament_is_directed(self, f7: FiniteField):
        T = paley_tournament(f7)
        parsed = parse_matrix_text(export_graph(T, "matrix"))
        assert parsed.directed
        assert parsed == T

    def test_whitespace_and_comments(self):
        G = parse_matrix_text("# triangle\n0 1 1\n1 0 1\n\n1 1 0\n")
        assert G.edge_count == 3

    def test_single_vertex(self):
        assert parse_matrix_text("0\n") == Graph(1, (0,))

    def test_bad_character(self):
        with pytest.raises(InvalidArgumentError, match="line 2"):
            parse_matrix_text("01\n12\n")

    def test_empty(self):
        with pytest.raises(InvalidArgumentError, match="empty"):
            parse_matrix_text("# nothing\n")

    def test_ragged(self):
        with pytest.raises(InvalidArgumentError):
            parse_matrix_text("01\n1\n")


class TestSignMatrixText:
    """Tests for the ``order m`` sign matrix format."""

    def test_format(self):
        assert matrix_to_text(sylvester(1)) == "order 2\n++\n+-\n"

    def test_reads_back(self):
        H = paley_I(11)
        assert parse_sign_matrix(matrix_to_text(H)) == H

    def test_missing_header(self):
        with pytest.raises(InvalidArgumentError, match="order <m>"):
            parse_sign_matrix("++\n+-\n")

    def test_row_count(self):
        with pytest.raises(InvalidArgumentError, match="expected 2 matrix rows"):
            parse_sign_matrix("order 2\n++\n")

    def test_bad_row(self):
        with pytest.raises(InvalidArgumentError, match="line 3"):
            parse_sign_matrix("order 2\n++\n+x\n")


class TestDesignText:
    """Tests for the ``points P blocks B`` design format."""

    def test_format(self):
        text = design_to_text(qr_design(3))
        assert text == "points 3 blocks 3\n0\n1\n2\n"

    def test_reads_back(self):
        D = qr_design(7)
        assert parse_design_text(design_to_text(D)) == D

    def test_bad_header(self):
        with pytest.raises(InvalidArgumentError, match="points <P> blocks <B>"):
            parse_design_text("points 3\n0\n")

    def test_point_out_of_range(self):
        with pytest.raises(InvalidArgumentError, match="outside"):
            parse_design_text("points 3 blocks 1\n0 3\n")

    def test_non_integer(self):
        with pytest.raises(InvalidArgumentError, match="line 2"):
            parse_design_text("points 3 blocks 1\na\n")


class TestWriteText:
    """Tests for write_text."""

    def test_creates_parents(self, temp_dir: Path):
        target = temp_dir / "nested" / "out.txt"
        write_text(target, "0 1\n")
        assert target.read_text(encoding="utf-8") == "0 1\n"
