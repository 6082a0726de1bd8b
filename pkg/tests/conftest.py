"""Pytest configuration and fixtures."""

from __future__ import annotations

from pathlib import Path

import networkx as nx
import pytest

from paley_lab.config import LimitsConfig
from paley_lab.core.field import FiniteField, make_field
from paley_lab.core.graph import Graph


@pytest.fixture
def temp_dir(tmp_path: Path) -> Path:
    """A scratch directory for files written by a test."""
    return tmp_path


@pytest.fixture
def f5() -> FiniteField:
    return make_field(5)


@pytest.fixture
def f7() -> FiniteField:
    return make_field(7)


@pytest.fixture
def f9() -> FiniteField:
    return make_field(3, 2)


@pytest.fixture
def f13() -> FiniteField:
    return make_field(13)


@pytest.fixture
def limits() -> LimitsConfig:
    """Default search bounds."""
    return LimitsConfig()


@pytest.fixture
def isolated_config(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    """Point the config search path at empty directories.

    Returns the directory used as the working directory.
    """
    xdg = tmp_path / "xdg"
    xdg.mkdir()
    cwd = tmp_path / "cwd"
    cwd.mkdir()
    monkeypatch.setenv("XDG_CONFIG_HOME", str(xdg))
    monkeypatch.chdir(cwd)
    return cwd


@pytest.fixture
def petersen() -> Graph:
    H = nx.petersen_graph()
    return Graph.from_edges(H.number_of_nodes(), list(H.edges()))
