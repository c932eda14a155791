from __future__ import annotations

import os
import re
from pathlib import Path

import networkx as nx
import pytest
from hypothesis import settings

from distcospec.graph import Graph, load_graph

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
DATA = ROOT / "data"

ACCEPTANCE_LINES: list[str] = []

settings.register_profile("exact", deadline=None)
settings.load_profile("exact")


def fixture_graph(name: str) -> Graph:
    return load_graph(FIXTURES / name)


def fixture_text(name: str) -> str:
    return (FIXTURES / name).read_text(encoding="utf-8")


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    h = nx.convert_node_labels_to_integers(h)
    return Graph.from_edges(h.number_of_nodes(), list(h.edges()))


def pytest_collection_modifyitems(config, items):
    if os.environ.get("DISTCOSPEC_EXTENDED") == "1":
        return
    skip = pytest.mark.skip(reason="extended tier; set DISTCOSPEC_EXTENDED=1 to run")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)
            m = re.match(r"test_criterion_(\d+)", item.name)
            if m:
                ACCEPTANCE_LINES.append(f"[SKIP] criterion {m.group(1)}: extended tier, not run by default")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(re.search(r"criterion (\d+)", s).group(1))):
            terminalreporter.write_line(line)
