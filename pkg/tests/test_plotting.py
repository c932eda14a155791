from __future__ import annotations

import math

from conftest import fixture_graph, fixture_text
from distcospec.plotting import circle_layout, draw_pair, plot_counts, render_survey_figures
from distcospec.survey import run_survey
from distcospec.switching import parse_config

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def test_circle_layout_is_on_unit_circle():
    pts = circle_layout(7)
    assert len(pts) == 7
    assert all(math.isclose(x * x + y * y, 1.0) for x, y in pts)


def test_draw_pair_writes_png(tmp_path):
    c = parse_config(fixture_text("fig3.config"))
    path = tmp_path / "pair.png"
    draw_pair(fixture_graph("fig3-g1.txt"), fixture_graph("fig3-g2.txt"), path, c)
    assert path.read_bytes().startswith(PNG_MAGIC)


def test_survey_figures(tmp_path):
    res = run_survey(6)
    files = render_survey_figures(res, tmp_path, max_pairs=2)
    names = sorted(p.name for p in files)
    assert "counts.png" in names
    assert len([n for n in names if n.startswith("pair-")]) == min(2, len(res.pairs))
    for p in files:
        assert p.read_bytes().startswith(PNG_MAGIC)


def test_counts_plot_handles_empty_survey(tmp_path):
    path = plot_counts(run_survey(1).summary(), tmp_path / "c.png")
    assert path.read_bytes().startswith(PNG_MAGIC)
