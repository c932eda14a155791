"""One test per acceptance criterion; each prints a PASS/FAIL line in the
terminal summary.  Run standalone with ``python tests/test_acceptance.py``.

Criteria whose published counts this implementation does not reproduce are
marked ``xfail(strict=True)``: they assert the published numbers unchanged,
so they fail for real, and the line shows the observed counts.
"""

from __future__ import annotations

import sys
import time
from fractions import Fraction

import pytest

import test_qanalysis
import test_switching
from conftest import ACCEPTANCE_LINES, DATA, fixture_graph, fixture_text
from distcospec.families import FAMILIES, closed_form_H, family_pair, path_charpoly
from distcospec.graph import Graph, are_isomorphic, read_graph6_file
from distcospec.qanalysis import charpoly_f, charpoly_q, cospectral_at, cospectral_generalized, q_locus
from distcospec.survey import emit_report, run_survey
from distcospec.switching import apply_switch, certify_pair, coalesce_on_part, parse_config


def record(num: int, ok: bool, detail: str) -> None:
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {detail}")


def _counts(res) -> tuple[int, int, int]:
    return res.dq_pairs, res.df_pairs, res.construction_pairs


def _survey_line(res, expected, secs) -> str:
    return f"n={res.n} graphs={res.graphs} observed {_counts(res)} expected {expected} ({secs:.0f}s)"


def test_criterion_1_survey_n7():
    t = time.perf_counter()
    res = run_survey(7)
    expected = (11, 10, 10)
    ok = res.graphs == 853 and _counts(res) == expected
    record(1, ok, _survey_line(res, expected, time.perf_counter() - t))
    assert res.graphs == 853
    assert _counts(res) == expected


@pytest.mark.xfail(strict=True, reason="connected-only universe gives 282 all-q pairs and the "
                   "stated switching conditions match 230 pairs; see README")
def test_criterion_2_survey_n8():
    t = time.perf_counter()
    res = run_survey(8, read_graph6_file(DATA / "connected8.g6"))
    expected = (293, 281, 222)
    ok = res.graphs == 11117 and _counts(res) == expected
    record(2, ok, _survey_line(res, expected, time.perf_counter() - t))
    assert res.graphs == 11117
    assert _counts(res) == expected


@pytest.mark.extended
@pytest.mark.xfail(strict=True, reason="last run gave 12132 / 12118 / 7968 for the same reasons as n=8")
def test_criterion_3_survey_n9():
    t = time.perf_counter()
    res = run_survey(9, read_graph6_file(DATA / "connected9.g6.gz"))
    expected = (12439, 12118, 6375)
    ok = res.graphs == 261080 and _counts(res) == expected
    record(3, ok, _survey_line(res, expected, time.perf_counter() - t))
    assert res.graphs == 261080
    assert _counts(res) == expected


def test_criterion_4_path_recursion():
    bad = [n for n in range(13) if path_charpoly(n) != charpoly_q(Graph.path(n))]
    record(4, not bad, f"path_charpoly(n) equals direct charpoly for n in 0..12; mismatches {bad}")
    assert not bad


def test_criterion_5_families():
    problems = []
    half = Fraction(1, 2)
    for fam in FAMILIES:
        for n in range(8, 14):
            p = family_pair(fam, n)
            if not cospectral_at(p.g, p.h, half):
                problems.append(f"{fam} n={n} not cospectral at 1/2")
            loc = q_locus(p.g, p.h)
            if loc.identically_zero or loc.roots_between(0, 1) != [half]:
                problems.append(f"{fam} n={n} roots in (0,1) wrong")
            if n <= 12 and closed_form_H(fam, n) != charpoly_q(p.h):
                problems.append(f"{fam} n={n} closed form differs")
    record(5, not problems, "families at q=1/2, n=8..13; closed forms n=8..12; " + ("; ".join(problems) or "all exact"))
    assert not problems


def test_criterion_6_small_fixture():
    g1, g2 = fixture_graph("fig3-g1.txt"), fixture_graph("fig3-g2.txt")
    c = parse_config(fixture_text("fig3.config"))
    h = apply_switch(g1, c)
    iso = are_isomorphic(h, g2)
    cert = certify_pair(g1, h, c)
    polys = charpoly_q(g1) == charpoly_q(g2) and charpoly_f(g1, 3) == charpoly_f(g2, 3)
    ok = iso and cert.ok and polys
    record(6, ok, f"7-vertex fixture: isomorphic={iso} certificate={cert.ok} polynomials equal={polys}")
    assert ok


def test_criterion_7_three_part_and_coalesced_fixtures():
    a1, a2 = fixture_graph("fig2-g1.txt"), fixture_graph("fig2-g2.txt")
    ca = parse_config(fixture_text("fig2.config"))
    cert_a = certify_pair(a1, a2, ca)
    poly_a = charpoly_q(a1) == charpoly_q(a2)
    b1, b2 = fixture_graph("fig4-base-g1.txt"), fixture_graph("fig4-base-g2.txt")
    cb = parse_config(fixture_text("fig4-base.config"))
    cp = coalesce_on_part(b1, b2, cb, 0, Graph.complete(3), 0)
    f1, f2 = fixture_graph("fig4-g1.txt"), fixture_graph("fig4-g2.txt")
    same = are_isomorphic(cp.h1, f1) and are_isomorphic(cp.h2, f2)
    poly_b = charpoly_q(f1) == charpoly_q(f2)
    ok = cert_a.ok and poly_a and cp.certificate.ok and same and poly_b
    record(7, ok, f"3-part fixture certificate={cert_a.ok} poly={poly_a}; coalesced certificate="
                  f"{cp.certificate.ok} matches fixture={same} poly={poly_b}")
    assert ok


def test_criterion_8_property_suite():
    checks = [
        *(lambda n=n: test_switching.test_half_and_half_vectors_are_swapped(n) for n in (2, 4, 6, 8, 10)),
        test_switching.test_conjugation_fixes_constant_sum_matrices,
        test_switching.test_dense_regular_graphs_dominate_from_any_half,
        test_switching.test_similarity_is_a_symmetric_involution,
        test_switching.test_random_configs_always_certify,
        test_qanalysis.test_certified_samples_imply_generalized_cospectrality,
    ]
    failed = []
    for fn in checks:
        try:
            fn()
        except AssertionError as exc:
            failed.append(f"{getattr(fn, '__name__', 'check')}: {exc}")
    record(8, not failed, f"{len(checks) - len(failed)}/{len(checks)} property checks exact")
    assert not failed, failed


def test_criterion_9_reproducibility(tmp_path):
    outs = []
    for i, workers in enumerate((1, 1, 2)):
        d = tmp_path / f"run{i}"
        emit_report(run_survey(7, workers=workers), d, figures=False)
        outs.append(((d / "summary.json").read_bytes(), (d / "pairs.csv").read_bytes()))
    ok = outs[0] == outs[1] == outs[2]
    record(9, ok, "n=7 report byte-identical across repeated runs and worker counts 1/2")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
