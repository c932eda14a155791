from __future__ import annotations

import json

import pytest

from conftest import FIXTURES
from distcospec.cli import EXIT_BUDGET, EXIT_INPUT, EXIT_OK, EXIT_VERIFY, main
from distcospec.graph import load_graph, parse_edge_list


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def fx(name: str):
    return FIXTURES / name


def test_generalized_cospectral_fixture(capsys):
    code, out, _ = run(capsys, "cospectral", fx("fig3-g1.g6"), fx("fig3-g2.g6"), "--generalized")
    assert code == EXIT_OK and out.strip() == "true"


def test_qlocus_family_fixture(capsys):
    code, out, _ = run(capsys, "qlocus", fx("fig5-G9.g6"), fx("fig5-H9.g6"), "--json")
    assert code == EXIT_OK
    js = json.loads(out)
    assert "1/2" in js["rational_roots"] and not js["identically_zero"]


def test_charpoly_p2(capsys):
    code, out, _ = run(capsys, "charpoly", fx("p2.txt"), "--symbolic-q")
    assert code == EXIT_OK and out.strip() == "x^2 - 2*x + 1 - q^2"


def test_charpoly_at_rational(capsys):
    code, out, _ = run(capsys, "charpoly", fx("p2.txt"), "--q", "1/2", "--json")
    assert json.loads(out)["charpoly"] == "x^2 - 2*x + 3/4"


def test_charpoly_generalized(capsys):
    code, out, _ = run(capsys, "charpoly", fx("p2.txt"), "--symbolic-f")
    assert code == EXIT_OK and "t1" in out


def test_dist_json(capsys):
    code, out, _ = run(capsys, "dist", fx("p2.txt"), "--json")
    js = json.loads(out)
    assert js["distance"] == [[0, 1], [1, 0]] and js["diameter"] == 1
    assert set(js["levels"]) == {"0", "1"}


def test_non_cospectral_is_exit_3(capsys):
    code, out, _ = run(capsys, "cospectral", fx("fig3-g1.txt"), fx("fig4-base-g1.txt"))
    assert code == EXIT_INPUT  # different orders
    code, out, _ = run(capsys, "cospectral", fx("fig5-G9.g6"), fx("fig5-H9.g6"), "--locus", "--json")
    assert code == EXIT_VERIFY
    js = json.loads(out)
    assert js["cospectral"] is False and js["locus"]["rational_roots"] == ["0", "1/2"]
    code, _, _ = run(capsys, "cospectral", fx("fig5-G9.g6"), fx("fig5-H9.g6"), "--q", "1/2")
    assert code == EXIT_OK


def test_switch_certify_and_out(capsys, tmp_path):
    out_file = tmp_path / "sw.txt"
    code, out, _ = run(capsys, "switch", fx("fig3-g1.txt"), "--config", fx("fig3.config"),
                       "--certify", "--out", out_file, "--json")
    assert code == EXIT_OK
    js = json.loads(out)
    assert js["certificate"]["ok"]
    from distcospec.graph import are_isomorphic

    assert are_isomorphic(parse_edge_list(out_file.read_text()), load_graph(fx("fig3-g2.txt")))


def test_match(capsys):
    code, out, _ = run(capsys, "match", fx("fig3-g1.txt"), fx("fig3-g2.txt"), "--json")
    assert code == EXIT_OK and json.loads(out)["match"]["certificate"]["ok"]
    code, out, _ = run(capsys, "match", fx("fig5-G9.g6"), fx("fig5-H9.g6"))
    assert code == EXIT_VERIFY


def test_match_budget_exhausted(capsys):
    code, _, err = run(capsys, "match", fx("fig2-g1.txt"), fx("fig2-g2.txt"), "--budget", "0", "--max-parts", "3")
    assert code == EXIT_BUDGET and "budget" in err


@pytest.mark.parametrize("family", ["fig5", "fig6"])
def test_family_verify(capsys, family):
    code, out, _ = run(capsys, "family", family, "--n", 9, "--verify", "--json")
    assert code == EXIT_OK
    v = json.loads(out)["verify"]
    assert v["cospectral_at_half"] and v["closed_form_matches"]
    assert v["roots_in_unit_interval"] == ["1/2"]


def test_family_too_small(capsys):
    code, _, err = run(capsys, "family", "fig5", "--n", 5)
    assert code == EXIT_INPUT and "n >= 8" in err


def test_coalesce(capsys, tmp_path):
    code, out, _ = run(capsys, "coalesce", fx("fig4-base-g1.txt"), fx("fig4-base-g2.txt"),
                       "--config", fx("fig4-base.config"), "--glue", "K3",
                       "--out", tmp_path / "tri", "--json")
    assert code == EXIT_OK
    js = json.loads(out)
    assert js["certificate"]["ok"] and js["h1"]["n"] == 19
    from distcospec.graph import are_isomorphic

    h1 = parse_edge_list((tmp_path / "tri-h1.txt").read_text())
    h2 = parse_edge_list((tmp_path / "tri-h2.txt").read_text())
    assert are_isomorphic(h1, load_graph(fx("fig4-g1.txt")))
    assert are_isomorphic(h2, load_graph(fx("fig4-g2.txt")))


def test_verify_qsample_statuses(capsys, tmp_path):
    args = ["verify-qsample", fx("fig3-g1.txt"), fx("fig3-g2.txt"), "--config", fx("fig3.config")]
    code, out, _ = run(capsys, *args, "--q", "1/2,3", "--json")
    js = json.loads(out)
    assert code == EXIT_OK and js["status"] == "certified" and js["levels_ok"]
    code, out, _ = run(capsys, *args, "--q", "1/2", "--json")
    assert code == EXIT_OK and json.loads(out)["status"] == "incomplete"
    ident = tmp_path / "id.json"
    ident.write_text(json.dumps([[int(i == j) for j in range(7)] for i in range(7)]))
    code, out, _ = run(capsys, "verify-qsample", fx("fig3-g1.txt"), fx("fig3-g2.txt"),
                       "--sim", ident, "--q", "1/2,2", "--json")
    assert code == EXIT_VERIFY and json.loads(out)["status"] == "refuted"
    zero = tmp_path / "zero.json"
    zero.write_text(json.dumps([[0] * 7] * 7))
    code, out, _ = run(capsys, "verify-qsample", fx("fig3-g1.txt"), fx("fig3-g2.txt"),
                       "--sim", zero, "--q", "1/2,2", "--json")
    assert code == EXIT_VERIFY and json.loads(out)["status"] == "singular"


def test_input_errors(capsys, tmp_path):
    code, _, err = run(capsys, "charpoly", tmp_path / "missing.g6")
    assert code == EXIT_INPUT and "no such graph file" in err
    code, _, err = run(capsys, "switch", fx("fig3-g1.txt"), "--config", "junk")
    assert code == EXIT_INPUT
    code, _, err = run(capsys, "cospectral", fx("fig3-g1.txt"), fx("p2.txt"))
    assert code == EXIT_INPUT and "different orders" in err
    code, _, err = run(capsys, "switch", fx("fig3-g1.txt"), "--config", "A: {1,2}; B: {3,4,5,6,7}; extra: {}")
    assert code == EXIT_INPUT and "invalid configuration" in err
    bad = tmp_path / "bad.g6"
    bad.write_text("F???\x7f\n")
    code, _, _ = run(capsys, "dist", bad)
    assert code == EXIT_INPUT
    code, _, err = run(capsys, "survey", "--out", tmp_path / "o")
    assert code == EXIT_INPUT


def test_survey_command(capsys, tmp_path):
    code, out, _ = run(capsys, "survey", "--n", 5, "--out", tmp_path / "r", "--json")
    assert code == EXIT_OK
    s = json.loads(out)
    saved = json.loads((tmp_path / "r" / "summary.json").read_text())
    assert s == saved
    assert (tmp_path / "r" / "pairs.csv").exists()
    assert (tmp_path / "r" / "figures" / "counts.png").exists()


def test_survey_from_graph6(capsys, tmp_path):
    code, out, _ = run(capsys, "survey", "--graph6", FIXTURES.parent / "data" / "connected7.g6",
                       "--out", tmp_path / "r", "--no-figures", "--json")
    assert code == EXIT_OK
    s = json.loads(out)
    assert (s["graphs"], s["dq_pairs"]) == (853, 11)
    assert not (tmp_path / "r" / "figures").exists()
