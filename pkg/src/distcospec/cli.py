"""Command-line entry point: ``distcospec <subcommand> ...``.

Exit codes: 0 success, 2 input error, 3 negative verdict or failed
verification, 4 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from .algebra import DimensionError, PolySyntaxError, format_xpoly
from .distance import DisconnectedGraphError, level_decomposition
from .families import FAMILIES, closed_form_H, family_pair
from .graph import (
    INF,
    Graph,
    GraphError,
    are_isomorphic,
    bfs_distances,
    emit_edge_list,
    emit_graph6,
    load_graph,
    read_graph6_file,
)
from .qanalysis import (
    SingularSimilarityError,
    charpoly_at,
    charpoly_f,
    charpoly_q,
    cospectral_at,
    cospectral_generalized,
    q_locus,
    verify_qsample,
)
from .switching import (
    BudgetExhausted,
    ConfigError,
    InvalidConfigError,
    SearchRules,
    apply_switch,
    build_similarity,
    certify_pair,
    coalesce_on_part,
    format_config,
    match_construction,
    parse_config,
    validate_config,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_VERIFY = 3
EXIT_BUDGET = 4


class InputError(Exception):
    pass


# -- helpers ----------------------------------------------------------------------


def _graph(arg: str) -> Graph:
    path = Path(arg)
    if not path.exists():
        raise InputError(f"no such graph file: {arg}")
    return load_graph(path)


def _config(arg: str):
    path = Path(arg)
    text = path.read_text(encoding="utf-8") if path.exists() else arg
    return parse_config(text)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise InputError(f"not a rational number: {text!r}") from None


def _rationals(text: str) -> list[Fraction]:
    return [_rational(t) for t in text.split(",") if t.strip()]


def _graph_json(g: Graph) -> dict:
    return {"n": g.n, "graph6": emit_graph6(g), "edges": emit_edge_list(g)}


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(human)


def _verdict(flag: bool) -> int:
    return EXIT_OK if flag else EXIT_VERIFY


# -- subcommands --------------------------------------------------------------------


def cmd_dist(args) -> int:
    g = _graph(args.graph)
    dm = bfs_distances(g)
    rows = [["inf" if x == INF else x for x in row] for row in dm.dist]
    ld = level_decomposition(g)
    levels = {k: ld.matrix(k).rows for k in range(ld.d + 1)}
    if args.json:
        _emit(args, {"n": g.n, "diameter": dm.diameter, "distance": rows,
                     "levels": {str(k): [list(r) for r in m] for k, m in levels.items()}}, "")
        return EXIT_OK
    print("\n".join(" ".join(str(x) for x in row) for row in rows))
    if args.levels:
        for k, m in levels.items():
            print(f"\nM_{k}")
            print("\n".join(" ".join(str(x) for x in row) for row in m))
    return EXIT_OK


def cmd_charpoly(args) -> int:
    g = _graph(args.graph)
    if args.q is not None:
        p = charpoly_at(g, _rational(args.q))
        mode = f"q={args.q}"
    elif args.symbolic_f:
        p = charpoly_f(g)
        mode = "generalized"
    else:
        p = charpoly_q(g)
        mode = "symbolic-q"
    text = format_xpoly(p)
    _emit(args, {"mode": mode, "charpoly": text}, text)
    return EXIT_OK


def cmd_cospectral(args) -> int:
    g, h = _graph(args.g), _graph(args.h)
    payload: dict = {}
    if args.generalized:
        ok = cospectral_generalized(g, h)
        payload["mode"] = "generalized"
    elif args.q is not None:
        ok = cospectral_at(g, h, _rational(args.q))
        payload["mode"] = f"q={args.q}"
    else:
        loc = q_locus(g, h)
        ok = loc.identically_zero
        payload["mode"] = "all-q"
    payload["cospectral"] = ok
    payload["isomorphic"] = are_isomorphic(g, h)
    lines = [str(ok).lower()]
    if args.locus:
        loc = q_locus(g, h)
        payload["locus"] = loc.to_json()
        lines.append(f"locus gcd: {payload['locus']['gcd']}")
        lines.append(f"rational roots: {payload['locus']['rational_roots']}")
    _emit(args, payload, "\n".join(lines))
    return _verdict(ok)


def cmd_qlocus(args) -> int:
    loc = q_locus(_graph(args.g), _graph(args.h))
    js = loc.to_json()
    roots = js["rational_roots"]
    human = f"g(q) = {js['gcd']}\nrational roots: {roots if roots == 'all' else ', '.join(roots) or 'none'}"
    _emit(args, js, human)
    return EXIT_OK


def cmd_switch(args) -> int:
    g = _graph(args.graph)
    c = _config(args.config)
    problems = validate_config(g, c)
    h = apply_switch(g, c)
    payload = {"graph": _graph_json(h), "soft_violations": [v.message for v in problems if v.soft]}
    lines = [emit_edge_list(h), emit_graph6(h)]
    lines += [f"note: {v.message}" for v in problems if v.soft]
    ok = True
    if args.certify:
        cert = certify_pair(g, h, c)
        payload["certificate"] = cert.to_json()
        ok = cert.ok
        lines.append("certificate: " + ("all distance levels agree" if ok else cert.reason))
    if args.out:
        Path(args.out).write_text(emit_edge_list(h) + "\n", encoding="utf-8")
    _emit(args, payload, "\n".join(lines))
    return _verdict(ok)


def cmd_match(args) -> int:
    g, h = _graph(args.g), _graph(args.h)
    rules = SearchRules(max_parts=args.max_parts)
    m = match_construction(g, h, rules, args.budget)
    if m is None:
        _emit(args, {"match": None}, "no switching configuration found")
        return EXIT_VERIFY
    payload = {"match": {"config": format_config(m.config), "on": "h" if m.reversed else "g",
                         "configs_tried": m.candidates_tried,
                         "certificate": m.certificate.to_json()}}
    _emit(args, payload, f"on {'H' if m.reversed else 'G'}: {format_config(m.config)}")
    return EXIT_OK


def cmd_family(args) -> int:
    p = family_pair(args.family, args.n)
    payload = {"family": p.family, "n": p.n, "G": _graph_json(p.g), "H": _graph_json(p.h)}
    lines = [f"G: {emit_edge_list(p.g)}", f"   {emit_graph6(p.g)}",
             f"H: {emit_edge_list(p.h)}", f"   {emit_graph6(p.h)}"]
    ok = True
    if args.verify:
        half = cospectral_at(p.g, p.h, Fraction(1, 2))
        loc = q_locus(p.g, p.h)
        unit = [] if loc.identically_zero else loc.roots_between(0, 1)
        closed = closed_form_H(p.family, p.n) == charpoly_q(p.h)
        payload["verify"] = {"cospectral_at_half": half, "locus": loc.to_json(),
                             "roots_in_unit_interval": [str(r) for r in unit],
                             "closed_form_matches": closed}
        ok = half and unit == [Fraction(1, 2)] and closed
        lines += [f"cospectral at q=1/2: {str(half).lower()}",
                  f"rational roots in (0,1): {', '.join(map(str, unit)) or 'none'}",
                  f"closed form for H matches: {str(closed).lower()}"]
    _emit(args, payload, "\n".join(lines))
    return _verdict(ok)


def _glue_graph(arg: str) -> Graph:
    named = {"K2": Graph.complete(2), "K3": Graph.complete(3), "K4": Graph.complete(4),
             "P3": Graph.path(3), "C4": Graph.cycle(4)}
    if arg in named:
        return named[arg]
    return _graph(arg)


def cmd_coalesce(args) -> int:
    g1, g2 = _graph(args.g1), _graph(args.g2)
    c = _config(args.config)
    glue = _glue_graph(args.glue)
    cp = coalesce_on_part(g1, g2, c, args.part - 1, glue, args.root - 1)
    if args.out:
        stem = Path(args.out)
        stem.parent.mkdir(parents=True, exist_ok=True)
        Path(f"{stem}-h1.txt").write_text(emit_edge_list(cp.h1) + "\n", encoding="utf-8")
        Path(f"{stem}-h2.txt").write_text(emit_edge_list(cp.h2) + "\n", encoding="utf-8")
    payload = {"h1": _graph_json(cp.h1), "h2": _graph_json(cp.h2),
               "blocks": [[v + 1 for v in b] for b in cp.similarity.parts],
               "certificate": cp.certificate.to_json()}
    human = "\n".join([
        f"H1: {emit_edge_list(cp.h1)}", f"H2: {emit_edge_list(cp.h2)}",
        "certificate: " + ("all distance levels agree" if cp.certificate.ok else cp.certificate.reason),
    ])
    _emit(args, payload, human)
    return _verdict(cp.certificate.ok)


def _load_sim(args, n: int):
    if args.config:
        return build_similarity(_config(args.config), n).vertex_matrix()
    try:
        data = json.loads(Path(args.sim).read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise InputError(f"no such similarity file: {args.sim}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"similarity file is not JSON: {exc}") from None
    rows = data["matrix"] if isinstance(data, dict) else data
    return [[_rational(str(x)) for x in row] for row in rows]


def cmd_verify_qsample(args) -> int:
    g, h = _graph(args.g), _graph(args.h)
    s = _load_sim(args, g.n)
    try:
        res = verify_qsample(g, h, s, _rationals(args.q))
    except SingularSimilarityError as exc:
        _emit(args, {"status": "singular", "error": str(exc)}, f"singular: {exc}")
        return EXIT_VERIFY
    human = f"{res.status} (d = {res.d})"
    if res.levels_ok is not None:
        human += "\nper-level check: " + ("passes" if res.levels_ok else "FAILS")
    for c in res.checks:
        human += f"\n  q={c.q}: {'ok' if c.ok else 'residual nonzero'}"
    _emit(args, res.to_json(), human)
    return EXIT_VERIFY if res.status == "refuted" else EXIT_OK


def cmd_survey(args) -> int:
    from .survey import emit_report, run_survey

    if args.graph6:
        path = Path(args.graph6)
        if not path.exists():
            raise InputError(f"no such graph6 file: {args.graph6}")
        graphs = list(read_graph6_file(path))
        n = args.n if args.n is not None else (graphs[0].n if graphs else 0)
    else:
        if args.n is None:
            raise InputError("survey needs --n or --graph6")
        graphs, n = None, args.n
    result = run_survey(n, graphs, seed=args.seed, budget_ms=args.budget, workers=args.workers)
    written = emit_report(result, args.out, figures=not args.no_figures)
    s = result.summary()
    human = (
        f"n={s['n']} graphs={s['graphs']}: D_q pairs {s['dq_pairs']}, D_f pairs {s['df_pairs']}, "
        f"switching pairs {s['construction_pairs']} "
        f"({s['construction_pct_of_dq']}% / {s['construction_pct_of_df']}%)\n"
        + "\n".join(f"wrote {p}" for p in written)
    )
    _emit(args, s, human)
    return EXIT_OK


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    ap = argparse.ArgumentParser(prog="distcospec", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("dist", parents=[common], help="distance matrix and level decomposition")
    p.add_argument("graph")
    p.add_argument("--levels", action="store_true", help="also print the 0/1 level matrices")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("charpoly", parents=[common], help="exact characteristic polynomial")
    p.add_argument("graph")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--q", help="rational value of q")
    mode.add_argument("--symbolic-q", action="store_true", help="over Z[q] (default)")
    mode.add_argument("--symbolic-f", action="store_true", help="over Z[t0, t1, ...]")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("cospectral", parents=[common], help="compare two graphs")
    p.add_argument("g")
    p.add_argument("h")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--q", help="one rational q")
    mode.add_argument("--all-q", action="store_true", help="for every q (default)")
    mode.add_argument("--generalized", action="store_true", help="for every function of distance")
    p.add_argument("--locus", action="store_true", help="also report the q-locus")
    p.set_defaults(func=cmd_cospectral)

    p = sub.add_parser("qlocus", parents=[common], help="q values where two graphs are cospectral")
    p.add_argument("g")
    p.add_argument("h")
    p.set_defaults(func=cmd_qlocus)

    p = sub.add_parser("switch", parents=[common], help="apply a switching configuration")
    p.add_argument("graph")
    p.add_argument("--config", required=True, help="config text or a file holding it")
    p.add_argument("--certify", action="store_true")
    p.add_argument("--out", help="write the switched graph as an edge list")
    p.set_defaults(func=cmd_switch)

    p = sub.add_parser("match", parents=[common], help="search for a switching configuration")
    p.add_argument("g")
    p.add_argument("h")
    p.add_argument("--budget", type=float, help="time budget in milliseconds")
    p.add_argument("--max-parts", type=int, default=2)
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("family", parents=[common], help="q = 1/2 family pair")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("coalesce", parents=[common], help="glue a graph onto every vertex of a part")
    p.add_argument("g1")
    p.add_argument("g2")
    p.add_argument("--config", required=True)
    p.add_argument("--part", type=int, default=1, help="1-based part index")
    p.add_argument("--glue", required=True, help="graph file or one of K2 K3 K4 P3 C4")
    p.add_argument("--root", type=int, default=1, help="1-based root vertex of the glued graph")
    p.add_argument("--out", help="write edge lists to OUT-h1.txt and OUT-h2.txt")
    p.set_defaults(func=cmd_coalesce)

    p = sub.add_parser("verify-qsample", parents=[common],
                       help="check one similarity matrix at finitely many q")
    p.add_argument("g")
    p.add_argument("h")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--sim", help="JSON matrix (list of rows, entries like \"2/3\")")
    src.add_argument("--config", help="use the block matrix of a switching configuration")
    p.add_argument("--q", required=True, help="comma-separated rationals")
    p.set_defaults(func=cmd_verify_qsample)

    p = sub.add_parser("survey", parents=[common], help="all connected graphs of one order")
    p.add_argument("--n", type=int)
    p.add_argument("--graph6", help="graph6 file (.gz accepted), one graph per class")
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--budget", type=float, help="per-pair search budget in milliseconds")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--no-figures", action="store_true")
    p.set_defaults(func=cmd_survey)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "seed", 0) is None:
        from .survey import DEFAULT_SEED

        args.seed = DEFAULT_SEED
    try:
        return args.func(args)
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvalidConfigError as exc:
        print(f"invalid configuration: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InputError, GraphError, ConfigError, PolySyntaxError, DimensionError,
            DisconnectedGraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
