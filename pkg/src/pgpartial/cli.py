"""Command line front end: ``solve``, ``gen``, ``hunt``, ``regress``, ``compare``.

Every subcommand prints a human-readable report, or JSON with ``--json``.
The exit status is 1 whenever a misclassification is detected, 2 on bad
input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .compose import named_pipeline, pipeline_names
from .core import GameError
from .generate import RandomConfig, gen_random
from .harness import (
    ANALYSES_BY_NAME,
    complete_solver,
    effectiveness_compare,
    hunt_residuals,
    misclassified,
    regress,
)
from .io import ParseError, emit_solution, read_game, serialize_pgsolver
from .oracle import OracleLimitError, brute_force, zielonka
from .state import WinningRegions, initial_state

ORACLES = {"zielonka": zielonka, "brute-force": brute_force}
COMPARE_DEFAULT = ("er_fa", "er_sd", "er_sd_owned", "m_ss", "m_scc")


def _config(args) -> RandomConfig:
    return RandomConfig.parse(args.config, inclusive_colors=not args.exclusive_colors,
                              self_loops=args.self_loops)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_solve(args) -> int:
    doc = read_game(args.input, args.semantics)
    g = doc.min_parity_game()
    if args.solver in ORACLES:
        regions = ORACLES[args.solver](g)
    else:
        s = named_pipeline(args.solver)(initial_state(g))
        regions = WinningRegions(s.w0, s.w1)
    bad = 0
    if args.oracle_check:
        bad = misclassified(regions, zielonka(g))
    undecided = len(regions.undecided(g.n))
    payload = {
        "solver": args.solver,
        "nodes": g.n,
        "w0": sorted(doc.source_ids[v] for v in regions.w0),
        "w1": sorted(doc.source_ids[v] for v in regions.w1),
        "undecided": undecided,
        "misclassifications": bad if args.oracle_check else None,
    }
    text = emit_solution(regions, doc.source_names, doc.source_ids).rstrip("\n")
    text += f"\n# {args.solver}: {g.n} nodes, {undecided} undecided"
    if args.oracle_check:
        text += f", {bad} misclassified"
    _emit(args, payload, text)
    return 1 if bad else 0


def cmd_gen(args) -> int:
    cfg = _config(args)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    files = []
    for i in range(args.count):
        path = out / f"game_{cfg}_{args.seed}_{i}.gm"
        path.write_text(serialize_pgsolver(gen_random(cfg, args.seed + i)), encoding="utf-8")
        files.append(path.name)
    _emit(args, {"config": str(cfg), "seed": args.seed, "files": files},
          f"wrote {len(files)} min-parity games of {cfg} to {out}")
    return 0


def cmd_hunt(args) -> int:
    cfg = _config(args)
    residuals, report = hunt_residuals(args.solver, cfg, args.count, args.seed, Path(args.out))
    report.extra["out"] = str(args.out)
    _emit(args, report.to_dict(), report.summary())
    return 0


def cmd_regress(args) -> int:
    cfg = _config(args)
    solver = args.solver
    if solver in ORACLES:
        solver = complete_solver(solver, ORACLES[solver])
    report = regress(solver, cfg, args.count, args.seed)
    _emit(args, report.to_dict(), report.summary())
    return 1 if report.misclassifications else 0


def cmd_compare(args) -> int:
    cfg = _config(args)
    analyses = [ANALYSES_BY_NAME[a] for a in args.analyses]
    report = effectiveness_compare(analyses, cfg, args.count, args.seed)
    states = report.extra["states"]
    report.extra["rates"] = {
        k: round(100.0 * v / states, 3) if states else 0.0
        for k, v in report.simplification_counts.items()
    }
    _emit(args, report.to_dict(), report.summary())
    return 0


def build_parser() -> argparse.ArgumentParser:
    solvers = pipeline_names() + ["while:<stage,...>"] + list(ORACLES)
    ap = argparse.ArgumentParser(prog="pgpartial", description="Partial solvers for parity games.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, config=True):
        p.add_argument("--json", action="store_true", help="emit the report as JSON")
        if config:
            p.add_argument("--config", required=True, help="random game configuration xx-yy-aa-bb")
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--count", type=int, required=True)
            p.add_argument("--exclusive-colors", action="store_true",
                           help="draw colours from {0..yy-1} instead of {0..yy}")
            p.add_argument("--self-loops", action="store_true", help="allow self-loops in random games")

    p = sub.add_parser("solve", help="solve one PGSolver file")
    p.add_argument("--solver", default="ps1", help=f"one of {', '.join(solvers)}")
    p.add_argument("--input", required=True)
    p.add_argument("--semantics", choices=("max", "min"), default="max")
    p.add_argument("--oracle-check", action="store_true", help="compare with zielonka")
    common(p, config=False)
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("gen", help="write seeded random games (min-parity)")
    p.add_argument("--out", required=True)
    common(p)
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("hunt", help="persist residual games of a solver")
    p.add_argument("--solver", required=True)
    p.add_argument("--out", required=True)
    common(p)
    p.set_defaults(fn=cmd_hunt)

    p = sub.add_parser("regress", help="compare a solver with zielonka on random games")
    p.add_argument("--solver", required=True)
    common(p)
    p.set_defaults(fn=cmd_regress)

    p = sub.add_parser("compare", help="effectiveness of analyses on fatal-attractor-free states")
    p.add_argument("--analyses", nargs="+", default=list(COMPARE_DEFAULT),
                   choices=sorted(ANALYSES_BY_NAME))
    common(p)
    p.set_defaults(fn=cmd_compare)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, GameError, KeyError, ValueError, OracleLimitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
