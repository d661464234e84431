"""Batch experiments on seeded random games: regression against an oracle,
residual hunting, effectiveness comparison and per-analysis unit testing.

Game ``i`` of a run with seed ``S`` is always ``gen(cfg, S + i)``.
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence

from .compose import chain_states, named_pipeline
from .core import ParityGame
from .generate import RandomConfig, gen_one_player, gen_random
from .io import serialize_pgsolver
from .oracle import zielonka
from .refinements import ER_FA, ER_SD, ER_SD_OWNED, M_SCC, M_SS
from .state import PartialSolver, WinningRegions, decide, initial_state

__all__ = [
    "ExperimentReport",
    "misclassified",
    "complete_solver",
    "regress",
    "regress_games",
    "hunt_residuals",
    "residual_rates",
    "fa_residual_states",
    "effectiveness_compare",
    "unit_analysis",
    "UNIT_CONFIGS",
    "FA_FREE_DOMAIN",
    "gen_random",
    "gen_one_player",
    "RandomConfig",
]

WHILE_FA = named_pipeline("while:fa")

# analyses whose soundness argument assumes the state has no fatal attractor;
# m_ss sits behind fa in every pipeline and is unsound on some states outside it
FA_FREE_DOMAIN = frozenset({"m_ss", "m_scc", "er_fa"})

# configurations of the per-analysis unit tests
UNIT_CONFIGS = {
    "er_fa": "60-30-2-3",
    "er_sd": "60-30-2-3",
    "er_sd_owned": "60-30-2-3",
    "m_ss": "60-30-1-3",
    "m_scc": "60-30-1-3",
}


@dataclass
class ExperimentReport:
    games_run: int = 0
    residual_count: dict = field(default_factory=dict)
    misclassifications: int = 0
    simplification_counts: dict = field(default_factory=dict)
    seed: Optional[int] = None
    config: Optional[str] = None
    extra: dict = field(default_factory=dict)
    wall_time: float = field(default=0.0, compare=False)

    def to_dict(self, timing: bool = True) -> dict:
        d = asdict(self)
        if not timing:
            d.pop("wall_time")
        return d

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True)

    def summary(self) -> str:
        lines = [f"config {self.config}  seed {self.seed}  games {self.games_run}"]
        for name, k in self.residual_count.items():
            frac = k / self.games_run if self.games_run else 0.0
            lines.append(f"  residual {name:>10}: {k:8d}  ({100 * frac:.4f}%)")
        for name, k in self.simplification_counts.items():
            lines.append(f"  simplified {name:>8}: {k:8d}")
        for key, value in self.extra.items():
            lines.append(f"  {key}: {value}")
        lines.append(f"  misclassifications: {self.misclassifications}")
        lines.append(f"  wall time: {self.wall_time:.1f}s")
        return "\n".join(lines)


def misclassified(partial: WinningRegions, truth: WinningRegions) -> int:
    """Number of nodes a partial solution puts in the wrong region."""
    return len(partial.w0 - truth.w0) + len(partial.w1 - truth.w1)


def complete_solver(name: str, solve: Callable) -> PartialSolver:
    """Wrap a complete solver (game -> regions) as a state transformer that
    decides the whole continuation game."""

    def step(s):
        t = decide(s, 0, solve(s.g_prime).w0)
        return decide(t, 1, range(t.g_prime.n))

    return PartialSolver(name, step)


def _as_solver(solver):
    return named_pipeline(solver) if isinstance(solver, str) else solver


def regress_games(solver, games: Iterable[ParityGame], oracle: Callable = zielonka,
                  name: Optional[str] = None) -> ExperimentReport:
    """Run ``solver`` and ``oracle`` on every game and count misclassified
    nodes and games left with undecided nodes."""
    solver = _as_solver(solver)
    name = name or solver.name
    report = ExperimentReport(residual_count={name: 0})
    undecided = 0
    start = time.perf_counter()
    for g in games:
        s = solver(initial_state(g))
        truth = oracle(g)
        report.games_run += 1
        report.misclassifications += misclassified(s.regions(), truth)
        if s.g_prime.n:
            report.residual_count[name] += 1
            undecided += len(s.regions().undecided(g.n))
    report.extra["undecided_nodes"] = undecided
    report.wall_time = time.perf_counter() - start
    return report


def regress(solver, cfg: RandomConfig, count: int, seed: int, oracle: Callable = zielonka) -> ExperimentReport:
    report = regress_games(solver, (gen_random(cfg, seed + i) for i in range(count)), oracle)
    report.seed = seed
    report.config = str(cfg)
    return report


def _file_tag(name: str) -> str:
    return "".join(ch if ch.isalnum() else "-" for ch in name).strip("-")


def hunt_residuals(solver, cfg: RandomConfig, count: int, seed: int,
                   out: Optional[Path] = None) -> tuple:
    """Run ``solver`` on ``count`` games and keep every non-empty residual.

    Returns ``(residuals, report)`` with ``residuals`` a list of
    ``(index, state)``.  With ``out``, each residual continuation game is
    written as ``residual_<solver>_<seed>_<index>.gm`` (min-parity) and
    listed in ``index.jsonl``.
    """
    solver = _as_solver(solver)
    report = ExperimentReport(residual_count={solver.name: 0}, seed=seed, config=str(cfg))
    residuals = []
    start = time.perf_counter()
    for i in range(count):
        g = gen_random(cfg, seed + i)
        s = solver(initial_state(g))
        report.games_run += 1
        if s.g_prime.n:
            residuals.append((i, s))
            report.residual_count[solver.name] += 1
    report.wall_time = time.perf_counter() - start
    if out is not None:
        write_residuals(out, solver.name, seed, residuals)
    return residuals, report


def write_residuals(out: Path, solver_name: str, seed: int, residuals: Sequence) -> list:
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    tag = _file_tag(solver_name)
    paths = []
    with open(out / "index.jsonl", "a", encoding="utf-8") as index:
        for i, s in residuals:
            path = out / f"residual_{tag}_{seed}_{i}.gm"
            path.write_text(serialize_pgsolver(s.g_prime), encoding="utf-8")
            paths.append(path)
            index.write(json.dumps({
                "file": path.name,
                "solver": solver_name,
                "seed": seed,
                "index": i,
                "semantics": "min",
                "nodes": s.g_prime.n,
                "edges": s.g_prime.num_edges,
                "decided": len(s.w0) + len(s.w1),
            }, sort_keys=True) + "\n")
    return paths


def residual_rates(cfg: RandomConfig, count: int, seed: int,
                   names: Sequence[str] = ("ps1", "ps2", "ps3", "ps4", "ps5")) -> tuple:
    """Residual counts of a refinement chain of pipelines on the same games.

    Uses :func:`~pgpartial.compose.chain_states`, so each longer pipeline
    resumes from the previous one's residual.  Returns ``(report,
    residuals)`` where ``residuals[name]`` lists ``(index, state)``.
    """
    pipelines = [named_pipeline(n) for n in names]
    report = ExperimentReport(residual_count={n: 0 for n in names}, seed=seed, config=str(cfg))
    residuals = {n: [] for n in names}
    start = time.perf_counter()
    for i in range(count):
        states = chain_states(pipelines, initial_state(gen_random(cfg, seed + i)))
        report.games_run += 1
        for n, s in zip(names, states):
            if s.g_prime.n:
                report.residual_count[n] += 1
                residuals[n].append((i, s))
    report.wall_time = time.perf_counter() - start
    return report, residuals


def fa_residual_states(cfg: RandomConfig, n: int, seed: int):
    """Yield ``(index, state)`` for the first ``n`` random games whose
    fatal-attractor residual is non-empty."""
    found = 0
    i = 0
    while found < n:
        s = WHILE_FA(initial_state(gen_random(cfg, seed + i)))
        if s.g_prime.n:
            found += 1
            yield i, s
        i += 1


def effectiveness_compare(analyses: Sequence[PartialSolver], cfg: RandomConfig, n: int, seed: int) -> ExperimentReport:
    """Apply each analysis once to ``n`` non-empty fatal-attractor-free states
    and count how many states each one changes."""
    report = ExperimentReport(
        simplification_counts={f.name: 0 for f in analyses}, seed=seed, config=str(cfg)
    )
    start = time.perf_counter()
    last = -1
    states = 0
    for i, s in fa_residual_states(cfg, n, seed):
        states += 1
        last = i
        for f in analyses:
            if f(s) is not s:
                report.simplification_counts[f.name] += 1
    report.games_run = last + 1
    report.extra["states"] = states
    report.wall_time = time.perf_counter() - start
    return report


def unit_analysis(analysis: PartialSolver, cfg: RandomConfig, n: int, seed: int,
                  oracle: Callable = zielonka, max_games: Optional[int] = None) -> ExperimentReport:
    """Check ``n`` state changes of ``analysis`` against the oracle.

    Each game is first stripped of fatal attractors.  The analysis is then
    applied as long as it changes the state; every change must leave the
    regions of the input game, recovered through ``W0``, ``W1`` and rho from
    the oracle's regions of the new continuation game, unchanged.  Analyses
    that assume a fatal-attractor-free input get ``while(fa)`` re-applied
    between steps.
    """
    report = ExperimentReport(simplification_counts={analysis.name: 0}, seed=seed, config=str(cfg))
    restore = analysis.name in FA_FREE_DOMAIN
    passed = failed = 0
    games = 0
    start = time.perf_counter()
    i = 0
    while passed + failed < n and (max_games is None or games < max_games):
        g = gen_random(cfg, seed + i)
        i += 1
        games += 1
        s = WHILE_FA(initial_state(g))
        truth = None
        while s.g_prime.n and passed + failed < n:
            t = analysis(s)
            if t is s:
                break
            if truth is None:
                truth = oracle(g)
            if t.lift_regions(oracle(t.g_prime)) == truth:
                passed += 1
            else:
                failed += 1
            s = WHILE_FA(t) if restore else t
    report.games_run = games
    report.simplification_counts[analysis.name] = passed + failed
    report.misclassifications = failed
    report.extra.update(passed=passed, failed=failed)
    report.wall_time = time.perf_counter() - start
    return report


ANALYSES_BY_NAME = {f.name: f for f in (M_SS, M_SCC, ER_FA, ER_SD, ER_SD_OWNED)}
