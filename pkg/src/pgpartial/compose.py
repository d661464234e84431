"""Composition of partial solvers: ``while``, ``call``, ``lifted``, ``lift``
and the named pipelines ps1-ps5."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence, Union

from .analyses import ARI, FA, GFA, PP, SCC, SCC_PRIME
from .core import ParityGame, commit_edge, rank, remove_edge
from .refinements import ER_FA, ER_SD, ER_SD_OWNED, M_SCC, M_SS
from .state import PartialSolver, State, WinningRegions, initial_state

__all__ = [
    "LawViolation",
    "Pipeline",
    "SolveStats",
    "IDENTITY",
    "STAGES",
    "while_solve",
    "call",
    "solve_state",
    "lifted",
    "lift",
    "named_pipeline",
    "pipeline_names",
    "chain_states",
    "check_laws",
]


class LawViolation(RuntimeError):
    """A stage broke one of the partial-solver laws."""


@dataclass
class SolveStats:
    iterations: int = 0
    changes: Counter = field(default_factory=Counter)


def check_laws(name: str, before: State, after: State) -> None:
    """Raise :class:`LawViolation` unless ``after`` is a lawful successor."""
    if after.g is not before.g and after.g != before.g:
        raise LawViolation(f"{name} changed the input game")
    if not (before.w0 <= after.w0 and before.w1 <= after.w1):
        raise LawViolation(f"{name} dropped decided nodes")
    if after is not before and rank(after.g_prime) >= rank(before.g_prime) and after != before:
        raise LawViolation(
            f"{name} changed the state without decreasing rank "
            f"({rank(before.g_prime)} -> {rank(after.g_prime)})"
        )


@dataclass(frozen=True)
class Pipeline:
    """``while(f1, ..., fk)``: apply the first stage that lowers the rank and
    restart from the first stage, until no stage makes progress."""

    name: str
    stages: tuple

    def __post_init__(self):
        if not self.stages:
            raise ValueError("a pipeline needs at least one stage")

    def __call__(self, s: State) -> State:
        return while_solve(self, s)

    def __repr__(self) -> str:
        return f"Pipeline({self.name!r}, [{', '.join(f.name for f in self.stages)}])"


Solver = Union[PartialSolver, Pipeline]


def while_solve(pl: Pipeline, s: State, stats: SolveStats = None) -> State:
    stages = pl.stages
    while True:
        for f in stages:
            t = f(s)
            if t is s:
                continue
            check_laws(f.name, s, t)
            if rank(t.g_prime) >= rank(s.g_prime):
                continue  # equal to s, otherwise check_laws raised
            break
        else:
            return s
        s = t
        if stats is not None:
            stats.iterations += 1
            stats.changes[f.name] += 1


def solve_state(f: Solver, g: ParityGame) -> State:
    return f(initial_state(g))


def call(f: Solver, g: ParityGame) -> WinningRegions:
    """Nodes of ``g`` that ``f`` decides, run from the initial state."""
    s = f(initial_state(g))
    return WinningRegions(s.w0, s.w1)


def lifted(f: Solver) -> PartialSolver:
    """Second-order solver testing edge commitments with ``f``.

    For every branching node ``v`` and successor ``w`` of the continuation
    game, ``f`` is run on the game where ``v`` must move to ``w``.  If that
    decides ``v`` for its owner the commitment is kept; if it decides ``v``
    for the opponent the edge is dropped.  Meant for states residual for ``f``.
    """

    def step(s: State) -> State:
        h = s.g_prime
        owner = h.owner
        for v, ws in enumerate(h.succ):
            if len(ws) < 2:
                continue
            p = owner[v]
            for w in ws:
                committed = commit_edge(h, v, w)
                u = call(f, committed)
                if v in u[p]:
                    return s.with_game(committed)
                if v in u[1 - p]:
                    return s.with_game(remove_edge(h, v, w))
        return s

    return PartialSolver(f"lifted({f.name})", step)


def lift(f: Solver) -> Pipeline:
    return Pipeline(f"lift({f.name})", (f, lifted(f)))


IDENTITY = PartialSolver("id", lambda s: s)

STAGES = {
    f.name: f
    for f in (SCC, SCC_PRIME, PP, FA, ARI, GFA, M_SS, M_SCC, ER_FA, ER_SD, ER_SD_OWNED)
}

_PS_STAGES = {
    "ps1": ("scc", "pp", "fa", "ari", "gfa"),
    "ps2": ("scc", "pp", "fa", "ari", "gfa", "m_ss"),
    "ps3": ("scc", "pp", "fa", "ari", "gfa", "m_ss", "m_scc"),
    "ps4": ("scc", "pp", "fa", "ari", "gfa", "m_ss", "m_scc", "er_fa"),
    "ps5": ("scc", "pp", "fa", "ari", "gfa", "m_ss", "m_scc", "er_fa", "er_sd"),
    "one-player": ("scc'", "ari", "fa"),
}


def pipeline_names() -> list:
    return list(_PS_STAGES) + ["lift-ps5"]


def named_pipeline(name: str) -> Pipeline:
    """Look up ``ps1`` ... ``ps5``, ``one-player``, ``lift-ps5`` or an ad-hoc
    ``while:stage,stage,...`` composition."""
    if name in _PS_STAGES:
        return Pipeline(name, tuple(STAGES[k] for k in _PS_STAGES[name]))
    if name == "lift-ps5":
        return lift(named_pipeline("ps5"))
    if name.startswith("while:"):
        keys = [k.strip() for k in name[len("while:"):].split(",") if k.strip()]
        unknown = [k for k in keys if k not in STAGES]
        if unknown or not keys:
            raise KeyError(f"unknown stages in {name!r}: {unknown}")
        return Pipeline(name, tuple(STAGES[k] for k in keys))
    raise KeyError(f"unknown solver {name!r}; known: {pipeline_names()}")


def chain_states(pipelines: Sequence[Pipeline], s: State) -> list:
    """Residual states of a refinement chain of pipelines on one input.

    Each pipeline must extend the previous one's stage list.  Since a
    ``while`` only reaches a later stage once every earlier stage is idle,
    running the longer pipeline from the shorter one's result gives exactly
    the same state as running it from scratch.
    """
    out = []
    prev: tuple = ()
    for pl in pipelines:
        if pl.stages[: len(prev)] != prev:
            raise ValueError(f"{pl.name} does not extend the previous pipeline")
        s = pl(s)
        out.append(s)
        prev = pl.stages
    return out
