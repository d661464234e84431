"""Composition state ``(W0, W1, rho, G', G)`` and the partial-solver wrapper."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .core import GameError, ParityGame, rank, remove_nodes


@dataclass(frozen=True)
class WinningRegions:
    """Nodes decided for player 0 and player 1; the rest are undecided."""

    w0: frozenset
    w1: frozenset

    def __post_init__(self):
        if self.w0 & self.w1:
            raise GameError("winning regions overlap")

    def __getitem__(self, p: int) -> frozenset:
        return self.w1 if p else self.w0

    def __iter__(self):
        return iter((self.w0, self.w1))

    def winner(self, v: int):
        if v in self.w0:
            return 0
        if v in self.w1:
            return 1
        return None

    def undecided(self, n: int) -> list:
        return [v for v in range(n) if v not in self.w0 and v not in self.w1]

    def is_complete(self, n: int) -> bool:
        return len(self.w0) + len(self.w1) == n


@dataclass(frozen=True)
class State:
    """Intermediate configuration of a composed solver.

    ``rho[v]`` is the set of original nodes of ``g`` represented by node ``v``
    of the continuation game ``g_prime``.
    """

    w0: frozenset
    w1: frozenset
    rho: tuple
    g_prime: ParityGame
    g: ParityGame

    @property
    def rank(self) -> int:
        return rank(self.g_prime)

    def won(self, p: int) -> frozenset:
        return self.w1 if p else self.w0

    def with_game(self, h: ParityGame) -> "State":
        """Replace the continuation game by one on the same node set."""
        return State(self.w0, self.w1, self.rho, h, self.g)

    def regions(self) -> WinningRegions:
        return WinningRegions(self.w0, self.w1)

    def lift_regions(self, sub: WinningRegions) -> WinningRegions:
        """Regions of ``g`` given regions of ``g_prime``, transferred via rho."""
        w = [set(self.w0), set(self.w1)]
        for p in (0, 1):
            for v in sub[p]:
                w[p].update(self.rho[v])
        return WinningRegions(frozenset(w[0]), frozenset(w[1]))


def initial_state(g: ParityGame) -> State:
    return State(frozenset(), frozenset(), tuple(frozenset((v,)) for v in range(g.n)), g, g)


def decide(s: State, p: int, z: Iterable[int]) -> State:
    """Award the continuation nodes ``z`` (an attractor) to player ``p``."""
    z = frozenset(z)
    if not z:
        return s
    h, index = remove_nodes(s.g_prime, z)
    gained = set()
    for v in z:
        gained.update(s.rho[v])
    rho = tuple(r for v, r in enumerate(s.rho) if index[v] >= 0)
    if p == 0:
        return State(s.w0 | gained, s.w1, rho, h, s.g)
    return State(s.w0, s.w1 | gained, rho, h, s.g)


def check_state(s: State) -> None:
    """Raise :class:`GameError` unless the structural state invariants hold."""
    n = s.g.n
    if len(s.rho) != s.g_prime.n:
        raise GameError("rho must have one entry per continuation node")
    seen = set(s.w0)
    if s.w0 & s.w1:
        raise GameError("W0 and W1 overlap")
    seen |= s.w1
    for v, image in enumerate(s.rho):
        if not image:
            raise GameError(f"continuation node {v} represents no original node")
        if seen & image:
            raise GameError(f"rho image of {v} overlaps decided or other nodes")
        seen |= image
    if seen != set(range(n)):
        raise GameError("W0, W1 and rho images do not cover the original game")


@dataclass(frozen=True)
class PartialSolver:
    """A named state transformer.

    A lawful transformer keeps ``s.g`` fixed, returns ``s`` itself or a state
    of strictly smaller rank, and never drops decided nodes.
    """

    name: str
    transform: Callable[[State], State]

    def __call__(self, s: State) -> State:
        return self.transform(s)

    def __repr__(self) -> str:
        return f"PartialSolver({self.name!r})"
