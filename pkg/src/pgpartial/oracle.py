"""Complete solvers used as ground truth: Zielonka's recursive algorithm and
an exhaustive search over memoryless strategies for tiny games."""

from __future__ import annotations

import itertools
import math

from .core import ParityGame, attractor
from .state import WinningRegions

__all__ = ["OracleLimitError", "zielonka", "brute_force", "BRUTE_FORCE_MAX_NODES"]

BRUTE_FORCE_MAX_NODES = 10
BRUTE_FORCE_MAX_STRATEGIES = 1 << 16


class OracleLimitError(RuntimeError):
    """An oracle refused or aborted a game that exceeds its resource guard."""


def zielonka(g: ParityGame, max_depth: int = 2000) -> WinningRegions:
    """Winning regions of ``g`` (min-parity) by Zielonka's recursion.

    The recursion peels off the attractor of the minimal colour's owner;
    ``max_depth`` bounds the nesting and raises :class:`OracleLimitError`.
    """
    color = g.color

    def solve(alive: frozenset, depth: int):
        if not alive:
            return frozenset(), frozenset()
        if depth > max_depth:
            raise OracleLimitError(f"zielonka recursion deeper than {max_depth}")
        d = min(color[v] for v in alive)
        p = d & 1
        top = [v for v in alive if color[v] == d]
        a = attractor(g, p, top, within=alive)
        sub = solve(alive - a, depth + 1)
        if not sub[1 - p]:
            won = [frozenset(), frozenset()]
            won[p] = alive
            return tuple(won)
        b = attractor(g, 1 - p, sub[1 - p], within=alive)
        rest = solve(alive - b, depth + 1)
        won = [None, None]
        won[p] = rest[p]
        won[1 - p] = rest[1 - p] | b
        return tuple(won)

    w0, w1 = solve(frozenset(range(g.n)), 0)
    return WinningRegions(w0, w1)


def _closure(n: int, succ_mask: list) -> list:
    # reach[v]: nodes reachable from v in one or more steps
    reach = list(succ_mask)
    changed = True
    while changed:
        changed = False
        for v in range(n):
            r = reach[v]
            acc = r
            m = r
            while m:
                low = m & -m
                acc |= reach[low.bit_length() - 1]
                m ^= low
            if acc != r:
                reach[v] = acc
                changed = True
    return reach


def brute_force(g: ParityGame, max_nodes: int = BRUTE_FORCE_MAX_NODES,
                max_strategies: int = BRUTE_FORCE_MAX_STRATEGIES) -> WinningRegions:
    """Winning regions by enumerating every memoryless player-0 strategy.

    Fixing a strategy leaves a one-player game for player 1, who wins from
    ``v`` iff ``v`` reaches a cycle whose minimal colour is odd.  Node ``v``
    belongs to player 0 iff some strategy denies player 1 every such cycle.
    Deliberately shares no code with the rest of the package.
    """
    n = g.n
    if n > max_nodes:
        raise OracleLimitError(f"brute force limited to {max_nodes} nodes, got {n}")
    mine = [v for v in range(n) if g.owner[v] == 0]
    total = math.prod(len(g.succ[v]) for v in mine)
    if total > max_strategies:
        raise OracleLimitError(f"{total} strategies exceed the guard of {max_strategies}")
    color = g.color
    odd_colors = sorted({c for c in color if c & 1})
    base = [0] * n
    for v in range(n):
        if g.owner[v] == 1:
            for w in g.succ[v]:
                base[v] |= 1 << w
    won0 = 0
    everything = (1 << n) - 1
    for choice in itertools.product(*(g.succ[v] for v in mine)):
        succ_mask = list(base)
        for v, w in zip(mine, choice):
            succ_mask[v] = 1 << w
        bad = 0
        for c in odd_colors:
            high = 0
            for v in range(n):
                if color[v] >= c:
                    high |= 1 << v
            restricted = [succ_mask[v] & high if high >> v & 1 else 0 for v in range(n)]
            reach = _closure(n, restricted)
            for v in range(n):
                if color[v] == c and reach[v] >> v & 1:
                    bad |= 1 << v
        if not bad:
            won0 = everything
            break
        reach = _closure(n, succ_mask)
        for v in range(n):
            if not (bad >> v & 1) and not (reach[v] & bad):
                won0 |= 1 << v
        if won0 == everything:
            break
    w0 = frozenset(v for v in range(n) if won0 >> v & 1)
    return WinningRegions(w0, frozenset(range(n)) - w0)
