"""Background analyses as state transformers: scc, scc', pp, fa, ari, gfa.

Each function maps a :class:`~pgpartial.state.State` to a state.  When an
analysis has nothing to do it returns its argument object unchanged, so
callers can test for progress with ``is``.
"""

from __future__ import annotations

from typing import Optional

from .core import ParityGame, attractor, monotone_attractor, scc_decompose
from .state import PartialSolver, State, decide

__all__ = [
    "compress_map",
    "scc_compress",
    "scc_compress_per_scc",
    "priority_propagate",
    "find_fatal_attractor",
    "fatal_attractor_step",
    "cycle_colors",
    "rabin_index_reduce",
    "parity_reach",
    "find_generalized_fatal",
    "generalized_fatal_step",
    "SCC",
    "SCC_PRIME",
    "PP",
    "FA",
    "ARI",
    "GFA",
]


def compress_map(colors) -> dict:
    """Order- and parity-preserving map of ``colors`` onto a convex segment
    starting at 0 or 1."""
    mapping = {}
    prev_src = prev_tgt = None
    for c in sorted(set(colors)):
        if prev_src is None:
            t = c & 1
        elif (c ^ prev_src) & 1:
            t = prev_tgt + 1
        else:
            t = prev_tgt
        mapping[c] = t
        prev_src, prev_tgt = c, t
    return mapping


def scc_compress(s: State) -> State:
    g = s.g_prime
    mapping = compress_map(g.color)
    if all(c == t for c, t in mapping.items()):
        return s
    return s.with_game(g.with_colors([mapping[c] for c in g.color]))


def scc_compress_per_scc(s: State) -> State:
    g = s.g_prime
    color = list(g.color)
    changed = False
    for comp in scc_decompose(g.succ):
        mapping = compress_map(g.color[v] for v in comp)
        for v in comp:
            t = mapping[g.color[v]]
            if t != color[v]:
                color[v] = t
                changed = True
    if not changed:
        return s
    return s.with_game(g.with_colors(color))


def priority_propagate(s: State) -> State:
    g = s.g_prime
    color = g.color
    pred = g.pred
    for v, ws in enumerate(g.succ):
        cv = color[v]
        bound = max(color[w] for w in ws)
        # a node without predecessors is bounded by its successors alone
        if pred[v]:
            bound = min(bound, max(color[u] for u in pred[v]))
        if bound < cv:
            return s.with_game(g.recolor_node(v, bound))
    return s


def find_fatal_attractor(g: ParityGame):
    """First fatal attractor, exploring colours in descending order.

    For each colour ``d`` the candidate set of all ``d``-coloured nodes is
    shrunk by intersection with its monotone attractor until it is fatal or
    empty.  Returns ``(d, X)`` or ``None``.
    """
    by_color = {}
    for v, c in enumerate(g.color):
        by_color.setdefault(c, []).append(v)
    for d in sorted(by_color, reverse=True):
        x = frozenset(by_color[d])
        while x:
            a = monotone_attractor(g, x, d)
            if x <= a:
                return d, x
            x = x & a
    return None


def fatal_attractor_step(s: State) -> State:
    found = find_fatal_attractor(s.g_prime)
    if found is None:
        return s
    d, x = found
    p = d & 1
    return decide(s, p, attractor(s.g_prime, p, x))


def cycle_colors(g: ParityGame) -> list:
    """For each node, the largest colour of a cycle through it (the colour of
    a cycle being its minimum), or ``None`` if it lies on no cycle.

    Node ``v`` lies on a cycle of colour ``>= b`` iff it sits in a non-trivial
    SCC of the subgraph of nodes coloured ``>= b``; thresholds are scanned
    downwards and each node keeps the first one that puts it on a cycle.
    """
    n = g.n
    best: list = [None] * n
    color = g.color
    succ = g.succ
    pending = n
    for b in sorted(set(color), reverse=True):
        alive = {v for v in range(n) if color[v] >= b}
        for comp in scc_decompose(succ, sorted(alive), alive):
            if len(comp) == 1:
                v = comp[0]
                if v not in succ[v]:
                    continue
            for v in comp:
                if best[v] is None:
                    best[v] = b
                    pending -= 1
        if not pending:
            break
    return best


def rabin_index_reduce(s: State) -> State:
    """Lower the first node whose colour exceeds the largest colour of a
    cycle through it.  Colour 1 is included: a node of colour 1 whose
    cycles all contain colour 0 can drop to 0, which 1-player games need."""
    g = s.g_prime
    color = g.color
    if not any(color):
        return s
    best = cycle_colors(g)
    for v, c in enumerate(color):
        if c == 0:
            continue
        # a node on no cycle is seen finitely often, its colour is irrelevant
        target = 0 if best[v] is None else best[v]
        if target < c:
            return s.with_game(g.recolor_node(v, target))
    return s


def parity_reach(g: ParityGame, p: int, x) -> frozenset:
    """Nodes from which player ``p`` can force a visit to ``x`` in at least
    one move such that the minimal colour seen en route, both ends included,
    has parity ``p``.

    The game is layered by the minimal colour seen so far: a position is a
    pair ``(v, m)``.  Inside a layer ``m`` the play must stay on colours
    ``>= m``; touching a smaller colour moves it to a lower layer, which is a
    reset for ``p`` when that colour has parity ``p``.  The attractor of the
    good positions ``(x, m)`` with ``m`` of parity ``p`` is computed on the
    layered graph, then projected back with one forced move.
    """
    x = set(x)
    if not x:
        return frozenset()
    cs = sorted(set(g.color))
    k = len(cs)
    level = {c: i for i, c in enumerate(cs)}
    lv = [level[c] for c in g.color]
    good_level = [c & 1 == p for c in cs]
    owner = g.owner
    succ = g.succ
    pred = g.pred
    win = bytearray(g.n * k)
    count = {}
    stack = []
    for v in x:
        base = v * k
        for m in range(lv[v] + 1):
            if good_level[m]:
                win[base + m] = 1
                stack.append((v, m))
    while stack:
        u, m2 = stack.pop()
        lu = lv[u]
        for v in pred[u]:
            lvv = lv[v]
            if m2 < lu:
                if m2 > lvv:
                    continue
                layers = (m2,)
            else:
                layers = range(lu, lvv + 1)
            base = v * k
            mine = owner[v] == p
            for m in layers:
                idx = base + m
                if win[idx]:
                    continue
                if not mine:
                    left = count.get(idx, len(succ[v])) - 1
                    if left:
                        count[idx] = left
                        continue
                win[idx] = 1
                stack.append((v, m))
    out = []
    for v in range(g.n):
        lvv = lv[v]
        hits = (win[w * k + min(lvv, lv[w])] for w in succ[v])
        if (any(hits) if owner[v] == p else all(hits)):
            out.append(v)
    return frozenset(out)


def find_generalized_fatal(g: ParityGame):
    """Largest non-empty ``X`` of parity-``p`` coloured nodes with
    ``X <= parity_reach(g, p, X)``, trying player 0 first.

    ``parity_reach`` is monotone in ``X``, so shrinking from all parity-``p``
    nodes reaches the greatest such set.  Returns ``(p, X)`` or ``None``.
    """
    for p in (0, 1):
        x = frozenset(v for v, c in enumerate(g.color) if c & 1 == p)
        while x:
            y = parity_reach(g, p, x)
            if x <= y:
                return p, x
            x = x & y
    return None


def generalized_fatal_step(s: State) -> State:
    found = find_generalized_fatal(s.g_prime)
    if found is None:
        return s
    p, x = found
    return decide(s, p, attractor(s.g_prime, p, x))


SCC = PartialSolver("scc", scc_compress)
SCC_PRIME = PartialSolver("scc'", scc_compress_per_scc)
PP = PartialSolver("pp", priority_propagate)
FA = PartialSolver("fa", fatal_attractor_step)
ARI = PartialSolver("ari", rabin_index_reduce)
GFA = PartialSolver("gfa", generalized_fatal_step)
