"""Node merging and edge removal analyses: m_ss, m_scc, er_fa, er_sd."""

from __future__ import annotations

from dataclasses import dataclass
from functools import partial
from typing import Optional

from .analyses import find_fatal_attractor
from .core import GameError, ParityGame, commit_edge, remove_edge, scc_decompose
from .state import PartialSolver, State

__all__ = [
    "MergeSpec",
    "merge",
    "merge_sole_successor",
    "merge_scc_colorclass",
    "remove_edge_conditional_fa",
    "remove_edge_shared_descendant",
    "shared_descendant_edge",
    "M_SS",
    "M_SCC",
    "ER_FA",
    "ER_SD",
    "ER_SD_OWNED",
    "DOMAIN_CHECKS",
]

# When true, analyses whose soundness needs a fatal-attractor-free input
# verify that precondition (costs one fa search per call).
DOMAIN_CHECKS = False


@dataclass(frozen=True)
class MergeSpec:
    """Merge ``x`` into one node owned by ``p`` with colour ``d``.

    ``z`` is the fresh id requested for the merged node; it must not be a
    node of the continuation game (``None`` picks ``len(G')``).  Node ids are
    kept dense, so after the merge the new node sits last.
    """

    x: frozenset
    p: int
    d: int
    z: Optional[int] = None


def merge(s: State, spec: MergeSpec) -> State:
    g = s.g_prime
    n = g.n
    x = frozenset(spec.x)
    if len(x) < 2:
        raise GameError("a merge needs at least two nodes")
    if any(not 0 <= v < n for v in x):
        raise GameError("merge set contains unknown nodes")
    z = n if spec.z is None else spec.z
    if z < n:
        raise GameError(f"merge target {z} is not fresh")
    if spec.p not in (0, 1) or spec.d < 0:
        raise GameError("invalid owner or colour for the merged node")
    exits = sorted({w for v in x for w in g.succ[v] if w not in x})
    if not exits:
        raise GameError("merged node would be a dead-end")

    index = [-1] * n
    keep = []
    for v in range(n):
        if v not in x:
            index[v] = len(keep)
            keep.append(v)
    new = len(keep)
    succ = []
    for v in keep:
        row = []
        for w in g.succ[v]:
            t = new if w in x else index[w]
            if t not in row:
                row.append(t)
        succ.append(tuple(row))
    succ.append(tuple(index[w] for w in exits))

    names = g.names if g.names is not None else (None,) * n
    names = tuple(names[v] for v in keep) + (f"merge_{z}",)
    h = ParityGame._raw(
        tuple(g.owner[v] for v in keep) + (spec.p,),
        tuple(g.color[v] for v in keep) + (spec.d,),
        tuple(succ),
        names,
    )
    image = frozenset().union(*(s.rho[v] for v in x))
    rho = tuple(s.rho[v] for v in keep) + (image,)
    return State(s.w0, s.w1, rho, h, s.g)


def merge_sole_successor(s: State) -> State:
    g = s.g_prime
    color = g.color
    for v, ws in enumerate(g.succ):
        if len(ws) != 1:
            continue
        w = ws[0]
        if w == v or color[v] < color[w]:
            continue
        if any(u != v and u != w for u in g.succ[w]):
            return merge(s, MergeSpec(frozenset((v, w)), g.owner[w], color[w]))
    return s


def _require_fa_free(g: ParityGame, name: str) -> None:
    if DOMAIN_CHECKS and find_fatal_attractor(g) is not None:
        raise GameError(f"{name} called on a state with a fatal attractor")


def merge_scc_colorclass(s: State) -> State:
    g = s.g_prime
    _require_fa_free(g, "m_scc")
    color = g.color
    owner = g.owner
    for d in sorted(set(color), reverse=True):
        opp = 1 - (d & 1)
        alive = {v for v in range(g.n) if owner[v] == opp and color[v] >= d}
        if len(alive) < 2:
            continue
        comps = scc_decompose(g.succ, sorted(alive), alive)
        for comp in sorted(comps, key=min):
            x = frozenset(v for v in comp if color[v] == d)
            if len(x) < 2:
                continue
            if any(w not in x for v in x for w in g.succ[v]):
                return merge(s, MergeSpec(x, opp, d))
    return s


def remove_edge_conditional_fa(s: State) -> State:
    g = s.g_prime
    _require_fa_free(g, "er_fa")
    for v, ws in enumerate(g.succ):
        if len(ws) < 2:
            continue
        for w in ws:
            if find_fatal_attractor(commit_edge(g, v, w)) is not None:
                return s.with_game(remove_edge(g, v, w))
    return s


def _min_with(mask: int, c: int) -> int:
    # {min(m, c) : m in mask} as a bit set
    low = mask & ((1 << c) - 1)
    return low | (1 << c) if mask >> c else low


def _path_colors(g: ParityGame, start: int, q: int, owned_only: bool, skip_edge=None) -> dict:
    """Colours of paths from ``start`` along which every moving node is
    controlled by ``q`` (owned by ``q``, or with a single successor unless
    ``owned_only``).  Maps each reached node to a bit set of path colours
    (minimum over the path, both ends included).  ``skip_edge`` is left out.
    """
    owner = g.owner
    color = g.color
    succ = g.succ
    masks = {start: 1 << color[start]}
    stack = [start]
    while stack:
        a = stack.pop()
        ws = succ[a]
        if owner[a] != q and (owned_only or len(ws) != 1):
            continue
        ma = masks[a]
        for b in ws:
            if skip_edge is not None and a == skip_edge[0] and b == skip_edge[1]:
                continue
            nb = _min_with(ma, color[b])
            old = masks.get(b, 0)
            if nb & ~old:
                masks[b] = old | nb
                stack.append(b)
    return masks


def _best(mask: int, p: int, parity_mask) -> int:
    # most preferred colour for p: smallest p-parity one, else largest other
    mine = mask & parity_mask[p]
    if mine:
        return (mine & -mine).bit_length() - 1
    return mask.bit_length() - 1


def _worst(mask: int, p: int, parity_mask) -> int:
    theirs = mask & parity_mask[1 - p]
    if theirs:
        return (theirs & -theirs).bit_length() - 1
    return mask.bit_length() - 1


def _pref_leq_fast(p: int, c1: int, c2: int) -> bool:
    q1, q2 = c1 & 1, c2 & 1
    if q1 != q2:
        return q1 == p
    return c1 <= c2 if q1 == p else c2 <= c1


def shared_descendant_edge(g: ParityGame, *, owned_only: bool = False, target_control: bool = False):
    """First removable edge ``(v, w)`` with its witness ``(z, p)``, or ``None``.

    Player ``p = owner(v)`` needs a ``p``-controlled path from ``v`` to ``z``
    avoiding ``(v, w)`` whose colour is at least as good for ``p`` as that
    of some ``(1-p)``-controlled path from ``w`` to ``z``.  The best colour of
    the first kind is compared against the worst colour of the second.  With
    ``target_control`` the meeting node ``z`` must itself satisfy the control
    condition of both paths.
    """
    n = g.n
    owner = g.owner
    succ = g.succ
    width = max(g.color, default=0) + 1
    evens = sum(1 << c for c in range(0, width, 2))
    parity_mask = (evens, ((1 << width) - 1) ^ evens)
    from_w = {}
    for v in range(n):
        if len(succ[v]) < 2:
            continue
        p = owner[v]
        q = 1 - p
        for w in succ[v]:
            if w == v:
                continue
            key = (w, q)
            bmasks = from_w.get(key)
            if bmasks is None:
                bmasks = from_w[key] = _path_colors(g, w, q, owned_only)
            if len(bmasks) < 2:
                continue
            amasks = _path_colors(g, v, p, owned_only, (v, w))
            for z in sorted(amasks.keys() & bmasks.keys()):
                if z == v or z == w:
                    continue
                if target_control and (
                    len(succ[z]) != 1 or owned_only
                ):
                    continue
                if _pref_leq_fast(p, _best(amasks[z], p, parity_mask), _worst(bmasks[z], p, parity_mask)):
                    return (v, w), (z, p)
    return None


def remove_edge_shared_descendant(s: State, *, owned_only: bool = False, target_control: bool = False) -> State:
    found = shared_descendant_edge(s.g_prime, owned_only=owned_only, target_control=target_control)
    if found is None:
        return s
    (v, w), _ = found
    return s.with_game(remove_edge(s.g_prime, v, w))


M_SS = PartialSolver("m_ss", merge_sole_successor)
M_SCC = PartialSolver("m_scc", merge_scc_colorclass)
ER_FA = PartialSolver("er_fa", remove_edge_conditional_fa)
ER_SD = PartialSolver("er_sd", remove_edge_shared_descendant)
ER_SD_OWNED = PartialSolver("er_sd_owned", partial(remove_edge_shared_descendant, owned_only=True))
