"""Parity game model and the fixpoint primitives the analyses are built from.

Nodes are dense integers ``0 .. n-1``.  Player 0 wins a play iff the minimal
colour occurring infinitely often is even (min-parity semantics).
"""

from __future__ import annotations

from typing import AbstractSet, Iterable, NamedTuple, Optional, Sequence

Player = int
NodeSet = AbstractSet[int]

__all__ = [
    "GameError",
    "ParityGame",
    "Component",
    "opponent",
    "rank",
    "attractor",
    "monotone_attractor",
    "sccs",
    "scc_decompose",
    "pref_leq",
    "path_color",
    "remove_nodes",
    "remove_edge",
    "commit_edge",
]


class GameError(ValueError):
    """Raised when a game would violate its structural contract."""


def opponent(p: Player) -> Player:
    return 1 - p


class ParityGame:
    """Immutable game graph ``(V, V0, V1, E, c)`` without dead-ends.

    ``succ[v]`` is the ordered successor list of ``v``; predecessors are
    derived lazily and cached.  Games are never mutated; every editing
    operation returns a new game.
    """

    __slots__ = ("owner", "color", "succ", "names", "_pred", "_rank")

    def __init__(
        self,
        owner: Sequence[int],
        color: Sequence[int],
        succ: Sequence[Iterable[int]],
        names: Optional[Sequence[Optional[str]]] = None,
    ):
        owner = tuple(int(o) for o in owner)
        color = tuple(int(c) for c in color)
        n = len(owner)
        if len(color) != n or len(succ) != n:
            raise GameError("owner, color and succ must have equal length")
        rows = []
        for v, ws in enumerate(succ):
            row = []
            seen = set()
            for w in ws:
                w = int(w)
                if not 0 <= w < n:
                    raise GameError(f"edge ({v},{w}) leaves the node range")
                if w not in seen:
                    seen.add(w)
                    row.append(w)
            if not row:
                raise GameError(f"node {v} is a dead-end")
            rows.append(tuple(row))
        for v in range(n):
            if owner[v] not in (0, 1):
                raise GameError(f"node {v} has owner {owner[v]}")
            if color[v] < 0:
                raise GameError(f"node {v} has negative color {color[v]}")
        if names is not None:
            names = tuple(names)
            if len(names) != n:
                raise GameError("names must have one entry per node")
            if all(name is None for name in names):
                names = None
        self.owner = owner
        self.color = color
        self.succ = tuple(rows)
        self.names = names
        self._pred = None
        self._rank = None

    @classmethod
    def _raw(cls, owner, color, succ, names=None, pred=None) -> "ParityGame":
        # trusted constructor for internal edits that preserve the invariants
        g = object.__new__(cls)
        g.owner = owner
        g.color = color
        g.succ = succ
        g.names = names
        g._pred = pred
        g._rank = None
        return g

    @classmethod
    def from_edges(cls, owner, color, edges, names=None) -> "ParityGame":
        succ = [[] for _ in owner]
        for v, w in edges:
            succ[v].append(w)
        return cls(owner, color, succ, names)

    def __len__(self) -> int:
        return len(self.owner)

    @property
    def n(self) -> int:
        return len(self.owner)

    @property
    def pred(self) -> tuple:
        if self._pred is None:
            pred = [[] for _ in self.owner]
            for v, ws in enumerate(self.succ):
                for w in ws:
                    pred[w].append(v)
            self._pred = tuple(tuple(p) for p in pred)
        return self._pred

    @property
    def num_edges(self) -> int:
        return sum(len(ws) for ws in self.succ)

    def edges(self):
        for v, ws in enumerate(self.succ):
            for w in ws:
                yield v, w

    def nodes_of(self, p: Player) -> frozenset:
        return frozenset(v for v, o in enumerate(self.owner) if o == p)

    def colors(self) -> list:
        return sorted(set(self.color))

    def with_colors(self, color: Sequence[int]) -> "ParityGame":
        """Same graph, new colouring (edge structure and caches are shared)."""
        return ParityGame._raw(self.owner, tuple(color), self.succ, self.names, self._pred)

    def recolor_node(self, v: int, c: int) -> "ParityGame":
        color = list(self.color)
        color[v] = c
        return self.with_colors(color)

    def with_successors(self, v: int, ws: Sequence[int]) -> "ParityGame":
        succ = list(self.succ)
        succ[v] = tuple(ws)
        return ParityGame._raw(self.owner, self.color, tuple(succ), self.names)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ParityGame):
            return NotImplemented
        return (
            self.owner == other.owner
            and self.color == other.color
            and self.succ == other.succ
            and self.names == other.names
        )

    def __hash__(self) -> int:
        return hash((self.owner, self.color, self.succ))

    def __repr__(self) -> str:
        return f"ParityGame(n={self.n}, edges={self.num_edges}, colors={self.colors()})"


def rank(g: ParityGame) -> int:
    """``|V| + |E| + sum of colours``; the termination measure of every solver."""
    r = g._rank
    if r is None:
        r = g._rank = len(g.owner) + g.num_edges + sum(g.color)
    return r


def attractor(g: ParityGame, p: Player, x: Iterable[int], within: Optional[AbstractSet[int]] = None) -> frozenset:
    """Nodes from which player ``p`` can force the play into ``x``.

    With ``within`` the computation runs in the subgame induced by that node
    set, which must itself have no dead-ends.
    """
    attr = set(x)
    if within is not None:
        attr &= within
    if not attr:
        return frozenset()
    owner = g.owner
    pred = g.pred
    succ = g.succ
    count = {}
    stack = list(attr)
    while stack:
        u = stack.pop()
        for v in pred[u]:
            if v in attr or (within is not None and v not in within):
                continue
            if owner[v] == p:
                attr.add(v)
                stack.append(v)
            else:
                k = count.get(v)
                if k is None:
                    if within is None:
                        k = len(succ[v])
                    else:
                        k = sum(1 for w in succ[v] if w in within)
                k -= 1
                if k == 0:
                    attr.add(v)
                    stack.append(v)
                else:
                    count[v] = k
    return frozenset(attr)


def monotone_attractor(g: ParityGame, x: Iterable[int], d: int) -> frozenset:
    """Nodes from which player ``d % 2`` forces a visit to ``x`` in at least
    one move while only passing nodes of colour ``>= d``.

    Members of ``x`` are targets, not automatic members of the result, so
    ``x <= monotone_attractor(g, x, d)`` is exactly the fatality test.
    """
    p = d & 1
    owner = g.owner
    color = g.color
    pred = g.pred
    succ = g.succ
    reached = set(x)
    stack = list(reached)
    result = set()
    count = {}
    while stack:
        u = stack.pop()
        for v in pred[u]:
            if v in result or color[v] < d:
                continue
            if owner[v] != p:
                k = count.get(v, len(succ[v])) - 1
                if k:
                    count[v] = k
                    continue
            result.add(v)
            if v not in reached:
                reached.add(v)
                stack.append(v)
    return frozenset(result)


class Component(NamedTuple):
    nodes: frozenset
    trivial: bool


def scc_decompose(succ: Sequence[Sequence[int]], nodes: Optional[Iterable[int]] = None, alive=None) -> list:
    """Iterative Tarjan over ``succ`` restricted to ``alive`` (a set, or None
    for all nodes).  Components come out in reverse topological order."""
    if nodes is None:
        nodes = range(len(succ))
    index = {}
    low = {}
    on_stack = set()
    stack = []
    out = []
    counter = 0
    for root in nodes:
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        work = [(root, iter(succ[root]))]
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if alive is not None and w not in alive:
                    continue
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ[w])))
                    advanced = True
                    break
                if w in on_stack and index[w] < low[v]:
                    low[v] = index[w]
            if advanced:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                out.append(comp)
    return out


def sccs(g: ParityGame) -> list:
    """Maximal SCCs of ``g`` in reverse topological order.

    Every edge leaving a component points into a component emitted earlier.
    Single nodes without a self-loop are flagged ``trivial``.
    """
    out = []
    for comp in scc_decompose(g.succ):
        trivial = len(comp) == 1 and comp[0] not in g.succ[comp[0]]
        out.append(Component(frozenset(comp), trivial))
    return out


def pref_leq(p: Player, c1: int, c2: int) -> bool:
    """True iff ``c1`` is at least as good for player ``p`` as ``c2`` when it
    is the minimal colour seen infinitely often."""
    q1, q2 = c1 & 1, c2 & 1
    if q1 == p and q2 != p:
        return True
    if q1 == p and q2 == p:
        return c1 <= c2
    if q1 != p and q2 != p:
        return c2 <= c1
    return False


def path_color(g: ParityGame, path: Sequence[int]) -> int:
    """Minimal colour on a non-empty path, endpoints included."""
    if not path:
        raise GameError("path must be non-empty")
    for v, w in zip(path, path[1:]):
        if w not in g.succ[v]:
            raise GameError(f"({v},{w}) is not an edge")
    return min(g.color[v] for v in path)


def remove_nodes(g: ParityGame, z: Iterable[int]):
    """Restrict ``g`` to ``V \\ z``.

    Returns ``(game, index)`` where ``index[old]`` is the new id of a surviving
    node and ``-1`` for removed ones.  Raises :class:`GameError` if a survivor
    would lose all its successors.
    """
    z = set(z)
    if not z:
        return g, list(range(g.n))
    index = []
    keep = []
    for v in range(g.n):
        if v in z:
            index.append(-1)
        else:
            index.append(len(keep))
            keep.append(v)
    succ = []
    for v in keep:
        row = tuple(index[w] for w in g.succ[v] if index[w] >= 0)
        if not row:
            raise GameError(f"removing nodes leaves node {v} without successors")
        succ.append(row)
    names = None if g.names is None else tuple(g.names[v] for v in keep)
    h = ParityGame._raw(
        tuple(g.owner[v] for v in keep),
        tuple(g.color[v] for v in keep),
        tuple(succ),
        names,
    )
    return h, index


def remove_edge(g: ParityGame, v: int, w: int) -> ParityGame:
    ws = g.succ[v]
    if w not in ws:
        raise GameError(f"({v},{w}) is not an edge")
    if len(ws) < 2:
        raise GameError(f"node {v} has a single successor; removing ({v},{w}) creates a dead-end")
    return g.with_successors(v, [u for u in ws if u != w])


def commit_edge(g: ParityGame, v: int, w: int) -> ParityGame:
    ws = g.succ[v]
    if w not in ws:
        raise GameError(f"({v},{w}) is not an edge")
    if len(ws) == 1:
        return g
    return g.with_successors(v, (w,))
