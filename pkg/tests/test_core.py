import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import cycle2, games
from pgpartial import (
    GameError,
    ParityGame,
    attractor,
    commit_edge,
    monotone_attractor,
    opponent,
    path_color,
    pref_leq,
    rank,
    remove_edge,
    remove_nodes,
    sccs,
    zielonka,
)

EMPTY = ParityGame([], [], [])


def test_opponent_involution():
    assert [opponent(opponent(p)) for p in (0, 1)] == [0, 1]
    assert opponent(0) == 1


def test_constructor_rejects_bad_games():
    with pytest.raises(GameError):
        ParityGame([0], [0], [[]])
    with pytest.raises(GameError):
        ParityGame([0], [0], [[1]])
    with pytest.raises(GameError):
        ParityGame([2], [0], [[0]])
    with pytest.raises(GameError):
        ParityGame([0], [-1], [[0]])


def test_duplicate_successors_are_dropped():
    g = ParityGame([0, 0], [0, 0], [[1, 1, 0], [0]])
    assert g.succ[0] == (1, 0)
    assert g.num_edges == 3


def test_predecessors_transpose_successors():
    g = ParityGame([0, 1, 0], [0, 1, 2], [[1, 2], [0], [2, 0]])
    assert sorted(g.pred[0]) == [1, 2]
    assert sorted(g.pred[2]) == [0, 2]
    assert g.pred[1] == (0,)


def test_rank_examples():
    assert rank(EMPTY) == 0
    assert rank(cycle2()) == 5
    assert rank(ParityGame([0], [7], [[0]])) == 9


def test_attractor_examples():
    g = cycle2()
    assert attractor(g, 0, []) == frozenset()
    assert attractor(g, 1, [0, 1]) == frozenset({0, 1})
    assert attractor(g, 0, [0]) == frozenset({0, 1})


def test_attractor_respects_opponent_choices():
    # player 1 at node 0 may escape to the self-loop on 2
    g = ParityGame([1, 0, 1], [0, 0, 0], [[1, 2], [1], [2]])
    assert attractor(g, 0, [1]) == frozenset({1})
    assert attractor(g, 1, [1]) == frozenset({0, 1})


def test_monotone_attractor_examples():
    g = cycle2()
    assert monotone_attractor(g, [], 0) == frozenset()
    assert monotone_attractor(g, [0], 0) == frozenset({0, 1})
    assert monotone_attractor(g, [0], 2) == frozenset()


def test_monotone_attractor_needs_a_move():
    # node 0 is a target but cannot return to itself
    g = ParityGame([0, 0], [2, 0], [[1], [1]])
    assert 0 not in monotone_attractor(g, [0], 2)


def test_sccs_examples():
    two = sccs(cycle2())
    assert [sorted(c.nodes) for c in two] == [[0, 1]]
    assert not two[0].trivial
    chain = sccs(ParityGame([0, 0, 0], [0, 0, 0], [[1], [2], [2]]))
    assert [list(c.nodes) for c in chain] == [[2], [1], [0]]
    assert [c.trivial for c in chain] == [False, True, True]
    assert sccs(EMPTY) == []


def test_pref_leq_examples():
    assert pref_leq(0, 0, 2)
    assert pref_leq(0, 2, 1)
    assert not pref_leq(0, 1, 3)
    assert pref_leq(0, 3, 1)


def test_pref_leq_player0_order():
    order = sorted(range(8), key=lambda c: sum(pref_leq(0, d, c) for d in range(8)))
    assert order == [0, 2, 4, 6, 7, 5, 3, 1]


def test_path_color():
    g = ParityGame([0, 0, 0], [2, 0, 5], [[1], [2], [0]])
    assert path_color(g, [0]) == 2
    assert path_color(g, [0, 1, 2]) == 0
    h = ParityGame([0, 0], [4, 6], [[1], [0]])
    assert path_color(h, [0, 1, 0]) == 4
    with pytest.raises(GameError):
        path_color(g, [0, 2])
    with pytest.raises(GameError):
        path_color(g, [])


def test_remove_nodes_examples():
    g = ParityGame([0, 0, 0], [1, 2, 3], [[1, 0], [2], [0]])
    same, index = remove_nodes(g, [])
    assert same == g and index == [0, 1, 2]
    empty, _ = remove_nodes(g, [0, 1, 2])
    assert empty.n == 0
    h, index = remove_nodes(g, [1, 2])
    assert h == ParityGame([0], [1], [[0]])
    assert index == [0, -1, -1]


def test_remove_nodes_refuses_dead_ends():
    with pytest.raises(GameError):
        remove_nodes(cycle2(), [0])


def test_edge_edits():
    g = ParityGame([0, 0, 0, 0], [0, 1, 2, 3], [[1, 2, 3], [1], [2], [3]])
    assert remove_edge(g, 0, 1).succ[0] == (2, 3)
    assert commit_edge(g, 0, 2).succ[0] == (2,)
    assert commit_edge(g, 1, 1) is g
    with pytest.raises(GameError):
        remove_edge(g, 1, 1)
    with pytest.raises(GameError):
        commit_edge(g, 1, 2)
    with pytest.raises(GameError):
        remove_edge(g, 0, 0)


@given(games(), st.data())
def test_attractor_monotone_and_idempotent(g, data):
    p = data.draw(st.integers(0, 1))
    x = data.draw(st.frozensets(st.integers(0, g.n - 1)))
    y = x | data.draw(st.frozensets(st.integers(0, g.n - 1)))
    ax = attractor(g, p, x)
    assert x <= ax
    assert ax <= attractor(g, p, y)
    assert attractor(g, p, ax) == ax


@given(games(), st.data())
def test_monotone_attractor_stays_above_threshold(g, data):
    d = data.draw(st.integers(0, 4))
    x = data.draw(st.frozensets(st.integers(0, g.n - 1)))
    assert all(g.color[v] >= d for v in monotone_attractor(g, x, d))


@given(games(max_nodes=8))
def test_sccs_partition_and_acyclic_quotient(g):
    comps = sccs(g)
    where = {}
    for i, c in enumerate(comps):
        for v in c.nodes:
            assert v not in where
            where[v] = i
    assert sorted(where) == list(range(g.n))
    # reverse topological: edges never point to a later component
    for v, w in g.edges():
        assert where[w] <= where[v]
    for c in comps:
        if c.trivial:
            (v,) = c.nodes
            assert v not in g.succ[v]


@given(st.integers(0, 1), st.lists(st.integers(0, 9), min_size=3, max_size=3))
def test_pref_leq_total_order(p, cs):
    a, b, c = cs
    assert pref_leq(p, a, a)
    assert pref_leq(p, a, b) or pref_leq(p, b, a)
    if pref_leq(p, a, b) and pref_leq(p, b, a):
        assert a == b
    if pref_leq(p, a, b) and pref_leq(p, b, c):
        assert pref_leq(p, a, c)


@given(games(), st.data())
def test_removing_an_attractor_lowers_rank(g, data):
    p = data.draw(st.integers(0, 1))
    x = data.draw(st.frozensets(st.integers(0, g.n - 1), min_size=1))
    z = attractor(g, p, x)
    h, _ = remove_nodes(g, z)
    assert rank(h) < rank(g)


@given(games(max_nodes=8), st.data())
def test_attractor_of_winning_set_is_winning(g, data):
    truth = zielonka(g)
    p = data.draw(st.integers(0, 1))
    if not truth[p]:
        return
    x = data.draw(st.frozensets(st.sampled_from(sorted(truth[p])), min_size=1))
    assert attractor(g, p, x) <= truth[p]


def test_equality_and_hash():
    a = cycle2()
    b = ParityGame.from_edges([0, 1], [0, 1], [(0, 1), (1, 0)])
    assert a == b and hash(a) == hash(b)
    assert a != ParityGame([0, 1], [0, 2], [[1], [0]])
    assert list(itertools.islice(a.edges(), 2)) == [(0, 1), (1, 0)]
