import itertools

import pytest
from hypothesis import given

from conftest import cycle2, games
from pgpartial import OracleLimitError, ParityGame, attractor, brute_force, gen_random, zielonka
from pgpartial.generate import RandomConfig

EMPTY = ParityGame([], [], [])


def all_games(n, colors=(0, 1, 2, 3)):
    rows = [s for k in (1, 2) for s in itertools.combinations(range(n), k)]
    for owner in itertools.product((0, 1), repeat=n):
        for color in itertools.product(colors, repeat=n):
            for succ in itertools.product(rows, repeat=n):
                yield ParityGame(owner, color, succ)


def test_zielonka_examples():
    r = zielonka(cycle2())
    assert (r.w0, r.w1) == ({0, 1}, set())
    r = zielonka(ParityGame([0], [1], [[0]]))
    assert (r.w0, r.w1) == (set(), {0})
    # player 1 at node 0 picks the odd loop on 3; node 2 runs to the even loop on 1
    g = ParityGame([1, 0, 0, 1], [2, 0, 4, 1], [[3, 1], [1], [1, 0], [3]])
    r = zielonka(g)
    assert r.w0 == {1, 2} and r.w1 == {0, 3}


def test_brute_force_examples():
    assert brute_force(EMPTY) == zielonka(EMPTY)
    assert brute_force(EMPTY).w0 == frozenset()
    assert brute_force(ParityGame([1], [0], [[0]])).w0 == {0}


def test_agree_on_all_two_node_games():
    for n in (1, 2):
        for g in all_games(n):
            assert zielonka(g) == brute_force(g), g


def test_agree_on_three_node_games_with_fixed_owners():
    # a slice of the exhaustive three-node space; the acceptance suite runs all of it
    for g in itertools.islice(all_games(3), 0, 110592, 37):
        assert zielonka(g) == brute_force(g)


@given(games(max_nodes=8))
def test_agree_on_random_games(g):
    r = zielonka(g)
    assert r.is_complete(g.n)
    assert r == brute_force(g)


@given(games(max_nodes=8))
def test_regions_closed_under_attractor(g):
    r = zielonka(g)
    for p in (0, 1):
        assert attractor(g, p, r[p]) == r[p]


def test_zielonka_on_seeded_games():
    cfg = RandomConfig(8, 5, 1, 3)
    for seed in range(300):
        g = gen_random(cfg, seed)
        assert zielonka(g) == brute_force(g)


def test_guards():
    big = ParityGame([0] * 11, [0] * 11, [[(v + 1) % 11] for v in range(11)])
    with pytest.raises(OracleLimitError):
        brute_force(big)
    many = ParityGame([0] * 10, [0] * 10, [list(range(10))] * 10)
    with pytest.raises(OracleLimitError):
        brute_force(many)
    split = ParityGame([0, 0], [0, 1], [[0], [1]])
    assert zielonka(split, max_depth=1).w1 == {1}
    with pytest.raises(OracleLimitError):
        zielonka(split, max_depth=0)
