import pytest
from hypothesis import given, settings

from conftest import cycle2, games
from pgpartial import (
    ER_FA,
    FA,
    IDENTITY,
    STAGES,
    LawViolation,
    ParityGame,
    PartialSolver,
    Pipeline,
    call,
    chain_states,
    gen_one_player,
    initial_state,
    lift,
    lifted,
    named_pipeline,
    pipeline_names,
    rank,
    while_solve,
    zielonka,
)
from pgpartial.compose import SolveStats
from pgpartial.generate import RandomConfig
from pgpartial.harness import misclassified

PS = [named_pipeline(f"ps{k}") for k in range(1, 6)]
WHILE_FA = named_pipeline("while:fa")


def test_pipeline_needs_a_stage():
    with pytest.raises(ValueError):
        Pipeline("empty", ())


def test_while_identity():
    s = initial_state(cycle2())
    assert Pipeline("id", (IDENTITY,))(s) is s


def test_while_fa_solves_two_cycle():
    s = WHILE_FA(initial_state(cycle2()))
    assert s.w0 == {0, 1} and not s.w1 and s.g_prime.n == 0


def test_call_examples():
    empty = call(WHILE_FA, ParityGame([], [], []))
    assert not empty.w0 and not empty.w1
    r = call(WHILE_FA, cycle2())
    assert (r.w0, r.w1) == ({0, 1}, set())
    residual = ParityGame([0, 1, 0], [3, 2, 1], [[0, 2], [2, 0], [1, 0]])
    r = call(WHILE_FA, residual)
    assert not r.w0 and not r.w1


def test_named_pipelines():
    assert [f.name for f in named_pipeline("ps1").stages] == ["scc", "pp", "fa", "ari", "gfa"]
    ps5 = named_pipeline("ps5")
    assert len(ps5.stages) == 9
    assert [f.name for f in ps5.stages[-2:]] == ["er_fa", "er_sd"]
    assert [f.name for f in named_pipeline("one-player").stages] == ["scc'", "ari", "fa"]
    assert named_pipeline("lift-ps5").name == "lift(ps5)"
    assert [f.name for f in named_pipeline("while:fa, m_ss").stages] == ["fa", "m_ss"]
    for name in ("bogus", "while:", "while:fa,nope"):
        with pytest.raises(KeyError):
            named_pipeline(name)
    assert set(pipeline_names()) >= {"ps1", "ps5", "lift-ps5", "one-player"}


def test_law_violations_are_reported():
    def grow(s):
        h = s.g_prime
        return s.with_game(h.with_colors([c + 1 for c in h.color]))

    with pytest.raises(LawViolation, match="rank"):
        Pipeline("bad", (PartialSolver("grow", grow),))(initial_state(cycle2()))

    def swap(s):
        return initial_state(ParityGame([0, 1], [0, 3], [[1], [0]]))

    with pytest.raises(LawViolation, match="input game"):
        Pipeline("bad", (PartialSolver("swap", swap),))(initial_state(cycle2()))

    def forget(s):
        return initial_state(s.g)

    s = WHILE_FA(initial_state(cycle2()))
    with pytest.raises(LawViolation, match="dropped"):
        Pipeline("bad", (PartialSolver("forget", forget),))(s)


def test_lifted_leaves_single_successor_games():
    g = ParityGame([0, 1, 0], [3, 2, 1], [[1], [2], [0]])
    s = initial_state(g)
    assert lifted(WHILE_FA)(s) is s


def test_lifted_commit_branch():
    # committing node 0 to its even self-loop lets fa decide it for its owner
    g = ParityGame([0, 1], [0, 1], [[0, 1], [1]])
    t = lifted(WHILE_FA)(initial_state(g))
    assert t.g_prime.succ == ((0,), (1,))


def test_lifted_removal_branch_on_residual_state():
    g = ParityGame([1, 0, 0, 1, 0], [1, 0, 3, 2, 1], [[1, 2], [0], [2, 4], [4, 2], [3, 2]])
    s = initial_state(g)
    assert WHILE_FA(s) is s
    t = lifted(WHILE_FA)(s)
    assert t.g_prime == ER_FA(s).g_prime
    assert t.lift_regions(zielonka(t.g_prime)) == zielonka(g)


def test_lift_identity_is_identity():
    s = initial_state(ParityGame([0, 1], [0, 1], [[0, 1], [0, 1]]))
    assert lift(IDENTITY)(s).g_prime.n <= s.g_prime.n
    single = initial_state(ParityGame([0, 1], [2, 1], [[1], [0]]))
    assert lift(IDENTITY)(single) is single


@given(games(max_nodes=8, max_color=5))
def test_lift_never_increases_rank(g):
    s = initial_state(g)
    t = lift(WHILE_FA)(s)
    assert rank(t.g_prime) <= rank(g)
    assert misclassified(t.regions(), zielonka(g)) == 0


@pytest.mark.parametrize("pl", PS + [named_pipeline("one-player")], ids=lambda p: p.name)
@given(g=games(max_nodes=8, max_color=6))
def test_pipelines_lawful_and_sound(pl, g):
    stats = SolveStats()
    t = while_solve(pl, initial_state(g), stats)
    assert stats.iterations <= rank(g)
    assert sum(stats.changes.values()) == stats.iterations
    assert misclassified(t.regions(), zielonka(g)) == 0
    assert t.lift_regions(zielonka(t.g_prime)) == zielonka(g)
    for f in pl.stages:
        assert f(t) is t


@settings(max_examples=300)
@given(games(max_nodes=8, max_color=5))
def test_residuals_invariant_under_permutation(g):
    a = named_pipeline("while:pp,fa")
    b = named_pipeline("while:fa,pp")
    s = initial_state(g)
    assert (a(s) is s) == (b(s) is s)
    # the residual of one ordering is residual for the other
    t = a(s)
    assert b(t) is t


@given(games(max_nodes=9, max_color=6))
def test_refinement_chain(g):
    states = [pl(initial_state(g)) for pl in PS]
    for s, t in zip(states, states[1:]):
        assert s.w0 <= t.w0 and s.w1 <= t.w1
        assert rank(t.g_prime) <= rank(s.g_prime)
    assert chain_states(PS, initial_state(g)) == states


def test_chain_requires_extensions():
    with pytest.raises(ValueError):
        chain_states([PS[1], PS[0]], initial_state(cycle2()))


@pytest.mark.parametrize("p", [0, 1])
def test_one_player_games_are_solved(p):
    pl = named_pipeline("one-player")
    for seed in range(100):
        g = gen_one_player(RandomConfig(20, 10, 1, 3), seed, p)
        s = pl(initial_state(g))
        assert s.g_prime.n == 0
        assert misclassified(s.regions(), zielonka(g)) == 0


def test_stage_registry():
    assert set(STAGES) == {
        "scc", "scc'", "pp", "fa", "ari", "gfa", "m_ss", "m_scc", "er_fa", "er_sd", "er_sd_owned"
    }
    assert STAGES["fa"] is FA
