"""Compositional polynomial-time partial solvers for min-parity games.

A partial solver maps a state ``(W0, W1, rho, G', G)`` to another one of
smaller rank; ``while`` compositions of static analyses decide parts of a
game and leave a residual continuation game for a complete solver.
"""

from .analyses import ARI, FA, GFA, PP, SCC, SCC_PRIME
from .compose import (
    IDENTITY,
    STAGES,
    LawViolation,
    Pipeline,
    call,
    chain_states,
    check_laws,
    lift,
    lifted,
    named_pipeline,
    pipeline_names,
    while_solve,
)
from .core import (
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
)
from .generate import RandomConfig, gen_one_player, gen_random
from .harness import (
    ExperimentReport,
    effectiveness_compare,
    hunt_residuals,
    regress,
    regress_games,
    residual_rates,
    unit_analysis,
)
from .io import (
    GameDocument,
    ParseError,
    convert_max_to_min,
    emit_solution,
    parse_pgsolver,
    read_game,
    serialize_pgsolver,
)
from .oracle import OracleLimitError, brute_force, zielonka
from .refinements import ER_FA, ER_SD, ER_SD_OWNED, M_SCC, M_SS, MergeSpec, merge
from .state import PartialSolver, State, WinningRegions, check_state, decide, initial_state

__version__ = "0.1.0"
