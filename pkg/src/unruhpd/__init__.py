"""Quantum prisoner's dilemma between an inertial and a uniformly accelerated player.

The engine builds the entangled two-player state, passes the accelerated
player's qubit through the single-mode acceleration channel, applies both
moves, disentangles, and scores the diagonal against a classical payoff
table. Closed-form oracles and an equilibrium analyzer sit alongside the
simulation so every published result can be cross-checked numerically.
"""

from .closed_forms import (
    CLASSICAL_PROFILES,
    max_entangled_classical,
    miracle_vs_classical,
    q_vs_arbitrary,
    unentangled_classical,
)
from .equilibrium import (
    EquilibriumReport,
    analyze,
    best_response,
    find_dominant,
    find_nash,
    pareto_front,
    payoff_table,
    set_best_responses,
)
from .game import (
    COOPERATE,
    DEFECT,
    GAMMA_MAX,
    MIRACLE,
    NAMED_STRATEGIES,
    Q_MOVE,
    Strategy,
    entangler,
    initial_state,
    named_strategy_matrix,
    strategy_matrix,
)
from .payoff import GameSetup, Payoffs, PayoffTable, final_density, payoffs, play
from .unruh import R_MAX, expand_bob_mode, r_from_acceleration, unruh_channel
from .verify import SUITE_NAMES, VerifyOutcome, run_suite

__all__ = [
    "CLASSICAL_PROFILES",
    "COOPERATE",
    "DEFECT",
    "EquilibriumReport",
    "GAMMA_MAX",
    "GameSetup",
    "MIRACLE",
    "NAMED_STRATEGIES",
    "Payoffs",
    "PayoffTable",
    "Q_MOVE",
    "R_MAX",
    "Strategy",
    "SUITE_NAMES",
    "VerifyOutcome",
    "analyze",
    "best_response",
    "entangler",
    "expand_bob_mode",
    "final_density",
    "find_dominant",
    "find_nash",
    "initial_state",
    "max_entangled_classical",
    "miracle_vs_classical",
    "named_strategy_matrix",
    "pareto_front",
    "payoff_table",
    "payoffs",
    "play",
    "q_vs_arbitrary",
    "r_from_acceleration",
    "run_suite",
    "set_best_responses",
    "strategy_matrix",
    "unentangled_classical",
    "unruh_channel",
]

__version__ = "0.1.0"
