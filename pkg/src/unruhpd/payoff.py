"""Game pipeline: entangle, accelerate, move, disentangle, score.

Expected payoffs are read off the diagonal of the final density matrix in
the order CC, CD, DC, DD against a classical payoff table.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .game import Strategy, entangler, initial_state, named_strategy_matrix, validate_gamma
from .linalg import adjoint, identity, kron, sup_norm
from .unruh import unruh_channel, validate_r

UNITARITY_TOL = 1e-9

PROFILE_ORDER = ("CC", "CD", "DC", "DD")


class Payoffs(NamedTuple):
    alice: float
    bob: float


@dataclass(frozen=True)
class PayoffTable:
    """Classical payoff pairs (Alice, Bob) per joint outcome.

    Defaults are the usual Prisoner's Dilemma values: reward 3, sucker 0,
    temptation 5, punishment 1.
    """

    cc: tuple[float, float] = (3.0, 3.0)
    cd: tuple[float, float] = (0.0, 5.0)
    dc: tuple[float, float] = (5.0, 0.0)
    dd: tuple[float, float] = (1.0, 1.0)

    @classmethod
    def from_scalars(cls, reward: float, sucker: float, temptation: float, punishment: float) -> "PayoffTable":
        return cls(
            cc=(reward, reward),
            cd=(sucker, temptation),
            dc=(temptation, sucker),
            dd=(punishment, punishment),
        )

    def entries(self) -> tuple[tuple[float, float], ...]:
        return (self.cc, self.cd, self.dc, self.dd)


@dataclass(frozen=True)
class GameSetup:
    gamma: float
    r: float
    table: PayoffTable = field(default_factory=PayoffTable)

    def __post_init__(self):
        object.__setattr__(self, "gamma", validate_gamma(self.gamma))
        object.__setattr__(self, "r", validate_r(self.r))


def final_density(rho: np.ndarray, u_alice: np.ndarray, u_bob: np.ndarray, gamma: float) -> np.ndarray:
    """Apply the joint move and undo the entangler: J^dag (uA x uB) rho (.)^dag J."""
    gamma = validate_gamma(gamma)
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 density matrix, got shape {rho.shape}")
    for name, u in (("alice", u_alice), ("bob", u_bob)):
        u = np.asarray(u, dtype=complex)
        if u.shape != (2, 2) or sup_norm(adjoint(u) @ u - identity(2)) > UNITARITY_TOL:
            raise ValueError(f"{name} move is not a 2x2 unitary")
    j = entangler(gamma)
    moves = kron(u_alice, u_bob)
    return adjoint(j) @ moves @ rho @ adjoint(moves) @ j


def payoffs(rho_final: np.ndarray, table: PayoffTable) -> Payoffs:
    """Diagonal-weighted expectation of the classical payoff table."""
    rho_final = np.asarray(rho_final, dtype=complex)
    if rho_final.shape != (4, 4):
        raise ValueError(f"expected a 4x4 density matrix, got shape {rho_final.shape}")
    diag = np.real(np.diag(rho_final))
    alice = float(sum(pair[0] * p for pair, p in zip(table.entries(), diag)))
    bob = float(sum(pair[1] * p for pair, p in zip(table.entries(), diag)))
    return Payoffs(alice, bob)


def play(setup: GameSetup, alice: Strategy, bob: Strategy) -> Payoffs:
    """Expected payoffs for one strategy profile under the full pipeline."""
    psi = initial_state(setup.gamma)
    rho = unruh_channel(psi, setup.r)
    rho_final = final_density(rho, named_strategy_matrix(alice), named_strategy_matrix(bob), setup.gamma)
    return payoffs(rho_final, setup.table)
