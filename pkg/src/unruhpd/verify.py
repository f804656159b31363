"""Cross-checks of the engine against the published closed forms.

Each suite replays a family of analytic payoff results on an r grid and
reports the worst engine-vs-formula deviation. Known anomalies in the
published account (label mismatches, misprinted values, an unexplained
player inversion) are surfaced as discrepancy notes rather than silently
corrected or failed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import closed_forms
from .game import NAMED_STRATEGIES, Strategy, entangler, named_strategy_matrix
from .linalg import kron, sup_norm
from .payoff import GameSetup, play
from .unruh import R_MAX

SUITE_NAMES = ("table2", "eq8", "eq11", "eq13", "commutators")

DEFAULT_GRID = 9
DEFAULT_TOL = 1e-12

NOTE_Q_LABEL = (
    "quantum move Q: the published label U(0, pi/2) does not generate the "
    "displayed matrix diag(i,-i) under the move parametrization (it gives a "
    "non-diagonal matrix); the engine uses diag(i,-i), which equals "
    "U(pi/2, 0), and the payoff checks of this suite confirm that choice."
)
NOTE_TABLE2_MISPRINT = (
    "at r = pi/4 the accompanying text quotes (D,C) = (D,D) = (3,3/2); the "
    "closed forms and the engine both give (3,1/2)."
)
NOTE_TABLE2_NASH = (
    "deviation checks on the unentangled closed forms make (D,D) a pure "
    "equilibrium for every r below pi/4, despite the accompanying claim "
    "that no classical profile is one; the equilibria command reports the "
    "computed set."
)
NOTE_EQ8_CROSS = (
    "at r = 0 the maximally entangled cross profiles give (C,D) -> (5,0) "
    "and (D,C) -> (0,5), not the classical (0,5)/(5,0): under this move "
    "parametrization the (C,D) profile collapses onto the DC outcome. "
    "Internally consistent; recorded for information."
)
NOTE_EQ8_PARETO = (
    "(D,D) is payoff-dominated by (C,C) at every acceleration here, so it "
    "cannot be Pareto optimal as remarked in the accompanying text; the "
    "equilibria command reports the computed front."
)
NOTE_EQ13_INVERSION = (
    "at r = 0 the miracle-move closed forms give (1/2, 3), the mirror image "
    "of the known inertial-frame result; the original account states it has "
    "no explanation for this inconsistency. The formulas are reproduced "
    "exactly as stated, not corrected."
)


@dataclass
class VerifyOutcome:
    suite: str
    points_checked: int
    max_abs_error: float
    discrepancy_notes: list[str]
    passed: bool


def r_grid(points: int) -> np.ndarray:
    if points < 3:
        raise ValueError("grid must have at least 3 points")
    return np.linspace(0.0, R_MAX, points)


def run_suite(suite: str, grid: int = DEFAULT_GRID, tol: float = DEFAULT_TOL) -> VerifyOutcome:
    """Run one named suite, or every suite aggregated under 'all'."""
    if tol <= 0.0:
        raise ValueError("tolerance must be positive")
    if suite == "all":
        outcomes = [run_suite(name, grid, tol) for name in SUITE_NAMES]
        return VerifyOutcome(
            suite="all",
            points_checked=sum(o.points_checked for o in outcomes),
            max_abs_error=max(o.max_abs_error for o in outcomes),
            discrepancy_notes=[note for o in outcomes for note in o.discrepancy_notes],
            passed=all(o.passed for o in outcomes),
        )
    runners = {
        "table2": _suite_table2,
        "eq8": _suite_eq8,
        "eq11": _suite_eq11,
        "eq13": _suite_eq13,
        "commutators": _suite_commutators,
    }
    if suite not in runners:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITE_NAMES + ('all',)}")
    return runners[suite](grid, tol)


def _profile_pair(profile: str) -> tuple[Strategy, Strategy]:
    return NAMED_STRATEGIES[profile[0]], NAMED_STRATEGIES[profile[1]]


def _suite_table2(grid: int, tol: float) -> VerifyOutcome:
    worst = 0.0
    points = 0
    for r in r_grid(grid):
        setup = GameSetup(gamma=0.0, r=float(r))
        for profile in closed_forms.CLASSICAL_PROFILES:
            engine = play(setup, *_profile_pair(profile))
            expected = closed_forms.unentangled_classical(float(r), profile)
            worst = max(worst, abs(engine.alice - expected.alice), abs(engine.bob - expected.bob))
            points += 1
    return VerifyOutcome("table2", points, worst, [NOTE_TABLE2_MISPRINT, NOTE_TABLE2_NASH], worst <= tol)


def _suite_eq8(grid: int, tol: float) -> VerifyOutcome:
    worst = 0.0
    points = 0
    for r in r_grid(grid):
        setup = GameSetup(gamma=math.pi / 2.0, r=float(r))
        for profile in closed_forms.CLASSICAL_PROFILES:
            engine = play(setup, *_profile_pair(profile))
            expected = closed_forms.max_entangled_classical(float(r), profile)
            worst = max(worst, abs(engine.alice - expected.alice), abs(engine.bob - expected.bob))
            points += 1
    return VerifyOutcome("eq8", points, worst, [NOTE_EQ8_CROSS, NOTE_EQ8_PARETO], worst <= tol)


def _suite_eq11(grid: int, tol: float) -> VerifyOutcome:
    worst = 0.0
    points = 0
    q = NAMED_STRATEGIES["Q"]
    for r in r_grid(grid):
        setup = GameSetup(gamma=math.pi / 2.0, r=float(r))
        for alpha_b in (0.0, math.pi / 4.0):
            for theta_b in (0.0, math.pi / 2.0, math.pi):
                engine = play(setup, q, Strategy(alpha_b, theta_b))
                expected = closed_forms.q_vs_arbitrary(float(r), alpha_b, theta_b)
                worst = max(worst, abs(engine.alice - expected.alice), abs(engine.bob - expected.bob))
                points += 1
        # Q-vs-defect for Bob must coincide with cooperate-vs-defect for Alice.
        qd_bob = play(setup, q, NAMED_STRATEGIES["D"]).bob
        cd_alice = play(setup, NAMED_STRATEGIES["C"], NAMED_STRATEGIES["D"]).alice
        worst = max(worst, abs(qd_bob - cd_alice))
        points += 1
    return VerifyOutcome("eq11", points, worst, [NOTE_Q_LABEL], worst <= tol)


def _suite_eq13(grid: int, tol: float) -> VerifyOutcome:
    worst = 0.0
    points = 0
    ordering_ok = True
    m = NAMED_STRATEGIES["M"]
    for r in r_grid(grid):
        setup = GameSetup(gamma=math.pi / 2.0, r=float(r))
        for reply, theta_b in (("C", 0.0), ("D", math.pi)):
            engine = play(setup, m, NAMED_STRATEGIES[reply])
            expected = closed_forms.miracle_vs_classical(float(r), theta_b)
            worst = max(worst, abs(engine.alice - expected.alice), abs(engine.bob - expected.bob))
            if engine.alice >= engine.bob:
                ordering_ok = False
            points += 1
    notes = [NOTE_EQ13_INVERSION]
    if not ordering_ok:
        notes.append("ordering violation: the miracle player failed to score below the classical reply somewhere on the grid")
    return VerifyOutcome("eq13", points, worst, notes, worst <= tol and ordering_ok)


def _suite_commutators(grid: int, tol: float) -> VerifyOutcome:
    del grid
    j = entangler(math.pi / 2.0)
    norms: dict[str, float] = {}
    for a in ("C", "D"):
        for b in ("C", "D"):
            u = kron(named_strategy_matrix(NAMED_STRATEGIES[a]), named_strategy_matrix(NAMED_STRATEGIES[b]))
            norms[a + b] = sup_norm(j @ u - u @ j)
    worst_same = max(norms["CC"], norms["DD"])
    notes = [
        "entangler commutator sup-norms at gamma = pi/2: "
        + ", ".join(f"[J, {a}x{b}] = {norms[a + b]:.6g}" for a in "CD" for b in "CD")
        + "; the mixed classical pairs do not commute under this move "
        "parametrization (reported for information, not a failure)."
    ]
    return VerifyOutcome("commutators", len(norms), worst_same, notes, worst_same <= tol)
