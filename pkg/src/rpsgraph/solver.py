"""Exact Nash equilibria of tournament games.

Every tournament game has exactly one Nash equilibrium, and its support
always has odd size. Probabilities are kept as ``fractions.Fraction``
throughout: positivity and parity decisions are meaningless under floating
point, so no float ever enters the equilibrium path.

Conventions: for an outcome matrix ``g`` and profile ``a``, the column
payoff ``c_j = sum_i g[i][j] * a[i]`` is the expected outcome of playing
``a`` against the pure strategy ``j`` (2 win, 1 draw, 0 loss). A profile is
an equilibrium exactly when every column payoff is at least 1.
"""

from __future__ import annotations

import random
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm

from .core import OutcomeMatrix


@dataclass(frozen=True)
class StrategyProfile:
    """A probability vector over strategies, stored as exact rationals."""

    probs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "probs", tuple(Fraction(p) for p in self.probs))
        if not self.probs:
            raise ValueError("a profile needs at least one strategy")
        if any(p < 0 for p in self.probs):
            raise ValueError("probabilities must be nonnegative")
        total = sum(self.probs)
        if total != 1:
            raise ValueError(f"probabilities must sum to exactly 1, got {total}")

    @classmethod
    def of(cls, values) -> "StrategyProfile":
        return cls(tuple(Fraction(v) for v in values))

    @classmethod
    def uniform(cls, n: int) -> "StrategyProfile":
        return cls((Fraction(1, n),) * n)

    @classmethod
    def pure(cls, n: int, i: int) -> "StrategyProfile":
        if not 0 <= i < n:
            raise ValueError(f"strategy {i} out of range")
        return cls(tuple(Fraction(1 if j == i else 0) for j in range(n)))

    def __len__(self) -> int:
        return len(self.probs)

    def __getitem__(self, i: int) -> Fraction:
        return self.probs[i]


@dataclass(frozen=True)
class UnitSystemSolution:
    """Exact solution of the all-columns-pay-one linear system.

    ``values`` may contain negative entries; they form a probability vector
    only when the game is all-positive. ``determinant_odd`` certifies that
    the system was uniquely solvable: the coefficient matrix has unit
    diagonal and even off-diagonal entries, so its determinant is odd and in
    particular nonzero.
    """

    values: tuple[Fraction, ...]
    determinant_odd: bool


@dataclass(frozen=True)
class EquilibriumReport:
    profile: StrategyProfile
    support: frozenset[int]
    column_payoffs: tuple[Fraction, ...]
    all_positive: bool
    normalized: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "profile": [str(p) for p in self.profile.probs],
            "support": sorted(self.support),
            "column_payoffs": [str(c) for c in self.column_payoffs],
            "all_positive": self.all_positive,
            "normalized": list(self.normalized),
        }


def _bareiss_solve(rows: list[list[int]], rhs: list[int]) -> tuple[list[Fraction], int]:
    """Solve an integer linear system exactly; returns (solution, determinant).

    Fraction-free (Bareiss) elimination: every intermediate entry is an
    integer minor determinant and the deferred divisions are exact, so
    coefficient growth stays polynomial. Back substitution produces reduced
    fractions.
    """
    n = len(rows)
    m = [list(row) + [b] for row, b in zip(rows, rhs)]
    sign = 1
    prev = 1
    for k in range(n):
        pivot = next((r for r in range(k, n) if m[r][k] != 0), None)
        if pivot is None:
            raise ValueError("singular system")
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for r in range(k + 1, n):
            for c in range(k + 1, n + 1):
                m[r][c] = (m[r][c] * m[k][k] - m[r][k] * m[k][c]) // prev
            m[r][k] = 0
        prev = m[k][k]
    det = sign * m[n - 1][n - 1]
    xs = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(m[i][n])
        for j in range(i + 1, n):
            acc -= m[i][j] * xs[j]
        xs[i] = acc / m[i][i]
    return xs, det


def column_payoffs(g: OutcomeMatrix, a: StrategyProfile) -> tuple[Fraction, ...]:
    """Expected outcome of profile ``a`` against each pure strategy."""
    if g.n != len(a):
        raise ValueError(f"profile length {len(a)} does not match n={g.n}")
    return tuple(
        sum((Fraction(g.g[i][j]) * a[i] for i in range(g.n)), Fraction(0))
        for j in range(g.n)
    )


def expected_outcome(g: OutcomeMatrix, a: StrategyProfile, b: StrategyProfile) -> Fraction:
    """Expected outcome of ``a`` against ``b``; 1 means the matchup is fair."""
    if g.n != len(a) or g.n != len(b):
        raise ValueError("profile lengths must match the matrix size")
    return sum(
        (c * b[j] for j, c in enumerate(column_payoffs(g, a))), Fraction(0)
    )


def solve_unit_system(g: OutcomeMatrix) -> UnitSystemSolution:
    """Solve ``sum_i g[i][j] * x[i] = 1`` for every column j, exactly.

    A unique solution always exists: the coefficient matrix has an odd
    determinant. For games with an odd number of strategies the entries sum
    to exactly 1, but individual entries may be negative.
    """
    rows = [[g.g[i][j] for i in range(g.n)] for j in range(g.n)]
    values, det = _bareiss_solve(rows, [1] * g.n)
    return UnitSystemSolution(tuple(values), det % 2 != 0)


def _build_report(g: OutcomeMatrix, profile: StrategyProfile) -> EquilibriumReport:
    payoffs = column_payoffs(g, profile)
    support = frozenset(i for i, p in enumerate(profile.probs) if p > 0)
    for j, c in enumerate(payoffs):
        if c < 1 or (j in support and c != 1):
            raise RuntimeError("candidate profile fails the equilibrium conditions")
    scale = lcm(*(p.denominator for p in profile.probs))
    normalized = tuple(int(p * scale) for p in profile.probs)
    return EquilibriumReport(
        profile=profile,
        support=support,
        column_payoffs=payoffs,
        all_positive=len(support) == g.n,
        normalized=normalized,
    )


def all_positive_equilibrium(g: OutcomeMatrix) -> EquilibriumReport | None:
    """The full-support equilibrium if one exists, else None.

    Games with an even number of strategies are never all-positive, so they
    short-circuit. For odd n the unit system is solved; strictly positive
    entries settle the question (the sum-to-one axiom is automatic).
    """
    if g.n % 2 == 0:
        return None
    solution = solve_unit_system(g)
    if any(v <= 0 for v in solution.values):
        return None
    return _build_report(g, StrategyProfile(solution.values))


def _candidate_profile(g: OutcomeMatrix, support: tuple[int, ...]) -> StrategyProfile | None:
    """The equilibrium candidate with the given support, or None if rejected.

    Accepts exactly when the restricted unit system has a strictly positive
    solution summing to 1 and every column payoff of the full game is >= 1.
    """
    rows = [[g.g[i][j] for i in support] for j in support]
    values, _ = _bareiss_solve(rows, [1] * len(support))
    if any(v <= 0 for v in values):
        return None
    if sum(values) != 1:
        return None
    probs = [Fraction(0)] * g.n
    for idx, v in zip(support, values):
        probs[idx] = v
    candidate = StrategyProfile(tuple(probs))
    if any(c < 1 for c in column_payoffs(g, candidate)):
        return None
    return candidate


def nash_equilibrium(g: OutcomeMatrix, *, scan_all: bool = False) -> EquilibriumReport:
    """The unique Nash equilibrium, found by support enumeration.

    Candidate supports are tried in increasing size, odd sizes only,
    lexicographically within a size; exactly one support is ever accepted,
    so the order affects only speed. With ``scan_all=True`` every nonempty
    support is checked and uniqueness of the accepted support is asserted
    (diagnostic mode, exponentially slower).
    """
    if scan_all:
        accepted = scan_supports(g)
        if len(accepted) != 1:
            raise RuntimeError(
                f"support scan accepted {len(accepted)} supports, expected exactly 1"
            )
        profile = _candidate_profile(g, tuple(sorted(accepted[0])))
        assert profile is not None
        return _build_report(g, profile)
    for size in range(1, g.n + 1, 2):
        for support in combinations(range(g.n), size):
            profile = _candidate_profile(g, support)
            if profile is not None:
                return _build_report(g, profile)
    raise RuntimeError("no support admits an equilibrium; solver state is inconsistent")


def scan_supports(g: OutcomeMatrix) -> list[frozenset[int]]:
    """All supports (any size) whose candidate profile is an equilibrium.

    Exhaustive over the 2^n - 1 nonempty subsets; intended for verification
    at small n.
    """
    accepted = []
    for size in range(1, g.n + 1):
        for support in combinations(range(g.n), size):
            if _candidate_profile(g, support) is not None:
                accepted.append(frozenset(support))
    return accepted


def reduce_support(g: OutcomeMatrix, report: EquilibriumReport) -> OutcomeMatrix:
    """Restrict the game to the equilibrium support.

    The reduced game's own equilibrium equals the restriction of the full
    profile; this is verified here by re-solving the restricted system.
    """
    idx = sorted(report.support)
    sub = OutcomeMatrix(len(idx), tuple(tuple(g.g[a][b] for b in idx) for a in idx))
    reduced = solve_unit_system(sub)
    if reduced.values != tuple(report.profile.probs[i] for i in idx):
        raise RuntimeError("restricted equilibrium does not match the restricted profile")
    return sub


def parity_certificate(report: EquilibriumReport) -> bool:
    """True when every probability in lowest terms has odd numerator and denominator.

    Only meaningful for all-positive equilibria, where it always holds.
    """
    if not report.all_positive:
        raise ValueError("parity certificate requires an all-positive equilibrium")
    return all(
        p.numerator % 2 == 1 and p.denominator % 2 == 1 for p in report.profile.probs
    )


def monte_carlo_check(
    g: OutcomeMatrix, a: StrategyProfile, rounds: int, seed: int
) -> float:
    """Empirical worst-column outcome estimate for the profile ``a``.

    Plays ``rounds`` sampled strategies against every pure column and
    returns the smallest per-column average outcome. Sampling is inverse-CDF
    over float conversions of the profile using ``random.Random(seed)``
    (the Mersenne Twister), so results are reproducible bit for bit for a
    fixed (profile, rounds, seed).
    """
    if rounds < 1:
        raise ValueError(f"rounds must be at least 1, got {rounds}")
    if g.n != len(a):
        raise ValueError(f"profile length {len(a)} does not match n={g.n}")
    rng = random.Random(seed)
    cuts: list[float] = []
    acc = 0.0
    for p in a.probs[:-1]:
        acc += float(p)
        cuts.append(acc)
    totals = [0] * g.n
    for _ in range(rounds):
        i = bisect_right(cuts, rng.random())
        row = g.g[i]
        for j in range(g.n):
            totals[j] += row[j]
    return min(total / rounds for total in totals)
