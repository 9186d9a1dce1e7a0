"""LP complementation and its consequences.

The complement of max {c.x : Ax <= b} is min {c.x : (b c^T - A)x >= b}; the
min form maps back symmetrically. Complementation is an involution, commutes
with duality, and whenever one side has optimal value above one, so does the
other, with the two reciprocals summing to exactly one. This module provides
the transform, the optimal-solution mapping between the two programs, a case
classifier for all feasibility outcomes, the scaled integer-program pair it
induces, and the two-player matrix-game reading of the identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import DegenerateGame, FileFormatError
from .ratlp import (
    ONE,
    ZERO,
    INFEASIBLE,
    OPTIMAL,
    UNBOUNDED,
    LinearProgram,
    LpOutcome,
    RationalMatrix,
    Sense,
    _content_lines,
    check_feasible,
    objective_value,
    parse_rational,
    solve,
)

CASE_BOTH_ABOVE_ONE = "both_above_one"
CASE_P_BELOW_OR_AT_ONE = "p_below_or_at_one"
CASE_P_INFEASIBLE = "p_infeasible"
CASE_P_UNBOUNDED = "p_unbounded"


def complement(lp: LinearProgram) -> LinearProgram:
    """The complement LP: flip the sense, replace the matrix by
    rhs . objective^T - matrix, keep objective and rhs unchanged."""
    outer = RationalMatrix.outer(lp.rhs, lp.objective)
    flipped = Sense.MIN if lp.sense is Sense.MAX else Sense.MAX
    return LinearProgram(flipped, lp.objective, outer - lp.matrix, lp.rhs)


def complement_solution(lp: LinearProgram, x, opt: Fraction) -> tuple[Fraction, ...]:
    """Map an optimal solution x of lp (value opt > 1) to one of complement(lp).

    The image x / (opt - 1) is feasible for the complement and attains its
    optimal value opt / (opt - 1).
    """
    opt = Fraction(opt)
    if opt <= 1:
        raise ValueError("solution mapping requires an optimal value > 1")
    scale = ONE / (opt - ONE)
    return tuple(Fraction(v) * scale for v in x)


@dataclass(frozen=True)
class ComplementationReport:
    """Joint classification of an LP and its complement.

    identity_lhs / identity_holds are set only in the both_above_one case;
    lemma_holds is set when the optimum is <= 1 and the rhs is nonnegative,
    where the complement must be infeasible or unbounded.
    """

    opt_p: LpOutcome
    opt_c: LpOutcome
    case: str
    identity_lhs: Fraction | None = None
    identity_holds: bool | None = None
    lemma_applies: bool = False
    lemma_holds: bool | None = None


def verify_complementation(lp: LinearProgram) -> ComplementationReport:
    """Solve lp and complement(lp), classify the case, and check the
    reciprocal identity (or the infeasible-or-unbounded alternative)."""
    opt_p = solve(lp)
    opt_c = solve(complement(lp))
    if opt_p.status == INFEASIBLE:
        return ComplementationReport(opt_p, opt_c, CASE_P_INFEASIBLE)
    if opt_p.status == UNBOUNDED:
        return ComplementationReport(opt_p, opt_c, CASE_P_UNBOUNDED)
    if opt_p.value > 1:
        lhs = None
        holds = None
        if opt_c.status == OPTIMAL and opt_c.value > 1:
            lhs = ONE / opt_p.value + ONE / opt_c.value
            holds = lhs == 1
        else:
            holds = False
        return ComplementationReport(
            opt_p, opt_c, CASE_BOTH_ABOVE_ONE, identity_lhs=lhs, identity_holds=holds
        )
    applies = all(b >= 0 for b in lp.rhs)
    holds = opt_c.status in (INFEASIBLE, UNBOUNDED) if applies else None
    return ComplementationReport(
        opt_p, opt_c, CASE_P_BELOW_OR_AT_ONE, lemma_applies=applies, lemma_holds=holds
    )


@dataclass(frozen=True)
class IpPairResult:
    """Certified common optimum of the scaled integer pair.

    x_hat = s * x solves both max {c.x : Ax <= s b, x integral} and
    min {c.x : (b c^T - A)x >= t b, x integral}, with value s + t.
    """

    s: int
    t: int
    x_hat: tuple[int, ...]
    value: int


def ip_scaled_pair(lp: LinearProgram) -> IpPairResult:
    """Build and verify the scaled integer pair for an integral max LP with
    optimum above one. s is the least common denominator of the basic
    optimal solution and t = s * (opt - 1)."""
    if lp.sense is not Sense.MAX:
        raise ValueError("scaled IP pair is defined for maximisation LPs")
    data = list(lp.objective) + list(lp.rhs) + list(lp.matrix.entries)
    if any(v.denominator != 1 for v in data):
        raise ValueError("scaled IP pair requires all-integer LP data")
    out = solve(lp)
    if not out.is_optimal:
        raise ValueError(f"LP is {out.status}, not optimal")
    if out.value <= 1:
        raise ValueError("scaled IP pair requires an optimal value > 1")

    s = lcm(*(x.denominator for x in out.solution))
    t_frac = s * (out.value - ONE)
    assert t_frac.denominator == 1 and t_frac > 0
    t = int(t_frac)
    x_hat = tuple(int(x * s) for x in out.solution)

    # Verify both scaled constraint systems exactly.
    ax = lp.matrix.matvec(x_hat)
    if not all(a <= s * b for a, b in zip(ax, lp.rhs)):
        raise AssertionError("x_hat violates the scaled primal system")
    comp = complement(lp)
    cx = comp.matrix.matvec(x_hat)
    if not all(a >= t * b for a, b in zip(cx, lp.rhs)):
        raise AssertionError("x_hat violates the scaled complement system")
    value = sum(c * x for c, x in zip(lp.objective, x_hat))
    assert value == s + t
    return IpPairResult(s, t, x_hat, int(value))


@dataclass(frozen=True)
class MatrixGame:
    """Zero-sum matrix game; the row player picks a row of the payoff."""

    payoff: RationalMatrix


@dataclass(frozen=True)
class GameValue:
    value: Fraction
    rose_strategy: tuple[Fraction, ...]


def game_value(game: MatrixGame) -> GameValue:
    """Value of a [0,1]-payoff matrix game via V = 1 / Opt(max {1.x : Ax <= 1}).

    The optimal x scales by V to a probability vector. Values 0 and 1 are
    rejected as degenerate.
    """
    A = game.payoff
    if any(a < 0 or a > 1 for a in A.entries):
        raise ValueError("payoff entries must lie in [0, 1]")
    lp = LinearProgram(Sense.MAX, (ONE,) * A.cols, A, (ONE,) * A.rows)
    out = solve(lp)
    if out.status == UNBOUNDED:
        raise DegenerateGame("game value is 0")
    assert out.is_optimal  # x = 0 is always feasible
    if out.value == 1:
        raise DegenerateGame("game value is 1")
    v = ONE / out.value
    strategy = tuple(v * x for x in out.solution)
    assert sum(strategy, ZERO) == 1 and all(p >= 0 for p in strategy)
    return GameValue(v, strategy)


@dataclass(frozen=True)
class ComplementaryGameReport:
    v: Fraction
    v_bar: Fraction
    sum_is_one: bool


def complementary_game_check(game: MatrixGame) -> ComplementaryGameReport:
    """Compare the game against its complementary game with payoff 1 - A^T."""
    v = game_value(game).value
    A = game.payoff
    ones = RationalMatrix(A.cols, A.rows, (ONE,) * (A.rows * A.cols))
    v_bar = game_value(MatrixGame(ones - A.transpose())).value
    return ComplementaryGameReport(v, v_bar, v + v_bar == 1)


# ---------------------------------------------------------------------------
# Matrix-game file format: line 1 `game <m> <n>`, then m rows of n rationals.


def parse_game_text(text: str) -> MatrixGame:
    lines = _content_lines(text)
    if not lines:
        raise FileFormatError("empty game file")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "game":
        raise FileFormatError(f"bad game header: {lines[0]!r}")
    try:
        m, n = int(head[1]), int(head[2])
    except ValueError as exc:
        raise FileFormatError(f"bad game dimensions: {lines[0]!r}") from exc
    if len(lines) != m + 1:
        raise FileFormatError(f"expected {m} payoff rows, found {len(lines) - 1}")
    rows = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != n:
            raise FileFormatError(f"payoff row needs {n} rationals: {line!r}")
        try:
            rows.append([parse_rational(p) for p in parts])
        except ValueError as exc:
            raise FileFormatError(str(exc)) from exc
    return MatrixGame(RationalMatrix.from_rows(rows))
