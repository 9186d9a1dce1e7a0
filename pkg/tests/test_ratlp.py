"""Rational arithmetic, LP types, and the exact simplex solver."""

import random
from fractions import Fraction as F

import pytest

from corpus import random_max_lps
from lp_oracle import oracle_solve
from fraccomp.ratlp import (
    INFEASIBLE,
    OPTIMAL,
    UNBOUNDED,
    LinearProgram,
    RationalMatrix,
    Sense,
    check_feasible,
    dual,
    lp_to_text,
    objective_value,
    parse_lp_text,
    parse_rational,
    solve,
)
from fraccomp.errors import FileFormatError


def lp_max(obj, rows, rhs):
    return LinearProgram(Sense.MAX, tuple(map(F, obj)), RationalMatrix.from_rows(rows), tuple(map(F, rhs)))


def lp_min(obj, rows, rhs):
    return LinearProgram(Sense.MIN, tuple(map(F, obj)), RationalMatrix.from_rows(rows), tuple(map(F, rhs)))


def c5_matching_lp():
    rows = []
    for v in range(5):
        row = [0] * 5
        row[v] = 1
        row[(v - 1) % 5] = 1
        rows.append(row)
    return lp_max([1] * 5, rows, [1] * 5)


def random_mixed_lps(seed, count, max_dim=6):
    """Both senses, rhs allowed negative, to exercise phase 1."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        m, n = rng.randint(1, max_dim), rng.randint(1, max_dim)
        sense = Sense.MAX if rng.random() < 0.5 else Sense.MIN
        obj = tuple(F(rng.randint(-3, 3)) for _ in range(n))
        rhs = tuple(F(rng.randint(-3, 3)) for _ in range(m))
        rows = [[F(rng.randint(-3, 3)) for _ in range(n)] for _ in range(m)]
        out.append(LinearProgram(sense, obj, RationalMatrix.from_rows(rows), rhs))
    return out


class TestParseRational:
    def test_fraction_literal(self):
        assert parse_rational("3/4") == F(3, 4)

    def test_integer(self):
        assert parse_rational("-2") == F(-2)

    def test_normalization(self):
        x = parse_rational("6/4")
        assert (x.numerator, x.denominator) == (3, 2)

    @pytest.mark.parametrize("bad", ["", "a", "1/2/3", "1.5", "3/-4", "/2", "2/"])
    def test_malformed(self, bad):
        with pytest.raises(ValueError):
            parse_rational(bad)

    def test_zero_denominator(self):
        with pytest.raises(ValueError):
            parse_rational("3/0")


class TestRationalMatrix:
    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            RationalMatrix(2, 2, (F(1),))

    def test_transpose_involution(self):
        m = RationalMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
        assert m.transpose().transpose() == m
        assert m.transpose().at(2, 1) == 6

    def test_outer(self):
        m = RationalMatrix.outer([F(1), F(2)], [F(3), F(4), F(5)])
        assert m.to_rows() == [[3, 4, 5], [6, 8, 10]]


class TestSolveFixtures:
    def test_one_dim_optimal(self):
        out = solve(lp_max([F(3, 4)], [[1]], [1]))
        assert out.status == OPTIMAL
        assert out.value == F(3, 4)
        assert out.solution == (F(1),)

    def test_one_dim_infeasible(self):
        # min {cx : (c-1)x >= 1} for c = 3/4
        out = solve(lp_min([F(3, 4)], [[F(-1, 4)]], [1]))
        assert out.status == INFEASIBLE

    def test_one_dim_unbounded(self):
        out = solve(lp_min([-1], [[1]], [0]))
        assert out.status == UNBOUNDED

    def test_c5_matching_value(self):
        # Independently confirmed by the basic-solution oracle.
        lp = c5_matching_lp()
        out = solve(lp)
        assert out.value == F(5, 2)
        assert oracle_solve(lp) == (OPTIMAL, F(5, 2))

    def test_equality_degenerate_rhs(self):
        # Both a <= and an implied >= through negative rhs rows.
        out = solve(lp_max([1, 1], [[1, 1], [-1, -1]], [2, -2]))
        assert out.status == OPTIMAL
        assert out.value == 2


class TestSolveAgainstOracle:
    def test_small_random_lps(self):
        for lp in random_mixed_lps(1234, 60, max_dim=4):
            got = solve(lp)
            want_status, want_value = oracle_solve(lp)
            assert got.status == want_status
            if got.is_optimal:
                assert got.value == want_value


class TestSolverInvariants:
    def test_termination_and_exactness_500(self):
        for lp in random_mixed_lps(77, 500, max_dim=6):
            out = solve(lp)  # termination: no hang, no exception
            if out.is_optimal:
                assert check_feasible(lp, out.solution)
                assert objective_value(lp, out.solution) == out.value

    def test_strong_duality(self):
        checked = 0
        for lp in random_max_lps(5150, 120):
            a, b = solve(lp), solve(dual(lp))
            if a.is_optimal and b.is_optimal:
                assert a.value == b.value
                checked += 1
        assert checked > 20

    def test_weak_duality_unbounded_implies_dual_infeasible(self):
        checked = 0
        for lp in random_mixed_lps(31, 200):
            if lp.sense is not Sense.MAX:
                continue
            if solve(lp).status == UNBOUNDED:
                assert solve(dual(lp)).status == INFEASIBLE
                checked += 1
        assert checked > 5

    def test_determinism(self):
        for lp in random_mixed_lps(99, 25):
            assert solve(lp) == solve(lp)

    def test_dual_involution(self):
        for lp in random_mixed_lps(13, 50):
            assert dual(dual(lp)) == lp


class TestCheckFeasible:
    def test_simple(self):
        lp = lp_max([1], [[1]], [1])
        assert check_feasible(lp, [F(1)])
        assert not check_feasible(lp, [F(2)])
        assert not check_feasible(lp, [F(-1)])

    def test_c5_cover(self):
        # K(H) of the C5 edge hypergraph accepts the all-1/2 vector.
        rows = []
        for v in range(5):
            row = [0] * 5
            row[v] = 1
            row[(v - 1) % 5] = 1
            rows.append(row)
        cover_lp = lp_min([1] * 5, rows, [1] * 5)
        assert check_feasible(cover_lp, [F(1, 2)] * 5)

    def test_dimension_error(self):
        with pytest.raises(ValueError):
            check_feasible(lp_max([1], [[1]], [1]), [F(1), F(2)])


class TestLpFile:
    def test_round_trip(self):
        lp = c5_matching_lp()
        assert parse_lp_text(lp_to_text(lp)) == lp

    def test_comments_and_rationals(self):
        text = "# a comment\nlp min 2 2\nobj 1/2 -3\nrhs 1 2/3\nrow 1 0\nrow -1/2 1\n"
        lp = parse_lp_text(text)
        assert lp.sense is Sense.MIN
        assert lp.objective == (F(1, 2), F(-3))
        assert lp.matrix.at(1, 0) == F(-1, 2)

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "lp max 1\nobj 1\nrhs 1\nrow 1",
            "lp best 1 1\nobj 1\nrhs 1\nrow 1",
            "lp max 1 1\nobj 1 2\nrhs 1\nrow 1",
            "lp max 2 1\nobj 1\nrhs 1 1\nrow 1",
            "lp max 1 1\nobj x\nrhs 1\nrow 1",
        ],
    )
    def test_malformed(self, text):
        with pytest.raises(FileFormatError):
            parse_lp_text(text)
