"""Exact rational linear programs and a two-phase simplex solver.

Every number is a fractions.Fraction; no floating point enters any
computation. LPs come in exactly two shapes, with x >= 0 always implicit:

    max {c.x : Ax <= b}        (Sense.MAX)
    min {v.x : Mx >= u}        (Sense.MIN)

solve() classifies each instance as Optimal (with an exact basic optimal
solution), Infeasible, or Unbounded. Pivoting follows Bland's smallest-index
rule, so the solver terminates on every rational input without perturbation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import FileFormatError

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?\Z")


def parse_rational(text: str) -> Fraction:
    """Parse 'p', '-p' or 'p/q' (q > 0) into a normalized Fraction."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"malformed rational literal {text!r}")
    if "/" in s:
        num, den = s.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def format_rational(x: Fraction) -> str:
    return str(x)


@dataclass(frozen=True)
class RationalMatrix:
    """Dense matrix of rationals, stored row-major."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")

    @classmethod
    def from_rows(cls, rows) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        flat = tuple(Fraction(v) for r in rows for v in r)
        return cls(nrows, ncols, flat)

    @classmethod
    def outer(cls, u, v) -> "RationalMatrix":
        """Outer product u v^T of two vectors."""
        u = [Fraction(x) for x in u]
        v = [Fraction(x) for x in v]
        return cls(len(u), len(v), tuple(a * b for a in u for b in v))

    def at(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            self.cols,
            self.rows,
            tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    def matvec(self, x) -> tuple[Fraction, ...]:
        if len(x) != self.cols:
            raise ValueError("dimension mismatch in matvec")
        return tuple(
            sum((a * xi for a, xi in zip(self.row(i), x)), ZERO)
            for i in range(self.rows)
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch in matrix subtraction")
        return RationalMatrix(
            self.rows,
            self.cols,
            tuple(a - b for a, b in zip(self.entries, other.entries)),
        )

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix(self.rows, self.cols, tuple(-a for a in self.entries))


class Sense(Enum):
    MAX = "max"
    MIN = "min"


@dataclass(frozen=True)
class LinearProgram:
    """An LP in one of the two canonical shapes; x >= 0 is implicit.

    Sense.MAX reads max {objective.x : matrix x <= rhs};
    Sense.MIN reads min {objective.x : matrix x >= rhs}.
    """

    sense: Sense
    objective: tuple[Fraction, ...]
    matrix: RationalMatrix
    rhs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "objective", tuple(Fraction(c) for c in self.objective))
        object.__setattr__(self, "rhs", tuple(Fraction(b) for b in self.rhs))
        if len(self.objective) != self.matrix.cols:
            raise ValueError("objective length does not match matrix columns")
        if len(self.rhs) != self.matrix.rows:
            raise ValueError("rhs length does not match matrix rows")

    @property
    def n(self) -> int:
        return self.matrix.cols

    @property
    def m(self) -> int:
        return self.matrix.rows


OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LpOutcome:
    """Result of solve(): optimal value plus a basic optimal solution,
    or one of the two degenerate classifications."""

    status: str
    value: Fraction | None = None
    solution: tuple[Fraction, ...] | None = None

    @classmethod
    def optimal(cls, value: Fraction, solution) -> "LpOutcome":
        return cls(OPTIMAL, Fraction(value), tuple(Fraction(x) for x in solution))

    @classmethod
    def infeasible(cls) -> "LpOutcome":
        return cls(INFEASIBLE)

    @classmethod
    def unbounded(cls) -> "LpOutcome":
        return cls(UNBOUNDED)

    @property
    def is_optimal(self) -> bool:
        return self.status == OPTIMAL


def dual(lp: LinearProgram) -> LinearProgram:
    """LP duality in the two-form convention: max{c,A,b} <-> min{b,A^T,c}.

    With both LPs written over nonnegative variables, taking the dual twice
    is the identity field-for-field.
    """
    if lp.sense is Sense.MAX:
        return LinearProgram(Sense.MIN, lp.rhs, lp.matrix.transpose(), lp.objective)
    return LinearProgram(Sense.MAX, lp.rhs, lp.matrix.transpose(), lp.objective)


def check_feasible(lp: LinearProgram, x) -> bool:
    """Exact feasibility of x for lp (including x >= 0)."""
    x = tuple(Fraction(v) for v in x)
    if len(x) != lp.n:
        raise ValueError("solution length does not match variable count")
    if any(xi < 0 for xi in x):
        return False
    lhs = lp.matrix.matvec(x)
    if lp.sense is Sense.MAX:
        return all(a <= b for a, b in zip(lhs, lp.rhs))
    return all(a >= b for a, b in zip(lhs, lp.rhs))


def objective_value(lp: LinearProgram, x) -> Fraction:
    return sum((c * Fraction(v) for c, v in zip(lp.objective, x)), ZERO)


def solve(lp: LinearProgram) -> LpOutcome:
    """Classify lp exactly as Optimal / Infeasible / Unbounded.

    Deterministic: identical inputs yield identical outcomes and identical
    basic solutions.
    """
    if lp.sense is Sense.MIN:
        # min v.x s.t. Mx >= u  ==  -(max -v.x s.t. -Mx <= -u)
        flipped = LinearProgram(
            Sense.MAX,
            tuple(-c for c in lp.objective),
            -lp.matrix,
            tuple(-b for b in lp.rhs),
        )
        out = _solve_max(flipped)
        if out.is_optimal:
            return LpOutcome.optimal(-out.value, out.solution)
        return out
    return _solve_max(lp)


def _solve_max(lp: LinearProgram) -> LpOutcome:
    m, n = lp.m, lp.n
    need_art = [lp.rhs[i] < 0 for i in range(m)]
    n_art = sum(need_art)
    width = n + m + n_art

    # Rows of [A | I_slack | I_art | b], sign-flipped where b_i < 0 so that
    # every right-hand side is nonnegative and the initial basis is feasible.
    rows: list[list[Fraction]] = []
    basis: list[int] = []
    art_cols: set[int] = set()
    next_art = n + m
    for i in range(m):
        row = [ZERO] * (width + 1)
        sign = -ONE if need_art[i] else ONE
        arow = lp.matrix.row(i)
        for j in range(n):
            row[j] = sign * arow[j]
        row[n + i] = sign
        row[width] = sign * lp.rhs[i]
        if need_art[i]:
            row[next_art] = ONE
            art_cols.add(next_art)
            basis.append(next_art)
            next_art += 1
        else:
            basis.append(n + i)
        rows.append(row)

    if n_art:
        # Phase 1: maximize -(sum of artificials). Reduced costs start from
        # cost -1 on artificial columns, priced out over the artificial basis.
        rc = [ZERO] * width
        for j in range(width):
            s = ZERO
            for i in range(m):
                if basis[i] in art_cols:
                    s += rows[i][j]
            rc[j] = (-ONE if j in art_cols else ZERO) + s
        _pivot_loop(rows, rc, basis)
        art_total = sum((rows[i][-1] for i in range(len(rows)) if basis[i] in art_cols), ZERO)
        if art_total > 0:
            return LpOutcome.infeasible()
        # Drive zero-valued artificials out of the basis; a row with no
        # nonzero structural entry is redundant and dropped.
        keep: list[int] = []
        for i in range(len(rows)):
            if basis[i] in art_cols:
                piv = next((j for j in range(n + m) if rows[i][j] != 0), None)
                if piv is None:
                    continue
                _pivot(rows, rc, basis, i, piv)
            keep.append(i)
        rows = [rows[i][: n + m] + [rows[i][width]] for i in keep]
        basis = [basis[i] for i in keep]

    # Phase 2 on the true objective.
    cost = list(lp.objective) + [ZERO] * m
    rc = list(cost)
    for i, row in enumerate(rows):
        cb = cost[basis[i]]
        if cb != 0:
            for j in range(n + m):
                rc[j] -= cb * row[j]
    status = _pivot_loop(rows, rc, basis)
    if status == UNBOUNDED:
        return LpOutcome.unbounded()
    x = [ZERO] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = rows[i][-1]
    value = sum((c * xi for c, xi in zip(lp.objective, x)), ZERO)
    return LpOutcome.optimal(value, x)


def _pivot_loop(rows: list[list[Fraction]], rc: list[Fraction], basis: list[int]) -> str:
    """Run simplex pivots under Bland's rule until optimal or unbounded."""
    while True:
        enter = next((j for j, c in enumerate(rc) if c > 0), None)
        if enter is None:
            return OPTIMAL
        leave = None
        best_ratio = None
        best_var = None
        for i, row in enumerate(rows):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < best_var)
                ):
                    best_ratio, best_var, leave = ratio, basis[i], i
        if leave is None:
            return UNBOUNDED
        _pivot(rows, rc, basis, leave, enter)


def _pivot(rows, rc, basis, pi: int, pj: int) -> None:
    prow = rows[pi]
    piv = prow[pj]
    if piv != 1:
        prow = [v / piv for v in prow]
        rows[pi] = prow
    for i, row in enumerate(rows):
        if i != pi and row[pj] != 0:
            f = row[pj]
            rows[i] = [a - f * b for a, b in zip(row, prow)]
    f = rc[pj]
    if f != 0:
        for j in range(len(rc)):
            rc[j] -= f * prow[j]
    basis[pi] = pj


# ---------------------------------------------------------------------------
# LP file format:
#   line 1: lp <max|min> <m> <n>
#   line 2: obj  (n rationals)
#   line 3: rhs  (m rationals)
#   next m lines: row  (n rationals)
# '#' starts a comment line.


def _content_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def parse_lp_text(text: str) -> LinearProgram:
    lines = _content_lines(text)
    if not lines:
        raise FileFormatError("empty LP file")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "lp" or head[1] not in ("max", "min"):
        raise FileFormatError(f"bad LP header: {lines[0]!r}")
    try:
        m, n = int(head[2]), int(head[3])
    except ValueError as exc:
        raise FileFormatError(f"bad LP dimensions: {lines[0]!r}") from exc
    if len(lines) != 3 + m:
        raise FileFormatError(f"expected {3 + m} content lines, found {len(lines)}")

    def vector(line: str, tag: str, length: int) -> tuple[Fraction, ...]:
        parts = line.split()
        if not parts or parts[0] != tag:
            raise FileFormatError(f"expected {tag!r} line, found {line!r}")
        if len(parts) != length + 1:
            raise FileFormatError(f"{tag!r} line needs {length} rationals: {line!r}")
        try:
            return tuple(parse_rational(p) for p in parts[1:])
        except ValueError as exc:
            raise FileFormatError(str(exc)) from exc

    obj = vector(lines[1], "obj", n)
    rhs = vector(lines[2], "rhs", m)
    mat_rows = [vector(lines[3 + i], "row", n) for i in range(m)]
    sense = Sense.MAX if head[1] == "max" else Sense.MIN
    return LinearProgram(sense, obj, RationalMatrix.from_rows(mat_rows), rhs)


def lp_to_text(lp: LinearProgram) -> str:
    lines = [f"lp {lp.sense.value} {lp.m} {lp.n}"]
    lines.append("obj " + " ".join(str(c) for c in lp.objective))
    lines.append("rhs " + " ".join(str(b) for b in lp.rhs))
    for i in range(lp.m):
        lines.append("row " + " ".join(str(a) for a in lp.matrix.row(i)))
    return "\n".join(lines) + "\n"
