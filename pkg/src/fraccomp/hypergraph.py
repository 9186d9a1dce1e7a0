"""Hypergraphs with multiset edges and their fractional parameters.

Edges form an ordered multiset: duplicates are kept and order is preserved,
so dualising twice or complementing twice reproduces the incidence matrix
exactly. The four fractional parameters (covering, packing, matching,
transversal) are optimal values of LPs over the incidence matrix, solved
exactly; their integer counterparts are brute-force subset optima guarded by
an enumeration budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations

from .errors import (
    DEFAULT_MAX_ENUM,
    BudgetExceeded,
    FileFormatError,
    InfeasibleParameter,
    NoAdmissibleSubset,
    NotNontrivial,
    UnboundedParameter,
)
from .lpcomp import complement as lp_complement
from .ratlp import (
    ONE,
    ZERO,
    LinearProgram,
    RationalMatrix,
    Sense,
    _content_lines,
    solve,
)


@dataclass(frozen=True)
class Hypergraph:
    """Vertices 0..n-1 plus an ordered multiset of edges (vertex subsets)."""

    n: int
    edges: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(frozenset(e) for e in self.edges))
        if self.n < 1:
            raise ValueError("hypergraph needs at least one vertex")
        if not self.edges:
            raise ValueError("hypergraph needs at least one edge")
        for e in self.edges:
            if any(v < 0 or v >= self.n for v in e):
                raise ValueError("edge contains an out-of-range vertex")

    @property
    def m(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class HypergraphFlags:
    has_isolated_vertex: bool
    has_universal_vertex: bool
    has_empty_edge: bool
    has_complete_edge: bool
    nontrivial: bool


def classify(h: Hypergraph) -> HypergraphFlags:
    """Scan for isolated/universal vertices and empty/complete edges.
    Nontrivial means: no empty edges and no universal vertices."""
    full = frozenset(range(h.n))
    isolated = any(all(v not in e for e in h.edges) for v in range(h.n))
    universal = any(all(v in e for e in h.edges) for v in range(h.n))
    empty = any(not e for e in h.edges)
    complete = any(e == full for e in h.edges)
    return HypergraphFlags(isolated, universal, empty, complete, not empty and not universal)


def incidence_matrix(h: Hypergraph) -> RationalMatrix:
    """n x m 0/1 matrix; entry (v, e) is 1 iff vertex v lies in edge e."""
    entries = tuple(
        ONE if v in e else ZERO for v in range(h.n) for e in h.edges
    )
    return RationalMatrix(h.n, h.m, entries)


def dual(h: Hypergraph) -> Hypergraph:
    """Swap vertices and edges: dual vertex j is edge j of h, and dual edge v
    (one per original vertex, multiplicities preserved) collects the edges
    containing v. The incidence matrix transposes."""
    edges = tuple(
        frozenset(j for j, e in enumerate(h.edges) if v in e) for v in range(h.n)
    )
    return Hypergraph(h.m, edges)


def complement(h: Hypergraph) -> Hypergraph:
    """Replace every edge by its complement in the vertex set."""
    full = frozenset(range(h.n))
    return Hypergraph(h.n, tuple(full - e for e in h.edges))


class ParamKind(Enum):
    COVERING = "covering"
    PACKING = "packing"
    MATCHING = "matching"
    TRANSVERSAL = "transversal"


def parameter_lp(h: Hypergraph, kind: ParamKind) -> LinearProgram:
    """The LP whose optimal value is the requested fractional parameter."""
    mat = incidence_matrix(h)
    if kind is ParamKind.COVERING:
        return LinearProgram(Sense.MIN, (ONE,) * h.m, mat, (ONE,) * h.n)
    if kind is ParamKind.PACKING:
        return LinearProgram(Sense.MAX, (ONE,) * h.n, mat.transpose(), (ONE,) * h.m)
    if kind is ParamKind.MATCHING:
        return LinearProgram(Sense.MAX, (ONE,) * h.m, mat, (ONE,) * h.n)
    if kind is ParamKind.TRANSVERSAL:
        return LinearProgram(Sense.MIN, (ONE,) * h.n, mat.transpose(), (ONE,) * h.m)
    raise ValueError(f"unknown parameter kind {kind!r}")


def _check_param_preconditions(h: Hypergraph, kind: ParamKind) -> None:
    flags = classify(h)
    if kind is ParamKind.COVERING and flags.has_isolated_vertex:
        raise InfeasibleParameter("covering is infeasible: isolated vertex")
    if kind is ParamKind.PACKING and flags.has_isolated_vertex:
        raise UnboundedParameter("packing is unbounded: isolated vertex")
    if kind is ParamKind.TRANSVERSAL and flags.has_empty_edge:
        raise InfeasibleParameter("transversal is infeasible: empty edge")
    if kind is ParamKind.MATCHING and flags.has_empty_edge:
        raise UnboundedParameter("matching is unbounded: empty edge")


def fractional_param(h: Hypergraph, kind: ParamKind) -> Fraction:
    """Exact optimal value of the covering/packing/matching/transversal LP."""
    _check_param_preconditions(h, kind)
    out = solve(parameter_lp(h, kind))
    if not out.is_optimal:
        raise AssertionError(f"solver returned {out.status} despite preconditions")
    return out.value


def _param_or_infinite(h: Hypergraph, kind: ParamKind) -> Fraction | None:
    """Like fractional_param, but returns None (read: +infinity) where the
    parameter degenerates: an infeasible minimisation or an unbounded
    maximisation. Used by the complementation identities, whose reciprocals
    extend continuously with 1/inf = 0."""
    try:
        return fractional_param(h, kind)
    except (InfeasibleParameter, UnboundedParameter):
        return None


def integer_param(h: Hypergraph, kind: ParamKind, max_enum: int = DEFAULT_MAX_ENUM) -> int:
    """Exact 0/1 optimum by subset search: covering/matching range over edge
    subsets, packing/transversal over vertex subsets."""
    _check_param_preconditions(h, kind)
    over_edges = kind in (ParamKind.COVERING, ParamKind.MATCHING)
    size = h.m if over_edges else h.n
    if 1 << size > max_enum:
        raise BudgetExceeded(f"2^{size} subsets exceed the budget of {max_enum}")

    if kind is ParamKind.COVERING:
        full = frozenset(range(h.n))
        for k in range(1, h.m + 1):
            for combo in combinations(range(h.m), k):
                if frozenset().union(*(h.edges[j] for j in combo)) == full:
                    return k
        raise AssertionError("no covering found despite preconditions")
    if kind is ParamKind.MATCHING:
        for k in range(h.m, 0, -1):
            for combo in combinations(range(h.m), k):
                if _pairwise_disjoint([h.edges[j] for j in combo]):
                    return k
        return 0
    if kind is ParamKind.PACKING:
        for k in range(h.n, 0, -1):
            for combo in combinations(range(h.n), k):
                s = frozenset(combo)
                if all(len(s & e) <= 1 for e in h.edges):
                    return k
        return 0
    if kind is ParamKind.TRANSVERSAL:
        for k in range(0, h.n + 1):
            for combo in combinations(range(h.n), k):
                s = frozenset(combo)
                if all(s & e for e in h.edges):
                    return k
        raise AssertionError("no transversal found despite preconditions")
    raise ValueError(f"unknown parameter kind {kind!r}")


def _pairwise_disjoint(sets) -> bool:
    seen: set[int] = set()
    for s in sets:
        if seen & s:
            return False
        seen |= s
    return True


def rho(h: Hypergraph, s) -> int:
    """Largest intersection of s with an edge of h."""
    s = frozenset(s)
    return max(len(s & e) for e in h.edges)


def rho_tilde(h: Hypergraph, z) -> int:
    """Least multiplicity, over all vertices, inside the edge subset z
    (z is a set of edge indices)."""
    z = frozenset(z)
    return min(sum(1 for j in z if v in h.edges[j]) for v in range(h.n))


class RatioBoundKind(Enum):
    ALPHA = "alpha"
    BETA = "beta"
    GAMMA = "gamma"


def ratio_bound(h: Hypergraph, kind: RatioBoundKind, max_enum: int = DEFAULT_MAX_ENUM) -> Fraction:
    """Exact extremum of the subset ratios bounding the fractional covering
    number: alpha maximises |S| / rho(S) over vertex sets with rho(S) > 0,
    beta minimises |Z| / rho~(Z) over edge subsets with rho~(Z) > 0, and
    gamma minimises |T| / (|T| - rho(T)) over vertex sets with |T| > rho(T).
    """
    over_edges = kind is RatioBoundKind.BETA
    size = h.m if over_edges else h.n
    if 1 << size > max_enum:
        raise BudgetExceeded(f"2^{size} subsets exceed the budget of {max_enum}")
    best: Fraction | None = None
    for mask in range(1, 1 << size):
        subset = frozenset(i for i in range(size) if mask >> i & 1)
        if kind is RatioBoundKind.ALPHA:
            r = rho(h, subset)
            if r > 0:
                val = Fraction(len(subset), r)
                if best is None or val > best:
                    best = val
        elif kind is RatioBoundKind.BETA:
            r = rho_tilde(h, subset)
            if r > 0:
                val = Fraction(len(subset), r)
                if best is None or val < best:
                    best = val
        else:
            r = rho(h, subset)
            if len(subset) > r:
                val = Fraction(len(subset), len(subset) - r)
                if best is None or val < best:
                    best = val
    if best is None:
        raise NoAdmissibleSubset(f"no admissible subset for {kind.value}")
    return best


def _reciprocal(x: Fraction | None) -> Fraction:
    return ZERO if x is None else ONE / x


@dataclass(frozen=True)
class IdentityCheck:
    """One reciprocal-sum identity: values on the dual and on the complement
    (None encodes an infinite parameter), their reciprocal sum, and whether
    it equals one exactly."""

    value_dual: Fraction | None
    value_complement: Fraction | None
    lhs: Fraction
    holds: bool


@dataclass(frozen=True)
class ComplementationIdentities:
    covering: IdentityCheck
    packing: IdentityCheck
    matching: IdentityCheck
    transversal: IdentityCheck

    @property
    def all_hold(self) -> bool:
        return all(
            c.holds for c in (self.covering, self.packing, self.matching, self.transversal)
        )


def verify_hypergraph_complementation(h: Hypergraph) -> ComplementationIdentities:
    """Check, for a nontrivial hypergraph, that each of the four fractional
    parameters satisfies 1/param(dual) + 1/param(complement) = 1 exactly."""
    if not classify(h).nontrivial:
        raise NotNontrivial("hypergraph has an empty edge or a universal vertex")
    hd = dual(h)
    hc = complement(h)
    checks = {}
    for kind in ParamKind:
        a = _param_or_infinite(hd, kind)
        b = _param_or_infinite(hc, kind)
        lhs = _reciprocal(a) + _reciprocal(b)
        checks[kind.value] = IdentityCheck(a, b, lhs, lhs == 1)
    return ComplementationIdentities(
        covering=checks["covering"],
        packing=checks["packing"],
        matching=checks["matching"],
        transversal=checks["transversal"],
    )


@dataclass(frozen=True)
class ChainReport:
    """The sandwich p <= alpha <= p_f = k_f <= beta <= k with all six
    quantities computed exactly."""

    p: int
    alpha: Fraction
    p_f: Fraction
    k_f: Fraction
    beta: Fraction
    k: int

    @property
    def holds(self) -> bool:
        return (
            self.p <= self.alpha
            and self.alpha <= self.p_f
            and self.p_f == self.k_f
            and self.k_f <= self.beta
            and self.beta <= self.k
        )


def verify_chain(h: Hypergraph, max_enum: int = DEFAULT_MAX_ENUM) -> ChainReport:
    if classify(h).has_isolated_vertex:
        raise InfeasibleParameter("chain needs a hypergraph without isolated vertices")
    return ChainReport(
        p=integer_param(h, ParamKind.PACKING, max_enum),
        alpha=ratio_bound(h, RatioBoundKind.ALPHA, max_enum),
        p_f=fractional_param(h, ParamKind.PACKING),
        k_f=fractional_param(h, ParamKind.COVERING),
        beta=ratio_bound(h, RatioBoundKind.BETA, max_enum),
        k=integer_param(h, ParamKind.COVERING, max_enum),
    )


@dataclass(frozen=True)
class AlphaBetaReport:
    alpha_of_complement: Fraction
    beta_of_dual: Fraction
    lhs: Fraction
    holds: bool


def verify_alpha_beta(h: Hypergraph, max_enum: int = DEFAULT_MAX_ENUM) -> AlphaBetaReport:
    """Check 1/alpha(complement(h)) + 1/beta(dual(h)) = 1 for nontrivial h."""
    if not classify(h).nontrivial:
        raise NotNontrivial("hypergraph has an empty edge or a universal vertex")
    a = ratio_bound(complement(h), RatioBoundKind.ALPHA, max_enum)
    b = ratio_bound(dual(h), RatioBoundKind.BETA, max_enum)
    lhs = ONE / a + ONE / b
    return AlphaBetaReport(a, b, lhs, lhs == 1)


def complement_of_matching_lp_is_covering_lp(h: Hypergraph) -> bool:
    """Structural fact behind the complementation theorem: complementing the
    matching LP of h yields exactly the covering LP of complement(h)."""
    return lp_complement(parameter_lp(h, ParamKind.MATCHING)) == parameter_lp(
        complement(h), ParamKind.COVERING
    )


# ---------------------------------------------------------------------------
# Hypergraph file format: line 1 `hypergraph <n>`, then one line per edge
# (space-separated vertex indices, or `-` for the empty edge). Duplicate
# lines encode multiset multiplicity.


def parse_hypergraph_text(text: str) -> Hypergraph:
    lines = _content_lines(text)
    if not lines:
        raise FileFormatError("empty hypergraph file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "hypergraph":
        raise FileFormatError(f"bad hypergraph header: {lines[0]!r}")
    try:
        n = int(head[1])
    except ValueError as exc:
        raise FileFormatError(f"bad vertex count: {lines[0]!r}") from exc
    if n < 1:
        raise FileFormatError("hypergraph needs at least one vertex")
    if len(lines) == 1:
        raise FileFormatError("hypergraph needs at least one edge line")
    edges = []
    for line in lines[1:]:
        if line == "-":
            edges.append(frozenset())
            continue
        try:
            verts = [int(p) for p in line.split()]
        except ValueError as exc:
            raise FileFormatError(f"bad edge line: {line!r}") from exc
        if any(v < 0 or v >= n for v in verts):
            raise FileFormatError(f"vertex out of range in edge line: {line!r}")
        edges.append(frozenset(verts))
    return Hypergraph(n, tuple(edges))


def hypergraph_to_text(h: Hypergraph) -> str:
    lines = [f"hypergraph {h.n}"]
    for e in h.edges:
        lines.append(" ".join(str(v) for v in sorted(e)) if e else "-")
    return "\n".join(lines) + "\n"
