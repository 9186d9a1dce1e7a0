"""Matroids given by explicit basis lists; edge toughness; cycle matroids.

A matroid is stored extensionally as its set of bases. Its rank function is
read straight off the basis hypergraph (largest intersection with a basis),
the dual matroid complements every basis, and edge toughness is the exact
minimum of |V \\ S| / (rank(V) - rank(S)) over subsets enumerated in full.
Cycle matroids of connected graphs list all spanning trees.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DEFAULT_MAX_ENUM,
    BudgetExceeded,
    Disconnected,
    ExchangeAxiomViolated,
    NoEdges,
    RankZero,
    TrivialMatroid,
    UnequalBasisSizes,
)
from .graphs import Graph, component_count, is_connected
from .hypergraph import (
    Hypergraph,
    ParamKind,
    RatioBoundKind,
    dual as hypergraph_dual,
    fractional_param,
    ratio_bound,
)
from .hypergraph import complement as hypergraph_complement


@dataclass(frozen=True)
class Matroid:
    """Ground set 0..n-1 with an explicit, deduplicated list of bases."""

    n: int
    bases: tuple[frozenset[int], ...]
    rank: int

    def __post_init__(self):
        if not self.bases:
            raise ValueError("matroid needs at least one basis")
        if any(len(b) != self.rank for b in self.bases):
            raise ValueError("stored rank disagrees with basis sizes")


def from_bases(h: Hypergraph, validate: bool = False) -> Matroid:
    """Build a matroid from a basis hypergraph. Bases must be nonempty and
    equicardinal; duplicates collapse. With validate=True the basis exchange
    axiom is checked in full."""
    sizes = {len(e) for e in h.edges}
    if len(sizes) != 1 or 0 in sizes:
        raise UnequalBasisSizes(f"basis sizes {sorted(sizes)} are not one nonzero value")
    rank = sizes.pop()
    bases = tuple(sorted(set(h.edges), key=sorted))
    if validate:
        _check_exchange_axiom(bases)
    return Matroid(h.n, bases, rank)


def _check_exchange_axiom(bases: tuple[frozenset[int], ...]) -> None:
    base_set = set(bases)
    for b1 in bases:
        for b2 in bases:
            for x in b1 - b2:
                if not any((b1 - {x}) | {y} in base_set for y in b2 - b1):
                    raise ExchangeAxiomViolated(
                        f"no exchange for {x} between {sorted(b1)} and {sorted(b2)}"
                    )


def basis_hypergraph(m: Matroid) -> Hypergraph:
    return Hypergraph(m.n, m.bases)


def rank(m: Matroid, s) -> int:
    """Rank of a subset: largest intersection with a basis."""
    s = frozenset(s)
    if any(v < 0 or v >= m.n for v in s):
        raise ValueError("subset contains an out-of-range element")
    return max(len(s & b) for b in m.bases)


def matroid_dual(m: Matroid) -> Matroid:
    """Dual matroid: complement every basis within the ground set."""
    full = frozenset(range(m.n))
    bases = tuple(sorted({full - b for b in m.bases}, key=sorted))
    return Matroid(m.n, bases, m.n - m.rank)


def has_coloop(m: Matroid) -> bool:
    """A coloop is an element belonging to every basis."""
    common = frozenset(range(m.n))
    for b in m.bases:
        common &= b
        if not common:
            return False
    return bool(common)


def has_loop(m: Matroid) -> bool:
    """A loop is an element belonging to no basis."""
    union: set[int] = set()
    for b in m.bases:
        union |= b
    return len(union) < m.n


def edge_toughness_matroid(m: Matroid, max_enum: int = DEFAULT_MAX_ENUM) -> Fraction:
    """sigma'(M) = min |V \\ S| / (rank(V) - rank(S)) over subsets S whose
    rank falls below the full rank, by complete enumeration."""
    if m.rank == 0:
        raise RankZero("every subset has rank zero")
    if 1 << m.n > max_enum:
        raise BudgetExceeded(f"2^{m.n} subsets exceed the budget of {max_enum}")
    full_rank = m.rank
    best: Fraction | None = None
    for mask in range(1 << m.n):
        s = frozenset(i for i in range(m.n) if mask >> i & 1)
        r = rank(m, s)
        if r < full_rank:
            val = Fraction(m.n - len(s), full_rank - r)
            if best is None or val < best:
                best = val
    assert best is not None  # S = empty set always qualifies when rank > 0
    return best


def spanning_trees(g: Graph, max_enum: int = DEFAULT_MAX_ENUM) -> list[tuple[int, ...]]:
    """All spanning trees as sorted edge-index tuples, by recursive
    include/exclude over the edge list with connectivity pruning."""
    n, edges, m = g.n, g.edges, g.m
    trees: list[tuple[int, ...]] = []
    steps = 0

    def find(parent: list[int], x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def connectable(i: int, parent: list[int]) -> bool:
        q = list(parent)
        for j in range(i, m):
            u, v = edges[j]
            ru, rv = find(q, u), find(q, v)
            if ru != rv:
                q[ru] = rv
        root = find(q, 0)
        return all(find(q, v) == root for v in range(n))

    def rec(i: int, parent: list[int], ncomp: int, chosen: list[int]) -> None:
        nonlocal steps
        steps += 1
        if steps > max_enum:
            raise BudgetExceeded(f"spanning tree search exceeded {max_enum} steps")
        if ncomp == 1:
            trees.append(tuple(chosen))
            return
        if i == m or not connectable(i, parent):
            return
        u, v = edges[i]
        ru, rv = find(parent, u), find(parent, v)
        if ru != rv:
            merged = list(parent)
            merged[ru] = rv
            chosen.append(i)
            rec(i + 1, merged, ncomp - 1, chosen)
            chosen.pop()
        rec(i + 1, parent, ncomp, chosen)

    rec(0, list(range(n)), n, [])
    return trees


def cycle_matroid(g: Graph, max_enum: int = DEFAULT_MAX_ENUM) -> Matroid:
    """Matroid on the edge list of a connected graph whose bases are the
    spanning trees."""
    if not g.edges:
        raise NoEdges("cycle matroid needs at least one edge")
    if not is_connected(g):
        raise Disconnected("cycle matroid is built for connected graphs only")
    trees = spanning_trees(g, max_enum)
    h = Hypergraph(g.m, tuple(frozenset(t) for t in trees))
    return from_bases(h)


def edge_toughness_graph(g: Graph, max_enum: int = DEFAULT_MAX_ENUM) -> Fraction:
    """sigma'(G) = min |Z| / (c(G - Z) - 1) over edge subsets Z whose removal
    disconnects the graph."""
    if not g.edges:
        raise NoEdges("edge toughness needs at least one edge")
    if 1 << g.m > max_enum:
        raise BudgetExceeded(f"2^{g.m} edge subsets exceed the budget of {max_enum}")
    best: Fraction | None = None
    for mask in range(1 << g.m):
        kept = [g.edges[j] for j in range(g.m) if not mask >> j & 1]
        c = component_count(g.n, kept)
        if c > 1:
            removed = g.m - len(kept)
            val = Fraction(removed, c - 1)
            if best is None or val < best:
                best = val
    if best is None:
        raise NoEdges("graph cannot be disconnected by edge removal")
    return best


def has_cut_edge(g: Graph) -> bool:
    for j in range(g.m):
        kept = [g.edges[i] for i in range(g.m) if i != j]
        if component_count(g.n, kept) > component_count(g.n, g.edges):
            return True
    return False


@dataclass(frozen=True)
class MatroidTheoremReport:
    """mu_f = tau_f = sigma' on the basis hypergraph, plus the two supporting
    identities: k_f equals the alpha bound (skipped when loops make the
    covering LP infeasible) and sigma' equals beta of the dual hypergraph."""

    mu_f: Fraction
    tau_f: Fraction
    sigma: Fraction
    equal: bool
    k_f: Fraction | None
    alpha: Fraction | None
    k_f_reaches_alpha: bool | None
    beta_of_dual: Fraction
    sigma_equals_beta: bool


def verify_matroid_theorem(m: Matroid, max_enum: int = DEFAULT_MAX_ENUM) -> MatroidTheoremReport:
    if m.rank == 0:
        raise TrivialMatroid("rank zero")
    if has_coloop(m):
        raise TrivialMatroid("matroid has a coloop")
    h = basis_hypergraph(m)
    mu = fractional_param(h, ParamKind.MATCHING)
    tau = fractional_param(h, ParamKind.TRANSVERSAL)
    sigma = edge_toughness_matroid(m, max_enum)
    if has_loop(m):
        k_f = alpha = reaches = None
    else:
        k_f = fractional_param(h, ParamKind.COVERING)
        alpha = ratio_bound(h, RatioBoundKind.ALPHA, max_enum)
        reaches = k_f == alpha
    beta = ratio_bound(hypergraph_dual(h), RatioBoundKind.BETA, max_enum)
    return MatroidTheoremReport(
        mu_f=mu,
        tau_f=tau,
        sigma=sigma,
        equal=mu == tau == sigma,
        k_f=k_f,
        alpha=alpha,
        k_f_reaches_alpha=reaches,
        beta_of_dual=beta,
        sigma_equals_beta=sigma == beta,
    )


def dual_rank_formula_holds(m: Matroid) -> bool:
    """Check rank_dual(T) = |T| - rank(V) + rank(V \\ T) on all subsets."""
    md = matroid_dual(m)
    full = frozenset(range(m.n))
    full_rank = rank(m, full)
    for mask in range(1 << m.n):
        t = frozenset(i for i in range(m.n) if mask >> i & 1)
        if rank(md, t) != len(t) - full_rank + rank(m, full - t):
            return False
    return True


def matroid_complement_hypergraph(m: Matroid) -> Hypergraph:
    """Basis hypergraph of the dual matroid, via hypergraph complementation."""
    return hypergraph_complement(basis_hypergraph(m))
