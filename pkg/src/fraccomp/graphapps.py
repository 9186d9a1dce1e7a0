"""Graph applications: fractional domination, fractional chromatic numbers,
and vertex covers under a per-vertex budget.

Domination is the fractional transversal of a neighbourhood hypergraph.
The fractional chromatic number is the fractional covering number of the
hypergraph of maximal independent sets, and its companion invariant is the
fractional matching number of the minimal-vertex-cover hypergraph; restricting
to maximal/minimal members leaves both LP optima unchanged. The budgeted
cover number T_G(b) is computed by scanning c-fold chromatic numbers of
lexicographic products, with a certified family of covers extracted from an
optimal colouring.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import (
    DEFAULT_MAX_ENUM,
    BudgetExceeded,
    EmptyGraph,
    InUniversalVertex,
    NoTotalDominatingSet,
)
from .graphs import Digraph, Graph, is_bipartite
from .hypergraph import Hypergraph, ParamKind, fractional_param
from .ratlp import ONE


# ---------------------------------------------------------------------------
# Neighbourhood hypergraphs and fractional domination


@dataclass(frozen=True)
class NeighborhoodSpec:
    side: str  # "in" | "out"
    closure: str  # "open" | "closed"

    def __post_init__(self):
        if self.side not in ("in", "out") or self.closure not in ("open", "closed"):
            raise ValueError(f"bad neighbourhood spec ({self.side}, {self.closure})")


IN_OPEN = NeighborhoodSpec("in", "open")
IN_CLOSED = NeighborhoodSpec("in", "closed")
OUT_OPEN = NeighborhoodSpec("out", "open")
OUT_CLOSED = NeighborhoodSpec("out", "closed")


def neighborhood_hypergraph(d: Digraph, spec: NeighborhoodSpec) -> Hypergraph:
    """One edge per vertex v: its (open/closed) in- or out-neighbourhood.
    For (in, open) the incidence matrix is the adjacency matrix."""
    arcs = d.arc_set()
    edges = []
    for v in range(d.n):
        if spec.side == "in":
            nb = {u for u in range(d.n) if (u, v) in arcs}
        else:
            nb = {u for u in range(d.n) if (v, u) in arcs}
        if spec.closure == "closed":
            nb.add(v)
        edges.append(frozenset(nb))
    return Hypergraph(d.n, tuple(edges))


def digraph_complement(d: Digraph) -> Digraph:
    arcs = d.arc_set()
    comp = tuple(
        (u, v) for u in range(d.n) for v in range(d.n) if u != v and (u, v) not in arcs
    )
    return Digraph(d.n, comp)


def fractional_domination(d: Digraph, spec: NeighborhoodSpec) -> Fraction:
    """Fractional (total) domination number: the exact fractional transversal
    of the neighbourhood hypergraph."""
    h = neighborhood_hypergraph(d, spec)
    if spec.closure == "open" and any(not e for e in h.edges):
        empty = next(v for v, e in enumerate(h.edges) if not e)
        raise NoTotalDominatingSet(
            f"vertex {empty} has an empty {spec.side}-neighbourhood"
        )
    return fractional_param(h, ParamKind.TRANSVERSAL)


def has_in_universal_vertex(d: Digraph) -> bool:
    """A vertex lying in every closed in-neighbourhood, i.e. with arcs to
    all other vertices."""
    arcs = d.arc_set()
    return any(
        all(u == v or (v, u) in arcs for u in range(d.n)) for v in range(d.n)
    )


def is_tournament(d: Digraph) -> bool:
    arcs = d.arc_set()
    for u in range(d.n):
        for v in range(u + 1, d.n):
            if ((u, v) in arcs) == ((v, u) in arcs):
                return False
    return True


def regular_degree(d: Digraph) -> int | None:
    """The common in- and out-degree if d is regular, else None."""
    indeg = [0] * d.n
    outdeg = [0] * d.n
    for u, v in d.arcs:
        outdeg[u] += 1
        indeg[v] += 1
    degrees = set(indeg) | set(outdeg)
    return degrees.pop() if len(degrees) == 1 else None


@dataclass(frozen=True)
class DominationReport:
    """Fractional in-domination of d against fractional total out-domination
    of its complement, with the tournament and k-regular special cases when
    they apply."""

    gamma_in: Fraction
    big_gamma_out_of_complement: Fraction
    identity_lhs: Fraction
    identity_holds: bool
    tournament_big_gamma_in: Fraction | None = None
    tournament_identity_holds: bool | None = None
    regular_k: int | None = None
    regular_gamma_matches: bool | None = None
    regular_big_gamma_out: Fraction | None = None
    regular_big_gamma_matches: bool | None = None


def verify_domination(d: Digraph) -> DominationReport:
    if has_in_universal_vertex(d):
        raise InUniversalVertex("digraph has an in-universal vertex")
    gamma = fractional_domination(d, IN_CLOSED)
    big_gamma = fractional_domination(digraph_complement(d), OUT_OPEN)
    lhs = ONE / gamma + ONE / big_gamma
    report = {
        "gamma_in": gamma,
        "big_gamma_out_of_complement": big_gamma,
        "identity_lhs": lhs,
        "identity_holds": lhs == 1,
    }
    if is_tournament(d):
        big_in = fractional_domination(d, IN_OPEN)
        report["tournament_big_gamma_in"] = big_in
        report["tournament_identity_holds"] = ONE / gamma + ONE / big_in == 1
    k = regular_degree(d)
    if k is not None:
        report["regular_k"] = k
        report["regular_gamma_matches"] = gamma == Fraction(d.n, k + 1)
        if k >= 1:
            big_out = fractional_domination(d, OUT_OPEN)
            report["regular_big_gamma_out"] = big_out
            report["regular_big_gamma_matches"] = big_out == Fraction(d.n, k)
    return DominationReport(**report)


# ---------------------------------------------------------------------------
# Maximal independent sets, cliques, fractional chromatic number


def _bron_kerbosch(adj: list[set[int]], max_enum: int) -> list[frozenset[int]]:
    """All maximal cliques, deterministic order (sorted at the end)."""
    cliques: list[frozenset[int]] = []
    steps = 0

    def expand(r: set[int], p: set[int], x: set[int]) -> None:
        nonlocal steps
        steps += 1
        if steps > max_enum:
            raise BudgetExceeded(f"clique enumeration exceeded {max_enum} steps")
        if not p and not x:
            cliques.append(frozenset(r))
            return
        pivot = max(sorted(p | x), key=lambda u: len(p & adj[u]))
        for v in sorted(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p.remove(v)
            x.add(v)

    expand(set(), set(range(len(adj))), set())
    return sorted(cliques, key=sorted)


def maximal_cliques(g: Graph, max_enum: int = DEFAULT_MAX_ENUM) -> list[frozenset[int]]:
    return _bron_kerbosch(g.adjacency(), max_enum)


def maximal_independent_sets(g: Graph, max_enum: int = DEFAULT_MAX_ENUM) -> list[frozenset[int]]:
    """Maximal independent sets = maximal cliques of the complement graph."""
    allv = set(range(g.n))
    adj = g.adjacency()
    co_adj = [allv - adj[v] - {v} for v in range(g.n)]
    return _bron_kerbosch(co_adj, max_enum)


def clique_number(g: Graph, max_enum: int = DEFAULT_MAX_ENUM) -> int:
    return max(len(c) for c in maximal_cliques(g, max_enum))


def independence_number(g: Graph, max_enum: int = DEFAULT_MAX_ENUM) -> int:
    return max(len(s) for s in maximal_independent_sets(g, max_enum))


def minimal_vertex_covers(g: Graph, max_enum: int = DEFAULT_MAX_ENUM) -> list[frozenset[int]]:
    """Complements of the maximal independent sets."""
    allv = frozenset(range(g.n))
    return [allv - s for s in maximal_independent_sets(g, max_enum)]


def independent_set_hypergraph(g: Graph, max_enum: int = DEFAULT_MAX_ENUM) -> Hypergraph:
    return Hypergraph(g.n, tuple(maximal_independent_sets(g, max_enum)))


def vertex_cover_hypergraph(g: Graph, max_enum: int = DEFAULT_MAX_ENUM) -> Hypergraph:
    return Hypergraph(g.n, tuple(minimal_vertex_covers(g, max_enum)))


def fractional_chromatic(g: Graph, max_enum: int = DEFAULT_MAX_ENUM) -> Fraction:
    """Exact fractional chromatic number: fractional covering number over the
    maximal independent sets."""
    if not g.edges:
        raise EmptyGraph("fractional chromatic number needs at least one edge")
    return fractional_param(independent_set_hypergraph(g, max_enum), ParamKind.COVERING)


@dataclass(frozen=True)
class KappaReport:
    kappa: Fraction
    chi_f: Fraction
    identity_holds: bool


def kappa_f(g: Graph, max_enum: int = DEFAULT_MAX_ENUM) -> KappaReport:
    """Fractional matching number of the vertex-cover hypergraph, against the
    fractional chromatic number: their reciprocals sum to one."""
    if not g.edges:
        raise EmptyGraph("kappa_f needs at least one edge")
    kappa = fractional_param(vertex_cover_hypergraph(g, max_enum), ParamKind.MATCHING)
    chi_f = fractional_chromatic(g, max_enum)
    return KappaReport(kappa, chi_f, ONE / kappa + ONE / chi_f == 1)


@dataclass(frozen=True)
class KappaBoundsReport:
    n: int
    omega: int
    chi: int
    alpha: int
    kappa: Fraction
    lower: Fraction  # chi / (chi - 1)
    upper_alpha: Fraction  # n / (n - alpha)
    upper_omega: Fraction  # omega / (omega - 1)
    lower_ok: bool
    upper_alpha_ok: bool
    upper_omega_ok: bool
    log_bound_checked: bool
    log_bound_ok: bool | None


def kappa_bounds(g: Graph, max_enum: int = DEFAULT_MAX_ENUM) -> KappaBoundsReport:
    """The rational bounds on kappa_f, checked exactly, plus the logarithmic
    bound chi / (chi - 1 - ln alpha) checked in floating point (tol 1e-9)."""
    if not g.edges:
        raise EmptyGraph("kappa bounds need at least one edge")
    kappa = kappa_f(g, max_enum).kappa
    omega = clique_number(g, max_enum)
    alpha = independence_number(g, max_enum)
    chi = chromatic_number(g, max_enum)
    lower = Fraction(chi, chi - 1)
    upper_alpha = Fraction(g.n, g.n - alpha)
    upper_omega = Fraction(omega, omega - 1)
    denom = chi - 1 - math.log(alpha)
    if denom > 0:
        log_ok = float(kappa) <= chi / denom + 1e-9
    else:
        log_ok = None
    return KappaBoundsReport(
        n=g.n,
        omega=omega,
        chi=chi,
        alpha=alpha,
        kappa=kappa,
        lower=lower,
        upper_alpha=upper_alpha,
        upper_omega=upper_omega,
        lower_ok=lower <= kappa,
        upper_alpha_ok=kappa <= upper_alpha,
        upper_omega_ok=kappa <= upper_omega,
        log_bound_checked=denom > 0,
        log_bound_ok=log_ok,
    )


# ---------------------------------------------------------------------------
# Exact colouring, lexicographic products, c-fold chromatic numbers


def _dsatur_greedy(adj: list[set[int]]) -> tuple[int, list[int]]:
    n = len(adj)
    colors = [-1] * n
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] == -1),
            key=lambda u: (
                len({colors[w] for w in adj[u] if colors[w] != -1}),
                len(adj[u]),
                -u,
            ),
        )
        used = {colors[w] for w in adj[v] if colors[w] != -1}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return max(colors) + 1, colors


def _exact_coloring(g: Graph, max_enum: int) -> tuple[int, tuple[int, ...]]:
    """Exact chromatic number and an optimal colouring, by DSATUR
    branch-and-bound seeded with a maximum clique."""
    n = g.n
    adj = g.adjacency()
    if not g.edges:
        return 1, (0,) * n
    clique = max(maximal_cliques(g, max_enum), key=lambda c: (len(c), sorted(c)))
    ub, greedy = _dsatur_greedy(adj)
    if len(clique) == ub:
        return ub, tuple(greedy)

    colors = [-1] * n
    for i, v in enumerate(sorted(clique)):
        colors[v] = i
    best_k = ub
    best_col = tuple(greedy)
    steps = 0

    def select() -> int:
        return max(
            (u for u in range(n) if colors[u] == -1),
            key=lambda u: (
                len({colors[w] for w in adj[u] if colors[w] != -1}),
                len(adj[u]),
                -u,
            ),
        )

    def rec(uncolored: int, used: int) -> None:
        nonlocal best_k, best_col, steps
        steps += 1
        if steps > max_enum:
            raise BudgetExceeded(f"colouring search exceeded {max_enum} steps")
        if used >= best_k:
            return
        if uncolored == 0:
            best_k, best_col = used, tuple(colors)
            return
        v = select()
        neigh = {colors[w] for w in adj[v] if colors[w] != -1}
        for c in range(used):
            if c not in neigh:
                colors[v] = c
                rec(uncolored - 1, used)
                colors[v] = -1
        if used + 1 < best_k:
            colors[v] = used
            rec(uncolored - 1, used + 1)
            colors[v] = -1

    rec(n - len(clique), len(clique))
    return best_k, best_col


def chromatic_number(g: Graph, max_enum: int = DEFAULT_MAX_ENUM) -> int:
    return _exact_coloring(g, max_enum)[0]


def lexicographic_product(g: Graph, c: int) -> Graph:
    """g . K_c: c clones per vertex; clones of one vertex are pairwise
    adjacent, and adjacency is inherited between clone groups. Clone a of
    vertex v gets index v * c + a."""
    if c < 1:
        raise ValueError("clone count must be positive")
    edges = []
    for v in range(g.n):
        for a in range(c):
            for b in range(a + 1, c):
                edges.append((v * c + a, v * c + b))
    for u, v in g.edges:
        for a in range(c):
            for b in range(c):
                edges.append((u * c + a, v * c + b))
    return Graph(g.n * c, tuple(edges))


_CFOLD_CACHE: dict[tuple[Graph, int], tuple[int, tuple[int, ...]]] = {}


def _c_fold_coloring(g: Graph, c: int, max_enum: int) -> tuple[int, tuple[int, ...]]:
    key = (g, c)
    if key not in _CFOLD_CACHE:
        _CFOLD_CACHE[key] = _exact_coloring(lexicographic_product(g, c), max_enum)
    return _CFOLD_CACHE[key]


def c_fold_chromatic(g: Graph, c: int, max_enum: int = DEFAULT_MAX_ENUM) -> int:
    """chi_c(g) = chi(g . K_c), exact."""
    return _c_fold_coloring(g, c, max_enum)[0]


def kneser_graph(n: int, r: int) -> Graph:
    """r-subsets of an n-set (lexicographic order), adjacent iff disjoint.
    Requires n >= 2r so that disjoint pairs exist."""
    if r < 1 or n < 2 * r:
        raise ValueError("kneser graph needs 1 <= r and n >= 2r")
    verts = list(combinations(range(n), r))
    index = {s: i for i, s in enumerate(verts)}
    edges = []
    for i, s in enumerate(verts):
        ss = set(s)
        for t in verts[i + 1 :]:
            if not ss & set(t):
                edges.append((i, index[t]))
    return Graph(len(verts), tuple(edges))


# ---------------------------------------------------------------------------
# Vertex cover with budget


@dataclass(frozen=True)
class CoverFamily:
    covers: tuple[frozenset[int], ...]
    budget_used: int


@dataclass(frozen=True)
class BudgetCoverResult:
    t: int
    witness: CoverFamily


def budget_cover(g: Graph, b: int, max_enum: int = DEFAULT_MAX_ENUM) -> BudgetCoverResult:
    """Largest family of vertex covers in which no vertex appears more than b
    times: t = b + max {c >= 0 : chi_c(g) <= b + c}. The scan is valid since
    chi_c - c is nondecreasing in c. The witness family comes from an optimal
    colouring of g . K_c: each colour class projects to an independent set
    met by every vertex at least c times, and their complements are covers."""
    if b < 1:
        raise ValueError("budget must be a positive integer")
    if not g.edges:
        raise EmptyGraph("budgeted cover needs at least one edge")
    c = 1
    best_c = 0
    while True:
        chi_c = _c_fold_coloring(g, c, max_enum)[0]
        if chi_c <= b + c:
            best_c = c
            c += 1
        else:
            break
    t = b + best_c
    allv = frozenset(range(g.n))
    if best_c == 0:
        covers = tuple(allv for _ in range(t))
    else:
        _, coloring = _c_fold_coloring(g, best_c, max_enum)
        classes: list[set[int]] = [set() for _ in range(t)]
        for idx, col in enumerate(coloring):
            classes[col].add(idx // best_c)
        covers = tuple(allv - frozenset(j) for j in classes)

    counts = [sum(1 for s in covers if v in s) for v in range(g.n)]
    budget_used = max(counts) if counts else 0
    for s in covers:
        if any(u not in s and v not in s for u, v in g.edges):
            raise AssertionError("witness member is not a vertex cover")
    if budget_used > b or len(covers) != t:
        raise AssertionError("witness family violates the budget")
    return BudgetCoverResult(t, CoverFamily(covers, budget_used))


@dataclass(frozen=True)
class BudgetEntry:
    b: int
    t: int
    lower: int  # floor(chi/(chi-1) * b)
    upper: int  # floor(omega/(omega-1) * b)
    bounds_ok: bool
    ratio_le_kappa: bool
    iff_ok: bool  # (t >= b + c) <=> (chi_c <= b + c) for all c <= b


@dataclass(frozen=True)
class BudgetReport:
    chi: int
    omega: int
    kappa: Fraction
    bipartite: bool
    entries: tuple[BudgetEntry, ...]
    beta_found: int | None
    beta_window: int
    equivalence_consistent: bool

    @property
    def all_ok(self) -> bool:
        return all(e.bounds_ok and e.ratio_le_kappa and e.iff_ok for e in self.entries)


def verify_budget(g: Graph, b_max: int, max_enum: int = DEFAULT_MAX_ENUM) -> BudgetReport:
    """For b = 1..b_max check the floor bounds, the ratio against kappa_f and
    the iff-theorem; search the kappa-attaining budget beta in a finite
    window; check the four-way bipartite equivalence."""
    if not g.edges:
        raise EmptyGraph("budget verification needs at least one edge")
    chi = chromatic_number(g, max_enum)
    omega = clique_number(g, max_enum)
    kappa = kappa_f(g, max_enum).kappa

    def t_of(b: int) -> int:
        return budget_cover(g, b, max_enum).t

    entries = []
    for b in range(1, b_max + 1):
        t = t_of(b)
        lower = math.floor(Fraction(chi, chi - 1) * b)
        upper = math.floor(Fraction(omega, omega - 1) * b)
        iff_ok = all(
            (t >= b + c) == (c_fold_chromatic(g, c, max_enum) <= b + c)
            for c in range(1, b + 1)
        )
        entries.append(
            BudgetEntry(
                b=b,
                t=t,
                lower=lower,
                upper=upper,
                bounds_ok=lower <= t <= upper,
                ratio_le_kappa=Fraction(t, b) <= kappa,
                iff_ok=iff_ok,
            )
        )

    window = 4 * kappa.denominator
    beta_found = None
    for b in range(1, window + 1):
        if t_of(b) == kappa * b:
            beta_found = b
            break

    bip = is_bipartite(g)
    exists_2b = any(e.t == 2 * e.b for e in entries)
    all_2b = all(e.t == 2 * e.b for e in entries)
    consistent = ((kappa == 2) == bip) and (exists_2b == bip) and (all_2b == bip)
    return BudgetReport(
        chi=chi,
        omega=omega,
        kappa=kappa,
        bipartite=bip,
        entries=tuple(entries),
        beta_found=beta_found,
        beta_window=window,
        equivalence_consistent=consistent,
    )
