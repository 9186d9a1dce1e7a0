"""Seeded corpora shared by the module and acceptance tests."""

import random
from fractions import Fraction
from itertools import combinations

from fraccomp.graphs import Digraph, Graph
from fraccomp.hypergraph import Hypergraph
from fraccomp.matroid import Matroid, from_bases, has_coloop, has_loop
from fraccomp.ratlp import LinearProgram, RationalMatrix, Sense
from fraccomp.graphapps import has_in_universal_vertex, kneser_graph


def random_max_lps(seed: int, count: int, max_dim: int = 6) -> list[LinearProgram]:
    """Maximisation LPs with integer entries in [-3, 3] and rhs in [1, 3]."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        m = rng.randint(1, max_dim)
        n = rng.randint(1, max_dim)
        obj = tuple(Fraction(rng.randint(-3, 3)) for _ in range(n))
        rhs = tuple(Fraction(rng.randint(1, 3)) for _ in range(m))
        rows = [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(m)]
        out.append(LinearProgram(Sense.MAX, obj, RationalMatrix.from_rows(rows), rhs))
    return out


def random_hypergraphs(seed: int, count: int, max_n: int = 8, max_m: int = 8) -> list[Hypergraph]:
    """Arbitrary hypergraphs: empty edges, duplicates and isolated vertices
    all allowed, to exercise multiset semantics."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        m = rng.randint(1, max_m)
        edges = []
        for _ in range(m):
            edges.append(frozenset(v for v in range(n) if rng.random() < 0.45))
        out.append(Hypergraph(n, tuple(edges)))
    return out


def random_digraphs(seed: int, count: int, max_n: int = 6) -> list[Digraph]:
    """Loopless digraphs without in-universal vertices."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, max_n)
        arcs = tuple(
            (u, v) for u in range(n) for v in range(n) if u != v and rng.random() < 0.5
        )
        d = Digraph(n, arcs)
        if not has_in_universal_vertex(d):
            out.append(d)
    return out


def random_games(seed: int, count: int, size: int = 3):
    """Nondegenerate [0,1]-payoff matrix games (value strictly inside (0,1))."""
    from fraccomp.errors import DegenerateGame
    from fraccomp.lpcomp import MatrixGame, game_value

    rng = random.Random(seed)
    out = []
    while len(out) < count:
        m = rng.randint(1, size)
        n = rng.randint(1, size)
        rows = [
            [Fraction(rng.randint(0, 6), 6) for _ in range(n)] for _ in range(m)
        ]
        game = MatrixGame(RationalMatrix.from_rows(rows))
        try:
            game_value(game)
        except DegenerateGame:
            continue
        out.append(game)
    return out


def _gf2_rank(cols: list[int]) -> int:
    rank = 0
    basis: list[int] = []
    for c in cols:
        for b in basis:
            c = min(c, c ^ b)
        if c:
            basis.append(c)
            basis.sort(reverse=True)
            rank += 1
    return rank


def random_matroids(seed: int, count: int, max_n: int = 6) -> list[Matroid]:
    """Binary matroids from random GF(2) matrices: always valid, kept only
    when loopless, coloop-free and of positive rank."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, max_n)
        r = rng.randint(1, n - 1)
        cols = [rng.randint(1, (1 << r) - 1) for _ in range(n)]
        rank = _gf2_rank(cols)
        if rank == 0:
            continue
        bases = [
            frozenset(s)
            for s in combinations(range(n), rank)
            if _gf2_rank([cols[i] for i in s]) == rank
        ]
        h = Hypergraph(n, tuple(bases))
        m = from_bases(h, validate=True)
        if has_loop(m) or has_coloop(m):
            continue
        out.append(m)
    return out


# Fixed fixtures ------------------------------------------------------------


def cycle_graph(n: int) -> Graph:
    return Graph(n, tuple((v, (v + 1) % n) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((v, v + 1) for v in range(n - 1)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def petersen() -> Graph:
    return kneser_graph(5, 2)


def triangle_hypergraph() -> Hypergraph:
    return Hypergraph(3, (frozenset({0, 1}), frozenset({0, 2}), frozenset({1, 2})))


def c5_edge_hypergraph() -> Hypergraph:
    return Hypergraph(5, tuple(frozenset({v, (v + 1) % 5}) for v in range(5)))


def connected_graphs_atlas(max_n: int = 6) -> list[Graph]:
    """All connected graphs with at least one edge and at most max_n
    vertices, one per isomorphism class, from the networkx atlas."""
    import networkx as nx
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for G in graph_atlas_g():
        n = G.number_of_nodes()
        if 1 <= n <= max_n and G.number_of_edges() >= 1 and nx.is_connected(G):
            edges = tuple(sorted(tuple(sorted(e)) for e in G.edges()))
            out.append(Graph(n, edges))
    return out
