"""Simple loopless graphs and digraphs, file parsing, basic connectivity.

Graphs keep their edges in construction order (the cycle-matroid ground set
is the edge list), stored as (min, max) pairs with duplicates rejected.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FileFormatError


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        norm = []
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            norm.append(e)
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        norm = []
        if self.n < 1:
            raise ValueError("digraph needs at least one vertex")
        for u, v in self.arcs:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"arc ({u}, {v}) out of range")
            if (u, v) in seen:
                raise ValueError(f"duplicate arc ({u}, {v})")
            seen.add((u, v))
            norm.append((u, v))
        object.__setattr__(self, "arcs", tuple(norm))

    def arc_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.arcs)


def graph_to_digraph(g: Graph) -> Digraph:
    """Symmetric digraph: each edge becomes a pair of opposite arcs."""
    arcs = []
    for u, v in g.edges:
        arcs.append((u, v))
        arcs.append((v, u))
    return Digraph(g.n, tuple(arcs))


def components(n: int, edges) -> list[set[int]]:
    """Connected components under an edge list, via union-find."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[int, set[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), set()).add(v)
    return list(groups.values())


def component_count(n: int, edges) -> int:
    return len(components(n, edges))


def is_connected(g: Graph) -> bool:
    return component_count(g.n, g.edges) == 1


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    adj = g.adjacency()
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop()
            for w in adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


# ---------------------------------------------------------------------------
# Graph file formats. Native: line 1 `graph <n>` or `digraph <n>`, then one
# `u v` line per edge/arc (0-indexed); '#' comments. DIMACS: `c` comments,
# `p edge <n> <m>`, then `e u v` lines (1-indexed).


def _strip_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def parse_graph_text(text: str) -> Graph | Digraph:
    lines = _strip_lines(text)
    if not lines:
        raise FileFormatError("empty graph file")
    if lines[0].startswith(("c ", "c\t", "p ")) or lines[0] == "c":
        return _parse_dimacs(lines)
    head = lines[0].split()
    if len(head) != 2 or head[0] not in ("graph", "digraph"):
        raise FileFormatError(f"bad graph header: {lines[0]!r}")
    try:
        n = int(head[1])
    except ValueError as exc:
        raise FileFormatError(f"bad vertex count: {lines[0]!r}") from exc
    pairs = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise FileFormatError(f"bad edge line: {line!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise FileFormatError(f"bad edge line: {line!r}") from exc
    try:
        if head[0] == "graph":
            return Graph(n, tuple(pairs))
        return Digraph(n, tuple(pairs))
    except ValueError as exc:
        raise FileFormatError(str(exc)) from exc


def _parse_dimacs(lines: list[str]) -> Graph:
    n = None
    pairs = []
    for line in lines:
        parts = line.split()
        if parts[0] == "c":
            continue
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "edge":
                raise FileFormatError(f"bad DIMACS problem line: {line!r}")
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise FileFormatError("DIMACS edge before problem line")
            if len(parts) != 3:
                raise FileFormatError(f"bad DIMACS edge line: {line!r}")
            pairs.append((int(parts[1]) - 1, int(parts[2]) - 1))
        else:
            raise FileFormatError(f"unrecognised DIMACS line: {line!r}")
    if n is None:
        raise FileFormatError("DIMACS file has no problem line")
    try:
        return Graph(n, tuple(pairs))
    except ValueError as exc:
        raise FileFormatError(str(exc)) from exc


def graph_to_text(g: Graph) -> str:
    lines = [f"graph {g.n}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def digraph_to_text(d: Digraph) -> str:
    lines = [f"digraph {d.n}"] + [f"{u} {v}" for u, v in d.arcs]
    return "\n".join(lines) + "\n"
