"""Simple undirected graphs with adjacency lists and BFS-based metrics.

Vertex ids are exactly 0..n-1.  Graphs are immutable after construction and
safe to share across workers.  Distances are "extended naturals": plain ints
plus ``math.inf`` for unreachable pairs.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable

INF = math.inf


class ParseError(ValueError):
    """Malformed graph input (edge list or graph6)."""


class NotSubcubicError(ValueError):
    """Operation requires maximum degree at most 3."""


class NotTreeError(ValueError):
    """Operation requires a tree."""


class Graph:
    """Finite simple undirected graph: vertex count plus sorted adjacency."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(s)) for s in adj
        )

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.adj == other.adj
        )

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()!r})"


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def parse_edge_list(text: str) -> Graph:
    """Parse whitespace-separated "u v" lines; '#' starts a comment.

    An optional first data line "n <k>" fixes the vertex count; otherwise it
    is one more than the largest id seen.
    """
    declared_n: int | None = None
    edges: list[tuple[int, int]] = []
    max_id = -1
    saw_data = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if not saw_data and tokens[0] == "n":
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise ParseError(f"line {lineno}: malformed header {line!r}")
            declared_n = int(tokens[1])
            saw_data = True
            continue
        saw_data = True
        if len(tokens) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"line {lineno}: malformed token in {line!r}") from None
        if u < 0 or v < 0:
            raise ParseError(f"line {lineno}: negative vertex id in {line!r}")
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {u}")
        if declared_n is not None and (u >= declared_n or v >= declared_n):
            raise ParseError(
                f"line {lineno}: vertex id >= declared n={declared_n}"
            )
        edges.append((u, v))
        max_id = max(max_id, u, v)
    n = declared_n if declared_n is not None else max_id + 1
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def bfs_distances(g: Graph, source: int) -> list:
    """Distances from source to every vertex; math.inf where unreachable."""
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range")
    dist = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adj
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in adj[u]:
            if dist[v] is INF:
                dist[v] = du
                queue.append(v)
    return dist


def bfs_distances_excluding(g: Graph, source: int, blocked) -> list:
    """BFS distances in the subgraph with ``blocked`` vertices removed.

    The source must not be blocked; blocked vertices report math.inf.
    """
    dist = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adj
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in adj[u]:
            if dist[v] is INF and v not in blocked:
                dist[v] = du
                queue.append(v)
    return dist


def all_pairs_distances(g: Graph) -> list[list]:
    return [bfs_distances(g, u) for u in range(g.n)]


def diameter(g: Graph):
    """Largest distance between any two vertices; inf iff disconnected."""
    if g.n < 1:
        raise ValueError("diameter needs at least one vertex")
    best = 0
    for u in range(g.n):
        dist = bfs_distances(g, u)
        worst = max(dist)
        if worst is INF:
            return INF
        best = max(best, worst)
    return best


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return len(connected_components(g)) == 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and is_connected(g) and g.edge_count() == g.n - 1


def is_subcubic(g: Graph) -> bool:
    return g.max_degree() <= 3


def is_subcubic_tree(g: Graph) -> bool:
    return is_tree(g) and is_subcubic(g)


def degree_partition(g: Graph):
    """Split vertices by degree into (V1, V2, V3) for a subcubic graph.

    Degree-0 vertices land in V1: a vertex of degree at most 1 counts as an
    endvertex.
    """
    v1, v2, v3 = set(), set(), set()
    for u in range(g.n):
        d = g.degree(u)
        if d <= 1:
            v1.add(u)
        elif d == 2:
            v2.add(u)
        elif d == 3:
            v3.add(u)
        else:
            raise NotSubcubicError(f"vertex {u} has degree {d}")
    return frozenset(v1), frozenset(v2), frozenset(v3)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, list]:
    """Subgraph induced on ``keep``; returns it plus the old->new id map.

    The map is a list of length g.n with None for dropped vertices; kept
    vertices are renumbered in increasing id order.
    """
    kept = sorted(set(keep))
    old_to_new: list = [None] * g.n
    for new, old in enumerate(kept):
        old_to_new[old] = new
    edges = [
        (old_to_new[u], old_to_new[v])
        for u, v in g.edges()
        if old_to_new[u] is not None and old_to_new[v] is not None
    ]
    return Graph(len(kept), edges), old_to_new


def delete_vertices(g: Graph, removed: Iterable[int]) -> tuple[Graph, list]:
    removed = set(removed)
    return induced_subgraph(g, (v for v in range(g.n) if v not in removed))


def add_pendant_path(g: Graph, attach: int, length: int) -> Graph:
    """New graph with a path of ``length`` fresh vertices hung on ``attach``."""
    if not 0 <= attach < g.n:
        raise ValueError(f"attach vertex {attach} out of range")
    edges = g.edges()
    prev = attach
    for i in range(length):
        new = g.n + i
        edges.append((prev, new))
        prev = new
    return Graph(g.n + length, edges)


def relabel(g: Graph, order: list[int]) -> Graph:
    """Graph with vertex order[i] renamed to i."""
    pos = [0] * g.n
    for new, old in enumerate(order):
        pos[old] = new
    return Graph(g.n, [(pos[u], pos[v]) for u, v in g.edges()])
