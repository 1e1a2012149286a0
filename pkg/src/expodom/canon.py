"""Canonical forms for trees.

Center-rooted AHU encodings: two trees get the same code exactly when they
are isomorphic.  The same machinery yields a canonical relabeling (used to
emit deterministic representatives), explicit isomorphism maps between trees,
and automorphism counts (used by the labeled-count enumeration oracle).
"""

from __future__ import annotations

import math
from collections import deque

from .graph import Graph, NotTreeError, is_tree, relabel


def tree_centers(g: Graph) -> list[int]:
    """The one or two middle vertices obtained by repeatedly peeling leaves."""
    n = g.n
    if n == 1:
        return [0]
    deg = [g.degree(v) for v in range(n)]
    leaves = [v for v in range(n) if deg[v] <= 1]
    removed = len(leaves)
    while removed < n:
        nxt = []
        for u in leaves:
            deg[u] = 0
            for v in g.adj[u]:
                if deg[v] > 0:
                    deg[v] -= 1
                    if deg[v] == 1:
                        nxt.append(v)
        removed += len(nxt)
        leaves = nxt
    return sorted(leaves)


def _rooted_code(g: Graph, root: int, parent: int) -> bytes:
    children = [v for v in g.adj[root] if v != parent]
    if not children:
        return b"()"
    codes = sorted(_rooted_code(g, v, root) for v in children)
    return b"(" + b"".join(codes) + b")"


def rooted_code(g: Graph, root: int) -> bytes:
    """AHU code of the tree rooted at ``root``; identifies (tree, root) up to
    rooted isomorphism, so it doubles as a vertex-orbit key."""
    if not is_tree(g):
        raise NotTreeError("rooted codes are defined for trees only")
    return _rooted_code(g, root, -1)


def _best_root(g: Graph) -> tuple[bytes, int]:
    best_code = None
    best_root = -1
    for c in tree_centers(g):
        code = _rooted_code(g, c, -1)
        if best_code is None or code < best_code:
            best_code, best_root = code, c
    return best_code, best_root


def canonical_code(g: Graph) -> bytes:
    """Isomorphism-invariant code: equal codes iff isomorphic trees."""
    if not is_tree(g):
        raise NotTreeError("canonical codes are defined for trees only")
    return _best_root(g)[0]


def canonical_order(g: Graph) -> tuple[bytes, list[int]]:
    """Canonical code plus a relabeling order (order[new_id] = old_id).

    Applying the order with ``relabel`` produces the same adjacency for any
    two isomorphic input trees.
    """
    if not is_tree(g):
        raise NotTreeError("canonical order is defined for trees only")
    code, root = _best_root(g)
    sub: dict[tuple[int, int], bytes] = {}

    def fill(u: int, parent: int) -> bytes:
        children = [v for v in g.adj[u] if v != parent]
        c = b"(" + b"".join(sorted(fill(v, u) for v in children)) + b")"
        sub[(u, parent)] = c
        return c

    fill(root, -1)
    order = []
    queue = deque([(root, -1)])
    while queue:
        u, parent = queue.popleft()
        order.append(u)
        children = sorted(
            (v for v in g.adj[u] if v != parent),
            key=lambda v: sub[(v, u)],
        )
        queue.extend((v, u) for v in children)
    return code, order


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of the tree's isomorphism class."""
    _, order = canonical_order(g)
    return relabel(g, order)


def tree_isomorphism_map(a: Graph, b: Graph):
    """A vertex map list m with m[v_in_a] = v_in_b, or None if not isomorphic."""
    if a.n != b.n:
        return None
    code_a, order_a = canonical_order(a)
    code_b, order_b = canonical_order(b)
    if code_a != code_b:
        return None
    mapping = [0] * a.n
    for i in range(a.n):
        mapping[order_a[i]] = order_b[i]
    return mapping


def _rooted_aut(g: Graph, root: int, parent: int) -> tuple[bytes, int]:
    children = [v for v in g.adj[root] if v != parent]
    if not children:
        return b"()", 1
    pairs = sorted(_rooted_aut(g, v, root) for v in children)
    count = 1
    run = 1
    for i, (code, aut) in enumerate(pairs):
        count *= aut
        if i > 0 and code == pairs[i - 1][0]:
            run += 1
        else:
            run = 1
        count *= run
    return b"(" + b"".join(code for code, _ in pairs) + b")", count


def automorphism_count(g: Graph) -> int:
    """Order of the automorphism group of a tree."""
    if not is_tree(g):
        raise NotTreeError("automorphism counts implemented for trees only")
    centers = tree_centers(g)
    if len(centers) == 1:
        return _rooted_aut(g, centers[0], -1)[1]
    c1, c2 = centers
    code1, aut1 = _rooted_aut(g, c1, c2)
    code2, aut2 = _rooted_aut(g, c2, c1)
    if code1 == code2:
        return 2 * aut1 * aut2
    return aut1 * aut2


def labeled_copies(g: Graph) -> int:
    """Number of distinct labeled trees isomorphic to ``g`` (n!/|Aut|)."""
    return math.factorial(g.n) // automorphism_count(g)
