"""Exhaustive enumeration of non-isomorphic subcubic trees.

The generator walks all rooted-tree level sequences (Beyer-Hedetniemi
successor order), filters to maximum degree 3, and deduplicates with the
canonical tree code.  Its correctness is anchored by two independent
Prufer-sequence oracles rather than by trusting the generator:

* a literal oracle that decodes every degree-bounded Prufer sequence and
  deduplicates the resulting labeled trees by canonical code, and
* a counting oracle using the Prufer bijection: the number of labeled trees
  with all degrees <= 3 must equal the sum of n!/|Aut(T)| over the
  enumerated isomorphism classes.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterator

from .canon import canonical_code, canonical_graph, labeled_copies
from .graph import Graph


def rooted_level_sequences(n: int) -> Iterator[list[int]]:
    """Level sequences of all rooted trees on n nodes, root at level 1."""
    if n < 1:
        return
    levels = list(range(1, n + 1))
    while True:
        yield levels[:]
        p = -1
        for i in range(n - 1, -1, -1):
            if levels[i] > 2:
                p = i
                break
        if p < 0:
            return
        q = -1
        for i in range(p - 1, -1, -1):
            if levels[i] == levels[p] - 1:
                q = i
                break
        span = p - q
        for i in range(p, n):
            levels[i] = levels[i - span]


def tree_from_level_sequence(levels: list[int]) -> Graph:
    n = len(levels)
    edges = []
    latest: dict[int, int] = {}
    for i, lvl in enumerate(levels):
        if i:
            edges.append((latest[lvl - 1], i))
        latest[lvl] = i
    return Graph(n, edges)


@lru_cache(maxsize=None)
def _subcubic_trees_cached(n: int) -> tuple[Graph, ...]:
    seen: dict[bytes, Graph] = {}
    for levels in rooted_level_sequences(n):
        t = tree_from_level_sequence(levels)
        if t.max_degree() > 3:
            continue
        code = canonical_code(t)
        if code not in seen:
            seen[code] = canonical_graph(t)
    return tuple(seen[code] for code in sorted(seen))


def enumerate_subcubic_trees(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class, sorted by code."""
    if n < 1:
        raise ValueError("tree order must be at least 1")
    return iter(_subcubic_trees_cached(n))


def count_subcubic_trees(n: int) -> int:
    return len(_subcubic_trees_cached(n))


def trees_up_to(n_max: int) -> Iterator[Graph]:
    for n in range(1, n_max + 1):
        yield from enumerate_subcubic_trees(n)


# -- Prufer oracles ----------------------------------------------------------


def tree_from_pruefer(seq: tuple[int, ...], n: int) -> Graph:
    """Decode a Prufer sequence over labels 0..n-1 (length n-2) to a tree."""
    if n == 1:
        return Graph(1)
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    # pointer scan: the smallest-id leaf pairs with the next sequence entry
    ptr = 0
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    edges = []
    for v in seq:
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1 and v < ptr:
            leaf = v
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return Graph(n, edges)


def _bounded_sequences(n: int, length: int) -> Iterator[tuple[int, ...]]:
    """All sequences over 0..n-1 where no label appears more than twice."""
    counts = [0] * n
    seq: list[int] = []

    def rec(pos: int) -> Iterator[tuple[int, ...]]:
        if pos == length:
            yield tuple(seq)
            return
        for v in range(n):
            if counts[v] < 2:
                counts[v] += 1
                seq.append(v)
                yield from rec(pos + 1)
                seq.pop()
                counts[v] -= 1

    yield from rec(0)


def pruefer_class_count(n: int) -> int:
    """Literal oracle: decode every degree-bounded Prufer sequence and count
    isomorphism classes via canonical codes.  Exhaustive; use for small n."""
    if n <= 2:
        return 1
    seen: set[bytes] = set()
    for seq in _bounded_sequences(n, n - 2):
        seen.add(canonical_code(tree_from_pruefer(seq, n)))
    return len(seen)


def labeled_subcubic_tree_count(n: int) -> int:
    """Number of labeled trees on n vertices with every degree <= 3.

    Counts Prufer sequences in which no label occurs more than twice: choose
    the j labels used twice, the labels used once, and arrange.
    """
    if n <= 2:
        return 1
    length = n - 2
    total = 0
    for j in range(length // 2 + 1):
        singles = length - 2 * j
        if singles > n - j:
            continue
        total += (
            math.comb(n, j)
            * math.comb(n - j, singles)
            * math.factorial(length)
            // 2**j
        )
    return total


def labeled_count_from_classes(n: int) -> int:
    """Sum of n!/|Aut(T)| over the enumerated classes of order n."""
    return sum(labeled_copies(t) for t in enumerate_subcubic_trees(n))
