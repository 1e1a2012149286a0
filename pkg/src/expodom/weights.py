"""Influence weights for exponential domination.

A dominator's influence on a vertex at distance d is (1/2)**(d-1), so a
vertex at distance 1 receives 1 and a dominator assigns itself 2.  Two
variants differ in the distance used:

* blocked weight: the distance is measured along paths whose only dominator
  is the far endpoint, so dominators cut off each other's influence;
* porous weight: plain graph distance, no blocking.

A set D is an exponential dominating set when every vertex has blocked
weight at least 1, and a porous exponential dominating set when every vertex
has porous weight at least 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import Dyadic, ZERO, coeff
from .graph import Graph, bfs_distances, bfs_distances_excluding


def blocked_distance(g: Graph, dominators, u: int, v: int):
    """Length of a shortest u-v path whose only dominator is the endpoint v.

    Returns math.inf when no such path exists, in particular when u is a
    different dominator.  Raises ValueError if v is not a dominator.
    """
    dset = set(dominators)
    if v not in dset:
        raise ValueError(f"vertex {v} is not in the dominating set")
    dset.discard(v)
    return bfs_distances_excluding(g, v, dset)[u]


@dataclass(frozen=True)
class WeightProfile:
    """Per-vertex blocked and porous weights for one candidate set."""

    dominators: tuple[int, ...]
    blocked: tuple[Dyadic, ...]
    porous: tuple[Dyadic, ...]

    def min_blocked(self) -> Dyadic:
        return min(self.blocked)

    def min_porous(self) -> Dyadic:
        return min(self.porous)


def weight_profile(g: Graph, dominators) -> WeightProfile:
    """Both weight vectors for the set, via one BFS per dominator and variant."""
    dset = sorted(set(dominators))
    if any(not 0 <= v < g.n for v in dset):
        raise ValueError("dominator outside the vertex range")
    blocked = [ZERO] * g.n
    porous = [ZERO] * g.n
    dall = set(dset)
    for v in dset:
        bdist = bfs_distances_excluding(g, v, dall - {v})
        pdist = bfs_distances(g, v)
        for u in range(g.n):
            blocked[u] = blocked[u] + coeff(bdist[u])
            porous[u] = porous[u] + coeff(pdist[u])
    return WeightProfile(tuple(dset), tuple(blocked), tuple(porous))


def is_exponential_dominating(g: Graph, dominators) -> bool:
    """True iff every vertex has blocked weight at least 1."""
    dset = set(dominators)
    if not dset:
        return g.n == 0
    total = [ZERO] * g.n
    for v in dset:
        bdist = bfs_distances_excluding(g, v, dset - {v})
        for u in range(g.n):
            total[u] = total[u] + coeff(bdist[u])
    return all(w >= 1 for w in total)


def is_porous_exponential_dominating(g: Graph, dominators) -> bool:
    """True iff every vertex has porous weight at least 1."""
    dset = set(dominators)
    if not dset:
        return g.n == 0
    total = [ZERO] * g.n
    for v in dset:
        pdist = bfs_distances(g, v)
        for u in range(g.n):
            total[u] = total[u] + coeff(pdist[u])
    return all(w >= 1 for w in total)


def is_dominating(g: Graph, dominators) -> bool:
    """Classical domination: every vertex is in the set or adjacent to it."""
    dset = set(dominators)
    return all(
        u in dset or any(v in dset for v in g.adj[u]) for u in range(g.n)
    )


def is_restricted_dominating(g: Graph, dominators, targets) -> bool:
    """Every target vertex outside the set has a neighbor in the set."""
    dset = set(dominators)
    return all(
        u in dset or any(v in dset for v in g.adj[u])
        for u in targets
        if u not in dset
    )
