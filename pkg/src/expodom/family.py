"""The constructive family of subcubic trees where domination and
exponential domination coincide.

Three growth operations extend a tree at a vertex of degree at most 2:

1. hang a new leaf y on x, allowed when x lies in some minimum dominating set;
2. hang a path y-z on x, allowed when tau(x) > 1 or when exempting x from
   the domination requirement lowers the domination number;
3. hang a path x-y-z on w, allowed when tau(w) > 1/2.

``tau(x)`` is the smallest extra influence that, injected at x and decayed
by half per edge of the dominator-free graph, repairs every deficit left by
some too-small candidate set (fewer vertices than the exponential domination
number, not containing x).  Closing P_1 under the three operations generates
exactly the subcubic trees with gamma == gamma_e; ``recognize`` decides
membership by exhaustive reverse search and returns a replayable trace.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .arith import DYADIC_INF, Dyadic, HALF, ZERO, coeff
from .canon import (
    canonical_code,
    canonical_graph,
    rooted_code,
    tree_isomorphism_map,
)
from .graph import (
    Graph,
    INF,
    NotSubcubicError,
    NotTreeError,
    add_pendant_path,
    bfs_distances_excluding,
    delete_vertices,
    is_tree,
)
from .solvers import (
    domination_number,
    domination_with_forced_vertex,
    exponential_domination_number,
    restricted_domination_number,
)


class OperationNotApplicable(ValueError):
    """Refused to apply a growth operation whose guard is false."""


@dataclass(frozen=True)
class TauResult:
    """Minimum repair influence at a vertex, with a witness candidate set.

    The value is a Dyadic, or DYADIC_INF when every admissible set leaves a
    deficit unreachable from the injection vertex; the witness is absent in
    that case.
    """

    value: object
    witness: tuple[int, ...] | None


# caches are keyed by canonical codes, so entries are shared between all
# isomorphic copies; verdicts are deterministic, making races benign
_GAMMA: dict[bytes, int] = {}
_GAMMA_E: dict[bytes, int] = {}
_FORCED: dict[bytes, int] = {}
_RESTRICTED: dict[bytes, int] = {}
_TAU: dict[bytes, object] = {}
_RECOGNIZE: dict[bytes, "tuple[OpTrace, Graph] | None"] = {}


def reset_caches() -> None:
    for cache in (_GAMMA, _GAMMA_E, _FORCED, _RESTRICTED, _TAU, _RECOGNIZE):
        cache.clear()


def _gamma_value(g: Graph) -> int:
    key = canonical_code(g)
    if key not in _GAMMA:
        _GAMMA[key] = domination_number(g).value
    return _GAMMA[key]


def _gamma_e_value(g: Graph) -> int:
    if not is_tree(g):
        return exponential_domination_number(g).value
    key = canonical_code(g)
    if key not in _GAMMA_E:
        _GAMMA_E[key] = exponential_domination_number(g).value
    return _GAMMA_E[key]


def _forced_value(g: Graph, x: int) -> int:
    key = rooted_code(g, x)
    if key not in _FORCED:
        _FORCED[key] = domination_with_forced_vertex(g, x)
    return _FORCED[key]


def _restricted_value(g: Graph, x: int) -> int:
    key = rooted_code(g, x)
    if key not in _RESTRICTED:
        targets = [v for v in range(g.n) if v != x]
        _RESTRICTED[key] = restricted_domination_number(g, targets).value
    return _RESTRICTED[key]


def _tau_of_set(g: Graph, x: int, dset: set) -> object:
    """max over vertices outside the set of (1 - weight) * 2**dist(x, .),
    or DYADIC_INF when a deficit vertex is unreachable from x."""
    n = g.n
    weights = [ZERO] * n
    for v in dset:
        bdist = bfs_distances_excluding(g, v, dset - {v})
        for u in range(n):
            weights[u] = weights[u] + coeff(bdist[u])
    dist_x = bfs_distances_excluding(g, x, dset)
    worst = ZERO
    for u in range(n):
        if u in dset or weights[u] >= 1:
            continue
        if dist_x[u] == INF:
            return DYADIC_INF
        need = (1 - weights[u]) * Dyadic(1, dist_x[u])
        if worst < need:
            worst = need
    return worst


def tau(g: Graph, x: int) -> TauResult:
    """Minimum over all candidate sets (size below gamma_e, excluding x) of
    the repair influence needed at x; the empty set is admissible."""
    if not 0 <= x < g.n:
        raise ValueError(f"vertex {x} out of range")
    limit = _gamma_e_value(g)
    others = [v for v in range(g.n) if v != x]
    best = DYADIC_INF
    best_set: tuple[int, ...] | None = None
    for size in range(limit):
        for cand in combinations(others, size):
            value = _tau_of_set(g, x, set(cand))
            if value < best:
                best = value
                best_set = cand
    if best is DYADIC_INF:
        return TauResult(DYADIC_INF, None)
    return TauResult(best, best_set)


def _tau_value(g: Graph, x: int) -> object:
    if not is_tree(g):
        return tau(g, x).value
    key = rooted_code(g, x)
    if key not in _TAU:
        _TAU[key] = tau(g, x).value
    return _TAU[key]


def _require_subcubic_tree(g: Graph) -> None:
    if not is_tree(g):
        raise NotTreeError("growth operations are defined on trees")
    if g.max_degree() > 3:
        raise NotSubcubicError("growth operations keep trees subcubic")


def op1_applicable(g: Graph, x: int) -> bool:
    """Leaf attachment at x: x must lie in some minimum dominating set."""
    _require_subcubic_tree(g)
    if g.degree(x) >= 3:
        return False
    return _forced_value(g, x) == _gamma_value(g)


def op2_applicable(g: Graph, x: int) -> bool:
    """Two-vertex path at x: tau(x) > 1, or excusing x from domination helps."""
    _require_subcubic_tree(g)
    if g.degree(x) >= 3:
        return False
    if _tau_value(g, x) > 1:
        return True
    return _restricted_value(g, x) < _gamma_value(g)


def op3_applicable(g: Graph, w: int) -> bool:
    """Three-vertex path at w: tau(w) > 1/2."""
    _require_subcubic_tree(g)
    if g.degree(w) >= 3:
        return False
    return _tau_value(g, w) > HALF


_APPLICABLE = {1: op1_applicable, 2: op2_applicable, 3: op3_applicable}


def apply_op(g: Graph, op: int, attach: int) -> Graph:
    """Attach a pendant path of ``op`` new vertices at ``attach``.

    Refuses (raises OperationNotApplicable) when the guard predicate fails,
    so every tree built through this function stays inside the family.
    """
    if op not in _APPLICABLE:
        raise ValueError(f"unknown operation {op}")
    if not _APPLICABLE[op](g, attach):
        raise OperationNotApplicable(
            f"operation {op} not applicable at vertex {attach}"
        )
    return add_pendant_path(g, attach, op)


@dataclass(frozen=True)
class OpStep:
    op: int
    attach: int
    added: tuple[int, ...]


@dataclass(frozen=True)
class OpTrace:
    """Construction certificate: replaying the steps from P_1 rebuilds the
    tree (up to isomorphism) with every guard re-checked."""

    steps: tuple[OpStep, ...]

    def to_json_obj(self) -> list[dict]:
        return [
            {"op": s.op, "attach": s.attach, "added": list(s.added)}
            for s in self.steps
        ]

    @classmethod
    def from_json_obj(cls, obj) -> "OpTrace":
        return cls(
            tuple(
                OpStep(int(s["op"]), int(s["attach"]), tuple(s["added"]))
                for s in obj
            )
        )


def replay_trace(trace: OpTrace) -> Graph:
    """Rebuild from P_1, validating each step's guard and vertex numbering."""
    g = Graph(1)
    for step in trace.steps:
        expected = tuple(range(g.n, g.n + step.op))
        if step.added != expected:
            raise ValueError(
                f"step {step} adds {step.added}, expected {expected}"
            )
        g = apply_op(g, step.op, step.attach)
    return g


def _reverse_candidates(g: Graph):
    """Peel-back candidates in deterministic order (op 1, then 2, then 3)."""
    for y in range(g.n):
        if g.degree(y) == 1:
            yield 1, (y,), g.adj[y][0]
    for z in range(g.n):
        if g.degree(z) == 1:
            y = g.adj[z][0]
            if g.degree(y) == 2:
                x = next(v for v in g.adj[y] if v != z)
                yield 2, (y, z), x
    for z in range(g.n):
        if g.degree(z) == 1:
            y = g.adj[z][0]
            if g.degree(y) != 2:
                continue
            x = next(v for v in g.adj[y] if v != z)
            if g.degree(x) != 2:
                continue
            w = next(v for v in g.adj[x] if v != y)
            yield 3, (x, y, z), w


def _recognize_impl(g: Graph):
    code = canonical_code(g)
    if code in _RECOGNIZE:
        return _RECOGNIZE[code]
    result = None
    if g.n == 1:
        result = (OpTrace(()), Graph(1))
    else:
        for op, removed, attach_old in _reverse_candidates(g):
            smaller, old_to_new = delete_vertices(g, removed)
            attach = old_to_new[attach_old]
            if not _APPLICABLE[op](smaller, attach):
                continue
            sub = _recognize_impl(smaller)
            if sub is None:
                continue
            sub_trace, sub_replay = sub
            iso = tree_isomorphism_map(smaller, sub_replay)
            step = OpStep(
                op,
                iso[attach],
                tuple(range(sub_replay.n, sub_replay.n + op)),
            )
            trace = OpTrace(sub_trace.steps + (step,))
            result = (trace, add_pendant_path(sub_replay, iso[attach], op))
            break
    _RECOGNIZE[code] = result
    return result


def recognize(g: Graph) -> OpTrace | None:
    """A construction trace when the tree belongs to the family, else None."""
    _require_subcubic_tree(g)
    found = _recognize_impl(g)
    return found[0] if found else None


def generate_family(n_max: int) -> Iterator[Graph]:
    """All family members with at most n_max vertices, one per isomorphism
    class, sorted by order then canonical code."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    start = Graph(1)
    members: dict[bytes, Graph] = {canonical_code(start): start}
    queue = [start]
    while queue:
        g = queue.pop()
        tried: set[bytes] = set()
        for x in range(g.n):
            if g.degree(x) >= 3:
                continue
            orbit = rooted_code(g, x)
            if orbit in tried:
                continue
            tried.add(orbit)
            for op in (1, 2, 3):
                if g.n + op > n_max:
                    continue
                if not _APPLICABLE[op](g, x):
                    continue
                grown = canonical_graph(add_pendant_path(g, x, op))
                code = canonical_code(grown)
                if code not in members:
                    members[code] = grown
                    queue.append(grown)
    ordered = sorted(
        members.values(), key=lambda t: (t.n, canonical_code(t))
    )
    yield from ordered
