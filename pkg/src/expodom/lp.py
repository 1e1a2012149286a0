"""The porous exponential domination LP and its exact solution.

The integer program for the porous parameter minimizes sum(x) subject to,
for every vertex v, sum over u of (1/2)**(dist(u,v)-1) * x(u) >= 1 with
x binary.  Dropping integrality gives the fractional porous exponential
domination number; this module builds that LP, solves it exactly, and also
evaluates the closed-form certificates and lower bounds attached to it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .graph import Graph, NotTreeError, all_pairs_distances, is_subcubic_tree
from .simplex import SimplexSolution, solve_max_leq, solve_min_geq

INF = math.inf


@dataclass(frozen=True)
class LpModel:
    """min sum(x) s.t. matrix . x >= rhs, x >= 0."""

    matrix: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]
    objective: tuple[Fraction, ...]

    @property
    def size(self) -> int:
        return len(self.objective)


@dataclass(frozen=True)
class LpSolution:
    status: str
    primal: tuple[Fraction, ...] | None
    dual: tuple[Fraction, ...] | None
    objective: Fraction | None


def influence_coefficient(dist) -> Fraction:
    if dist == INF:
        return Fraction(0)
    return Fraction(2) ** (1 - dist)


def build_porous_lp(g: Graph) -> LpModel:
    """One covering row per vertex; unreachable pairs contribute nothing."""
    dist = all_pairs_distances(g)
    matrix = tuple(
        tuple(influence_coefficient(dist[u][v]) for u in range(g.n))
        for v in range(g.n)
    )
    ones = tuple(Fraction(1) for _ in range(g.n))
    return LpModel(matrix, ones, ones)


def solve_exact(model: LpModel) -> LpSolution:
    """Exact optimum with dual multipliers read off the final basis."""
    n = model.size
    if len(model.matrix) and any(len(row) != n for row in model.matrix):
        raise ValueError("LP matrix and objective dimensions disagree")
    if len(model.rhs) != len(model.matrix):
        raise ValueError("LP matrix and rhs dimensions disagree")
    res = solve_min_geq(model.matrix, model.rhs, model.objective)
    if res.status != "optimal":
        return LpSolution(res.status, None, None, None)
    # strong duality must hold identically in exact arithmetic
    assert sum(q * r for q, r in zip(res.y, model.rhs)) == res.objective
    return LpSolution("optimal", tuple(res.x), tuple(res.y), res.objective)


def solve_dual_direct(model: LpModel) -> SimplexSolution:
    """Solve the dual (max rhs.y, A^T y <= objective) on its own.

    Debug aid: gives an independent check on the duals that ``solve_exact``
    extracts from the primal basis.
    """
    n = model.size
    transposed = tuple(
        tuple(model.matrix[i][j] for i in range(len(model.matrix)))
        for j in range(n)
    )
    return solve_max_leq(transposed, model.objective, model.rhs)


@lru_cache(maxsize=4096)
def fractional_porous_number(g: Graph) -> Fraction:
    """Optimum of the porous LP relaxation; always attained and rational."""
    if g.n == 0:
        return Fraction(0)
    sol = solve_exact(build_porous_lp(g))
    if sol.status != "optimal":  # feasible by x == 1, bounded below by 0
        raise RuntimeError(f"porous LP unexpectedly {sol.status}")
    return sol.objective


@dataclass(frozen=True)
class CanonicalSolution:
    """The degree-based primal/dual pair for subcubic trees.

    Primal mass 1/3 on endvertices, 1/6 on degree-2 vertices, 0 on degree-3
    vertices (a single vertex gets 1/2); the dual vector is identical.  On a
    subcubic tree every covering row is tight, which certifies optimality.
    """

    primal: tuple[Fraction, ...]
    dual: tuple[Fraction, ...]
    objective: Fraction
    primal_feasible: bool
    dual_feasible: bool
    all_tight: bool


def canonical_tree_solution(t: Graph) -> CanonicalSolution:
    if not is_subcubic_tree(t):
        raise NotTreeError("canonical LP solution needs a subcubic tree")
    if t.n == 1:
        x = (Fraction(1, 2),)
    else:
        by_degree = {1: Fraction(1, 3), 2: Fraction(1, 6), 3: Fraction(0)}
        x = tuple(by_degree[t.degree(u)] for u in range(t.n))
    model = build_porous_lp(t)
    rows = [
        sum(model.matrix[v][u] * x[u] for u in range(t.n)) for v in range(t.n)
    ]
    primal_feasible = all(r >= 1 for r in rows)
    all_tight = all(r == 1 for r in rows)
    # the coefficient matrix is symmetric, so the dual rows coincide
    dual_feasible = all(r <= 1 for r in rows)
    return CanonicalSolution(
        primal=x,
        dual=x,
        objective=sum(x, Fraction(0)),
        primal_feasible=primal_feasible,
        dual_feasible=dual_feasible,
        all_tight=all_tight,
    )


def bound_diameter(d: int) -> Fraction:
    """Lower bound (d+3)/6 for a connected graph of diameter d."""
    if d < 0:
        raise ValueError("diameter must be non-negative")
    return Fraction(d + 3, 6)


def bound_order_degree(n: int, delta: int, d: int) -> Fraction:
    """Lower bound from order, maximum degree, and diameter.

    n/(2+3d) when delta is 3; for delta >= 4 the geometric-growth variant
    n*((delta-1)/2 - 1) / (delta*((delta-1)/2)**d - 3).  Degrees below 3 are
    rejected; with d = 0 the formulas degenerate to the n/2 single-vertex
    row bound, which stays valid.
    """
    if delta < 3:
        raise ValueError("bound covers maximum degree 3 and above only")
    if n < 1 or d < 0:
        raise ValueError("order must be positive and diameter non-negative")
    if delta == 3:
        return Fraction(n, 2 + 3 * d)
    q = Fraction(delta - 1, 2)
    return n * (q - 1) / (delta * q**d - 3)


def bound_subcubic_order(n: int) -> float:
    """Order-only floating bound: (sqrt(2n + 49/36) + 7/6) / 6.

    This is where max{(d+3)/6, n/(2+3d)} over real d bottoms out, so it
    holds for every connected subcubic graph regardless of diameter.  The
    only non-rational surface in the package; compare with explicit slack.
    """
    if n < 1:
        raise ValueError("order must be positive")
    return (math.sqrt(2 * n + 49 / 36) + 7 / 6) / 6


def export_cplex_lp(model: LpModel, name: str = "porous") -> str:
    """Render the model in CPLEX LP text format for external cross-checks.

    All coefficients of the porous LP are dyadic, so exact terminating
    decimals exist; non-dyadic models are rejected rather than rounded.
    """

    def dec(q: Fraction) -> str:
        den = q.denominator
        if den & (den - 1):
            raise ValueError(f"coefficient {q} has no exact decimal form")
        shift = den.bit_length() - 1
        scaled = q.numerator * 5**shift
        text = str(abs(scaled)).rjust(shift + 1, "0")
        sign = "-" if scaled < 0 else ""
        if shift == 0:
            return f"{sign}{text}"
        return f"{sign}{text[:-shift] or '0'}.{text[-shift:]}"

    n = model.size
    lines = [f"\\ {name}: porous exponential domination relaxation", "Minimize"]
    lines.append(
        " obj: " + " + ".join(f"{dec(c)} x{j}" for j, c in enumerate(model.objective))
    )
    lines.append("Subject To")
    for i, row in enumerate(model.matrix):
        terms = " + ".join(
            f"{dec(c)} x{j}" for j, c in enumerate(row) if c != 0
        )
        lines.append(f" c{i}: {terms} >= {dec(model.rhs[i])}")
    lines.append("Bounds")
    lines.extend(f" 0 <= x{j}" for j in range(n))
    lines.append("End")
    return "\n".join(lines) + "\n"
