"""Two-phase primal simplex over exact rationals.

Solves min c.x subject to A x >= b, x >= 0 with b >= 0, entirely in
``fractions.Fraction``.  Bland's anti-cycling rule is used throughout:
the covering LPs solved here are heavily degenerate (many constraints tight
at the optimum), so cycling protection is not optional.

Dual values are read off the final tableau: the reduced cost of the i-th
surplus column equals the i-th dual multiplier.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass
class SimplexSolution:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: list[Fraction] | None = None
    y: list[Fraction] | None = None
    objective: Fraction | None = None


def _pivot(tab, obj, basis, pr, pc):
    row = tab[pr]
    piv = row[pc]
    if piv != ONE:
        row = [v / piv for v in row]
        tab[pr] = row
    for i in range(len(tab)):
        if i == pr:
            continue
        f = tab[i][pc]
        if f:
            tab[i] = [a - f * b for a, b in zip(tab[i], row)]
    f = obj[pc]
    if f:
        obj[:] = [a - f * b for a, b in zip(obj, row)]
    basis[pr] = pc


def _run(tab, obj, basis, enterable):
    """Pivot until optimal or unbounded; Bland's rule on both choices."""
    while True:
        enter = -1
        for j in enterable:
            if obj[j] < 0:
                enter = j
                break
        if enter < 0:
            return "optimal"
        leave = -1
        best = None
        for i, row in enumerate(tab):
            coef = row[enter]
            if coef > 0:
                ratio = row[-1] / coef
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave < 0:
            return "unbounded"
        _pivot(tab, obj, basis, leave, enter)


def solve_min_geq(a, b, c) -> SimplexSolution:
    """min c.x s.t. a x >= b, x >= 0; requires b >= 0 componentwise."""
    m = len(a)
    n = len(c)
    if any(len(row) != n for row in a) or len(b) != m:
        raise ValueError("inconsistent LP dimensions")
    if any(bi < 0 for bi in b):
        raise ValueError("right-hand side must be non-negative")
    if m == 0:
        return SimplexSolution("optimal", [ZERO] * n, [], ZERO)

    # columns: n structural, m surplus, m artificial, then the rhs
    width = n + 2 * m + 1
    tab = []
    for i in range(m):
        row = [Fraction(v) for v in a[i]] + [ZERO] * (2 * m) + [Fraction(b[i])]
        row[n + i] = -ONE
        row[n + m + i] = ONE
        tab.append(row)
    basis = [n + m + i for i in range(m)]

    # phase 1: drive the artificial variables to zero
    obj = [ZERO] * width
    for j in range(n + m):
        obj[j] = -sum(tab[i][j] for i in range(m))
    obj[-1] = -sum(tab[i][-1] for i in range(m))
    status = _run(tab, obj, basis, range(n + m))
    if status != "optimal" or -obj[-1] != 0:
        return SimplexSolution("infeasible")

    # pivot leftover artificials (basic at zero) out where possible
    for i in range(m):
        if basis[i] >= n + m:
            for j in range(n + m):
                if tab[i][j] != 0:
                    _pivot(tab, obj, basis, i, j)
                    break
            # a fully-zero row is redundant; its artificial stays basic at 0

    # phase 2: true objective, artificial columns barred from entering
    cost = [Fraction(v) for v in c] + [ZERO] * (2 * m)
    obj = list(cost) + [ZERO]
    for i in range(m):
        f = cost[basis[i]]
        if f:
            obj = [o - f * t for o, t in zip(obj, tab[i])]
    status = _run(tab, obj, basis, range(n + m))
    if status != "optimal":
        return SimplexSolution(status)

    x = [ZERO] * n
    for i, bi in enumerate(basis):
        if bi < n:
            x[bi] = tab[i][-1]
    y = [obj[n + i] for i in range(m)]
    return SimplexSolution("optimal", x, y, -obj[-1])


def solve_max_leq(a, b, c) -> SimplexSolution:
    """max c.x s.t. a x <= b, x >= 0; requires b >= 0 (slack start).

    Used as an independent route to the dual of the covering LP.
    """
    m = len(a)
    n = len(c)
    if any(len(row) != n for row in a) or len(b) != m:
        raise ValueError("inconsistent LP dimensions")
    if any(bi < 0 for bi in b):
        raise ValueError("right-hand side must be non-negative")
    width = n + m + 1
    tab = []
    for i in range(m):
        row = [Fraction(v) for v in a[i]] + [ZERO] * m + [Fraction(b[i])]
        row[n + i] = ONE
        tab.append(row)
    basis = [n + i for i in range(m)]
    # maximize c.x == minimize (-c).x
    obj = [-Fraction(v) for v in c] + [ZERO] * m + [ZERO]
    status = _run(tab, obj, basis, range(n + m))
    if status != "optimal":
        return SimplexSolution(status)
    x = [ZERO] * n
    for i, bi in enumerate(basis):
        if bi < n:
            x[bi] = tab[i][-1]
    # obj[-1] tracks minus the minimized (-c).x, i.e. the maximized value
    return SimplexSolution("optimal", x, None, obj[-1])
