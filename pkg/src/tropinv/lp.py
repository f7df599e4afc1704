"""Exact rational linear programming.

The core solver works on problems in standard form::

    maximize (or minimize)  c . y
    subject to              A y = b,  y >= 0

using a dense two-phase simplex method with Bland's anticycling rule.  All
arithmetic is exact; the tableau uses ``gmpy2.mpq`` for speed and every value
crossing the module boundary is a :class:`fractions.Fraction`.

:func:`solve_general` is a convenience layer that builds the standard form
for problems with inequality rows and free variables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from gmpy2 import mpq

from .errors import DimensionError, DomainError

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LpProblem:
    objective: tuple
    A: tuple
    b: tuple
    sense: str = "max"

    def __init__(self, objective, A, b, sense="max"):
        object.__setattr__(self, "objective", tuple(Fraction(v) for v in objective))
        object.__setattr__(self, "A", tuple(tuple(Fraction(v) for v in row) for row in A))
        object.__setattr__(self, "b", tuple(Fraction(v) for v in b))
        object.__setattr__(self, "sense", sense)
        if sense not in ("max", "min"):
            raise DomainError(f"sense must be 'max' or 'min', got {sense!r}")
        nvars = len(self.objective)
        if len(self.A) != len(self.b):
            raise DimensionError(f"A has {len(self.A)} rows but b has {len(self.b)} entries")
        for i, row in enumerate(self.A):
            if len(row) != nvars:
                raise DimensionError(f"row {i} of A has {len(row)} columns, expected {nvars}")

    @property
    def num_vars(self) -> int:
        return len(self.objective)


@dataclass(frozen=True)
class LpOutcome:
    """Result of :func:`solve_lp`.

    ``optimal`` populates value and solution.  ``unbounded`` populates
    ``solution`` with a feasible point and ``ray`` with a nonnegative
    direction d satisfying A d = 0 along which the objective improves.
    ``infeasible`` populates nothing.
    """

    status: str
    value: Optional[Fraction] = None
    solution: Optional[tuple] = None
    ray: Optional[tuple] = None

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL


def _to_fraction(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


def _pivot(T, r, s):
    row = T[r]
    piv = row[s]
    if piv != 1:
        row = [v / piv for v in row]
        T[r] = row
    for i, other in enumerate(T):
        if i != r:
            f = other[s]
            if f:
                T[i] = [a - f * p for a, p in zip(other, row)]


def _simplex(T, basis, ncols):
    """Run Bland-rule iterations on tableau ``T`` (objective in the last row).

    The objective row holds reduced costs; a positive entry improves a
    maximization.  Only the first ``ncols`` columns may enter.  Returns
    ``None`` at optimality or the entering column index if unbounded.
    """
    obj = T[-1]
    m = len(T) - 1
    while True:
        obj = T[-1]
        entering = next((j for j in range(ncols) if obj[j] > 0), None)
        if entering is None:
            return None
        best = None
        leave = None
        for i in range(m):
            a = T[i][entering]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            return entering
        _pivot(T, leave, entering)
        basis[leave] = entering


def solve_lp(problem: LpProblem) -> LpOutcome:
    """Solve a standard-form LP exactly."""
    n = problem.num_vars
    sign = 1 if problem.sense == "max" else -1
    rows = []
    for row, rhs in zip(problem.A, problem.b):
        if rhs < 0:
            rows.append([mpq(-v) for v in row] + [mpq(-rhs)])
        else:
            rows.append([mpq(v) for v in row] + [mpq(rhs)])
    m = len(rows)
    if m == 0:
        if any(sign * c > 0 for c in problem.objective):
            j = next(j for j, c in enumerate(problem.objective) if sign * c > 0)
            ray = tuple(Fraction(int(k == j)) for k in range(n))
            return LpOutcome(UNBOUNDED, solution=(Fraction(0),) * n, ray=ray)
        return LpOutcome(OPTIMAL, Fraction(0), (Fraction(0),) * n)

    # phase 1: artificial variable per row, maximize -(sum of artificials)
    zero, one = mpq(0), mpq(1)
    T = []
    for i, row in enumerate(rows):
        art = [zero] * m
        art[i] = one
        T.append(row[:n] + art + [row[n]])
    obj1 = [sum((T[i][j] for i in range(m)), zero) for j in range(n)] + [zero] * m
    obj1.append(sum((T[i][-1] for i in range(m)), zero))
    T.append(obj1)
    basis = list(range(n, n + m))
    _simplex(T, basis, n + m)
    if T[-1][-1] != 0:
        return LpOutcome(INFEASIBLE)

    # drive artificials out of the basis; rows where that fails are redundant
    keep = []
    for i in range(m):
        if basis[i] >= n:
            col = next((j for j in range(n) if T[i][j] != 0), None)
            if col is None:
                continue
            _pivot(T, i, col)
            basis[i] = col
        keep.append(i)
    T = [T[i][:n] + [T[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]

    # phase 2
    c = [mpq(sign * v) for v in problem.objective]
    obj = c + [zero]
    for i, bi in enumerate(basis):
        cb = c[bi]
        if cb:
            obj = [o - cb * t for o, t in zip(obj, T[i])]
    T.append(obj)
    entering = _simplex(T, basis, n)

    point = [zero] * n
    for i, bi in enumerate(basis):
        point[bi] = T[i][-1]
    solution = tuple(_to_fraction(v) for v in point)
    if entering is not None:
        d = [zero] * n
        d[entering] = one
        for i, bi in enumerate(basis):
            d[bi] = -T[i][entering]
        return LpOutcome(UNBOUNDED, solution=solution, ray=tuple(_to_fraction(v) for v in d))
    value = sum((cj * xj for cj, xj in zip(problem.objective, solution)), Fraction(0))
    return LpOutcome(OPTIMAL, value, solution)


def solve_general(
    objective: Sequence,
    A_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
    A_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
    free: Optional[Sequence[bool]] = None,
    sense: str = "max",
) -> LpOutcome:
    """Solve ``c.x`` subject to ``A_ub x <= b_ub``, ``A_eq x = b_eq``.

    ``free[j]`` marks variable j as unrestricted in sign; by default every
    variable is free.  Free variables are split into positive and negative
    parts, inequality rows get slack columns, and the outcome is mapped back
    to the original variables.
    """
    nv = len(objective)
    if free is None:
        free = [True] * nv
    if len(free) != nv:
        raise DimensionError("free mask length differs from the variable count")
    for row in list(A_ub) + list(A_eq):
        if len(row) != nv:
            raise DimensionError("constraint row length differs from the variable count")
    if len(A_ub) != len(b_ub) or len(A_eq) != len(b_eq):
        raise DimensionError("constraint rows and right-hand sides differ in length")

    # column layout: x_j (or x_j^+), x_j^- for free j, then one slack per <= row
    neg_col = {}
    ncol = nv
    for j in range(nv):
        if free[j]:
            neg_col[j] = ncol
            ncol += 1
    nslack = len(A_ub)
    total = ncol + nslack

    def expand(row):
        out = [Fraction(0)] * total
        for j, v in enumerate(row):
            v = Fraction(v)
            out[j] = v
            if j in neg_col:
                out[neg_col[j]] = -v
        return out

    A, b = [], []
    for k, (row, rhs) in enumerate(zip(A_ub, b_ub)):
        r = expand(row)
        r[ncol + k] = Fraction(1)
        A.append(r)
        b.append(Fraction(rhs))
    for row, rhs in zip(A_eq, b_eq):
        A.append(expand(row))
        b.append(Fraction(rhs))
    c = expand(objective)
    out = solve_lp(LpProblem(c, A, b, sense))

    def collapse(vec):
        return tuple(vec[j] - (vec[neg_col[j]] if j in neg_col else 0) for j in range(nv))

    if out.status == INFEASIBLE:
        return out
    if out.status == UNBOUNDED:
        return LpOutcome(UNBOUNDED, solution=collapse(out.solution), ray=collapse(out.ray))
    return LpOutcome(OPTIMAL, out.value, collapse(out.solution))


@dataclass(frozen=True)
class HullCertificate:
    """Answer of :func:`in_convex_hull` with an exactly checkable certificate.

    When ``inside`` is true, ``coefficients`` are convex weights reproducing
    the query.  Otherwise ``functional`` is ``(w, c)`` with ``w.p <= c`` for
    every point p and ``w.q >= c + 1`` for the query q.
    """

    inside: bool
    coefficients: Optional[tuple] = None
    functional: Optional[tuple] = field(default=None)

    def __bool__(self) -> bool:
        return self.inside


def in_convex_hull(points: Sequence[Sequence], query: Sequence) -> HullCertificate:
    """Decide whether ``query`` lies in the convex hull of ``points``."""
    if not points:
        raise DomainError("in_convex_hull needs at least one point")
    d = len(query)
    if any(len(p) != d for p in points):
        raise DimensionError("points and query have different dimensions")
    k = len(points)
    A = [[p[i] for p in points] for i in range(d)]
    A.append([1] * k)
    b = list(query) + [1]
    out = solve_lp(LpProblem([0] * k, A, b))
    if out.status == OPTIMAL:
        return HullCertificate(True, coefficients=out.solution)

    # w.p - c <= 0 for each point, c - w.q <= -1; variables (w, c) all free
    A_ub = [list(p) + [-1] for p in points]
    A_ub.append([-Fraction(v) for v in query] + [1])
    b_ub = [0] * k + [-1]
    sep = solve_general([0] * (d + 1), A_ub, b_ub)
    assert sep.status == OPTIMAL
    w, c = sep.solution[:d], sep.solution[d]
    return HullCertificate(False, functional=(w, c))
