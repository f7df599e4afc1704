"""Lattice polytopes as the Boolean convex polynomial semiring.

A polytope is stored by its vertex set only.  Join is the hull of the union,
product is the Minkowski sum, and every geometric question is an exact LP.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .errors import DimensionError, DomainError
from .groups import PermGroup, act_exponent
from .lp import OPTIMAL, in_convex_hull, solve_general
from .poly import TropPoly, _check_exponent, canonicalize


def _reduce(n, points):
    """Vertex set of the hull of ``points``.

    A lattice polytope is the Newton polytope of the Boolean polynomial with
    those exponents, so its vertices are the canonical support.
    """
    terms = {p: Fraction(0) for p in points}
    return frozenset(canonicalize(TropPoly._raw(n, terms)).terms)


class LatticePolytope:
    """Convex hull of finitely many points of N^n, kept vertex-minimal."""

    __slots__ = ("n", "vertices")

    def __init__(self, n: int, points: Iterable[Sequence[int]] = ()):
        pts = {_check_exponent(p, n) for p in points}
        self.n = n
        self.vertices = _reduce(n, pts)

    @classmethod
    def _from_vertices(cls, n, vertices):
        A = cls.__new__(cls)
        A.n = n
        A.vertices = frozenset(vertices)
        return A

    @classmethod
    def empty(cls, n: int) -> "LatticePolytope":
        return cls._from_vertices(n, ())

    @classmethod
    def origin(cls, n: int) -> "LatticePolytope":
        return cls._from_vertices(n, [(0,) * n])

    def is_empty(self) -> bool:
        return not self.vertices

    def sorted_vertices(self) -> list:
        return sorted(self.vertices)

    def __eq__(self, other):
        if not isinstance(other, LatticePolytope):
            return NotImplemented
        return self.n == other.n and self.vertices == other.vertices

    def __hash__(self):
        return hash((self.n, self.vertices))

    def __repr__(self):
        return f"LatticePolytope({self.n}, {self.sorted_vertices()})"

    def __add__(self, other):
        return poly_join(self, other)

    def __mul__(self, other):
        return poly_minkowski(self, other)


def _same_dim(A, B):
    if A.n != B.n:
        raise DimensionError(f"dimension mismatch: {A.n} vs {B.n}")


def poly_join(A: LatticePolytope, B: LatticePolytope) -> LatticePolytope:
    _same_dim(A, B)
    return LatticePolytope(A.n, A.vertices | B.vertices)


def poly_minkowski(A: LatticePolytope, B: LatticePolytope) -> LatticePolytope:
    _same_dim(A, B)
    sums = {tuple(x + y for x, y in zip(a, b)) for a in A.vertices for b in B.vertices}
    return LatticePolytope(A.n, sums)


def newton_polytope(f: TropPoly) -> LatticePolytope:
    """Hull of the support of ``f``; coefficients are forgotten."""
    return LatticePolytope(f.n, f.terms)


def poly_equals(A: LatticePolytope, B: LatticePolytope) -> bool:
    _same_dim(A, B)
    return A.vertices == B.vertices


def contains(A: LatticePolytope, q: Sequence) -> bool:
    if len(q) != A.n:
        raise DimensionError(f"point has {len(q)} coordinates, polytope lives in dimension {A.n}")
    if A.is_empty():
        return False
    return in_convex_hull(A.sorted_vertices(), q).inside


def transfer_polytope(G: PermGroup, A: LatticePolytope) -> LatticePolytope:
    """Join of the images of A under G."""
    _same_dim(G, A)
    return LatticePolytope(A.n, {act_exponent(s, v) for s in G.elements for v in A.vertices})


def is_edge(A: LatticePolytope, u: Sequence, v: Sequence) -> bool:
    """Whether [u, v] is an edge of A (u, v distinct vertices).

    Feasibility of: w.u = w.v and w.u >= w.t + 1 for every other vertex t,
    with w free.  Scaling makes the unit gap equivalent to strictness.
    """
    others = [t for t in A.sorted_vertices() if t != tuple(u) and t != tuple(v)]
    A_eq = [[a - b for a, b in zip(u, v)]]
    A_ub = [[ti - ui for ti, ui in zip(t, u)] for t in others]
    out = solve_general([0] * A.n, A_ub, [-1] * len(others), A_eq, [0])
    return out.status == OPTIMAL


def edges(A: LatticePolytope) -> set:
    """All edges of A as frozensets of two vertices."""
    if A.is_empty():
        raise DomainError("the empty polytope has no edges")
    verts = A.sorted_vertices()
    return {frozenset((u, v)) for u, v in combinations(verts, 2) if is_edge(A, u, v)}


def skeleton_connected(A: LatticePolytope) -> bool:
    """Connectivity of the graph formed by the vertices and edges of A."""
    verts = A.sorted_vertices()
    if len(verts) <= 1:
        return True
    adj = {v: set() for v in verts}
    for e in edges(A):
        u, v = tuple(e)
        adj[u].add(v)
        adj[v].add(u)
    seen, stack = {verts[0]}, [verts[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(verts)


def primitive_direction(u: Sequence[int], v: Sequence[int]) -> tuple:
    """Primitive integer vector along u - v with lexicographically positive sign."""
    d = [a - b for a, b in zip(u, v)]
    g = 0
    for x in d:
        g = gcd(g, x)
    if g == 0:
        raise DomainError("direction of a degenerate segment")
    d = [x // g for x in d]
    lead = next(x for x in d if x)
    if lead < 0:
        d = [-x for x in d]
    return tuple(d)
