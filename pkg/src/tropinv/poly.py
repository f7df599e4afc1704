"""Max-plus polynomials with rational coefficients.

A :class:`TropPoly` stores a finite map from exponent vectors to rational
coefficients and denotes the convex piecewise linear function
``v -> max(c_a + a.v)``.  Two polynomials denote the same function exactly
when their canonical forms agree, so :func:`canonicalize` is the quotient map
from formal expressions to functions.

The additive identity (``-inf``) is the float ``BOTTOM``; it is only ever
used as a sentinel, never in arithmetic that could lose exactness.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Optional, Sequence

from .errors import DimensionError, DomainError
from .lp import OPTIMAL, UNBOUNDED, LpProblem, solve_general, solve_lp

BOTTOM = float("-inf")

Exponent = tuple


def _check_exponent(exp, n):
    exp = tuple(exp)
    if len(exp) != n:
        raise DimensionError(f"exponent {exp} has length {len(exp)}, expected {n}")
    for e in exp:
        if not isinstance(e, int) or isinstance(e, bool) or e < 0:
            raise DomainError(f"exponent entries must be nonnegative integers, got {exp}")
    return exp


class TropPoly:
    """An element of the max-plus polynomial semiring in ``n`` variables.

    ``f + g`` is tropical addition (max), ``f * g`` tropical multiplication
    and ``f ** m`` the m-th tropical power.  ``==`` compares stored term maps;
    use :func:`trop_equals` to compare the functions.
    """

    __slots__ = ("n", "terms", "canonical", "_hash")

    def __init__(self, n: int, terms: Mapping | Iterable = (), canonical: bool = False):
        if n < 0:
            raise DomainError("arity must be nonnegative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        store = {}
        for exp, coef in items:
            if coef == BOTTOM:
                continue
            exp = _check_exponent(exp, n)
            coef = Fraction(coef)
            old = store.get(exp)
            if old is None or coef > old:
                store[exp] = coef
        self.n = n
        self.terms = store
        self.canonical = canonical or len(store) <= 1
        self._hash = None

    @classmethod
    def _raw(cls, n, terms, canonical=False):
        f = cls.__new__(cls)
        f.n = n
        f.terms = terms
        f.canonical = canonical or len(terms) <= 1
        f._hash = None
        return f

    @classmethod
    def zero(cls, n: int) -> "TropPoly":
        return cls._raw(n, {}, True)

    @classmethod
    def one(cls, n: int) -> "TropPoly":
        return cls._raw(n, {(0,) * n: Fraction(0)}, True)

    @classmethod
    def monomial(cls, exp: Sequence[int], coef=0) -> "TropPoly":
        exp = tuple(exp)
        return cls(len(exp), {exp: coef})

    @classmethod
    def variable(cls, n: int, i: int) -> "TropPoly":
        """The coordinate function x_i, 0-based."""
        exp = [0] * n
        exp[i] = 1
        return cls._raw(n, {tuple(exp): Fraction(0)}, True)

    @classmethod
    def constant(cls, n: int, c) -> "TropPoly":
        if c == BOTTOM:
            return cls.zero(n)
        return cls._raw(n, {(0,) * n: Fraction(c)}, True)

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list:
        return sorted(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, TropPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"TropPoly({self.n}, {format_poly(self)!r})"

    def __add__(self, other):
        return trop_add(self, other)

    def __mul__(self, other):
        return trop_mul(self, other)

    def __pow__(self, m):
        return trop_pow(self, m)

    def __call__(self, *v):
        if len(v) == 1 and isinstance(v[0], (list, tuple)):
            v = v[0]
        return evaluate(self, v)


def format_poly(f: TropPoly) -> str:
    """Human readable rendering, e.g. ``0 ⊕ (2)*x1^2 ⊕ (-1/2)*x1*x2``."""
    if f.is_zero():
        return "-inf"
    parts = []
    for exp in sorted(f.terms):
        coef = f.terms[exp]
        mono = "*".join(
            f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(exp) if e
        )
        if not mono:
            parts.append(str(coef))
        elif coef == 0:
            parts.append(mono)
        else:
            parts.append(f"({coef})*{mono}")
    return " ⊕ ".join(parts)


def _same_arity(f, g):
    if f.n != g.n:
        raise DimensionError(f"arity mismatch: {f.n} vs {g.n}")


def trop_add(f: TropPoly, g: TropPoly) -> TropPoly:
    _same_arity(f, g)
    terms = dict(f.terms)
    for exp, c in g.terms.items():
        old = terms.get(exp)
        if old is None or c > old:
            terms[exp] = c
    return TropPoly._raw(f.n, terms)


def trop_mul(f: TropPoly, g: TropPoly) -> TropPoly:
    _same_arity(f, g)
    terms = {}
    for a, ca in f.terms.items():
        for b, cb in g.terms.items():
            exp = tuple(x + y for x, y in zip(a, b))
            c = ca + cb
            old = terms.get(exp)
            if old is None or c > old:
                terms[exp] = c
    return TropPoly._raw(f.n, terms)


def trop_pow(f: TropPoly, m: int) -> TropPoly:
    """m-th tropical power by repeated squaring (no canonicalization)."""
    if m < 0:
        raise DomainError("tropical powers of polynomials need m >= 0")
    result = TropPoly.one(f.n)
    base = f
    while m:
        if m & 1:
            result = trop_mul(result, base)
        m >>= 1
        if m:
            base = trop_mul(base, base)
    return result


def degree(f: TropPoly) -> int:
    """Largest total degree in the support; -1 for the zero polynomial."""
    if f.is_zero():
        return -1
    return max(sum(exp) for exp in f.terms)


def evaluate(f: TropPoly, v: Sequence):
    """Exact value of ``f`` at the rational point ``v`` (BOTTOM for zero)."""
    if len(v) != f.n:
        raise DimensionError(f"point has {len(v)} coordinates, polynomial has arity {f.n}")
    if not f.terms:
        return BOTTOM
    v = [Fraction(x) for x in v]
    den = lcm(*(x.denominator for x in v)) if v else 1
    nums = [x.numerator * (den // x.denominator) for x in v]
    best = None
    for exp, c in f.terms.items():
        val = c + Fraction(sum(e * x for e, x in zip(exp, nums)), den)
        if best is None or val > best:
            best = val
    return best


def _value(exp, coef, x):
    return coef + sum(e * xi for e, xi in zip(exp, x))


# -- redundancy and canonical forms ------------------------------------------


def _dominated(beta, d, points, coefs) -> bool:
    """True iff (beta, d) lies below the upper hull of the lifted points.

    This is the LP ``max sum(c_a y_a)`` over convex weights y with
    ``sum(y_a a) = beta``; the term is dominated iff it is feasible with
    optimum >= d.
    """
    if not points:
        return False
    k = len(points)
    A = [[p[i] for p in points] for i in range(len(beta))]
    A.append([1] * k)
    out = solve_lp(LpProblem(coefs, A, list(beta) + [1]))
    return out.status == OPTIMAL and out.value >= d


def _beating_point(beta, d, points, coefs):
    """A point where the term (beta, d) strictly exceeds every listed term.

    Solves ``max x0 + beta.x`` subject to ``x0 + a.x <= -c_a``; returns None
    when the term is dominated.
    """
    n = len(beta)
    if not points:
        return (Fraction(0),) * n
    A_ub = [[1] + list(a) for a in points]
    b_ub = [-c for c in coefs]
    out = solve_general([1] + list(beta), A_ub, b_ub)
    if out.status == OPTIMAL:
        if out.value + d <= 0:
            return None
        x = out.solution
    else:
        assert out.status == UNBOUNDED
        p, r = out.solution, out.ray
        gain = r[0] + sum(bi * ri for bi, ri in zip(beta, r[1:]))
        base = p[0] + sum(bi * pi for bi, pi in zip(beta, p[1:]))
        # push along the ray until x0 + beta.x > -d
        lam = max(Fraction(0), (-d - base) / gain) + 1
        x = tuple(pi + lam * ri for pi, ri in zip(p, r))
    return x[1:]


def is_redundant_term(f: TropPoly, beta: Sequence[int]) -> bool:
    """Whether the term at ``beta`` never strictly exceeds the other terms."""
    beta = tuple(beta)
    if beta not in f.terms:
        raise DomainError(f"{beta} is not in the support")
    others = [a for a in f.terms if a != beta]
    return _dominated(beta, f.terms[beta], others, [f.terms[a] for a in others])


def _tie_weights(f):
    """Integer weights r with r.a distinct across all exponents of ``f``."""
    base = max((max(a) for a in f.terms), default=0) + 1
    return [base**i for i in range(f.n)]


def _lex_argmax(terms, x, weights):
    """The term maximizing (c + a.x, weights.a) lexicographically.

    Such a lifted point is always a vertex of the upper hull, hence a
    non-redundant term.
    """
    best_key, best = None, None
    for a, c in terms.items():
        key = (_value(a, c, x), sum(w * e for w, e in zip(weights, a)))
        if best_key is None or key > best_key:
            best_key, best = key, a
    return best


def _seed_directions(n):
    rng = random.Random(0x5EED + n)
    dirs = [(0,) * n]
    for i in range(n):
        for s in (1, -1):
            e = [0] * n
            e[i] = s
            dirs.append(tuple(e))
    for _ in range(n + 2):
        dirs.append(tuple(rng.randint(-7, 7) for _ in range(n)))
    return dirs


def _apply(perm, exp):
    out = [0] * len(exp)
    for i, e in enumerate(exp):
        out[perm[i]] = e
    return tuple(out)


def canonicalize(f: TropPoly, symmetry: Optional[Sequence[Sequence[int]]] = None) -> TropPoly:
    """The unique minimal polynomial denoting the same function as ``f``.

    ``symmetry`` may list permutations (0-based image tuples) under which
    the term map of ``f`` is invariant; only one term per orbit is then
    tested.  Invariance is checked, not assumed.

    Vertices of the upper hull are first collected cheaply as lexicographic
    argmaxima, then every remaining term is tested for dominance against
    the known vertices.  A failed test yields a point where that term beats
    the known vertices, and the argmax there is a new vertex.
    """
    if f.canonical:
        return f
    terms = f.terms
    perms = [tuple(p) for p in symmetry] if symmetry else [tuple(range(f.n))]
    if symmetry:
        for p in perms:
            if len(p) != f.n:
                raise DimensionError("symmetry permutation has the wrong length")
            for a, c in terms.items():
                if terms.get(_apply(p, a)) != c:
                    raise DomainError("polynomial is not invariant under the given symmetry")

    weights = _tie_weights(f)
    vertices = set()

    def add_vertex(a):
        for p in perms:
            vertices.add(_apply(p, a))

    for x in _seed_directions(f.n):
        a = _lex_argmax(terms, x, weights)
        if a not in vertices:
            add_vertex(a)

    settled = set(vertices)
    for beta in sorted(terms):
        if beta in settled:
            continue
        d = terms[beta]
        while True:
            pts = sorted(vertices)
            if _dominated(beta, d, pts, [terms[a] for a in pts]):
                for p in perms:
                    settled.add(_apply(p, beta))
                break
            x = _beating_point(beta, d, pts, [terms[a] for a in pts])
            add_vertex(_lex_argmax(terms, x, weights))
            if beta in vertices:
                break
        settled.update(vertices)
    return TropPoly._raw(f.n, {a: terms[a] for a in vertices}, True)


def canonicalize_greedy(f: TropPoly) -> TropPoly:
    """Reference canonicalization: drop redundant terms one at a time.

    Every test is against the full remaining support.  Slower than
    :func:`canonicalize` but a direct transcription of the definition.
    """
    terms = dict(f.terms)
    for beta in sorted(f.terms):
        others = [a for a in terms if a != beta]
        if _dominated(beta, terms[beta], others, [terms[a] for a in others]):
            del terms[beta]
    return TropPoly._raw(f.n, terms, True)


def trop_equals(f: TropPoly, g: TropPoly, symmetry=None) -> bool:
    """Function equality, decided by comparing canonical forms."""
    _same_arity(f, g)
    return canonicalize(f, symmetry).terms == canonicalize(g, symmetry).terms


def _undominated_term(src: TropPoly, ref: TropPoly):
    """A term of ``src`` that is not dominated by ``ref``, or None."""
    pts = sorted(ref.terms)
    coefs = [ref.terms[a] for a in pts]
    for beta in sorted(src.terms):
        d = src.terms[beta]
        if ref.terms.get(beta, BOTTOM) >= d:
            continue
        if not _dominated(beta, d, pts, coefs):
            return beta
    return None


def witness_point(f: TropPoly, g: TropPoly) -> Optional[tuple]:
    """A rational point where ``f`` and ``g`` differ, or None if f = g."""
    _same_arity(f, g)
    F, G = canonicalize(f), canonicalize(g)
    if F.terms == G.terms:
        return None
    if F.is_zero() or G.is_zero():
        return (Fraction(0),) * f.n
    for src, ref in ((G, F), (F, G)):
        beta = _undominated_term(src, ref)
        if beta is not None:
            pts = sorted(ref.terms)
            x = _beating_point(beta, src.terms[beta], pts, [ref.terms[a] for a in pts])
            assert evaluate(f, x) != evaluate(g, x)
            return x
    raise AssertionError("distinct canonical forms must be separable")  # pragma: no cover

