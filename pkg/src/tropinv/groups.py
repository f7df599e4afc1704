"""Finite permutation groups acting on exponents, points and polynomials.

Permutations are tuples of 0-based images: ``p[i]`` is the image of i.
Composition follows function notation, ``compose(s, t)(i) = s(t(i))``.
A permutation acts on a vector by moving entry i to position p[i], i.e.
``(s.v)[i] = v[s^-1(i)]``, which is a left action.
"""

from __future__ import annotations

import re
from collections import deque
from fractions import Fraction
from itertools import permutations
from math import factorial, prod
from typing import Iterable, Sequence

from .errors import DimensionError, ResourceError, ValidationError
from .poly import TropPoly, canonicalize

MAX_DEGREE = 8
MAX_ORDER = factorial(MAX_DEGREE)

Permutation = tuple


def identity(n: int) -> Permutation:
    return tuple(range(n))


def compose(s: Permutation, t: Permutation) -> Permutation:
    return tuple(s[i] for i in t)


def inverse(s: Permutation) -> Permutation:
    inv = [0] * len(s)
    for i, j in enumerate(s):
        inv[j] = i
    return tuple(inv)


def is_transposition(s: Permutation) -> bool:
    moved = [i for i, j in enumerate(s) if i != j]
    return len(moved) == 2


def validate_permutation(images: Sequence[int], n: int) -> Permutation:
    """Check a 0-based image list is a bijection of {0..n-1}."""
    p = tuple(images)
    if len(p) != n or sorted(p) != list(range(n)):
        raise ValidationError(f"{[i + 1 for i in p]} is not a permutation of 1..{n}")
    return p


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse 1-based cycle notation such as ``"(1 2 3)(4 5)"`` or ``"()"``."""
    text = text.strip()
    if not re.fullmatch(r"(\(\s*(\d+([\s,]+\d+)*)?\s*\))+", text):
        raise ValidationError(f"cannot parse cycle notation {text!r}")
    images = list(range(n))
    seen = set()
    for body in re.findall(r"\(([^)]*)\)", text):
        cyc = [int(tok) - 1 for tok in re.split(r"[\s,]+", body.strip()) if tok]
        for c in cyc:
            if not 0 <= c < n:
                raise ValidationError(f"point {c + 1} outside 1..{n} in {text!r}")
            if c in seen:
                raise ValidationError(f"cycles in {text!r} are not disjoint")
            seen.add(c)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            images[a] = b
    return tuple(images)


def format_cycles(p: Permutation) -> str:
    seen, out = set(), []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j + 1)
            j = p[j]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


def act_exponent(s: Permutation, alpha: Sequence) -> tuple:
    """The vector ``s.alpha`` with ``(s.alpha)[i] = alpha[s^-1(i)]``."""
    if len(s) != len(alpha):
        raise DimensionError(f"permutation of degree {len(s)} cannot act on length {len(alpha)}")
    out = [0] * len(alpha)
    for i, a in enumerate(alpha):
        out[s[i]] = a
    return tuple(out)


act_point = act_exponent


class PermGroup:
    """A fully enumerated subgroup of S_n.

    ``elements`` starts with the identity, followed by the breadth-first
    closure over the generators in the order given.  Downstream code
    (notably prime pairing in rational rewriting) relies on this order.
    """

    def __init__(self, n: int, generators: Iterable[Sequence[int]] = (), max_order: int = MAX_ORDER):
        if n < 1:
            raise ValidationError("group degree must be at least 1")
        self.n = n
        self.generators = tuple(validate_permutation(g, n) for g in generators)
        e = identity(n)
        elements = [e]
        seen = {e}
        queue = deque([e])
        while queue:
            g = queue.popleft()
            for s in self.generators:
                h = compose(s, g)
                if h not in seen:
                    if len(elements) >= max_order:
                        raise ResourceError(f"group order exceeds the cap {max_order}")
                    seen.add(h)
                    elements.append(h)
                    queue.append(h)
        self.elements = tuple(elements)
        self._set = frozenset(elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p):
        return tuple(p) in self._set

    def __repr__(self):
        gens = ", ".join(format_cycles(g) for g in self.generators)
        return f"PermGroup(n={self.n}, <{gens}>, order={self.order})"

    def same_elements(self, other: "PermGroup") -> bool:
        return self.n == other.n and self._set == other._set

    @classmethod
    def symmetric(cls, n: int) -> "PermGroup":
        gens = []
        if n >= 2:
            gens.append(tuple([1, 0] + list(range(2, n))))
        if n >= 3:
            gens.append(tuple(list(range(1, n)) + [0]))
        return cls(n, gens)

    @classmethod
    def trivial(cls, n: int) -> "PermGroup":
        return cls(n, [])

    @classmethod
    def from_cycles(cls, n: int, *cycles: str) -> "PermGroup":
        return cls(n, [parse_cycles(c, n) for c in cycles])

    def orbit(self, alpha: Sequence) -> list:
        """Distinct images of ``alpha``, in element order."""
        out, seen = [], set()
        for s in self.elements:
            v = act_exponent(s, alpha)
            if v not in seen:
                seen.add(v)
                out.append(v)
        return out

    def act_poly(self, s: Permutation, f: TropPoly) -> TropPoly:
        return TropPoly._raw(f.n, {act_exponent(s, a): c for a, c in f.terms.items()})


def enumerate_group(n: int, generators: Iterable[Sequence[int]]) -> PermGroup:
    return PermGroup(n, generators)


def transfer(G: PermGroup, f: TropPoly) -> TropPoly:
    """Canonical tropical sum of ``f`` over its G-orbit."""
    if f.n != G.n:
        raise DimensionError(f"polynomial arity {f.n} differs from group degree {G.n}")
    terms = {}
    for s in G.elements:
        for a, c in f.terms.items():
            b = act_exponent(s, a)
            old = terms.get(b)
            if old is None or c > old:
                terms[b] = c
    return canonicalize(TropPoly._raw(f.n, terms), symmetry=G.elements)


def transfer_monomial(G: PermGroup, alpha: Sequence[int], coef=0) -> TropPoly:
    """Tr_G(c x^alpha); every orbit point is a vertex, so no LP is needed."""
    c = Fraction(coef)
    return TropPoly._raw(G.n, {b: c for b in G.orbit(alpha)}, True)


def is_invariant(G: PermGroup, f: TropPoly) -> bool:
    """Whether every generator fixes ``f`` as a function."""
    F = canonicalize(f)
    return all(canonicalize(G.act_poly(s, F)).terms == F.terms for s in G.generators)


class Blocks:
    """Result of :func:`transposition_blocks`."""

    def __init__(self, blocks, transposition_order, group_order):
        self.blocks = blocks
        self.transposition_order = transposition_order
        self.group_order = group_order

    @property
    def is_transposition_generated(self) -> bool:
        return self.transposition_order == self.group_order

    def __repr__(self):
        blocks = [[i + 1 for i in b] for b in self.blocks]
        return f"Blocks({blocks}, generated={self.is_transposition_generated})"


def transposition_blocks(G: PermGroup) -> Blocks:
    """Blocks of the graph of 2-cycles in G, and whether they generate G.

    The 2-cycles generate the product of the symmetric groups on the
    connected components, whose order is the product of the factorials of
    the block sizes.
    """
    parent = list(range(G.n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for s in G.elements:
        if is_transposition(s):
            i, j = [k for k in range(G.n) if s[k] != k]
            parent[find(i)] = find(j)
    comps = {}
    for i in range(G.n):
        comps.setdefault(find(i), []).append(i)
    blocks = sorted(comps.values())
    n_order = prod(factorial(len(b)) for b in blocks)
    return Blocks(blocks, n_order, G.order)


def transposition_subgroup(G: PermGroup) -> PermGroup:
    """The subgroup generated by all 2-cycles of G, by enumeration."""
    return PermGroup(G.n, [s for s in G.elements if is_transposition(s)])


def coset_representatives(G: PermGroup, max_degree: int = MAX_DEGREE) -> list:
    """One representative per right coset G.s of S_n, lexicographically least.

    Representatives are visited in lexicographic order of S_n, so each
    returned permutation is the smallest element of its coset.
    """
    if G.n > max_degree:
        raise ResourceError(f"coset enumeration needs n <= {max_degree}, got {G.n}")
    covered = set()
    reps = []
    for s in permutations(range(G.n)):
        if s in covered:
            continue
        reps.append(s)
        for t in G.elements:
            covered.add(compose(t, s))
    return reps
