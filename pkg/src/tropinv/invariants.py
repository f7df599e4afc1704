"""Generators of invariant semirings of permutation groups."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import DimensionError, DomainError, NotFinitelyGenerated
from .groups import PermGroup, transfer_monomial, transposition_blocks
from .poly import TropPoly, canonicalize, trop_mul, trop_pow
from .polytope import LatticePolytope, edges, primitive_direction


def elementary_symmetric(n: int, k: int, variables: Sequence[int] | None = None) -> TropPoly:
    """e_k: max over k-subsets of the sum of the chosen variables.

    With ``variables`` given (0-based indices), e_k is taken over that subset
    only and embedded in n variables.
    """
    idx = list(range(n)) if variables is None else list(variables)
    if not 1 <= k <= len(idx):
        raise DomainError(f"k must lie in 1..{len(idx)}, got {k}")
    terms = {}
    for subset in combinations(idx, k):
        exp = [0] * n
        for i in subset:
            exp[i] = 1
        terms[tuple(exp)] = 0
    # squarefree monomials of equal degree are all hull vertices
    return TropPoly(n, terms, canonical=True)


def majorizes(alpha: Sequence, beta: Sequence) -> bool:
    """Whether beta lies in the hull of the S_n-orbit of alpha.

    Sorted decreasingly, the totals must agree and every prefix sum of
    alpha must dominate the matching prefix sum of beta.
    """
    if len(alpha) != len(beta):
        raise DimensionError("majorization compares vectors of equal length")
    a = sorted(alpha, reverse=True)
    b = sorted(beta, reverse=True)
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa < sb:
            return False
    return sa == sb


@dataclass(frozen=True)
class EDecomposition:
    """Exponents c with Tr_{S_n}(x^gamma) = e_1^c_1 ... e_n^c_n."""

    c: tuple

    def to_json(self):
        return {"c": list(self.c)}

    def product(self) -> TropPoly:
        n = len(self.c)
        result = TropPoly.one(n)
        sym = PermGroup.symmetric(n).elements if n else None
        for k, ck in enumerate(self.c, start=1):
            if ck:
                result = trop_mul(result, trop_pow(elementary_symmetric(n, k), ck))
                result = canonicalize(result, symmetry=sym)
        return result


def sn_decompose(gamma: Sequence[int]) -> EDecomposition:
    g = sorted(gamma, reverse=True) + [0]
    if any(x < 0 for x in g):
        raise DomainError("exponents must be nonnegative")
    return EDecomposition(tuple(g[i] - g[i + 1] for i in range(len(gamma))))


def symmetric_transfer(gamma: Sequence[int]) -> TropPoly:
    """Tr_{S_n}(x^gamma)."""
    return transfer_monomial(PermGroup.symmetric(len(gamma)), gamma)


def product_transfer_check(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    """Verdict of Tr(x^alpha) Tr(x^beta) = Tr(x^(alpha+beta)) under S_n."""
    if len(alpha) != len(beta):
        raise DimensionError("exponents of different lengths")
    for v in (alpha, beta):
        if any(v[i] < v[i + 1] for i in range(len(v) - 1)):
            raise DomainError(f"{tuple(v)} is not sorted weakly decreasing")
    G = PermGroup.symmetric(len(alpha))
    lhs = trop_mul(transfer_monomial(G, alpha), transfer_monomial(G, beta))
    rhs = transfer_monomial(G, [a + b for a, b in zip(alpha, beta)])
    return canonicalize(lhs, symmetry=G.elements).terms == rhs.terms


def finite_generators(G: PermGroup) -> list:
    """Block elementary symmetric polynomials generating the invariants.

    Only transposition-generated groups have finitely generated invariant
    semirings; every other group raises :class:`NotFinitelyGenerated`.
    """
    info = transposition_blocks(G)
    if not info.is_transposition_generated:
        raise NotFinitelyGenerated(
            f"the invariant semiring of this group (order {G.order}) is not finitely "
            f"generated: G is not generated by 2-cycles (they generate only a "
            f"subgroup of order {info.transposition_order})"
        )
    gens = []
    for block in info.blocks:
        for k in range(1, len(block) + 1):
            gens.append(elementary_symmetric(G.n, k, block))
    return gens


def strict_partitions(n: int, bound: int):
    """Strictly decreasing alpha in N^n with |alpha| <= bound."""

    def rec(prefix, remaining, slots):
        if slots == 0:
            yield tuple(prefix)
            return
        upper = prefix[-1] - 1 if prefix else bound
        # the last slot may be 0, and each earlier slot must exceed the next
        for x in range(slots - 1, upper + 1):
            need = x + (slots - 1) * (slots - 2) // 2
            if need > remaining:
                break
            yield from rec(prefix + [x], remaining - x, slots - 1)

    yield from rec([], bound, n)


def edge_directions(G: PermGroup, alpha: Sequence[int]) -> set:
    """Primitive directions of the edges of the orbit polytope of alpha."""
    P = LatticePolytope(G.n, G.orbit(alpha))
    if len(P.vertices) < 2:
        return set()
    return {primitive_direction(*sorted(e)) for e in edges(P)}


def edge_direction_census(G: PermGroup, bound: int) -> int:
    """Number of distinct edge directions over orbit polytopes of alpha.

    alpha ranges over strictly decreasing vectors of total at most ``bound``.
    """
    return len(census_directions(G, bound))


def census_directions(G: PermGroup, bound: int) -> set:
    dirs = set()
    for alpha in strict_partitions(G.n, bound):
        dirs |= edge_directions(G, alpha)
    return dirs
