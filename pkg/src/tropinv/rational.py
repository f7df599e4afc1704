"""Tropical rational functions and rewriting of transfers.

``rewrite_transfer`` expresses Tr_G(x^beta) through transfers Tr_G(x^alpha)
with every entry of alpha below N = p_1 ... p_k (the first k = |G| primes),
using the identity

    Tr(x^beta) Tr(x^gamma) = sum_i Tr(x^delta_i)^p_i,
    delta_i = (gamma + sigma_i(beta)) / p_i,

where gamma is chosen by the Chinese remainder theorem.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Sequence, Union

from .errors import DimensionError, DomainError, ResourceError
from .groups import PermGroup, act_exponent, transfer_monomial
from .poly import TropPoly, canonicalize, trop_add, trop_equals, trop_mul, trop_pow

MAX_NODES = 10**5


def first_primes(k: int) -> list:
    primes = []
    cand = 2
    while len(primes) < k:
        if all(cand % p for p in primes if p * p <= cand):
            primes.append(cand)
        cand += 1
    return primes


@dataclass(frozen=True)
class PrimeAssignment:
    """Group elements in enumeration order paired with the first k primes."""

    elements: tuple
    primes: tuple

    @classmethod
    def for_group(cls, G: PermGroup) -> "PrimeAssignment":
        return cls(G.elements, tuple(first_primes(G.order)))

    @property
    def modulus(self) -> int:
        return prod(self.primes)


def crt_gamma(assign: PrimeAssignment, beta: Sequence[int]) -> tuple:
    """The gamma in [0, N)^n with gamma + sigma_i(beta) divisible by p_i."""
    N = assign.modulus
    images = [act_exponent(s, beta) for s in assign.elements]
    gamma = []
    for j in range(len(beta)):
        x = 0
        for p, img in zip(assign.primes, images):
            Np = N // p
            x += (-img[j] % p) * Np * pow(Np, -1, p)
        gamma.append(x % N)
    return tuple(gamma)


# -- expression trees ---------------------------------------------------------


@dataclass(frozen=True)
class Gen:
    alpha: tuple


@dataclass(frozen=True)
class Add:
    args: tuple


@dataclass(frozen=True)
class Mul:
    args: tuple


@dataclass(frozen=True)
class Pow:
    arg: "InvExpr"
    m: int


@dataclass(frozen=True)
class Div:
    num: "InvExpr"
    den: "InvExpr"


InvExpr = Union[Gen, Add, Mul, Pow, Div]


def expr_to_json(e: InvExpr):
    if isinstance(e, Gen):
        return {"gen": list(e.alpha)}
    if isinstance(e, Add):
        return {"op": "add", "args": [expr_to_json(a) for a in e.args]}
    if isinstance(e, Mul):
        return {"op": "mul", "args": [expr_to_json(a) for a in e.args]}
    if isinstance(e, Pow):
        return {"op": "pow", "m": e.m, "arg": expr_to_json(e.arg)}
    return {"op": "div", "args": [expr_to_json(e.num), expr_to_json(e.den)]}


def expr_from_json(obj) -> InvExpr:
    if "gen" in obj:
        return Gen(tuple(obj["gen"]))
    op = obj["op"]
    if op == "add":
        return Add(tuple(expr_from_json(a) for a in obj["args"]))
    if op == "mul":
        return Mul(tuple(expr_from_json(a) for a in obj["args"]))
    if op == "pow":
        return Pow(expr_from_json(obj["arg"]), obj["m"])
    num, den = obj["args"]
    return Div(expr_from_json(num), expr_from_json(den))


def generator_leaves(e: InvExpr) -> list:
    """All Gen exponents in the tree, with repetition, depth first."""
    if isinstance(e, Gen):
        return [e.alpha]
    if isinstance(e, (Add, Mul)):
        return [a for arg in e.args for a in generator_leaves(arg)]
    if isinstance(e, Pow):
        return generator_leaves(e.arg)
    return generator_leaves(e.num) + generator_leaves(e.den)


def node_count(e: InvExpr) -> int:
    if isinstance(e, Gen):
        return 1
    if isinstance(e, (Add, Mul)):
        return 1 + sum(node_count(a) for a in e.args)
    if isinstance(e, Pow):
        return 1 + node_count(e.arg)
    return 1 + node_count(e.num) + node_count(e.den)


def rewrite_step(G: PermGroup, beta: Sequence[int]):
    """gamma and the deltas of one rewriting step for ``beta``."""
    assign = PrimeAssignment.for_group(G)
    gamma = crt_gamma(assign, beta)
    deltas = []
    for s, p in zip(assign.elements, assign.primes):
        img = act_exponent(s, beta)
        deltas.append(tuple((g + b) // p for g, b in zip(gamma, img)))
    return assign, gamma, deltas


def rewrite_transfer(G: PermGroup, beta: Sequence[int], max_nodes: int = MAX_NODES) -> InvExpr:
    """Tr_G(x^beta) as a quotient expression in small-exponent transfers."""
    beta = tuple(beta)
    if len(beta) != G.n:
        raise DimensionError(f"exponent length {len(beta)} differs from group degree {G.n}")
    if any(b < 0 for b in beta):
        raise DomainError("exponents must be nonnegative")
    assign = PrimeAssignment.for_group(G)
    N = assign.modulus
    budget = [0]
    memo = {}

    def rec(b):
        if b in memo:
            budget[0] += memo[b][1]
            if budget[0] > max_nodes:
                raise ResourceError(f"rewriting exceeds {max_nodes} expression nodes")
            return memo[b][0]
        start = budget[0]
        if max(b, default=0) < N:
            budget[0] += 1
            expr = Gen(b)
        else:
            _, gamma, deltas = rewrite_step(G, b)
            budget[0] += 3 + len(deltas)
            if budget[0] > max_nodes:
                raise ResourceError(f"rewriting exceeds {max_nodes} expression nodes")
            powers = tuple(Pow(rec(d), p) for d, p in zip(deltas, assign.primes))
            expr = Div(Add(powers), Gen(gamma))
        if budget[0] > max_nodes:
            raise ResourceError(f"rewriting exceeds {max_nodes} expression nodes")
        memo[b] = (expr, budget[0] - start)
        return expr

    return rec(beta)


def gen_value(G: PermGroup, alpha: Sequence[int], v: Sequence) -> Fraction:
    """Tr_G(x^alpha)(v) = max over the group of <sigma(alpha), v>."""
    return max(sum(a * x for a, x in zip(act_exponent(s, alpha), v)) for s in G.elements)


def expr_eval(G: PermGroup, e: InvExpr, v: Sequence) -> Fraction:
    """Value of the expression at v; every node is a finite rational."""
    if len(v) != G.n:
        raise DimensionError(f"point has {len(v)} coordinates, group degree is {G.n}")
    v = [Fraction(x) for x in v]
    cache = {}

    def ev(node):
        if isinstance(node, Gen):
            if node.alpha not in cache:
                cache[node.alpha] = gen_value(G, node.alpha, v)
            return cache[node.alpha]
        if isinstance(node, Add):
            return max(ev(a) for a in node.args)
        if isinstance(node, Mul):
            return sum((ev(a) for a in node.args), Fraction(0))
        if isinstance(node, Pow):
            return node.m * ev(node.arg)
        return ev(node.num) - ev(node.den)

    return ev(e)


def key_identity_holds(G: PermGroup, beta: Sequence[int]) -> bool:
    """Exact check of Tr(x^beta) Tr(x^gamma) = sum_i Tr(x^delta_i)^p_i."""
    assign, gamma, deltas = rewrite_step(G, beta)
    sym = G.elements
    lhs = trop_mul(transfer_monomial(G, beta), transfer_monomial(G, gamma))
    rhs = TropPoly.zero(G.n)
    for d, p in zip(deltas, assign.primes):
        rhs = trop_add(rhs, canonicalize(trop_pow(transfer_monomial(G, d), p), symmetry=sym))
    return trop_equals(lhs, rhs, symmetry=sym)


# -- quotient semifield -------------------------------------------------------


class TropRational:
    """A formal quotient num / den of polynomials, den nonzero.

    Kept unreduced; equality is by cross multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: TropPoly, den: TropPoly | None = None):
        if den is None:
            den = TropPoly.one(num.n)
        if num.n != den.n:
            raise DimensionError("numerator and denominator have different arity")
        if den.is_zero():
            raise DomainError("denominator of a tropical rational function is zero")
        self.num = canonicalize(num)
        self.den = canonicalize(den)

    @property
    def n(self):
        return self.num.n

    def __mul__(self, other):
        return TropRational(trop_mul(self.num, other.num), trop_mul(self.den, other.den))

    def __truediv__(self, other):
        if other.num.is_zero():
            raise DomainError("division by the zero rational function")
        return TropRational(trop_mul(self.num, other.den), trop_mul(self.den, other.num))

    def __add__(self, other):
        num = trop_add(trop_mul(self.num, other.den), trop_mul(self.den, other.num))
        return TropRational(num, trop_mul(self.den, other.den))

    def __pow__(self, m: int):
        if m >= 0:
            return TropRational(trop_pow(self.num, m), trop_pow(self.den, m))
        return TropRational(trop_pow(self.den, -m), trop_pow(self.num, -m))

    def __repr__(self):
        return f"TropRational({self.num!r}, {self.den!r})"


def rat_equals(r1: TropRational, r2: TropRational) -> bool:
    if r1.den.is_zero() or r2.den.is_zero():
        raise DomainError("zero denominator")
    return trop_equals(trop_mul(r1.num, r2.den), trop_mul(r2.num, r1.den))


def _boolean_interval(f: TropPoly, what: str):
    if f.n != 1:
        raise DimensionError(f"{what} must be univariate")
    if f.is_zero():
        raise DomainError(f"{what} is the zero polynomial")
    if any(c != 0 for c in f.terms.values()):
        raise DomainError(f"{what} has a coefficient other than the unit 0")
    exps = [a[0] for a in f.terms]
    return min(exps), max(exps)


def factor_boolean_univariate(r: TropRational) -> tuple:
    """The unique (a, b) with r = x^a (1 + x)^b in the Boolean semifield.

    A nonzero Boolean univariate polynomial is x^lo + x^hi, which equals
    x^lo (1 + x)^(hi - lo).
    """
    lo1, hi1 = _boolean_interval(r.num, "numerator")
    lo2, hi2 = _boolean_interval(r.den, "denominator")
    return lo1 - lo2, (hi1 - lo1) - (hi2 - lo2)


def boolean_rational(a: int, b: int) -> TropRational:
    """x^a (1 + x)^b as a quotient of Boolean univariate polynomials."""
    x_pos = TropPoly.monomial((max(a, 0),))
    x_neg = TropPoly.monomial((max(-a, 0),))
    one_plus_x = TropPoly(1, {(0,): 0, (1,): 0})
    num = trop_mul(x_pos, trop_pow(one_plus_x, max(b, 0)))
    den = trop_mul(x_neg, trop_pow(one_plus_x, max(-b, 0)))
    return TropRational(num, den)
