"""Separating invariants and the orbit-space embedding they induce.

For rho = (n-1, ..., 0) and each right coset G.s of S_n the invariant
f_s = Tr_G(x^s(rho)) is a max filter with template s(rho).  Together with
e_1, ..., e_n these separate G-orbits, and
phi = (e_1, ..., e_n, f_s, ...) embeds R^n / G.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Sequence

from .errors import DimensionError, SamplingError
from .groups import MAX_DEGREE, PermGroup, act_exponent, coset_representatives, transfer_monomial
from .invariants import elementary_symmetric
from .poly import degree, evaluate

SAME_ORBIT = "same_orbit"
SEPARATED = "separated"
VIOLATION = "violation"

REPORT_DIGITS = 20


@dataclass(frozen=True)
class EmbeddingSpec:
    group: PermGroup
    e_list: tuple
    f_list: tuple
    templates: tuple

    @property
    def m(self) -> int:
        return len(self.e_list) + len(self.f_list)

    @property
    def n(self) -> int:
        return self.group.n

    @property
    def polynomials(self) -> tuple:
        return self.e_list + self.f_list

    def max_degree(self) -> int:
        return max(degree(f) for f in self.polynomials)


def separating_set(G: PermGroup, max_degree: int = MAX_DEGREE) -> EmbeddingSpec:
    n = G.n
    rho = tuple(range(n - 1, -1, -1))
    e_list = tuple(elementary_symmetric(n, k) for k in range(1, n + 1))
    f_list, templates, seen = [], [], set()
    for s in coset_representatives(G, max_degree):
        template = act_exponent(s, rho)
        f = transfer_monomial(G, template)
        if f in seen:
            continue
        seen.add(f)
        f_list.append(f)
        templates.append(template)
    return EmbeddingSpec(G, e_list, tuple(f_list), tuple(templates))


def _check(G, *vs):
    for v in vs:
        if len(v) != G.n:
            raise DimensionError(f"vector of length {len(v)} for a group of degree {G.n}")


def orbit_distance(G: PermGroup, v: Sequence, w: Sequence) -> Fraction:
    """Squared orbit distance: min over g of |g.v - w|^2."""
    _check(G, v, w)
    v = [Fraction(x) for x in v]
    w = [Fraction(x) for x in w]
    return min(
        sum((a - b) ** 2 for a, b in zip(act_exponent(s, v), w)) for s in G.elements
    )


def embed(spec: EmbeddingSpec, v: Sequence) -> tuple:
    _check(spec.group, v)
    return tuple(evaluate(f, v) for f in spec.polynomials)


def max_filter(G: PermGroup, z: Sequence, v: Sequence) -> Fraction:
    """max over g in G of <v, g.z>."""
    _check(G, z, v)
    return max(
        sum(Fraction(a) * Fraction(b) for a, b in zip(v, act_exponent(s, z))) for s in G.elements
    )


def separation_check(spec: EmbeddingSpec, v: Sequence, w: Sequence) -> str:
    same_value = embed(spec, v) == embed(spec, w)
    same_orbit = orbit_distance(spec.group, v, w) == 0
    if same_value and same_orbit:
        return SAME_ORBIT
    if not same_value and not same_orbit:
        return SEPARATED
    return VIOLATION


def sq_norm_diff(a: Sequence, b: Sequence) -> Fraction:
    return sum(((x - y) ** 2 for x, y in zip(a, b)), Fraction(0))


def sqrt_decimal(q: Fraction, digits: int = REPORT_DIGITS) -> str:
    """Square root of a nonnegative rational to ``digits`` significant digits."""
    with localcontext() as ctx:
        ctx.prec = digits + 10
        root = (Decimal(q.numerator) / Decimal(q.denominator)).sqrt()
        ctx.prec = digits
        return str(+root)


@dataclass(frozen=True)
class DistortionReport:
    """Empirical bi-Lipschitz ratios over sampled pairs.

    ``c1_sq`` and ``c2_sq`` are the exact minimum and maximum of
    |phi(v) - phi(w)|^2 / d(Gv, Gw)^2; the ``*_hat`` strings are their
    square roots to 20 significant digits.
    """

    samples: int
    used: int
    seed: int
    c1_sq: Fraction
    c2_sq: Fraction
    low: Fraction
    high: Fraction
    denominator: int

    @property
    def c1_hat(self) -> str:
        return sqrt_decimal(self.c1_sq)

    @property
    def c2_hat(self) -> str:
        return sqrt_decimal(self.c2_sq)

    @property
    def ratio(self) -> str:
        return sqrt_decimal(self.c2_sq / self.c1_sq)

    def to_json(self) -> dict:
        return {
            "kind": "empirical",
            "samples": self.samples,
            "used_pairs": self.used,
            "seed": self.seed,
            "box": [str(self.low), str(self.high)],
            "denominator": self.denominator,
            "c1_sq": str(self.c1_sq),
            "c2_sq": str(self.c2_sq),
            "c1_hat": self.c1_hat,
            "c2_hat": self.c2_hat,
            "ratio": self.ratio,
        }

    def to_text(self) -> str:
        rows = [
            ("kind", "empirical"),
            ("samples", str(self.samples)),
            ("used_pairs", str(self.used)),
            ("seed", str(self.seed)),
            ("c1_hat", self.c1_hat),
            ("c2_hat", self.c2_hat),
            ("ratio", self.ratio),
        ]
        width = max(len(k) for k, _ in rows)
        return "\n".join(f"{k:<{width}}  {v}" for k, v in rows)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def random_point(rng: random.Random, n: int, low, high, denominator: int) -> tuple:
    lo = int(Fraction(low) * denominator)
    hi = int(Fraction(high) * denominator)
    return tuple(Fraction(rng.randint(lo, hi), denominator) for _ in range(n))


def distortion_estimate(
    spec: EmbeddingSpec,
    samples: int,
    seed: int,
    low=-10,
    high=10,
    denominator: int = 8,
) -> DistortionReport:
    """Min and max of |phi(v) - phi(w)| / d(Gv, Gw) over random pairs.

    Pair i is drawn from its own generator seeded by (seed, i), so the
    stream can be partitioned without changing the result.
    """
    if samples < 1:
        raise SamplingError("need at least one sample")
    G = spec.group
    lo_sq = hi_sq = None
    used = 0
    for i in range(samples):
        rng = random.Random(f"{seed}:{i}")
        v = random_point(rng, G.n, low, high, denominator)
        w = random_point(rng, G.n, low, high, denominator)
        d2 = orbit_distance(G, v, w)
        if d2 == 0:
            continue
        used += 1
        r = sq_norm_diff(embed(spec, v), embed(spec, w)) / d2
        if lo_sq is None or r < lo_sq:
            lo_sq = r
        if hi_sq is None or r > hi_sq:
            hi_sq = r
    if not used:
        raise SamplingError("every sampled pair had zero orbit distance")
    return DistortionReport(
        samples, used, seed, lo_sq, hi_sq, Fraction(low), Fraction(high), denominator
    )
