import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from tropinv.groups import PermGroup
from tropinv.poly import TropPoly

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def rand_fraction(rng, low=-10, high=10, den=4):
    return Fraction(rng.randint(low * den, high * den), den)


def rand_poly(rng, n, max_terms=6, max_deg=4, zero_ok=True):
    """Random polynomial: up to ``max_terms`` terms of total degree <= max_deg."""
    count = rng.randint(0 if zero_ok else 1, max_terms)
    terms = {}
    for _ in range(count):
        exp = [0] * n
        for _ in range(rng.randint(0, max_deg)):
            exp[rng.randrange(n)] += 1
        terms[tuple(exp)] = rand_fraction(rng)
    return TropPoly(n, terms)


def rand_point(rng, n, low=-6, high=6, den=7):
    return tuple(Fraction(rng.randint(low * den, high * den), den) for _ in range(n))


@st.composite
def polys(draw, n, max_terms=5, max_deg=3, zero_ok=True):
    seed = draw(st.integers(0, 2**32 - 1))
    return rand_poly(random.Random(seed), n, max_terms, max_deg, zero_ok)


@st.composite
def points(draw, n):
    seed = draw(st.integers(0, 2**32 - 1))
    return rand_point(random.Random(seed), n)


@st.composite
def permutations(draw, n):
    return tuple(draw(st.permutations(list(range(n)))))


def cyc(n, *cycles):
    return PermGroup.from_cycles(n, *cycles)


@pytest.fixture
def rng():
    return random.Random(12345)
