import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import polys, rand_point
from tropinv.errors import DimensionError, DomainError, ResourceError
from tropinv.groups import PermGroup, act_exponent, transfer_monomial
from tropinv.poly import TropPoly, evaluate
from tropinv.rational import (
    Add,
    Div,
    Gen,
    Mul,
    Pow,
    PrimeAssignment,
    TropRational,
    boolean_rational,
    crt_gamma,
    expr_eval,
    expr_from_json,
    expr_to_json,
    factor_boolean_univariate,
    first_primes,
    generator_leaves,
    key_identity_holds,
    node_count,
    rat_equals,
    rewrite_step,
    rewrite_transfer,
)

S2 = PermGroup.symmetric(2)
C3 = PermGroup.from_cycles(3, "(1 2 3)")
T1 = PermGroup.trivial(1)


def test_first_primes():
    assert first_primes(6) == [2, 3, 5, 7, 11, 13]
    assert PrimeAssignment.for_group(C3).modulus == 30


def test_crt_examples():
    assert crt_gamma(PrimeAssignment.for_group(S2), (7, 0)) == (3, 2)
    assert crt_gamma(PrimeAssignment.for_group(C3), (0, 0, 0)) == (0, 0, 0)
    assert crt_gamma(PrimeAssignment.for_group(T1), (1,)) == (1,)


def test_crt_matches_search():
    rng = random.Random(0)
    for G in (S2, C3, PermGroup.trivial(2)):
        assign = PrimeAssignment.for_group(G)
        N = assign.modulus
        for _ in range(5):
            beta = tuple(rng.randint(0, 60) for _ in range(G.n))
            images = [act_exponent(s, beta) for s in assign.elements]
            found = [
                g
                for g in product(range(N), repeat=G.n)
                if all((gj + ij) % p == 0 for p, img in zip(assign.primes, images) for gj, ij in zip(g, img))
            ]
            assert found == [crt_gamma(assign, beta)]


def test_rewrite_s2_example():
    e = rewrite_transfer(S2, (7, 0))
    expected = Div(Add((Pow(Gen((5, 1)), 2), Pow(Gen((1, 3)), 3))), Gen((3, 2)))
    assert e == expected
    assert expr_to_json(e) == {
        "op": "div",
        "args": [
            {"op": "add", "args": [{"op": "pow", "m": 2, "arg": {"gen": [5, 1]}}, {"op": "pow", "m": 3, "arg": {"gen": [1, 3]}}]},
            {"gen": [3, 2]},
        ],
    }
    assert expr_eval(S2, e, (1, 0)) == 7


def test_rewrite_base_case():
    assert rewrite_transfer(S2, (5, 2)) == Gen((5, 2))


def test_rewrite_trivial_group_trace():
    _, gamma, deltas = rewrite_step(T1, (3,))
    assert gamma == (1,) and deltas == [(2,)]
    e = rewrite_transfer(T1, (3,))
    assert all(max(a) < 2 for a in generator_leaves(e))
    assert expr_eval(T1, e, (Fraction(5, 3),)) == 5


def test_rewrite_errors():
    with pytest.raises(DimensionError):
        rewrite_transfer(S2, (1, 2, 3))
    with pytest.raises(DomainError):
        rewrite_transfer(S2, (-1, 2))
    with pytest.raises(ResourceError):
        rewrite_transfer(C3, (10**6, 0, 0), max_nodes=20)


def test_expr_eval_examples():
    assert expr_eval(C3, Gen((1, 0, 0)), (1, 2, 3)) == 3
    a = Gen((2, 0, 1))
    assert expr_eval(C3, Div(a, a), (5, -1, 2)) == 0
    assert expr_eval(C3, Mul((a, a)), (1, 0, 0)) == 4


def test_json_round_trip():
    e = rewrite_transfer(C3, (31, 1, 0))
    assert expr_from_json(expr_to_json(e)) == e
    m = Mul((Gen((1, 0)), Pow(Gen((0, 1)), 2)))
    assert expr_from_json(expr_to_json(m)) == m
    assert node_count(m) == 4


@pytest.mark.parametrize(
    "G,beta",
    [(S2, (7, 0)), (S2, (9, 4)), (S2, (13, 2)), (C3, (31, 1, 0)), (T1, (3,)), (PermGroup.trivial(2), (5, 2))],
)
def test_key_identity_and_evaluation(G, beta):
    assert key_identity_holds(G, beta)
    e = rewrite_transfer(G, beta)
    N = PrimeAssignment.for_group(G).modulus
    assert all(max(a) < N for a in generator_leaves(e))
    direct = transfer_monomial(G, beta)
    rng = random.Random(sum(beta))
    for _ in range(30):
        v = rand_point(rng, G.n)
        assert expr_eval(G, e, v) == evaluate(direct, v)


# -- rational functions -----------------------------------------------------------


def uni(*exps):
    return TropPoly(1, {(e,): 0 for e in exps})


def test_rat_equals_examples():
    f = TropPoly(1, {(0,): 1, (3,): -2})
    one = TropPoly.one(1)
    assert rat_equals(TropRational(f, f), TropRational(one, one))
    assert rat_equals(TropRational(uni(0, 2)), TropRational(uni(0, 1, 2)))
    x1, x2 = TropPoly.variable(2, 0), TropPoly.variable(2, 1)
    assert not rat_equals(TropRational(x1, x2), TropRational(x2, x1))
    with pytest.raises(DomainError):
        TropRational(one, TropPoly.zero(1))


@given(polys(1, zero_ok=False), polys(1, zero_ok=False), polys(1, zero_ok=False), polys(1, zero_ok=False))
def test_rat_equivalence_relation(a, b, c, d):
    r, s = TropRational(a, b), TropRational(c, d)
    t = TropRational(a * c, b * c)  # same class as r
    assert rat_equals(r, r)
    assert rat_equals(r, s) == rat_equals(s, r)
    assert rat_equals(r, t)
    if rat_equals(t, s):
        assert rat_equals(r, s)


@given(polys(1, zero_ok=False), polys(1, zero_ok=False), polys(1, zero_ok=False), polys(1, zero_ok=False))
def test_semifield_operations_pointwise(a, b, c, d):
    r, s = TropRational(a, b), TropRational(c, d)
    for x in (Fraction(-3), Fraction(1, 2), Fraction(4)):
        rv = evaluate(a, (x,)) - evaluate(b, (x,))
        sv = evaluate(c, (x,)) - evaluate(d, (x,))
        for expr, val in ((r * s, rv + sv), (r / s, rv - sv), (r + s, max(rv, sv)), (r**2, 2 * rv), (r**-1, -rv)):
            assert evaluate(expr.num, (x,)) - evaluate(expr.den, (x,)) == val


def test_factor_examples():
    assert factor_boolean_univariate(TropRational(uni(2, 5))) == (2, 3)
    assert factor_boolean_univariate(TropRational(uni(0))) == (0, 0)
    assert factor_boolean_univariate(TropRational(uni(0), uni(0, 1))) == (0, -1)
    with pytest.raises(DomainError):
        factor_boolean_univariate(TropRational(TropPoly(1, {(1,): 2})))
    with pytest.raises(DomainError):
        factor_boolean_univariate(TropRational(TropPoly.zero(1)))


@given(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5))
def test_factor_round_trip_and_homomorphism(a, b, c, d):
    r = boolean_rational(a, b)
    assert factor_boolean_univariate(r) == (a, b)
    assert rat_equals(r, boolean_rational(*factor_boolean_univariate(r)))
    assert factor_boolean_univariate(r * boolean_rational(c, d)) == (a + c, b + d)
