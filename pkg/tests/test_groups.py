import random
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import polys
from tropinv.errors import DimensionError, ResourceError, ValidationError
from tropinv.groups import (
    PermGroup,
    act_exponent,
    compose,
    coset_representatives,
    format_cycles,
    identity,
    inverse,
    is_invariant,
    parse_cycles,
    transfer,
    transfer_monomial,
    transposition_blocks,
    transposition_subgroup,
)
from tropinv.poly import TropPoly, canonicalize, trop_add, trop_equals, trop_mul

GROUPS = [
    PermGroup.trivial(3),
    PermGroup.symmetric(3),
    PermGroup.from_cycles(3, "(1 2 3)"),
    PermGroup.from_cycles(3, "(1 2)"),
    PermGroup.from_cycles(4, "(1 2)", "(3 4)"),
    PermGroup.from_cycles(4, "(1 2)(3 4)"),
    PermGroup.from_cycles(4, "(1 2 3 4)"),
    PermGroup.from_cycles(4, "(1 2 3)", "(2 3 4)"),
    PermGroup.symmetric(4),
]


def brute_closure(n, gens):
    elems = {identity(n)}
    while True:
        new = {compose(a, b) for a in elems | set(gens) for b in elems | set(gens)} | elems
        if new == elems:
            return elems
        elems = new


def test_orders():
    assert PermGroup.from_cycles(3, "(1 2 3)").order == 3
    assert PermGroup.from_cycles(4, "(1 2)", "(3 4)").order == 4
    assert PermGroup.from_cycles(3, "(1 2)", "(1 2 3)").order == 6
    assert PermGroup.symmetric(5).order == 120


def test_enumeration_matches_brute_force():
    for G in GROUPS:
        assert set(G.elements) == brute_closure(G.n, G.generators)
        assert G.elements[0] == identity(G.n)


def test_invalid_generators():
    with pytest.raises(ValidationError):
        PermGroup(3, [(0, 0, 1)])
    with pytest.raises(ValidationError):
        parse_cycles("(1 4)", 3)
    with pytest.raises(ValidationError):
        parse_cycles("(1 2)(2 3)", 3)
    with pytest.raises(ValidationError):
        parse_cycles("1 2", 3)


def test_order_cap():
    with pytest.raises(ResourceError):
        PermGroup(4, PermGroup.symmetric(4).generators, max_order=10)


def test_cycle_round_trip():
    for text in ["()", "(1 2 3)", "(1 3)(2 4)", "(1 4 2)"]:
        assert format_cycles(parse_cycles(text, 4)) == text


def test_action_examples():
    c = parse_cycles("(1 2 3)", 3)
    assert act_exponent(identity(3), (2, 1, 0)) == (2, 1, 0)
    assert act_exponent(c, (2, 1, 0)) == (0, 2, 1)
    with pytest.raises(DimensionError):
        act_exponent(c, (1, 2))


@given(st.permutations(range(4)), st.permutations(range(4)), st.lists(st.integers(0, 5), min_size=4, max_size=4))
def test_action_law(s, t, alpha):
    s, t = tuple(s), tuple(t)
    assert act_exponent(compose(s, t), alpha) == act_exponent(s, act_exponent(t, alpha))
    assert act_exponent(inverse(s), act_exponent(s, alpha)) == tuple(alpha)


def test_transfer_examples():
    C3 = PermGroup.from_cycles(3, "(1 2 3)")
    x1 = TropPoly.variable(3, 0)
    assert transfer(C3, x1).terms == {(1, 0, 0): 0, (0, 1, 0): 0, (0, 0, 1): 0}
    f = TropPoly(2, {(0, 0): 0, (1, 0): 0, (2, 0): 0})
    assert transfer(PermGroup.trivial(2), f) == canonicalize(f)
    S2 = PermGroup.symmetric(2)
    assert transfer(S2, TropPoly.monomial((2, 1))).terms == {(2, 1): 0, (1, 2): 0}
    with pytest.raises(DimensionError):
        transfer(S2, x1)


def test_transfer_monomial_matches_transfer():
    rng = random.Random(0)
    for G in GROUPS:
        alpha = tuple(rng.randint(0, 4) for _ in range(G.n))
        assert transfer_monomial(G, alpha, 3).terms == transfer(G, TropPoly.monomial(alpha, 3)).terms


@given(polys(3), polys(3))
def test_transfer_properties(a, b):
    for G in GROUPS[:4]:
        ta = transfer(G, a)
        assert is_invariant(G, ta)
        for s in G.elements:
            assert trop_equals(G.act_poly(s, ta), ta)
        assert trop_equals(transfer(G, trop_add(a, b)), trop_add(ta, transfer(G, b)))
        # Tr(a b) = a Tr(b) for invariant a
        assert trop_equals(transfer(G, trop_mul(ta, b)), trop_mul(ta, transfer(G, b)))


def test_blocks_examples():
    info = transposition_blocks(PermGroup.from_cycles(4, "(1 2)", "(3 4)"))
    assert info.blocks == [[0, 1], [2, 3]] and info.is_transposition_generated
    info = transposition_blocks(PermGroup.from_cycles(3, "(1 2 3)"))
    assert info.blocks == [[0], [1], [2]] and not info.is_transposition_generated
    info = transposition_blocks(PermGroup.from_cycles(4, "(1 2)(3 4)"))
    assert info.blocks == [[0], [1], [2], [3]] and not info.is_transposition_generated


def test_blocks_match_brute_force():
    for G in GROUPS:
        info = transposition_blocks(G)
        assert info.is_transposition_generated == transposition_subgroup(G).same_elements(G)
        assert info.transposition_order == transposition_subgroup(G).order


def test_coset_counts():
    assert len(coset_representatives(PermGroup.symmetric(3))) == 1
    assert len(coset_representatives(PermGroup.trivial(3))) == 6
    assert len(coset_representatives(PermGroup.from_cycles(3, "(1 2 3)"))) == 2
    with pytest.raises(ResourceError):
        coset_representatives(PermGroup.trivial(4), max_degree=3)


def test_cosets_partition_sn():
    for G in GROUPS:
        reps = coset_representatives(G)
        cosets = [frozenset(compose(t, s) for t in G.elements) for s in reps]
        assert len(set(cosets)) == len(cosets)
        union = set().union(*cosets)
        assert union == set(permutations(range(G.n)))
        assert sum(len(c) for c in cosets) == len(union)
