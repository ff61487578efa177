import random

import pytest

from biplane.catalog import PRIMITIVE16_GENERATORS
from biplane.errors import InputError
from biplane.perm import (CycleType, PermGroup, Permutation, closure,
                          cycle_type, group_from_json_dict, group_to_json_dict)

ALPHA = PRIMITIVE16_GENERATORS  # the five 16-point generators used throughout


def test_parser_roundtrip():
    x = Permutation.from_cycles("(2,4,3)(5,13,9)", 16)
    assert x(2) == 4 and x(4) == 3 and x(3) == 2 and x(5) == 13
    assert x(1) == 1
    assert Permutation.from_cycles(x.cycle_string(), 16) == x
    assert Permutation.from_cycles("()", 5).is_identity()
    assert Permutation.from_cycles("", 5).is_identity()


def test_parser_rejects_bad_input():
    with pytest.raises(InputError):
        Permutation.from_cycles("(1,2)(2,3)", 5)  # not disjoint
    with pytest.raises(InputError):
        Permutation.from_cycles("(1,9)", 5)  # out of range
    with pytest.raises(InputError):
        Permutation.from_cycles("(1 2 junk)", 5)


def test_composition_convention():
    a = Permutation.from_cycles("(1,2)", 3)
    b = Permutation.from_cycles("(2,3)", 3)
    assert (a * b)(3) == a(b(3)) == 1
    assert (a * a).is_identity()
    assert a.inverse() == a
    c = Permutation.from_cycles("(1,2,3)", 3)
    assert c**3 == Permutation.identity(3)
    assert c**-1 == c * c


def test_cycle_type_examples():
    a1 = Permutation.from_cycles(ALPHA[0], 16)
    a5 = Permutation.from_cycles(ALPHA[4], 16)
    assert cycle_type(a5).as_dict() == {2: 8}
    assert cycle_type(a1).as_dict() == {1: 1, 3: 5}
    ident = Permutation.identity(121)
    assert cycle_type(ident).as_dict() == {1: 121}


def test_cycle_type_conjugation_invariant():
    rng = random.Random(7)
    a1 = Permutation.from_cycles(ALPHA[0], 16)
    for _ in range(25):
        images = list(range(1, 17))
        rng.shuffle(images)
        g = Permutation(images)
        assert cycle_type(g * a1 * g.inverse()) == cycle_type(a1)


def test_cycle_type_power():
    t = CycleType.from_dict({1: 1, 4: 2, 8: 14})
    assert t.power(2).as_dict() == {1: 1, 2: 4, 4: 28}
    assert t.degree == 121


def test_group_order_example16():
    g = PermGroup.from_cycles(16, ALPHA)
    assert g.order() == 1152
    assert PermGroup.trivial(5).order() == 1
    assert PermGroup.from_cycles(11, ["(1,2,3,4,5,6,7,8,9,10,11)"]).order() == 11


BRUTE_GROUPS = [
    (4, ["(1,2)", "(1,2,3,4)"]),          # S4
    (8, ["(1,2,3,4,5,6,7,8)"]),            # C8
    (4, ["(1,2)(3,4)", "(1,3)(2,4)"]),     # V4
    (4, ["(1,2,3)", "(2,3,4)"]),           # A4
    (8, ["(1,2,3,4)(5,6,7,8)", "(1,5)(2,8)(3,7)(4,6)"]),
    (7, ["(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"]),   # F21
    (6, ["(1,2)", "(1,2,3,4,5,6)"]),       # S6
]


@pytest.mark.parametrize("degree,gens", BRUTE_GROUPS)
def test_order_against_brute_force_closure(degree, gens):
    g = PermGroup.from_cycles(degree, gens)
    assert g.order() == len(closure(g.generators, degree))


@pytest.mark.parametrize("degree,gens", BRUTE_GROUPS)
def test_elements_enumeration_matches_order(degree, gens):
    g = PermGroup.from_cycles(degree, gens)
    els = list(g.elements())
    assert len(els) == len(set(els)) == g.order()
    assert all(e in g for e in els)


def test_orbit_stabilizer_identity():
    g = PermGroup.from_cycles(16, ALPHA)
    for alpha in range(1, 17):
        assert len(g.orbit(alpha)) * g.stabilizer(alpha).order() == g.order()
    assert g.stabilizer(1).order() == 72


def test_orbits_deterministic():
    h = PermGroup.from_cycles(16, [ALPHA[3]])
    assert h.orbits() == [(1,), (2,), (3, 5), (4, 6), (7,), (8,), (9,), (10,),
                          (11, 13), (12, 14), (15,), (16,)]
    triv = PermGroup.trivial(4)
    assert triv.orbits() == [(1,), (2,), (3,), (4,)]
    g = PermGroup.from_cycles(16, ALPHA)
    assert g.orbits() == [tuple(range(1, 17))]


def test_stabilizer_of_untouched_point_is_whole_group():
    g = PermGroup.from_cycles(3, ["(1,2)"])
    assert g.stabilizer(3).order() == 2


def test_semiregular():
    c11 = PermGroup.from_cycles(11, ["(1,2,3,4,5,6,7,8,9,10,11)"])
    assert c11.is_semiregular(range(1, 12))
    g = PermGroup.from_cycles(16, ALPHA)
    assert not g.is_semiregular(range(1, 17))  # a generator fixes point 1
    assert PermGroup.trivial(4).is_semiregular(range(1, 5))
    with pytest.raises(InputError):
        g.is_semiregular([1, 2, 3])  # not invariant


def test_conjugacy_counts_identities():
    g = PermGroup.from_cycles(16, ALPHA)
    a4 = Permutation.from_cycles(ALPHA[3], 16)
    u, u1 = g.conjugacy_counts(a4, 1)
    f = len(a4.fixed_points())
    assert f > 0 and 16 * u1 == f * u  # |Omega|/f = u/u1 for a transitive action
    # central element of an abelian group has a single conjugate
    c8 = PermGroup.from_cycles(8, ["(1,2,3,4,5,6,7,8)"])
    x = Permutation.from_cycles("(1,3,5,7)(2,4,6,8)", 8)
    assert c8.conjugacy_counts(x, 1) == (1, 0)
    with pytest.raises(InputError):
        g.conjugacy_counts(Permutation.from_cycles("(1,2)", 16), 1)  # not in G


def test_membership_sifting():
    g = PermGroup.from_cycles(16, ALPHA)
    for gen in g.generators:
        assert gen in g
        assert gen * gen in g
    assert Permutation.identity(16) in g
    odd_transposition = Permutation.from_cycles("(1,2)", 16)
    assert (odd_transposition in g) == False  # order would exceed 1152 otherwise


def test_primitivity():
    g = PermGroup.from_cycles(16, ALPHA)
    assert g.is_primitive()
    # regular non-cyclic-of-prime-order groups are imprimitive
    v4 = PermGroup.from_cycles(4, ["(1,2)(3,4)", "(1,3)(2,4)"])
    assert not v4.is_primitive()
    c4 = PermGroup.from_cycles(4, ["(1,2,3,4)"])
    assert not c4.is_primitive()


def test_group_json_roundtrip():
    g = PermGroup.from_cycles(16, ALPHA)
    data = group_to_json_dict(g)
    assert data["degree"] == 16
    h = group_from_json_dict(data)
    assert h.order() == g.order()


def test_chain_deterministic_across_rebuilds():
    g1 = PermGroup.from_cycles(16, ALPHA)
    g2 = PermGroup.from_cycles(16, ALPHA)
    assert g1.chain().base() == g2.chain().base()
    assert list(g1.elements())[:50] == list(g2.elements())[:50]
