import random

import pytest

from biplane import catalog
from biplane.aut import (are_isomorphic, automorphism_group,
                         brute_force_automorphism_order, canonical_form,
                         is_automorphism)
from biplane.design import Design, DesignParams, dual
from biplane.errors import InputError
from biplane.perm import Permutation

EXPECTED_ORDERS = {
    "fano_complement": 168,
    "hadamard11": 660,
    "biplane16_primitive": 11520,
    "biplane16_c2c8": 768,
    "biplane16_q8c2": 384,
    "biplane37_qr": 333,
}


def test_automorphism_orders(aut_results):
    for name, expected in EXPECTED_ORDERS.items():
        assert aut_results[name].order == expected, name


def test_fano_order_against_brute_force(aut_results):
    d = catalog.build("fano_complement")
    assert brute_force_automorphism_order(d) == 168 == aut_results["fano_complement"].order


def test_generators_preserve_block_set(aut_results):
    for name, result in aut_results.items():
        d = catalog.build(name)
        for g in result.group.generators:
            assert is_automorphism(d, g), (name, g)


def test_order_invariant_under_relabeling():
    rng = random.Random(11)
    d = catalog.build("biplane16_q8c2")
    base = automorphism_group(d).order
    for _ in range(3):
        images = list(range(1, 17))
        rng.shuffle(images)
        assert automorphism_group(d.relabel(Permutation(images))).order == base


def test_canonical_form_relabeling_invariant():
    rng = random.Random(5)
    for name in ("fano_complement", "hadamard11", "biplane16_c2c8"):
        d = catalog.build(name)
        cert = canonical_form(d)
        for _ in range(4):
            images = list(range(1, d.v + 1))
            rng.shuffle(images)
            relabeled = d.relabel(Permutation(images))
            assert canonical_form(relabeled) == cert, name


def test_three_16_biplanes_pairwise_distinct():
    certs = {name: canonical_form(catalog.build(name)).digest
             for name in ("biplane16_primitive", "biplane16_c2c8", "biplane16_q8c2")}
    assert len(set(certs.values())) == 3


def test_hadamard11_self_dual():
    d = catalog.build("hadamard11")
    assert canonical_form(d) == canonical_form(dual(d))


def test_isomorphic_to_relabeling():
    rng = random.Random(2)
    d = catalog.build("biplane16_c2c8")
    images = list(range(1, 17))
    rng.shuffle(images)
    relabeled = d.relabel(Permutation(images))
    sigma = are_isomorphic(d, relabeled)
    assert sigma is not None
    target = set(relabeled.block_sets())
    assert all(sigma.apply_set(b) in target for b in d.blocks)


def test_distinct_designs_not_isomorphic():
    a = catalog.build("biplane16_primitive")
    b = catalog.build("biplane16_q8c2")
    assert are_isomorphic(a, b) is None


def test_iso_rejects_parameter_mismatch():
    with pytest.raises(InputError):
        are_isomorphic(catalog.build("fano_complement"), catalog.build("hadamard11"))


def test_dual_preserves_group_order(aut_results):
    d = catalog.build("biplane16_q8c2")
    assert automorphism_group(dual(d)).order == aut_results["biplane16_q8c2"].order


def test_unverified_design_rejected():
    junk = Design(DesignParams(7, 4, 2), [(1, 2, 3, 4)])
    with pytest.raises(InputError):
        automorphism_group(junk)
    with pytest.raises(InputError):
        canonical_form(junk)


def test_small_design_brute_force_agreement():
    # the complete (4,3,2) design has the whole of S4 as automorphisms
    complete4 = Design(DesignParams(4, 3, 2), [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])
    assert automorphism_group(complete4).order == 24 == brute_force_automorphism_order(complete4)
