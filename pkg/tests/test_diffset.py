import random

import pytest

from biplane import catalog, diffset
from biplane.aut import are_isomorphic, canonical_form
from biplane.design import DesignParams, verify_symmetric_design
from biplane.diffset import (DifferenceSet, LanderWitness, cyclic, develop,
                             direct_product, elementary_abelian, from_tag,
                             is_difference_set, lander_excluded, quaternion8,
                             search_difference_sets, table_automorphisms)
from biplane.errors import InputError, ScaleError
from biplane.perm import Permutation

QR11 = (1, 3, 4, 5, 9)


def test_group_table_laws():
    for g in (cyclic(11), quaternion8(), direct_product(cyclic(2), cyclic(8)),
              elementary_abelian(2, 4)):
        n = g.n
        assert all(g.mul[0][x] == x for x in range(n))
        assert all(g.mul[x][g.inv[x]] == 0 for x in range(n))


def test_quaternion8_structure():
    q8 = quaternion8()
    # i^2 = j^2 = k^2 = -1, and exactly one involution
    orders = []
    for x in range(8):
        e, y = 1, x
        while y != 0:
            y = q8.mul[y][x]
            e += 1
        orders.append(e)
    assert sorted(orders) == [1, 2, 4, 4, 4, 4, 4, 4]


def test_qr11_is_difference_set():
    assert is_difference_set(cyclic(11), QR11, 2)


def test_random_subsets_mostly_fail():
    rng = random.Random(9)
    c16 = cyclic(16)
    hits = sum(is_difference_set(c16, tuple(rng.sample(range(16), 6)), 2)
               for _ in range(50))
    assert hits == 0  # C16 admits no (16,6,2) difference set at all


def test_develop_qr11_is_hadamard11():
    d = develop(DifferenceSet(group=cyclic(11), elements=QR11, lam=2))
    assert verify_symmetric_design(d).ok
    assert are_isomorphic(d, catalog.build("hadamard11")) is not None


def test_develop_rejects_non_difference_set():
    with pytest.raises(InputError):
        develop(DifferenceSet(group=cyclic(16), elements=(0, 1, 2, 3, 4, 5), lam=2))


def test_develop_regular_translation_action():
    g = cyclic(37)
    ds = DifferenceSet(group=g, elements=tuple(sorted({pow(x, 4, 37) for x in range(1, 37)})), lam=2)
    d = develop(ds)
    blocks = set(d.block_sets())
    for x in range(37):
        perm = Permutation(g.mul[e][x] + 1 for e in range(37))
        assert all(perm.apply_set(b) in blocks for b in d.blocks)


SEARCH_EXPECTATIONS = [
    ("c2xc8", 12, 2),   # translation classes, classes up to Aut(g)
    ("q8xc2", 44, 2),
    ("c16", 0, 0),
]


@pytest.mark.parametrize("tag,n_translation,n_up_to_aut", SEARCH_EXPECTATIONS)
def test_search_class_counts(tag, n_translation, n_up_to_aut):
    g = from_tag(tag)
    found = search_difference_sets(g, 6, 2)
    assert len(found) == n_translation
    autos = table_automorphisms(g)
    found_auto = search_difference_sets(g, 6, 2, automorphisms=autos)
    assert len(found_auto) == n_up_to_aut


def test_search_results_are_difference_sets():
    g = from_tag("c2xc8")
    for ds in search_difference_sets(g, 6, 2):
        assert is_difference_set(g, ds.elements, 2)


def test_search_class_count_invariant_under_relabeling():
    g = from_tag("c2xc8")
    base = len(search_difference_sets(g, 6, 2))
    rng = random.Random(4)
    perm = [0] + rng.sample(range(1, 16), 15)  # identity stays at 0
    inv = [0] * 16
    for i, p in enumerate(perm):
        inv[p] = i
    mul = [[perm[g.mul[inv[a]][inv[b]]] for b in range(16)] for a in range(16)]
    relabeled = diffset._build_table("relabeled", mul)
    assert len(search_difference_sets(relabeled, 6, 2)) == base


def test_c16_classes_within_known_certificates():
    found = search_difference_sets(from_tag("c16"), 6, 2)
    known = {canonical_form(catalog.build(n)).digest
             for n in ("biplane16_primitive", "biplane16_c2c8", "biplane16_q8c2")}
    for ds in found:
        assert canonical_form(develop(ds)).digest in known
    assert found == []


def test_two_c2c8_classes_develop_isomorphic_designs():
    found = search_difference_sets(from_tag("c2xc8"), 6, 2)
    by_cert = {}
    for ds in found:
        by_cert.setdefault(canonical_form(develop(ds)).digest, []).append(ds)
    repeated = [group for group in by_cert.values() if len(group) >= 2]
    assert repeated, "expected distinct difference sets giving one biplane"
    a, b = repeated[0][:2]
    assert a.elements != b.elements
    assert are_isomorphic(develop(a), develop(b)) is not None


def test_search_scale_cap():
    with pytest.raises(ScaleError):
        search_difference_sets(from_tag("c121ab"), 16, 2)


def test_threaded_search_matches_sequential():
    g = from_tag("c2xc8")
    seq = search_difference_sets(g, 6, 2, threads=1)
    par = search_difference_sets(g, 6, 2, threads=4)
    assert [ds.elements for ds in seq] == [ds.elements for ds in par]


def test_lander_witness_121():
    assert lander_excluded(DesignParams(121, 16, 2)) == LanderWitness(11, 2, 5)
    assert pow(2, 5, 11) == 11 - 1


def test_lander_none_where_sets_exist():
    assert lander_excluded(DesignParams(16, 6, 2)) is None
    assert lander_excluded(DesignParams(11, 5, 2)) is None
    assert lander_excluded(DesignParams(7, 4, 2)) is None
    assert lander_excluded(DesignParams(37, 9, 2)) is None


def test_from_tag():
    assert from_tag("c11").n == 11
    assert from_tag("c121ab").n == 121
    assert from_tag("e16").n == 16
    with pytest.raises(InputError):
        from_tag("nonsense")
