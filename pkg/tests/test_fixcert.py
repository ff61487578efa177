import pytest

from biplane import catalog
from biplane.design import Design, DesignParams
from biplane.errors import InputError
from biplane.fixcert import (ALLOWED_79_ORDERS, AUT_ORDER_DIVISOR_121,
                             admissible_cycle_types_121, certify_79,
                             certify_conjugacy_bound, certify_fix_lemmas,
                             check_79_order, fix_report, fixed_subdesign,
                             induced_block_permutation, sylow_bound_121,
                             sylow_bounds_121)
from biplane.perm import CycleType, Permutation, cycle_type


def test_fix_report_identity():
    d = catalog.build("biplane16_c2c8")
    rep = fix_report(d, Permutation.identity(16))
    assert rep.f_points == rep.f_blocks == 16
    assert all(s == 6 for s in rep.s_point.values())  # every point lies on k blocks


def test_fix_report_rejects_non_automorphism():
    d = catalog.build("fano_complement")
    with pytest.raises(InputError):
        fix_report(d, Permutation.from_cycles("(1,2)", 7))


def test_block_and_point_cycle_types_agree(aut_results):
    d = catalog.build("hadamard11")
    for g in aut_results["hadamard11"].group.generators:
        assert cycle_type(g) == cycle_type(induced_block_permutation(d, g))


def test_fixed_point_free_involution_has_no_fixed_blocks(aut_results):
    d = catalog.build("biplane16_c2c8")
    hit = None
    for g in aut_results["biplane16_c2c8"].group.elements():
        if g.order() == 2 and not g.fixed_points():
            hit = g
            break
    assert hit is not None
    rep = fix_report(d, hit)
    assert rep.f_points == rep.f_blocks == 0


def test_odd_order_fixed_count_formula(aut_results):
    # every order-3 element of the (37,9,2) group fixes exactly one point;
    # the fixed-block formula then forces s_B = 0 on its unique fixed block
    d = catalog.build("biplane37_qr")
    seen = 0
    for g in aut_results["biplane37_qr"].group.elements():
        if g.order() != 3:
            continue
        seen += 1
        rep = fix_report(d, g)
        assert rep.f_points == rep.f_blocks == 1
        s = rep.s_block[rep.fixed_blocks[0]]
        assert rep.f_blocks == s * (s - 1) // 2 + 1
    assert seen > 0


def test_involution_with_s4_fixes_eight(aut_results):
    # k = 6 and k - 2 = 4 a square: an involution with s_alpha = 4 fixes
    # exactly k + 2 = 8 points
    d = catalog.build("biplane16_primitive")
    hits = 0
    for g in aut_results["biplane16_primitive"].group.elements():
        if g.order() != 2:
            continue
        rep = fix_report(d, g)
        if rep.f_points and 4 in rep.s_point.values():
            assert rep.f_points == 8 == d.k + 2
            hits += 1
    assert hits > 0


def test_certify_all_checks_pass_fano(aut_results):
    d = catalog.build("fano_complement")
    for g in aut_results["fano_complement"].group.elements():
        if g.is_identity():
            continue
        result = certify_fix_lemmas(d, g)
        assert result.ok, (g.cycle_string(), result.failures())


def test_certify_rejects_non_biplane():
    complete4 = Design(DesignParams(4, 3, 2), [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])
    with pytest.raises(InputError):
        certify_fix_lemmas(complete4, Permutation.identity(4))


def test_certify_gates_report_na(aut_results):
    d = catalog.build("biplane37_qr")
    g = next(g for g in aut_results["biplane37_qr"].group.elements() if g.order() == 37)
    result = certify_fix_lemmas(d, g)
    assert result.ok
    assert result.by_name("incident-two-orbit-counts").status == "n/a"
    assert result.by_name("involution-point-pattern").status == "n/a"


def test_fixed_subdesign_identity():
    d = catalog.build("fano_complement")
    sub, reason = fixed_subdesign(d, Permutation.identity(7))
    assert sub is d and "identity" in reason


def test_fixed_subdesign_involution_gate(aut_results):
    # involutions on an odd-sized block always carry a 2-orbit, so the
    # hypothesis gate must fire
    d = catalog.build("hadamard11")
    inv = next(g for g in aut_results["hadamard11"].group.elements() if g.order() == 2)
    sub, reason = fixed_subdesign(d, inv)
    assert sub is None and "r_B != 0" in reason


def test_fixed_subdesign_nondegenerate(aut_results):
    d = catalog.build("biplane16_primitive")
    hit = None
    for g in aut_results["biplane16_primitive"].group.elements():
        if g.is_identity() or g.order() % 2 == 0:
            continue
        sub, reason = fixed_subdesign(d, g)
        if sub is not None:
            hit = (g, sub)
            break
    assert hit is not None
    assert hit[1].params.as_tuple() == (4, 3, 2)


def test_fixed_subdesign_degenerate_reason(aut_results):
    d = catalog.build("biplane37_qr")
    g = next(g for g in aut_results["biplane37_qr"].group.elements() if g.order() == 3)
    sub, reason = fixed_subdesign(d, g)
    assert sub is None
    assert "s_B = 0" in reason or "degenerate" in reason


def test_conjugacy_bound_hadamard11(aut_results):
    d = catalog.build("hadamard11")
    group = aut_results["hadamard11"].group
    inv = next(g for g in group.elements() if g.order() == 2)
    result = certify_conjugacy_bound(d, group, inv)
    assert result.ok
    assert result.by_name("orbit-ratio-identity").status == "pass"


def test_conjugacy_bound_biplane16(aut_results):
    d = catalog.build("biplane16_primitive")
    group = catalog.primitive16_group()
    a4 = Permutation.from_cycles(catalog.PRIMITIVE16_GENERATORS[3], 16)
    result = certify_conjugacy_bound(d, group, a4)
    assert result.ok


def test_conjugacy_bound_not_applicable_when_fixed_point_free(aut_results):
    d = catalog.build("hadamard11")
    group = aut_results["hadamard11"].group
    g11 = next(g for g in group.elements() if g.order() == 11)
    result = certify_conjugacy_bound(d, group, g11)
    assert all(c.status == "n/a" for c in result.checks)


# -- (121,16,2) tables -------------------------------------------------------

ADMISSIBLE_CASES = [
    (2, [{1: 13, 2: 54}, {1: 9, 2: 56}]),
    (4, [{1: 3, 2: 5, 4: 27}, {1: 7, 2: 3, 4: 27}, {1: 1, 2: 4, 4: 28}]),
    (8, [{1: 1, 4: 2, 8: 14}]),
    (16, []),
    (32, []),
    (3, [{1: 1, 3: 40}, {1: 7, 3: 38}]),
    (9, []),
    (5, [{1: 1, 5: 24}]),
    (25, []),
    (7, [{1: 2, 7: 17}]),
    (49, []),
    (11, [{11: 11}]),
    (121, []),
    (13, [{1: 4, 13: 9}]),
    (169, []),
    (17, []),
    (19, []),
    (127, []),
]


@pytest.mark.parametrize("order,expected", ADMISSIBLE_CASES)
def test_admissible_types_121(order, expected):
    got = [t.as_dict() for t in admissible_cycle_types_121(order)]
    assert got == expected


def test_admissible_types_sum_to_121():
    for order in (2, 3, 4, 5, 7, 8, 11, 13):
        for t in admissible_cycle_types_121(order):
            assert t.degree == 121


def test_admissible_rejects_non_prime_power():
    for bad in (1, 6, 12, 100):
        with pytest.raises(InputError):
            admissible_cycle_types_121(bad)


def test_squaring_consistency():
    order2 = set(admissible_cycle_types_121(2))
    for t in admissible_cycle_types_121(4):
        assert t.power(2) in order2
    order4 = set(admissible_cycle_types_121(4))
    for t in admissible_cycle_types_121(8):
        assert t.power(2) in order4
    assert (CycleType.from_dict({1: 1, 4: 2, 8: 14}).power(2)
            == CycleType.from_dict({1: 1, 2: 4, 4: 28}))


def test_sylow_bounds_product():
    bounds = sylow_bounds_121()
    product = 1
    for p, (bound, _) in bounds.items():
        product *= bound
    assert product == AUT_ORDER_DIVISOR_121 == 5765760
    assert 5765760 == 2**7 * 3**2 * 5 * 7 * 11 * 13
    assert bounds[3] == (9, "elementary abelian")
    assert bounds[11] == (11, "cyclic")


def test_sylow_bound_other_primes_trivial():
    assert sylow_bound_121(17) == (1, "trivial")
    assert sylow_bound_121(11) == (11, "cyclic")
    with pytest.raises(InputError):
        sylow_bound_121(12)


# -- (79,13,2) ---------------------------------------------------------------

def test_check_79_orders():
    for order in ALLOWED_79_ORDERS:
        ok, _ = check_79_order(order)
        assert ok
    for order in (2, 5, 9, 27, 55, 220):
        ok, note = check_79_order(order)
        assert not ok and "contradicts" in note


def test_certify_79_rejects_wrong_params():
    with pytest.raises(InputError):
        certify_79(catalog.build("fano_complement"))


def test_certify_79_rejects_non_verifying_structure():
    # right shape, wrong combinatorics: blocks are 13-point arithmetic windows
    blocks = [tuple(((i + j) % 79) + 1 for j in range(13)) for i in range(79)]
    junk = Design(DesignParams(79, 13, 2), blocks)
    with pytest.raises(InputError):
        certify_79(junk)
