import pytest

from kummer_brauer.gl2 import (
    GL2,
    enumerate_subgroups,
    validate_surjectivity_criterion,
    witness_classes,
)


def test_group_orders():
    assert GL2(3).order == 48
    assert GL2(5).order == 480


def test_subgroup_enumeration_structural_checks():
    g = GL2(3)
    masks = enumerate_subgroups(g)
    sizes = sorted(bin(m).count("1") for m in masks)
    # Lagrange
    assert all(48 % s == 0 for s in sizes)
    # order-2 subgroup count equals the involution count
    involutions = sum(
        1 for i in range(g.order)
        if i != g.identity and g.mult[i][i] == g.identity)
    assert sizes.count(2) == involutions
    # closure spot check: each mask is closed under the group law
    import random
    rng = random.Random(5)
    for m in rng.sample(masks, 10):
        elems = [i for i in range(g.order) if (m >> i) & 1]
        for a in elems:
            for b in elems:
                assert (m >> g.mult[a][b]) & 1


def test_witness_classes_mod_3_degenerate():
    w1, w2, w3 = witness_classes(3)
    assert w1  # nonsplit witnesses exist
    assert not w2  # t != 0 forces t^2 = 1, so t^2 - 4d is never a nonzero square
    assert not w3  # the excluded u-values cover all of F_3


def test_witness_classes_mod_5():
    w1, w2, w3 = witness_classes(5)
    assert w1 and w2 and w3
    # split witnesses mod 5 all have nonsquare determinant
    assert all(d in (2, 3) for _, d in w2)
    # the only admissible u mod 5 is 3
    for t, d in w3:
        assert t * t * pow(d, -1, 5) % 5 == 3


def test_oracle_passes_mod_3():
    r = validate_surjectivity_criterion(3)
    assert r.passed
    assert r.offending_proper_subgroups == ()
    assert r.group_order == 48
    assert r.subgroup_count == 55
    # the full group itself cannot exhibit the empty witness classes
    assert r.full_group.has_nonsplit
    assert not r.full_group.has_split and not r.full_group.has_generic
    assert len(r.notes) == 2


def test_oracle_passes_mod_5():
    r = validate_surjectivity_criterion(5)
    assert r.passed
    assert r.offending_proper_subgroups == ()
    assert r.group_order == 480
    # sanity: the full group exhibits all three witnesses
    assert r.full_group.all_three
    assert r.notes == ()


def test_oracle_rejects_large_ell():
    with pytest.raises(ValueError):
        validate_surjectivity_criterion(7)
