import random

import pytest

from almostdirect.adp import (
    AdpSpec,
    extend_with_torus,
    partial_pure_braid,
    pure_braid,
    pure_braid_mod_center,
    random_spec,
    upper_mccool_mod_center,
)
from almostdirect.exterior import ExtElem, cohomology_ring, e
from almostdirect.invariants import (
    claim_expansion,
    lcs_identity_holds,
    lcs_ranks,
    poincare_vector,
    tc_certificate,
    tensor,
    torus_ring,
    torus_shuffle_expansion,
    zcl_witness,
    zero_divisor,
)


def test_poincare_vector():
    # coefficients of prod (1 + n_i t)
    assert poincare_vector((1, 2)) == (1, 3, 2)
    assert poincare_vector((1, 2, 3)) == (1, 6, 11, 6)
    assert poincare_vector((2,)) == (1, 2)


def test_lcs_ranks_small_cases():
    # free group lower central series ranks via necklace counts
    assert lcs_ranks((2,), 4) == (2, 1, 2, 3)
    assert lcs_ranks((1, 2), 3) == (3, 1, 2)
    # a direct product of lines has vanishing higher terms
    assert lcs_ranks((1, 1, 1), 4) == (3, 0, 0, 0)


def test_lcs_identity():
    for ranks in ((1, 2), (1, 2, 3), (2, 3), (1, 1, 2), (3,)):
        assert lcs_identity_holds(ranks, 12)


def test_tensor_sign_rule():
    ring = cohomology_ring(AdpSpec((2,)))
    u, v = e(1, 1), e(1, 2)
    left = tensor(ring, ExtElem.one(), u) * tensor(ring, v, ExtElem.one())
    # (1 (x) u)(v (x) 1) = (-1)^{|u||v|} v (x) u
    assert left == -tensor(ring, v, u)
    right = tensor(ring, v, ExtElem.one()) * tensor(ring, ExtElem.one(), u)
    assert right == tensor(ring, v, u)


def test_tensor_factors_reduce_in_the_quotient():
    ring = cohomology_ring(pure_braid(3))
    el = tensor(ring, e(2, 1) * e(2, 2), ExtElem.one())
    expect = tensor(ring, ring.normal_form(e(2, 1) * e(2, 2)), ExtElem.one())
    assert el == expect


def test_zero_divisors_square_to_zero():
    ring = cohomology_ring(pure_braid(4))
    for u in (e(1, 1), e(2, 2), e(3, 1)):
        zd = zero_divisor(ring, u)
        assert (zd * zd).is_zero()
        assert not zd.is_zero()


def test_rank_two_witness_oracle():
    # for one free block of rank 2 the witness is the classical commutator
    # class: (1 (x) x - x (x) 1)(1 (x) y - y (x) 1) = y (x) x - x (x) y
    ring = cohomology_ring(AdpSpec((2,)))
    wit = zcl_witness(ring)
    x1, y1 = e(1, 1), e(1, 2)
    assert wit.length == 2
    assert wit.num_factors == 2
    assert wit.element == tensor(ring, y1, x1) - tensor(ring, x1, y1)


def test_witness_length_doubles_the_block_count():
    for spec in (pure_braid_mod_center(4), upper_mccool_mod_center(4)):
        ring = cohomology_ring(spec)
        wit = zcl_witness(ring)
        assert wit.length == 2 * len(spec.ranks)
        assert wit.num_factors == 2 * len(spec.ranks)
        assert not wit.element.is_zero()


def test_rank_one_blocks_contribute_single_factors():
    # a rank-1 block has only one zero divisor to offer
    ring = cohomology_ring(pure_braid(3))
    wit = zcl_witness(ring)
    assert wit.length == 3
    assert not wit.element.is_zero()


def test_claim_matches_direct_product():
    specs = [pure_braid_mod_center(4), upper_mccool_mod_center(4), AdpSpec((2, 3))]
    rng = random.Random(61)
    specs += [random_spec(rng, max_blocks=3, min_rank=2, max_rank=3) for _ in range(8)]
    for spec in specs:
        ring = cohomology_ring(spec)
        assert claim_expansion(ring) == zcl_witness(ring).element


def test_claim_requires_rank_two_blocks():
    with pytest.raises(ValueError):
        claim_expansion(cohomology_ring(pure_braid(3)))


def test_claim_monomials_are_distinct_basis_pairs():
    spec = pure_braid_mod_center(5)
    ring = cohomology_ring(spec)
    terms = claim_expansion(ring).terms
    l = len(spec.ranks)
    assert len(terms) == 2 ** l
    lefts = {left for left, _ in terms}
    rights = {right for _, right in terms}
    assert len(lefts) == 2 ** l
    assert len(rights) == 2 ** l
    for (left, right), coeff in terms.items():
        assert coeff in (1, -1)
        assert ring.is_normal(left)
        assert ring.is_normal(right)


def test_torus_shuffle_expansion():
    # the m-torus witness expands into 2^m signed shuffles
    for m in (1, 2, 3):
        el = torus_shuffle_expansion(m)
        assert len(el.terms) == 2 ** m
        ring = torus_ring(m)
        full = None
        for j in range(1, m + 1):
            zd = zero_divisor(ring, e(j, 1))
            full = zd if full is None else full * zd
        assert el == full


def test_tc_certificate_pure_braid_family():
    # the center contributes the circle factor, so the braid group itself
    # is certified through its quotient times a line
    for l in (3, 4, 5, 6):
        cert = tc_certificate(pure_braid_mod_center(l), torus_rank=1)
        assert cert.exact == 2 * l - 2
    # directly on the braid group the upper bound counts the rank-1 block
    # as free and overshoots by one
    cert = tc_certificate(pure_braid(3))
    assert cert.lower_bound == 4
    assert cert.upper_bound == 5
    assert cert.exact is None


def test_tc_certificate_upper_mccool_family():
    # the quotient by the center has n - 2 blocks of ranks 2..n-1
    for n in (4, 5, 6):
        cert = tc_certificate(upper_mccool_mod_center(n), torus_rank=1)
        assert cert.exact == 2 * n - 2


def test_tc_certificate_partial_braid_family():
    for k in (2, 3):
        for l in (1, 2, 3):
            cert = tc_certificate(partial_pure_braid(l, k))
            assert cert.exact == 2 * l + 1


def test_tc_certificate_counts_torus_blocks():
    base = pure_braid_mod_center(3)
    for m in (0, 1, 2, 3):
        via_argument = tc_certificate(base, torus_rank=m)
        via_spec = tc_certificate(extend_with_torus(base, m))
        assert via_argument == via_spec
        assert via_argument.exact == 2 + m + 1
        assert via_argument.torus_blocks == m
        assert via_argument.free_blocks == 1


def test_tc_certificate_free_group():
    # a single rank-2 block is a wedge of circles
    cert = tc_certificate(AdpSpec((2,)))
    assert cert.exact == 3
    # one circle alone
    cert = tc_certificate(AdpSpec((1,)))
    assert cert.exact == 2
