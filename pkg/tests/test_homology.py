import random

from almostdirect.adp import (
    build_presentation,
    partial_pure_braid,
    pure_braid,
    pure_braid_mod_center,
    random_spec,
    upper_mccool,
    upper_mccool_mod_center,
)
from almostdirect.homology import (
    chain_a2,
    generator_pairs,
    h2_matrix,
    kernel_basis,
    koszul_d1,
    koszul_d2,
    verify_chain_map,
    wedge,
)
from almostdirect.laurent import LaurentPoly, t


ONE = LaurentPoly.constant(1)


def test_generator_pairs_order():
    # pairs are listed by the deg-lex order on the second then first leg
    assert generator_pairs((1, 2)) == [
        ((1, 1), (2, 1)),
        ((1, 1), (2, 2)),
        ((2, 1), (2, 2)),
    ]
    assert generator_pairs((2,)) == [((1, 1), (1, 2))]


def test_wedge_is_alternating():
    f = {(1, 1): ONE, (2, 1): t(1, 1)}
    g = {(2, 2): ONE, (1, 1): t(2, 1)}
    fg = wedge(f, g)
    gf = wedge(g, f)
    assert set(fg) == set(gf)
    for pair in fg:
        assert fg[pair] == -gf[pair]
    assert wedge(f, f) == {}


def test_koszul_composition_vanishes():
    # d1 after d2 must be zero on every elementary 2-chain
    for a, b in generator_pairs((2, 3)):
        k2 = {(a, b): t(1, 1) - ONE}
        assert koszul_d1(koszul_d2(k2)).is_zero()


def test_chain_map_on_builtins():
    specs = [
        pure_braid(3),
        pure_braid(4),
        pure_braid(5),
        partial_pure_braid(2, 3),
        upper_mccool(4),
        upper_mccool(5),
        pure_braid_mod_center(4),
        upper_mccool_mod_center(4),
    ]
    for spec in specs:
        report = verify_chain_map(build_presentation(spec))
        assert report.ok, (spec.name, report.failures)


def test_chain_map_on_random_specs():
    rng = random.Random(41)
    for _ in range(15):
        pres = build_presentation(random_spec(rng))
        assert verify_chain_map(pres).ok


def test_chain_map_failures_are_reported():
    # sanity check on the report shape for a passing presentation
    report = verify_chain_map(build_presentation(pure_braid(3)))
    assert report.ok
    assert report.failures == []


def test_h2_matrix_two_strand_oracle():
    # the two relations of the three strand group pair the mixed slots with
    # the identity and hit the inner slot with opposite signs
    m = h2_matrix(build_presentation(pure_braid(3)))
    assert m.row_labels == [(1, 2, 1, 1), (1, 2, 1, 2)]
    assert m.col_labels == [((1, 1), (2, 1)), ((1, 1), (2, 2)), ((2, 1), (2, 2))]
    assert m.to_dense() == [[1, 0, -1], [0, 1, 1]]


def test_h2_matrix_full_row_rank_on_builtins():
    for spec in (pure_braid(4), upper_mccool(4), partial_pure_braid(2, 2)):
        assert h2_matrix(build_presentation(spec)).has_full_row_rank()


def test_chain_a2_augments_to_matrix_row():
    pres = build_presentation(pure_braid(4))
    m = h2_matrix(pres)
    for key, rel in pres.relations.items():
        row = m.row(key)
        aug = {pair: poly.augment() for pair, poly in chain_a2(rel).items()}
        aug = {pair: c for pair, c in aug.items() if c}
        assert aug == {pair: c for pair, c in row.items() if c}


def test_kernel_basis_two_strand_oracle():
    m = h2_matrix(build_presentation(pure_braid(3)))
    (eta,) = kernel_basis(m)
    assert (eta.j, eta.p, eta.q) == (2, 1, 2)
    assert dict(eta.kappa) == {(1, 1, 1): 1, (1, 1, 2): -1}
    assert eta.leading_pair() == ((2, 1), (2, 2))
    assert eta.terms() == {
        ((2, 1), (2, 2)): 1,
        ((1, 1), (2, 1)): 1,
        ((1, 1), (2, 2)): -1,
    }


def test_kernel_count_is_sum_of_block_pair_counts():
    for spec in (pure_braid(5), upper_mccool(5), partial_pure_braid(3, 2)):
        m = h2_matrix(build_presentation(spec))
        expect = sum(n * (n - 1) // 2 for n in spec.ranks)
        assert len(kernel_basis(m)) == expect


def test_kernel_elements_annihilate_the_matrix():
    # each eta is a column vector in the pair basis; the matrix sends it to 0
    rng = random.Random(13)
    specs = [pure_braid(4), upper_mccool(5), partial_pure_braid(2, 3)]
    specs += [random_spec(rng) for _ in range(10)]
    for spec in specs:
        m = h2_matrix(build_presentation(spec))
        for eta in kernel_basis(m):
            coeffs = eta.terms()
            for key in m.row_labels:
                row = m.row(key)
                total = sum(row.get(pair, 0) * c for pair, c in coeffs.items())
                assert total == 0, (spec.name, key, eta)


def test_kernel_mixed_terms_only_pair_into_the_same_block():
    # kappa entries live on pairs (e(i,r), e(j,s)) with the eta's own block j
    for spec in (pure_braid(5), upper_mccool(5)):
        m = h2_matrix(build_presentation(spec))
        for eta in kernel_basis(m):
            for (i, r, s), _ in eta.kappa:
                assert i < eta.j
                assert 1 <= r <= spec.ranks[i - 1]
                assert 1 <= s <= spec.ranks[eta.j - 1]
