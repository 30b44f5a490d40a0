"""Acceptance suite: one test per numbered criterion, all exact.

Every test prints one ``criterion N: PASS/FAIL`` line (shown with ``-s``
or on failure) and asserts the stated values with zero tolerance, so the
``pytest -v`` report carries one line per criterion.
"""

import math
import random
from itertools import combinations

from almostdirect.adp import (
    build_presentation,
    partial_pure_braid,
    pure_braid,
    pure_braid_mod_center,
    random_spec,
    upper_mccool,
    upper_mccool_mod_center,
)
from almostdirect.exterior import cohomology_ring, e
from almostdirect.fox import GroupRingElem, fox_gradient
from almostdirect.homology import h2_matrix, verify_chain_map
from almostdirect.invariants import (
    claim_expansion,
    lcs_identity_holds,
    lcs_ranks,
    poincare_vector,
    tc_certificate,
    zcl_witness,
)
from almostdirect.linalg import span_rank, spans_equal
from almostdirect.words import Word


def report(num, ok, detail):
    print("criterion %d: %s  %s" % (num, "PASS" if ok else "FAIL", detail))
    return ok


def all_builtins_through_five_blocks():
    specs = [pure_braid(l) for l in range(2, 7)]
    specs += [partial_pure_braid(l, k) for l in (1, 2, 3) for k in (1, 2, 3)]
    specs += [upper_mccool(n) for n in range(2, 7)]
    specs += [pure_braid_mod_center(l) for l in range(3, 7)]
    specs += [upper_mccool_mod_center(n) for n in range(3, 7)]
    assert all(len(s.ranks) <= 5 for s in specs)
    return specs


_CACHE = {}


def fifty_random_specs():
    if "random" not in _CACHE:
        rng = random.Random(20260815)
        _CACHE["random"] = [
            random_spec(rng, max_blocks=4, min_rank=1, max_rank=3, max_factors=4)
            for _ in range(50)
        ]
    return _CACHE["random"]


def specs_under_test():
    return all_builtins_through_five_blocks() + fifty_random_specs()


def ring_of(spec):
    if ("ring", spec) not in _CACHE:
        _CACHE[("ring", spec)] = cohomology_ring(spec)
    return _CACHE[("ring", spec)]


def rows_of(elems):
    return [dict(el.terms) for el in elems]


def test_criterion_01_pure_braid_kernel_span():
    # the degree-2 kernel of the braid group equals the span of the Arnold
    # relations e_ij e_ik - e_ij e_jk + e_ik e_jk over strand triples
    ok = True
    detail = []
    for l in (3, 4, 5):
        ring = ring_of(pure_braid(l))
        eta_rows = rows_of(ring.eta_elements())

        def E(i, j):
            return e(j - 1, i)

        arnold = [
            E(i, j) * E(i, k) - E(i, j) * E(j, k) + E(i, k) * E(j, k)
            for i, j, k in combinations(range(1, l + 1), 3)
        ]
        arnold_rows = rows_of(arnold)
        same = (
            spans_equal(eta_rows, arnold_rows)
            and span_rank(eta_rows)
            == span_rank(arnold_rows)
            == span_rank(eta_rows + arnold_rows)
        )
        ok = ok and same
        detail.append("l=%d rank %d" % (l, span_rank(eta_rows)))
    assert report(1, ok, ", ".join(detail))


def test_criterion_02_mccool_kernel_span():
    # the computed kernel equals the span of e_{i,p} e_{j,i+1} - e_{j,p} e_{j,i+1}
    ok = True
    detail = []
    for n in (3, 4, 5):
        ring = ring_of(upper_mccool(n))
        eta_rows = rows_of(ring.eta_elements())
        rel = [
            e(i, p) * e(j, i + 1) - e(j, p) * e(j, i + 1)
            for j in range(1, n)
            for i in range(1, j)
            for p in range(1, i + 1)
        ]
        rel_rows = rows_of(rel)
        same = (
            spans_equal(eta_rows, rel_rows)
            and span_rank(eta_rows)
            == span_rank(rel_rows)
            == span_rank(eta_rows + rel_rows)
        )
        ok = ok and same
        detail.append("n=%d rank %d" % (n, span_rank(eta_rows)))
    assert report(2, ok, ", ".join(detail))


def test_criterion_03_hilbert_function():
    # quotient dimensions match the coefficients of prod (1 + n_i t)
    specs = specs_under_test()
    ok = True
    for spec in specs:
        ring = ring_of(spec)
        expect = poincare_vector(spec.ranks)
        dims = tuple(ring.dimension(k) for k in range(len(spec.ranks) + 1))
        ok = ok and dims == expect
    p4 = tuple(ring_of(pure_braid(4)).dimension(k) for k in range(4))
    ok = ok and p4 == (1, 6, 11, 6)
    assert report(
        3, ok, "%d specs, P_4 dimensions %s" % (len(specs), (1, 6, 11, 6))
    )


def test_criterion_04_chain_map_identity():
    # d2 after a2 equals the presentation boundary on every relation
    specs = specs_under_test()
    ok = True
    total = 0
    for spec in specs:
        pres = build_presentation(spec)
        total += len(pres.relations)
        rep = verify_chain_map(pres)
        ok = ok and rep.ok
    assert report(4, ok, "%d relations over %d specs" % (total, len(specs)))


def test_criterion_05_groebner_certification():
    # elimination ranks match the Hilbert prediction in degrees 2..l+1,
    # including the vanishing of the quotient one past the block count
    specs = specs_under_test()
    ok = True
    for spec in specs:
        ring = ring_of(spec)
        rep = ring.groebner_verify()
        ok = ok and rep.ok
        l = len(spec.ranks)
        n_total = sum(spec.ranks)
        top = [d for d in rep.degrees if d.degree == l + 1]
        ok = ok and len(top) == 1
        ok = ok and top[0].expected_rank == math.comb(n_total, l + 1)
        ok = ok and ring.dimension(l + 1) == 0
    assert report(5, ok, "degrees 2..l+1 on %d specs" % len(specs))


def test_criterion_06_decomposition_independence():
    # the integral matrix does not depend on how the relation words are
    # split into commutators
    specs = specs_under_test()
    ok = True
    for spec in specs:
        first = h2_matrix(build_presentation(spec, pairing="first"))
        last = h2_matrix(build_presentation(spec, pairing="last"))
        ok = ok and first.to_dense() == last.to_dense()
    assert report(6, ok, "first vs last pairing on %d specs" % len(specs))


def test_criterion_07_lcs_formula():
    # prod_{k<=12} (1 - t^k)^{phi_k} = prod (1 - n_i t) mod t^13
    ok = True
    for spec in all_builtins_through_five_blocks():
        ok = ok and lcs_identity_holds(spec.ranks, 12)
    p3 = lcs_ranks((1, 2), 3)
    ok = ok and p3 == (3, 1, 2)
    assert report(7, ok, "builtins through degree 12, phi(P_3) = (3, 1, 2)")


def test_criterion_08_tc_closed_forms():
    braid = {
        l: tc_certificate(pure_braid_mod_center(l), torus_rank=1).exact
        for l in (3, 4, 5, 6)
    }
    braid_ok = all(braid[l] == 2 * l - 2 for l in braid)

    partial = {
        (l, k): tc_certificate(partial_pure_braid(l, k)).exact
        for k in (2, 3)
        for l in (1, 2, 3)
    }
    partial_ok = all(partial[(l, k)] == 2 * l + 1 for (l, k) in partial)

    rng = random.Random(48)
    random_ok = True
    for _ in range(20):
        spec = random_spec(rng, max_blocks=3, min_rank=2, max_rank=3)
        l = len(spec.ranks)
        for m in range(4):
            cert = tc_certificate(spec, torus_rank=m)
            random_ok = random_ok and cert.exact == 2 * l + m + 1

    mccool = {
        n: tc_certificate(upper_mccool_mod_center(n), torus_rank=1).exact
        for n in (4, 5, 6)
    }
    mccool_ok = all(mccool[n] == 2 * (n - 1) - 2 for n in mccool)

    ok = braid_ok and partial_ok and random_ok and mccool_ok
    report(
        8,
        ok,
        "braid %s, partial %s, random %s, mccool certified %s vs target %s"
        % (
            braid_ok,
            partial_ok,
            random_ok,
            tuple(mccool.values()),
            tuple(2 * (n - 1) - 2 for n in (4, 5, 6)),
        ),
    )
    assert braid_ok
    assert partial_ok
    assert random_ok
    assert mccool_ok, (
        "acceptance target 2(n-1)-2 = (4, 6, 8) for n = 4..6, but the "
        "certificate returns the exact values %s = 2n-2; both bounds agree "
        "on 2n-2, so the target value is not attainable"
        % (tuple(mccool.values()),)
    )


def test_criterion_09_claim_equivalence():
    # the signed double-sum expansion equals the multiplied witness product,
    # with 2^l distinct basis monomials on each tensor leg
    specs = [s for s in all_builtins_through_five_blocks() if min(s.ranks) >= 2]
    specs += [s for s in fifty_random_specs() if min(s.ranks) >= 2]
    rng = random.Random(64)
    specs += [
        random_spec(rng, max_blocks=3, min_rank=2, max_rank=3) for _ in range(10)
    ]
    ok = True
    for spec in specs:
        ring = ring_of(spec)
        claim = claim_expansion(ring)
        ok = ok and claim == zcl_witness(ring).element
        l = len(spec.ranks)
        lefts = {left for left, _ in claim.terms}
        rights = {right for _, right in claim.terms}
        ok = ok and len(claim.terms) == 2 ** l
        ok = ok and len(lefts) == 2 ** l and len(rights) == 2 ** l
        ok = ok and all(ring.is_normal(m) for m in lefts | rights)
    assert report(9, ok, "%d rank->=2 specs" % len(specs))


def reduced_words(max_len, rank):
    letters = [((1, p), s) for p in range(1, rank + 1) for s in (1, -1)]
    out = [()]
    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for g, s in letters:
                if w and w[-1][0] == g and w[-1][1] == -s:
                    continue
                nxt.append(w + ((g, s),))
        out.extend(nxt)
        frontier = nxt
    return out


def fundamental_formula_holds(letters):
    w = Word(letters)
    one = GroupRingElem.one()
    total = GroupRingElem()
    for g, d in fox_gradient(w).items():
        total = total + d * (GroupRingElem.from_word(Word(((g, 1),))) - one)
    return total == GroupRingElem.from_word(w) - one


def product_rule_holds(letters, cut, gens):
    u, v = Word(letters[:cut]), Word(letters[cut:])
    w = u * v
    gw = fox_gradient(w)
    gu = fox_gradient(u)
    gv = fox_gradient(v)
    au = GroupRingElem.from_word(u)
    zero = GroupRingElem()
    for g in gens:
        lhs = gw.get(g, zero)
        if lhs != gu.get(g, zero) + au * gv.get(g, zero):
            return False
    return True


def test_criterion_10_fox_calculus_oracle():
    gens = [(1, p) for p in (1, 2, 3)]
    words = reduced_words(6, 3)
    ok = all(fundamental_formula_holds(w) for w in words)
    ok = ok and all(
        product_rule_holds(w, cut, gens)
        for w in words
        for cut in range(len(w) + 1)
    )
    rng = random.Random(101)
    letters_pool = [((1, p), s) for p in (1, 2, 3) for s in (1, -1)]
    for _ in range(1000):
        length = rng.randint(7, 40)
        letters = tuple(rng.choice(letters_pool) for _ in range(length))
        ok = ok and fundamental_formula_holds(letters)
        ok = ok and product_rule_holds(letters, rng.randint(0, length), gens)
    assert report(
        10, ok, "%d reduced words exhaustively, 1000 random longer" % len(words)
    )
