"""Walk through the cohomology pipeline on the four strand braid group.

The group is an iterated extension of free groups of ranks 1, 2, 3.  The
script builds its commutator presentation, extracts the quadratic relations
of the cohomology ring, and checks the ring dimensions against the rank
polynomial.
"""

from almostdirect.adp import build_presentation, pure_braid
from almostdirect.exterior import cohomology_ring, e
from almostdirect.homology import h2_matrix, kernel_basis
from almostdirect.invariants import poincare_vector


def main():
    spec = pure_braid(4)
    print("blocks:", spec.ranks)

    # every pair of generators in distinct blocks contributes one relation
    # x(j,q) x(i,p) = x(i,p) x(j,q) w with w a commutator word in block j
    pres = build_presentation(spec)
    print("\nrelations with nontrivial tails:")
    for key, rel in pres.relations.items():
        if not rel.word.is_identity():
            print("  x(%d,%d) x(%d,%d): w = %s" % (rel.j, rel.q, rel.i, rel.p, rel.word))

    # the integral pairing matrix has one row per relation; its kernel
    # gives the quadratic relations of the cohomology ring
    matrix = h2_matrix(pres)
    print("\nmatrix: %d rows, %d columns, full row rank: %s"
          % (len(matrix.row_labels), len(matrix.col_labels),
             matrix.has_full_row_rank()))
    etas = kernel_basis(matrix)
    print("kernel elements:", len(etas))

    ring = cohomology_ring(spec)
    print("\nideal generators:")
    for el in ring.eta_elements():
        print("  ", el)

    # normal forms never carry two generators of the same block
    sample = e(3, 1) * e(3, 2)
    print("\nnormal form of %s:" % sample)
    print("  ", ring.normal_form(sample))

    dims = tuple(ring.dimension(k) for k in range(len(spec.ranks) + 1))
    print("\ndimensions by degree:", dims)
    print("rank polynomial coefficients:", poincare_vector(spec.ranks))

    report = ring.groebner_verify()
    print("rewriting rules certified degree by degree:", report.ok)


if __name__ == "__main__":
    main()
