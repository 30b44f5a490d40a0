"""Lower central series ranks and the product identity.

For these groups the ranks of the lower central series quotients depend
only on the block ranks: Moebius inversion turns the factorization
prod (1 - n_i t) = prod_k (1 - t^k)^{phi_k} into integer values phi_k, and
multiplying the truncated products back together checks the computation.
"""

from almostdirect.adp import pure_braid, upper_mccool
from almostdirect.invariants import lcs_identity_holds, lcs_ranks


def main():
    for spec in (pure_braid(3), pure_braid(4), upper_mccool(4)):
        phis = lcs_ranks(spec.ranks, 8)
        print("%s: ranks %s" % (spec.name, spec.ranks))
        for k, phi in enumerate(phis, start=1):
            print("  phi_%d = %d" % (k, phi))
        print("  identity through degree 12:", lcs_identity_holds(spec.ranks, 12))
        print()


if __name__ == "__main__":
    main()
