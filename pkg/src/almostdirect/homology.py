"""The degree-two chain map and the kernel basis of its matrix.

Over the Laurent coefficient ring, the Koszul complex on the generators
``e(i,p)`` has differentials

    d1(e_a) = t_a - 1
    d2(e_a e_b) = -(t_a - 1) e_b + (t_b - 1) e_a

with the sign of a generator inside a wedge monomial depending on its
position, so that ``d2(f ^ g) = d1(g) f - d1(f) g`` for degree-one ``f, g``.
A relation ``x(j,q) x(i,p) = x(i,p) x(j,q) w`` with ``w`` a product of
commutators ``[u_k, v_k]`` is sent to

    a2(r) = e(i,p) e(j,q) + t(i,p) t(j,q) sum_k grad(u_k) ^ grad(v_k)

and :func:`verify_chain_map` confirms ``d2(a2(r))`` equals the abelianized
Fox gradient of the relator ``x(j,q) x(i,p) w^-1 x(j,q)^-1 x(i,p)^-1``,
which is exactly the degree-two differential of the presentation.

Applying the augmentation (every ``t -> 1``) to ``a2`` gives an integer
matrix ``A`` whose rows are indexed by relations and columns by products of
two generators.  Each row has a single 1 in its mixed column and its other
entries in the columns of the acted-on block, so ``A`` always has full row
rank, and the kernel of right multiplication by ``A`` is spanned by one
element per same-block pair of generators:

    eta(j; p, q) = e(j,p) e(j,q) + sum kappa e(i,r) e(j,s)

with ``kappa(i, r, s) = -A[(i, j, r, s), (e(j,p), e(j,q))]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .fox import abel_gradient
from .laurent import LaurentPoly, t
from .linalg import span_rank
from .adp import relation_sort_key

__all__ = [
    "wedge",
    "chain_a2",
    "koszul_d1",
    "koszul_d2",
    "delta2",
    "verify_chain_map",
    "ChainMapReport",
    "H2Matrix",
    "h2_matrix",
    "KernelElement",
    "kernel_basis",
    "pair_sort_key",
    "generator_pairs",
]


def pair_sort_key(pair):
    # Columns are grouped by block pair, ordered by (second block, first
    # block), then lexicographically by the index pair.
    (b1, p), (b2, q) = pair
    return (b2, b1, p, q)


def generator_pairs(ranks):
    """All products of two distinct generators, in column order."""
    gens = [
        (i, p)
        for i, n in enumerate(ranks, start=1)
        for p in range(1, n + 1)
    ]
    pairs = [
        (g1, g2) for k, g1 in enumerate(gens) for g2 in gens[k + 1 :]
    ]
    return sorted(pairs, key=pair_sort_key)


def wedge(f, g):
    """Exterior product of two gradient vectors, degree one to degree two."""
    terms = {}
    for a, fa in f.items():
        for b, gb in g.items():
            if a == b:
                continue
            key, val = ((a, b), fa * gb) if a < b else ((b, a), -(gb * fa))
            cur = terms.get(key)
            terms[key] = val if cur is None else cur + val
    return {k: v for k, v in terms.items() if not v.is_zero()}


def chain_a2(rel):
    """The degree-two chain map on one relation, over the Laurent ring."""
    lead = ((rel.i, rel.p), (rel.j, rel.q))
    terms = {lead: LaurentPoly.constant(1)}
    scale = t(rel.i, rel.p) * t(rel.j, rel.q)
    for u, v in rel.pairs:
        for key, val in wedge(abel_gradient(u), abel_gradient(v)).items():
            cur = terms.get(key, LaurentPoly())
            terms[key] = cur + scale * val
    return {k: v for k, v in terms.items() if not v.is_zero()}


def koszul_d1(f):
    out = LaurentPoly()
    for (i, p), val in f.items():
        out = out + val * (t(i, p) - 1)
    return out


def koszul_d2(k2):
    """Koszul differential of a degree-two element, as a gradient vector."""
    out = {}
    for (a, b), val in k2.items():
        ta = t(a[0], a[1]) - 1
        tb = t(b[0], b[1]) - 1
        out[b] = out.get(b, LaurentPoly()) - ta * val
        out[a] = out.get(a, LaurentPoly()) + tb * val
    return {g: v for g, v in out.items() if not v.is_zero()}


def delta2(rel):
    """The presentation differential: the Fox gradient of the relator."""
    return abel_gradient(rel.relator())


@dataclass
class ChainMapReport:
    ok: bool
    failures: list = field(default_factory=list)


def verify_chain_map(pres):
    """Check ``d2 o a2 = delta2`` on every relation of a presentation."""
    failures = []
    for rel in pres:
        lhs = koszul_d2(chain_a2(rel))
        rhs = delta2(rel)
        if lhs != rhs:
            failures.append(((rel.i, rel.j, rel.p, rel.q), lhs, rhs))
    return ChainMapReport(ok=not failures, failures=failures)


class H2Matrix:
    """The augmented chain map matrix, rows by relations, columns by pairs."""

    __slots__ = ("ranks", "row_labels", "col_labels", "entries")

    def __init__(self, ranks, row_labels, col_labels, entries):
        self.ranks = ranks
        self.row_labels = row_labels
        self.col_labels = col_labels
        self.entries = entries

    def entry(self, row, col):
        return self.entries.get((row, col), 0)

    def row(self, row):
        return {
            col: v for (r, col), v in self.entries.items() if r == row and v
        }

    def to_dense(self):
        return [
            [self.entry(r, c) for c in self.col_labels]
            for r in self.row_labels
        ]

    def has_full_row_rank(self):
        rows = [self.row(r) for r in self.row_labels]
        return span_rank(rows) == len(self.row_labels)


def h2_matrix(pres):
    """Augment ``a2`` over all relations into one integer matrix.

    Each row carries a 1 in its mixed column ``(e(i,p), e(j,q))``; all
    remaining entries sit in same-block columns of block ``j``.
    """
    row_labels = sorted(pres.relations, key=relation_sort_key)
    col_labels = generator_pairs(pres.ranks)
    entries = {}
    for key in row_labels:
        rel = pres[key]
        mixed = ((rel.i, rel.p), (rel.j, rel.q))
        for pair, poly in chain_a2(rel).items():
            c = poly.augment()
            if not c:
                continue
            if pair != mixed and not (pair[0][0] == pair[1][0] == rel.j):
                raise ValueError(
                    "row %s has an entry outside its blocks at %s"
                    % (key, pair)
                )
            entries[(key, pair)] = c
        if entries.get((key, mixed)) != 1:
            raise ValueError("row %s lacks its unit mixed entry" % (key,))
    return H2Matrix(pres.ranks, row_labels, col_labels, entries)


@dataclass(frozen=True)
class KernelElement:
    """A spanning element of the kernel of the augmented chain map matrix.

    Written out it is ``e(j,p) e(j,q) + sum kappa(i,r,s) e(i,r) e(j,s)``
    with ``i`` ranging over earlier blocks.
    """

    j: int
    p: int
    q: int
    kappa: tuple  # sorted ((i, r, s), coefficient) pairs

    def terms(self):
        """The element as a dict from degree-two monomials to integers."""
        out = {(((self.j, self.p), (self.j, self.q))): 1}
        for (i, r, s), c in self.kappa:
            out[((i, r), (self.j, s))] = c
        return out

    def leading_pair(self):
        return ((self.j, self.p), (self.j, self.q))


def kernel_basis(matrix):
    """One kernel element per same-block pair ``p < q`` of block ``j``.

    The coefficients are read straight off the matrix: the element for
    ``(j, p, q)`` has ``kappa(i, r, s)`` equal to minus the entry of row
    ``(i, j, r, s)`` in column ``(e(j,p), e(j,q))``.
    """
    ranks = matrix.ranks
    out = []
    for j, n in enumerate(ranks, start=1):
        for p in range(1, n + 1):
            for q in range(p + 1, n + 1):
                col = ((j, p), (j, q))
                kappa = []
                for i in range(1, j):
                    for r in range(1, ranks[i - 1] + 1):
                        for s in range(1, n + 1):
                            c = matrix.entry((i, j, r, s), col)
                            if c:
                                kappa.append(((i, r, s), -c))
                out.append(KernelElement(j, p, q, tuple(sorted(kappa))))
    return out
