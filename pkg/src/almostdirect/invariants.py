"""Numerical invariants: Hilbert series, lower central series ranks,
zero-divisor cup length, and topological complexity certificates.

The Poincare polynomial of the cohomology ring is the product of
``1 + n_j t`` over the blocks, so its coefficients are elementary symmetric
functions of the ranks.  The ranks ``phi_k`` of the lower central series
quotients come from the same data by Moebius inversion of
``prod (1 - n_j t) = prod_k (1 - t^k)^{phi_k}``.

Topological complexity is bracketed through the tensor square of the
cohomology ring: products of zero divisors ``1 (x) u - u (x) 1`` bound it
from below, the block structure bounds it from above, and the two meet
exactly when every block that acts or is acted on nontrivially has rank at
least two.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .adp import extend_with_torus
from .exterior import ExtElem, CohomologyRing, cohomology_ring, e, mono_mul

__all__ = [
    "poincare_vector",
    "lcs_ranks",
    "lcs_identity_holds",
    "TensorElem",
    "tensor",
    "zero_divisor",
    "ZclWitness",
    "zcl_witness",
    "claim_expansion",
    "torus_shuffle_expansion",
    "torus_ring",
    "TcCertificate",
    "tc_certificate",
]


def poincare_vector(ranks):
    """Coefficients of ``prod (1 + n t)``: the Betti numbers of the ring.

    >>> poincare_vector((1, 2, 3))
    (1, 6, 11, 6)
    """
    coeffs = [1]
    for n in ranks:
        prev = coeffs + [0]
        coeffs = [prev[k] + n * prev[k - 1] for k in range(len(prev))]
    return tuple(coeffs)


def _mobius(n):
    out = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            out = -out
        d += 1
    if n > 1:
        out = -out
    return out


def lcs_ranks(ranks, max_k):
    """Ranks of the lower central series quotients, degrees 1 to ``max_k``.

    >>> lcs_ranks((1, 2), 3)
    (3, 1, 2)
    """
    out = []
    for k in range(1, max_k + 1):
        total = 0
        for d in range(1, k + 1):
            if k % d == 0:
                total += _mobius(k // d) * sum(n**d for n in ranks)
        if total % k:
            raise ArithmeticError("Moebius sum not divisible at k=%d" % k)
        out.append(total // k)
    return tuple(out)


def _trunc_mul(a, b, top):
    out = [0] * (top + 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if i + j <= top:
                    out[i + j] += ai * bj
    return out


def lcs_identity_holds(ranks, max_k):
    """Check ``prod (1 - n t) = prod_k (1 - t^k)^phi_k`` through ``t^max_k``."""
    phi = lcs_ranks(ranks, max_k)
    lhs = [1]
    for n in ranks:
        lhs = _trunc_mul(lhs, [1, -n], max_k)
    rhs = [1]
    for k, p in enumerate(phi, start=1):
        factor = [0] * (max_k + 1)
        for m in range(0, max_k // k + 1):
            factor[k * m] = (-1) ** m * comb(p, m)
        rhs = _trunc_mul(rhs, factor, max_k)
    lhs += [0] * (max_k + 1 - len(lhs))
    return lhs[: max_k + 1] == rhs[: max_k + 1]


class TensorElem:
    """An element of the tensor square of a cohomology ring.

    Terms map pairs of normal monomials to coefficients; multiplication
    follows the sign rule ``(a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd``
    with both components reduced to normal form.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms=None):
        self.ring = ring
        if terms is None:
            terms = {}
        self.terms = {k: c for k, c in terms.items() if c}

    @classmethod
    def one(cls, ring):
        return cls(ring, {((), ()): 1})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if not isinstance(other, TensorElem) or other.ring != self.ring:
            return NotImplemented
        terms = dict(self.terms)
        for k, c in other.terms.items():
            s = terms.get(k, 0) + c
            if s:
                terms[k] = s
            else:
                terms.pop(k, None)
        return TensorElem(self.ring, terms)

    def __neg__(self):
        return TensorElem(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, TensorElem):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TensorElem(
                self.ring, {k: c * other for k, c in self.terms.items()}
            )
        if not isinstance(other, TensorElem) or other.ring != self.ring:
            return NotImplemented
        ring = self.ring
        terms = {}
        for (a, b), c1 in self.terms.items():
            for (u, v), c2 in other.terms.items():
                sign = -1 if (len(b) * len(u)) & 1 else 1
                left = mono_mul(a, u)
                if left is None:
                    continue
                right = mono_mul(b, v)
                if right is None:
                    continue
                s_l, m_l = left
                s_r, m_r = right
                coeff = sign * s_l * s_r * c1 * c2
                for ml, cl in ring.reduce_mono(m_l).items():
                    for mr, cr in ring.reduce_mono(m_r).items():
                        key = (ml, mr)
                        s = terms.get(key, 0) + coeff * cl * cr
                        if s:
                            terms[key] = s
                        else:
                            del terms[key]
        return TensorElem(self.ring, terms)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TensorElem(
                self.ring, {k: other * c for k, c in self.terms.items()}
            )
        return NotImplemented

    def __eq__(self, other):
        return (
            isinstance(other, TensorElem)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __str__(self):
        if not self.terms:
            return "0"
        def side(m):
            return "".join("e(%d,%d)" % g for g in m) or "1"
        parts = []
        for ml, mr in sorted(self.terms):
            c = self.terms[(ml, mr)]
            body = "%s(x)%s" % (side(ml), side(mr))
            if abs(c) != 1:
                body = "%s %s" % (abs(c), body)
            parts.append(("- " if c < 0 else "+ ") + body)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else out[0] + out[2:]

    __repr__ = __str__


def tensor(ring, a, b):
    """The element ``a (x) b`` of the tensor square."""
    a = ring.normal_form(a)
    b = ring.normal_form(b)
    terms = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            terms[(ma, mb)] = ca * cb
    return TensorElem(ring, terms)


def zero_divisor(ring, u):
    """The basic zero divisor ``1 (x) u - u (x) 1``.

    ``u`` must be homogeneous of positive degree, so that the diagonal
    image of ``u`` is a zero divisor of the tensor square.
    """
    u = ring.normal_form(u)
    if u.is_zero() or u.homogeneous_degree() < 1:
        raise ValueError("zero divisors come from positive-degree elements")
    one = ExtElem.one()
    return tensor(ring, one, u) - tensor(ring, u, one)


@dataclass
class ZclWitness:
    """A maximal nonzero product of the standard zero divisors.

    ``length`` counts the factors used; ``num_factors`` is ``2 a + b``
    where ``a`` blocks have rank at least two and ``b`` have rank one.
    The two agree whenever the full product is nonzero.
    """

    length: int
    num_factors: int
    element: TensorElem


def zcl_witness(ring):
    """Multiply the standard zero divisors, longest nonzero suffix first.

    Per block ``j`` the factors are ``1 (x) u - u (x) 1`` for
    ``u = e(j,1), e(j,2)`` when the rank is at least two and just
    ``u = e(j,1)`` for rank one, taken in block order.  Suffix products are
    monotone (zero stays zero), so the longest nonzero one is well defined;
    it is the full product whenever that is nonzero.
    """
    factors = []
    for j, n in enumerate(ring.ranks, start=1):
        factors.append(zero_divisor(ring, e(j, 1)))
        if n >= 2:
            factors.append(zero_divisor(ring, e(j, 2)))
    suffixes = []
    cur = TensorElem.one(ring)
    for f in reversed(factors):
        cur = f * cur
        suffixes.append(cur)
    length = 0
    element = TensorElem.one(ring)
    for r, prod in enumerate(suffixes, start=1):
        if not prod.is_zero():
            length = r
            element = prod
    return ZclWitness(length, len(factors), element)


def claim_expansion(ring):
    """Closed form of the full witness product when every rank is >= 2.

    With ``x_j = e(j,1)`` and ``y_j = e(j,2)`` the product of all
    ``2 l`` zero divisors expands, modulo the ideal, to

        sign * sum over subsets I of (-1)^{|I|} X[I] (x) Y[I]

    where ``X[I]`` picks ``x_j`` for ``j`` in ``I`` and ``y_j`` otherwise,
    ``Y[I]`` picks the complementary generators, and the global sign is
    ``(-1)^{floor(l / 2)}``.
    """
    l = ring.num_blocks
    if any(n < 2 for n in ring.ranks):
        raise ValueError("the closed form needs every block of rank >= 2")
    sign = -1 if (l // 2) & 1 else 1
    terms = {}
    for size in range(l + 1):
        for chosen in combinations(range(1, l + 1), size):
            inside = set(chosen)
            x_mono = tuple(
                (j, 1 if j in inside else 2) for j in range(1, l + 1)
            )
            y_mono = tuple(
                (j, 2 if j in inside else 1) for j in range(1, l + 1)
            )
            terms[(x_mono, y_mono)] = sign * (-1) ** size
    return TensorElem(ring, terms)


def torus_ring(m):
    """The cohomology ring of the ``m``-torus: ``m`` rank-1 blocks."""
    if m < 1:
        raise ValueError("torus rank must be positive")
    return CohomologyRing((1,) * m, [])


def torus_shuffle_expansion(m):
    """Closed form of the product of the ``m`` torus zero divisors.

    Expanding ``prod (1 (x) z_i - z_i (x) 1)`` gives one term per ordered
    partition of the index set into the left and right tensor factors,
    signed by the shuffle permutation:

        sum over subsets I of (-1)^{|I|} sign(I) z[I] (x) z[complement]

    where ``sign(I)`` is the parity of the shuffle sorting ``I`` followed
    by its complement.
    """
    ring = torus_ring(m)
    terms = {}
    indices = range(1, m + 1)
    for size in range(m + 1):
        for chosen in combinations(indices, size):
            inside = set(chosen)
            rest = tuple(i for i in indices if i not in inside)
            inversions = sum(
                1 for a in chosen for b in rest if b < a
            )
            sign = (-1) ** (size + inversions)
            left = tuple((i, 1) for i in chosen)
            right = tuple((i, 1) for i in rest)
            terms[(left, right)] = sign
    return TensorElem(ring, terms)


@dataclass
class TcCertificate:
    """Bracketing of topological complexity, tight when bounds meet.

    ``lower_bound`` is one more than the witness product length;
    ``upper_bound`` is ``2 * free_blocks + torus_blocks + 1`` where
    ``torus_blocks`` counts rank-1 blocks acting trivially on all later
    blocks (these split off as direct circle factors) and ``free_blocks``
    counts the rest.  ``exact`` is set iff the bounds agree.
    """

    lower_bound: int
    upper_bound: int
    exact: int | None
    witness_degree: int
    free_blocks: int
    torus_blocks: int


def tc_certificate(spec, torus_rank=0):
    """Certify topological complexity of the product with ``Z^torus_rank``."""
    ext = extend_with_torus(spec, torus_rank)
    ring = cohomology_ring(ext)
    wit = zcl_witness(ring)
    torus_blocks = sum(
        1
        for j, n in enumerate(ext.ranks, start=1)
        if n == 1 and ext.acts_trivially_beyond(j)
    )
    free_blocks = len(ext.ranks) - torus_blocks
    lower = wit.length + 1
    upper = 2 * free_blocks + torus_blocks + 1
    if lower > upper:
        raise AssertionError(
            "witness length exceeds the structural upper bound"
        )
    return TcCertificate(
        lower_bound=lower,
        upper_bound=upper,
        exact=lower if lower == upper else None,
        witness_degree=wit.length,
        free_blocks=free_blocks,
        torus_blocks=torus_blocks,
    )


if __name__ == "__main__":
    import doctest

    doctest.testmod()
