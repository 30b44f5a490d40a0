"""Almost-direct products of free groups and their commutator presentations.

An :class:`AdpSpec` records an iterated semidirect product of free groups
``F(n_1) x| F(n_2) x| ... x| F(n_l)`` in which every block acts on every
later block by automorphisms that fix the abelianization.  The action of the
generator ``x(i,p)`` on block ``j > i`` is stored either as an ``IAWord``
(automorphism written in the basic IA generators) or as an explicit tuple of
image words; missing entries mean the trivial action.

:func:`build_presentation` turns a spec into the finite presentation with
generators ``x(i,p)`` and one relation

    x(j,q) x(i,p) = x(i,p) x(j,q) w

per pair of generators in distinct blocks, where ``w`` is a product of
commutators of words in block ``j``.  Builtin specs cover the pure braid
groups, their partial versions on a subset of strands, the upper triangular
McCool groups, and the quotients of these by their centers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import IAWord, Word, beta, commutator_decompose, theta, x

__all__ = [
    "AdpSpec",
    "Relation",
    "Presentation",
    "build_presentation",
    "pure_braid",
    "partial_pure_braid",
    "upper_mccool",
    "pure_braid_mod_center",
    "upper_mccool_mod_center",
    "extend_with_torus",
    "random_spec",
    "BUILTINS",
]

MAGNUS = "magnus"
IMAGES = "images"


class AdpSpec:
    """Ranks plus the IA actions of earlier blocks on later blocks.

    ``actions`` maps ``(i, j, p)`` with ``i < j`` to either
    ``("magnus", IAWord)`` or ``("images", (w_1, ..., w_{n_j}))`` where
    ``w_q`` is the image of ``x(j,q)``.  Actions that turn out to be trivial
    are dropped, so specs compare equal iff they define the same product.
    """

    __slots__ = ("ranks", "actions", "name")

    def __init__(self, ranks, actions=None, name=""):
        ranks = tuple(int(n) for n in ranks)
        if not ranks or any(n < 1 for n in ranks):
            raise ValueError("ranks must be a nonempty tuple of positive ints")
        self.ranks = ranks
        self.name = name
        cleaned = {}
        for (i, j, p), action in (actions or {}).items():
            self._check_key(i, j, p)
            action = self._check_action(j, action)
            if action is not None:
                cleaned[(i, j, p)] = action
        self.actions = cleaned

    def _check_key(self, i, j, p):
        l = len(self.ranks)
        if not (1 <= i < j <= l):
            raise ValueError("action blocks must satisfy 1 <= i < j <= %d" % l)
        if not (1 <= p <= self.ranks[i - 1]):
            raise ValueError(
                "acting index %d exceeds rank %d of block %d"
                % (p, self.ranks[i - 1], i)
            )

    def _check_action(self, j, action):
        kind, payload = action
        n = self.ranks[j - 1]
        if kind == MAGNUS:
            if payload.rank != n:
                raise ValueError(
                    "IA word has rank %d but block %d has rank %d"
                    % (payload.rank, j, n)
                )
            if all(payload.apply(x(j, q)) == x(j, q) for q in range(1, n + 1)):
                return None
            return action
        if kind == IMAGES:
            images = tuple(payload)
            if len(images) != n:
                raise ValueError(
                    "need %d images for block %d, got %d" % (n, j, len(images))
                )
            for q, w in enumerate(images, start=1):
                for (b, index), _ in w.letters:
                    if b != j or not (1 <= index <= n):
                        raise ValueError(
                            "image of x(%d,%d) leaves block %d: %s"
                            % (j, q, j, w)
                        )
                if w.exponent_sums() != {(j, q): 1}:
                    raise ValueError(
                        "image of x(%d,%d) is not IA: %s" % (j, q, w)
                    )
            if all(images[q - 1] == x(j, q) for q in range(1, n + 1)):
                return None
            return (IMAGES, images)
        raise ValueError("unknown action kind %r" % (kind,))

    @property
    def num_blocks(self):
        return len(self.ranks)

    @property
    def num_generators(self):
        return sum(self.ranks)

    @property
    def has_uncertified_images(self):
        """True when some action is given by raw images.

        Image tuples are only checked to fix the abelianization; nothing
        certifies that they define an invertible endomorphism.
        """
        return any(kind == IMAGES for kind, _ in self.actions.values())

    def generators(self):
        return [
            (i, p)
            for i, n in enumerate(self.ranks, start=1)
            for p in range(1, n + 1)
        ]

    def action_image(self, i, j, p, q):
        """The image of ``x(j,q)`` under the action of ``x(i,p)``."""
        self._check_key(i, j, p)
        if not (1 <= q <= self.ranks[j - 1]):
            raise ValueError("index %d exceeds rank of block %d" % (q, j))
        action = self.actions.get((i, j, p))
        if action is None:
            return x(j, q)
        kind, payload = action
        if kind == MAGNUS:
            return payload.apply(x(j, q))
        return payload[q - 1]

    def acts_trivially_beyond(self, i):
        """True when block ``i`` acts trivially on every later block."""
        return not any(key[0] == i for key in self.actions)

    def _image_table(self):
        # canonical form: every action as its tuple of image words, so the
        # magnus and images encodings of the same product compare equal
        return tuple(
            (
                (i, j, p),
                tuple(
                    self.action_image(i, j, p, q)
                    for q in range(1, self.ranks[j - 1] + 1)
                ),
            )
            for (i, j, p) in sorted(self.actions)
        )

    def __eq__(self, other):
        return (
            isinstance(other, AdpSpec)
            and self.ranks == other.ranks
            and self._image_table() == other._image_table()
        )

    def __hash__(self):
        return hash((self.ranks, self._image_table()))

    def __repr__(self):
        label = self.name or "adp"
        return "<AdpSpec %s ranks=%s actions=%d>" % (
            label,
            list(self.ranks),
            len(self.actions),
        )


@dataclass(frozen=True)
class Relation:
    """One commutation relation ``x(j,q) x(i,p) = x(i,p) x(j,q) w``.

    ``pairs`` is the commutator decomposition of ``w``: an ordered tuple of
    ``(u, v)`` with ``w`` equal to the product of the ``[u, v]``.
    """

    i: int
    j: int
    p: int
    q: int
    word: Word
    pairs: tuple

    def relator(self):
        """The relation as a trivial word of the group."""
        lhs = x(self.j, self.q) * x(self.i, self.p)
        rhs = x(self.i, self.p) * x(self.j, self.q) * self.word
        return lhs * ~rhs


class Presentation:
    """All commutation relations of a spec, in a fixed order.

    Relation keys ``(i, j, p, q)`` are ordered by block pair first, the
    pairs ``(i, j)`` sorted by ``(j, i)``, then lexicographically by
    ``(p, q)``.
    """

    __slots__ = ("ranks", "relations")

    def __init__(self, ranks, relations):
        self.ranks = ranks
        self.relations = dict(
            sorted(relations.items(), key=lambda kv: relation_sort_key(kv[0]))
        )

    def keys(self):
        return list(self.relations)

    def __getitem__(self, key):
        return self.relations[key]

    def __len__(self):
        return len(self.relations)

    def __iter__(self):
        return iter(self.relations.values())


def relation_sort_key(key):
    i, j, p, q = key
    return (j, i, p, q)


def build_presentation(spec, pairing="first"):
    """Compute the commutator presentation of an almost-direct product.

    For each acting generator ``x(i,p)`` and each ``x(j,q)`` in a later
    block, ``w = x(j,q)^-1 alpha(x(j,q))`` where ``alpha`` is the action of
    ``x(i,p)`` on block ``j``.  Every ``w`` has vanishing exponent sums and
    is decomposed into commutators of subwords of block ``j``.
    """
    l = len(spec.ranks)
    relations = {}
    for j in range(2, l + 1):
        for i in range(1, j):
            for p in range(1, spec.ranks[i - 1] + 1):
                for q in range(1, spec.ranks[j - 1] + 1):
                    image = spec.action_image(i, j, p, q)
                    w = ~x(j, q) * image
                    if w.exponent_sums():
                        raise ValueError(
                            "action of x(%d,%d) on x(%d,%d) is not IA"
                            % (i, p, j, q)
                        )
                    pairs = tuple(commutator_decompose(w, pairing))
                    relations[(i, j, p, q)] = Relation(i, j, p, q, w, pairs)
    return Presentation(spec.ranks, relations)


def _conjugate(a, w):
    return a * w * ~a


def pure_braid(l):
    """The pure braid group on ``l`` strands as an almost-direct product.

    Block ``i`` is free of rank ``i`` for ``i = 1 .. l-1``; its generator
    ``x(i,p)`` is the band crossing strand ``p`` over strand ``i+1``.  The
    action on later blocks is the restriction of the braid action, written
    as explicit images.
    """
    if l < 2:
        raise ValueError("pure braid needs at least 2 strands")
    spec = _braid_block_spec(ranks=tuple(range(1, l)), shift=0)
    spec.name = "purebraid %d" % l
    return spec


def partial_pure_braid(l, k):
    """The kernel of forgetting the last ``l`` strands down to ``k``.

    Equivalently the last ``l`` blocks of the pure braid group on ``k + l``
    strands: ranks ``k, k+1, ..., k+l-1``, with block ``a`` here standing
    for braid block ``a + k - 1`` and carrying the same images.
    """
    if l < 1 or k < 1:
        raise ValueError("partial pure braid needs l >= 1 and k >= 1")
    spec = _braid_block_spec(ranks=tuple(range(k, k + l)), shift=k - 1)
    spec.name = "partialpurebraid %d %d" % (l, k)
    return spec


def _braid_block_spec(ranks, shift):
    # Internal block a is braid block a + shift; x(a,p) crosses strand p
    # over strand a + shift + 1.  Images follow the band generator tables.
    actions = {}
    l = len(ranks)
    for a in range(1, l + 1):
        s = a + shift + 1  # strand pulled over by block a
        for b in range(a + 1, l + 1):
            for p in range(1, ranks[a - 1] + 1):
                images = []
                for q in range(1, ranks[b - 1] + 1):
                    if q == p:
                        conj = x(b, p) * x(b, s)
                        images.append(_conjugate(conj, x(b, q)))
                    elif p < q < s:
                        conj = x(b, p) * x(b, s) * ~x(b, p) * ~x(b, s)
                        images.append(_conjugate(conj, x(b, q)))
                    elif q == s:
                        images.append(_conjugate(x(b, p), x(b, q)))
                    else:
                        images.append(x(b, q))
                actions[(a, b, p)] = (IMAGES, tuple(images))
    return AdpSpec(ranks, actions)


def upper_mccool(n):
    """The upper triangular McCool group on ``n`` strands.

    Block ``j`` is free of rank ``j`` for ``j = 1 .. n-1``; the generator
    ``x(i,p)`` conjugates ``x(j,i+1)`` by ``x(j,p)`` in every later block
    ``j`` and fixes the other generators.
    """
    if n < 2:
        raise ValueError("upper McCool needs n >= 2")
    ranks = tuple(range(1, n))
    actions = {}
    for (a, b, p), images in _mccool_images(ranks):
        actions[(a, b, p)] = (IMAGES, images)
    spec = AdpSpec(ranks, actions)
    spec.name = "uppermccool %d" % n
    return spec


def _mccool_images(ranks):
    l = len(ranks)
    for a in range(1, l + 1):
        for b in range(a + 1, l + 1):
            for p in range(1, ranks[a - 1] + 1):
                images = tuple(
                    _conjugate(x(b, p), x(b, q)) if q == a + 1 else x(b, q)
                    for q in range(1, ranks[b - 1] + 1)
                )
                yield (a, b, p), images


def _drop_first_block(spec, name):
    if len(spec.ranks) < 2:
        raise ValueError("cannot drop the only block")
    if spec.ranks[0] != 1:
        raise ValueError("first block must have rank 1")
    actions = {}
    for (i, j, p), action in spec.actions.items():
        if i == 1:
            continue
        kind, payload = action
        if kind == IMAGES:
            payload = tuple(_shift_block_down(w) for w in payload)
        actions[(i - 1, j - 1, p)] = (kind, payload)
    out = AdpSpec(spec.ranks[1:], actions)
    out.name = name
    return out


def _shift_block_down(w):
    return Word(tuple(((b - 1, index), e) for (b, index), e in w.letters))


def pure_braid_mod_center(l):
    """The pure braid group on ``l`` strands modulo its center.

    The center is the full twist generated by the rank-1 first block, so the
    quotient is the spec with that block removed.  Needs ``l >= 3``.
    """
    if l < 3:
        raise ValueError("central quotient needs l >= 3")
    return _drop_first_block(pure_braid(l), "purebraidbar %d" % l)


def upper_mccool_mod_center(n):
    """The upper McCool group on ``n`` strands modulo its center."""
    if n < 3:
        raise ValueError("central quotient needs n >= 3")
    return _drop_first_block(upper_mccool(n), "uppermccoolbar %d" % n)


def extend_with_torus(spec, m):
    """Append ``m`` rank-1 blocks with trivial action: the product with Z^m."""
    if m < 0:
        raise ValueError("torus rank must be nonnegative")
    if m == 0:
        return spec
    out = AdpSpec(spec.ranks + (1,) * m, dict(spec.actions))
    out.name = (spec.name + " x Z^%d" % m).strip()
    return out


def _random_ia_factor(rng, n):
    if n >= 3 and rng.random() < 0.5:
        a, b, c = rng.sample(range(1, n + 1), 3)
        gen = theta(a, b, c)
    else:
        a, b = rng.sample(range(1, n + 1), 2)
        gen = beta(a, b)
    return (gen, rng.choice((1, -1)))


def random_spec(rng, max_blocks=4, min_rank=1, max_rank=3, max_factors=4):
    """A random magnus-mode spec that is a genuine almost-direct product.

    An arbitrary assignment of IA words to the acting generators does not
    in general extend to an action of the iterated product (the earlier
    blocks are not free once they commute up to conjugation), so plain
    per-generator randomness leaves the intended domain as soon as three
    blocks interact.  Instead one random IA automorphism is drawn per
    block and every acting generator acts on that block by a power of it,
    of word length at most ``max_factors``: words with zero exponent sums
    then act trivially, which makes the iterated action consistent for
    every choice of powers.  ``rng`` is a ``random.Random``.
    """
    l = rng.randint(1, max_blocks)
    ranks = tuple(rng.randint(min_rank, max_rank) for _ in range(l))
    actions = {}
    for j in range(2, l + 1):
        n = ranks[j - 1]
        if n < 2:
            continue
        base_len = rng.randint(1, max(1, max_factors // 2))
        sigma = tuple(_random_ia_factor(rng, n) for _ in range(base_len))
        sigma_inv = tuple((g, -e) for g, e in reversed(sigma))
        max_power = max_factors // base_len
        for i in range(1, j):
            for p in range(1, ranks[i - 1] + 1):
                c = rng.randint(-max_power, max_power)
                if not c:
                    continue
                factors = (sigma if c > 0 else sigma_inv) * abs(c)
                actions[(i, j, p)] = (MAGNUS, IAWord(n, factors))
    return AdpSpec(ranks, actions, name="random")


BUILTINS = {
    "purebraid": (pure_braid, 1),
    "partialpurebraid": (partial_pure_braid, 2),
    "uppermccool": (upper_mccool, 1),
    "purebraidbar": (pure_braid_mod_center, 1),
    "uppermccoolbar": (upper_mccool_mod_center, 1),
}
