"""Freely reduced words over doubly indexed free-group generators.

A generator is a pair ``(block, index)`` written ``x(block, index)``; a word
is a product of generators and their inverses, kept freely reduced at all
times.  The letters of one block generate a free group, and the classes here
also model the automorphisms of a single block that act trivially on its
abelianization: the basic ones conjugate one generator by another
(``B(i, j)``) or multiply a generator by a commutator of two others
(``T(i; s, t)``).

Commutator bookkeeping is done by :func:`commutator_decompose`, which writes
any word with vanishing exponent sums as an ordered product of commutators
``[u_k, v_k]`` of subwords.
"""

from __future__ import annotations

import re

__all__ = [
    "Word",
    "x",
    "commutator",
    "commutator_decompose",
    "beta",
    "theta",
    "IAWord",
]


def _reduce(letters):
    out = []
    for g, e in letters:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


_LETTER_RE = re.compile(r"x\((\d+),(\d+)\)(?:\^(-?\d+))?")


class Word:
    """A freely reduced word.

    Letters are pairs ``(generator, exponent)`` with ``exponent`` in
    ``{+1, -1}`` and ``generator = (block, index)``.  Construction reduces,
    so two words are equal iff they name the same group element.

    >>> w = x(1, 1) * x(2, 1) * ~x(2, 1)
    >>> w == x(1, 1)
    True
    >>> print(x(2, 1) ** -2 * x(2, 2))
    x(2,1)^-2 x(2,2)
    """

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        for g, e in letters:
            if e not in (1, -1):
                raise ValueError("letter exponents must be +1 or -1: %r" % (e,))
        self.letters = _reduce(letters)

    def __mul__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.letters + other.letters)

    def __invert__(self):
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def __pow__(self, n):
        if n < 0:
            return (~self) ** (-n)
        w = Word()
        for _ in range(n):
            w = w * self
        return w

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __len__(self):
        return len(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def is_identity(self):
        return not self.letters

    def exponent_sums(self):
        """Total exponent of each generator, as a dict without zeros.

        >>> commutator(x(2, 1), x(2, 2)).exponent_sums()
        {}
        """
        sums = {}
        for g, e in self.letters:
            sums[g] = sums.get(g, 0) + e
        return {g: s for g, s in sums.items() if s}

    def blocks(self):
        return {g[0] for g, _ in self.letters}

    def single_block(self):
        """The unique block the word lives in; error if letters mix blocks."""
        blocks = self.blocks()
        if len(blocks) != 1:
            raise ValueError("word does not lie in a single block: %s" % self)
        return blocks.pop()

    def __str__(self):
        if not self.letters:
            return "1"
        parts = []
        run_g, run_e = self.letters[0], None
        i = 0
        while i < len(self.letters):
            g, e = self.letters[i]
            j = i
            while j < len(self.letters) and self.letters[j] == (g, e):
                j += 1
            power = e * (j - i)
            if power == 1:
                parts.append("x(%d,%d)" % g)
            else:
                parts.append("x(%d,%d)^%d" % (g[0], g[1], power))
            i = j
        return " ".join(parts)

    __repr__ = __str__

    @classmethod
    def parse(cls, text):
        """Parse the notation produced by ``str``: ``x(1,1)^2 x(2,1)^-1``.

        Whitespace between letters is optional; ``1`` is the identity.
        """
        text = text.strip()
        if text == "1" or not text:
            return cls()
        letters = []
        pos = 0
        while pos < len(text):
            if text[pos].isspace():
                pos += 1
                continue
            m = _LETTER_RE.match(text, pos)
            if m is None:
                raise ValueError("bad word syntax at %r" % text[pos:])
            block, index = int(m.group(1)), int(m.group(2))
            power = int(m.group(3)) if m.group(3) else 1
            letters.extend(x_letters(block, index, power))
            pos = m.end()
        return cls(letters)


def x_letters(block, index, power=1):
    """The letter sequence for ``x(block, index) ** power``."""
    e = 1 if power > 0 else -1
    return [((block, index), e)] * abs(power)


def x(block, index, power=1):
    """The word ``x(block, index) ** power``.

    >>> print(x(1, 2, -3))
    x(1,2)^-3
    """
    if block < 1 or index < 1:
        raise ValueError("generator indices start at 1")
    return Word(x_letters(block, index, power))


def commutator(u, v):
    """The commutator ``[u, v] = u v u^-1 v^-1``."""
    return u * v * ~u * ~v


def commutator_decompose(w, pairing="first"):
    """Write ``w`` as an ordered product of commutators of subwords.

    Requires every exponent sum of ``w`` to vanish.  Returns a list of pairs
    ``(u_k, v_k)`` with ``w == product of commutator(u_k, v_k)``.  The first
    letter ``g^e`` of the current word is matched with an occurrence of
    ``g^-e`` later in the word (the first such occurrence for
    ``pairing="first"``, the last for ``pairing="last"``); writing the word
    as ``g^e A g^-e B`` gives the factor ``[g^e, A]`` and the algorithm
    recurses on the reduction of ``A B``.

    >>> w = commutator(x(2, 1), x(2, 2))
    >>> commutator_decompose(w)
    [(x(2,1), x(2,2))]
    """
    if pairing not in ("first", "last"):
        raise ValueError("pairing must be 'first' or 'last'")
    if w.exponent_sums():
        raise ValueError("exponent sums do not vanish: %s" % w)
    pairs = []
    while w.letters:
        g, e = w.letters[0]
        positions = [
            k for k, let in enumerate(w.letters) if k > 0 and let == (g, -e)
        ]
        k = positions[0] if pairing == "first" else positions[-1]
        a = Word(w.letters[1:k])
        b = Word(w.letters[k + 1 :])
        pairs.append((Word(((g, e),)), a))
        w = a * b
    return pairs


def beta(i, j):
    """Conjugation automorphism: sends ``y_i`` to ``y_j^-1 y_i y_j``."""
    if i == j:
        raise ValueError("beta requires i != j")
    return ("beta", i, j)


def theta(i, s, t):
    """Commutator multiplication: sends ``y_i`` to ``y_i [y_s, y_t]``."""
    if len({i, s, t}) != 3:
        raise ValueError("theta requires distinct indices")
    return ("theta", i, s, t)


_IA_RE = re.compile(
    r"B\((\d+),(\d+)\)(?:\^(-?\d+))?|T\((\d+);(\d+),(\d+)\)(?:\^(-?\d+))?"
)


class IAWord:
    """A composition of basic IA-automorphisms of a rank ``n`` free block.

    Factors apply left to right: ``IAWord(n, [f, g]).apply(w)`` is
    ``g`` applied to ``f`` applied to ``w``.  Every factor fixes the
    abelianization, so applying an ``IAWord`` never changes exponent sums.

    >>> a = IAWord(2, [(beta(1, 2), 1)])
    >>> print(a.apply(x(5, 1)))
    x(5,2)^-1 x(5,1) x(5,2)
    >>> a.inverse().apply(a.apply(x(5, 1))) == x(5, 1)
    True
    """

    __slots__ = ("rank", "factors")

    def __init__(self, rank, factors=()):
        factors = tuple((gen, exp) for gen, exp in factors)
        for gen, exp in factors:
            if exp not in (1, -1):
                raise ValueError("IA factor exponents must be +1 or -1")
            indices = gen[1:]
            if gen[0] not in ("beta", "theta"):
                raise ValueError("unknown IA generator kind %r" % (gen[0],))
            if len(set(indices)) != len(indices):
                raise ValueError("IA generator indices must be distinct")
            if any(not (1 <= k <= rank) for k in indices):
                raise ValueError(
                    "IA generator %r exceeds block rank %d" % (gen, rank)
                )
        self.rank = rank
        self.factors = factors

    def __eq__(self, other):
        return (
            isinstance(other, IAWord)
            and self.rank == other.rank
            and self.factors == other.factors
        )

    def __hash__(self):
        return hash((self.rank, self.factors))

    def is_identity(self):
        return not self.factors

    def inverse(self):
        return IAWord(
            self.rank, tuple((gen, -exp) for gen, exp in reversed(self.factors))
        )

    def apply(self, w):
        """Apply the composed automorphism to a word in a single block."""
        if not w.letters:
            return w
        block = w.single_block()
        if any(index > self.rank for (_, index), _ in w.letters):
            raise ValueError("word index exceeds block rank %d" % self.rank)
        for gen, exp in self.factors:
            w = self._apply_factor(gen, exp, w, block)
        return w

    @staticmethod
    def _apply_factor(gen, exp, w, block):
        out = []
        for (_, index), e in w.letters:
            image = _factor_image(gen, exp, index)
            if e == -1:
                image = [(k, -f) for k, f in reversed(image)]
            out.extend(((block, k), f) for k, f in image)
        return Word(out)

    def __str__(self):
        if not self.factors:
            return "1"
        parts = []
        for gen, exp in self.factors:
            if gen[0] == "beta":
                s = "B(%d,%d)" % gen[1:]
            else:
                s = "T(%d;%d,%d)" % gen[1:]
            parts.append(s if exp == 1 else s + "^-1")
        return " ".join(parts)

    __repr__ = __str__

    @classmethod
    def parse(cls, rank, text):
        """Parse notation like ``B(1,2) T(3;1,2)^-1``."""
        text = text.strip()
        if text == "1" or not text:
            return cls(rank)
        factors = []
        pos = 0
        while pos < len(text):
            if text[pos].isspace():
                pos += 1
                continue
            m = _IA_RE.match(text, pos)
            if m is None:
                raise ValueError("bad IA word syntax at %r" % text[pos:])
            if m.group(1) is not None:
                gen = beta(int(m.group(1)), int(m.group(2)))
                power = int(m.group(3)) if m.group(3) else 1
            else:
                gen = theta(int(m.group(4)), int(m.group(5)), int(m.group(6)))
                power = int(m.group(7)) if m.group(7) else 1
            if power == 0:
                raise ValueError("IA factor exponent must be nonzero")
            e = 1 if power > 0 else -1
            factors.extend([(gen, e)] * abs(power))
            pos = m.end()
        return cls(rank, factors)


def _factor_image(gen, exp, index):
    # image of y_index under one basic automorphism, as (index, exp) letters
    if gen[0] == "beta":
        _, i, j = gen
        if index != i:
            return [(index, 1)]
        if exp == 1:
            return [(j, -1), (i, 1), (j, 1)]
        return [(j, 1), (i, 1), (j, -1)]
    _, i, s, t = gen
    if index != i:
        return [(index, 1)]
    if exp == 1:
        return [(i, 1), (s, 1), (t, 1), (s, -1), (t, -1)]
    return [(i, 1), (t, 1), (s, 1), (t, -1), (s, -1)]


if __name__ == "__main__":
    import doctest

    doctest.testmod()
