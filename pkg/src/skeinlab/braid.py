"""
Braid words and their combinatorics.

A braid word is a strand count plus a sequence of signed generator indices:
letter ``i > 0`` is sigma_i, ``-i`` is its inverse. Words are never reduced
implicitly; :func:`syllables` and :func:`free_reduce` do that on request.

Text grammar::

    ["B" n ":"] item*      item := [+-]i | [+-]i "^" [+-]e

``i^e`` expands to ``|e|`` copies of sigma_i with sign ``sign(i)*sign(e)``.
Without the ``Bn:`` prefix the strand count is ``1 + max |i|``. Items may be
separated by whitespace or commas.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

__all__ = [
    "BraidWord",
    "BraidParseError",
    "Syllable",
    "parse_braid",
    "render",
    "writhe",
    "syllables",
    "free_reduce",
    "psi",
    "permutation",
    "component_count",
    "mirror",
    "stabilize",
    "cyclic_shift",
    "torus_word",
    "alpha",
    "is_clustered",
    "is_trivial_generator",
    "random_word",
    "concat",
]


class BraidParseError(ValueError):
    """Malformed braid text. ``position`` is the character offset of the problem."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError(f"strand count must be >= 1, got {self.strands}")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) >= self.strands:
                raise ValueError(f"letter {x} invalid for B_{self.strands}")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        n = max(self.strands, other.strands)
        return BraidWord(n, self.letters + other.letters)

    def __pow__(self, k: int) -> "BraidWord":
        if k >= 0:
            return BraidWord(self.strands, self.letters * k)
        return BraidWord(self.strands, inverse(self).letters * (-k))

    def with_strands(self, n: int) -> "BraidWord":
        return BraidWord(n, self.letters)

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class Syllable:
    index: int
    exponent: int


_PREFIX = re.compile(r"\s*[Bb]\s*(\d+)\s*:")
_ITEM = re.compile(r"([+-]?)(\d+)(?:\s*\^\s*([+-]?)(\d+))?")
_SEP = re.compile(r"[\s,]*")


def parse_braid(text: str) -> BraidWord:
    """Parse braid text into a :class:`BraidWord`.

    >>> parse_braid("B3: 1 1 -2").letters
    (1, 1, -2)
    >>> parse_braid("1^3")
    BraidWord(strands=2, letters=(1, 1, 1))
    """
    pos = 0
    n = None
    m = _PREFIX.match(text)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise BraidParseError("strand count must be at least 1", m.start(1))
        pos = m.end()
    letters: List[int] = []
    starts: List[int] = []
    while True:
        pos = _SEP.match(text, pos).end()
        if pos >= len(text):
            break
        m = _ITEM.match(text, pos)
        if not m or m.end() == pos:
            raise BraidParseError(f"unexpected character {text[pos]!r}", pos)
        end = m.end()
        if end < len(text) and not (text[end].isspace() or text[end] == ","):
            raise BraidParseError(f"malformed token {text[pos:end + 1]!r}", pos)
        sign = -1 if m.group(1) == "-" else 1
        index = int(m.group(2))
        if index == 0:
            raise BraidParseError("generator index 0", pos)
        count = 1
        if m.group(4) is not None:
            count = int(m.group(4))
            if count == 0:
                raise BraidParseError("zero exponent in syllable shorthand", pos)
            if m.group(3) == "-":
                sign = -sign
        letters.extend([sign * index] * count)
        starts.extend([pos] * count)
        pos = end
    if n is None:
        n = 1 + max((abs(x) for x in letters), default=0)
    for x, at in zip(letters, starts):
        if abs(x) >= n:
            raise BraidParseError(f"generator index {abs(x)} out of range for B_{n}", at)
    return BraidWord(n, tuple(letters))


def render(b: BraidWord) -> str:
    """Canonical text form; runs of identical letters use ``^``.

    >>> render(BraidWord(3, (1, 1, -2)))
    'B3: 1^2 -2'
    """
    items = []
    i = 0
    L = b.letters
    while i < len(L):
        j = i
        while j < len(L) and L[j] == L[i]:
            j += 1
        k = j - i
        items.append(str(L[i]) if k == 1 else f"{L[i]}^{k}")
        i = j
    body = " ".join(items)
    return f"B{b.strands}:" + (f" {body}" if body else "")


def writhe(b: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in b.letters)


def _syllable_stack(letters: Sequence[int]) -> List[List[int]]:
    stack: List[List[int]] = []
    for x in letters:
        i, e = abs(x), (1 if x > 0 else -1)
        if stack and stack[-1][0] == i:
            stack[-1][1] += e
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([i, e])
    return stack


def syllables(b: BraidWord) -> List[Syllable]:
    """Syllable decomposition of the freely reduced word.

    >>> syllables(BraidWord(3, (1, -1, 2)))
    [Syllable(index=2, exponent=1)]
    """
    return [Syllable(i, e) for i, e in _syllable_stack(b.letters)]


def free_reduce(b: BraidWord) -> BraidWord:
    """Cancel adjacent ``x, -x`` pairs until none remain."""
    out: List[int] = []
    for i, e in _syllable_stack(b.letters):
        out.extend([i if e > 0 else -i] * abs(e))
    return BraidWord(b.strands, tuple(out))


def is_clustered(b: BraidWord, i: int) -> bool:
    """True when generator ``i`` occurs in exactly one syllable of the reduced word."""
    return sum(1 for s in syllables(b) if s.index == i) == 1


def is_trivial_generator(b: BraidWord, i: int) -> bool:
    """True when generator ``i`` occurs exactly once in the reduced word."""
    return sum(1 for x in free_reduce(b).letters if abs(x) == i) == 1


def psi(a: int, b: int, w: BraidWord) -> BraidWord:
    """Keep letters with ``a < |index| < b``, shifted down by ``a``, as a word in B_{b-a}."""
    if not (0 <= a <= b <= w.strands):
        raise ValueError(f"range ({a}, {b}) outside [0, {w.strands}]")
    if b - a <= 1:
        return BraidWord(1, ())
    kept = tuple((abs(x) - a) * (1 if x > 0 else -1) for x in w.letters if a < abs(x) < b)
    return BraidWord(b - a, kept)


def permutation(b: BraidWord) -> Tuple[int, ...]:
    """Underlying permutation in one-line notation (1-based images).

    Generators act as adjacent transpositions applied left to right: the entry
    at position ``k`` is the starting strand that ends at position ``k``.
    """
    perm = list(range(1, b.strands + 1))
    for x in b.letters:
        i = abs(x)
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return tuple(perm)


def cycle_count(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if not seen[start]:
            cycles += 1
            k = start
            while not seen[k]:
                seen[k] = True
                k = perm[k] - 1
    return cycles


def component_count(b: BraidWord) -> int:
    """Number of link components of the closure."""
    return cycle_count(permutation(b))


def inverse(b: BraidWord) -> BraidWord:
    return BraidWord(b.strands, tuple(-x for x in reversed(b.letters)))


def mirror(b: BraidWord) -> BraidWord:
    return BraidWord(b.strands, tuple(-x for x in b.letters))


def stabilize(b: BraidWord, sign: int = 1) -> BraidWord:
    """Markov stabilization: append sigma_n^{+-1} in B_{n+1}."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    n = b.strands
    return BraidWord(n + 1, b.letters + (sign * n,))


def cyclic_shift(b: BraidWord, k: int = 1) -> BraidWord:
    """Rotate the letters left by ``k`` (a conjugation)."""
    L = b.letters
    if not L:
        return b
    k %= len(L)
    return BraidWord(b.strands, L[k:] + L[:k])


def alpha(q_minus_1: int) -> BraidWord:
    """The row word sigma_{m} ... sigma_1 in B_{m+1}."""
    m = q_minus_1
    return BraidWord(m + 1, tuple(range(m, 0, -1)))


def torus_word(p: int, q: int) -> BraidWord:
    """Braid word ``alpha_{q-1}**p`` for the torus link K(p, q).

    >>> torus_word(2, 3).letters
    (2, 1, 2, 1)
    """
    if q < 2:
        raise ValueError("torus_word needs q >= 2")
    return alpha(q - 1) ** p


def concat(*words: BraidWord) -> BraidWord:
    n = max(w.strands for w in words)
    letters: Tuple[int, ...] = ()
    for w in words:
        letters += w.letters
    return BraidWord(n, letters)


def random_word(rng, max_strands: int, max_len: int, min_strands: int = 2) -> BraidWord:
    """Uniform strand count, length and letters from a ``random.Random``."""
    n = rng.randint(min_strands, max_strands)
    L = rng.randint(0, max_len)
    letters = tuple(rng.choice((-1, 1)) * rng.randint(1, n - 1) for _ in range(L)) if n > 1 else ()
    return BraidWord(n, letters)
