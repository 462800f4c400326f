"""Braid words in the Artin generators of B_n.

A letter is a nonzero signed integer: ``+i`` is sigma_i and ``-i`` is its
inverse, with 1 <= i <= n-1.  Words are kept freely reduced; no other
rewriting happens here (see :mod:`braidcover.dehornoy`).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BraidSyntaxError, DegenerateStrands, IndexOutOfRange, StrandMismatch


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise DegenerateStrands(f"braid needs at least one strand, got {self.strands}")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) > self.strands - 1:
                raise IndexOutOfRange(
                    f"generator index {abs(x)} out of range 1..{self.strands - 1} for B_{self.strands}"
                )
        object.__setattr__(self, "letters", free_reduce(letters))

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return compose(self, other)

    def __invert__(self) -> BraidWord:
        return invert(self)

    def __pow__(self, k: int) -> BraidWord:
        return power(self, k)

    def pairs(self) -> list[tuple[int, int]]:
        """Letters as ``(index, sign)`` pairs."""
        return [(abs(x), 1 if x > 0 else -1) for x in self.letters]

    def is_empty(self) -> bool:
        return not self.letters

    def __str__(self):
        if not self.letters:
            return "e"
        return " ".join(f"s{x}" if x > 0 else f"-s{-x}" for x in self.letters)


@dataclass(frozen=True)
class BraidPermutation:
    """Bijection of {1..n}; ``mapping[k-1]`` is the image of ``k``.

    ``a * b`` is the composite a∘b (apply ``b`` first).
    """

    mapping: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.mapping) != list(range(1, len(self.mapping) + 1)):
            raise ValueError(f"not a permutation: {self.mapping}")

    @classmethod
    def identity(cls, n: int) -> BraidPermutation:
        return cls(tuple(range(1, n + 1)))

    def __call__(self, k: int) -> int:
        return self.mapping[k - 1]

    def __mul__(self, other: BraidPermutation) -> BraidPermutation:
        return BraidPermutation(tuple(self.mapping[j - 1] for j in other.mapping))

    def is_identity(self) -> bool:
        return all(self.mapping[k] == k + 1 for k in range(len(self.mapping)))

    def cycles(self, include_fixed: bool = True) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, len(self.mapping) + 1):
            if start in seen:
                continue
            cyc = []
            k = start
            while k not in seen:
                seen.add(k)
                cyc.append(k)
                k = self(k)
            if include_fixed or len(cyc) > 1:
                out.append(tuple(cyc))
        return out


_TOKEN = re.compile(r"(-?)s(\d+)$")


def parse(text: str, n: int) -> BraidWord:
    """Parse ``"s1 -s2"`` or ``"1 -2"`` style notation into a word of B_n.

    Commas are treated as whitespace.  The two token forms may be mixed.
    """
    letters = []
    for tok in text.replace(",", " ").split():
        m = _TOKEN.match(tok)
        if m:
            k = int(m.group(2))
            if k == 0:
                raise BraidSyntaxError(f"generator index must be positive in token {tok!r}")
            letters.append(-k if m.group(1) else k)
            continue
        try:
            k = int(tok)
        except ValueError:
            raise BraidSyntaxError(f"malformed braid token {tok!r}") from None
        if k == 0:
            raise BraidSyntaxError("0 is not a generator")
        letters.append(k)
    return BraidWord(n, tuple(letters))


def _check_same(a: BraidWord, b: BraidWord):
    if a.strands != b.strands:
        raise StrandMismatch(f"B_{a.strands} vs B_{b.strands}")


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    _check_same(a, b)
    return BraidWord(a.strands, a.letters + b.letters)


def invert(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(-x for x in reversed(w.letters)))


def power(w: BraidWord, k: int) -> BraidWord:
    base = w if k >= 0 else invert(w)
    return BraidWord(w.strands, base.letters * abs(k))


def product(words: Sequence[BraidWord], strands: int | None = None) -> BraidWord:
    if not words:
        if strands is None:
            raise ValueError("empty product needs a strand count")
        return BraidWord(strands)
    n = words[0].strands
    letters: list[int] = []
    for w in words:
        _check_same(words[0], w)
        letters.extend(w.letters)
    return BraidWord(n, tuple(letters))


def full_twist(n: int) -> BraidWord:
    """The fixed representative (s1 s2 ... s_{n-1})^n of the full twist."""
    if n < 2:
        raise DegenerateStrands("full twist needs n >= 2")
    return BraidWord(n, tuple(range(1, n)) * n)


def permutation(w: BraidWord) -> BraidPermutation:
    """Induced permutation of the punctures, t_{i1} ∘ t_{i2} ∘ ... for letters i1, i2, ..."""
    img = list(range(1, w.strands + 1))
    # apply rightmost transposition first: compose on the right as we scan
    for x in w.letters:
        i = abs(x)
        img[i - 1], img[i] = img[i], img[i - 1]
    return BraidPermutation(tuple(img))


def component_count(w: BraidWord) -> int:
    return len(permutation(w).cycles())


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in w.letters)
