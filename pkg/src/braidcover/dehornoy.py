"""Dehornoy handle reduction and the Dehornoy order on B_n.

A sigma_i-handle is a subword ``s_i^e u s_i^-e`` where ``u`` only uses
generators of index > i.  Reducing it replaces every ``s_{i+1}^d`` in ``u`` by
``s_{i+1}^-e s_i^d s_{i+1}^e`` and drops the two ends.  Reduction is only
applied to permitted handles (no sigma_{i+1}-handle inside), which is what
makes the process terminate.
"""

from __future__ import annotations

import enum
import os

from .braid import BraidWord, free_reduce, invert
from .errors import BudgetExceeded, StrandMismatch

DEFAULT_BUDGET = 10**7


def default_budget() -> int:
    env = os.environ.get("FDTC_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


class SigmaClass(enum.Enum):
    SIGMA_POSITIVE = "SigmaPositive"
    SIGMA_NEGATIVE = "SigmaNegative"
    TRIVIAL = "Trivial"

    def flipped(self) -> SigmaClass:
        if self is SigmaClass.SIGMA_POSITIVE:
            return SigmaClass.SIGMA_NEGATIVE
        if self is SigmaClass.SIGMA_NEGATIVE:
            return SigmaClass.SIGMA_POSITIVE
        return self


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def _next_handle(w: list[int], lo: int, hi: int, index: int):
    """First pair of consecutive opposite-sign ``index`` letters in w[lo:hi].

    Callers guarantee no letter of smaller index lies in the window, so such a
    pair always brackets a handle.
    """
    prev = -1
    for k in range(lo, hi):
        x = w[k]
        if x == index or x == -index:
            if prev >= 0 and w[prev] == -x:
                return prev, k
            prev = k
    return None


def _reduce_step(w: list[int]) -> list[int] | None:
    """Reduce one handle; return None when the main generator has no handle."""
    main = min(abs(x) for x in w)
    found = _next_handle(w, 0, len(w), main)
    if found is None:
        return None
    s, t = found
    i = main
    # descend until the handle contains no handle one level up
    while True:
        inner = _next_handle(w, s + 1, t, i + 1)
        if inner is None:
            break
        s, t = inner
        i += 1
    e = 1 if w[s] > 0 else -1
    j = i + 1
    middle: list[int] = []
    for x in w[s + 1 : t]:
        if x == j or x == -j:
            d = 1 if x > 0 else -1
            middle.extend((-e * j, d * i, e * j))
        else:
            middle.append(x)
    return w[:s] + middle + w[t + 1 :]


def _handle_reduce_letters(letters, budget: int) -> tuple[int, ...]:
    w = list(free_reduce(letters))
    steps = 0
    while w:
        nxt = _reduce_step(w)
        if nxt is None:
            break
        steps += 1
        if steps > budget:
            raise BudgetExceeded(f"handle reduction exceeded {budget} steps")
        w = list(free_reduce(nxt))
    return tuple(w)


def handle_reduce(w: BraidWord, budget: int | None = None) -> BraidWord:
    """Return an equivalent word with no handle on its minimal generator.

    Leftmost handle of the minimal index goes first; inside it the leftmost
    sigma_{i+1}-handle is reduced before it, recursively.
    """
    if budget is None:
        budget = default_budget()
    return BraidWord(w.strands, _handle_reduce_letters(w.letters, budget))


def _class_of_reduced(letters: tuple[int, ...]) -> SigmaClass:
    if not letters:
        return SigmaClass.TRIVIAL
    main = min(abs(x) for x in letters)
    for x in letters:
        if abs(x) == main:
            return SigmaClass.SIGMA_POSITIVE if x > 0 else SigmaClass.SIGMA_NEGATIVE
    raise AssertionError("unreachable")


def sigma_class(w: BraidWord, budget: int | None = None) -> SigmaClass:
    return _class_of_reduced(handle_reduce(w, budget).letters)


def compare(a: BraidWord, b: BraidWord, budget: int | None = None) -> Ordering:
    """Dehornoy order: a < b iff a^-1 b is sigma-positive."""
    if a.strands != b.strands:
        raise StrandMismatch(f"B_{a.strands} vs B_{b.strands}")
    cls = sigma_class(invert(a) * b, budget)
    if cls is SigmaClass.TRIVIAL:
        return Ordering.EQUAL
    return Ordering.LESS if cls is SigmaClass.SIGMA_POSITIVE else Ordering.GREATER


def is_trivial(w: BraidWord, budget: int | None = None) -> bool:
    return sigma_class(w, budget) is SigmaClass.TRIVIAL
