"""Slow, independent oracles for cross-checking the main engines in tests.

Nothing here imports the production algorithms.  Braid questions go through
the Artin action of B_n on the free group F_n, which is faithful and also
reads off the Dehornoy order: with the substitution

    s_i:  x_i -> x_i x_{i+1} x_i^-1,   x_{i+1} -> x_i

applied letter by letter, b is sigma-positive iff for the first generator
x_j moved by b, the reduced image of x_j ends in x_j^-1.  Cover questions are
answered by lifting an explicit cell structure of the marked disk.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .errors import BoundTooSmall, NotConnected

FreeWord = tuple[int, ...]
Images = tuple[FreeWord, ...]  # images[j-1] is the image of x_j


@dataclass(frozen=True)
class OracleResult:
    value: Any
    trace: str


def _free_reduce(word) -> FreeWord:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _inverse(word: FreeWord) -> FreeWord:
    return tuple(-x for x in reversed(word))


def _substitute(word: FreeWord, images: Images) -> FreeWord:
    out: list[int] = []
    for x in word:
        out.extend(images[x - 1] if x > 0 else _inverse(images[-x - 1]))
    return _free_reduce(out)


def identity_images(n: int) -> Images:
    return tuple((j,) for j in range(1, n + 1))


def letter_images(letter: int, n: int) -> Images:
    i = abs(letter)
    imgs = [(j,) for j in range(1, n + 1)]
    if letter > 0:
        imgs[i - 1] = (i, i + 1, -i)
        imgs[i] = (i,)
    else:
        imgs[i - 1] = (i + 1,)
        imgs[i] = (-(i + 1), i, i + 1)
    return tuple(imgs)


def then(first: Images, second: Images) -> Images:
    """Images of the braid ``first * second``."""
    return tuple(_substitute(w, second) for w in first)


def artin_images(letters, n: int) -> Images:
    imgs = identity_images(n)
    for x in letters:
        imgs = then(imgs, letter_images(x, n))
    return imgs


def images_power(imgs: Images, k: int, n: int, inverse: Images | None = None) -> Images:
    if k < 0:
        if inverse is None:
            raise ValueError("negative power needs the inverse images")
        imgs, k = inverse, -k
    out = identity_images(n)
    for _ in range(k):
        out = then(out, imgs)
    return out


def sign_of_images(imgs: Images) -> int:
    """+1 sigma-positive, -1 sigma-negative, 0 trivial."""
    for j, w in enumerate(imgs, 1):
        if w != (j,):
            return 1 if w[-1] == -j else -1
    return 0


def _delta2_letters(n: int) -> list[int]:
    return list(range(1, n)) * n


def _inverse_letters(letters) -> list[int]:
    return [-x for x in reversed(letters)]


def artin_is_trivial(letters, n: int) -> bool:
    return sign_of_images(artin_images(letters, n)) == 0


def artin_sign(letters, n: int) -> int:
    return sign_of_images(artin_images(letters, n))


def floor_linear_scan(w, bound: int) -> OracleResult:
    """Largest m in [-bound, bound] with Delta^{2m} <= w, by checking every m."""
    n, letters = w.strands, w.letters
    neg_twist = artin_images(_inverse_letters(_delta2_letters(n)), n)
    pos_twist = artin_images(_delta2_letters(n), n)
    w_imgs = artin_images(letters, n)
    le = []
    for m in range(-bound, bound + 1):
        # Delta^{2m} <= w  iff  Delta^{-2m} w is sigma-positive or trivial
        shift = images_power(neg_twist, m, n, inverse=pos_twist)
        le.append(sign_of_images(then(shift, w_imgs)) >= 0)
    if not le[0] or le[-1]:
        raise BoundTooSmall(f"floor not inside [-{bound}, {bound}]")
    k = max(i for i, ok in enumerate(le) if ok)
    if not all(le[: k + 1]):
        raise AssertionError("order comparison with full twists is not monotone")
    return OracleResult(k - bound, f"artin-action scan over m in [-{bound}, {bound}]")


def periodic_exhaustive(w, n_max: int, m_max: int) -> OracleResult:
    """First (N, M) in lexicographic order with w^N = Delta^{2M}, N <= n_max, |M| <= m_max."""
    n = w.strands
    w_imgs = artin_images(w.letters, n)
    twist = artin_images(_delta2_letters(n), n)
    twist_inv = artin_images(_inverse_letters(_delta2_letters(n)), n)
    twist_powers = {0: identity_images(n)}
    for m in range(1, m_max + 1):
        twist_powers[m] = then(twist_powers[m - 1], twist)
        twist_powers[-m] = then(twist_powers[-m + 1], twist_inv)
    cur = identity_images(n)
    for big_n in range(1, n_max + 1):
        cur = then(cur, w_imgs)
        for m in range(-m_max, m_max + 1):
            if cur == twist_powers[m]:
                return OracleResult((big_n, m), f"2-d search, matched at N={big_n}, M={m}")
    return OracleResult(None, f"no match for N <= {n_max}, |M| <= {m_max}")


def _orbits(perm: tuple[int, ...]) -> list[list[int]]:
    todo = set(range(1, len(perm) + 1))
    out = []
    while todo:
        s = min(todo)
        orb = []
        while s in todo:
            todo.discard(s)
            orb.append(s)
            s = perm[s - 1]
        out.append(orb)
    return out


def euler_char_by_cycles(rep) -> OracleResult:
    """Euler characteristic of a cover of the marked disk by counting lifted cells.

    Base cells: vertex v0 on the boundary, a vertex at each branch point, the
    boundary loop at v0, an arc from v0 to each branch point, one 2-cell.  Each
    cell away from the branch points lifts to ``degree`` cells; the vertex at
    p_i lifts to one vertex per cycle of its local monodromy.
    """
    degree = rep.degree
    perms = rep.branch_perms
    sheets = range(1, degree + 1)

    reached = {1}
    stack = [1]
    while stack:
        s = stack.pop()
        for p in perms:
            if p[s - 1] not in reached:
                reached.add(p[s - 1])
                stack.append(p[s - 1])
    if len(reached) != degree:
        raise NotConnected("oracle: cover is disconnected")

    vertices = {("v0", s) for s in sheets}
    for i, p in enumerate(perms):
        for orb in _orbits(p):
            vertices.add(("p", i, min(orb)))
    edges = {("boundary", s) for s in sheets}
    edges |= {("arc", i, s) for i in range(len(perms)) for s in sheets}
    faces = {("face", s) for s in sheets}
    chi = len(vertices) - len(edges) + len(faces)
    return OracleResult(chi, f"V={len(vertices)} E={len(edges)} F={len(faces)}")


def b2_closed_form(k: int) -> Fraction:
    """FDTC of sigma_1^k in B_2: (sigma_1^k)^2 is the k-th full twist."""
    return Fraction(k, 2)
