"""Branched covers of an open book page, encoded by permutation monodromy.

Sheets are numbered 1..degree.  A permutation is a tuple ``p`` with
``p[k-1]`` the image of sheet ``k``.  Monodromy follows path lifting: the
permutation of a loop word applies its letters left to right.

Generators of pi_1(S - P): ``1..n`` are the loops ``c_i`` around the branch
points, ``n+1..`` are the remaining free generators (handle pairs and all but
one boundary loop), whose images go in ``extra_perms``.  Boundary words use
signed generator indices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .errors import BadDegree, InputError, NotConnected

Perm = tuple[int, ...]


def perm_identity(degree: int) -> Perm:
    return tuple(range(1, degree + 1))


def perm_from_cycles(cycles: Sequence[Sequence[int]], degree: int) -> Perm:
    img = list(range(1, degree + 1))
    seen: set[int] = set()
    for cyc in cycles:
        for k in cyc:
            if not 1 <= k <= degree:
                raise InputError(f"sheet {k} outside 1..{degree}")
            if k in seen:
                raise InputError(f"sheet {k} repeated in cycle notation")
            seen.add(k)
        for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            img[a - 1] = b
    return tuple(img)


def perm_cycles(p: Perm) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for start in range(1, len(p) + 1):
        if start in seen:
            continue
        cyc = []
        k = start
        while k not in seen:
            seen.add(k)
            cyc.append(k)
            k = p[k - 1]
        out.append(tuple(cyc))
    return out


def perm_then(p: Perm, q: Perm) -> Perm:
    """Apply ``p`` then ``q``."""
    return tuple(q[p[k] - 1] for k in range(len(p)))


def perm_inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for k, img in enumerate(p, 1):
        inv[img - 1] = k
    return tuple(inv)


@dataclass(frozen=True)
class BaseSurface:
    genus: int
    boundary_words: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.genus < 0:
            raise InputError("genus must be >= 0")
        if not self.boundary_words:
            raise InputError("base surface needs at least one boundary component")
        object.__setattr__(self, "boundary_words", tuple(tuple(b) for b in self.boundary_words))

    @classmethod
    def disk(cls, n: int) -> BaseSurface:
        return cls(0, (tuple(range(1, n + 1)),))

    @property
    def boundary_components(self) -> int:
        return len(self.boundary_words)

    @property
    def euler_char(self) -> int:
        return 2 - 2 * self.genus - self.boundary_components


@dataclass(frozen=True)
class MonodromyRep:
    degree: int
    branch_perms: tuple[Perm, ...]
    base: BaseSurface
    extra_perms: tuple[Perm, ...] = ()

    def __post_init__(self):
        if self.degree < 2:
            raise BadDegree(f"covering degree must be >= 2, got {self.degree}")
        if not self.branch_perms:
            raise InputError("need at least one branch point")
        for p in self.branch_perms + self.extra_perms:
            if sorted(p) != list(range(1, self.degree + 1)):
                raise InputError(f"{p} is not a permutation of 1..{self.degree}")
        n_free = 2 * self.base.genus + self.base.boundary_components - 1
        if len(self.extra_perms) != n_free:
            raise InputError(
                f"base surface needs {n_free} extra generator images, got {len(self.extra_perms)}"
            )
        top = self.branch_points + n_free
        for word in self.base.boundary_words:
            for x in word:
                if x == 0 or abs(x) > top:
                    raise InputError(f"boundary word letter {x} outside ±1..{top}")

    @property
    def branch_points(self) -> int:
        return len(self.branch_perms)

    def generator_perm(self, letter: int) -> Perm:
        gens = self.branch_perms + self.extra_perms
        p = gens[abs(letter) - 1]
        return p if letter > 0 else perm_inverse(p)

    def word_perm(self, word: Sequence[int]) -> Perm:
        p = perm_identity(self.degree)
        for x in word:
            p = perm_then(p, self.generator_perm(x))
        return p

    def is_transitive(self) -> bool:
        gens = self.branch_perms + self.extra_perms
        orbit = {1}
        frontier = [1]
        while frontier:
            k = frontier.pop()
            for g in gens:
                j = g[k - 1]
                if j not in orbit:
                    orbit.add(j)
                    frontier.append(j)
        return len(orbit) == self.degree


@dataclass(frozen=True)
class BoundaryComponent:
    base_boundary: int
    component: int
    degree: int
    sheets: tuple[int, ...] = field(default=(), compare=False)


@dataclass(frozen=True)
class BranchPreimage:
    branch_point: int
    preimage_count: int
    ramification_indices: tuple[int, ...]


@dataclass(frozen=True)
class CoverGeometry:
    euler_char: int
    genus: int
    boundaries: tuple[BoundaryComponent, ...]
    branch_preimages: tuple[BranchPreimage, ...]
    degree: int

    @property
    def boundary_count(self) -> int:
        return len(self.boundaries)

    def components_over(self, base_boundary: int) -> list[BoundaryComponent]:
        return [b for b in self.boundaries if b.base_boundary == base_boundary]

    def select(self, base_boundary: int, component: int) -> BoundaryComponent:
        for b in self.boundaries:
            if b.base_boundary == base_boundary and b.component == component:
                return b
        raise InputError(f"no boundary component ({base_boundary}, {component})")

    def is_annulus(self) -> bool:
        return self.euler_char == 0 and self.genus == 0 and self.boundary_count == 2


def standard_cyclic(n: int, d: int) -> MonodromyRep:
    """Standard d-fold cyclic cover of the disk branched at n points: every c_i acts as (1 2 ... d)."""
    if d < 2:
        raise BadDegree(f"covering degree must be >= 2, got {d}")
    if n < 1:
        raise InputError("need at least one branch point")
    cycle = tuple(list(range(2, d + 1)) + [1])
    return MonodromyRep(d, (cycle,) * n, BaseSurface.disk(n))


def _require_connected(rep: MonodromyRep):
    if not rep.is_transitive():
        raise NotConnected("monodromy group is not transitive; the cover is disconnected")


def is_fully_ramified(rep: MonodromyRep) -> bool:
    _require_connected(rep)
    return all(all(p[k] != k + 1 for k in range(rep.degree)) for p in rep.branch_perms)


def cover_geometry(rep: MonodromyRep) -> CoverGeometry:
    """Topology of the covering surface via Riemann-Hurwitz."""
    _require_connected(rep)
    preimages = []
    total_cycles = 0
    for i, p in enumerate(rep.branch_perms, 1):
        cyc = perm_cycles(p)
        total_cycles += len(cyc)
        preimages.append(BranchPreimage(i, len(cyc), tuple(len(c) for c in cyc)))
    chi = rep.degree * (rep.base.euler_char - rep.branch_points) + total_cycles

    boundaries = []
    for b, word in enumerate(rep.base.boundary_words, 1):
        for j, cyc in enumerate(perm_cycles(rep.word_perm(word)), 1):
            boundaries.append(BoundaryComponent(b, j, len(cyc), cyc))
    twice_genus = 2 - chi - len(boundaries)
    if twice_genus < 0 or twice_genus % 2:
        raise InputError(
            f"inconsistent cover data: chi={chi} with {len(boundaries)} boundary components"
        )
    return CoverGeometry(chi, twice_genus // 2, tuple(boundaries), tuple(preimages), rep.degree)


def boundary_connectivity(n: int, d: int) -> tuple[int, int]:
    """(number, degree) of boundary components of the standard d-fold cyclic cover of the disk."""
    g = math.gcd(n, d)
    return g, d // g
