"""Fractional Dehn twist coefficient of a braid in the disk open book.

The coefficient is the homogenized Dehornoy floor
``c(b) = lim floor(b^m) / m`` where ``floor(b)`` is the largest ``k`` with
``Delta^{2k} <= b``.  Each ``m`` gives the certified bracket
``floor(b^m)/m <= c(b) <= (floor(b^m)+1)/m``; intersecting them produces an
interval.  Exact values are only claimed through a periodic certificate
``b^N = Delta^{2M}``, in which case ``c(b) = M/N``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .braid import BraidWord, exponent_sum, full_twist, invert, power
from .dehornoy import Ordering, compare, is_trivial
from .errors import DegenerateStrands, EmptyIntersection, InvariantViolation


@dataclass(frozen=True)
class PeriodicCertificate:
    period: int
    twist: int

    def __post_init__(self):
        if self.period < 1:
            raise ValueError("period must be positive")

    @property
    def fdtc(self) -> Fraction:
        return Fraction(self.twist, self.period)


def format_rational(x) -> str:
    """Render as ``p/q`` (integers too, e.g. ``1/1``)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


class ValueKind(enum.Enum):
    EXACT = "Exact"
    INTERVAL = "Interval"


@dataclass(frozen=True)
class FdtcValue:
    """An exact rational, or a closed rational interval known to contain the value."""

    kind: ValueKind
    lower: Fraction
    upper: Fraction
    certificate: PeriodicCertificate | None = None

    def __post_init__(self):
        object.__setattr__(self, "lower", Fraction(self.lower))
        object.__setattr__(self, "upper", Fraction(self.upper))
        if self.lower > self.upper:
            raise ValueError(f"empty interval [{self.lower}, {self.upper}]")
        if self.kind is ValueKind.EXACT and self.lower != self.upper:
            raise ValueError("exact value needs lower == upper")

    @classmethod
    def exact(cls, value, certificate: PeriodicCertificate | None = None) -> FdtcValue:
        v = Fraction(value)
        return cls(ValueKind.EXACT, v, v, certificate)

    @classmethod
    def interval(cls, lower, upper) -> FdtcValue:
        return cls(ValueKind.INTERVAL, Fraction(lower), Fraction(upper))

    @property
    def is_exact(self) -> bool:
        return self.kind is ValueKind.EXACT

    @property
    def value(self) -> Fraction:
        if not self.is_exact:
            raise ValueError("interval has no point value")
        return self.lower

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    def contains(self, x) -> bool:
        return self.lower <= Fraction(x) <= self.upper

    def scaled(self, factor) -> FdtcValue:
        """Multiply by a positive rational (keeps kind and certificate)."""
        f = Fraction(factor)
        if f <= 0:
            raise ValueError("scale factor must be positive")
        return FdtcValue(self.kind, self.lower * f, self.upper * f, self.certificate)

    # certified comparisons: true only when every point of the interval satisfies them
    def certainly_gt(self, x) -> bool:
        return self.lower > x

    def certainly_lt(self, x) -> bool:
        return self.upper < x

    def certainly_abs_gt(self, x) -> bool:
        return self.lower > x or self.upper < -x

    def certainly_abs_ge(self, x) -> bool:
        return self.lower >= x or self.upper <= -x

    def __str__(self):
        if self.is_exact:
            return f"Exact {self.lower}"
        return f"Interval [{self.lower}, {self.upper}]"


class RightVeeringStatus(enum.Enum):
    RIGHT_VEERING = "RightVeering"
    NOT_RIGHT_VEERING = "NotRightVeering"
    INDETERMINATE = "Indeterminate"


def _require_strands(w: BraidWord):
    if w.strands < 2:
        raise DegenerateStrands("Dehornoy floor needs n >= 2")


def _twist_le(w: BraidWord, m: int, delta2: BraidWord, budget) -> bool:
    # Delta^{2m} <= w
    return compare(power(delta2, m), w, budget) is not Ordering.GREATER


def dehornoy_floor(w: BraidWord, budget: int | None = None, guess: int = 0) -> int:
    """Largest m with Delta^{2m} <= w in the Dehornoy order.

    The answer always lies in [-|w|-1, |w|+1].  The search gallops outward
    from ``guess`` (clamped to that window) and then bisects, so a good guess
    keeps the full-twist powers short; the result does not depend on it.
    """
    _require_strands(w)
    delta2 = full_twist(w.strands)
    lo_bound, hi_bound = -len(w) - 1, len(w) + 1
    g = min(max(guess, lo_bound), hi_bound)
    # invariant: le(lo) is True, le(hi) is False
    if _twist_le(w, g, delta2, budget):
        lo, step = g, 1
        while True:
            hi = min(lo + step, hi_bound)
            if hi == hi_bound or not _twist_le(w, hi, delta2, budget):
                break
            lo, step = hi, step * 2
    else:
        hi, step = g, 1
        while True:
            lo = max(hi - step, lo_bound)
            if lo == lo_bound or _twist_le(w, lo, delta2, budget):
                break
            hi, step = lo, step * 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _twist_le(w, mid, delta2, budget):
            lo = mid
        else:
            hi = mid
    return lo


def certify_periodic(w: BraidWord, max_period: int, budget: int | None = None) -> PeriodicCertificate | None:
    """Find the least N <= max_period with w^N = Delta^{2M}.

    Since the full twist has exponent sum n(n-1), M is forced to be
    exponent_sum(w) * N / (n(n-1)); periods where that is not an integer are
    skipped.
    """
    n = w.strands
    if n < 2:
        return PeriodicCertificate(1, 0)
    es = exponent_sum(w)
    twist_es = n * (n - 1)
    delta2 = full_twist(n)
    for period in range(1, max_period + 1):
        if (es * period) % twist_es:
            continue
        twist = es * period // twist_es
        if is_trivial(power(w, period) * power(delta2, -twist), budget):
            return PeriodicCertificate(period, twist)
    return None


def fdtc_bounds(
    w: BraidWord,
    m_max: int,
    max_period: int | None = None,
    budget: int | None = None,
) -> FdtcValue:
    """Certified enclosure of the FDTC of ``w``.

    With ``max_period`` set, a periodic certificate is searched first and an
    exact value returned if one exists; the floor of ``w`` is still checked
    against it.  The identity braid is always exact 0.
    """
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    if w.strands < 2:
        return FdtcValue.exact(0, PeriodicCertificate(1, 0))
    if is_trivial(w, budget):
        return FdtcValue.exact(0, PeriodicCertificate(1, 0))
    if max_period:
        cert = certify_periodic(w, max_period, budget)
        if cert is not None:
            f1 = dehornoy_floor(w, budget, guess=math.floor(cert.fdtc))
            if not (f1 <= cert.fdtc <= f1 + 1):
                raise InvariantViolation(
                    f"periodic value {cert.fdtc} outside floor bracket [{f1}, {f1 + 1}]"
                )
            return FdtcValue.exact(cert.fdtc, cert)
    lower, upper = Fraction(-len(w) - 1), Fraction(len(w) + 2)
    estimate = Fraction(exponent_sum(w), w.strands * (w.strands - 1))
    for m in range(1, m_max + 1):
        f = dehornoy_floor(power(w, m), budget, guess=math.floor(estimate * m))
        lower = max(lower, Fraction(f, m))
        upper = min(upper, Fraction(f + 1, m))
        if lower > upper:
            raise EmptyIntersection(f"floor brackets stopped nesting at m={m}")
        estimate = (lower + upper) / 2
    return FdtcValue.interval(lower, upper)


def floor_brackets(w: BraidWord, m_max: int, budget: int | None = None) -> list[tuple[Fraction, Fraction]]:
    """The individual brackets [f_m/m, (f_m+1)/m] for m = 1..m_max."""
    _require_strands(w)
    out = []
    for m in range(1, m_max + 1):
        f = dehornoy_floor(power(w, m), budget)
        out.append((Fraction(f, m), Fraction(f + 1, m)))
    return out


def right_veering_status(v: FdtcValue, w: BraidWord, budget: int | None = None) -> RightVeeringStatus:
    if v.lower > 0:
        return RightVeeringStatus.RIGHT_VEERING
    if v.upper < 0:
        return RightVeeringStatus.NOT_RIGHT_VEERING
    if w.strands < 2 or is_trivial(w, budget):
        return RightVeeringStatus.RIGHT_VEERING
    return RightVeeringStatus.INDETERMINATE
