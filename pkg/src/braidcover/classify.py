"""Rule engine for topological and contact consequences of the covering formula.

Each rule takes computed values plus user assertions and returns a
:class:`Verdict` listing every hypothesis with its status.  A verdict is
``Proved`` exactly when all hypotheses are ``Satisfied``; the status is derived,
never set by a rule.  Interval values certify an inequality only when the
whole interval satisfies it.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping, Sequence

from .cover import CoverGeometry
from .engine import FdtcValue, RightVeeringStatus, format_rational


class HypStatus(enum.Enum):
    SATISFIED = "Satisfied"
    VIOLATED = "Violated"
    UNKNOWN = "Unknown"


class VerdictStatus(enum.Enum):
    PROVED = "Proved"
    REFUTED = "Refuted"
    INCONCLUSIVE = "Inconclusive"


GEOMETRY_TYPES = ("seifert-fibered", "toroidal", "hyperbolic")
NT_TYPES = ("periodic", "reducible", "pseudo-anosov")
# Nielsen-Thurston type -> geometry of the open book manifold when |c| >= 1
NT_TO_GEOMETRY = dict(zip(NT_TYPES, GEOMETRY_TYPES))


@dataclass(frozen=True)
class Assertion:
    """A user-supplied (or computed) fact the rules cannot derive themselves.

    kinds: ``geometry`` (value in GEOMETRY_TYPES), ``nielsen_thurston``
    (value in NT_TYPES), ``pseudo_anosov`` (bool), ``l_space`` (bool),
    ``prongs`` (sequence of (k, p) pairs, one per base boundary),
    ``gcd_coprime`` ((k, d) pair).
    """

    kind: str
    value: Any
    provenance: str = "user"

    def __post_init__(self):
        if self.kind == "geometry" and self.value not in GEOMETRY_TYPES:
            raise ValueError(f"unknown geometry type {self.value!r}")
        if self.kind == "nielsen_thurston" and self.value not in NT_TYPES:
            raise ValueError(f"unknown Nielsen-Thurston type {self.value!r}")
        if self.kind == "prongs":
            pairs = tuple((int(k), int(p)) for k, p in self.value)
            if any(p < 1 for _, p in pairs):
                raise ValueError("prong counts must be >= 1")
            object.__setattr__(self, "value", pairs)


@dataclass(frozen=True)
class Hypothesis:
    cond: str
    status: HypStatus


@dataclass(frozen=True)
class Verdict:
    rule: str
    conclusion: str
    hypotheses: tuple[Hypothesis, ...]
    details: Mapping[str, Any] = field(default_factory=dict, compare=False)

    @property
    def status(self) -> VerdictStatus:
        if all(h.status is HypStatus.SATISFIED for h in self.hypotheses):
            return VerdictStatus.PROVED
        return VerdictStatus.INCONCLUSIVE

    @property
    def proved(self) -> bool:
        return self.status is VerdictStatus.PROVED


def _h(cond: str, ok: bool | None) -> Hypothesis:
    if ok is None:
        return Hypothesis(cond, HypStatus.UNKNOWN)
    return Hypothesis(cond, HypStatus.SATISFIED if ok else HypStatus.VIOLATED)


def _as_bool(a: Assertion | bool | None) -> bool | None:
    if a is None:
        return None
    if isinstance(a, Assertion):
        return bool(a.value)
    return bool(a)


def _as_value(a: Assertion | str | None):
    if a is None:
        return None
    return a.value if isinstance(a, Assertion) else a


def rule_geometry_transfer(
    fdtc: FdtcValue | Mapping[int, FdtcValue],
    geom: CoverGeometry,
    degree_total: int,
    base_geometry: Assertion | str | None,
    fully_ramified: bool,
    base_boundaries: int = 1,
) -> Verdict:
    """Geometric type of the link complement passes to the covering open book
    when the coefficient is large compared with the covering degrees."""
    per_boundary = fdtc if isinstance(fdtc, Mapping) else {b: fdtc for b in range(1, base_boundaries + 1)}
    gtype = _as_value(base_geometry)
    conclusion = f"M(S~, phi~) is {gtype}" if gtype else "M(S~, phi~) has the geometric type of L"

    cond_a = (
        base_boundaries == 1
        and geom.boundary_count == 1
        and per_boundary[1].certainly_abs_gt(degree_total)
    )
    cond_b = all(
        per_boundary[b.base_boundary].certainly_abs_gt(4 * b.degree) for b in geom.boundaries
    )
    hyps = (
        _h("cover is fully ramified", fully_ramified),
        _h("chi(S~) < 0", geom.euler_char < 0),
        _h("geometric type of L asserted", True if gtype else None),
        _h(
            "(a) dS, dS~ connected and |c(phi,L,dS)| > d, or (b) |c(phi,L,C)| > 4 d(pi,C~) for all C~",
            cond_a or cond_b,
        ),
    )
    return Verdict("geometry-transfer", conclusion, hyps, {"condition_a": cond_a, "condition_b": cond_b})


def rule_lspace_obstruction(
    fdtc: FdtcValue,
    k: int,
    d: int,
    hyperbolic: Assertion | bool | None,
    l_space: Assertion | bool | None = None,
) -> Verdict:
    """Contrapositive form: a hyperbolic closed k-braid with (k,d)=1 and |c| >= d
    has a d-fold cyclic branched cover that is not an L-space."""
    hyps = (
        _h("d >= 2", d >= 2),
        _h("(d,k)=1", math.gcd(k, d) == 1),
        _h("link is hyperbolic (asserted)", _as_bool(hyperbolic)),
        _h("|c([id],L,dD^2)| >= d", fdtc.certainly_abs_ge(d)),
    )
    details = {}
    if _as_bool(l_space) and all(h.status is HypStatus.SATISFIED for h in hyps):
        details["contradicts_assertion"] = "l_space"
    return Verdict(
        "lspace-obstruction",
        f"the {d}-fold cyclic branched cover is not an L-space (admits a taut foliation)",
        hyps,
        details,
    )


def rule_universal_tightness(
    prongs: Assertion | Sequence[tuple[int, int]] | None,
    pA: Assertion | bool | None,
    fully_ramified: bool,
    geom: CoverGeometry | None = None,
    fdtc: Mapping[int, FdtcValue] | None = None,
) -> Verdict:
    """Pseudo-Anosov braid with c(phi,L,C_i) = k_i/p_i, all k_i >= 2: the cover
    supports a universally tight contact structure."""
    pairs = _as_value(prongs)
    hyps = [
        _h("braid is pseudo-Anosov (asserted)", _as_bool(pA)),
        _h("cover is fully ramified", fully_ramified),
        _h("prong data supplied", bool(pairs)),
    ]
    details: dict[str, Any] = {}
    if pairs:
        hyps.append(_h("k_i >= 2 for every boundary component", all(k >= 2 for k, _ in pairs)))
        if fdtc is not None:
            consistent = all(
                i in fdtc and fdtc[i].contains(Fraction(k, p)) for i, (k, p) in enumerate(pairs, 1)
            )
            hyps.append(_h("k_i/p_i consistent with computed FDTC", consistent))
        if geom is not None:
            bases = {b.base_boundary for b in geom.boundaries}
            hyps.append(_h("prong data for every base boundary", len(pairs) == len(bases)))
            lifted = []
            for b in geom.boundaries:
                if b.base_boundary <= len(pairs):
                    k, p = pairs[b.base_boundary - 1]
                    lifted.append(
                        {
                            "boundary": [b.base_boundary, b.component],
                            "prongs": p * b.degree,
                            "fdtc": format_rational(Fraction(k, p * b.degree)),
                        }
                    )
            details["lifted"] = lifted
    else:
        hyps.append(_h("k_i >= 2 for every boundary component", None))
    return Verdict(
        "universal-tightness",
        "(S~, phi~) supports a universally tight contact structure",
        tuple(hyps),
        details,
    )


def rule_looseness(base_rv: RightVeeringStatus, fully_ramified: bool) -> Verdict:
    return Verdict(
        "looseness-of-lifts",
        "(S~, phi~) supports an overtwisted contact structure and the lift L~ is a loose transverse link",
        (
            _h("L is non-right-veering", base_rv is RightVeeringStatus.NOT_RIGHT_VEERING),
            _h("cover is fully ramified", fully_ramified),
        ),
    )


def rule_virtually_loose(base_rv: RightVeeringStatus) -> Verdict:
    # The standard cyclic cover always exists, so no cover hypothesis is needed.
    # Only this direction is proved; the converse is open, so a right-veering
    # braid yields nothing.
    return Verdict(
        "virtually-loose",
        "the transverse link T is virtually loose",
        (_h("L is non-right-veering", base_rv is RightVeeringStatus.NOT_RIGHT_VEERING),),
    )


def rule_overtwisted(fdtc: FdtcValue) -> Verdict:
    return Verdict(
        "negative-fdtc-overtwisted",
        "the supported contact structure is overtwisted",
        (_h("c(phi) < 0", fdtc.certainly_lt(0)),),
    )


def rule_geometry_from_magnitude(
    fdtc: FdtcValue,
    nt_type: Assertion | str | None,
    boundary_connected: bool = True,
    type_transfer: bool | None = None,
) -> Verdict:
    """|c| >= 1: the open book manifold is Seifert fibered / toroidal / hyperbolic
    according to the monodromy being periodic / reducible / pseudo-Anosov.

    ``type_transfer`` is set when the Nielsen-Thurston type was asserted for the
    braid and is being used for the lifted monodromy; it records whether the
    cover preserves the type (fully ramified with chi < 0).
    """
    nt = _as_value(nt_type)
    geometry = NT_TO_GEOMETRY.get(nt)
    hyps = [
        _h("Nielsen-Thurston type asserted", True if nt else None),
        _h("binding connected", boundary_connected),
        _h("|c(phi)| >= 1", fdtc.certainly_abs_ge(1)),
    ]
    if type_transfer is not None:
        hyps.append(_h("type preserved by cover (fully ramified, chi(S~) < 0)", type_transfer))
    conclusion = f"M(S, phi) is {geometry}" if geometry else "M(S, phi) geometry matches Nielsen-Thurston type"
    return Verdict("geometry-from-magnitude", conclusion, tuple(hyps))
