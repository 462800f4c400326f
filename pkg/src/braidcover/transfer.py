"""Lifting FDTC values and right-veering status along fully ramified covers.

For a fully ramified cover with chi(cover) < 0, the coefficient upstairs at a
boundary component is the base coefficient divided by the degree with which
that component covers its base boundary.  When chi >= 0 the division rule
fails; the double cover of the disk over two points (the annulus) is the
standard counterexample, where the half twist lifts to the core Dehn twist.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .cover import CoverGeometry
from .engine import FdtcValue, PeriodicCertificate, RightVeeringStatus, format_rational
from .errors import AnnulusException, InputError, NotFullyRamified


@dataclass(frozen=True)
class TransferInput:
    base_fdtc: FdtcValue
    geometry: CoverGeometry
    fully_ramified: bool
    boundary_selector: tuple[int, int] = (1, 1)


@dataclass(frozen=True)
class TransferResult:
    # coefficient of the lifted monodromy and of the lifted braid; always equal
    lifted_fdtc: FdtcValue
    lifted_braid_fdtc: FdtcValue
    divisor: int
    boundary: tuple[int, int]


@dataclass(frozen=True)
class RightVeeringTriple:
    braid: RightVeeringStatus
    lifted_monodromy: RightVeeringStatus
    lifted_braid: RightVeeringStatus


def _annulus_details(base: FdtcValue, geometry: CoverGeometry, divisor: int) -> dict:
    details = {
        "euler_char": geometry.euler_char,
        "divisor": divisor,
        "naive_lower": format_rational(base.lower / divisor),
        "naive_upper": format_rational(base.upper / divisor),
    }
    if geometry.is_annulus() and geometry.degree == 2 and len(geometry.branch_preimages) == 2:
        # B_2 double cover: sigma_1^k lifts to the k-th power of the core
        # Dehn twist, whose coefficient is k = 2 * c(sigma_1^k).
        details["annulus_lower"] = format_rational(2 * base.lower)
        details["annulus_upper"] = format_rational(2 * base.upper)
        details["naive_formula_contradicted"] = base.lower != 0 or base.upper != 0
    return details


def lift_fdtc(inp: TransferInput) -> TransferResult:
    if not inp.fully_ramified:
        raise NotFullyRamified(
            "cover is not fully ramified: some branch point has an unramified preimage",
            rule="fully-ramified",
        )
    bsel, csel = inp.boundary_selector
    comp = inp.geometry.select(bsel, csel)
    d = comp.degree
    if inp.geometry.euler_char >= 0:
        raise AnnulusException(
            f"covering surface has euler characteristic {inp.geometry.euler_char} >= 0; "
            "the division formula does not hold",
            **_annulus_details(inp.base_fdtc, inp.geometry, d),
        )
    # the base certificate describes the braid downstairs, not the lift
    lifted = replace(inp.base_fdtc.scaled(Fraction(1, d)), certificate=None)
    return TransferResult(lifted, lifted, d, (bsel, csel))


def lift_all(base_fdtc: FdtcValue, geometry: CoverGeometry, fully_ramified: bool) -> list[TransferResult]:
    """Lift at every boundary component of the cover (base boundary 1 = the disk boundary)."""
    return [
        lift_fdtc(TransferInput(base_fdtc, geometry, fully_ramified, (b.base_boundary, b.component)))
        for b in geometry.boundaries
    ]


def propagate_right_veering(base: RightVeeringStatus, inp: TransferInput) -> RightVeeringTriple:
    """The braid, the lifted monodromy and the lifted braid share right-veering status."""
    if not inp.fully_ramified:
        raise NotFullyRamified("right-veering transfer needs a fully ramified cover", rule="fully-ramified")
    return RightVeeringTriple(base, base, base)


def periodic_lift_check(cert: PeriodicCertificate, divisor: int) -> Fraction:
    """M/(dN) from the periodic relation b^N = Delta^{2M} lifted to the cover."""
    if divisor < 1:
        raise InputError("divisor must be >= 1")
    return Fraction(cert.twist, divisor * cert.period)
