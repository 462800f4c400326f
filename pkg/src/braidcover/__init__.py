"""Fractional Dehn twist coefficients of braids and their lifts to branched covers."""

from .braid import (
    BraidPermutation,
    BraidWord,
    component_count,
    compose,
    exponent_sum,
    full_twist,
    invert,
    parse,
    permutation,
    power,
)
from .cover import (
    BaseSurface,
    CoverGeometry,
    MonodromyRep,
    boundary_connectivity,
    cover_geometry,
    is_fully_ramified,
    standard_cyclic,
)
from .dehornoy import Ordering, SigmaClass, compare, handle_reduce, is_trivial, sigma_class
from .engine import (
    FdtcValue,
    PeriodicCertificate,
    RightVeeringStatus,
    certify_periodic,
    dehornoy_floor,
    fdtc_bounds,
    right_veering_status,
)
from .transfer import TransferInput, TransferResult, lift_fdtc, periodic_lift_check, propagate_right_veering

__version__ = "0.1.0"
