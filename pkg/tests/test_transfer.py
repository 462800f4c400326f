from fractions import Fraction

import pytest
from hypothesis import given, settings

from braidcover import (
    BaseSurface,
    BraidWord,
    FdtcValue,
    MonodromyRep,
    PeriodicCertificate,
    RightVeeringStatus,
    TransferInput,
    certify_periodic,
    cover_geometry,
    full_twist,
    is_fully_ramified,
    lift_fdtc,
    periodic_lift_check,
    propagate_right_veering,
    standard_cyclic,
)
from braidcover.cover import perm_from_cycles
from braidcover.errors import AnnulusException, NotFullyRamified
from braidcover.transfer import lift_all

from conftest import periodic_braids


def chain_relation_fdtc():
    """FDTC of the lift of the full twist of B_3 to the double cover (torus minus a disk).

    s1, s2 lift to Dehn twists about curves a, b meeting once.  The full twist
    (s1 s2)^3 lifts to L = (t_a t_b)^3, and the 2-chain relation
    (t_a t_b)^6 = t_boundary gives L^2 = t_boundary, so c(L) = 1/2.
    Sanity check of the chain: t_a t_b has order 6 on H_1 of the torus.
    """
    ta = ((1, 1), (0, 1))
    tb = ((1, 0), (-1, 1))

    def mul(x, y):
        return tuple(tuple(sum(x[i][k] * y[k][j] for k in range(2)) for j in range(2)) for i in range(2))

    prod = mul(ta, tb)
    acc, order = prod, 1
    while acc != ((1, 0), (0, 1)):
        acc, order = mul(acc, prod), order + 1
    assert order == 6
    lifted_power, boundary_twists = order // 3, 1  # L^2 = (t_a t_b)^6
    return Fraction(boundary_twists, lifted_power)


def transfer_input(value, n, d, selector=(1, 1)):
    rep = standard_cyclic(n, d)
    return TransferInput(value, cover_geometry(rep), is_fully_ramified(rep), selector)


class TestLift:
    def test_full_twist_b3_double_cover(self):
        base = FdtcValue.exact(1, PeriodicCertificate(1, 1))
        res = lift_fdtc(transfer_input(base, 3, 2))
        assert res.divisor == 2
        assert res.lifted_fdtc.is_exact and res.lifted_fdtc.value == Fraction(1, 2)
        assert res.lifted_fdtc.value == chain_relation_fdtc()

    def test_annulus_guard(self):
        base = FdtcValue.exact(Fraction(1, 2), PeriodicCertificate(2, 1))
        with pytest.raises(AnnulusException) as info:
            lift_fdtc(transfer_input(base, 2, 2))
        d = info.value.to_dict()
        assert d["divisor"] == 1
        assert d["naive_lower"] == "1/2"
        # the half twist lifts to the core Dehn twist, coefficient 1
        assert d["annulus_lower"] == "1/1"
        assert d["naive_formula_contradicted"] is True

    def test_zero(self):
        res = lift_fdtc(transfer_input(FdtcValue.exact(0), 3, 2))
        assert res.lifted_fdtc.value == 0

    def test_interval(self):
        base = FdtcValue.interval(Fraction(1, 3), Fraction(1, 2))
        res = lift_fdtc(transfer_input(base, 5, 3))
        assert res.lifted_fdtc == FdtcValue.interval(Fraction(1, 9), Fraction(1, 6))

    def test_not_fully_ramified(self):
        rep = MonodromyRep(3, (perm_from_cycles([[1, 2]], 3),) * 2 + (perm_from_cycles([[2, 3]], 3),), BaseSurface.disk(3))
        inp = TransferInput(FdtcValue.exact(1), cover_geometry(rep), is_fully_ramified(rep))
        with pytest.raises(NotFullyRamified):
            lift_fdtc(inp)

    def test_both_coefficients_identical(self):
        res = lift_fdtc(transfer_input(FdtcValue.exact(Fraction(7, 3)), 3, 2))
        assert res.lifted_fdtc == res.lifted_braid_fdtc

    def test_two_boundaries(self):
        results = lift_all(FdtcValue.exact(1), cover_geometry(standard_cyclic(4, 2)), True)
        assert [r.lifted_fdtc.value for r in results] == [1, 1]
        assert [r.boundary for r in results] == [(1, 1), (1, 2)]

    @pytest.mark.parametrize("n", range(1, 13))
    @pytest.mark.parametrize("d", range(2, 13))
    def test_guard_complete(self, n, d):
        inp = transfer_input(FdtcValue.exact(Fraction(3, 7)), n, d)
        if inp.geometry.euler_char < 0:
            res = lift_fdtc(inp)
            assert res.lifted_fdtc.value * res.divisor == Fraction(3, 7)
            assert n >= 3 or (n == 2 and d >= 3)
        else:
            with pytest.raises(AnnulusException):
                lift_fdtc(inp)
            assert n == 1 or (n, d) == (2, 2)


class TestRightVeering:
    @pytest.mark.parametrize(
        "status,n,d",
        [
            (RightVeeringStatus.RIGHT_VEERING, 3, 2),
            (RightVeeringStatus.NOT_RIGHT_VEERING, 5, 3),
            (RightVeeringStatus.INDETERMINATE, 3, 2),
        ],
    )
    def test_all_three_equal(self, status, n, d):
        r = propagate_right_veering(status, transfer_input(FdtcValue.exact(0), n, d))
        assert r.braid is r.lifted_monodromy is r.lifted_braid is status

    def test_annulus_allowed(self):
        r = propagate_right_veering(RightVeeringStatus.RIGHT_VEERING, transfer_input(FdtcValue.exact(0), 2, 2))
        assert r.lifted_braid is RightVeeringStatus.RIGHT_VEERING

    def test_needs_full_ramification(self):
        inp = TransferInput(FdtcValue.exact(0), cover_geometry(standard_cyclic(3, 2)), False)
        with pytest.raises(NotFullyRamified):
            propagate_right_veering(RightVeeringStatus.RIGHT_VEERING, inp)


class TestPeriodicRoute:
    def test_examples(self):
        assert periodic_lift_check(PeriodicCertificate(3, 1), 2) == Fraction(1, 6)
        assert periodic_lift_check(PeriodicCertificate(1, 1), 2) == Fraction(1, 2)
        assert periodic_lift_check(PeriodicCertificate(1, 0), 7) == 0

    @settings(max_examples=200, deadline=None)
    @given(periodic_braids())
    def test_agrees_with_lift(self, w):
        cert = certify_periodic(w, 24)
        n = w.strands
        for d in (2, 3, 4):
            geom = cover_geometry(standard_cyclic(n, d))
            if geom.euler_char >= 0:
                continue
            for res in lift_all(FdtcValue.exact(cert.fdtc, cert), geom, True):
                assert res.lifted_fdtc.value == periodic_lift_check(cert, res.divisor)

    def test_delta_b3(self):
        cert = certify_periodic(full_twist(3), 4)
        res = lift_fdtc(transfer_input(FdtcValue.exact(cert.fdtc, cert), 3, 2))
        assert periodic_lift_check(cert, res.divisor) == res.lifted_fdtc.value == Fraction(1, 2)
