import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from braidcover import FdtcValue, RightVeeringStatus, cover_geometry, standard_cyclic
from braidcover.classify import (
    Assertion,
    HypStatus,
    Hypothesis,
    Verdict,
    VerdictStatus,
    rule_geometry_from_magnitude,
    rule_geometry_transfer,
    rule_looseness,
    rule_lspace_obstruction,
    rule_overtwisted,
    rule_universal_tightness,
    rule_virtually_loose,
)

RV = RightVeeringStatus
PROVED = VerdictStatus.PROVED
INCONCLUSIVE = VerdictStatus.INCONCLUSIVE
exact = FdtcValue.exact
interval = FdtcValue.interval


def hyp(v: Verdict, cond: str) -> HypStatus:
    return next(h.status for h in v.hypotheses if h.cond == cond)


@pytest.fixture
def torus_cover():
    # B_3, d = 2: genus one, one boundary component
    return cover_geometry(standard_cyclic(3, 2))


class TestGeometryTransfer:
    def test_five_halves(self, torus_cover):
        v = rule_geometry_transfer(exact(F(5, 2)), torus_cover, 2, Assertion("geometry", "hyperbolic"), True)
        assert v.status is PROVED
        assert "hyperbolic" in v.conclusion
        assert v.details["condition_a"] and not v.details["condition_b"]

    def test_one_is_too_small(self, torus_cover):
        v = rule_geometry_transfer(exact(1), torus_cover, 2, "hyperbolic", True)
        assert v.status is INCONCLUSIVE

    def test_interval_certifies(self, torus_cover):
        v = rule_geometry_transfer(interval(F(9, 4), F(5, 2)), torus_cover, 2, "toroidal", True)
        assert v.status is PROVED and "toroidal" in v.conclusion

    def test_strict_at_boundary(self, torus_cover):
        assert rule_geometry_transfer(exact(2), torus_cover, 2, "hyperbolic", True).status is INCONCLUSIVE
        assert rule_geometry_transfer(interval(2, 3), torus_cover, 2, "hyperbolic", True).status is INCONCLUSIVE

    def test_condition_b(self):
        geom = cover_geometry(standard_cyclic(4, 2))  # two boundaries, each degree 1
        assert rule_geometry_transfer(exact(F(9, 2)), geom, 2, "hyperbolic", True).status is PROVED
        assert rule_geometry_transfer(exact(4), geom, 2, "hyperbolic", True).status is INCONCLUSIVE

    def test_missing_geometry(self, torus_cover):
        v = rule_geometry_transfer(exact(5), torus_cover, 2, None, True)
        assert v.status is INCONCLUSIVE
        assert hyp(v, "geometric type of L asserted") is HypStatus.UNKNOWN

    def test_annulus_fails_chi(self):
        v = rule_geometry_transfer(exact(5), cover_geometry(standard_cyclic(2, 2)), 2, "hyperbolic", True)
        assert hyp(v, "chi(S~) < 0") is HypStatus.VIOLATED


class TestLSpace:
    def test_proved(self):
        v = rule_lspace_obstruction(exact(F(5, 2)), 3, 2, Assertion("geometry", "hyperbolic").value == "hyperbolic")
        assert v.status is PROVED
        assert "not an L-space" in v.conclusion

    def test_gcd(self):
        v = rule_lspace_obstruction(exact(F(5, 2)), 4, 2, True)
        assert v.status is INCONCLUSIVE
        assert hyp(v, "(d,k)=1") is HypStatus.VIOLATED

    def test_small(self):
        assert rule_lspace_obstruction(exact(F(1, 2)), 3, 2, True).status is INCONCLUSIVE

    def test_equality_is_enough(self):
        assert rule_lspace_obstruction(exact(2), 3, 2, True).status is PROVED
        assert rule_lspace_obstruction(exact(-2), 3, 2, True).status is PROVED

    def test_hyperbolic_unknown(self):
        v = rule_lspace_obstruction(exact(3), 3, 2, None)
        assert hyp(v, "link is hyperbolic (asserted)") is HypStatus.UNKNOWN

    def test_contradiction_flagged(self):
        v = rule_lspace_obstruction(exact(3), 3, 2, True, l_space=True)
        assert v.details["contradicts_assertion"] == "l_space"


class TestUniversalTightness:
    def test_single_boundary(self, torus_cover):
        v = rule_universal_tightness(Assertion("prongs", [(2, 3)]), True, True, torus_cover)
        assert v.status is PROVED
        assert v.details["lifted"] == [{"boundary": [1, 1], "prongs": 6, "fdtc": "1/3"}]

    def test_k_one(self):
        v = rule_universal_tightness([(1, 2)], True, True)
        assert v.status is INCONCLUSIVE
        assert hyp(v, "k_i >= 2 for every boundary component") is HypStatus.VIOLATED

    def test_two_boundaries(self):
        assert rule_universal_tightness([(2, 5), (3, 4)], True, True).status is PROVED

    def test_no_prongs(self):
        v = rule_universal_tightness(None, True, True)
        assert hyp(v, "prong data supplied") is HypStatus.VIOLATED

    def test_fdtc_consistency(self, torus_cover):
        ok = rule_universal_tightness([(2, 3)], True, True, torus_cover, {1: exact(F(2, 3))})
        bad = rule_universal_tightness([(2, 3)], True, True, torus_cover, {1: exact(1)})
        assert ok.status is PROVED and bad.status is INCONCLUSIVE

    def test_bad_prongs(self):
        with pytest.raises(ValueError):
            Assertion("prongs", [(2, 0)])


class TestRightVeeringRules:
    @pytest.mark.parametrize("rv,expected", [(RV.NOT_RIGHT_VEERING, PROVED), (RV.RIGHT_VEERING, INCONCLUSIVE), (RV.INDETERMINATE, INCONCLUSIVE)])
    def test_looseness(self, rv, expected):
        assert rule_looseness(rv, True).status is expected

    def test_looseness_needs_ramification(self):
        assert rule_looseness(RV.NOT_RIGHT_VEERING, False).status is INCONCLUSIVE

    @pytest.mark.parametrize("rv,expected", [(RV.NOT_RIGHT_VEERING, PROVED), (RV.RIGHT_VEERING, INCONCLUSIVE), (RV.INDETERMINATE, INCONCLUSIVE)])
    def test_virtually_loose(self, rv, expected):
        v = rule_virtually_loose(rv)
        assert v.status is expected
        assert "non-loose" not in v.conclusion


class TestOvertwistedAndMagnitude:
    @pytest.mark.parametrize(
        "value,expected",
        [(exact(F(-1, 3)), PROVED), (exact(F(1, 2)), INCONCLUSIVE), (interval(F(-1, 8), F(1, 8)), INCONCLUSIVE), (exact(0), INCONCLUSIVE)],
    )
    def test_overtwisted(self, value, expected):
        assert rule_overtwisted(value).status is expected

    def test_periodic_seifert(self):
        v = rule_geometry_from_magnitude(exact(1), "periodic")
        assert v.status is PROVED and "seifert-fibered" in v.conclusion

    def test_interval_small(self):
        for nt in ("periodic", "reducible", "pseudo-anosov", None):
            assert rule_geometry_from_magnitude(interval(F(1, 4), F(1, 2)), nt).status is INCONCLUSIVE

    def test_negative_pa(self):
        v = rule_geometry_from_magnitude(exact(F(-3, 2)), Assertion("nielsen_thurston", "pseudo-anosov"))
        assert v.status is PROVED and "hyperbolic" in v.conclusion

    def test_type_transfer_flag(self):
        assert rule_geometry_from_magnitude(exact(2), "reducible", True, False).status is INCONCLUSIVE
        assert rule_geometry_from_magnitude(exact(2), "reducible", False).status is INCONCLUSIVE


class TestVerdictStatus:
    def test_derived(self):
        sat = Hypothesis("x", HypStatus.SATISFIED)
        assert Verdict("r", "c", (sat, sat)).status is PROVED
        for bad in (HypStatus.VIOLATED, HypStatus.UNKNOWN):
            assert Verdict("r", "c", (sat, Hypothesis("y", bad))).status is INCONCLUSIVE


def _random_value(rng: random.Random) -> FdtcValue:
    a = F(rng.randint(-40, 40), rng.randint(1, 8))
    if rng.random() < 0.5:
        return exact(a)
    return interval(a, a + F(rng.randint(0, 16), rng.randint(1, 8)))


def _random_verdict(rng: random.Random, geoms) -> Verdict:
    which = rng.randrange(7)
    full = rng.random() < 0.7
    rv = rng.choice(list(RV))
    maybe = lambda: rng.choice([True, False, None])
    value = _random_value(rng)
    if which == 0:
        geom = rng.choice(geoms)
        gtype = rng.choice([None, "seifert-fibered", "toroidal", "hyperbolic"])
        return rule_geometry_transfer(value, geom, geom.degree, gtype, full)
    if which == 1:
        return rule_lspace_obstruction(value, rng.randint(2, 8), rng.randint(1, 8), maybe(), maybe())
    if which == 2:
        prongs = rng.choice([None, [(rng.randint(1, 4), rng.randint(1, 5)) for _ in range(rng.randint(1, 3))]])
        return rule_universal_tightness(prongs, maybe(), full)
    if which == 3:
        return rule_looseness(rv, full)
    if which == 4:
        return rule_virtually_loose(rv)
    if which == 5:
        return rule_overtwisted(value)
    nt = rng.choice([None, "periodic", "reducible", "pseudo-anosov"])
    return rule_geometry_from_magnitude(value, nt, rng.random() < 0.8, maybe())


def test_soundness_randomized():
    rng = random.Random(20261016)
    geoms = [cover_geometry(standard_cyclic(n, d)) for n in range(2, 7) for d in range(2, 5)]
    proved = 0
    for _ in range(1000):
        v = _random_verdict(rng, geoms)
        statuses = [h.status for h in v.hypotheses]
        if v.status is PROVED:
            proved += 1
            assert all(s is HypStatus.SATISFIED for s in statuses)
        else:
            assert any(s is not HypStatus.SATISFIED for s in statuses)
        # flipping any single hypothesis demotes a Proved verdict
        for i in range(len(v.hypotheses)):
            flipped = list(v.hypotheses)
            flipped[i] = Hypothesis(flipped[i].cond, HypStatus.VIOLATED)
            assert Verdict(v.rule, v.conclusion, tuple(flipped)).status is INCONCLUSIVE
    assert proved > 50


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-480, 480), min_size=4, max_size=4))
def test_tightening_keeps_proofs(nums):
    # four points on a 1/24 grid: [lo, hi] contains [a, b]
    lo, a, b, hi = (F(x, 24) for x in sorted(nums))
    wide = interval(lo, hi)
    narrow = interval(a, b)
    geom = cover_geometry(standard_cyclic(3, 2))
    rules = [
        lambda v: rule_geometry_transfer(v, geom, 2, "hyperbolic", True),
        lambda v: rule_lspace_obstruction(v, 3, 2, True),
        lambda v: rule_overtwisted(v),
        lambda v: rule_geometry_from_magnitude(v, "pseudo-anosov"),
    ]
    for rule in rules:
        if rule(wide).proved:
            assert rule(narrow).proved
            assert rule(exact(a)).proved
