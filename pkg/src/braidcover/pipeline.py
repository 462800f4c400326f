"""End-to-end commands: braid text in, :class:`Report` out."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from importlib import resources

import jsonschema

from .braid import BraidWord, parse
from .classify import (
    Assertion,
    rule_geometry_from_magnitude,
    rule_geometry_transfer,
    rule_looseness,
    rule_lspace_obstruction,
    rule_overtwisted,
    rule_universal_tightness,
    rule_virtually_loose,
)
from .cover import (
    BaseSurface,
    MonodromyRep,
    cover_geometry,
    is_fully_ramified,
    perm_from_cycles,
    standard_cyclic,
)
from .engine import FdtcValue, certify_periodic, fdtc_bounds, right_veering_status
from .errors import GuardError, InputError, InvariantViolation, SchemaError
from .report import Report
from .transfer import TransferInput, lift_all, propagate_right_veering

DEFAULT_MMAX = 12
DEFAULT_MAX_PERIOD = 24


def load_schema(name: str) -> dict:
    text = resources.files("braidcover").joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)


def _validate(data, name: str):
    try:
        jsonschema.validate(data, load_schema(name))
    except jsonschema.ValidationError as exc:
        raise SchemaError(f"{name}: {exc.message}") from None


def _perm(spec, degree: int):
    if spec and all(isinstance(x, int) for x in spec):
        spec = [spec]
    return perm_from_cycles(spec, degree)


def cover_from_spec(spec: dict) -> MonodromyRep:
    _validate(spec, "cover_spec")
    n, degree = spec["n"], spec["degree"]
    if spec["branch_perms"] == "standard_cyclic":
        if "base" in spec or "extra_perms" in spec:
            raise SchemaError("standard_cyclic is only defined over the disk; drop base/extra_perms")
        return standard_cyclic(n, degree)
    perms = tuple(_perm(p, degree) for p in spec["branch_perms"])
    if len(perms) != n:
        raise SchemaError(f"expected {n} branch permutations, got {len(perms)}")
    base_spec = spec.get("base", {})
    boundaries = base_spec.get("boundaries", [list(range(1, n + 1))])
    base = BaseSurface(base_spec.get("genus", 0), tuple(tuple(b) for b in boundaries))
    extra = tuple(_perm(p, degree) for p in spec.get("extra_perms", []))
    return MonodromyRep(degree, perms, base, extra)


def assertions_from_dict(data: dict) -> dict[str, Assertion]:
    _validate(data, "assertions")
    out = {k: Assertion(k, v) for k, v in data.items()}
    nt = data.get("nielsen_thurston")
    pa = data.get("pseudo_anosov")
    if nt is not None and pa is not None and (nt == "pseudo-anosov") != pa:
        raise SchemaError("pseudo_anosov contradicts nielsen_thurston")
    if pa is None and nt is not None:
        out["pseudo_anosov"] = Assertion("pseudo_anosov", nt == "pseudo-anosov")
    if nt is None and pa:
        out["nielsen_thurston"] = Assertion("nielsen_thurston", "pseudo-anosov")
    return out


class _Timer:
    def __init__(self):
        self.us: dict[str, int] = {}

    @contextmanager
    def stage(self, name: str):
        t0 = time.perf_counter_ns()
        yield
        self.us[name] = self.us.get(name, 0) + (time.perf_counter_ns() - t0) // 1000


def _braid(text: str, n: int | None) -> BraidWord:
    if n is None:
        # infer the smallest braid group containing every generator
        probe = parse(text, 10**9)
        n = max((abs(x) for x in probe.letters), default=0) + 1
    return parse(text, n)


def _compute_fdtc(w: BraidWord, m_max: int, max_period: int, budget, timer: _Timer):
    with timer.stage("certify_periodic"):
        cert = certify_periodic(w, max_period, budget)
    with timer.stage("fdtc_bounds"):
        enclosure = fdtc_bounds(w, m_max, budget=budget)
    if cert is not None:
        if not enclosure.contains(cert.fdtc):
            raise InvariantViolation(
                f"periodic value {cert.fdtc} outside the floor enclosure [{enclosure.lower}, {enclosure.upper}]"
            )
        value = FdtcValue.exact(cert.fdtc, cert)
    else:
        value = enclosure
    rv = right_veering_status(value, w, budget)
    return value, rv


def cmd_fdtc(
    braid: str,
    n: int | None = None,
    m_max: int = DEFAULT_MMAX,
    max_period: int = DEFAULT_MAX_PERIOD,
    budget: int | None = None,
) -> Report:
    timer = _Timer()
    w = _braid(braid, n)
    value, rv = _compute_fdtc(w, m_max, max_period, budget, timer)
    inp = {"braid": braid, "strands": w.strands, "mmax": m_max, "max_period": max_period}
    return Report("fdtc", inp, fdtc=value, right_veering=rv, timings=timer.us)


def _cover_for(w: BraidWord, degree: int, cover_spec: dict | None) -> MonodromyRep:
    if cover_spec is None:
        return standard_cyclic(w.strands, degree)
    rep = cover_from_spec(cover_spec)
    if rep.branch_points != w.strands:
        raise InputError(f"cover has {rep.branch_points} branch points but the braid has {w.strands} strands")
    return rep


def _transfer_stage(report: Report, w, degree, cover_spec, budget, timer, strict: bool):
    with timer.stage("cover"):
        rep = _cover_for(w, degree, cover_spec)
        geom = cover_geometry(rep)
        full = is_fully_ramified(rep)
    report.cover = geom
    report.fully_ramified = full
    report.input["degree"] = rep.degree
    report.input["cover"] = "standard_cyclic" if cover_spec is None else "spec"
    try:
        with timer.stage("transfer"):
            report.transfer = lift_all(report.fdtc, geom, full)
    except GuardError as exc:
        if strict:
            raise
        report.transfer_error = exc.to_dict()
    if full:
        report.right_veering_lift = propagate_right_veering(
            report.right_veering, TransferInput(report.fdtc, geom, full)
        )
    return rep, geom, full


def cmd_transfer(
    braid: str,
    n: int | None = None,
    degree: int = 2,
    cover_spec: dict | None = None,
    m_max: int = DEFAULT_MMAX,
    max_period: int = DEFAULT_MAX_PERIOD,
    budget: int | None = None,
) -> Report:
    """FDTC, cover geometry, guarded lift at every boundary component, and the
    assertion-free verdicts.  Guard failures propagate as exceptions."""
    timer = _Timer()
    w = _braid(braid, n)
    value, rv = _compute_fdtc(w, m_max, max_period, budget, timer)
    inp = {"braid": braid, "strands": w.strands, "mmax": m_max, "max_period": max_period}
    report = Report("transfer", inp, fdtc=value, right_veering=rv, timings=timer.us)
    _transfer_stage(report, w, degree, cover_spec, budget, timer, strict=True)
    full = report.fully_ramified
    report.verdicts = [
        rule_looseness(rv, full),
        rule_virtually_loose(rv),
        rule_overtwisted(report.transfer[0].lifted_fdtc),
    ]
    return report


def cmd_classify(
    braid: str,
    n: int | None = None,
    degree: int = 2,
    cover_spec: dict | None = None,
    assertions: dict | None = None,
    m_max: int = DEFAULT_MMAX,
    max_period: int = DEFAULT_MAX_PERIOD,
    budget: int | None = None,
) -> Report:
    """Run every rule.  Guard failures are recorded in the report instead of
    aborting, and show up as violated hypotheses."""
    facts = assertions_from_dict(assertions or {})
    timer = _Timer()
    w = _braid(braid, n)
    value, rv = _compute_fdtc(w, m_max, max_period, budget, timer)
    inp = {"braid": braid, "strands": w.strands, "mmax": m_max, "max_period": max_period}
    report = Report("classify", inp, fdtc=value, right_veering=rv, timings=timer.us)
    rep, geom, full = _transfer_stage(report, w, degree, cover_spec, budget, timer, strict=False)
    report.input["assertions"] = assertions or {}

    geometry = facts.get("geometry")
    hyperbolic = None if geometry is None else geometry.value == "hyperbolic"
    verdicts = [
        rule_geometry_transfer(value, geom, rep.degree, geometry, full, rep.base.boundary_components),
        rule_lspace_obstruction(value, w.strands, rep.degree, hyperbolic, facts.get("l_space")),
        rule_universal_tightness(
            facts.get("prongs"), facts.get("pseudo_anosov"), full, geom,
            {b: value for b in range(1, rep.base.boundary_components + 1)},
        ),
        rule_looseness(rv, full),
        rule_virtually_loose(rv),
    ]
    if report.transfer:
        lifted = report.transfer[0].lifted_fdtc
        verdicts.append(rule_overtwisted(lifted))
        verdicts.append(
            rule_geometry_from_magnitude(
                lifted,
                facts.get("nielsen_thurston"),
                boundary_connected=geom.boundary_count == 1,
                type_transfer=full and geom.euler_char < 0,
            )
        )
    report.verdicts = verdicts
    return report
