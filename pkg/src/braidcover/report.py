"""Report structure and its JSON form.

All rationals are written as ``"p/q"`` strings; no floats appear.  Dicts are
built in a fixed key order so identical inputs give byte-identical output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .classify import HypStatus, Hypothesis, Verdict
from .cover import BoundaryComponent, BranchPreimage, CoverGeometry
from .engine import (
    FdtcValue,
    PeriodicCertificate,
    RightVeeringStatus,
    ValueKind,
    format_rational,
    parse_rational,
)
from .transfer import RightVeeringTriple, TransferResult


def fdtc_to_dict(v: FdtcValue) -> dict:
    d: dict[str, Any] = {"kind": v.kind.value}
    if v.is_exact:
        d["value"] = format_rational(v.value)
    else:
        d["lower"] = format_rational(v.lower)
        d["upper"] = format_rational(v.upper)
    if v.certificate is not None:
        d["certificate"] = {"period": v.certificate.period, "twist": v.certificate.twist}
    return d


def fdtc_from_dict(d: dict) -> FdtcValue:
    cert = d.get("certificate")
    cert = PeriodicCertificate(cert["period"], cert["twist"]) if cert else None
    kind = ValueKind(d["kind"])
    if kind is ValueKind.EXACT:
        v = parse_rational(d["value"])
        return FdtcValue(kind, v, v, cert)
    return FdtcValue(kind, parse_rational(d["lower"]), parse_rational(d["upper"]), cert)


def geometry_to_dict(g: CoverGeometry) -> dict:
    return {
        "euler_char": g.euler_char,
        "genus": g.genus,
        "degree": g.degree,
        "boundaries": [
            {
                "base_boundary": b.base_boundary,
                "component": b.component,
                "degree": b.degree,
                "sheets": list(b.sheets),
            }
            for b in g.boundaries
        ],
        "branch_preimages": [
            {
                "branch_point": p.branch_point,
                "preimage_count": p.preimage_count,
                "ramification_indices": list(p.ramification_indices),
            }
            for p in g.branch_preimages
        ],
    }


def geometry_from_dict(d: dict) -> CoverGeometry:
    return CoverGeometry(
        d["euler_char"],
        d["genus"],
        tuple(
            BoundaryComponent(b["base_boundary"], b["component"], b["degree"], tuple(b["sheets"]))
            for b in d["boundaries"]
        ),
        tuple(
            BranchPreimage(p["branch_point"], p["preimage_count"], tuple(p["ramification_indices"]))
            for p in d["branch_preimages"]
        ),
        d["degree"],
    )


def transfer_to_dict(t: TransferResult) -> dict:
    return {
        "boundary": list(t.boundary),
        "divisor": t.divisor,
        "lifted_monodromy_fdtc": fdtc_to_dict(t.lifted_fdtc),
        "lifted_braid_fdtc": fdtc_to_dict(t.lifted_braid_fdtc),
    }


def transfer_from_dict(d: dict) -> TransferResult:
    return TransferResult(
        fdtc_from_dict(d["lifted_monodromy_fdtc"]),
        fdtc_from_dict(d["lifted_braid_fdtc"]),
        d["divisor"],
        tuple(d["boundary"]),
    )


def verdict_to_dict(v: Verdict) -> dict:
    d: dict[str, Any] = {
        "rule": v.rule,
        "conclusion": v.conclusion,
        "status": v.status.value,
        "hypotheses": [{"cond": h.cond, "status": h.status.value} for h in v.hypotheses],
    }
    if v.details:
        d["details"] = dict(v.details)
    return d


def verdict_from_dict(d: dict) -> Verdict:
    v = Verdict(
        d["rule"],
        d["conclusion"],
        tuple(Hypothesis(h["cond"], HypStatus(h["status"])) for h in d["hypotheses"]),
        d.get("details", {}),
    )
    if v.status.value != d["status"]:
        raise ValueError(f"verdict status {d['status']} disagrees with its hypotheses")
    return v


@dataclass
class Report:
    command: str
    input: dict
    fdtc: FdtcValue | None = None
    right_veering: RightVeeringStatus | None = None
    cover: CoverGeometry | None = None
    fully_ramified: bool | None = None
    transfer: list[TransferResult] = field(default_factory=list)
    transfer_error: dict | None = None
    right_veering_lift: RightVeeringTriple | None = None
    verdicts: list[Verdict] = field(default_factory=list)
    # microseconds per stage; kept out of the canonical body unless requested
    timings: dict[str, int] | None = field(default=None, compare=False)

    def to_dict(self, include_timings: bool = False) -> dict:
        d: dict[str, Any] = {"command": self.command, "input": self.input}
        if self.fdtc is not None:
            d["fdtc"] = fdtc_to_dict(self.fdtc)
        if self.right_veering is not None:
            d["right_veering"] = self.right_veering.value
        if self.cover is not None:
            d["cover"] = geometry_to_dict(self.cover)
        if self.fully_ramified is not None:
            d["fully_ramified"] = self.fully_ramified
        if self.transfer:
            d["transfer"] = [transfer_to_dict(t) for t in self.transfer]
        if self.transfer_error is not None:
            d["transfer_error"] = self.transfer_error
        if self.right_veering_lift is not None:
            r = self.right_veering_lift
            d["right_veering_lift"] = {
                "braid": r.braid.value,
                "lifted_monodromy": r.lifted_monodromy.value,
                "lifted_braid": r.lifted_braid.value,
            }
        if self.verdicts:
            d["verdicts"] = [verdict_to_dict(v) for v in self.verdicts]
        if include_timings and self.timings is not None:
            d["timings_us"] = dict(self.timings)
        return d

    def to_json(self, include_timings: bool = False) -> str:
        return json.dumps(self.to_dict(include_timings), indent=2)

    @classmethod
    def from_dict(cls, d: dict) -> Report:
        rvl = d.get("right_veering_lift")
        return cls(
            command=d["command"],
            input=d["input"],
            fdtc=fdtc_from_dict(d["fdtc"]) if "fdtc" in d else None,
            right_veering=RightVeeringStatus(d["right_veering"]) if "right_veering" in d else None,
            cover=geometry_from_dict(d["cover"]) if "cover" in d else None,
            fully_ramified=d.get("fully_ramified"),
            transfer=[transfer_from_dict(t) for t in d.get("transfer", [])],
            transfer_error=d.get("transfer_error"),
            right_veering_lift=RightVeeringTriple(
                RightVeeringStatus(rvl["braid"]),
                RightVeeringStatus(rvl["lifted_monodromy"]),
                RightVeeringStatus(rvl["lifted_braid"]),
            )
            if rvl
            else None,
            verdicts=[verdict_from_dict(v) for v in d.get("verdicts", [])],
            timings=d.get("timings_us"),
        )

    @classmethod
    def from_json(cls, text: str) -> Report:
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = [f"{self.command}: {self.input.get('braid', '')!r} in B_{self.input.get('strands')}"]
        if self.fdtc is not None:
            line = f"  FDTC: {self.fdtc}"
            if self.fdtc.certificate is not None:
                c = self.fdtc.certificate
                line += f"  (certificate: b^{c.period} = Delta^(2*{c.twist}))"
            lines.append(line)
        if self.right_veering is not None:
            lines.append(f"  right-veering: {self.right_veering.value}")
        if self.cover is not None:
            g = self.cover
            degs = ", ".join(str(b.degree) for b in g.boundaries)
            lines.append(
                f"  cover: degree {g.degree}, chi={g.euler_char}, genus {g.genus}, "
                f"{g.boundary_count} boundary component(s) of degree {degs}; "
                f"fully ramified: {self.fully_ramified}"
            )
        for t in self.transfer:
            lines.append(f"  lifted FDTC at boundary {tuple(t.boundary)} (d={t.divisor}): {t.lifted_fdtc}")
        if self.transfer_error is not None:
            lines.append(f"  transfer refused: {self.transfer_error['error']}: {self.transfer_error['message']}")
        if self.right_veering_lift is not None:
            r = self.right_veering_lift
            lines.append(
                f"  right-veering (braid / lifted monodromy / lifted braid): "
                f"{r.braid.value} / {r.lifted_monodromy.value} / {r.lifted_braid.value}"
            )
        for v in self.verdicts:
            lines.append(f"  [{v.status.value}] {v.rule}: {v.conclusion}")
            for h in v.hypotheses:
                lines.append(f"      {h.status.value:9s} {h.cond}")
        if self.timings:
            lines.append("  timings: " + ", ".join(f"{k}={us // 1000}ms" for k, us in self.timings.items()))
        return "\n".join(lines)
