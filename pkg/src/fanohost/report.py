"""Host reports: one JSON-serializable document per visitor, plus a text rendering."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Optional

from . import cayley_builder as cb
from .ci_invariants import (
    CompleteIntersection,
    euler_char_ci,
    hodge_numbers,
    is_calabi_yau,
)
from .errors import InvariantViolation
from .sod_ledger import euler_consistency, hh_euler, hh_prediction, sod_of_host


@dataclass
class VisitorSummary:
    n: int
    degrees: list[int]
    dim: int
    calabi_yau: bool
    chi: int
    hodge: list[list[int]]


@dataclass
class HostReport:
    kind: str
    r: Optional[int]
    base: str
    twists: list[int]
    dim_x: int
    anti_canonical: dict
    anti_canonical_f: dict
    curve_degrees: list[int]
    fano: bool
    blowup: bool
    sod: dict
    hh: dict
    invariants: dict
    checks: dict
    assumptions: list[str]


@dataclass
class ReportDocument:
    visitor: VisitorSummary
    hosts: list[HostReport]
    bound: Optional[int]
    selected: Optional[int] = None
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, d: dict) -> "ReportDocument":
        return cls(
            visitor=VisitorSummary(**d["visitor"]),
            hosts=[HostReport(**h) for h in d["hosts"]],
            bound=d["bound"],
            selected=d.get("selected"),
            notes=list(d.get("notes", [])),
        )

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        return cls.from_dict(json.loads(text))

    def failed_checks(self) -> list[str]:
        out = []
        for i, h in enumerate(self.hosts):
            for name, val in h.checks.items():
                ok = val["pass"] if isinstance(val, dict) else val
                if ok is False:
                    out.append(f"hosts[{i}] {h.kind}: {name}")
        return out


def visitor_summary(ci: CompleteIntersection) -> VisitorSummary:
    return VisitorSummary(
        n=ci.n,
        degrees=list(ci.degrees),
        dim=ci.dimension(),
        calabi_yau=is_calabi_yau(ci),
        chi=euler_char_ci(ci),
        hodge=hodge_numbers(ci).as_lists(),
    )


def host_report(host: cb.HostConstruction) -> HostReport:
    hh = hh_prediction(host)
    euler = euler_consistency(host)
    checks = dict(cb.host_checks(host))
    checks["certificate_agreement"] = cb.certificate_agreement(host)
    checks["euler"] = euler.as_dict()
    # HH-ledger closure: the alternating HH sum must be the SOD-side Euler number
    if euler.rhs is not None:
        checks["hh_euler"] = hh_euler(hh) == euler.rhs
    table = hodge_numbers(host.visitor)
    checks["hodge_euler"] = table.euler() == euler_char_ci(host.visitor)
    index = cb.fano_index(host)
    return HostReport(
        kind=host.kind.value,
        r=host.r,
        base=str(host.base),
        twists=list(host.twists),
        dim_x=host.dim_x,
        anti_canonical=host.anti_canonical.as_dict(),
        anti_canonical_f=host.anti_canonical_f.as_dict(),
        curve_degrees=list(host.curve_degrees),
        fano=host.fano,
        blowup=host.blowup,
        sod=sod_of_host(host).as_dict(),
        hh={str(k): v for k, v in hh.items()},
        invariants={
            "chi_x": cb.euler_char_host(host),
            "anticanonical_degree": cb.anticanonical_degree(host),
            "fano_index": index,
            "fano_index_label": cb.fano_index_label(host),
        },
        checks=checks,
        assumptions=list(host.assumptions),
    )


def build_report(ci: CompleteIntersection, hosts: list[cb.HostConstruction]) -> ReportDocument:
    """Report on the given hosts; raises InvariantViolation if any check fails."""
    reports = [host_report(h) for h in hosts]
    best = cb.select_host(hosts)
    selected = hosts.index(best)
    bound_info = cb.fano_dimension_upper_bound(ci)
    doc = ReportDocument(
        visitor=visitor_summary(ci),
        hosts=reports,
        bound=best.dim_x if best.fano else None,
        selected=selected,
        notes=list(bound_info.notes),
    )
    failed = doc.failed_checks()
    if failed:
        raise InvariantViolation("; ".join(failed))
    return doc


def _fmt_class(d: dict, name="xi") -> str:
    return f"{d['xi']}*{name} {'+' if d['h'] >= 0 else '-'} {abs(d['h'])}*h"


def render_text(doc: ReportDocument) -> str:
    v = doc.visitor
    lines = [
        f"Visitor Y = CI({v.n}; {','.join(map(str, v.degrees))})  dim {v.dim}"
        + ("  Calabi-Yau" if v.calabi_yau else ""),
        f"  chi(Y) = {v.chi}",
        "  Hodge numbers h^{p,q} (row p):",
    ]
    lines += ["    " + " ".join(f"{x:>4}" for x in row) for row in v.hodge]
    for i, h in enumerate(doc.hosts):
        mark = "  <- selected" if i == doc.selected else ""
        inv, chk = h.invariants, h.checks
        e = chk["euler"]
        lines += [
            "",
            f"Host {i}: {h.kind}" + (f" r={h.r}" if h.r is not None else "") + mark,
            f"  base S = {h.base}, E = " + " + ".join(f"O({a})" for a in h.twists),
            f"  dim X = {h.dim_x}" + ("  (blowup of S along Y)" if h.blowup else ""),
            f"  -K_X = {_fmt_class(h.anti_canonical, 'xi_E')}"
            f" = {_fmt_class(h.anti_canonical_f, 'xi_F')}",
            f"  curve degrees (Fiber, Section 1..N) = {tuple(h.curve_degrees)}",
            f"  Fano: {'yes' if h.fano else 'no'}",
            "  SOD: " + ", ".join(
                f"{b['label']}" + (f" [{b['count']}]" if b["type"] == "exceptional" else "")
                for b in h.sod["blocks"]
            ),
            "  HH_k(X): " + ", ".join(f"{k}:{n}" for k, n in h.hh.items()),
            f"  chi(X) = {inv['chi_x']}",
            f"  (-K_X)^dim = {inv['anticanonical_degree']}",
            f"  {inv['fano_index_label']} = {inv['fano_index']}",
            "  checks:",
        ]
        for name, val in chk.items():
            if name == "euler":
                if e["pass"] is None:
                    lines.append(f"    euler: SKIP ({e['status']})")
                else:
                    lines.append(
                        f"    euler: {'PASS' if e['pass'] else 'FAIL'} "
                        f"lhs = {e['lhs']}, rhs = {e['rhs']}"
                    )
            else:
                lines.append(f"    {name}: {'PASS' if val else 'FAIL'}")
        lines.append("  assumptions:")
        lines += [f"    - {a}" for a in h.assumptions]
    lines += ["", f"Fano dimension upper bound: {doc.bound}"]
    lines += [f"  note: {n}" for n in doc.notes]
    return "\n".join(lines)
