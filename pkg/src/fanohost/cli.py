"""fanohost command line.

    fanohost build  --n 4 --degrees 5 [--mode auto|general|cy|ouchi|blowup] [--r R] [--format text|json]
    fanohost verify --n 2 --degrees 4 --mode general --r 1
    fanohost bound  --n 4 --degrees 5
    fanohost bound  --sweep 6 3 6 --format json

Exit codes: 0 ok, 2 bad input, 3 requested construction is not Fano,
4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import cayley_builder as cb
from .ci_invariants import CompleteIntersection, make_ci
from .errors import InvariantViolation, UnsupportedConstruction
from .report import build_report, render_text
from .sod_ledger import euler_consistency
from .sweep import SweepConfig

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_NOT_FANO = 3
EXIT_INVARIANT = 4

MODES = ("auto", "general", "cy", "ouchi", "blowup")


class BadInput(Exception):
    pass


def parse_degrees(text: str) -> list[int]:
    try:
        degs = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise BadInput(f"--degrees must be a comma-separated list of integers, got {text!r}")
    if not degs:
        raise BadInput("--degrees is empty")
    if any(d < 1 for d in degs):
        raise BadInput(f"every degree must be a positive integer, got {degs}")
    return degs


def visitor_from_args(args) -> CompleteIntersection:
    if args.n is None or args.degrees is None:
        raise BadInput("--n and --degrees are required")
    degs = parse_degrees(args.degrees)
    if len(degs) > args.n:
        raise BadInput(f"codimension c={len(degs)} exceeds n={args.n}; Y would be empty")
    try:
        return make_ci(args.n, degs)
    except ValueError as exc:
        raise BadInput(str(exc))


def hosts_for_mode(ci: CompleteIntersection, mode: str, r=None) -> list[cb.HostConstruction]:
    if r is not None and mode not in ("auto", "general"):
        raise BadInput(f"--r only applies to the general and auto modes, not {mode!r}")
    try:
        if mode == "general":
            return [cb.build_general_host(ci, r)]
        if mode == "cy":
            return [cb.build_cy_host(ci)]
        if mode == "ouchi":
            return [cb.build_ouchi_host(ci)]
        if mode == "blowup":
            return [_blowup_host(ci)]
        hosts = cb.candidate_hosts(ci)
        if r is not None:
            hosts[0] = cb.build_general_host(ci, r)
        return hosts
    except UnsupportedConstruction as exc:
        raise BadInput(str(exc))
    except ValueError as exc:
        raise BadInput(str(exc))


def _blowup_host(ci: CompleteIntersection) -> cb.HostConstruction:
    # rank-2 constructions, where X is the blowup of S along Y
    cy = cb.canonical_twist(ci) == 0
    if ci.c == 1:
        return cb.build_cy_host(ci) if cy else cb.build_general_host(ci, 1)
    if cy:
        return cb.build_cy_host(ci) if ci.c == 2 else cb.build_ouchi_host(ci)
    raise UnsupportedConstruction(
        f"no rank-2 (blowup) host for {ci}: needs a hypersurface or a Calabi-Yau visitor"
    )


def cmd_build(args):
    """Returns (ReportDocument, exit code)."""
    ci = visitor_from_args(args)
    hosts = hosts_for_mode(ci, args.mode, args.r)
    doc = build_report(ci, hosts)
    chosen = doc.hosts[doc.selected]
    return doc, EXIT_OK if chosen.fano else EXIT_NOT_FANO


def verify_checks(ci: CompleteIntersection, hosts) -> list[tuple[str, bool, str]]:
    """(name, passed, detail) for the full invariant battery on these hosts."""
    out = []
    for host in hosts:
        tag = host.kind.value + (f"(r={host.r})" if host.r is not None else "")
        for name, ok in cb.host_checks(host).items():
            out.append((f"{tag} {name}", ok, ""))
        ok = cb.certificate_agreement(host)
        if host.kind is cb.HostKind.GENERAL:
            detail = (
                f"inequality: fano={cb.inequality_test(ci, host.r)}, "
                f"curves: fano={host.fano} {tuple(host.curve_degrees)}"
            )
        else:
            detail = f"K_S+det E test: fano={host.lemma31}, curves: {tuple(host.curve_degrees)}"
        out.append((f"{tag} certificate_agreement", ok, detail))
        e = euler_consistency(host)
        if e.passed is not None:
            out.append((f"{tag} euler", e.passed, f"{e.lhs} = {e.rhs}" if e.passed else f"{e.lhs} != {e.rhs}"))
    mr = cb.minimal_r(ci)
    disagree = [
        r for r in range(1, mr + 4)
        if cb.inequality_test(ci, r) != cb.build_general_host(ci, r).fano
    ]
    out.append(("certificate_sweep", not disagree, f"r in [1, {mr + 3}], disagreements at {disagree}"))
    return out


def cmd_verify(args) -> int:
    ci = visitor_from_args(args)
    try:
        hosts = hosts_for_mode(ci, args.mode, args.r)
        results = verify_checks(ci, hosts)
    except InvariantViolation as exc:
        print(f"FAIL construction: {exc}")
        return EXIT_INVARIANT
    for name, ok, detail in results:
        print(f"{'PASS' if ok else 'FAIL'} {name}" + (f": {detail}" if detail else ""))
    return EXIT_OK if all(ok for _, ok, _ in results) else EXIT_INVARIANT


def bound_row(ci: CompleteIntersection) -> dict:
    b = cb.fano_dimension_upper_bound(ci)
    return {
        "n": ci.n,
        "degrees": list(ci.degrees),
        "dim": ci.dimension(),
        "bound": b.bound,
        "exact": b.exact,
        "candidates": [
            {"kind": c.kind.value, "r": c.r, "dim_x": c.dim_x, "fano": c.fano, "note": c.note}
            for c in b.candidates
        ],
        "notes": list(b.notes),
    }


def _row_text(row: dict) -> str:
    cands = ", ".join(
        f"{c['kind']}" + (f" r={c['r']}" if c["r"] is not None else "")
        + (f": {c['dim_x']}" if c["dim_x"] is not None else f": n/a ({c['note']})")
        for c in row["candidates"]
    )
    label = f"CI({row['n']}; {','.join(map(str, row['degrees']))})"
    exact = " (exact)" if row["exact"] else ""
    return f"{label:<22} dim {row['dim']:>2}  bound {row['bound']}{exact}  [{cands}]"


def cmd_bound(args) -> list[dict]:
    if args.sweep:
        cfg = SweepConfig(*args.sweep)
        cis = list(cfg.instances())
        if args.jobs > 1:
            with ProcessPoolExecutor(args.jobs) as pool:
                # map keeps input order regardless of completion order
                return list(pool.map(bound_row, cis, chunksize=16))
        return [bound_row(ci) for ci in cis]
    return [bound_row(visitor_from_args(args))]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="ambient projective dimension")
    common.add_argument("--degrees", help="comma-separated degrees d_1,...,d_c")
    common.add_argument("--mode", choices=MODES, default="auto")
    common.add_argument("--r", type=int, default=None, help="number of O(1) summands (general host)")
    common.add_argument("--format", choices=("text", "json"), default="text")

    ap = argparse.ArgumentParser(prog="fanohost", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("build", parents=[common], help="construct host(s) and report")
    sub.add_parser("verify", parents=[common], help="run the invariant battery")
    bp = sub.add_parser("bound", parents=[common], help="Fano dimension upper bounds")
    bp.add_argument("--sweep", type=int, nargs=3, metavar=("NMAX", "CMAX", "DMAX"))
    bp.add_argument("--jobs", type=int, default=1)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "build":
            doc, code = cmd_build(args)
            if args.format == "json":
                print(doc.to_json(indent=2))
            else:
                print(render_text(doc))
            return code
        if args.command == "verify":
            return cmd_verify(args)
        rows = cmd_bound(args)
        if args.format == "json":
            print(json.dumps(rows if args.sweep else rows[0], indent=2))
        else:
            for row in rows:
                print(_row_text(row))
                if not args.sweep:
                    for note in row["notes"]:
                        print(f"  note: {note}")
        return EXIT_OK
    except BadInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except InvariantViolation as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
