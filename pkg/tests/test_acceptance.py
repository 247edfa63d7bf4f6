"""Acceptance gate.  Every check is exact; each test prints one PASS/FAIL line
(also collected into the terminal summary by conftest)."""

import pytest

from fanohost import cayley_builder as cb
from fanohost import cli
from fanohost import chow_ring as cr
from fanohost.ci_invariants import canonical_twist, euler_char_ci, hodge_numbers, make_ci
from fanohost.errors import InvariantViolation, UnsupportedConstruction
from fanohost.sod_ledger import euler_consistency
from fanohost.split_bundle import XI, H, SplitProjBundle, pairing
from fanohost.sweep import SweepConfig
from tests.oracles import hodge_by_generating_function


def criterion(label):
    def mark(fn):
        fn.criterion = label
        return fn

    return mark


def report(label, ok, detail=""):
    print(f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else ""))
    assert ok, detail


@criterion("1 quintic threefold host")
def test_criterion_1_quintic():
    ci = make_ci(4, [5])
    hosts = cb.candidate_hosts(ci)
    best = cb.select_host(hosts)
    ok = (
        best.fano
        and best.dim_x == 5
        and best.base.kind == "projective"
        and best.base.dim == 5
        and best.twists == (1, 5)
        and cb.fano_dimension_upper_bound(ci).bound == 5
    )
    report("1 quintic threefold host", ok, f"dim_x={best.dim_x} base={best.base} twists={best.twists}")


@criterion("2 CY host dimension formula")
def test_criterion_2_cy_dimension():
    bad, seen = [], 0
    for ci in SweepConfig(8, 4, 8).instances():
        if canonical_twist(ci) != 0:
            continue
        host = cb.build_cy_host(ci)
        want = ci.n + 1 if ci.c == 1 else ci.n + ci.c - 2
        seen += 1
        if host.dim_x != want or not host.fano:
            bad.append((str(ci), host.dim_x, want))
    report("2 CY host dimension formula", not bad and seen > 0, f"{seen} CY instances, mismatches {bad[:5]}")


@criterion("3 certificate equivalence sweep")
def test_criterion_3_certificates():
    cases, bad = 0, []
    for ci in SweepConfig(8, 4, 8).instances():
        d, n, c = ci.total_degree, ci.n, ci.c
        for r in range(1, cb.minimal_r(ci) + 4):
            inequality = r > d - n - c and r > 1 - c
            assert inequality == cb.inequality_test(ci, r)
            if inequality != cb.build_general_host(ci, r).fano:
                bad.append((str(ci), r))
            cases += 1
    report("3 certificate equivalence sweep", not bad and cases >= 10**4, f"{cases} cases, {len(bad)} disagreements")


def _bundle_hosts(cfg):
    for ci in cfg.instances():
        for r in range(1, cb.minimal_r(ci) + 4):
            yield cb.build_general_host(ci, r)
        try:
            yield cb.build_cy_host(ci)
        except UnsupportedConstruction:
            pass


@criterion("4 Euler additivity")
def test_criterion_4_euler_additivity():
    golden = {
        "quintic": (cb.build_general_host(make_ci(4, [5])), -194, 6, -200),
        "quartic K3": (cb.build_cy_host(make_ci(3, [4])), 29, 5, 24),
        "elliptic curve": (cb.build_cy_host(make_ci(2, [3])), 4, 4, 0),
    }
    bad = []
    for name, (host, chi_x, blocks, chi_y) in golden.items():
        e = euler_consistency(host)
        if (e.lhs, e.rhs, e.passed) != (chi_x, blocks + chi_y, True):
            bad.append(name)
    seen = 0
    for host in _bundle_hosts(SweepConfig(6, 3, 6)):
        lhs = cr.euler_char_hypersurface(host.bundle)
        rhs = (host.rank - 1) * (host.base.dim + 1) + euler_char_ci(host.visitor)
        seen += 1
        if lhs != rhs:
            bad.append((str(host.visitor), host.kind.value, host.r, lhs, rhs))
    report("4 Euler additivity", not bad, f"{seen} bundle hosts + 3 golden cases, failures {bad[:5]}")


@criterion("5 Hodge oracle agreement")
def test_criterion_5_hodge():
    k3 = hodge_numbers(make_ci(3, [4]))
    quintic = hodge_numbers(make_ci(4, [5]))
    golden = k3[1, 1] == 20 and quintic[2, 1] == 101
    # brute-force generating-function oracle on the middle rows
    oracle_ok = (
        hodge_by_generating_function(4, (5,)) == {0: 1, 1: 101, 2: 101, 3: 1}
        and hodge_by_generating_function(3, (4,)) == {0: 1, 1: 20, 2: 1}
    )
    bad, seen = [], 0
    for ci in SweepConfig(8, 4, 8).instances():
        t = hodge_numbers(ci)
        D = ci.dimension()
        alt = sum((-1) ** (p + q) * t[p, q] for p in range(D + 1) for q in range(D + 1))
        seen += 1
        if alt != euler_char_ci(ci):
            bad.append(str(ci))
    ok = golden and oracle_ok and not bad
    report(
        "5 Hodge oracle agreement",
        ok,
        f"h11(K3)={k3[1, 1]} h21(quintic)={quintic[2, 1]}, {seen} instances, mismatches {bad[:5]}",
    )


@criterion("6 Ouchi host dimension")
def test_criterion_6_ouchi():
    bad, seen = [], 0
    for ci in SweepConfig(8, 4, 8).instances():
        if canonical_twist(ci) != 0 or ci.c < 3:
            continue
        host = cb.build_ouchi_host(ci)
        seen += 1
        if host.dim_x != ci.dimension() + 2 or not host.lemma31:
            bad.append(str(ci))
    named = cb.build_ouchi_host(make_ci(8, [3, 3, 3]))
    ok = not bad and seen > 0 and named.dim_x == 7 and named.lemma31
    report("6 Ouchi host dimension", ok, f"{seen} instances, (8,[3,3,3]) -> {named.dim_x}, failures {bad}")


@criterion("7 Chow-oracle pairing equivalence")
def test_criterion_7_pairing():
    import itertools

    bad, seen = [], 0
    for m in range(1, 5):
        for N in range(2, 5):
            for twists in itertools.product(range(6), repeat=N):
                P = SplitProjBundle(m, twists)
                for C in P.curves():
                    cyc = cr.curve_cycle(P, C)
                    for L in (XI, H):
                        seen += 1
                        if pairing(P, L, C) != cr.integrate(P, cr.divisor(P, L) * cyc):
                            bad.append((m, twists, C, L))
    report("7 Chow-oracle pairing equivalence", not bad, f"{seen} pairings, {len(bad)} disagreements")


@criterion("8 coordinate-change and adjunction invariants")
def test_criterion_8_invariants(monkeypatch, capsys):
    bad, seen = [], 0
    for ci in SweepConfig(8, 4, 8).instances():
        hosts = [cb.build_general_host(ci, r) for r in range(1, cb.minimal_r(ci) + 2)]
        for builder in (cb.build_cy_host, cb.build_ouchi_host):
            try:
                hosts.append(builder(ci))
            except UnsupportedConstruction:
                pass
        for host in hosts:
            checks = cb.host_checks(host, chow=False)
            seen += 1
            if not (checks["coordinate_change"] and checks["adjunction"]):
                bad.append((str(ci), host.kind.value, host.r))

    # a violation must surface as exit code 4
    def broken(ci, r=None):
        raise InvariantViolation("adjunction: forced")

    with monkeypatch.context() as mp:
        mp.setattr(cb, "build_general_host", broken)
        code = cli.main(["build", "--n", "4", "--degrees", "5", "--mode", "general"])
    capsys.readouterr()
    ok = not bad and code == cli.EXIT_INVARIANT
    report(
        "8 coordinate-change and adjunction invariants",
        ok,
        f"{seen} hosts, violations {bad[:5]}, forced violation exit={code}",
    )
