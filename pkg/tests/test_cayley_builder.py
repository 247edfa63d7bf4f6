import pytest
from hypothesis import given, settings, strategies as st

from fanohost import cayley_builder as cb
from fanohost.ci_invariants import canonical_twist, make_ci
from fanohost.errors import InvariantViolation, UnsupportedConstruction
from fanohost.split_bundle import XI, DivisorClass, TwistMap, canonical_class
from fanohost.sweep import SweepConfig
from tests.test_ci_invariants import cis

QUINTIC = make_ci(4, [5])
PLANE_QUARTIC = make_ci(2, [4])


@pytest.mark.parametrize("ci, r", [(QUINTIC, 1), (PLANE_QUARTIC, 2), (make_ci(3, [2, 2]), 1)])
def test_minimal_r(ci, r):
    assert cb.minimal_r(ci) == r


@given(cis())
def test_minimal_r_is_least_admissible(ci):
    r = cb.minimal_r(ci)
    assert r >= 1 and cb.inequality_test(ci, r)
    assert r == 1 or not cb.inequality_test(ci, r - 1)


def test_general_host_quintic():
    host = cb.build_general_host(QUINTIC, 1)
    assert host.kind is cb.HostKind.GENERAL
    assert host.base.dim == 5 and host.twists == (1, 5)
    assert host.dim_x == 5
    assert host.anti_canonical == XI
    assert host.fano and host.curve_degrees == (1, 1, 5)
    assert host.blowup


def test_general_host_plane_quartic():
    host = cb.build_general_host(PLANE_QUARTIC)
    assert host.r == 2 and host.base.dim == 4 and host.twists == (1, 1, 4)
    assert host.dim_x == 5
    assert host.anti_canonical == DivisorClass(2, -1)
    assert host.anti_canonical_f == DivisorClass(2, 1)
    assert host.curve_degrees == (2, 1, 1, 7)
    assert host.fano and not host.blowup
    # the sufficient test does not cover this host; curve degrees do
    assert host.lemma31 is False


def test_general_host_below_threshold():
    host = cb.build_general_host(PLANE_QUARTIC, 1)
    assert not host.fano
    assert not cb.inequality_test(PLANE_QUARTIC, 1)
    # section over a trivial F-summand has degree n + r + c - d = 0
    assert 0 in host.curve_degrees
    assert cb.certificate_agreement(host)


@pytest.mark.parametrize("r", [0, -2])
def test_general_host_rejects_nonpositive_r(r):
    with pytest.raises(ValueError):
        cb.build_general_host(QUINTIC, r)


def test_cy_host_examples():
    k3 = cb.build_cy_host(make_ci(3, [4]))
    assert k3.kind is cb.HostKind.CY_BLOWUP
    assert k3.base.dim == 4 and k3.twists == (1, 4) and k3.dim_x == 4
    assert any("blowup" in a for a in k3.assumptions)
    assert cb.build_cy_host(make_ci(2, [3])).dim_x == 3
    cicy = cb.build_cy_host(make_ci(7, [4, 2, 2]))
    assert cicy.kind is cb.HostKind.CY_DIRECT
    assert cicy.base.dim == 7 and cicy.twists == (4, 2, 2) and cicy.dim_x == 8
    assert cicy.fano and cicy.lemma31


def test_cy_host_rejects_non_cy():
    with pytest.raises(UnsupportedConstruction):
        cb.build_cy_host(PLANE_QUARTIC)


def test_ouchi_examples():
    host = cb.build_ouchi_host(make_ci(8, [3, 3, 3]))
    assert host.kind is cb.HostKind.OUCHI
    assert host.base.ci == make_ci(8, [3]) and host.bundle is None
    assert host.twists == (3, 3)
    assert host.dim_x == 7
    assert host.fano and host.lemma31
    assert any("general" in a for a in host.assumptions)

    small = cb.build_ouchi_host(make_ci(7, [2, 2, 2, 2]))
    assert small.base.ci == make_ci(7, [2, 2]) and small.dim_x == 5


@pytest.mark.parametrize("ci", [QUINTIC, make_ci(4, [3, 2]), make_ci(8, [3, 3, 2])])
def test_ouchi_unsupported(ci):
    with pytest.raises(UnsupportedConstruction):
        cb.build_ouchi_host(ci)


def test_lemma31_examples():
    assert cb.lemma31_check("projective", -6, [1, 5])
    assert not cb.lemma31_check("projective", -5, [1, 1, 4])
    assert not cb.lemma31_check("projective", -4, [0, 2])
    assert cb.lemma31_check("ci", -2, [1, 1])
    assert not cb.lemma31_check("ci", -1, [1, 1])
    with pytest.raises(ValueError):
        cb.lemma31_check("toric", -3, [1, 1])


@pytest.mark.parametrize(
    "ci, bound",
    [(QUINTIC, 5), (make_ci(8, [3, 3, 3]), 7), (PLANE_QUARTIC, 5), (make_ci(7, [4, 2, 2]), 6)],
)
def test_fano_dimension_bound(ci, bound):
    assert cb.fano_dimension_upper_bound(ci).bound == bound


def test_bound_candidates_quintic():
    b = cb.fano_dimension_upper_bound(QUINTIC)
    fano = {(c.kind, c.dim_x) for c in b.candidates if c.fano}
    assert fano == {(cb.HostKind.GENERAL, 5), (cb.HostKind.CY_BLOWUP, 5)}
    assert any("upper bound" in n for n in b.notes)


def test_bound_elliptic_curve_is_exact():
    b = cb.fano_dimension_upper_bound(make_ci(2, [3]))
    assert b.bound == 3 and b.exact
    assert not cb.fano_dimension_upper_bound(QUINTIC).exact


def test_bound_notes_fano_visitor():
    b = cb.fano_dimension_upper_bound(make_ci(3, [2]))
    assert any("itself Fano" in n for n in b.notes)


def _all_hosts(cfg):
    for ci in cfg.instances():
        for r in range(1, cb.minimal_r(ci) + 4):
            yield cb.build_general_host(ci, r)
        for builder in (cb.build_cy_host, cb.build_ouchi_host):
            try:
                yield builder(ci)
            except UnsupportedConstruction:
                pass


def test_host_invariants_on_sweep():
    count = 0
    for host in _all_hosts(SweepConfig(5, 3, 5)):
        checks = cb.host_checks(host)
        assert all(checks.values()), (host, checks)
        # the E -> F change of coordinates is the twist by -1
        assert TwistMap(-1)(host.anti_canonical) == host.anti_canonical_f
        if host.bundle is not None:
            assert host.anti_canonical == -(canonical_class(host.bundle) + XI)
        assert host.blowup == (host.rank == 2)
        count += 1
    assert count > 500


@settings(max_examples=50)
@given(st.integers(1, 9))
def test_cy_hypersurface_coincides_with_general_host(n):
    ci = make_ci(n, [n + 1])
    cy, gen = cb.build_cy_host(ci), cb.build_general_host(ci)
    assert gen.r == 1
    assert cy.bundle == gen.bundle
    assert cy.anti_canonical == gen.anti_canonical
    assert cy.dim_x == gen.dim_x == n + 1


def test_cy_host_certificates_both_pass():
    for ci in SweepConfig(8, 4, 8).instances():
        if canonical_twist(ci) == 0:
            host = cb.build_cy_host(ci)
            assert host.lemma31 and host.fano


def test_corrupted_host_is_rejected():
    from dataclasses import replace

    host = cb.build_general_host(QUINTIC)
    bad = replace(host, anti_canonical=DivisorClass(2, 0))
    with pytest.raises(InvariantViolation):
        cb._certify(bad)


def test_reported_invariants():
    host = cb.build_general_host(QUINTIC)
    assert cb.euler_char_host(host) == -194
    assert cb.fano_index(host) == 1
    assert cb.fano_index_label(host) == "index"
    assert cb.fano_index(cb.build_general_host(PLANE_QUARTIC, 1)) is None
    conic_line = cb.build_general_host(make_ci(1, [1]))
    assert conic_line.dim_x == 2 and cb.fano_index_label(conic_line) == "ambient-lattice index"


def test_ouchi_anticanonical_degree():
    # -K_X = xi on P(O(3)+O(3)) over a cubic 7-fold: 3 * int xi^8 = 3 * h_7(3, 3) = 3 * 8 * 3^7
    host = cb.build_ouchi_host(make_ci(8, [3, 3, 3]))
    assert cb.anticanonical_degree(host) == 3 * 8 * 3**7
