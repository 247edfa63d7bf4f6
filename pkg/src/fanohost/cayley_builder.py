"""Fano hosts for complete intersections via the Cayley trick.

Given Y = s^{-1}(0) for a regular section s of a split bundle E on a base S,
the same data gives a section w of the Serre line bundle on P(E^v), and
X = w^{-1}(0) is a hypersurface whose derived category contains D^b(Y).  The
builders here pick S and E, decide whether X is Fano, and record a certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional

from . import chow_ring
from .ci_invariants import CompleteIntersection, canonical_twist, make_ci
from .errors import InvariantViolation, UnsupportedConstruction
from .split_bundle import (
    XI,
    H,
    DivisorClass,
    SplitProjBundle,
    TwistMap,
    canonical_class,
    curve_degrees,
    is_ample,
    twist_translate,
)


class HostKind(str, Enum):
    GENERAL = "GeneralCayley"
    CY_DIRECT = "CYDirect"
    CY_BLOWUP = "CYBlowup"
    OUCHI = "Ouchi"


@dataclass(frozen=True)
class Base:
    """The base S: P^dim when ci is None, otherwise the complete intersection ci."""

    dim: int
    ci: Optional[CompleteIntersection] = None

    @property
    def kind(self) -> str:
        return "projective" if self.ci is None else "ci"

    @property
    def canonical_twist(self) -> int:
        return -(self.dim + 1) if self.ci is None else canonical_twist(self.ci)

    @property
    def degree(self) -> int:
        if self.ci is None:
            return 1
        out = 1
        for d in self.ci.degrees:
            out *= d
        return out

    def __str__(self):
        return f"P^{self.dim}" if self.ci is None else str(self.ci)


SMOOTH_Y = "Y is smooth (assumed, not verified)"
SMOOTH_X = "X = w^-1(0) is smooth for the section w induced by a general s (assumed)"


@dataclass(frozen=True)
class HostConstruction:
    kind: HostKind
    visitor: CompleteIntersection
    r: Optional[int]
    base: Base
    twists: tuple[int, ...]
    bundle: Optional[SplitProjBundle]
    dim_x: int
    anti_canonical: DivisorClass  # xi_E, h coordinates
    anti_canonical_f: DivisorClass  # xi_F, h coordinates with F = E(-1)
    curve_degrees: tuple[int, ...]
    fano: bool
    lemma31: Optional[bool] = None
    assumptions: tuple[str, ...] = field(default_factory=tuple)

    @property
    def rank(self) -> int:
        return len(self.twists)

    @property
    def blowup(self) -> bool:
        # rank-2 hosts are the blowup of S along Y
        return self.rank == 2

    @property
    def f_bundle(self) -> Optional[SplitProjBundle]:
        return None if self.bundle is None else twist_translate(self.bundle, -1)[0]

    def pairing_bundle(self) -> SplitProjBundle:
        """Split bundle whose invariant curves test positivity of anti_canonical_f.

        For a projective-space base this is the F-bundle itself; for a CI base
        it is the bundle over the ambient P^n, which contains P(F^v|_S).
        """
        if self.bundle is not None:
            return self.f_bundle
        return SplitProjBundle(self.visitor.n, tuple(a - 1 for a in self.twists))


def minimal_r(ci: CompleteIntersection) -> int:
    """Least positive r with r > d - n - c and r > 1 - c."""
    return max(1, ci.total_degree - ci.n - ci.c + 1, 2 - ci.c)


def inequality_test(ci: CompleteIntersection, r: int) -> bool:
    return r > ci.total_degree - ci.n - ci.c and r > 1 - ci.c


def lemma31_check(base_kind: str, base_canonical_twist: int, twists) -> bool:
    """Sufficient Fano test: (K_S + det E)^-1 nef and E ample.

    For split E on a base with Pic generated by an ample h, E is ample iff
    every twist is positive, and K_S + det E = O(base twist + sum twists).
    """
    if base_kind not in ("projective", "ci"):
        raise ValueError(f"unknown base kind {base_kind!r}")
    return base_canonical_twist + sum(twists) <= 0 and all(a > 0 for a in twists)


def _lemma31_anticanonical(base: Base, twists) -> DivisorClass:
    # K_X = (K_S + det E) + (1 - N) xi restricted to X
    return DivisorClass(len(twists) - 1, -(base.canonical_twist + sum(twists)))


def _ambient_canonical(host: HostConstruction, twists) -> DivisorClass:
    if host.bundle is not None:
        m = host.base.dim
        return canonical_class(SplitProjBundle(m, tuple(twists)))
    return DivisorClass(-len(twists), host.base.canonical_twist + sum(twists))


def host_checks(host: HostConstruction, chow: bool = True) -> dict[str, bool]:
    """Structural invariants every host must satisfy.

    coordinate_change: the E -> F lattice map sends anti_canonical to
        anti_canonical_f, and anti_canonical_f is the adjunction class on P(F^v)
        where [X] = xi_F + h.
    adjunction: anti_canonical = -(K_{P(E^v)} + xi).
    dimension: dim X = dim S + rank E - 2.
    c1: the Chow ring's c_1(T) matches -K of the ambient (bundle hosts only,
        skipped when chow=False).
    """
    f_twists = tuple(a - 1 for a in host.twists)
    to_f = TwistMap(-1)
    k_amb = _ambient_canonical(host, host.twists)
    k_amb_f = _ambient_canonical(host, f_twists)
    out = {
        "coordinate_change": to_f(host.anti_canonical) == host.anti_canonical_f
        and host.anti_canonical_f == -(k_amb_f + XI + H),
        "adjunction": host.anti_canonical == -(k_amb + XI),
        "dimension": host.dim_x == host.base.dim + host.rank - 2,
    }
    if chow and host.bundle is not None:
        out["c1"] = chow_ring.first_chern_class(host.bundle) == -k_amb
    return out


def certificate_agreement(host: HostConstruction) -> bool:
    """The host's two Fano arguments reach the same verdict."""
    curve_ok = is_ample(host.pairing_bundle(), host.anti_canonical_f)
    if host.kind is HostKind.GENERAL:
        return inequality_test(host.visitor, host.r) == curve_ok == host.fano
    return host.lemma31 == curve_ok == host.fano


def _certify(host: HostConstruction) -> HostConstruction:
    failed = [k for k, ok in host_checks(host, chow=False).items() if not ok]
    if not certificate_agreement(host):
        failed.append("certificate_agreement")
    if failed:
        raise InvariantViolation(f"{host.kind.value} host of {host.visitor}: {failed}")
    return host


def build_general_host(ci: CompleteIntersection, r: Optional[int] = None) -> HostConstruction:
    """Host over S = P^(n+r) with E = O(1)^r + O(d_1) + ... + O(d_c).

    Sub-threshold r is accepted; the result then carries fano=False.
    """
    if r is None:
        r = minimal_r(ci)
    if r <= 0:
        raise ValueError(f"r must be a positive integer, got {r}")
    n, c, d = ci.n, ci.c, ci.total_degree
    base = Base(n + r)
    twists = (1,) * r + ci.degrees
    bundle = SplitProjBundle(base.dim, twists)
    anti_e = DivisorClass(r + c - 1, n + 1 - d)
    anti_f = DivisorClass(r + c - 1, n + r + c - d)
    f_bundle, _ = twist_translate(bundle, -1)
    degs = tuple(curve_degrees(f_bundle, anti_f))
    host = HostConstruction(
        kind=HostKind.GENERAL,
        visitor=ci,
        r=r,
        base=base,
        twists=twists,
        bundle=bundle,
        dim_x=n + 2 * r + c - 2,
        anti_canonical=anti_e,
        anti_canonical_f=anti_f,
        curve_degrees=degs,
        fano=is_ample(f_bundle, anti_f),
        lemma31=lemma31_check(base.kind, base.canonical_twist, twists),
        assumptions=(
            SMOOTH_Y,
            f"Y sits in a linear P^{n} inside P^{n + r}, cut out by r = {r} sections of O(1)",
            SMOOTH_X,
        ),
    )
    return _certify(host)


def _lemma31_host(kind, ci, r, base, twists, assumptions) -> HostConstruction:
    bundle = SplitProjBundle(base.dim, twists) if base.ci is None else None
    anti_e = _lemma31_anticanonical(base, twists)
    anti_f = TwistMap(-1)(anti_e)
    lemma = lemma31_check(base.kind, base.canonical_twist, twists)
    host = HostConstruction(
        kind=kind,
        visitor=ci,
        r=r,
        base=base,
        twists=twists,
        bundle=bundle,
        dim_x=base.dim + len(twists) - 2,
        anti_canonical=anti_e,
        anti_canonical_f=anti_f,
        curve_degrees=(),
        fano=lemma,
        lemma31=lemma,
        assumptions=assumptions,
    )
    pb = host.pairing_bundle()
    host = replace(host, curve_degrees=tuple(curve_degrees(pb, anti_f)))
    return _certify(host)


def build_cy_host(ci: CompleteIntersection) -> HostConstruction:
    """Calabi-Yau host: blowup of P^(n+1) along Y for c = 1, else over P^n with E = sum O(d_i)."""
    if canonical_twist(ci) != 0:
        raise UnsupportedConstruction(
            f"{ci} is not Calabi-Yau: sum of degrees {ci.total_degree} != n + 1 = {ci.n + 1}"
        )
    if ci.c == 1:
        base = Base(ci.n + 1)
        twists = (1, ci.n + 1)
        notes = (
            SMOOTH_Y,
            f"Y = P^{ci.n} ∩ (degree {ci.n + 1} hypersurface) in P^{ci.n + 1}",
            SMOOTH_X,
            f"X is the blowup of P^{ci.n + 1} along Y",
        )
        return _lemma31_host(HostKind.CY_BLOWUP, ci, 1, base, twists, notes)
    base = Base(ci.n)
    notes = (SMOOTH_Y, SMOOTH_X)
    if ci.c == 2:
        notes += (f"X is the blowup of P^{ci.n} along Y",)
    return _lemma31_host(HostKind.CY_DIRECT, ci, None, base, ci.degrees, notes)


def build_ouchi_host(ci: CompleteIntersection) -> HostConstruction:
    """Host of dimension dim Y + 2: blowup of the CI cut by the last c-2 equations along Y."""
    if canonical_twist(ci) != 0:
        raise UnsupportedConstruction(f"{ci} is not Calabi-Yau")
    if ci.c < 3:
        raise UnsupportedConstruction(
            f"{ci} has codimension {ci.c} < 3; use the Calabi-Yau host instead"
        )
    base_ci = make_ci(ci.n, ci.degrees[2:])
    base = Base(base_ci.dimension(), base_ci)
    notes = (
        SMOOTH_Y,
        f"Y is general: the base S = {base_ci} cut out by the last {ci.c - 2} equations is smooth",
        SMOOTH_X,
        f"X is the blowup of S along Y",
    )
    return _lemma31_host(HostKind.OUCHI, ci, None, base, ci.degrees[:2], notes)


# -- reported invariants -------------------------------------------------------


def euler_char_host(host: HostConstruction) -> Optional[int]:
    if host.bundle is None:
        return None
    return chow_ring.euler_char_hypersurface(host.bundle)


def anticanonical_degree(host: HostConstruction) -> int:
    """(-K_X)^(dim X).  For a CI base S, classes pushed to S are polynomials in
    h, so the integral is deg S times the same integral over P^(dim S)."""
    P = SplitProjBundle(host.base.dim, host.twists)
    return host.base.degree * chow_ring.anticanonical_degree(P, host.anti_canonical)


def fano_index(host: HostConstruction) -> Optional[int]:
    if not host.fano:
        return None
    return chow_ring.fano_index(host.pairing_bundle(), host.anti_canonical_f)


def fano_index_label(host: HostConstruction) -> str:
    # Pic X = Pic P(E^v) needs Lefschetz, i.e. dim X >= 3
    return "index" if host.dim_x >= 3 else "ambient-lattice index"


# -- Fano dimension bound ------------------------------------------------------


@dataclass(frozen=True)
class Candidate:
    kind: HostKind
    r: Optional[int]
    dim_x: Optional[int]
    fano: bool
    note: str = ""


@dataclass(frozen=True)
class FanoDimensionBound:
    visitor: CompleteIntersection
    candidates: tuple[Candidate, ...]
    bound: Optional[int]
    exact: bool
    notes: tuple[str, ...]


def candidate_hosts(ci: CompleteIntersection) -> list[HostConstruction]:
    """Every applicable construction: the general host at minimal r, plus CY and Ouchi hosts."""
    hosts = [build_general_host(ci)]
    for builder in (build_cy_host, build_ouchi_host):
        try:
            hosts.append(builder(ci))
        except UnsupportedConstruction:
            pass
    return hosts


def select_host(hosts: list[HostConstruction]) -> HostConstruction:
    """Smallest-dimensional Fano host; ties keep construction order."""
    fano = [h for h in hosts if h.fano]
    return min(fano or hosts, key=lambda h: h.dim_x)


def fano_dimension_upper_bound(ci: CompleteIntersection) -> FanoDimensionBound:
    cands = []
    for host in candidate_hosts(ci):
        cands.append(Candidate(host.kind, host.r, host.dim_x, host.fano))
    if canonical_twist(ci) != 0:
        cands.append(Candidate(HostKind.CY_BLOWUP if ci.c == 1 else HostKind.CY_DIRECT,
                               None, None, False, "not Calabi-Yau"))
    if canonical_twist(ci) != 0 or ci.c < 3:
        cands.append(Candidate(HostKind.OUCHI, None, None, False,
                               "needs Calabi-Yau with c >= 3"))
    dims = [c.dim_x for c in cands if c.fano]
    bound = min(dims) if dims else None
    notes = ["upper bound on the Fano dimension: the minimum over these constructions only"]
    exact = False
    if ci.dimension() == 1 and canonical_twist(ci) == 0 and bound == 3:
        exact = True
        notes.append(
            "exact for an elliptic curve: its K_0 is not finitely generated, "
            "whereas every Fano surface has finitely generated K-groups"
        )
    if canonical_twist(ci) < 0:
        notes.append(f"Y is itself Fano, so dim Y = {ci.dimension()} is also a bound")
    return FanoDimensionBound(ci, tuple(cands), bound, exact, tuple(notes))
