"""Exact intersection theory on a split projective bundle P(E^v) over P^m.

A(P) = Z[h, xi] / (h^(m+1), prod_i (xi - a_i h)), with int h^m xi^(N-1) = 1.
Elements are stored densely as coeffs[p][q] for the monomial h^p xi^q,
0 <= p <= m, 0 <= q <= N-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, gcd
from itertools import combinations
from typing import Optional

from .split_bundle import (
    DivisorClass,
    Fiber,
    Section,
    SplitProjBundle,
    is_ample,
)


@lru_cache(maxsize=None)
def _xi_relation(twists: tuple[int, ...]) -> tuple[int, ...]:
    """r[k] with xi^N = sum_{k=1}^N r[k] h^k xi^(N-k), r[k] = (-1)^(k+1) e_k(a)."""
    N = len(twists)
    r = [0] * (N + 1)
    for k in range(1, N + 1):
        e_k = sum(_prod(c) for c in combinations(twists, k))
        r[k] = (-1) ** (k + 1) * e_k
    return tuple(r)


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


@dataclass(frozen=True)
class ChowElement:
    bundle: SplitProjBundle
    coeffs: tuple[tuple[int, ...], ...]

    @classmethod
    def from_dict(cls, P: SplitProjBundle, terms: dict[tuple[int, int], int]):
        """Build from {(p, q): coeff} for h^p xi^q; out-of-range exponents are reduced."""
        out = zero(P)
        for (p, q), c in terms.items():
            out = out + c * monomial(P, p, q)
        return out

    def _check(self, other):
        if not isinstance(other, ChowElement):
            raise TypeError(f"cannot combine ChowElement with {type(other).__name__}")
        if other.bundle != self.bundle:
            raise ValueError(
                f"mismatched ambient bundles: {self.bundle} vs {other.bundle}"
            )

    def __add__(self, other):
        if isinstance(other, int):
            other = other * one(self.bundle)
        self._check(other)
        return ChowElement(
            self.bundle,
            tuple(
                tuple(x + y for x, y in zip(r1, r2))
                for r1, r2 in zip(self.coeffs, other.coeffs)
            ),
        )

    __radd__ = __add__

    def __neg__(self):
        return ChowElement(self.bundle, tuple(tuple(-x for x in r) for r in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return ChowElement(
                self.bundle, tuple(tuple(other * x for x in r) for r in self.coeffs)
            )
        return mul(self.bundle, self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = one(self.bundle)
        for _ in range(k):
            out = out * self
        return out

    def terms(self) -> dict[tuple[int, int], int]:
        return {
            (p, q): c
            for p, row in enumerate(self.coeffs)
            for q, c in enumerate(row)
            if c
        }

    def degree_part(self, k: int) -> "ChowElement":
        return ChowElement(
            self.bundle,
            tuple(
                tuple(c if p + q == k else 0 for q, c in enumerate(row))
                for p, row in enumerate(self.coeffs)
            ),
        )

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.coeffs)

    def __str__(self):
        parts = []
        for (p, q), c in sorted(self.terms().items(), key=lambda t: (t[0][0] + t[0][1], t[0])):
            mono = "*".join(
                s for s in (
                    "" if p == 0 else ("h" if p == 1 else f"h^{p}"),
                    "" if q == 0 else ("xi" if q == 1 else f"xi^{q}"),
                ) if s
            )
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts) or "0"


def zero(P: SplitProjBundle) -> ChowElement:
    return ChowElement(P, tuple((0,) * P.rank for _ in range(P.m + 1)))


def one(P: SplitProjBundle) -> ChowElement:
    return monomial(P, 0, 0)


def monomial(P: SplitProjBundle, p: int, q: int) -> ChowElement:
    """h^p xi^q, reduced."""
    if p > P.m:
        return zero(P)
    rows = [[0] * P.rank for _ in range(P.m + 1)]
    rows[p][min(q, P.rank - 1)] = 1
    x = ChowElement(P, tuple(tuple(r) for r in rows))
    for _ in range(q - (P.rank - 1)):
        x = times_xi(x)
    return x


def h(P: SplitProjBundle) -> ChowElement:
    return monomial(P, 1, 0)


def xi(P: SplitProjBundle) -> ChowElement:
    return monomial(P, 0, 1)


def divisor(P: SplitProjBundle, L: DivisorClass) -> ChowElement:
    return L.xi * xi(P) + L.hh * h(P)


def times_xi(x: ChowElement) -> ChowElement:
    """x * xi, rewriting xi^N through the Grothendieck relation."""
    P = x.bundle
    N, m = P.rank, P.m
    rel = _xi_relation(P.twists)
    rows = [[0] * N for _ in range(m + 1)]
    for p, row in enumerate(x.coeffs):
        for q, c in enumerate(row):
            if not c:
                continue
            if q + 1 < N:
                rows[p][q + 1] += c
            else:
                for k in range(1, N + 1):
                    if p + k <= m:
                        rows[p + k][N - k] += c * rel[k]
    return ChowElement(P, tuple(tuple(r) for r in rows))


def times_h_poly(x: ChowElement, poly: list[int]) -> ChowElement:
    """x * sum_p poly[p] h^p."""
    P = x.bundle
    rows = [[0] * P.rank for _ in range(P.m + 1)]
    for s, a in enumerate(poly):
        if not a:
            continue
        for p in range(P.m + 1 - s):
            src = x.coeffs[p]
            dst = rows[p + s]
            for q in range(P.rank):
                dst[q] += a * src[q]
    return ChowElement(P, tuple(tuple(r) for r in rows))


def mul(P: SplitProjBundle, x: ChowElement, y: ChowElement) -> ChowElement:
    # y = sum_q (poly_q in h) xi^q, so x*y = sum_q (x xi^q) * poly_q(h)
    if x.bundle != P:
        x._check(zero(P))
    x._check(y)
    N, m = P.rank, P.m
    cols = [[y.coeffs[p][q] for p in range(m + 1)] for q in range(N)]
    last = max((q for q in range(N) if any(cols[q])), default=-1)
    rows = [[0] * N for _ in range(m + 1)]
    power = x
    for q in range(last + 1):
        for s, a in enumerate(cols[q]):
            if not a:
                continue
            for p in range(m + 1 - s):
                src, dst = power.coeffs[p], rows[p + s]
                for k in range(N):
                    dst[k] += a * src[k]
        if q < last:
            power = times_xi(power)
    return ChowElement(P, tuple(tuple(r) for r in rows))


def integrate(P: SplitProjBundle, x: ChowElement) -> int:
    if x.bundle != P:
        x._check(zero(P))
    return x.coeffs[P.m][P.rank - 1]


def curve_cycle(P: SplitProjBundle, C) -> ChowElement:
    """Cycle class of an invariant curve: h^m xi^(N-2) or h^(m-1) prod_{j!=i}(xi - a_j h)."""
    if isinstance(C, Fiber):
        return monomial(P, P.m, P.rank - 2)
    if not isinstance(C, Section) or not 1 <= C.index <= P.rank:
        raise ValueError(f"bad curve class {C!r}")
    out = monomial(P, P.m - 1, 0)
    for j, a in enumerate(P.twists, start=1):
        if j != C.index:
            out = out * (xi(P) - a * h(P))
    return out


def chern_tangent(P: SplitProjBundle) -> ChowElement:
    """(1+h)^(m+1) * prod_i (1 + xi - a_i h)."""
    out = times_h_poly(one(P), [comb(P.m + 1, k) for k in range(P.m + 2)])
    for a in P.twists:
        out = times_xi(out) + times_h_poly(out, [1, -a])
    return out


def euler_char_hypersurface(P: SplitProjBundle, cls: Optional[DivisorClass] = None) -> int:
    """chi_top of a smooth X in |cls| (default xi): int c(T_P) / (1 + X) * X."""
    if cls is None or cls == DivisorClass(1, 0):
        step = times_xi
    else:
        D = divisor(P, cls)
        step = lambda z: mul(P, z, D)  # noqa: E731
    c = step(chern_tangent(P))
    total, term = c, c
    for _ in range(P.dimension):
        term = -step(term)
        total = total + term
    return integrate(P, total)


def anticanonical_degree(P: SplitProjBundle, anti_k: DivisorClass) -> int:
    """(-K_X)^(dim X) for X in |xi|, i.e. int_P anti_k^(dim X) * xi."""
    D = divisor(P, anti_k)
    x = xi(P)
    for _ in range(P.dimension - 1):
        x = mul(P, x, D)
    return integrate(P, x)


def fano_index(P: SplitProjBundle, anti_k: DivisorClass) -> int:
    """Largest q with anti_k / q an ample integral class (ambient rank-2 lattice)."""
    if not is_ample(P, anti_k):
        raise ValueError(f"{anti_k} is not ample on {P}")
    g = gcd(anti_k.xi, anti_k.hh)
    for q in range(g, 0, -1):
        if g % q == 0 and is_ample(P, DivisorClass(anti_k.xi // q, anti_k.hh // q)):
            return q
    raise AssertionError("unreachable: q = 1 is ample")


def first_chern_class(P: SplitProjBundle) -> DivisorClass:
    c1 = chern_tangent(P).degree_part(1)
    return DivisorClass(c1.coeffs[0][1], c1.coeffs[1][0])
