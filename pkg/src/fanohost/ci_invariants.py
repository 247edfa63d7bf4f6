"""Smooth complete intersections Y in P^n and their classical invariants.

Everything here is exact: integer truncated power series for the Euler
characteristic, and Hirzebruch-Riemann-Roch with rational Todd classes for the
Hodge numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

from .errors import InvariantViolation


@dataclass(frozen=True)
class CompleteIntersection:
    """Y = zero locus of a regular section of O(d_1) + ... + O(d_c) on P^n."""

    n: int
    degrees: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"ambient dimension n must be >= 1, got {self.n}")
        if not self.degrees:
            raise ValueError("need at least one defining degree (c >= 1)")
        if len(self.degrees) > self.n:
            raise ValueError(
                f"codimension c={len(self.degrees)} exceeds n={self.n}: "
                "Y would be empty"
            )
        if any(d < 1 for d in self.degrees):
            raise ValueError(f"degrees must be positive, got {list(self.degrees)}")
        object.__setattr__(
            self, "degrees", tuple(sorted((int(d) for d in self.degrees), reverse=True))
        )

    @property
    def c(self) -> int:
        return len(self.degrees)

    @property
    def total_degree(self) -> int:
        return sum(self.degrees)

    def dimension(self) -> int:
        return self.n - self.c

    def __str__(self):
        return f"CI({self.n}; {','.join(map(str, self.degrees))})"


def make_ci(n: int, degrees) -> CompleteIntersection:
    return CompleteIntersection(int(n), tuple(int(d) for d in degrees))


def canonical_twist(ci: CompleteIntersection) -> int:
    """K_Y = O(k)|_Y with k = sum(d_i) - (n + 1)."""
    return ci.total_degree - (ci.n + 1)


def is_calabi_yau(ci: CompleteIntersection) -> bool:
    return canonical_twist(ci) == 0


def is_fano(ci: CompleteIntersection) -> bool:
    return canonical_twist(ci) < 0


# -- truncated integer series ------------------------------------------------


def _series_mul(a, b, prec):
    out = [0] * prec
    for i, x in enumerate(a[:prec]):
        if x:
            for j, y in enumerate(b[: prec - i]):
                out[i + j] += x * y
    return out


def euler_char_ci(ci: CompleteIntersection) -> int:
    """Topological Euler characteristic of Y.

    Coefficient of h^n in (1+h)^(n+1) * prod(d_i h / (1 + d_i h)); the inverse
    of 1 + d h is the alternating geometric series, so all arithmetic stays in Z.
    """
    n = ci.n
    prec = n + 1
    series = [comb(n + 1, k) for k in range(prec)]
    for d in ci.degrees:
        # d h / (1 + d h) = sum_{k>=1} (-1)^(k-1) d^k h^k
        factor = [0] + [(-1) ** (k - 1) * d**k for k in range(1, prec)]
        series = _series_mul(series, factor, prec)
    return series[n]


# -- Hodge numbers via HRR ----------------------------------------------------


@dataclass(frozen=True)
class HodgeTable:
    dim: int
    entries: tuple[tuple[int, ...], ...]

    def __getitem__(self, pq):
        p, q = pq
        return self.entries[p][q]

    def euler(self) -> int:
        return sum(
            (-1) ** (p + q) * self.entries[p][q]
            for p in range(self.dim + 1)
            for q in range(self.dim + 1)
        )

    def hochschild(self) -> dict[int, int]:
        """Diagonal sums HH_k = sum_{q-p=k} h^{p,q}, zero entries dropped."""
        out: dict[int, int] = {}
        for p in range(self.dim + 1):
            for q in range(self.dim + 1):
                if self.entries[p][q]:
                    out[q - p] = out.get(q - p, 0) + self.entries[p][q]
        return dict(sorted(out.items()))

    def violations(self) -> list[str]:
        """Names of the Hodge symmetries this table fails (empty when sound)."""
        bad = []
        D = self.dim
        h = self.entries
        rng = range(D + 1)
        if any(h[p][q] < 0 for p in rng for q in rng):
            bad.append("nonnegativity")
        if any(h[p][q] != h[q][p] for p in rng for q in rng):
            bad.append("hodge symmetry")
        if any(h[p][q] != h[D - p][D - q] for p in rng for q in rng):
            bad.append("serre duality")
        if any(h[p][q] != (1 if p == q else 0) for p in rng for q in rng if p + q != D):
            bad.append("lefschetz shape")
        return bad

    def as_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def __str__(self):
        # diamond with h^{D,D} on top, h^{0,0} at the bottom
        D = self.dim
        rows = []
        for s in range(2 * D, -1, -1):
            vals = [
                self.entries[p][s - p]
                for p in range(D, -1, -1)
                if 0 <= s - p <= D
            ]
            rows.append("   ".join(str(v) for v in vals))
        width = max(len(r) for r in rows)
        return "\n".join(r.center(width).rstrip() for r in rows)


@lru_cache(maxsize=None)
def _todd_line_series(prec: int) -> tuple[Fraction, ...]:
    """Coefficients of x / (1 - e^{-x}) up to x^(prec-1)."""
    # (1 - e^{-x}) / x = sum_k (-1)^k x^k / (k+1)!
    g = [Fraction((-1) ** k, factorial(k + 1)) for k in range(prec)]
    inv = [Fraction(0)] * prec
    inv[0] = Fraction(1)
    for k in range(1, prec):
        inv[k] = -sum(g[j] * inv[k - j] for j in range(1, k + 1))
    return tuple(inv)


def _frac_mul(a, b, prec):
    out = [Fraction(0)] * prec
    for i in range(prec):
        if a[i]:
            for j in range(prec - i):
                out[i + j] += a[i] * b[j]
    return out


@lru_cache(maxsize=None)
def _integration_kernel(n: int, degrees: tuple[int, ...]) -> tuple[Fraction, ...]:
    """Series T with int_Y alpha = sum_k alpha_k * T_{dim Y - k}.

    T = td(T_Y) * prod(d_i), where td(T_Y) = td(P^n)|_Y / td(N_Y) and
    td(N_Y) = prod (d_i h) / (1 - e^{-d_i h}).  Multiplying by prod(d_i h) and
    reading off h^n is the same as scaling by prod(d_i) and reading h^(n-c).
    """
    prec = n - len(degrees) + 1
    base = _todd_line_series(prec)
    td = [Fraction(1)] + [Fraction(0)] * (prec - 1)
    for _ in range(n + 1):
        td = _frac_mul(td, base, prec)
    for d in degrees:
        inv_todd = [Fraction((-1) ** k * d**k, factorial(k + 1)) for k in range(prec)]
        td = _frac_mul(td, inv_todd, prec)
    scale = prod(degrees)
    return tuple(scale * t for t in td)


def _egf_mul(a, b, prec):
    # exponential generating convention: entry k stores k! * (coefficient of h^k)
    out = [0] * prec
    for k in range(prec):
        out[k] = sum(comb(k, j) * a[j] * b[k - j] for j in range(k + 1))
    return out


def _cotangent_adams(ci: CompleteIntersection, k: int, prec: int) -> list[int]:
    """ch(psi^k Omega_Y) in EGF form, Omega_Y = (n+1)O(-1) - O - sum O(-d_i)."""
    out = []
    for j in range(prec):
        v = (ci.n + 1) * (-k) ** j - sum((-k * d) ** j for d in ci.degrees)
        if j == 0:
            v -= 1
        out.append(v)
    return out


def _exterior_powers_ch(ci: CompleteIntersection, top: int, prec: int) -> list[list[int]]:
    """ch(Lambda^p Omega_Y) for p = 0..top via Newton's identities.

    p * lambda^p = sum_{k=1}^p (-1)^(k-1) psi^k * lambda^(p-k).  The division by
    p is exact because each lambda^p is an honest integral K-class; a remainder
    means the bookkeeping is wrong.
    """
    adams = [None] + [_cotangent_adams(ci, k, prec) for k in range(1, top + 1)]
    lam = [[1] + [0] * (prec - 1)]
    for p in range(1, top + 1):
        acc = [0] * prec
        for k in range(1, p + 1):
            term = _egf_mul(adams[k], lam[p - k], prec)
            sign = 1 if k % 2 else -1
            acc = [x + sign * y for x, y in zip(acc, term)]
        if any(x % p for x in acc):
            raise InvariantViolation(f"lambda^{p} of Omega_{ci} is not integral")
        lam.append([x // p for x in acc])
    return lam


def chi_p(ci: CompleteIntersection) -> list[int]:
    """chi^p(Y) = sum_q (-1)^q h^{p,q}(Y) for p = 0..dim Y, by HRR."""
    D = ci.dimension()
    prec = D + 1
    kernel = _integration_kernel(ci.n, ci.degrees)
    out = []
    for p, ch in enumerate(_exterior_powers_ch(ci, D, prec)):
        val = sum(Fraction(ch[k], factorial(k)) * kernel[D - k] for k in range(prec))
        if val.denominator != 1:
            raise InvariantViolation(f"chi^{p}({ci}) = {val} is not an integer")
        out.append(int(val))
    return out


def hodge_numbers(ci: CompleteIntersection) -> HodgeTable:
    """Full Hodge table of Y.

    Away from the middle row h^{p,q} is forced by Lefschetz; the middle entry
    h^{p, D-p} is the only unknown in chi^p and is solved for directly.
    """
    D = ci.dimension()
    chis = chi_p(ci)
    h = [[1 if p == q else 0 for q in range(D + 1)] for p in range(D + 1)]
    for p in range(D + 1):
        q = D - p
        known = 0 if 2 * p == D else (-1) ** p
        h[p][q] = (-1) ** q * (chis[p] - known)
    table = HodgeTable(D, tuple(tuple(row) for row in h))
    bad = table.violations()
    if bad:
        raise InvariantViolation(f"Hodge table of {ci} violates {', '.join(bad)}")
    return table
