"""Split projective bundles P(E^v) = Proj Sym E over P^m, E = O(a_1) + ... + O(a_N).

The Picard lattice has rank 2, spanned by the Serre class xi (so that sections
of xi are sections of E) and the pulled-back hyperplane class h.  Positivity is
decided by pairing against the torus-invariant curves:

    Fiber       a line in a fiber of the projection
    Section(i)  a line in the base lifted through the quotient E -> O(a_i)

with xi.Fiber = 1, h.Fiber = 0, xi.Section(i) = a_i, h.Section(i) = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class SplitProjBundle:
    m: int
    twists: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "twists", tuple(int(a) for a in self.twists))
        if self.m < 1:
            raise ValueError(f"base dimension m must be >= 1, got {self.m}")
        if len(self.twists) < 2:
            raise ValueError("need rank N >= 2")

    @property
    def rank(self) -> int:
        return len(self.twists)

    @property
    def dimension(self) -> int:
        return self.m + self.rank - 1

    def curves(self) -> list["CurveClass"]:
        return [Fiber()] + [Section(i) for i in range(1, self.rank + 1)]

    def __str__(self):
        return f"P(E^v) over P^{self.m}, E = " + " + ".join(f"O({a})" for a in self.twists)


@dataclass(frozen=True)
class DivisorClass:
    xi: int
    hh: int

    def __add__(self, other):
        return DivisorClass(self.xi + other.xi, self.hh + other.hh)

    def __sub__(self, other):
        return DivisorClass(self.xi - other.xi, self.hh - other.hh)

    def __neg__(self):
        return DivisorClass(-self.xi, -self.hh)

    def __rmul__(self, k: int):
        return DivisorClass(k * self.xi, k * self.hh)

    def as_dict(self):
        return {"xi": self.xi, "h": self.hh}

    def __str__(self):
        return f"{self.xi}xi{self.hh:+d}h"


XI = DivisorClass(1, 0)
H = DivisorClass(0, 1)


@dataclass(frozen=True)
class Fiber:
    def __str__(self):
        return "Fiber"


@dataclass(frozen=True)
class Section:
    index: int  # 1-based, matches the summand O(a_index)

    def __str__(self):
        return f"Section({self.index})"


CurveClass = Union[Fiber, Section]


def pairing(P: SplitProjBundle, L: DivisorClass, C: CurveClass) -> int:
    if isinstance(C, Fiber):
        return L.xi
    if not 1 <= C.index <= P.rank:
        raise ValueError(f"section index {C.index} out of range 1..{P.rank}")
    return L.xi * P.twists[C.index - 1] + L.hh


def curve_degrees(P: SplitProjBundle, L: DivisorClass) -> list[int]:
    """Degrees of L on Fiber, Section(1), ..., Section(N), in that order."""
    return [pairing(P, L, C) for C in P.curves()]


def is_nef(P: SplitProjBundle, L: DivisorClass) -> bool:
    return all(d >= 0 for d in curve_degrees(P, L))


def is_ample(P: SplitProjBundle, L: DivisorClass) -> bool:
    # toric Kleiman: strictly positive on every invariant curve
    return all(d > 0 for d in curve_degrees(P, L))


def canonical_class(P: SplitProjBundle) -> DivisorClass:
    """K = -N xi + (sum a_i - m - 1) h, from the relative and base Euler sequences."""
    return DivisorClass(-P.rank, sum(P.twists) - P.m - 1)


@dataclass(frozen=True)
class TwistMap:
    """Lattice isomorphism induced by E -> E(t): xi_{E(t)} = xi_E + t h."""

    t: int

    def __call__(self, L: DivisorClass) -> DivisorClass:
        # xi_E = xi_new - t h
        return DivisorClass(L.xi, L.hh - self.t * L.xi)

    def inverse(self) -> "TwistMap":
        return TwistMap(-self.t)


def twist_translate(P: SplitProjBundle, t: int) -> tuple[SplitProjBundle, TwistMap]:
    """Same variety written via E(t); returns the new bundle and the class map old -> new.

    Curves keep their labels: Fiber -> Fiber, Section(i) -> Section(i).
    """
    return SplitProjBundle(P.m, tuple(a + t for a in P.twists)), TwistMap(t)
