from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator

from .ci_invariants import CompleteIntersection, make_ci


@dataclass(frozen=True)
class SweepConfig:
    """All CI(n; d_1 >= ... >= d_c) with n <= nmax, c <= cmax, d_i <= dmax."""

    nmax: int
    cmax: int
    dmax: int
    nmin: int = 1

    def instances(self) -> Iterator[CompleteIntersection]:
        for n in range(self.nmin, self.nmax + 1):
            for c in range(1, min(n, self.cmax) + 1):
                for degs in combinations_with_replacement(range(self.dmax, 0, -1), c):
                    yield make_ci(n, degs)

    def __len__(self):
        return sum(1 for _ in self.instances())
