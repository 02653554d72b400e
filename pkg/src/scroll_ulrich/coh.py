"""Cohomology dimensions known exactly or up to an interval.

Intervals come from long exact sequences whose connecting maps are not
forced.  The Euler characteristic is always exact and is used to tighten
the per-degree bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence


class Bounds(NamedTuple):
    lo: int
    hi: int

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> int:
        if not self.exact:
            raise ValueError(f"not exact: [{self.lo}, {self.hi}]")
        return self.lo

    def __contains__(self, n) -> bool:
        return self.lo <= n <= self.hi

    def __str__(self):
        return str(self.lo) if self.exact else f"[{self.lo},{self.hi}]"


@dataclass(frozen=True)
class CohInterval:
    lo: tuple[int, ...]
    hi: tuple[int, ...]
    chi: int

    def __post_init__(self):
        if len(self.lo) != len(self.hi):
            raise ValueError("lo/hi length mismatch")
        if any(a < 0 or a > b for a, b in zip(self.lo, self.hi)):
            raise ValueError(f"bad bounds lo={self.lo} hi={self.hi}")
        lo_sum = sum(a if i % 2 == 0 else -b for i, (a, b) in enumerate(zip(self.lo, self.hi)))
        hi_sum = sum(b if i % 2 == 0 else -a for i, (a, b) in enumerate(zip(self.lo, self.hi)))
        if not lo_sum <= self.chi <= hi_sum:
            raise ValueError(f"chi={self.chi} outside [{lo_sum}, {hi_sum}]")

    @classmethod
    def exact(cls, values: Sequence[int]) -> "CohInterval":
        values = tuple(values)
        chi = sum((-1) ** i * v for i, v in enumerate(values))
        return cls(values, values, chi)

    @classmethod
    def zero(cls, n: int) -> "CohInterval":
        return cls.exact((0,) * n)

    def __len__(self):
        return len(self.lo)

    def __getitem__(self, i: int) -> Bounds:
        return Bounds(self.lo[i], self.hi[i])

    def __iter__(self):
        return (self[i] for i in range(len(self)))

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def values(self) -> tuple[int, ...]:
        if not self.is_exact:
            raise ValueError(f"not exact: {self}")
        return self.lo

    @property
    def is_zero(self) -> bool:
        return not any(self.hi)

    def reversed(self) -> "CohInterval":
        """Reindex h^i -> h^{n-i}, chi -> (-1)^n chi (Serre duality in dim n)."""
        n = len(self) - 1
        sign = -1 if n % 2 == 1 else 1
        return CohInterval(self.lo[::-1], self.hi[::-1], sign * self.chi)

    def padded(self, n: int) -> "CohInterval":
        extra = (0,) * (n - len(self))
        return CohInterval(self.lo + extra, self.hi + extra, self.chi)

    def __str__(self):
        parts = " ".join(str(b) for b in self)
        return f"({parts}) chi={self.chi}"


def tighten(lo: list[int], hi: list[int], chi: int) -> tuple[list[int], list[int]]:
    """Shrink bounds using sum (-1)^i h^i = chi until nothing changes."""
    lo, hi = list(lo), list(hi)
    n = len(lo)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            # (-1)^i h_i = chi - sum_{j != i} (-1)^j h_j
            rest_min = sum(lo[j] if j % 2 == 0 else -hi[j] for j in range(n) if j != i)
            rest_max = sum(hi[j] if j % 2 == 0 else -lo[j] for j in range(n) if j != i)
            if i % 2 == 0:
                new_lo, new_hi = chi - rest_max, chi - rest_min
            else:
                new_lo, new_hi = rest_min - chi, rest_max - chi
            new_lo = max(lo[i], new_lo, 0)
            new_hi = min(hi[i], new_hi)
            if new_lo > new_hi:
                raise ValueError("inconsistent bounds: chi cannot be met")
            if (new_lo, new_hi) != (lo[i], hi[i]):
                lo[i], hi[i] = new_lo, new_hi
                changed = True
    return lo, hi


def extend(sub: CohInterval, quot: CohInterval) -> CohInterval:
    """Bounds on H^*(V) for 0 -> sub -> V -> quot -> 0.

    h^i(V) = (h^i(S) - rk d_{i-1}) + (h^i(Q) - rk d_i) where
    d_i : H^i(Q) -> H^{i+1}(S) is the connecting map.
    """
    n = len(sub)
    if len(quot) != n:
        raise ValueError("length mismatch")
    lo, hi = [], []
    for i in range(n):
        q_prev_hi = quot.hi[i - 1] if i > 0 else 0
        s_next_hi = sub.hi[i + 1] if i + 1 < n else 0
        lo.append(max(0, sub.lo[i] - q_prev_hi) + max(0, quot.lo[i] - s_next_hi))
        hi.append(sub.hi[i] + quot.hi[i])
    chi = sub.chi + quot.chi
    lo, hi = tighten(lo, hi, chi)
    return CohInterval(tuple(lo), tuple(hi), chi)


def extend_nonsplit_trivial(sub: CohInterval) -> CohInterval:
    """Bounds for 0 -> sub -> V -> O -> 0 when the extension is non-split.

    The coboundary H^0(O) -> H^1(sub) sends 1 to the extension class, so it
    is injective: H^0(V) = H^0(sub) and h^1 drops by exactly one.
    """
    if sub.hi[1] == 0:
        raise ValueError("H^1(sub) = 0: every such extension splits")
    lo, hi = list(sub.lo), list(sub.hi)
    lo[1] = max(0, lo[1] - 1)
    hi[1] -= 1
    chi = sub.chi + 1
    lo, hi = tighten(lo, hi, chi)
    return CohInterval(tuple(lo), tuple(hi), chi)
