"""The Ulrich line bundles L1, L2, M1, M2 and towers of iterated extensions."""

from __future__ import annotations

from dataclasses import dataclass

from .chow import DivisorClass, ScrollParams

LABELS = ("L1", "L2", "M1", "M2")


class TowerError(ValueError):
    pass


def line_class(label: str, params: ScrollParams) -> DivisorClass:
    """Divisor class of a named constituent.

    L2 and M2 are the Ulrich duals K_X + 4xi - L1 and K_X + 4xi - M1; on F_0
    these are xi + (-1, b-1) and (2, 3t-1).
    """
    e, b = params.e, params.b
    if label == "L1":
        return DivisorClass.of(1, 2, -1)
    if label == "L2":
        return DivisorClass.of(1, -1, b - 1 - e)
    if label in ("M1", "M2"):
        t = params.sporadic_t
        if t is None:
            raise TowerError(f"{label} only exists for (e, b, k) = (0, 2t, 3t); got {params}")
        if label == "M1":
            return DivisorClass.of(2, -1, -t - 1)
        return DivisorClass.of(0, 2, 3 * t - 1)
    raise TowerError(f"unknown constituent {label!r}; expected one of {LABELS}")


@dataclass(frozen=True)
class TowerSpec:
    """Iterated extension 0 -> G_{i-1} -> G_i -> D_i -> 0, G_1 = D_1."""

    params: ScrollParams
    constituents: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "constituents", tuple(self.constituents))
        if not self.constituents:
            raise TowerError("tower must have at least one constituent")
        for label in self.constituents:
            line_class(label, self.params)

    @classmethod
    def sporadic(cls, params: ScrollParams, r: int) -> "TowerSpec":
        """[M1, M2, M1, M2, ...]: odd steps by M1, even steps by M2."""
        if r < 1:
            raise TowerError("rank must be >= 1")
        return cls(params, tuple("M1" if i % 2 == 1 else "M2" for i in range(1, r + 1)))

    @classmethod
    def mixed(cls, params: ScrollParams, r: int) -> "TowerSpec":
        """[M1, M2] then L2 at odd steps and L1 at even steps from rank 3 on."""
        if r < 1:
            raise TowerError("rank must be >= 1")
        labels = ["M1", "M2"][:r]
        for i in range(3, r + 1):
            labels.append("L2" if i % 2 == 1 else "L1")
        return cls(params, tuple(labels))

    @classmethod
    def parse(cls, params: ScrollParams, text: str) -> "TowerSpec":
        labels = tuple(s.strip().upper() for s in text.split(",") if s.strip())
        return cls(params, labels)

    @property
    def rank(self) -> int:
        return len(self.constituents)

    def classes(self) -> list[DivisorClass]:
        return [line_class(label, self.params) for label in self.constituents]

    def prefix(self, r: int) -> "TowerSpec":
        return TowerSpec(self.params, self.constituents[:r])

    def __str__(self):
        return "[" + ", ".join(self.constituents) + "]"
