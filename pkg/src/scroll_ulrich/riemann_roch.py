"""Euler characteristics by Hirzebruch-Riemann-Roch: chi(F) = deg(ch(F) td(X))."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .chow import (
    ZERO_CODIM2,
    ZERO_DIVISOR,
    Codim2Class,
    DivisorClass,
    GradedChowElement,
    ScrollParams,
    _mul12,
    canonical_class,
    degree,
    intersect,
    multiply,
    tangent_chern,
    todd_class,
    triple,
)
from .constituents import TowerSpec


class NonIntegralChi(ArithmeticError):
    """The degree-3 pairing came out fractional: the ring relations are off."""


class OracleMismatch(AssertionError):
    """Two independent routes to the same Euler characteristic disagree."""


@dataclass(frozen=True)
class FormalSheafClass:
    rank: int
    c1: DivisorClass = ZERO_DIVISOR
    c2: Codim2Class = ZERO_CODIM2
    c3: int = 0

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"rank must be >= 1, got {self.rank}")

    @classmethod
    def line(cls, D: DivisorClass) -> "FormalSheafClass":
        return cls(1, D)

    @classmethod
    def structure_sheaf(cls) -> "FormalSheafClass":
        return cls(1)

    def dual(self) -> "FormalSheafClass":
        return FormalSheafClass(self.rank, -self.c1, self.c2, -self.c3)


def chern_character(params: ScrollParams, F: FormalSheafClass) -> GradedChowElement:
    """r + c1 + (c1^2 - 2c2)/2 + (c1^3 - 3 c1 c2 + 3 c3)/6."""
    c1sq = intersect(F.c1, F.c1, params)
    c1cube = degree(F.c1, c1sq, params)
    c1c2 = degree(F.c1, F.c2, params)
    return GradedChowElement(
        F.rank,
        F.c1.coords(),
        tuple(Fraction(a - 2 * b, 2) for a, b in zip(c1sq.coords(), F.c2.coords())),
        Fraction(c1cube - 3 * c1c2 + 3 * F.c3, 6),
    )


def from_chern_character(params: ScrollParams, ch: GradedChowElement) -> FormalSheafClass:
    """Inverse of chern_character; requires integral Chern classes."""
    if ch.deg0.denominator != 1:
        raise ValueError("rank is not an integer")
    c1 = ch.to_divisor()
    c1sq = intersect(c1, c1, params)
    c2 = GradedChowElement(
        deg2=tuple(Fraction(a, 2) - b for a, b in zip(c1sq.coords(), ch.deg2))
    ).to_codim2()
    c3 = 2 * ch.deg3 - Fraction(degree(c1, c1sq, params), 3) + degree(c1, c2, params)
    if c3.denominator != 1:
        raise ValueError(f"c3 is not integral: {c3}")
    return FormalSheafClass(int(ch.deg0), c1, c2, int(c3))


def _top_degree(a: GradedChowElement, b: GradedChowElement, params: ScrollParams) -> Fraction:
    """deg(a . b) without forming the lower-degree parts of the product."""
    return (
        a.deg0 * b.deg3
        + a.deg3 * b.deg0
        + _mul12(a.deg1, b.deg2, params)
        + _mul12(b.deg1, a.deg2, params)
    )


def _pair_with_todd(params: ScrollParams, ch: GradedChowElement) -> int:
    value = _top_degree(ch, todd_class(params), params)
    if value.denominator != 1:
        raise NonIntegralChi(f"chi = {value} for {params}")
    return int(value)


def chi(params: ScrollParams, F: FormalSheafClass) -> int:
    return _pair_with_todd(params, chern_character(params, F))


@lru_cache(maxsize=65536)
def chi_line(params: ScrollParams, D: DivisorClass) -> int:
    """Integer-only HRR for a line bundle.

    With c1 = -K: chi(D) = 1 + (2D^3 - 3K.D^2 + (K^2 + c2).D) / 12.
    Agrees with chi(params, FormalSheafClass.line(D)), which is slower.
    """
    K = canonical_class(params)
    _, c2, _ = tangent_chern(params)
    num = (
        2 * triple(D, D, D, params)
        - 3 * triple(K, D, D, params)
        + degree(D, intersect(K, K, params) + c2, params)
    )
    q, rem = divmod(num, 12)
    if rem:
        raise NonIntegralChi(f"chi({D}) = 1 + {num}/12 for {params}")
    return 1 + q


def tensor_class(params: ScrollParams, F: FormalSheafClass, G: FormalSheafClass) -> FormalSheafClass:
    ch = multiply(chern_character(params, F), chern_character(params, G), params)
    return from_chern_character(params, ch)


def chi_tensor(params: ScrollParams, F: FormalSheafClass, G: FormalSheafClass) -> int:
    """chi(F (x) G) = deg(ch(F) ch(G) td)."""
    ch = multiply(chern_character(params, F), chern_character(params, G), params)
    return _pair_with_todd(params, ch)


def end_class(params: ScrollParams, F: FormalSheafClass) -> FormalSheafClass:
    return tensor_class(params, F, F.dual())


def whitney_class(params: ScrollParams, classes) -> FormalSheafClass:
    """Chern data of any iterated extension of the given line bundles.

    Appending D updates c1 += D, c2 += c1_old . D, c3 += c2_old . D.
    """
    c1, c2, c3 = ZERO_DIVISOR, ZERO_CODIM2, 0
    rank = 0
    for D in classes:
        c3 += degree(D, c2, params)
        c2 = c2 + intersect(c1, D, params)
        c1 = c1 + D
        rank += 1
    return FormalSheafClass(rank, c1, c2, c3)


@lru_cache(maxsize=4096)
def chi_end(params: ScrollParams, tower: TowerSpec) -> int:
    """chi(G (x) G^v) by HRR on the End class, checked against sum_{i,j} chi(D_i - D_j)."""
    classes = tower.classes()
    F = whitney_class(params, classes)
    via_hrr = chi(params, end_class(params, F))
    via_sum = sum(chi_line(params, a - b) for a in classes for b in classes)
    if via_hrr != via_sum:
        raise OracleMismatch(f"chi_end {tower}: HRR {via_hrr} != constituent sum {via_sum}")
    return via_hrr
