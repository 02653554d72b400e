"""Numerical intersection theory on the 3-fold scroll X = P(E) over F_e.

E is a rank-2 bundle on the Hirzebruch surface F_e with c1(E) = 3C + b f and
c2(E) = k.  We use the Grothendieck convention: phi_* O(xi) = E, so the
tautological class satisfies

    xi^2 = xi . phi^*c1(E) - phi^*c2(E).

Bases (fixed, used for all serialization):

    degree 1:  (xi, h1, h2)            with h1 = phi^*C, h2 = phi^*f
    degree 2:  (xi.h1, xi.h2, F)       with F = phi^*[pt] the fibre
    degree 3:  the point class
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable


class InvalidParams(ValueError):
    """Raised when (e, b, k) violate b - e < k < 2b - 4e, b >= 3e + 2 or e >= 0."""


@dataclass(frozen=True, order=True)
class ScrollParams:
    e: int
    b: int
    k: int

    def __post_init__(self):
        for name in ("e", "b", "k"):
            if not isinstance(getattr(self, name), int):
                raise InvalidParams(f"{name} must be an integer")
        if self.e < 0:
            raise InvalidParams(f"e must be >= 0, got {self.e}")
        if not (self.b - self.e < self.k < 2 * self.b - 4 * self.e):
            raise InvalidParams(
                f"need b - e < k < 2b - 4e, got e={self.e}, b={self.b}, k={self.k}"
            )
        if self.b < 3 * self.e + 2:
            raise InvalidParams(f"need b >= 3e + 2, got e={self.e}, b={self.b}")

    @classmethod
    def sporadic(cls, t: int) -> "ScrollParams":
        if t < 1:
            raise InvalidParams(f"t must be >= 1, got {t}")
        return cls(0, 2 * t, 3 * t)

    @property
    def sporadic_t(self) -> int | None:
        """t when (e, b, k) = (0, 2t, 3t), else None."""
        if self.e == 0 and self.b % 2 == 0 and 2 * self.k == 3 * self.b:
            return self.b // 2
        return None

    @property
    def degree(self) -> int:
        return 6 * self.b - 9 * self.e - self.k

    @property
    def sectional_genus(self) -> int:
        return 2 * self.b - 3 * self.e - 2

    @property
    def embedding_dim(self) -> int:
        return 4 * self.b - self.k - 6 * self.e + 4

    def __str__(self):
        s = f"e={self.e} b={self.b} k={self.k}"
        if self.sporadic_t is not None:
            s += f" (t={self.sporadic_t})"
        return s


@dataclass(frozen=True, order=True)
class SurfaceClass:
    """alpha C_e + beta f on F_e."""

    alpha: int
    beta: int

    def __add__(self, other: "SurfaceClass") -> "SurfaceClass":
        return SurfaceClass(self.alpha + other.alpha, self.beta + other.beta)

    def __sub__(self, other: "SurfaceClass") -> "SurfaceClass":
        return SurfaceClass(self.alpha - other.alpha, self.beta - other.beta)

    def __neg__(self) -> "SurfaceClass":
        return SurfaceClass(-self.alpha, -self.beta)

    def __mul__(self, n: int) -> "SurfaceClass":
        return SurfaceClass(n * self.alpha, n * self.beta)

    __rmul__ = __mul__

    def dot(self, other: "SurfaceClass", e: int) -> int:
        """Intersection number on F_e (C^2 = -e, C.f = 1, f^2 = 0)."""
        return (
            -e * self.alpha * other.alpha
            + self.alpha * other.beta
            + self.beta * other.alpha
        )

    def __str__(self):
        return f"({self.alpha}, {self.beta})"


def canonical_fe(e: int) -> SurfaceClass:
    return SurfaceClass(-2, -2 - e)


@dataclass(frozen=True, order=True)
class DivisorClass:
    """x xi + phi^*(alpha C + beta f)."""

    x: int
    surf: SurfaceClass

    @classmethod
    def of(cls, x: int, alpha: int, beta: int) -> "DivisorClass":
        return cls(x, SurfaceClass(alpha, beta))

    @property
    def alpha(self) -> int:
        return self.surf.alpha

    @property
    def beta(self) -> int:
        return self.surf.beta

    def coords(self) -> tuple[int, int, int]:
        return (self.x, self.surf.alpha, self.surf.beta)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.x + other.x, self.surf + other.surf)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.x - other.x, self.surf - other.surf)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.x, -self.surf)

    def __mul__(self, n: int) -> "DivisorClass":
        return DivisorClass(n * self.x, n * self.surf)

    __rmul__ = __mul__

    def __str__(self):
        return f"{self.x}xi + ({self.surf.alpha}, {self.surf.beta})"


XI = DivisorClass.of(1, 0, 0)
ZERO_DIVISOR = DivisorClass.of(0, 0, 0)


@dataclass(frozen=True, order=True)
class Codim2Class:
    """p xi.h1 + q xi.h2 + s F."""

    p: int
    q: int
    s: int

    def coords(self) -> tuple[int, int, int]:
        return (self.p, self.q, self.s)

    def __add__(self, other: "Codim2Class") -> "Codim2Class":
        return Codim2Class(self.p + other.p, self.q + other.q, self.s + other.s)

    def __sub__(self, other: "Codim2Class") -> "Codim2Class":
        return Codim2Class(self.p - other.p, self.q - other.q, self.s - other.s)

    def __neg__(self) -> "Codim2Class":
        return Codim2Class(-self.p, -self.q, -self.s)

    def __str__(self):
        sign = "-" if self.s < 0 else "+"
        return f"xi.({self.p}, {self.q}) {sign} {abs(self.s)}F"


ZERO_CODIM2 = Codim2Class(0, 0, 0)

_F0 = Fraction(0)


def _frac3(v: Iterable) -> tuple[Fraction, Fraction, Fraction]:
    a, b, c = v
    return (Fraction(a), Fraction(b), Fraction(c))


@dataclass(frozen=True)
class GradedChowElement:
    """Rational element of the numerical Chow ring, truncated above degree 3."""

    deg0: Fraction = _F0
    deg1: tuple[Fraction, Fraction, Fraction] = (_F0, _F0, _F0)
    deg2: tuple[Fraction, Fraction, Fraction] = (_F0, _F0, _F0)
    deg3: Fraction = _F0

    def __post_init__(self):
        object.__setattr__(self, "deg0", Fraction(self.deg0))
        object.__setattr__(self, "deg1", _frac3(self.deg1))
        object.__setattr__(self, "deg2", _frac3(self.deg2))
        object.__setattr__(self, "deg3", Fraction(self.deg3))

    @classmethod
    def scalar(cls, c) -> "GradedChowElement":
        return cls(deg0=c)

    @classmethod
    def divisor(cls, d: DivisorClass) -> "GradedChowElement":
        return cls(deg1=d.coords())

    @classmethod
    def codim2(cls, c: Codim2Class) -> "GradedChowElement":
        return cls(deg2=c.coords())

    @classmethod
    def point(cls, n) -> "GradedChowElement":
        return cls(deg3=n)

    def __add__(self, other: "GradedChowElement") -> "GradedChowElement":
        return GradedChowElement(
            self.deg0 + other.deg0,
            tuple(a + b for a, b in zip(self.deg1, other.deg1)),
            tuple(a + b for a, b in zip(self.deg2, other.deg2)),
            self.deg3 + other.deg3,
        )

    def __neg__(self) -> "GradedChowElement":
        return self.scale(-1)

    def __sub__(self, other: "GradedChowElement") -> "GradedChowElement":
        return self + (-other)

    def scale(self, c) -> "GradedChowElement":
        c = Fraction(c)
        return GradedChowElement(
            c * self.deg0,
            tuple(c * a for a in self.deg1),
            tuple(c * a for a in self.deg2),
            c * self.deg3,
        )

    def dual_sign(self) -> "GradedChowElement":
        """Flip the sign of the odd-degree parts (ch of the dual)."""
        return GradedChowElement(
            self.deg0,
            tuple(-a for a in self.deg1),
            self.deg2,
            -self.deg3,
        )

    def to_divisor(self) -> DivisorClass:
        return DivisorClass.of(*_integral(self.deg1, "degree-1 part"))

    def to_codim2(self) -> Codim2Class:
        return Codim2Class(*_integral(self.deg2, "degree-2 part"))


def _integral(values, what) -> tuple[int, ...]:
    out = []
    for v in values:
        if Fraction(v).denominator != 1:
            raise ValueError(f"{what} is not integral: {values}")
        out.append(int(v))
    return tuple(out)


def _mul11(a, b, params: ScrollParams):
    """Degree 1 x degree 1 -> degree 2 in basis (xi.h1, xi.h2, F)."""
    x1, p1, q1 = a
    x2, p2, q2 = b
    xx = x1 * x2
    # xi^2 = 3 xi.h1 + b xi.h2 - k F ; h1^2 = -e F ; h1.h2 = F ; h2^2 = 0
    return (
        3 * xx + x1 * p2 + x2 * p1,
        params.b * xx + x1 * q2 + x2 * q1,
        -params.k * xx - params.e * p1 * p2 + p1 * q2 + q1 * p2,
    )


def _mul12(a, c, params: ScrollParams):
    """Degree 1 x degree 2 -> point degree."""
    x, p, q = a
    u, v, s = c
    e = params.e
    # xi^2.h1 = b - 3e, xi^2.h2 = 3, xi.F = 1, xi.h1^2 = -e, xi.h1.h2 = 1
    return x * (u * (params.b - 3 * e) + 3 * v + s) + p * (-e * u + v) + q * u


def multiply(
    a: GradedChowElement, b: GradedChowElement, params: ScrollParams
) -> GradedChowElement:
    a0, b0 = a.deg0, b.deg0
    deg1 = tuple(a0 * y + b0 * x for x, y in zip(a.deg1, b.deg1))
    d11 = _mul11(a.deg1, b.deg1, params)
    deg2 = tuple(
        a0 * y + b0 * x + z for x, y, z in zip(a.deg2, b.deg2, d11)
    )
    deg3 = (
        a0 * b.deg3
        + b0 * a.deg3
        + _mul12(a.deg1, b.deg2, params)
        + _mul12(b.deg1, a.deg2, params)
    )
    return GradedChowElement(a0 * b0, deg1, deg2, deg3)


# Integer shortcuts on the classes themselves.

def intersect(d1: DivisorClass, d2: DivisorClass, params: ScrollParams) -> Codim2Class:
    return Codim2Class(*_mul11(d1.coords(), d2.coords(), params))


def degree(d: DivisorClass, c: Codim2Class, params: ScrollParams) -> int:
    return _mul12(d.coords(), c.coords(), params)


def triple(d1: DivisorClass, d2: DivisorClass, d3: DivisorClass, params: ScrollParams) -> int:
    return degree(d1, intersect(d2, d3, params), params)


def c1_bundle(params: ScrollParams) -> SurfaceClass:
    return SurfaceClass(3, params.b)


def canonical_class(params: ScrollParams) -> DivisorClass:
    surf = canonical_fe(params.e) + c1_bundle(params)
    return DivisorClass(-2, surf)


def tangent_chern(params: ScrollParams) -> tuple[DivisorClass, Codim2Class, int]:
    """c(T_X) = c(T_{X/S}) . phi^*c(T_S) with c1(T_{X/S}) = 2xi - phi^*c1(E)."""
    rel = DivisorClass(2, -c1_bundle(params))
    base_c1 = DivisorClass(0, -canonical_fe(params.e))
    euler_fe = 4
    c1 = rel + base_c1
    c2 = intersect(rel, base_c1, params) + Codim2Class(0, 0, euler_fe)
    c3 = degree(rel, Codim2Class(0, 0, euler_fe), params)
    return c1, c2, c3


@lru_cache(maxsize=256)
def todd_class(params: ScrollParams) -> GradedChowElement:
    c1, c2, _ = tangent_chern(params)
    g1 = GradedChowElement.divisor(c1)
    g2 = GradedChowElement.codim2(c2)
    c1sq = multiply(g1, g1, params)
    c1c2 = multiply(g1, g2, params)
    return GradedChowElement(
        1,
        tuple(Fraction(v, 2) for v in g1.deg1),
        tuple((a + b) / 12 for a, b in zip(c1sq.deg2, g2.deg2)),
        c1c2.deg3 / 24,
    )
