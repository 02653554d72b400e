"""Cohomology on the Hirzebruch surface F_e.

Line bundles are exact, via pushforward to P^1: for alpha >= 0

    pi_* O(alpha C + beta f) = sum_{j=0}^{alpha} O_{P^1}(beta - j e)

and alpha = -1 has no cohomology.  alpha <= -2 goes through Serre duality.

Sym^n(E) (x) L is filtered by the line bundles A^j B^(n-j) (x) L coming from
0 -> A -> E -> B -> 0, and its cohomology is bounded by interval propagation.
"""

from __future__ import annotations

from typing import NamedTuple

from .chow import ScrollParams, SurfaceClass, canonical_fe
from .coh import CohInterval, extend


class CohVector3(NamedTuple):
    h0: int
    h1: int
    h2: int

    @property
    def chi(self) -> int:
        return self.h0 - self.h1 + self.h2


def p1_cohomology(d: int) -> tuple[int, int]:
    """(h^0, h^1) of O(d) on P^1."""
    return (d + 1, 0) if d >= 0 else (0, -d - 1)


def chi_line_fe(e: int, L: SurfaceClass) -> int:
    """chi(O) + L.(L - K)/2 with chi(O_{F_e}) = 1."""
    return 1 + L.dot(L - canonical_fe(e), e) // 2


def coh_line_fe(e: int, L: SurfaceClass) -> CohVector3:
    if e < 0:
        raise ValueError("e must be >= 0")
    a, b = L.alpha, L.beta
    if a == -1:
        return CohVector3(0, 0, 0)
    if a <= -2:
        h0, h1, h2 = coh_line_fe(e, canonical_fe(e) - L)
        return CohVector3(h2, h1, h0)
    h0 = h1 = 0
    for j in range(a + 1):
        u, v = p1_cohomology(b - j * e)
        h0 += u
        h1 += v
    return CohVector3(h0, h1, 0)


def extension_pieces(params: ScrollParams) -> tuple[SurfaceClass, SurfaceClass]:
    """Sub line bundle A and quotient B of 0 -> A -> E -> B -> 0."""
    e, b, k = params.e, params.b, params.k
    A = SurfaceClass(2, 2 * b - k - 2 * e)
    B = SurfaceClass(1, k - b + 2 * e)
    return A, B


def sym_pieces(params: ScrollParams, n: int, L: SurfaceClass) -> list[SurfaceClass]:
    """Graded pieces of Sym^n(E) (x) L, listed from sub to quotient."""
    A, B = extension_pieces(params)
    return [A * j + B * (n - j) + L for j in range(n, -1, -1)]


def coh_sym_twist(params: ScrollParams, n: int, L: SurfaceClass) -> CohInterval:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    acc = None
    for piece in sym_pieces(params, n, L):
        c = CohInterval.exact(coh_line_fe(params.e, piece))
        acc = c if acc is None else extend(acc, c)
    return acc
