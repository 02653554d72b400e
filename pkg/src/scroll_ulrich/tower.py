"""Chern data, extension dimensions and moduli counts for towers of Ulrich line bundles."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chow import Codim2Class, DivisorClass, ScrollParams
from .coh import Bounds
from .constituents import TowerSpec, line_class
from .riemann_roch import FormalSheafClass, chi_end, chi_tensor, whitney_class
from .scroll import coh_tower_twist
from .ulrich import slope


@dataclass(frozen=True)
class TowerClass:
    rank: int
    c1: DivisorClass
    c2: Codim2Class
    c3: int
    slope: Fraction

    def sheaf(self) -> FormalSheafClass:
        return FormalSheafClass(self.rank, self.c1, self.c2, self.c3)


def build_tower(spec: TowerSpec) -> TowerClass:
    F = whitney_class(spec.params, spec.classes())
    return TowerClass(F.rank, F.c1, F.c2, F.c3, slope(spec.params, F))


def ext1_dim(label: str, base: TowerSpec, nonsplit: bool = False) -> Bounds:
    """Bounds on dim Ext^1(A, G) = h^1(G (x) A^v) for the tower G = base."""
    A = line_class(label, base.params)
    return coh_tower_twist(base.params, base, -A, nonsplit=nonsplit)[1]


def sporadic_next(r: int) -> str:
    """Label of the constituent that extends SPORADIC(r) to rank r + 1."""
    return "M1" if (r + 1) % 2 == 1 else "M2"


def nonsplit_h1_closed_form(r: int, t: int) -> int:
    """Closed form for h^1(SPORADIC(r) (x) M_next^v) after non-split extensions."""
    if r < 1 or t < 1:
        raise ValueError("need r >= 1 and t >= 1")
    if r % 2 == 1:
        return (r + 1) * (6 * t - 3) // 2 - (r - 1) // 2
    return r * (2 * t + 1) // 2 - (r - 2) // 2


def moduli_dim(spec: TowerSpec) -> int:
    """1 - chi(G (x) G^v): h^1 of End at a simple point with h^2 = h^3 = 0."""
    return 1 - chi_end(spec.params, spec)


def chi_next_dual(spec: TowerSpec, label: str) -> int:
    """chi(G (x) A^v)."""
    G = build_tower(spec).sheaf()
    A = FormalSheafClass.line(line_class(label, spec.params))
    return chi_tensor(spec.params, G, A.dual())


def chi_line_dual(spec: TowerSpec, label: str) -> int:
    """chi(A (x) G^v)."""
    G = build_tower(spec).sheaf()
    A = FormalSheafClass.line(line_class(label, spec.params))
    return chi_tensor(spec.params, A, G.dual())


def ineq_value(r: int, t: int) -> int:
    """Left side of the dimension inequality separating M(r) from its extension locus.

    -chi(End G_r) + 1 + chi(End G_{r-1}) - h^1(G_{r-1} (x) M_next^v).
    """
    if r < 2 or t < 1:
        raise ValueError("need r >= 2 and t >= 1")
    params = ScrollParams.sporadic(t)
    big = TowerSpec.sporadic(params, r)
    small = big.prefix(r - 1)
    return -chi_end(params, big) + 1 + chi_end(params, small) - nonsplit_h1_closed_form(r - 1, t)


def ineq_check(r: int, t: int) -> bool:
    return ineq_value(r, t) > 0
