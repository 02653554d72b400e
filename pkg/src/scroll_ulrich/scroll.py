"""Cohomology on the scroll X via the Leray spectral sequence of phi: X -> F_e.

For x >= 0, R^i phi_* O(x xi) = 0 for i > 0 and phi_* O(x xi) = Sym^x E, so
H^i(X, x xi + phi^*L) = H^i(F_e, Sym^x E (x) L) and H^3 = 0.  x = -1 has no
cohomology at all, and x <= -2 is reduced by Serre duality on X to
K_X - D, whose xi-coefficient is -2 - x >= 0.
"""

from __future__ import annotations

from functools import lru_cache

from .chow import DivisorClass, ScrollParams, canonical_class
from .coh import CohInterval, extend, extend_nonsplit_trivial
from .constituents import TowerSpec
from .surface import coh_sym_twist


@lru_cache(maxsize=65536)
def coh_scroll_line(params: ScrollParams, D: DivisorClass) -> CohInterval:
    if D.x >= 0:
        return coh_sym_twist(params, D.x, D.surf).padded(4)
    if D.x == -1:
        return CohInterval.zero(4)
    return coh_scroll_line(params, canonical_class(params) - D).reversed()


def coh_tower_twist(
    params: ScrollParams,
    tower: TowerSpec,
    twist: DivisorClass,
    nonsplit: bool = False,
) -> CohInterval:
    """Bounds on H^*(G (x) O(twist)) for the iterated extension G of `tower`.

    With ``nonsplit=True`` every step 0 -> G_{i-1} -> G_i -> D_i -> 0 is
    taken to be a non-split extension.  This only matters at steps where
    D_i + twist = 0: there the coboundary out of H^0(O) is injective.  No
    other property of the extension classes is ever assumed.
    """
    if tower.params != params:
        raise ValueError("tower built for different parameters")
    acc = None
    for D in tower.classes():
        piece = D + twist
        if acc is not None and nonsplit and piece == DivisorClass.of(0, 0, 0):
            acc = extend_nonsplit_trivial(acc)
            continue
        c = coh_scroll_line(params, piece)
        acc = c if acc is None else extend(acc, c)
    return acc


def serre_check(params: ScrollParams, D: DivisorClass) -> bool:
    """h^i(D) == h^{3-i}(K_X - D) wherever both sides are exact."""
    left = coh_scroll_line(params, D)
    right = coh_scroll_line(params, canonical_class(params) - D)
    for i in range(4):
        a, b = left[i], right[3 - i]
        if a.exact and b.exact and a.value != b.value:
            return False
    return left.chi == -right.chi
