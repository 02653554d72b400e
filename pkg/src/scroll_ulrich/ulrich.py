"""Ulrich checks for line bundles on the scroll and a bounded classification scan."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator

from .chow import XI, DivisorClass, ScrollParams, canonical_class, triple
from .coh import Bounds, CohInterval
from .riemann_roch import FormalSheafClass, chi_line
from .scroll import coh_scroll_line

THREADS_ENV = "SCROLL_ULRICH_THREADS"
DEFAULT_X_RANGE = (-2, 4)
DEFAULT_ALPHA_BOUND = 8
DEFAULT_BETA_BOUND = 8


class Status(str, Enum):
    ULRICH = "ULRICH"
    NOT_ULRICH = "NOT_ULRICH"
    UNDECIDED = "UNDECIDED"


@dataclass(frozen=True)
class UlrichVerdict:
    """Outcome of checking H^i(D - j xi) = 0 for i = 0..3, j = 1..3.

    ``certificate[j-1]`` holds the cohomology of D - j xi.  When the class
    was rejected by the Euler characteristic alone, ``pruned`` is set,
    ``certificate`` is empty and ``chis`` records the nonzero witness.
    """

    status: Status
    certificate: tuple[CohInterval, ...]
    chis: tuple[int, int, int]
    pruned: bool = False

    def entries(self) -> Iterator[tuple[int, int, Bounds]]:
        """(j, i, bounds) for the 12 certificate cells."""
        for j, coh in enumerate(self.certificate, start=1):
            for i in range(4):
                yield j, i, coh[i]


def twist_chis(params: ScrollParams, D: DivisorClass) -> tuple[int, int, int]:
    return tuple(chi_line(params, D - j * XI) for j in (1, 2, 3))


def is_ulrich_line(params: ScrollParams, D: DivisorClass, prune: bool = False) -> UlrichVerdict:
    chis = twist_chis(params, D)
    if prune and any(chis):
        return UlrichVerdict(Status.NOT_ULRICH, (), chis, pruned=True)
    cert = tuple(coh_scroll_line(params, D - j * XI) for j in (1, 2, 3))
    if all(c.is_zero for c in cert):
        status = Status.ULRICH
    elif any(any(c.lo) or c.chi for c in cert):
        # a positive lower bound or a nonzero chi both force some h^i > 0
        status = Status.NOT_ULRICH
    else:
        status = Status.UNDECIDED
    return UlrichVerdict(status, cert, chis)


def ulrich_dual(params: ScrollParams, D: DivisorClass) -> DivisorClass:
    """K_X + 4 xi - D."""
    return canonical_class(params) + 4 * XI - D


def slope(params: ScrollParams, F: FormalSheafClass) -> Fraction:
    """c1(F) . xi^2 / rank(F)."""
    return Fraction(triple(F.c1, XI, XI, params), F.rank)


def ulrich_slope(params: ScrollParams) -> int:
    """d + g - 1, the slope every Ulrich bundle must have."""
    return params.degree + params.sectional_genus - 1


def worker_count(requested: int | None = None) -> int:
    if requested is not None:
        return max(1, requested)
    raw = os.environ.get(THREADS_ENV, "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def box_classes(x_range=DEFAULT_X_RANGE, alpha_bound=DEFAULT_ALPHA_BOUND,
                beta_bound=DEFAULT_BETA_BOUND) -> list[DivisorClass]:
    x0, x1 = x_range
    if x0 > x1 or alpha_bound < 0 or beta_bound < 0:
        raise ValueError("empty or malformed scan box")
    return [
        DivisorClass.of(x, a, b)
        for x in range(x0, x1 + 1)
        for a in range(-alpha_bound, alpha_bound + 1)
        for b in range(-beta_bound, beta_bound + 1)
    ]


def ulrich_scan(
    params: ScrollParams,
    x_range=DEFAULT_X_RANGE,
    alpha_bound: int = DEFAULT_ALPHA_BOUND,
    beta_bound: int = DEFAULT_BETA_BOUND,
    workers: int | None = None,
) -> list[tuple[DivisorClass, UlrichVerdict]]:
    """Classify every class in the box, sorted by (x, alpha, beta).

    Classes with chi(D - j xi) != 0 for some j are rejected without
    computing cohomology.
    """
    classes = box_classes(x_range, alpha_bound, beta_bound)

    def run(D):
        return D, is_ulrich_line(params, D, prune=True)

    n = worker_count(workers)
    if n == 1:
        results = [run(D) for D in classes]
    else:
        with ThreadPoolExecutor(max_workers=n) as pool:
            results = list(pool.map(run, classes))
    results.sort(key=lambda item: item[0].coords())
    return results


def scan_hits(results, status: Status = Status.ULRICH) -> list[DivisorClass]:
    return [D for D, v in results if v.status == status]
