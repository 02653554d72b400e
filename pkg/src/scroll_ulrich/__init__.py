"""Exact intersection theory, cohomology and Ulrich checks on 3-fold scrolls over F_e."""

from .chow import DivisorClass, InvalidParams, ScrollParams, SurfaceClass
from .constituents import TowerSpec, line_class
from .riemann_roch import FormalSheafClass, chi, chi_end
from .scroll import coh_scroll_line, coh_tower_twist
from .tower import build_tower, moduli_dim
from .ulrich import Status, is_ulrich_line, ulrich_scan

__version__ = "0.1.0"

__all__ = [
    "DivisorClass",
    "FormalSheafClass",
    "InvalidParams",
    "ScrollParams",
    "Status",
    "SurfaceClass",
    "TowerSpec",
    "build_tower",
    "chi",
    "chi_end",
    "coh_scroll_line",
    "coh_tower_twist",
    "is_ulrich_line",
    "line_class",
    "moduli_dim",
    "ulrich_scan",
]
