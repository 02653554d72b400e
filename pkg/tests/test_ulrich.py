import pytest
from hypothesis import given, settings, strategies as st

from scroll_ulrich.chow import DivisorClass, ScrollParams
from scroll_ulrich.constituents import TowerError, line_class
from scroll_ulrich.riemann_roch import FormalSheafClass
from scroll_ulrich.ulrich import (
    THREADS_ENV,
    Status,
    box_classes,
    is_ulrich_line,
    scan_hits,
    slope,
    ulrich_dual,
    ulrich_scan,
    ulrich_slope,
    worker_count,
)

LABELS = ("L1", "L2", "M1", "M2")


@pytest.mark.parametrize("t", range(1, 11))
@pytest.mark.parametrize("label", LABELS)
def test_named_classes_are_ulrich(t, label):
    p = ScrollParams.sporadic(t)
    v = is_ulrich_line(p, line_class(label, p))
    assert v.status == Status.ULRICH
    assert len(list(v.entries())) == 12
    assert all(b.exact and b.lo == 0 for _, _, b in v.entries())


@pytest.mark.parametrize("ebk", [(0, 3, 4), (0, 4, 5), (0, 5, 8), (0, 6, 7)])
def test_l1_l2_ulrich_for_e0(ebk):
    p = ScrollParams(*ebk)
    for label in ("L1", "L2"):
        assert is_ulrich_line(p, line_class(label, p)).status == Status.ULRICH
    with pytest.raises(TowerError):
        line_class("M1", p)


def test_structure_sheaf_not_ulrich():
    p = ScrollParams.sporadic(1)
    v = is_ulrich_line(p, DivisorClass.of(0, 0, 0))
    assert v.status == Status.NOT_ULRICH
    pruned = is_ulrich_line(p, DivisorClass.of(0, 0, 0), prune=True)
    assert pruned.pruned and pruned.certificate == () and any(pruned.chis)


@pytest.mark.parametrize("t", range(1, 6))
def test_dual_pairs(t):
    p = ScrollParams.sporadic(t)
    lc = lambda s: line_class(s, p)
    assert ulrich_dual(p, lc("M1")) == lc("M2")
    assert ulrich_dual(p, lc("L1")) == lc("L2")


@given(st.integers(1, 8), st.integers(-5, 5), st.integers(-9, 9), st.integers(-9, 9))
def test_dual_is_involution(t, x, a, b):
    p = ScrollParams.sporadic(t)
    D = DivisorClass.of(x, a, b)
    assert ulrich_dual(p, ulrich_dual(p, D)) == D


def test_slopes():
    p = ScrollParams.sporadic(2)
    assert slope(p, FormalSheafClass.line(line_class("M1", p))) == 23
    assert slope(p, FormalSheafClass(1)) == 0
    assert ulrich_slope(p) == 23


@pytest.mark.parametrize("t", [1, 2, 3])
def test_default_scan(t):
    p = ScrollParams.sporadic(t)
    res = ulrich_scan(p)
    hits = scan_hits(res)
    assert sorted(hits, key=DivisorClass.coords) == sorted(
        (line_class(s, p) for s in LABELS), key=DivisorClass.coords
    )
    assert scan_hits(res, Status.UNDECIDED) == []
    for D in hits:
        assert ulrich_dual(p, D) in hits
        assert slope(p, FormalSheafClass.line(D)) == ulrich_slope(p)


@pytest.mark.parametrize("ebk,expected", [((0, 3, 4), {"L1", "L2"}), ((1, 5, 5), set()), ((2, 8, 7), set())])
def test_scan_non_sporadic(ebk, expected):
    p = ScrollParams(*ebk)
    res = ulrich_scan(p)
    assert set(scan_hits(res)) == {line_class(s, p) for s in expected}
    assert scan_hits(res, Status.UNDECIDED) == []


def test_pruning_is_sound():
    p = ScrollParams.sporadic(1)
    for D in box_classes((-1, 3), 4, 5):
        full = is_ulrich_line(p, D)
        fast = is_ulrich_line(p, D, prune=True)
        assert full.status == fast.status


def test_scan_deterministic_across_workers(monkeypatch):
    p = ScrollParams.sporadic(2)
    a = ulrich_scan(p, alpha_bound=5, beta_bound=5, workers=1)
    b = ulrich_scan(p, alpha_bound=5, beta_bound=5, workers=4)
    assert [(D, v.status) for D, v in a] == [(D, v.status) for D, v in b]
    monkeypatch.setenv(THREADS_ENV, "3")
    assert worker_count() == 3
    monkeypatch.setenv(THREADS_ENV, "junk")
    assert worker_count() == 1


def test_bad_box():
    with pytest.raises(ValueError):
        box_classes((3, 1), 2, 2)


@given(st.integers(1, 4), st.integers(-2, 4), st.integers(-8, 8), st.integers(-8, 8))
@settings(max_examples=200)
def test_ulrich_implies_dual_ulrich(t, x, a, b):
    p = ScrollParams.sporadic(t)
    D = DivisorClass.of(x, a, b)
    v = is_ulrich_line(p, D)
    if v.status == Status.ULRICH:
        assert is_ulrich_line(p, ulrich_dual(p, D)).status == Status.ULRICH
