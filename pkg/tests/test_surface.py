import random

import pytest
from hypothesis import given, strategies as st

from scroll_ulrich.chow import ScrollParams, SurfaceClass, canonical_fe
from scroll_ulrich.coh import CohInterval
from scroll_ulrich.surface import (
    chi_line_fe,
    coh_line_fe,
    coh_sym_twist,
    extension_pieces,
    sym_pieces,
)

from oracles import check_kunneth_grid, fe_oracle, random_params

classes = st.builds(SurfaceClass, st.integers(-15, 15), st.integers(-25, 25))


def test_examples():
    assert coh_line_fe(0, SurfaceClass(-2, -4)) == (0, 0, 3)
    assert coh_line_fe(0, SurfaceClass(0, 0)) == (1, 0, 0)
    assert coh_line_fe(0, SurfaceClass(-1, 17)) == (0, 0, 0)


def test_kunneth_full_grid():
    assert check_kunneth_grid(30) == []


@given(st.integers(0, 4), classes)
def test_lattice_point_oracle(e, L):
    assert tuple(coh_line_fe(e, L)) == fe_oracle(e, L)


@given(st.integers(0, 4), classes)
def test_serre_on_surface(e, L):
    h = coh_line_fe(e, L)
    d = coh_line_fe(e, canonical_fe(e) - L)
    assert tuple(h) == tuple(d)[::-1]


@given(st.integers(0, 4), classes)
def test_riemann_roch(e, L):
    assert coh_line_fe(e, L).chi == chi_line_fe(e, L)


def test_negative_e_rejected():
    with pytest.raises(ValueError):
        coh_line_fe(-1, SurfaceClass(0, 0))


@pytest.mark.parametrize("t", range(1, 8))
def test_sym_twist_examples(t):
    p = ScrollParams.sporadic(t)
    assert coh_sym_twist(p, 1, SurfaceClass(0, -3 * t)) == CohInterval.exact((0, 10 * t - 5, 0))
    assert coh_sym_twist(p, 1, SurfaceClass(-3, -t)) == CohInterval.exact((0, 1, 0))


def test_extension_pieces_sporadic():
    A, B = extension_pieces(ScrollParams.sporadic(3))
    assert (A, B) == (SurfaceClass(2, 3), SurfaceClass(1, 3))


@given(st.integers(0, 2**32).map(random.Random), st.integers(0, 5), classes)
def test_sym_twist_consistent(rnd, n, L):
    p = random_params(rnd)
    coh = coh_sym_twist(p, n, L)
    assert coh.chi == sum(chi_line_fe(p.e, piece) for piece in sym_pieces(p, n, L))
    lo_sum = coh.lo[0] - coh.hi[1] + coh.lo[2]
    hi_sum = coh.hi[0] - coh.lo[1] + coh.hi[2]
    assert lo_sum <= coh.chi <= hi_sum
    # each bound contains some assignment hitting chi exactly
    for i in range(3):
        for v in (coh.lo[i], coh.hi[i]):
            others = [j for j in range(3) if j != i]
            sign = [1, -1, 1]
            rest = coh.chi - sign[i] * v
            lo = sum(sign[j] * (coh.lo[j] if sign[j] > 0 else coh.hi[j]) for j in others)
            hi = sum(sign[j] * (coh.hi[j] if sign[j] > 0 else coh.lo[j]) for j in others)
            assert lo <= rest <= hi


@given(st.integers(0, 2**32).map(random.Random), classes)
def test_sym_zero_is_line(rnd, L):
    p = random_params(rnd)
    coh = coh_sym_twist(p, 0, L)
    assert coh.is_exact
    assert coh.values == tuple(coh_line_fe(p.e, L))


def test_negative_n_rejected():
    with pytest.raises(ValueError):
        coh_sym_twist(ScrollParams.sporadic(1), -1, SurfaceClass(0, 0))
