import pytest
from hypothesis import given, settings, strategies as st

from scroll_ulrich.chow import (
    XI,
    Codim2Class,
    DivisorClass,
    GradedChowElement,
    ScrollParams,
    canonical_class,
    intersect,
)
from scroll_ulrich.constituents import TowerSpec, line_class
from scroll_ulrich.riemann_roch import (
    FormalSheafClass,
    NonIntegralChi,
    chern_character,
    chi,
    chi_end,
    chi_line,
    chi_tensor,
    end_class,
    from_chern_character,
    whitney_class,
)

from oracles import check_chi_end_routes, check_hrr_integrality, random_k_class

divisors = st.builds(DivisorClass.of, *(st.integers(-8, 8) for _ in range(3)))
codim2 = st.builds(Codim2Class, *(st.integers(-20, 20) for _ in range(3)))


@st.composite
def params_st(draw):
    e = draw(st.integers(0, 3))
    b = draw(st.integers(3 * e + 2, 3 * e + 12))
    k = draw(st.integers(b - e + 1, 2 * b - 4 * e - 1))
    return ScrollParams(e, b, k)


def test_ch_of_structure_sheaf():
    p = ScrollParams.sporadic(2)
    assert chern_character(p, FormalSheafClass(1)) == GradedChowElement(1)


@given(params_st(), divisors)
def test_ch_of_line(p, D):
    ch = chern_character(p, FormalSheafClass.line(D))
    assert ch.deg2 == GradedChowElement.codim2(intersect(D, D, p)).scale(GradedChowElement(1).deg0 / 2).deg2


@given(params_st(), st.integers(1, 5), divisors, codim2, st.integers(-30, 30))
def test_ch_of_dual_flips_odd_parts(p, r, c1, c2, c3):
    F = FormalSheafClass(r, c1, c2, c3)
    assert chern_character(p, F.dual()) == chern_character(p, F).dual_sign()


@given(params_st(), st.integers(1, 5), divisors, codim2, st.integers(-30, 30))
def test_ch_roundtrip(p, r, c1, c2, c3):
    F = FormalSheafClass(r, c1, c2, c3)
    assert from_chern_character(p, chern_character(p, F)) == F


@pytest.mark.parametrize("t", range(1, 51))
def test_calibration(t):
    p = ScrollParams.sporadic(t)
    assert chi(p, FormalSheafClass(1)) == 1
    assert chi(p, FormalSheafClass.line(XI)) == 5 * t + 5


@given(params_st(), divisors)
def test_fast_line_chi_agrees(p, D):
    assert chi_line(p, D) == chi(p, FormalSheafClass.line(D))


@given(params_st(), divisors)
def test_serre_at_chi_level(p, D):
    assert chi_line(p, D) == -chi_line(p, canonical_class(p) - D)


def test_non_realisable_class_is_reported():
    p = ScrollParams.sporadic(1)
    with pytest.raises(NonIntegralChi):
        chi(p, FormalSheafClass(2, c3=1))


def test_integrality_on_k_classes():
    assert check_hrr_integrality(2000, seed=99) == []


@given(st.integers(0, 2**32))
@settings(max_examples=50)
def test_random_k_class_has_integral_chi(seed):
    import random

    p = ScrollParams(1, 7, 8)
    F = random_k_class(random.Random(seed), p)
    assert isinstance(chi(p, F), int)


@pytest.mark.parametrize("t", range(1, 11))
def test_chi_end_examples(t):
    p = ScrollParams.sporadic(t)
    assert chi_end(p, TowerSpec.parse(p, "M1,M2")) == 4 - 8 * t
    assert chi_end(p, TowerSpec.parse(p, "M1,M2,L2")) == 9 - 18 * t
    assert chi_end(p, TowerSpec.parse(p, "L1,M2")) == 7 - 10 * t
    assert chi_end(p, TowerSpec.parse(p, "M1")) == 1


def test_chi_end_at_t1_constituent_sum():
    p = ScrollParams.sporadic(1)
    t = 1
    hand = 3 + (3 - 6 * t) + (-2 * t - 1) + (5 - 10 * t) + 0 + 0 + (-1)
    assert chi_end(p, TowerSpec.parse(p, "M1,M2,L2")) == hand == -9


@pytest.mark.parametrize("r", [2, 4, 6, 8])
def test_chi_end_sporadic_even(r):
    for t in (1, 3):
        p = ScrollParams.sporadic(t)
        assert chi_end(p, TowerSpec.sporadic(p, r)) == r * r * (4 - 8 * t) // 4


def test_chi_end_two_routes():
    assert check_chi_end_routes(300, seed=7) == []


@given(params_st(), divisors, divisors)
def test_chi_tensor_of_lines(p, A, B):
    assert chi_tensor(p, FormalSheafClass.line(A), FormalSheafClass.line(B)) == chi_line(p, A + B)


def test_end_class_of_rank2():
    p = ScrollParams.sporadic(2)
    F = whitney_class(p, [line_class("M1", p), line_class("M2", p)])
    E = end_class(p, F)
    assert E.rank == 4
    assert E.c1 == DivisorClass.of(0, 0, 0)


def test_rank_must_be_positive():
    with pytest.raises(ValueError):
        FormalSheafClass(0)
