from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from arboreal.cyclo import real_cyclotomic_min_poly
from arboreal.obstruct import (
    MOD_P,
    NO_INTERLACING,
    ZETA48,
    inverse_shift_coords,
    modp_factor_degrees,
    modp_obstruction,
    modp_obstruction_record,
    no_interlacing_obstruction,
    zeta48_obstruction,
    zeta48_three_adic_report,
)
from arboreal.poly import IntPolynomial, parse_polynomial as P
from arboreal.spectrum import squared_spectrum, squares_min_poly

ZETA48_F = P("x^4 - 8x^3 + 20x^2 - 16x + 1")
OCTIC_F = P("x^4 - 44x^3 + 567x^2 - 2660x + 3564")
M7_F = P("x^3 - 5x^2 + 6x - 1")


def test_modp_degrees_examples():
    assert modp_factor_degrees(ZETA48_F, 2) == [1, 1, 1, 1]
    assert modp_factor_degrees(ZETA48_F, 3) == [2, 2]
    assert modp_factor_degrees(M7_F, 2) == [3]


def test_modp_obstruction_examples():
    assert modp_obstruction(M7_F) == (2, 3)
    assert modp_obstruction(ZETA48_F) is None
    assert modp_obstruction(OCTIC_F) is None


@given(st.integers(-40, 40), st.integers(-40, 40))
def test_modp_vacuous_for_quadratics(b, c):
    assert modp_obstruction(IntPolynomial((c, b, 1))) is None


def test_no_interlacing_examples():
    s11 = squared_spectrum(squares_min_poly(real_cyclotomic_min_poly(11)))
    ob = no_interlacing_obstruction(s11)
    assert ob is not None and ob.kind == NO_INTERLACING and ob.recheck(s11.F, s11)
    assert no_interlacing_obstruction(squared_spectrum(OCTIC_F)) is None
    assert no_interlacing_obstruction(squared_spectrum(P("x - 2"))) is None


def test_obstruction_json_and_recheck():
    ob = modp_obstruction_record(M7_F)
    assert ob.to_json() == {"kind": MOD_P, "p": 2, "degree": 3, "detail": ob.detail}
    assert ob.recheck(M7_F)
    z = zeta48_obstruction(20)
    j = z.to_json()
    assert j["kind"] == ZETA48 and j["y0"] == "1/6" and j["detM"] == 3
    assert z.recheck(ZETA48_F)


def test_zeta48_report():
    r = zeta48_three_adic_report(100)
    assert r.y0 == Fraction(1, 6)
    assert r.detM == 3
    assert r.all_three_integral and r.fk_mod3_all_one
    assert sorted(r.bk0_values) == list(range(4, 101))
    assert all(v.denominator % 3 for v in r.bk0_values.values())
    with pytest.raises(ValueError):
        zeta48_three_adic_report(3)


def test_zeta48_report_independent_of_range():
    assert zeta48_three_adic_report(5).y0 == zeta48_three_adic_report(40).y0


def test_inverse_shift_column():
    # 1/(y - 1) in the power basis of Q[y]/F
    assert inverse_shift_coords(ZETA48_F, 1) == [Fraction(-3, 2), Fraction(13, 2), Fraction(-7, 2), Fraction(1, 2)]


@given(st.integers(-30, 30))
def test_inverse_shift_is_inverse(k):
    F = ZETA48_F
    c = inverse_shift_coords(F, k)
    # (y - k) * sum c_i y^i == 1 mod F, checked with fractions
    prod = [Fraction(0)] * 5
    for i, ci in enumerate(c):
        prod[i + 1] += ci
        prod[i] -= k * ci
    top = prod[4]
    for j in range(4):
        prod[j] -= top * F[j]
    assert prod[:4] == [1, 0, 0, 0]
