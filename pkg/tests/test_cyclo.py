import math

import numpy as np
import pytest

from arboreal.certify import HEIGHT_AT_MOST_1, IN_A2, NOT_IN_A2
from arboreal.cyclo import (
    classify_cyclotomic,
    cyclotomic_poly,
    euler_phi,
    expected_square_degree,
    real_cyclotomic_min_poly,
)
from arboreal.obstruct import MOD_P, NO_INTERLACING, ZETA48
from arboreal.poly import parse_polynomial as P
from arboreal.spectrum import squares_min_poly


def numeric_oracle(m):
    """Expand prod (x - 2cos(2 pi k/m)) over 1 <= k <= m/2, gcd(k, m) = 1, and round."""
    roots = [2 * math.cos(2 * math.pi * k / m) for k in range(1, m // 2 + 1) if math.gcd(k, m) == 1]
    coeffs = np.poly(roots)[::-1]
    assert np.all(np.abs(coeffs - np.round(coeffs)) < 1e-9)
    return tuple(int(round(c)) for c in coeffs)


def test_examples():
    assert real_cyclotomic_min_poly(12) == P("x^2 - 3")
    assert real_cyclotomic_min_poly(7) == P("x^3 + x^2 - 2x - 1")
    assert real_cyclotomic_min_poly(5) == P("x^2 + x - 1")
    assert real_cyclotomic_min_poly(1) == P("x - 2")
    assert real_cyclotomic_min_poly(2) == P("x + 2")


@pytest.mark.parametrize("m", range(3, 41))
def test_against_numeric_oracle(m):
    assert real_cyclotomic_min_poly(m).coeffs == numeric_oracle(m)


def test_cyclotomic_poly():
    assert cyclotomic_poly(1) == P("x - 1")
    assert cyclotomic_poly(12) == P("x^4 - x^2 + 1")
    assert cyclotomic_poly(105).degree == 48


def test_degree_formulas():
    for m in range(1, 201):
        assert real_cyclotomic_min_poly(m).degree == max(1, euler_phi(m) // 2)
    for m in range(5, 201):
        assert squares_min_poly(real_cyclotomic_min_poly(m)).degree == expected_square_degree(m)


def test_classify_examples():
    r = classify_cyclotomic(24)
    assert r.n == 2 and r.verdict == IN_A2 and r.analysis.certificate.verified
    r = classify_cyclotomic(9)
    assert r.n == 3 and r.verdict == NOT_IN_A2
    assert (r.analysis.obstruction.kind, r.analysis.obstruction.p, r.analysis.obstruction.degree) == (MOD_P, 2, 3)
    r = classify_cyclotomic(48)
    assert r.n == 4 and r.analysis.obstruction.kind == ZETA48
    assert classify_cyclotomic(8).verdict == HEIGHT_AT_MOST_1


@pytest.mark.parametrize("m", [61, 64, 70, 77, 84, 90, 97, 105, 120])
def test_large_m_no_interlacing(m):
    r = classify_cyclotomic(m)
    assert r.n > 4
    assert r.verdict == NOT_IN_A2 and r.analysis.obstruction.kind == NO_INTERLACING


def test_report_json():
    j = classify_cyclotomic(48).to_json()
    assert j["m"] == 48 and j["n"] == 4 and j["verdict"] == NOT_IN_A2
    assert j["analysis"]["obstruction"]["y0"] == "1/6"
