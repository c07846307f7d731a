from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from arboreal.cyclo import real_cyclotomic_min_poly
from arboreal.poly import IntPolynomial, parse_polynomial as P, refine_interval, isolate_positive_roots
from arboreal.spectrum import (
    LEFT,
    RIGHT,
    EnumBudget,
    InterlacingSet,
    enumerate_interlacing,
    expected_signs,
    find_interlacing,
    has_integer_root,
    irreducibility_evidence,
    is_interlacing,
    least_integer_in_gap,
    squared_spectrum,
    squares_min_poly,
)

OCTIC_f = P("x^8 - 44x^6 + 567x^4 - 2660x^2 + 3564")
OCTIC_F = P("x^4 - 44x^3 + 567x^2 - 2660x + 3564")


def test_squares_min_poly_examples():
    assert squares_min_poly(P("x^2 - 2")) == P("x - 2")
    assert squares_min_poly(OCTIC_f) == OCTIC_F
    F7 = squares_min_poly(P("x^3 + x^2 - 2x - 1"))
    # oracle: 4*lambda^2 has minimal polynomial x^3 - 20x^2 + 96x - 64
    assert F7.scale_roots(4) == P("x^3 - 20x^2 + 96x - 64")
    assert F7 == P("x^3 - 5x^2 + 6x - 1")


def test_squares_min_poly_rejects_non_monic():
    with pytest.raises(ValueError):
        squares_min_poly(P("2x^2 - 1"))


def test_spectrum_examples():
    s = squared_spectrum(OCTIC_F)
    assert s.n == 4
    assert [round(x, 3) for x in s.approx()] == [2.215, 6.814, 9.144, 25.827]
    s1 = squared_spectrum(P("x - 2"))
    assert s1.n == 1 and s1.exact == (True,) and s1.floors == (2,)
    s2 = squared_spectrum(P("x^2 - 3x + 1"))
    assert [round(x, 3) for x in s2.approx()] == [0.382, 2.618]


def test_spectrum_rejects():
    with pytest.raises(ValueError):
        squared_spectrum(P("x^2 + 1"))
    with pytest.raises(ValueError):
        squared_spectrum(P("x^2 - 1"))  # root -1
    with pytest.raises(ValueError):
        squared_spectrum(P("x^2 - 4x + 4"))


def test_gaps():
    s = squared_spectrum(OCTIC_F)
    assert least_integer_in_gap(s, 1) == 3
    assert least_integer_in_gap(s, 3) == 10
    assert least_integer_in_gap(squared_spectrum(P("x^2 - 3x + 1")), 1) == 1
    with pytest.raises(IndexError):
        least_integer_in_gap(s, 4)


def test_canonical_sets():
    s = squared_spectrum(OCTIC_F)
    assert find_interlacing(s, LEFT) == InterlacingSet((0, 3, 7, 10), LEFT)
    assert find_interlacing(s, RIGHT) == InterlacingSet((3, 7, 10, 26), RIGHT)
    s11 = squared_spectrum(squares_min_poly(real_cyclotomic_min_poly(11)))
    assert s11.n == 5
    assert find_interlacing(s11, LEFT) is None and find_interlacing(s11, RIGHT) is None


def test_enumeration_order():
    s = squared_spectrum(OCTIC_F)
    sets = enumerate_interlacing(s, LEFT, EnumBudget(max_k=12))
    assert [x.ks for x in sets[:4]] == [(0, 3, 7, 10), (1, 3, 7, 10), (2, 3, 7, 10), (0, 4, 7, 10)]
    assert len(sets) == 3 * 4 * 3 * 3  # k_4 ranges over 10..12
    keys = [x.ks[::-1] for x in sets]
    assert keys == sorted(keys)
    two = enumerate_interlacing(squared_spectrum(P("x - 2")), LEFT, EnumBudget(max_k=1))
    assert [x.ks for x in two] == [(0,), (1,)]
    assert enumerate_interlacing(
        squared_spectrum(squares_min_poly(real_cyclotomic_min_poly(11))), LEFT, EnumBudget(max_k=20)) == []
    assert len(enumerate_interlacing(s, RIGHT, EnumBudget(max_k=40, max_sets=7))) == 7


def test_sign_rule_depends_on_parity():
    # left sets end at -1, signs alternate downwards
    assert expected_signs(4, LEFT) == [1, -1, 1, -1]
    assert expected_signs(3, LEFT) == [-1, 1, -1]
    assert expected_signs(3, RIGHT) == [1, -1, 1]
    F = P("x^3 - 5x^2 + 6x - 1")
    assert is_interlacing(F, (0, 1, 2), LEFT)
    assert is_interlacing(F, (1, 2, 4), RIGHT)
    assert not is_interlacing(F, (1, 2, 4), LEFT)


def test_set_validation():
    with pytest.raises(ValueError):
        InterlacingSet((3, 3), LEFT)
    with pytest.raises(ValueError):
        InterlacingSet((1, 2), "middle")


def test_integer_root_and_irreducibility():
    assert has_integer_root(P("x^2 - 5x + 6"))
    assert not has_integer_root(OCTIC_F)
    assert irreducibility_evidence(OCTIC_F) == "irreducible mod 13"
    assert irreducibility_evidence(P("x^4 - 49x^3 + 632x^2 - 777x + 1")).startswith("factor degrees mod")
    assert irreducibility_evidence(P("x^2 - 3x + 1") * P("x^2 - 7x + 11")) is None


roots = st.lists(st.integers(1, 40), min_size=1, max_size=4, unique=True)


@given(roots, st.integers(0, 3))
def test_left_exists_iff_right_exists(rs, shift):
    # product of quadratics with roots c +- sqrt(2), c = 2r + shift
    H = IntPolynomial((1,))
    for r in sorted(rs):
        c = 2 * r + shift
        H = H * P(f"x^2 - {2 * c}x + {c * c - 2}")
    try:
        s = squared_spectrum(H)
    except ValueError:
        return  # repeated or non-positive roots
    assert (find_interlacing(s, LEFT) is None) == (find_interlacing(s, RIGHT) is None)
    for side in (LEFT, RIGHT):
        for ks in enumerate_interlacing(s, side, EnumBudget(max_k=s.least_above(s.n - 1) + 3, max_sets=50)):
            signs = [(H(k) > 0) - (H(k) < 0) for k in ks]
            assert all(a == -b for a, b in zip(signs, signs[1:]))
            assert signs[-1] == (1 if side == RIGHT else -1)


@given(st.lists(st.integers(-12, 12), min_size=2, max_size=4))
def test_squares_of_even_polynomial(cs):
    F = IntPolynomial(tuple(cs) + (1,))
    if F(0) == 0 or F.degree < 1:
        return
    from arboreal.poly import integer_poly_gcd
    if integer_poly_gcd(F, F.derivative()).degree > 0:
        return
    assert squares_min_poly(F.substitute_power(2)) == F


def test_squares_min_poly_numeric():
    f = P("x^3 + x^2 - 2x - 1")
    F = squares_min_poly(f)
    # positive and negative roots of f: refine |root| and check F at its square
    for g in (f, f.compose_neg()):
        for iv in isolate_positive_roots(g):
            r = refine_interval(g, iv, Fraction(1, 10 ** 9)).midpoint
            assert abs(float(F(r * r))) < 1e-6
