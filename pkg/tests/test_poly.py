from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from arboreal.poly import (
    IntPolynomial,
    PolynomialSyntaxError,
    RationalInterval,
    cauchy_bound,
    count_roots,
    integer_poly_gcd,
    isolate_positive_roots,
    parse_polynomial,
    poly_arith,
    refine_interval,
    sign_at,
    sign_at_integer,
    squarefree_part,
    sturm_sequence,
)

P = parse_polynomial
OCTIC_F = P("x^4 - 44x^3 + 567x^2 - 2660x + 3564")
QUARTIC_23 = P("x^4 - 49x^3 + 632x^2 - 777x + 1")

coeff_lists = st.lists(st.integers(-50, 50), min_size=1, max_size=9)


def test_zero_is_canonical():
    assert IntPolynomial((0, 0, 0)) == IntPolynomial(())
    assert IntPolynomial(()).degree == -1
    assert not IntPolynomial((0,))


def test_arith_examples():
    assert poly_arith(P("x-2"), P("x+2"), "mul") == P("x^2-4")
    q, r = poly_arith(P("x^4-3x^2+1"), P("x^2-x-1"), "divrem")
    assert r == IntPolynomial(())
    assert q * P("x^2-x-1") == P("x^4-3x^2+1")
    assert poly_arith(P("x^2"), P("x"), "divrem") == (P("x"), IntPolynomial(()))
    assert poly_arith(P("x^2+1"), P("x"), "sub") == P("x^2-x+1")


def test_divide_by_zero():
    with pytest.raises(ZeroDivisionError):
        P("x^2").divrem(IntPolynomial(()))


def test_gcd_examples():
    assert integer_poly_gcd(P("x^2-1"), P("x^2-2x+1")) == P("x-1")
    assert integer_poly_gcd(QUARTIC_23, QUARTIC_23.derivative()) == P("1")
    assert integer_poly_gcd(IntPolynomial(()), P("x^3")) == P("x^3")


def test_squarefree_examples():
    assert squarefree_part(P("x^2-4x+4")) == P("x-2")
    assert squarefree_part(P("x^3")) == P("x")
    assert squarefree_part(P("x^2-1") * P("x-1")) == P("x^2-1")


def test_isolation_examples():
    ivs = isolate_positive_roots(OCTIC_F)
    approx = [2.2148, 6.8136, 9.1442, 25.8274]
    assert len(ivs) == 4
    for iv, r in zip(ivs, approx):
        fine = refine_interval(OCTIC_F, iv, Fraction(1, 10 ** 6))
        assert abs(float(fine.midpoint) - r) < 1e-3
    assert [2 in iv for iv in isolate_positive_roots(P("x-2"))] == [True]
    assert isolate_positive_roots(P("x^2+1")) == []


def test_isolation_rejects_square():
    with pytest.raises(ValueError):
        isolate_positive_roots(P("x^2-4x+4"))


def test_refine_examples():
    iv = refine_interval(P("x^2-2"), RationalInterval(Fraction(1), Fraction(2)), Fraction(1, 8))
    assert (iv.lo, iv.hi) == (Fraction(11, 8), Fraction(23, 16))
    iv2 = refine_interval(P("x-2"), RationalInterval(Fraction(1), Fraction(3)), Fraction(1, 2))
    assert iv2.width <= Fraction(1, 2) and 2 in iv2
    orig = RationalInterval(Fraction(1), Fraction(2))
    assert refine_interval(P("x^2-2"), orig, Fraction(5)) == orig


def test_sign_at_integer_examples():
    assert sign_at_integer(OCTIC_F, 3) == -1 and OCTIC_F(3) == -420
    assert sign_at_integer(P("x-2"), 2) == 0
    assert QUARTIC_23(1) == -192 and sign_at_integer(QUARTIC_23, 1) == -1


def test_parse_formats():
    assert P("x^2 - 3x + 1").coeffs == (1, -3, 1)
    assert P("3564,0,-2660,0,567,0,-44,0,1") == P("x^8-44x^6+567x^4-2660x^2+3564")
    assert P("  2*x^3 -x ") == IntPolynomial((0, -1, 0, 2))
    assert P("-x") == IntPolynomial((0, -1))
    assert P("7") == IntPolynomial((7,))


@pytest.mark.parametrize("bad", ["x^2 - 0.5", "x^^2", "", "3,,1", "x^2 + y", "1.5,2"])
def test_parse_rejects(bad):
    with pytest.raises(PolynomialSyntaxError):
        P(bad)


def test_parse_error_has_position():
    with pytest.raises(PolynomialSyntaxError) as exc:
        P("x^2 - 0.5")
    assert exc.value.position >= 0


@given(coeff_lists)
def test_parse_roundtrip(cs):
    p = IntPolynomial(tuple(cs))
    if p:
        assert P(str(p)) == p
        assert P(p.to_coeff_string()) == p


@given(coeff_lists, coeff_lists)
def test_gcd_divides_both(a, b):
    pa, pb = IntPolynomial(tuple(a)), IntPolynomial(tuple(b))
    if not pa and not pb:
        return
    g = integer_poly_gcd(pa, pb)
    assert g.lc > 0 and g.content() == 1
    for p in (pa, pb):
        if p:
            # pseudo-division: lc(g)^(deg p - deg g + 1) * p is an exact multiple of g
            scale = g.lc ** max(0, p.degree - g.degree + 1)
            q, r = (p * scale).divrem(g)
            assert not r and q * g == p * scale


@given(coeff_lists)
def test_isolation_matches_sturm_count(cs):
    p = IntPolynomial(tuple(cs))
    if p.degree < 1:
        return
    F = squarefree_part(p)
    if F.degree < 1:
        return
    ivs = isolate_positive_roots(F)
    assert len(ivs) == count_roots(F, 0, cauchy_bound(F))
    for a, b in zip(ivs, ivs[1:]):
        assert a.hi <= b.lo
    for iv in ivs:
        assert iv.lo > 0
        assert sign_at(F, iv.lo) * sign_at(F, iv.hi) < 0


@given(st.lists(st.integers(-20, 20), min_size=2, max_size=6), st.integers(1, 20))
def test_refine_is_monotone(cs, shrink):
    p = IntPolynomial(tuple(cs))
    if p.degree < 1:
        return
    F = squarefree_part(p)
    if F.degree < 1:
        return
    for iv in isolate_positive_roots(F):
        out = refine_interval(F, iv, iv.width / (shrink + 1))
        assert iv.lo <= out.lo < out.hi <= iv.hi
        assert out.width <= iv.width / (shrink + 1)
        s_lo, s_hi = sign_at(F, out.lo), sign_at(F, out.hi)
        assert s_lo * s_hi < 0 or 0 in (s_lo, s_hi) and out.width > 0


@given(coeff_lists, st.integers(-100, 100), st.integers(1, 30))
def test_sign_at_agrees_with_fraction_eval(cs, num, den):
    p = IntPolynomial(tuple(cs))
    x = Fraction(num, den)
    v = sum(Fraction(c) * x ** i for i, c in enumerate(p.coeffs))
    assert sign_at(p, x) == (v > 0) - (v < 0)
    assert sign_at_integer(p, num) == (p(num) > 0) - (p(num) < 0)


def test_sturm_sequence_ends_constant():
    seq = sturm_sequence(OCTIC_F)
    assert seq[0] == OCTIC_F and seq[-1].degree == 0
