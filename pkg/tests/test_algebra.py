from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from unihopf.algebra import (
    FFElem,
    IntPoly,
    TruncSeries,
    ff_arith,
    interpolate_poly,
    is_prime,
    poly_eval,
    series_invert,
)


def test_poly_eval_examples():
    assert poly_eval(IntPoly([1, 3, 1]), 1) == 5
    assert poly_eval(IntPoly([]), 7) == 0
    assert poly_eval(IntPoly([0, 1, 4, 2]), 1) == 7
    assert IntPoly([0, 1, 4, 2])(Fraction(1, 2)) == Fraction(1, 2) + 1 + Fraction(1, 4)


def test_intpoly_format_and_arith():
    assert str(IntPoly([0, 1, 4, 2])) == "2t^3+4t^2+t"
    assert str(IntPoly([])) == "0"
    assert str(IntPoly([1, -1])) == "-t+1"
    p = IntPoly([1, 1])
    assert p * p == IntPoly([1, 2, 1])
    assert (p - p).is_zero()
    assert p**3 == IntPoly([1, 3, 3, 1])
    with pytest.raises((TypeError, ValueError)):
        IntPoly([Fraction(1, 2)])


def test_geometric_series():
    s = series_invert(TruncSeries([1, -1], 8))
    assert list(s) == [1] * 9


def test_bell_from_atomic():
    s = TruncSeries([1, -1, -1, -2, -6, -22, -92], 6)
    assert list(series_invert(s)) == [1, 1, 2, 5, 15, 52, 203]


def test_invert_rejects_nonunit():
    with pytest.raises(ValueError):
        series_invert(TruncSeries([0, 1], 4))


def test_truncation_mismatch():
    with pytest.raises(ValueError):
        TruncSeries([1], 3) * TruncSeries([1], 4)


small = st.integers(-20, 20)


@given(st.lists(small, min_size=1, max_size=7))
def test_invert_roundtrip(tail):
    s = TruncSeries([1] + tail, len(tail))
    assert s * series_invert(s) == TruncSeries.one(len(tail))


@given(small, st.integers(1, 20), small, st.integers(1, 20))
def test_rational_exact(a, b, c, d):
    assert (Fraction(a, b) + Fraction(c, d)) * (b * d) == a * d + c * b


def test_interpolate_examples():
    assert interpolate_poly([(1, 1), (2, 2), (4, 4), (6, 6)], 3) == IntPoly([0, 1])
    c4 = IntPoly([0, 1, 4, 2])
    pts = [(t, c4(t)) for t in (1, 2, 4, 6)]
    assert interpolate_poly(pts, 3) == c4
    with pytest.raises(ValueError):
        interpolate_poly(pts[:3], 3)
    with pytest.raises(ValueError):
        interpolate_poly([(1, 1), (1, 2)], 1)
    with pytest.raises(ValueError):
        interpolate_poly([(0, 0), (1, 1), (2, 5)], 1)
    with pytest.raises(ValueError):
        interpolate_poly([(0, 0), (2, 1)], 1)
    assert interpolate_poly([(0, 0), (2, 1)], 1, integral=False) == (0, Fraction(1, 2))


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=5))
def test_interpolate_left_inverse(coeffs):
    p = IntPoly(coeffs)
    d = max(p.degree, 0)
    pts = [(x, p(x)) for x in range(d + 2)]
    assert interpolate_poly(pts, d) == p


def test_ff_examples():
    assert ff_arith(FFElem(2, 5), None, "inv") == FFElem(3, 5)
    assert ff_arith(FFElem(1, 2), FFElem(1, 2), "add") == FFElem(0, 2)
    assert ff_arith(FFElem(4, 7), FFElem(2, 7), "mul") == FFElem(1, 7)
    with pytest.raises(ZeroDivisionError):
        FFElem(0, 3).inverse()
    with pytest.raises(ValueError):
        FFElem(1, 3) + FFElem(1, 5)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_field_axioms(p):
    els = [FFElem(v, p) for v in range(p)]
    zero, one = FFElem(0, p), FFElem(1, p)
    for a in els:
        assert a + zero == a and a * one == a
        assert a + (-a) == zero
        if a:
            assert a * a.inverse() == one
        for b in els:
            assert a + b == b + a and a * b == b * a
            for c in els:
                assert (a + b) + c == a + (b + c)
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
