from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from unihopf.algebra import IntPoly, TruncSeries
from unihopf.enumerative import (
    C_TABLE,
    bell_and_atomic,
    bell_numbers,
    c_sequence,
    check_counting2,
    check_counting_inequality,
    class_counts,
    fit_conjecture,
    k_polys_from_table,
    lagrange_quotient_check,
    superclass_count_formula,
)

K2 = [1, 1, 2, 5, 16, 61, 275]


def test_bell_and_atomic():
    B, A = bell_and_atomic(8)
    assert B[:7] == [1, 1, 2, 5, 15, 52, 203]
    assert A[1:7] == [1, 1, 2, 6, 22, 92]
    assert A[0] == 0
    B12, A12 = bell_and_atomic(12)
    assert B12[:9] == B and A12[:9] == A
    assert B12[12] == 4213597
    with pytest.raises(ValueError):
        bell_and_atomic(13)


def test_bell_atomic_identity():
    B, A = bell_and_atomic(10)
    lhs = TruncSeries(B, 10)
    rhs = TruncSeries([1] + [-a for a in A[1:]], 10).invert()
    assert lhs == rhs


def test_class_counts_p2():
    T = class_counts(2, 6)
    assert T.k == K2
    assert T.superclasses == bell_numbers(6)
    assert all(r["classes"] >= r["superclasses"] >= 1 for r in T.rows())


def test_k4_at_3_matches_table():
    k = class_counts(3, 4).k
    polys = k_polys_from_table(4)
    assert polys[4] == IntPoly([1, 6, 7, 2])
    assert k == [poly(2) for poly in polys]


def test_k_from_table_at_p2():
    polys = k_polys_from_table(6)
    assert [poly(1) for poly in polys] == K2
    with pytest.raises(ValueError):
        k_polys_from_table(7)


@pytest.mark.parametrize("n,q", [(3, 3), (4, 3), (4, 5), (3, 7)])
def test_superclass_formula_matches_census(n, q):
    T = class_counts(q, n)
    assert T.superclasses[n] == superclass_count_formula(n, q)


def test_c_sequence():
    c = c_sequence(K2)
    table = [C_TABLE[n](1) for n in range(1, 7)]
    assert c[1:] == table == [1, 1, 2, 7, 29, 145]
    assert all(x >= 0 for x in c)
    with pytest.raises(ValueError):
        c_sequence([2, 1])


def test_c_sequence_at_p3_matches_table():
    c = c_sequence(class_counts(3, 5).k)
    assert c[1:] == [C_TABLE[n](2) for n in range(1, 6)]


@given(st.lists(st.integers(0, 50), min_size=1, max_size=8))
def test_c_sequence_inverts(cs):
    N = len(cs)
    k = TruncSeries([1] + [-c for c in cs], N).invert()
    assert c_sequence(list(k))[1:] == cs


def test_counting_inequality():
    rep = check_counting_inequality(2, 6)
    assert rep.ok
    row6 = rep.rows[-1]
    assert (row6["lhs"], row6["rhs"]) == (275, 213)
    assert row6["coefficients"] == [92, 22, 6, 2, 1, 1]
    assert rep.rows[1]["rhs"] == 2
    assert all(r["margin"] >= 0 for r in rep.rows)
    assert check_counting_inequality(3, 5).ok


def test_counting2():
    rep = check_counting2(2, 6)
    assert rep.ok
    assert (rep.rows[1]["lhs"], rep.rows[1]["rhs"]) == (2, 2)
    assert check_counting2(3, 5).ok


@pytest.mark.parametrize(
    "n,primes,want",
    [(2, [2, 3], IntPoly([0, 1])), (3, [2, 3, 5], IntPoly([0, 1, 1])), (4, [2, 3, 5, 7], IntPoly([0, 1, 4, 2]))],
)
def test_fit(n, primes, want):
    res = fit_conjecture(n, primes)
    assert res.poly == want and res.ok
    assert res.table_match
    assert str(res.poly) == str(C_TABLE[n])


def test_fit_overdetermined_and_insufficient():
    res = fit_conjecture(2, [2, 3, 5])
    assert res.overdetermined and res.ok
    res = fit_conjecture(2, [2])
    assert res.poly == IntPoly([1]) and not res.overdetermined
    assert res.table_match is False and not res.ok


def test_lagrange():
    T = class_counts(2, 6)
    B = bell_numbers(6)
    cf, scf, lp = (TruncSeries(x, 6) for x in (T.k, T.superclasses, B))
    assert [r["value"] for r in lagrange_quotient_check(scf, lp).rows] == [1, 0, 0, 0, 0, 0, 0]
    rep = lagrange_quotient_check(cf, lp)
    assert rep.ok
    assert lagrange_quotient_check(cf, scf).ok
    assert [r["value"] for r in lagrange_quotient_check(cf, cf).rows] == [1] + [0] * 6
    bad = lagrange_quotient_check(TruncSeries([1, 0, 0], 2), TruncSeries([1, 1, 0], 2))
    assert not bad.ok


def test_lagrange_flags_fractions():
    rep = lagrange_quotient_check(TruncSeries([1, 1], 1), TruncSeries([2, 0], 1))
    assert rep.rows[0]["value"] == Fraction(1, 2) and not rep.ok
