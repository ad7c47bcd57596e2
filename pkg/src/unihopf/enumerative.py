"""Counting sequences for unitriangular groups and the identities they satisfy.

k_n(q) is the number of conjugacy classes of U_n(F_q); c_n(q) is defined by
sum k_n x^n = 1 / (1 - sum c_n x^n). B_n and A_n count set partitions and
atomic set partitions of [n].
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .algebra import IntPoly, TruncSeries, interpolate_poly, series_invert
from .census import DEFAULT_BUDGET, get_census
from .partitions import arcs, atomic_partitions, set_partitions

__all__ = [
    "C_TABLE",
    "CountTable",
    "Report",
    "FitResult",
    "bell_numbers",
    "bell_and_atomic",
    "class_counts",
    "superclass_count_formula",
    "c_sequence",
    "k_polys_from_table",
    "check_counting_inequality",
    "check_counting2",
    "fit_conjecture",
    "lagrange_quotient_check",
]

# c_n as polynomials in t = q - 1, n = 1..6
C_TABLE = {
    1: IntPoly([1]),
    2: IntPoly([0, 1]),
    3: IntPoly([0, 1, 1]),
    4: IntPoly([0, 1, 4, 2]),
    5: IntPoly([0, 1, 9, 14, 5]),
    6: IntPoly([0, 1, 16, 54, 55, 18, 1]),
}

ENUMERATION_LIMIT = 8


def bell_numbers(N):
    """B_0..B_N via the Bell triangle."""
    out = [1]
    row = [1]
    for _ in range(N):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        out.append(row[-1])
        row = nxt
    return out[: N + 1]


def bell_and_atomic(N):
    """(B_0..B_N, A_0..A_N) with A_0 = 0.

    Both sequences are enumerated directly up to size 8 and obtained from the
    Bell triangle and from series inversion beyond; where both are
    available they must agree.
    """
    if N > 12:
        raise ValueError("N must be at most 12")
    B = bell_numbers(N)
    inv = series_invert(TruncSeries(B, N))
    A_inv = [0] + [-inv[n] for n in range(1, N + 1)]
    for n in range(min(N, ENUMERATION_LIMIT) + 1):
        order = tuple(range(n))
        b = sum(1 for _ in set_partitions(order))
        a = len(atomic_partitions(order)) if n else 0
        if b != B[n]:
            raise AssertionError("Bell mismatch at n=%d: %d vs %d" % (n, b, B[n]))
        if a != A_inv[n]:
            raise AssertionError("atomic mismatch at n=%d: %d vs %d" % (n, a, A_inv[n]))
    return B, [int(a) for a in A_inv]


def superclass_count_formula(n, q):
    """Number of arc diagrams on [n] over F_q: sum over X of (q-1)^arcs."""
    order = tuple(range(n))
    return sum((q - 1) ** len(arcs(X, order)) for X in set_partitions(order))


@dataclass
class CountTable:
    p: int
    n_max: int
    k: list
    superclasses: list

    def rows(self):
        return [
            {"n": n, "classes": self.k[n], "superclasses": self.superclasses[n]}
            for n in range(self.n_max + 1)
        ]


def class_counts(p, n_max, cache_dir=None, budget=DEFAULT_BUDGET):
    """k_n(p) and superclass counts for n <= n_max from censuses.

    Superclass counts are checked against the arc-diagram formula.
    """
    k, sc = [], []
    for n in range(n_max + 1):
        cen = get_census(n, p, cache_dir=cache_dir, budget=budget)
        k.append(cen.num_classes)
        sc.append(cen.num_superclasses)
        f = superclass_count_formula(n, p)
        if f != cen.num_superclasses:
            raise AssertionError(
                "superclass count mismatch at n=%d, p=%d: census %d, formula %d"
                % (n, p, cen.num_superclasses, f)
            )
        if not k[-1] >= sc[-1] >= 1:
            raise AssertionError("class count below superclass count at n=%d" % n)
    return CountTable(p, n_max, k, sc)


def c_sequence(k):
    """c_0..c_N (c_0 = 0) from k_0..k_N, with k_0 = 1."""
    ks = list(k)
    if ks[0] != 1:
        raise ValueError("k_0 must be 1")
    N = len(ks) - 1
    inv = series_invert(TruncSeries(ks, N))
    out = [0]
    for n in range(1, N + 1):
        c = -inv[n]
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise ValueError("non-integer c_%d = %s" % (n, c))
            c = int(c)
        out.append(c)
    return out


def k_polys_from_table(N):
    """k_0..k_N as polynomials in t, by inverting 1 - sum of the tabulated c_n."""
    if N > max(C_TABLE):
        raise ValueError("c_n is tabulated only for n <= %d" % max(C_TABLE))
    s = TruncSeries([IntPoly([1])] + [-C_TABLE[n] for n in range(1, N + 1)], N)
    return [c if isinstance(c, IntPoly) else IntPoly([c]) for c in series_invert(s)]


@dataclass
class Report:
    title: str
    rows: list = field(default_factory=list)

    @property
    def ok(self):
        return all(r["ok"] for r in self.rows)

    def lines(self):
        return [r["text"] for r in self.rows]


def check_counting_inequality(p, n_max, cache_dir=None, budget=DEFAULT_BUDGET):
    """k_n >= sum_{i<n} A_{n-i} k_i for n <= n_max."""
    k = class_counts(p, n_max, cache_dir, budget).k
    _, A = bell_and_atomic(max(n_max, 1))
    rep = Report("class count inequality at p=%d" % p)
    for n in range(1, n_max + 1):
        coeffs = [A[n - i] for i in range(n)]
        rhs = sum(a * k[i] for i, a in enumerate(coeffs))
        ok = k[n] >= rhs
        rep.rows.append(
            {
                "n": n,
                "lhs": k[n],
                "rhs": rhs,
                "margin": k[n] - rhs,
                "coefficients": coeffs,
                "ok": ok,
                "text": "n=%d: %d %s %d" % (n, k[n], "≥" if ok else "<", rhs),
            }
        )
    return rep


def check_counting2(p, n_max, cache_dir=None, budget=DEFAULT_BUDGET):
    """q^C(n,2) >= sum_{i=1}^n q^C(n-i,2) c_i for n <= n_max."""
    k = class_counts(p, n_max, cache_dir, budget).k
    c = c_sequence(k)
    rep = Report("order inequality at p=%d" % p)
    for n in range(1, n_max + 1):
        lhs = p ** comb(n, 2)
        rhs = sum(p ** comb(n - i, 2) * c[i] for i in range(1, n + 1))
        ok = lhs >= rhs
        rep.rows.append(
            {
                "n": n,
                "lhs": lhs,
                "rhs": rhs,
                "margin": lhs - rhs,
                "ok": ok,
                "text": "n=%d: %d %s %d" % (n, lhs, "≥" if ok else "<", rhs),
            }
        )
    return rep


@dataclass
class FitResult:
    n: int
    points: list
    poly: IntPoly = None
    error: str = None
    nonnegative: bool = False
    # more points than coefficients, so the fit was tested on spare data
    overdetermined: bool = False
    table_match: bool = None

    @property
    def ok(self):
        return self.poly is not None and self.nonnegative and self.table_match is not False


def fit_conjecture(n, primes, cache_dir=None, budget=DEFAULT_BUDGET):
    """Interpolate c_n(q) in t = q - 1 from censuses at the given primes."""
    primes = sorted(set(primes))
    points = []
    for p in primes:
        k = [get_census(m, p, cache_dir=cache_dir, budget=budget).num_classes for m in range(n + 1)]
        points.append((p - 1, c_sequence(k)[n]))
    res = FitResult(n, points)
    try:
        poly = interpolate_poly(points, len(points) - 1)
    except ValueError as e:
        res.error = str(e)
        return res
    res.poly = poly
    res.nonnegative = all(c >= 0 for c in poly.coeffs)
    res.overdetermined = len(points) > poly.degree + 1
    if n in C_TABLE:
        res.table_match = poly == C_TABLE[n]
    return res


def lagrange_quotient_check(numerator, denominator, title="quotient"):
    """The quotient series must have nonnegative integer coefficients."""
    q = numerator * series_invert(denominator)
    rep = Report(title)
    for n, c in enumerate(q):
        ok = Fraction(c).denominator == 1 and c >= 0
        rep.rows.append({"n": n, "value": c, "ok": ok, "text": "n=%d: %s" % (n, c)})
    return rep
