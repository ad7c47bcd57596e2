"""Exact arithmetic: integer polynomials, truncated power series,
interpolation and prime-field elements.

Rationals are :class:`fractions.Fraction` throughout; nothing here touches
floating point.
"""

from fractions import Fraction
from functools import total_ordering
from itertools import zip_longest

__all__ = [
    "Fraction",
    "IntPoly",
    "TruncSeries",
    "FFElem",
    "ff_arith",
    "poly_eval",
    "series_invert",
    "interpolate_poly",
    "is_prime",
]


def is_prime(p):
    if not isinstance(p, int) or p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class IntPoly:
    """Polynomial in one variable with integer coefficients, index = degree."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var="t"):
        cs = [int(c) if not isinstance(c, int) else c for c in coeffs]
        for c, orig in zip(cs, coeffs):
            if c != orig:
                raise ValueError("non-integer coefficient %r" % (orig,))
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def constant(cls, c, var="t"):
        return cls((c,), var)

    @classmethod
    def monomial(cls, k, c=1, var="t"):
        return cls((0,) * k + (c,), var)

    @property
    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self):
        return not self.coeffs

    def __call__(self, x):
        return poly_eval(self, x)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly((other,), self.var)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return IntPoly(
            [a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)],
            self.var,
        )

    __radd__ = __add__

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntPoly((), self.var)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = IntPoly((1,), self.var)
        for _ in range(k):
            out = out * self
        return out

    def __str__(self):
        # descending degree, explicit coefficients: 2t^3+4t^2+t
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = self.var if k == 1 else "%s^%d" % (self.var, k)
                body = mono if a == 1 else "%d%s" % (a, mono)
            parts.append((sign, body))
        s = "".join(sg + b for sg, b in parts)
        return s[1:] if s[0] == "+" else s

    def __repr__(self):
        return "IntPoly(%r)" % (list(self.coeffs),)


def poly_eval(p, x):
    """Horner evaluation; exact for int and Fraction arguments."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


class TruncSeries:
    """Power series truncated after degree ``order``.

    Coefficients may be ints, Fractions or IntPolys. Binary operations
    require equal truncation orders.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order):
        cs = list(coeffs)[: order + 1]
        cs += [0] * (order + 1 - len(cs))
        self.coeffs = tuple(cs)
        self.order = order

    @classmethod
    def one(cls, order):
        return cls([1], order)

    def _check(self, other):
        if not isinstance(other, TruncSeries):
            raise TypeError("expected a TruncSeries")
        if other.order != self.order:
            raise ValueError(
                "truncation mismatch: order %d vs %d" % (self.order, other.order)
            )

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __add__(self, other):
        self._check(other)
        return TruncSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __sub__(self, other):
        self._check(other)
        return TruncSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __neg__(self):
        return TruncSeries([-a for a in self.coeffs], self.order)

    def __mul__(self, other):
        self._check(other)
        n = self.order
        out = []
        for k in range(n + 1):
            acc = 0
            for i in range(k + 1):
                a = self.coeffs[i]
                b = other.coeffs[k - i]
                if a != 0 and b != 0:
                    acc = acc + a * b
            out.append(acc)
        return TruncSeries(out, n)

    def invert(self):
        return series_invert(self)

    def __truediv__(self, other):
        return self * series_invert(other)

    def __repr__(self):
        return "TruncSeries(%r, order=%d)" % (list(self.coeffs), self.order)


def series_invert(s):
    """Multiplicative inverse of ``s`` up to its truncation order."""
    c0 = s.coeffs[0]
    if c0 == 1:
        inv0 = 1
    elif isinstance(c0, IntPoly):
        if c0 == -1:
            inv0 = -1
        else:
            raise ValueError("constant term %s is not a unit" % c0)
    elif c0 == 0:
        raise ValueError("constant term is zero; series is not invertible")
    else:
        inv0 = Fraction(1) / c0
    out = [inv0]
    for n in range(1, s.order + 1):
        acc = 0
        for k in range(1, n + 1):
            a = s.coeffs[k]
            if a != 0:
                acc = acc + a * out[n - k]
        out.append(-acc * inv0)
    return TruncSeries(out, s.order)


def interpolate_poly(points, degree_bound, integral=True):
    """Polynomial of degree <= degree_bound through ``points``.

    Returns an :class:`IntPoly` when ``integral`` is set (raising if some
    coefficient is not an integer), otherwise a tuple of Fractions in
    ascending degree.
    """
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate abscissae")
    m = degree_bound + 1
    if len(pts) < m:
        raise ValueError(
            "insufficient data: %d points for degree bound %d" % (len(pts), degree_bound)
        )
    # Newton divided differences on the first m points.
    base = pts[:m]
    table = [y for _, y in base]
    newton = [table[0]]
    for level in range(1, m):
        table = [
            (table[i + 1] - table[i]) / (base[i + level][0] - base[i][0])
            for i in range(len(table) - 1)
        ]
        newton.append(table[0])
    coeffs = [Fraction(0)] * m
    basis = [Fraction(1)]  # prod (t - x_i), ascending coefficients
    for k, a in enumerate(newton):
        for i, b in enumerate(basis):
            coeffs[i] += a * b
        xk = base[k][0]
        nxt = [Fraction(0)] * (len(basis) + 1)
        for i, b in enumerate(basis):
            nxt[i + 1] += b
            nxt[i] -= xk * b
        basis = nxt
    for x, y in pts[m:]:
        val = sum(c * x**i for i, c in enumerate(coeffs))
        if val != y:
            raise ValueError("inconsistent data at x=%s: expected %s, got %s" % (x, val, y))
    if not integral:
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        return tuple(coeffs)
    bad = [c for c in coeffs if c.denominator != 1]
    if bad:
        raise ValueError("non-integer coefficient %s" % bad[0])
    return IntPoly([int(c) for c in coeffs])


@total_ordering
class FFElem:
    """Element of the prime field F_p."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        if not is_prime(p):
            raise ValueError("modulus %r is not prime" % (p,))
        self.value = value % p
        self.p = p

    def _same(self, other):
        if isinstance(other, int):
            return FFElem(other, self.p)
        if not isinstance(other, FFElem):
            raise TypeError("expected FFElem")
        if other.p != self.p:
            raise ValueError("modulus mismatch: %d vs %d" % (self.p, other.p))
        return other

    def __add__(self, other):
        return FFElem(self.value + self._same(other).value, self.p)

    def __sub__(self, other):
        return FFElem(self.value - self._same(other).value, self.p)

    def __mul__(self, other):
        return FFElem(self.value * self._same(other).value, self.p)

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self):
        return FFElem(-self.value, self.p)

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError("zero has no inverse in F_%d" % self.p)
        return FFElem(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        return self * self._same(other).inverse()

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other % self.p
        if not isinstance(other, FFElem):
            return NotImplemented
        return self.p == other.p and self.value == other.value

    def __lt__(self, other):
        other = self._same(other)
        return self.value < other.value

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return "FFElem(%d, %d)" % (self.value, self.p)


def ff_arith(a, b, op):
    """Field operation by name: ``add``, ``mul``, ``inv`` (unary) or ``neg`` (unary)."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    if op == "neg":
        return -a
    raise ValueError("unknown operation %r" % (op,))
