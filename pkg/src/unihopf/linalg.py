"""Exact linear algebra on sparse rows.

Rows are dicts mapping integer column indices to coefficients. Rank uses fraction-free elimination
over the integers (each row is scaled to integers first and kept primitive);
solving uses Fractions.
"""

from fractions import Fraction
from math import gcd, lcm

__all__ = ["rank", "SparseEchelon", "solve_in_span"]


def _integer_row(row):
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    return {k: int(v * den) for k, v in row.items() if v != 0}


def _primitive(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


def rank(rows):
    """Rank of a list of sparse rows, by fraction-free elimination."""
    pivots = {}  # column -> integer row with that leading column
    r = 0
    for row in rows:
        v = _integer_row(row)
        while v:
            col = min(v)
            piv = pivots.get(col)
            if piv is None:
                pivots[col] = _primitive(v)
                r += 1
                break
            a, b = piv[col], v[col]
            out = {k: a * x for k, x in v.items()}
            for k, x in piv.items():
                y = out.get(k, 0) - b * x
                if y:
                    out[k] = y
                else:
                    out.pop(k, None)
            v = _primitive(out)
    return r


class SparseEchelon:
    """Incremental reduced echelon form over Q that remembers how each pivot
    row is written in terms of the rows that were added."""

    def __init__(self):
        self.pivots = {}  # column -> (row with 1 at column, combination)
        self.count = 0

    def reduce(self, row):
        v = {k: Fraction(x) for k, x in row.items() if x != 0}
        comb = {}
        changed = True
        while changed:
            changed = False
            for col in list(v):
                if col in v and col in self.pivots:
                    c = v[col]
                    prow, pcomb = self.pivots[col]
                    for k, x in prow.items():
                        y = v.get(k, 0) - c * x
                        if y:
                            v[k] = y
                        else:
                            v.pop(k, None)
                    for k, x in pcomb.items():
                        y = comb.get(k, 0) - c * x
                        if y:
                            comb[k] = y
                        else:
                            comb.pop(k, None)
                    changed = True
        return v, comb

    def add(self, row, name):
        """Add a row; returns False when it is dependent on earlier rows."""
        v, comb = self.reduce(row)
        comb[name] = comb.get(name, 0) + 1
        if not v:
            return False
        col = min(v)
        c = v[col]
        v = {k: x / c for k, x in v.items()}
        comb = {k: x / c for k, x in comb.items()}
        for other, (prow, pcomb) in list(self.pivots.items()):
            if col in prow:
                d = prow[col]
                for k, x in v.items():
                    y = prow.get(k, 0) - d * x
                    if y:
                        prow[k] = y
                    else:
                        prow.pop(k, None)
                for k, x in comb.items():
                    y = pcomb.get(k, 0) - d * x
                    if y:
                        pcomb[k] = y
                    else:
                        pcomb.pop(k, None)
        self.pivots[col] = (v, comb)
        self.count += 1
        return True

    def express(self, row):
        """Coefficients writing ``row`` in terms of the added rows, or None."""
        v, comb = self.reduce(row)
        if v:
            return None
        return {k: -x for k, x in comb.items() if x}


def solve_in_span(rows, target):
    """Write ``target`` as a combination of named ``rows`` ({name: row})."""
    ech = SparseEchelon()
    for name, row in rows.items():
        ech.add(row, name)
    return ech.express(target)
