"""Unitriangular matrices over F_p relative to a linear order of the labels."""

from itertools import product

from .algebra import is_prime
from .orders import is_segment, restrict_order

__all__ = [
    "UniMatrix",
    "multiply",
    "inverse",
    "direct_sum",
    "principal_minor",
    "homomorphism_witness",
    "canonical_superclass_rep",
    "is_row_column_sparse",
    "graph_of",
    "enumerate_group",
    "upper_positions",
]


def upper_positions(n):
    """Strictly upper positions (a, b), a < b, in row-major order."""
    return [(a, b) for a in range(n) for b in range(a + 1, n)]


class UniMatrix:
    """An ``order``-unitriangular matrix with entries in F_p.

    Only the nonzero strictly-upper entries are stored, as a sorted tuple of
    ``((i, j), value)`` with labels ``i`` before ``j`` in ``order``.
    """

    __slots__ = ("order", "p", "entries", "_hash")

    def __init__(self, order, p, entries=()):
        self.order = tuple(order)
        self.p = p
        pos = {a: k for k, a in enumerate(self.order)}
        if len(pos) != len(self.order):
            raise ValueError("order has repeated labels")
        if isinstance(entries, dict):
            entries = entries.items()
        clean = {}
        for (i, j), v in entries:
            if i not in pos or j not in pos:
                raise ValueError("entry (%r, %r) outside the ground" % (i, j))
            if pos[i] >= pos[j]:
                raise ValueError("entry (%r, %r) is not strictly upper" % (i, j))
            v %= p
            if v:
                clean[(i, j)] = v
        self.entries = tuple(
            sorted(clean.items(), key=lambda kv: (pos[kv[0][0]], pos[kv[0][1]]))
        )
        self._hash = hash((self.order, self.p, self.entries))

    @classmethod
    def identity(cls, order, p):
        return cls(order, p)

    @classmethod
    def elementary(cls, order, p, i, j, c=1):
        """Id + c E_ij."""
        return cls(order, p, {(i, j): c})

    @classmethod
    def from_rows(cls, order, p, rows):
        """Build from a full square matrix given in ``order`` coordinates."""
        n = len(order)
        ent = {}
        for a in range(n):
            if rows[a][a] % p != 1:
                raise ValueError("diagonal entry is not 1")
            for b in range(a):
                if rows[a][b] % p:
                    raise ValueError("nonzero entry below the diagonal")
            for b in range(a + 1, n):
                if rows[a][b] % p:
                    ent[(order[a], order[b])] = rows[a][b]
        return cls(order, p, ent)

    @classmethod
    def from_positions(cls, order, p, pos_entries):
        """Entries keyed by positions (a, b) in ``order``."""
        return cls(order, p, {(order[a], order[b]): v for (a, b), v in pos_entries.items()})

    @property
    def ground(self):
        return frozenset(self.order)

    @property
    def n(self):
        return len(self.order)

    def entry(self, i, j):
        if i == j:
            return 1
        return dict(self.entries).get((i, j), 0)

    def nonzero(self):
        return dict(self.entries)

    def rows(self):
        """Dense matrix in order coordinates (list of lists)."""
        pos = {a: k for k, a in enumerate(self.order)}
        n = self.n
        m = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
        for (i, j), v in self.entries:
            m[pos[i]][pos[j]] = v
        return m

    def is_identity(self):
        return not self.entries

    def relabel(self, mapping):
        return UniMatrix(
            tuple(mapping[a] for a in self.order),
            self.p,
            {(mapping[i], mapping[j]): v for (i, j), v in self.entries},
        )

    def __mul__(self, other):
        return multiply(self, other)

    def __eq__(self, other):
        if not isinstance(other, UniMatrix):
            return NotImplemented
        return (
            self._hash == other._hash
            and self.order == other.order
            and self.p == other.p
            and self.entries == other.entries
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        body = ", ".join("%r%r:%d" % (i, j, v) for (i, j), v in self.entries)
        return "UniMatrix(%s; p=%d; {%s})" % ("".join(map(str, self.order)), self.p, body)


def _same_ambient(U, V):
    if U.order != V.order or U.p != V.p:
        raise ValueError("matrices live in different groups")


def multiply(U, V):
    _same_ambient(U, V)
    n, p = U.n, U.p
    a, b = U.rows(), V.rows()
    prod = [[0] * n for _ in range(n)]
    for i in range(n):
        for k in range(i, n):
            prod[i][k] = sum(a[i][j] * b[j][k] for j in range(i, k + 1)) % p
    return UniMatrix.from_rows(U.order, p, prod)


def inverse(U):
    # (Id + N)^{-1} = sum_k (-N)^k, N nilpotent
    n, p = U.n, U.p
    rows = U.rows()
    N = [[(rows[i][j] if i != j else 0) for j in range(n)] for i in range(n)]
    acc = [[int(i == j) for j in range(n)] for i in range(n)]
    term = [row[:] for row in acc]
    for _ in range(n):
        term = [
            [-sum(term[i][k] * N[k][j] for k in range(n)) % p for j in range(n)]
            for i in range(n)
        ]
        acc = [[(acc[i][j] + term[i][j]) % p for j in range(n)] for i in range(n)]
    return UniMatrix.from_rows(U.order, p, acc)


def direct_sum(U, V, order):
    """Block combination of U (on S1) and V (on S2) inside U(S1 u S2, order)."""
    if U.p != V.p:
        raise ValueError("modulus mismatch")
    if U.ground & V.ground:
        raise ValueError("direct summands must have disjoint grounds")
    order = tuple(order)
    if set(order) != U.ground | V.ground:
        raise ValueError("order is not on the union of the grounds")
    if restrict_order(order, U.ground) != U.order or restrict_order(order, V.ground) != V.order:
        raise ValueError("summand orders are not restrictions of the ambient order")
    return UniMatrix(order, U.p, dict(U.entries + V.entries))


def principal_minor(U, S):
    S = frozenset(S)
    sub = restrict_order(U.order, S)
    return UniMatrix(sub, U.p, {ij: v for ij, v in U.entries if ij[0] in S and ij[1] in S})


def homomorphism_witness(order, S, p=2):
    """True if U -> U_S is multiplicative on U(I, order); else a violating pair.

    The pair (Id + E_ij, Id + E_jk) with i, k in S and j outside S between
    them has both minors trivial while its product has minor Id + E_ik.
    """
    order = tuple(order)
    if is_segment(order, S):
        return True
    S = set(S)
    pos = [k for k, a in enumerate(order) if a in S]
    for a in range(pos[0], pos[-1] + 1):
        if order[a] not in S:
            j = order[a]
            i = next(order[b] for b in reversed(pos) if b < a)
            k = next(order[b] for b in pos if b > a)
            return (
                UniMatrix.elementary(order, p, i, j),
                UniMatrix.elementary(order, p, j, k),
            )
    raise AssertionError("unreachable")


def is_row_column_sparse(U):
    rows = [i for (i, _), _ in U.entries]
    cols = [j for (_, j), _ in U.entries]
    return len(set(rows)) == len(rows) and len(set(cols)) == len(cols)


def canonical_superclass_rep(U):
    """The row/column-sparse member of the superclass of U.

    Works on N = U - Id in order coordinates. Columns are swept left to
    right; in each column the lowest nonzero entry in a non-pivot row becomes
    a pivot, entries above it in its column are cleared by adding multiples
    of the pivot row to higher rows, and entries right of it in its row are
    cleared by adding multiples of the pivot column to later columns.
    """
    n, p = U.n, U.p
    N = U.rows()
    for a in range(n):
        N[a][a] = 0
    changed = True
    while changed:
        changed = False
        pivot_rows = set()
        for col in range(n):
            piv = None
            for r in range(col - 1, -1, -1):
                if N[r][col] and r not in pivot_rows:
                    piv = r
                    break
            if piv is None:
                continue
            pivot_rows.add(piv)
            inv = pow(N[piv][col], -1, p)
            for r in range(piv):
                if N[r][col]:
                    c = N[r][col] * inv % p
                    N[r] = [(x - c * y) % p for x, y in zip(N[r], N[piv])]
                    changed = True
            for c2 in range(col + 1, n):
                if N[piv][c2]:
                    c = N[piv][c2] * inv % p
                    for r in range(n):
                        N[r][c2] = (N[r][c2] - c * N[r][col]) % p
                    changed = True
    out = {(a, b): N[a][b] for a in range(n) for b in range(a + 1, n) if N[a][b]}
    return UniMatrix.from_positions(U.order, p, out)


def graph_of(U):
    """The graph with an edge {i, j} whenever u_ij != 0 (i before j)."""
    from .partitions import SimpleGraph

    return SimpleGraph(U.ground, [ij for ij, _ in U.entries])


def enumerate_group(order, p):
    """All elements of U(I, order), in base-p row-major digit order."""
    if not is_prime(p):
        raise ValueError("p must be prime")
    order = tuple(order)
    slots = [(order[a], order[b]) for a, b in upper_positions(len(order))]
    for digits in product(range(p), repeat=len(slots)):
        yield UniMatrix(order, p, {s: d for s, d in zip(slots, digits) if d})
