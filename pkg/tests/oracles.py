"""Slow, independent reference computations used by the tests."""

from itertools import product

from unihopf.unitriangular import UniMatrix, enumerate_group, inverse, multiply


def dense_mul(a, b, p):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) % p for j in range(n)] for i in range(n)]


def orbit_partition(elements, moves):
    """Connected components of the graph x -> m(x) (moves are bijections)."""
    comp = {}
    for x in elements:
        if x in comp:
            continue
        comp[x] = x
        stack = [x]
        while stack:
            y = stack.pop()
            for m in moves:
                z = m(y)
                if z not in comp:
                    comp[z] = x
                    stack.append(z)
    blocks = {}
    for x, r in comp.items():
        blocks.setdefault(r, set()).add(x)
    return list(blocks.values())


def conjugacy_classes(n, p):
    """Classes by conjugating with every group element."""
    order = tuple(range(n))
    G = list(enumerate_group(order, p))
    inv = {g: inverse(g) for g in G}
    seen, out = set(), []
    for x in G:
        if x in seen:
            continue
        cls = {multiply(multiply(g, x), inv[g]) for g in G}
        seen |= cls
        out.append(cls)
    return out


def superclasses(n, p):
    """Classes of x - 1 ~ g (x - 1) h, using every pair (g, h)."""
    order = tuple(range(n))
    G = list(enumerate_group(order, p))
    rows = {U: U.rows() for U in G}

    def shift(g, x, h):
        N = [[x[i][j] - (i == j) for j in range(n)] for i in range(n)]
        M = dense_mul(dense_mul(rows[g], N, p), rows[h], p)
        for i in range(n):
            M[i][i] += 1
        return UniMatrix.from_rows(order, p, M)

    seen, out = set(), []
    for x in G:
        if x in seen:
            continue
        cls = {shift(g, rows[x], h) for g, h in product(G, G)}
        seen |= cls
        out.append(cls)
    return out


def superclasses_bfs(n, p):
    """Two-sided orbits of x - 1 under left and right multiplication by the
    elementary generators Id + E_ij, found by breadth-first search."""
    order = tuple(range(n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]

    def freeze(N):
        return tuple(tuple(r) for r in N)

    def left(i, j):
        # (Id + E_ij) N: add row j to row i
        def m(N):
            M = [list(r) for r in N]
            M[i] = [(a + b) % p for a, b in zip(M[i], M[j])]
            return freeze(M)

        return m

    def right(i, j):
        # N (Id + E_ij): add column i to column j
        def m(N):
            M = [list(r) for r in N]
            for r in M:
                r[j] = (r[j] + r[i]) % p
            return freeze(M)

        return m

    moves = [left(i, j) for i, j in pairs] + [right(i, j) for i, j in pairs]
    start = []
    for U in enumerate_group(order, p):
        N = U.rows()
        for a in range(n):
            N[a][a] = 0
        start.append(freeze(N))
    blocks = orbit_partition(start, moves)

    def back(N):
        return UniMatrix(order, p, {(i, j): N[i][j] for i, j in pairs if N[i][j]})

    return [{back(N) for N in b} for b in blocks]
