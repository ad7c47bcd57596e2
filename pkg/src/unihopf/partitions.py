"""Set partitions, simple graphs and arc diagrams on linearly ordered sets."""

from itertools import combinations, product

from .orders import _label_key, restrict_order
from .unitriangular import UniMatrix, is_row_column_sparse

__all__ = [
    "SetPartition",
    "SimpleGraph",
    "ArcDiagram",
    "set_partitions",
    "all_graphs",
    "arcs",
    "restrict_partition",
    "union_partitions",
    "quasi_shuffles",
    "is_union_of_blocks",
    "is_atomic",
    "atomic_partitions",
    "atomic_factorization",
    "diagram_leq",
    "arc_diagrams",
    "graphs_over",
    "diagram_to_matrix",
    "matrix_to_diagram",
]


def _sorted_labels(xs):
    return tuple(sorted(xs, key=_label_key))


class SetPartition:
    """Partition of a finite label set; blocks sorted by minimum label."""

    __slots__ = ("blocks", "_hash")

    def __init__(self, blocks):
        bs = [_sorted_labels(b) for b in blocks]
        if any(not b for b in bs):
            raise ValueError("blocks must be nonempty")
        seen = set()
        for b in bs:
            if seen & set(b):
                raise ValueError("blocks must be disjoint")
            seen |= set(b)
        self.blocks = tuple(sorted(bs, key=lambda b: _label_key(b[0])))
        self._hash = hash(self.blocks)

    @property
    def ground(self):
        return frozenset(a for b in self.blocks for a in b)

    def block_of(self, a):
        for b in self.blocks:
            if a in b:
                return b
        raise KeyError(a)

    def relabel(self, mapping):
        return SetPartition([[mapping[a] for a in b] for b in self.blocks])

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __eq__(self, other):
        if not isinstance(other, SetPartition):
            return NotImplemented
        return self.blocks == other.blocks

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "{%s}" % ",".join("{%s}" % ",".join(map(str, b)) for b in self.blocks)


class SimpleGraph:
    """Loopless simple graph; edges stored as sorted label pairs."""

    __slots__ = ("vertices", "edges", "_hash")

    def __init__(self, vertices, edges=()):
        self.vertices = frozenset(vertices)
        es = set()
        for e in edges:
            i, j = tuple(e)
            if i == j:
                raise ValueError("loops are not allowed")
            if i not in self.vertices or j not in self.vertices:
                raise ValueError("edge %r leaves the vertex set" % ((i, j),))
            es.add(_sorted_labels((i, j)))
        self.edges = frozenset(es)
        self._hash = hash((self.vertices, self.edges))

    @property
    def ground(self):
        return self.vertices

    def has_edge(self, i, j):
        return _sorted_labels((i, j)) in self.edges

    def restrict(self, S):
        S = frozenset(S)
        return SimpleGraph(S, [e for e in self.edges if e[0] in S and e[1] in S])

    def union(self, other):
        if self.vertices & other.vertices:
            raise ValueError("graphs must have disjoint vertex sets")
        return SimpleGraph(self.vertices | other.vertices, self.edges | other.edges)

    def crosses(self, S1, S2):
        return any(
            (i in S1 and j in S2) or (i in S2 and j in S1) for i, j in self.edges
        )

    def is_connected(self):
        if not self.vertices:
            return False
        adj = {v: set() for v in self.vertices}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        start = next(iter(self.vertices))
        seen, stack = {start}, [start]
        while stack:
            v = stack.pop()
            for w in adj[v] - seen:
                seen.add(w)
                stack.append(w)
        return len(seen) == len(self.vertices)

    def relabel(self, mapping):
        return SimpleGraph(
            [mapping[v] for v in self.vertices],
            [(mapping[i], mapping[j]) for i, j in self.edges],
        )

    def __eq__(self, other):
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return self._hash

    def __repr__(self):
        es = sorted(self.edges, key=lambda e: (_label_key(e[0]), _label_key(e[1])))
        return "Graph(%s; %s)" % (
            "".join(map(str, _sorted_labels(self.vertices))),
            " ".join("%s%s" % e for e in es),
        )


def set_partitions(I):
    """All partitions of I (as SetPartitions)."""
    labels = _sorted_labels(I)

    def rec(k, blocks):
        if k == len(labels):
            yield SetPartition(blocks)
            return
        a = labels[k]
        for b in blocks:
            b.append(a)
            yield from rec(k + 1, blocks)
            b.pop()
        blocks.append([a])
        yield from rec(k + 1, blocks)
        blocks.pop()

    yield from rec(0, [])


def all_graphs(I):
    V = _sorted_labels(I)
    pairs = list(combinations(V, 2))
    for bits in product((0, 1), repeat=len(pairs)):
        yield SimpleGraph(V, [e for e, b in zip(pairs, bits) if b])


def _check_same_ground(X, order):
    if X.ground != frozenset(order):
        raise ValueError("partition and order live on different grounds")


def arcs(X, order):
    """Consecutive same-block pairs (earlier, later) in ``order``."""
    _check_same_ground(X, order)
    pos = {a: k for k, a in enumerate(order)}
    out = []
    for b in X.blocks:
        bb = sorted(b, key=pos.__getitem__)
        out.extend(zip(bb, bb[1:]))
    return frozenset(out)


def restrict_partition(X, S):
    S = frozenset(S)
    if not S <= X.ground:
        raise ValueError("S is not a subset of the ground")
    return SetPartition([[a for a in b if a in S] for b in X.blocks if S.intersection(b)])


def union_partitions(X1, X2):
    if X1.ground & X2.ground:
        raise ValueError("partitions must have disjoint grounds")
    return SetPartition(list(X1.blocks) + list(X2.blocks))


def is_union_of_blocks(X, S):
    S = frozenset(S)
    return all(S.issuperset(b) or S.isdisjoint(b) for b in X.blocks)


def _partial_matchings(m, k):
    """Injective partial maps {0..m-1} -> {0..k-1} as tuples (None = unmatched)."""

    def rec(i, used):
        if i == m:
            yield ()
            return
        for rest in rec(i + 1, used):
            yield (None,) + rest
        for j in range(k):
            if j not in used:
                for rest in rec(i + 1, used | {j}):
                    yield (j,) + rest

    yield from rec(0, frozenset())


def quasi_shuffles(X1, X2):
    """Partitions of the union restricting to X1 and X2, each once."""
    if X1.ground & X2.ground:
        raise ValueError("partitions must have disjoint grounds")
    b1, b2 = X1.blocks, X2.blocks
    for match in _partial_matchings(len(b1), len(b2)):
        used = {j for j in match if j is not None}
        blocks = [b + (b2[j] if j is not None else ()) for b, j in zip(b1, match)]
        blocks += [b for j, b in enumerate(b2) if j not in used]
        yield SetPartition(blocks)


def is_atomic(X, order):
    """No proper nonempty initial segment of ``order`` is a union of blocks."""
    _check_same_ground(X, order)
    reach = {}
    pos = {a: k for k, a in enumerate(order)}
    for b in X.blocks:
        last = max(pos[a] for a in b)
        for a in b:
            reach[a] = last
    far = -1
    for k, a in enumerate(order[:-1]):
        far = max(far, reach[a])
        if far == k:
            return False
    return True


def atomic_partitions(order):
    return [X for X in set_partitions(order) if is_atomic(X, order)]


class ArcDiagram:
    """Set partition of an ordered ground with nonzero F_p labels on its arcs."""

    __slots__ = ("order", "partition", "labels", "p", "_hash")

    def __init__(self, order, partition, labels=None, p=2):
        self.order = tuple(order)
        self.partition = partition
        self.p = p
        A = arcs(partition, self.order)
        if labels is None:
            if p != 2:
                raise ValueError("labels are required unless p = 2")
            labels = {a: 1 for a in A}
        labels = dict(labels)
        if set(labels) != set(A):
            raise ValueError("label domain must equal the arc set")
        for a, v in labels.items():
            if v % p == 0:
                raise ValueError("arc labels must be nonzero")
        pos = {a: k for k, a in enumerate(self.order)}
        self.labels = tuple(
            sorted(((a, v % p) for a, v in labels.items()), key=lambda kv: (pos[kv[0][0]], pos[kv[0][1]]))
        )
        self._hash = hash((self.order, self.partition, self.labels, p))

    @property
    def ground(self):
        return frozenset(self.order)

    @property
    def arcs(self):
        return frozenset(a for a, _ in self.labels)

    def label_map(self):
        return dict(self.labels)

    def restrict(self, S):
        """Restriction to S (meaningful when S is a segment or a union of blocks)."""
        S = frozenset(S)
        sub = restrict_order(self.order, S)
        X = restrict_partition(self.partition, S)
        lab = {a: v for a, v in self.labels if a[0] in S and a[1] in S}
        return ArcDiagram(sub, X, lab, self.p)

    def union(self, other, order):
        X = union_partitions(self.partition, other.partition)
        return ArcDiagram(order, X, dict(self.labels + other.labels), self.p)

    def relabel(self, mapping):
        return ArcDiagram(
            [mapping[a] for a in self.order],
            self.partition.relabel(mapping),
            {(mapping[i], mapping[j]): v for (i, j), v in self.labels},
            self.p,
        )

    def __eq__(self, other):
        if not isinstance(other, ArcDiagram):
            return NotImplemented
        return (
            self.order == other.order
            and self.partition == other.partition
            and self.labels == other.labels
            and self.p == other.p
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        lab = " ".join("%s%s:%d" % (i, j, v) for (i, j), v in self.labels)
        return "Arcs(%s; %r; %s)" % ("".join(map(str, self.order)), self.partition, lab)


def arc_diagrams(order, p, partition=None):
    """All arc diagrams on ``order`` (optionally with a fixed partition)."""
    order = tuple(order)
    parts = [partition] if partition is not None else set_partitions(order)
    for X in parts:
        A = sorted(arcs(X, order), key=lambda a: (order.index(a[0]), order.index(a[1])))
        for vals in product(range(1, p), repeat=len(A)):
            yield ArcDiagram(order, X, dict(zip(A, vals)), p)


def atomic_factorization(D):
    """Restrictions of D to the minimal segments that are unions of blocks."""
    order = D.order
    pos = {a: k for k, a in enumerate(order)}
    reach = {}
    for b in D.partition.blocks:
        last = max(pos[a] for a in b)
        for a in b:
            reach[a] = last
    out, start, far = [], 0, -1
    for k, a in enumerate(order):
        far = max(far, reach[a])
        if far == k:
            out.append(D.restrict(order[start : k + 1]))
            start = k + 1
    return out


def diagram_leq(D1, D2):
    if D1.order != D2.order or D1.p != D2.p:
        raise ValueError("diagrams live on different ordered sets or fields")
    lab2 = D2.label_map()
    return all(a in lab2 and lab2[a] == v for a, v in D1.labels)


def graphs_over(X, order):
    """G(X, order): supergraphs of the arc graph whose extra edges (i, j) have
    some k strictly between with (i, k) or (k, j) an arc."""
    order = tuple(order)
    A = arcs(X, order)
    pos = {a: k for k, a in enumerate(order)}
    candidates = []
    for a in range(len(order)):
        for b in range(a + 1, len(order)):
            i, j = order[a], order[b]
            if (i, j) in A:
                continue
            if any((i, order[c]) in A or (order[c], j) in A for c in range(a + 1, b)):
                candidates.append((i, j))
    base = list(A)
    out = set()
    for bits in product((0, 1), repeat=len(candidates)):
        extra = [e for e, bit in zip(candidates, bits) if bit]
        out.add(SimpleGraph(order, base + extra))
    return out


def diagram_to_matrix(D):
    return UniMatrix(D.order, D.p, dict(D.labels))


def matrix_to_diagram(U):
    if not is_row_column_sparse(U):
        raise ValueError("matrix is not a canonical (row/column-sparse) representative")
    # the arcs chain into blocks: i -> j whenever u_ij != 0
    nxt = {i: j for (i, j), _ in U.entries}
    has_prev = {j for (_, j), _ in U.entries}
    blocks = []
    for a in U.order:
        if a in has_prev:
            continue
        b = [a]
        while b[-1] in nxt:
            b.append(nxt[b[-1]])
        blocks.append(b)
    return ArcDiagram(U.order, SetPartition(blocks), dict(U.entries), U.p)
