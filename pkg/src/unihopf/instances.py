"""Concrete Hopf monoids and the morphisms between them.

Basis keys:

* L: tuples (linear orders)
* Pi: SetPartition (the m-basis)
* G: SimpleGraph (the m-basis); p-basis via ``graph_p_to_m``
* fU: UniMatrix (the kappa-basis; the matrix carries its order)
* cfU: (order, class id) where the class id comes from the census of the
  standard group, after transporting along the order
* scfU: ArcDiagram (the kappa-basis)

The lambda-bases of fU and scfU are available both as converters and as
instances in their own right (``FunctionsLambda``, ``SuperclassLambda``).
"""

from itertools import combinations, permutations, product
from math import factorial

from .algebra import is_prime
from .census import DEFAULT_BUDGET, get_census
from .orders import _label_key, restrict_order
from .partitions import (
    ArcDiagram,
    SimpleGraph,
    arc_diagrams,
    arcs,
    all_graphs,
    graphs_over,
    is_atomic,
    is_union_of_blocks,
    quasi_shuffles,
    restrict_partition,
    set_partitions,
    diagram_to_matrix,
)
from .species import (
    CheckReport,
    FreeMonoid,
    HopfMonoid,
    LinComb,
    Species,
    SpeciesMorphism,
    hadamard,
    standard_ground,
)
from .unitriangular import UniMatrix, direct_sum, enumerate_group, graph_of, principal_minor

__all__ = [
    "Exponential",
    "LinearOrders",
    "Partitions",
    "Graphs",
    "Functions",
    "FunctionsLambda",
    "ClassFunctions",
    "SuperclassFunctions",
    "SuperclassLambda",
    "AtomicDiagrams",
    "instance",
    "INSTANCE_NAMES",
    "graph_p_to_m",
    "graph_m_to_p",
    "connected_components_graph",
    "fU_lambda_to_kappa",
    "fU_kappa_to_lambda",
    "scf_lambda_to_kappa",
    "scf_kappa_to_lambda",
    "constant_functions",
    "scf_to_cf",
    "cf_to_f",
    "scf_to_f",
    "phi_graphs",
    "psi_graphs",
    "phi_partitions",
    "psi_partitions",
    "rel_model",
    "lambda_to_kappa_morphism",
    "check_rel_square",
    "check_psi_phi_scaling",
    "scf_atomic_generators",
    "fU_connected_generators",
    "fU_atomic_generators",
]


def orders_of(ground):
    return [tuple(o) for o in permutations(sorted(ground, key=_label_key))]


def _relabel_order(order, mapping):
    return tuple(mapping[a] for a in order)


def _check_prime(p):
    if not is_prime(p):
        raise ValueError("p must be prime, got %r" % (p,))


class Exponential(HopfMonoid):
    """One basis element per ground; the unit for the Hadamard product."""

    name = "E"
    commutative = True
    cocommutative = True

    def basis(self, ground):
        return [frozenset(ground)]

    def ground(self, key):
        return key

    def relabel(self, key, mapping):
        return frozenset(mapping[a] for a in key)

    def product(self, a, b):
        return LinComb.of(a | b)

    def coproduct(self, key, S1, S2):
        return LinComb.of((S1, S2))


class LinearOrders(HopfMonoid):
    name = "L"
    cocommutative = True
    order_free = True

    def basis(self, ground):
        return orders_of(ground)

    def ground(self, key):
        return frozenset(key)

    def relabel(self, key, mapping):
        return _relabel_order(key, mapping)

    def product(self, a, b):
        return LinComb.of(a + b)

    def coproduct(self, key, S1, S2):
        return LinComb.of((restrict_order(key, S1), restrict_order(key, S2)))


class Partitions(HopfMonoid):
    name = "Pi"
    commutative = True
    cocommutative = True

    def basis(self, ground):
        return list(set_partitions(ground))

    def product(self, a, b):
        return LinComb.sum_of(quasi_shuffles(a, b))

    def coproduct(self, key, S1, S2):
        if not is_union_of_blocks(key, S1):
            return LinComb()
        return LinComb.of((restrict_partition(key, S1), restrict_partition(key, S2)))


class Graphs(HopfMonoid):
    name = "G"
    commutative = True
    cocommutative = True

    def basis(self, ground):
        return list(all_graphs(ground))

    def product(self, a, b):
        cross = [(i, j) for i in a.vertices for j in b.vertices]
        base = a.union(b)
        out = LinComb()
        for k in range(len(cross) + 1):
            for extra in combinations(cross, k):
                out.add_term(SimpleGraph(base.vertices, base.edges | set(extra)), 1)
        return out

    def coproduct(self, key, S1, S2):
        if key.crosses(S1, S2):
            return LinComb()
        return LinComb.of((key.restrict(S1), key.restrict(S2)))


def _supergraphs(g):
    V = sorted(g.vertices, key=_label_key)
    free = [e for e in combinations(V, 2) if not g.has_edge(*e)]
    for k in range(len(free) + 1):
        for extra in combinations(free, k):
            yield SimpleGraph(g.vertices, g.edges | set(extra)), k


def graph_p_to_m(g):
    """p_g as a combination of the m-basis."""
    return LinComb.sum_of(h for h, _ in _supergraphs(g))


def graph_m_to_p(g):
    """m_g as a combination of the p-basis (Moebius inversion)."""
    return LinComb({h: (-1) ** k for h, k in _supergraphs(g)})


def connected_components_graph(g):
    """Restrictions of g to its connected components."""
    adj = {v: set() for v in g.vertices}
    for i, j in g.edges:
        adj[i].add(j)
        adj[j].add(i)
    seen, comps = set(), []
    for v in sorted(g.vertices, key=_label_key):
        if v in seen:
            continue
        comp, stack = {v}, [v]
        while stack:
            for w in adj[stack.pop()] - comp:
                comp.add(w)
                stack.append(w)
        seen |= comp
        comps.append(g.restrict(comp))
    return comps


class _PrimeInstance(HopfMonoid):
    def __init__(self, p):
        super().__init__()
        _check_prime(p)
        self.p = p
        self.name = "%s(p=%d)" % (self.base_name, p)

    def _same_p(self, *keys):
        for k in keys:
            if k.p != self.p:
                raise ValueError("key over F_%d used in an instance over F_%d" % (k.p, self.p))


class Functions(_PrimeInstance):
    """f(U) on the kappa-basis."""

    base_name = "fU"
    cocommutative = True
    order_free = True

    def basis(self, ground):
        return [U for o in orders_of(ground) for U in enumerate_group(o, self.p)]

    def dim(self, n):
        return factorial(n) * self.p ** (n * (n - 1) // 2)

    def product(self, a, b):
        self._same_p(a, b)
        order = a.order + b.order
        cross = [(i, j) for i in a.order for j in b.order]
        base = dict(a.entries + b.entries)
        out = LinComb()
        for vals in product(range(self.p), repeat=len(cross)):
            ent = dict(base)
            ent.update((c, v) for c, v in zip(cross, vals) if v)
            out.add_term(UniMatrix(order, self.p, ent), 1)
        return out

    def coproduct(self, key, S1, S2):
        for (i, j), _ in key.entries:
            if (i in S1) != (j in S1):
                return LinComb()
        return LinComb.of((principal_minor(key, S1), principal_minor(key, S2)))


def _dominating_matrices(U):
    """All V >= U: V agrees with U wherever U has a nonzero entry."""
    n, p = U.n, U.p
    support = U.nonzero()
    free = [
        (U.order[a], U.order[b])
        for a in range(n)
        for b in range(a + 1, n)
        if (U.order[a], U.order[b]) not in support
    ]
    for vals in product(range(p), repeat=len(free)):
        ent = dict(support)
        k = 0
        for c, v in zip(free, vals):
            if v:
                ent[c] = v
                k += 1
        yield UniMatrix(U.order, p, ent), k


def fU_lambda_to_kappa(U):
    return LinComb.sum_of(V for V, _ in _dominating_matrices(U))


def fU_kappa_to_lambda(U):
    # the interval [U, V] is boolean on the extra support of V
    return LinComb({V: (-1) ** k for V, k in _dominating_matrices(U)})


class FunctionsLambda(Functions):
    """f(U) on the lambda-basis: products are single direct sums."""

    base_name = "fU[lambda]"

    def product(self, a, b):
        self._same_p(a, b)
        return LinComb.of(direct_sum(a, b, a.order + b.order))


class ClassFunctions(_PrimeInstance):
    """cf(U) on the basis of class characteristic functions."""

    base_name = "cfU"
    cocommutative = True
    order_free = True

    def __init__(self, p, cache_dir=None, budget=DEFAULT_BUDGET):
        super().__init__(p)
        self.cache_dir = cache_dir
        self.budget = budget
        self._prod_tables = {}
        self._coprod_tables = {}

    def census(self, n):
        return get_census(n, self.p, cache_dir=self.cache_dir, budget=self.budget)

    def classes(self, n):
        return [int(c) for c in self.census(n).class_reps]

    def basis(self, ground):
        n = len(ground)
        cs = self.classes(n)
        return [(o, c) for o in orders_of(ground) for c in cs]

    def dim(self, n):
        return factorial(n) * self.census(n).num_classes

    def ground(self, key):
        return frozenset(key[0])

    def relabel(self, key, mapping):
        return (_relabel_order(key[0], mapping), key[1])

    def key_of(self, U):
        """The class basis key containing the matrix U."""
        return (U.order, self.census(U.n).class_of(U))

    def _std_entries(self, n, idx):
        cen = self.census(n)
        return {ab: d for ab, d in zip(cen.positions, cen.digits(idx)) if d}

    def _prod_table(self, n1, n2):
        key = (n1, n2)
        tab = self._prod_tables.get(key)
        if tab is None:
            tab = {}
            c1s, c2s = self.census(n1), self.census(n2)
            for c in self.classes(n1 + n2):
                ent = self._std_entries(n1 + n2, c)
                top = {(a, b): v for (a, b), v in ent.items() if b < n1}
                bot = {(a - n1, b - n1): v for (a, b), v in ent.items() if a >= n1}
                k1 = int(c1s.class_id[c1s.index_of_positions(top)])
                k2 = int(c2s.class_id[c2s.index_of_positions(bot)])
                tab.setdefault((k1, k2), []).append(c)
            self._prod_tables[key] = tab
        return tab

    def _coprod_table(self, n, P):
        key = (n, P)
        tab = self._coprod_tables.get(key)
        if tab is None:
            tab = {}
            Q = tuple(a for a in range(n) if a not in P)
            cen = self.census(n)
            for c1 in self.classes(len(P)):
                e1 = self._std_entries(len(P), c1)
                for c2 in self.classes(len(Q)):
                    ent = {(P[a], P[b]): v for (a, b), v in e1.items()}
                    ent.update(
                        ((Q[a], Q[b]), v) for (a, b), v in self._std_entries(len(Q), c2).items()
                    )
                    c = int(cen.class_id[cen.index_of_positions(ent)])
                    tab.setdefault(c, []).append((c1, c2))
            self._coprod_tables[key] = tab
        return tab

    def product(self, a, b):
        (o1, c1), (o2, c2) = a, b
        order = o1 + o2
        tab = self._prod_table(len(o1), len(o2))
        return LinComb.sum_of((order, c) for c in tab.get((c1, c2), ()))

    def coproduct(self, key, S1, S2):
        order, c = key
        P = tuple(k for k, a in enumerate(order) if a in S1)
        o1, o2 = restrict_order(order, S1), restrict_order(order, S2)
        tab = self._coprod_table(len(order), P)
        return LinComb.sum_of(((o1, c1), (o2, c2)) for c1, c2 in tab.get(c, ()))


class SuperclassFunctions(_PrimeInstance):
    """scf(U) on the basis of superclass characteristic functions."""

    base_name = "scfU"
    cocommutative = True
    order_free = True

    def basis(self, ground):
        return [D for o in orders_of(ground) for D in arc_diagrams(o, self.p)]

    def product(self, a, b):
        self._same_p(a, b)
        order = a.order + b.order
        S1, S2 = a.ground, b.ground
        inherited = dict(a.labels + b.labels)
        out = LinComb()
        for X in quasi_shuffles(a.partition, b.partition):
            A = sorted(arcs(X, order), key=lambda e: (order.index(e[0]), order.index(e[1])))
            new = [e for e in A if e not in inherited]
            for vals in product(range(1, self.p), repeat=len(new)):
                lab = {e: inherited[e] for e in A if e in inherited}
                lab.update(zip(new, vals))
                D = ArcDiagram(order, X, lab, self.p)
                if D.restrict(S1) != a or D.restrict(S2) != b:
                    raise AssertionError("labelled quasi-shuffle does not restrict correctly")
                out.add_term(D, 1)
        return out

    def coproduct(self, key, S1, S2):
        if not is_union_of_blocks(key.partition, S1):
            return LinComb()
        return LinComb.of((key.restrict(S1), key.restrict(S2)))


def _dominating_diagrams(D):
    """All E >= D on the same ordered set, with the number of extra arcs."""
    for E in arc_diagrams(D.order, D.p):
        lab = E.label_map()
        if all(lab.get(e) == v for e, v in D.labels):
            yield E, len(E.labels) - len(D.labels)


def scf_lambda_to_kappa(D):
    return LinComb.sum_of(E for E, _ in _dominating_diagrams(D))


def scf_kappa_to_lambda(D):
    # subsets of an arc set are again arc sets, so intervals are boolean
    return LinComb({E: (-1) ** k for E, k in _dominating_diagrams(D)})


class SuperclassLambda(SuperclassFunctions):
    """scf(U) on the lambda-basis: products are single unions."""

    base_name = "scfU[lambda]"

    def product(self, a, b):
        self._same_p(a, b)
        return LinComb.of(a.union(b, a.order + b.order))


class AtomicDiagrams(Species):
    """Arc diagrams with atomic partitions, over all orders of the ground."""

    order_free = True

    def __init__(self, p):
        _check_prime(p)
        self.p = p
        self.name = "d(p=%d)" % p

    def basis(self, ground):
        if not ground:
            return []
        return [
            D for o in orders_of(ground) for D in arc_diagrams(o, self.p) if is_atomic(D.partition, o)
        ]


INSTANCE_NAMES = ("L", "Pi", "G", "fU", "cfU", "scfU", "LxPi", "LxG", "free-d")


def instance(name, p=2, cache_dir=None, budget=DEFAULT_BUDGET):
    """Build an instance by its command-line name."""
    if name == "L":
        return LinearOrders()
    if name == "Pi":
        return Partitions()
    if name == "G":
        return Graphs()
    if name == "fU":
        return Functions(p)
    if name == "cfU":
        return ClassFunctions(p, cache_dir=cache_dir, budget=budget)
    if name == "scfU":
        return SuperclassFunctions(p)
    if name == "LxPi":
        return hadamard(LinearOrders(), Partitions())
    if name == "LxG":
        return hadamard(LinearOrders(), Graphs())
    if name == "free-d":
        return FreeMonoid(AtomicDiagrams(p), "T(d)(p=%d)" % p)
    raise ValueError("unknown monoid %r; expected one of %s" % (name, ", ".join(INSTANCE_NAMES)))


# morphisms


def constant_functions(p):
    """L -> f(U): an order goes to the constant function 1 on its group."""
    fU = Functions(p)
    return SpeciesMorphism(
        LinearOrders(), fU, lambda o: LinComb.sum_of(enumerate_group(o, p)), "constant"
    )


def _superclass_indices(cen, D):
    sid = cen.superclass_id[cen.index_of(diagram_to_matrix(D))]
    return (cen.superclass_id == sid).nonzero()[0]


def scf_to_cf(p, cf=None):
    cf = cf or ClassFunctions(p)

    def f(D):
        cen = cf.census(len(D.order))
        idx = _superclass_indices(cen, D)
        return LinComb.sum_of({(D.order, int(c)) for c in cen.class_id[idx]})

    return SpeciesMorphism(SuperclassFunctions(p), cf, f, "scf->cf")


def cf_to_f(p, cf=None):
    cf = cf or ClassFunctions(p)

    def f(key):
        order, c = key
        cen = cf.census(len(order))
        return LinComb.sum_of(cen.matrix(int(i), order) for i in cen.class_members(c))

    return SpeciesMorphism(cf, Functions(p), f, "cf->f")


def scf_to_f(p, cf=None):
    cf = cf or ClassFunctions(p)

    def f(D):
        cen = cf.census(len(D.order))
        return LinComb.sum_of(cen.matrix(int(i), D.order) for i in _superclass_indices(cen, D))

    return SpeciesMorphism(SuperclassFunctions(p), Functions(p), f, "scf->f")


def _matrices_with_graph(order, g, p):
    pos = {a: k for k, a in enumerate(order)}
    edges = [(i, j) if pos[i] < pos[j] else (j, i) for i, j in g.edges]
    for vals in product(range(1, p), repeat=len(edges)):
        yield UniMatrix(order, p, dict(zip(edges, vals)))


def phi_graphs(p):
    """L x G -> f(U): order (x) m_g goes to the sum of kappa_U with graph g."""
    LG = hadamard(LinearOrders(), Graphs())
    return SpeciesMorphism(
        LG, Functions(p), lambda k: LinComb.sum_of(_matrices_with_graph(k[0], k[1], p)), "phi_G"
    )


def psi_graphs(p):
    LG = hadamard(LinearOrders(), Graphs())
    return SpeciesMorphism(Functions(p), LG, lambda U: LinComb.of((U.order, graph_of(U))), "psi_G")


def phi_partitions(p):
    """L x Pi -> scf(U): all labelings of the arcs."""
    LP = hadamard(LinearOrders(), Partitions())
    return SpeciesMorphism(
        LP,
        SuperclassFunctions(p),
        lambda k: LinComb.sum_of(arc_diagrams(k[0], p, partition=k[1])),
        "phi_Pi",
    )


def psi_partitions():
    """Inverse of phi_partitions over F_2."""
    LP = hadamard(LinearOrders(), Partitions())
    return SpeciesMorphism(
        SuperclassFunctions(2), LP, lambda D: LinComb.of((D.order, D.partition)), "psi_Pi"
    )


def rel_model():
    """L x Pi -> L x G: m_X goes to the sum over G(X, order)."""
    LP = hadamard(LinearOrders(), Partitions())
    LG = hadamard(LinearOrders(), Graphs())
    return SpeciesMorphism(
        LP, LG, lambda k: LinComb.sum_of((k[0], g) for g in graphs_over(k[1], k[0])), "rel"
    )


def lambda_to_kappa_morphism(which, p):
    """The change of basis as a morphism from the lambda instance to the kappa one."""
    if which == "fU":
        return SpeciesMorphism(FunctionsLambda(p), Functions(p), fU_lambda_to_kappa, "fU lambda->kappa")
    if which == "scfU":
        return SpeciesMorphism(
            SuperclassLambda(p), SuperclassFunctions(p), scf_lambda_to_kappa, "scfU lambda->kappa"
        )
    raise ValueError(which)


def check_rel_square(p, n_max, cf=None):
    """incl . phi_Pi = phi_G . rel on every basis element of L x Pi.

    Holds for n <= 3. From n = 4 on the graph of a superclass member need not
    lie in G(X, order) (entries can cancel), so failures are expected there.
    """
    rep = CheckReport("rel-model square at p=%d up to n=%d" % (p, n_max))
    phiP, phiG, rel, inc = phi_partitions(p), phi_graphs(p), rel_model(), scf_to_f(p, cf)
    LP = phiP.source
    for n in range(n_max + 1):
        for key in LP.basis(standard_ground(n)):
            lhs = inc.apply(phiP(key))
            rhs = phiG.apply(rel(key))
            rep.record("square", lhs == rhs, key)
    return rep


def check_psi_phi_scaling(p, n_max):
    """psi . phi multiplies order (x) m_g by (p-1)^(edges of g)."""
    rep = CheckReport("psi.phi scaling at p=%d up to n=%d" % (p, n_max))
    phi, psi = phi_graphs(p), psi_graphs(p)
    for n in range(n_max + 1):
        for key in phi.source.basis(standard_ground(n)):
            got = psi.apply(phi(key))
            want = LinComb.of(key, (p - 1) ** len(key[1].edges))
            rep.record("scaling", got == want, key)
    return rep


# generator sets for freeness certificates: callables S -> {name: element}


def scf_atomic_generators(p):
    """lambda_D over arc diagrams D with atomic partitions."""
    d = AtomicDiagrams(p)
    return lambda S: {D: scf_lambda_to_kappa(D) for D in d.basis(S)}


def _splits_at_segment(U):
    """True if U is block diagonal along some proper initial segment."""
    order = U.order
    pos = {a: k for k, a in enumerate(order)}
    for cut in range(1, len(order)):
        if all(not (pos[i] < cut <= pos[j]) for (i, j), _ in U.entries):
            return True
    return False


def fU_connected_generators(p):
    """lambda_U over matrices whose graph g(U) is connected."""
    return lambda S: {
        U: fU_lambda_to_kappa(U)
        for o in orders_of(S)
        for U in enumerate_group(o, p)
        if graph_of(U).is_connected()
    }


def fU_atomic_generators(p):
    """lambda_U over matrices that are not block diagonal along a proper
    initial segment of their order."""
    return lambda S: {
        U: fU_lambda_to_kappa(U)
        for o in orders_of(S)
        for U in enumerate_group(o, p)
        if not _splits_at_segment(U)
    }
