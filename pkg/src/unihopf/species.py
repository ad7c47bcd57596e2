"""Hopf monoids in vector species over Q, and tools to verify them.

An instance supplies a basis of each component h[I], relabeling of basis
keys, and the product/coproduct on basis keys. Everything else here (linear
extension, axiom and morphism checks, convolution, the Eulerian idempotent,
free monoids, freeness certificates, type generating functions) works on any
instance.
"""

from fractions import Fraction
from itertools import combinations, product
from math import factorial

from .algebra import TruncSeries
from .errors import BudgetExceeded
from .linalg import SparseEchelon, rank
from .orders import enumerate_decompositions, set_compositions

__all__ = [
    "LinComb",
    "HopfMonoid",
    "Species",
    "Hadamard",
    "hadamard",
    "FreeMonoid",
    "free_monoid",
    "SpeciesMorphism",
    "Endomorphism",
    "BudgetExceeded",
    "CheckReport",
    "check_hopf_axioms",
    "check_morphism",
    "convolution",
    "identity_map",
    "unit_counit",
    "eulerian_idempotent",
    "iterated_coproduct",
    "iterated_product",
    "freeness_certificate",
    "type_series",
    "subsets",
    "standard_ground",
]


def standard_ground(n):
    return frozenset(range(n))


def subsets(I):
    labels = sorted(I)
    for k in range(len(labels) + 1):
        for c in combinations(labels, k):
            yield frozenset(c)


class LinComb:
    """Finite linear combination of basis keys with exact coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            self.terms = {}
        elif isinstance(terms, dict):
            self.terms = {k: v for k, v in terms.items() if v != 0}
        else:
            acc = {}
            for k, v in terms:
                acc[k] = acc.get(k, 0) + v
            self.terms = {k: v for k, v in acc.items() if v != 0}

    @classmethod
    def of(cls, key, coeff=1):
        out = cls()
        if coeff != 0:
            out.terms[key] = coeff
        return out

    @classmethod
    def sum_of(cls, keys, coeff=1):
        out = cls()
        for k in keys:
            out.terms[k] = out.terms.get(k, 0) + coeff
        out.terms = {k: v for k, v in out.terms.items() if v != 0}
        return out

    def items(self):
        return self.terms.items()

    def keys(self):
        return self.terms.keys()

    def coeff(self, key):
        return self.terms.get(key, 0)

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def iadd(self, other, scale=1):
        t = self.terms
        for k, v in other.terms.items():
            y = t.get(k, 0) + scale * v
            if y:
                t[k] = y
            else:
                t.pop(k, None)
        return self

    def add_term(self, key, coeff):
        y = self.terms.get(key, 0) + coeff
        if y:
            self.terms[key] = y
        else:
            self.terms.pop(key, None)

    def __add__(self, other):
        return LinComb(dict(self.terms)).iadd(other)

    def __sub__(self, other):
        return LinComb(dict(self.terms)).iadd(other, -1)

    def __neg__(self):
        return LinComb({k: -v for k, v in self.terms.items()})

    def __mul__(self, c):
        if c == 0:
            return LinComb()
        return LinComb({k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        return self.terms == other.terms

    def map(self, f):
        """Extend a key -> LinComb function linearly."""
        out = LinComb()
        for k, v in self.terms.items():
            out.iadd(f(k), v)
        return out

    def map_keys(self, f):
        out = LinComb()
        for k, v in self.terms.items():
            out.add_term(f(k), v)
        return out

    def tensor(self, other):
        return LinComb(
            {(a, b): u * v for a, u in self.terms.items() for b, v in other.terms.items()}
        )

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join("%s*%r" % (v, k) for k, v in self.terms.items())


class Species:
    """A set species: a basis on each finite ground, with relabeling."""

    name = "species"

    def basis(self, ground):
        raise NotImplementedError

    def ground(self, key):
        return key.ground

    def relabel(self, key, mapping):
        return key.relabel(mapping)

    def dim(self, n):
        return len(self.basis(standard_ground(n)))


class HopfMonoid(Species):
    """Connected Hopf monoid given on a basis.

    Subclasses implement ``product(a, b)`` returning a LinComb of keys on the
    union of the grounds, and ``coproduct(key, S1, S2)`` returning a LinComb
    of key pairs.
    """

    name = "h"
    commutative = False
    cocommutative = False
    # True when S_n acts freely on h[n] through an order coordinate
    order_free = False

    def __init__(self):
        self._mu = {}
        self._delta = {}

    def product(self, a, b):
        raise NotImplementedError

    def coproduct(self, key, S1, S2):
        raise NotImplementedError

    def unit(self):
        (u,) = self.basis(frozenset())
        return u

    def mu(self, a, b):
        """Cached product on basis keys."""
        k = (a, b)
        r = self._mu.get(k)
        if r is None:
            r = self.product(a, b)
            self._mu[k] = r
        return r

    def delta(self, key, S1, S2=None):
        """Cached coproduct on a basis key."""
        S1 = frozenset(S1)
        k = (key, S1)
        r = self._delta.get(k)
        if r is None:
            if S2 is None:
                S2 = self.ground(key) - S1
            r = self.coproduct(key, S1, frozenset(S2))
            self._delta[k] = r
        return r

    def mul(self, x, y):
        """Product of two LinCombs."""
        out = LinComb()
        for a, u in x.items():
            for b, v in y.items():
                out.iadd(self.mu(a, b), u * v)
        return out

    def comul(self, x, S1, S2=None):
        out = LinComb()
        for a, u in x.items():
            out.iadd(self.delta(a, S1, S2), u)
        return out

    def clear_cache(self):
        self._mu.clear()
        self._delta.clear()

    def __repr__(self):
        return self.name


class Hadamard(HopfMonoid):
    """Componentwise tensor product h x k; keys are pairs."""

    def __init__(self, h, k):
        super().__init__()
        self.h, self.k = h, k
        self.name = "%sx%s" % (h.name, k.name)
        self.commutative = h.commutative and k.commutative
        self.cocommutative = h.cocommutative and k.cocommutative
        self.order_free = h.order_free or k.order_free

    def basis(self, ground):
        return [(a, b) for a in self.h.basis(ground) for b in self.k.basis(ground)]

    def dim(self, n):
        return self.h.dim(n) * self.k.dim(n)

    def ground(self, key):
        return self.h.ground(key[0])

    def relabel(self, key, mapping):
        return (self.h.relabel(key[0], mapping), self.k.relabel(key[1], mapping))

    def product(self, a, b):
        return self.h.mu(a[0], b[0]).tensor(self.k.mu(a[1], b[1]))

    def coproduct(self, key, S1, S2):
        out = LinComb()
        dk = self.k.delta(key[1], S1, S2)
        for (x1, y1), u in self.h.delta(key[0], S1, S2).items():
            for (x2, y2), v in dk.items():
                out.add_term(((x1, x2), (y1, y2)), u * v)
        return out


def hadamard(h, k):
    return Hadamard(h, k)


class FreeMonoid(HopfMonoid):
    """T(q) with concatenation product and the canonical coproduct (the
    generators are primitive). Keys are tuples of generator keys."""

    commutative = False
    cocommutative = True

    def __init__(self, q, name=None):
        super().__init__()
        self.q = q
        self.name = name or "T(%s)" % q.name
        self.order_free = getattr(q, "order_free", False)

    def basis(self, ground):
        out = []
        for parts in set_compositions(ground):
            for word in product(*[self.q.basis(S) for S in parts]):
                out.append(tuple(word))
        return out

    def ground(self, key):
        g = frozenset()
        for x in key:
            g |= self.q.ground(x)
        return g

    def relabel(self, key, mapping):
        return tuple(self.q.relabel(x, mapping) for x in key)

    def product(self, a, b):
        if self.ground(a) & self.ground(b):
            raise ValueError("product of keys on overlapping grounds")
        return LinComb.of(a + b)

    def coproduct(self, key, S1, S2):
        left, right = [], []
        for x in key:
            g = self.q.ground(x)
            if g <= S1:
                left.append(x)
            elif g <= S2:
                right.append(x)
            else:
                return LinComb()
        return LinComb.of((tuple(left), tuple(right)))


def free_monoid(q, name=None):
    """Free monoid on a species q with q[empty] = 0."""
    if q.basis(frozenset()):
        raise ValueError("generator species must vanish on the empty ground")
    return FreeMonoid(q, name)


class SpeciesMorphism:
    """Linear map h -> k given on basis keys."""

    def __init__(self, source, target, func, name="f"):
        self.source, self.target, self.func, self.name = source, target, func, name
        self._cache = {}

    def __call__(self, key):
        r = self._cache.get(key)
        if r is None:
            r = self.func(key)
            self._cache[key] = r
        return r

    def apply(self, x):
        return x.map(self)


class CheckReport:
    """Outcome of a verification run: counts per check and failure witnesses."""

    def __init__(self, subject):
        self.subject = subject
        self.counts = {}
        self.failures = {}
        self.observed = {}
        self.notes = []

    def record(self, check, ok, witness=None, keep=3):
        c = self.counts.setdefault(check, [0, 0])
        c[0] += 1
        if not ok:
            c[1] += 1
            ws = self.failures.setdefault(check, [])
            if len(ws) < keep:
                ws.append(witness)

    def fail(self, check, witness):
        self.record(check, False, witness)

    @property
    def ok(self):
        return not any(f for _, f in self.counts.values())

    def lines(self):
        out = []
        for check, (n, f) in self.counts.items():
            status = "ok" if f == 0 else "FAIL"
            out.append("%s %s: %d checked, %d failed" % (status, check, n, f))
            for w in self.failures.get(check, ()):
                out.append("    witness: %s" % (w,))
        for k, v in self.observed.items():
            out.append("observed %s: %s" % (k, v))
        out.extend(self.notes)
        return out

    def __str__(self):
        head = "%s: %s" % (self.subject, "pass" if self.ok else "FAIL")
        return "\n".join([head] + ["  " + s for s in self.lines()])


def _swap(x):
    return x.map_keys(lambda ab: (ab[1], ab[0]))


def _tensor_apply(x, f, g):
    """(f (x) g) applied to a LinComb of pairs; f, g map keys to LinCombs."""
    out = LinComb()
    for (a, b), c in x.items():
        out.iadd(f(a).tensor(g(b)), c)
    return out


def _cycle_map(I):
    labels = sorted(I)
    if len(labels) < 2:
        return {a: a for a in labels}
    # a transposition followed by a rotation: moves every label
    m = {a: labels[(k + 1) % len(labels)] for k, a in enumerate(labels)}
    m[labels[0]], m[labels[1]] = m[labels[1]], m[labels[0]]
    return m


def check_hopf_axioms(h, n_max, budget=10**6, equivariance=True):
    """Exhaustively check the Hopf monoid axioms on grounds {0..n-1}, n <= n_max.

    Checks connectedness and unit/counit laws, associativity,
    coassociativity, the compatibility square, equivariance under a
    relabeling, and observes (co)commutativity against the declared flags.
    """
    rep = CheckReport("axioms of %s up to n=%d" % (h.name, n_max))
    bases = {}

    def B(S):
        S = frozenset(S)
        r = bases.get(S)
        if r is None:
            r = h.basis(S)
            bases[S] = r
        return r

    for n in range(n_max + 1):
        if h.dim(n) > budget:
            raise BudgetExceeded("dim %s[%d] = %d exceeds budget %d" % (h.name, n, h.dim(n), budget))

    empty = B(frozenset())
    rep.record("connected", len(empty) == 1, "dim h[empty] = %d" % len(empty))
    u = empty[0]
    comm_seen, cocomm_seen = True, True
    comm_witness = cocomm_witness = None
    for n in range(n_max + 1):
        I = standard_ground(n)
        basis_I = B(I)
        for x in basis_I:
            e = LinComb.of(x)
            ok = h.mu(u, x) == e and h.mu(x, u) == e
            rep.record("unit", ok, ("mu with unit", x))
            ok = h.delta(x, frozenset(), I) == LinComb.of((u, x)) and h.delta(
                x, I, frozenset()
            ) == LinComb.of((x, u))
            rep.record("counit", ok, ("delta with empty part", x))
            if h.ground(x) != I:
                rep.fail("ground", x)

        # associativity
        for S1, S2, S3 in enumerate_decompositions(I, 3):
            for a in B(S1):
                for b in B(S2):
                    ab = h.mu(a, b)
                    for c in B(S3):
                        lhs = LinComb()
                        for k, v in ab.items():
                            lhs.iadd(h.mu(k, c), v)
                        rhs = LinComb()
                        for k, v in h.mu(b, c).items():
                            rhs.iadd(h.mu(a, k), v)
                        rep.record("associativity", lhs == rhs, (sorted(S1), sorted(S2), sorted(S3), a, b, c))

        # coassociativity
        for x in basis_I:
            for S1, S2, S3 in enumerate_decompositions(I, 3):
                lhs = LinComb()
                for (y, z), v in h.delta(x, S1 | S2, S3).items():
                    for (y1, y2), w in h.delta(y, S1, S2).items():
                        lhs.add_term((y1, y2, z), v * w)
                rhs = LinComb()
                for (y, z), v in h.delta(x, S1, S2 | S3).items():
                    for (z1, z2), w in h.delta(z, S2, S3).items():
                        rhs.add_term((y, z1, z2), v * w)
                rep.record("coassociativity", lhs == rhs, (sorted(S1), sorted(S2), sorted(S3), x))

        # compatibility and (co)commutativity
        Ts = list(subsets(I))
        for S1 in Ts:
            S2 = I - S1
            for a in B(S1):
                for b in B(S2):
                    m = h.mu(a, b)
                    if h.mu(b, a) != m:
                        comm_seen = False
                        comm_witness = comm_witness or (a, b)
                    for T1 in Ts:
                        T2 = I - T1
                        lhs = h.comul(m, T1, T2)
                        A, Bs, C, D = S1 & T1, S1 & T2, S2 & T1, S2 & T2
                        rhs = LinComb()
                        db = h.delta(b, C, D)
                        for (a1, a2), u1 in h.delta(a, A, Bs).items():
                            for (b1, b2), u2 in db.items():
                                rhs.iadd(h.mu(a1, b1).tensor(h.mu(a2, b2)), u1 * u2)
                        rep.record("compatibility", lhs == rhs, (sorted(S1), sorted(T1), a, b))
        for x in basis_I:
            for S1 in Ts:
                S2 = I - S1
                if _swap(h.delta(x, S1, S2)) != h.delta(x, S2, S1):
                    cocomm_seen = False
                    cocomm_witness = cocomm_witness or (x, sorted(S1))

        if equivariance and n >= 2:
            sigma = _cycle_map(I)
            rl = lambda k: h.relabel(k, sigma)  # noqa: E731
            for S1 in Ts:
                S2 = I - S1
                T1 = frozenset(sigma[a] for a in S1)
                T2 = I - T1
                for a in B(S1):
                    for b in B(S2):
                        ok = h.mu(a, b).map_keys(rl) == h.mu(rl(a), rl(b))
                        rep.record("equivariance", ok, ("product", a, b))
                for x in basis_I:
                    lhs = h.delta(x, S1, S2).map_keys(lambda yz: (rl(yz[0]), rl(yz[1])))
                    ok = lhs == h.delta(rl(x), T1, T2)
                    rep.record("equivariance", ok, ("coproduct", x, sorted(S1)))

    rep.observed["commutative"] = comm_seen
    rep.observed["cocommutative"] = cocomm_seen
    rep.record(
        "commutativity flag",
        comm_seen == h.commutative,
        "declared %s, observed %s (witness %s)" % (h.commutative, comm_seen, comm_witness),
    )
    rep.record(
        "cocommutativity flag",
        cocomm_seen == h.cocommutative,
        "declared %s, observed %s (witness %s)" % (h.cocommutative, cocomm_seen, cocomm_witness),
    )
    return rep


def check_morphism(f, n_max, injective=False, surjective=False, budget=10**6, equivariance=True):
    """Check that f commutes with products, coproducts and relabeling."""
    h, k = f.source, f.target
    rep = CheckReport("morphism %s: %s -> %s up to n=%d" % (f.name, h.name, k.name, n_max))
    for n in range(n_max + 1):
        if h.dim(n) > budget:
            raise BudgetExceeded("dim %s[%d] exceeds budget" % (h.name, n))
        I = standard_ground(n)
        Ts = list(subsets(I))
        bases = {S: h.basis(S) for S in Ts}
        for S1 in Ts:
            S2 = I - S1
            for a in bases[S1]:
                fa = f(a)
                for b in bases[S2]:
                    lhs = f.apply(h.mu(a, b))
                    rhs = k.mul(fa, f(b))
                    rep.record("products", lhs == rhs, (sorted(S1), a, b))
        for x in bases[I]:
            fx = f(x)
            for S1 in Ts:
                S2 = I - S1
                lhs = k.comul(fx, S1, S2)
                rhs = _tensor_apply(h.delta(x, S1, S2), f, f)
                rep.record("coproducts", lhs == rhs, (sorted(S1), x))
        if equivariance and n >= 2:
            sigma = _cycle_map(I)
            for x in bases[I]:
                lhs = f(x).map_keys(lambda y: k.relabel(y, sigma))
                rhs = f(h.relabel(x, sigma))
                rep.record("equivariance", lhs == rhs, x)
        if injective or surjective:
            kb = {y: i for i, y in enumerate(k.basis(I))}
            rows = [{kb[y]: c for y, c in f(x).items()} for x in bases[I]]
            r = rank(rows)
            if injective:
                rep.record("injective", r == len(bases[I]), "n=%d: rank %d < dim %d" % (n, r, len(bases[I])))
            if surjective:
                rep.record("surjective", r == len(kb), "n=%d: rank %d < dim %d" % (n, r, len(kb)))
    return rep


class Endomorphism:
    """Linear endomorphism of a Hopf monoid, given on basis keys."""

    def __init__(self, h, func, name="f"):
        self.h, self.func, self.name = h, func, name
        self._cache = {}

    def __call__(self, key):
        r = self._cache.get(key)
        if r is None:
            r = self.func(key)
            self._cache[key] = r
        return r

    def apply(self, x):
        return x.map(self)

    def __add__(self, other):
        return Endomorphism(self.h, lambda k: self(k) + other(k), "(%s+%s)" % (self.name, other.name))

    def __sub__(self, other):
        return Endomorphism(self.h, lambda k: self(k) - other(k), "(%s-%s)" % (self.name, other.name))

    def scaled(self, c):
        return Endomorphism(self.h, lambda k: self(k) * c, "%s*%s" % (c, self.name))

    def matrix(self, ground):
        """Columns of the map on the basis of h[ground], as {key: LinComb}."""
        return {x: self(x) for x in self.h.basis(ground)}


def identity_map(h):
    return Endomorphism(h, LinComb.of, "id")


def unit_counit(h):
    """iota . epsilon: the identity on h[empty], zero elsewhere."""
    return Endomorphism(h, lambda k: LinComb.of(k) if not h.ground(k) else LinComb(), "ie")


def convolution(f, g, h=None):
    """(f * g)(x) = sum over I = S u T of mu (f (x) g) Delta_{S,T}(x)."""
    h = h or f.h

    def conv(key):
        out = LinComb()
        for S in subsets(h.ground(key)):
            for (a, b), c in h.delta(key, S).items():
                out.iadd(h.mul(f(a), g(b)), c)
        return out

    return Endomorphism(h, conv, "(%s*%s)" % (f.name, g.name))


def iterated_coproduct(h, key, parts):
    """Delta_{S_1,...,S_k}(key) as a LinComb of k-tuples."""
    if len(parts) == 1:
        return LinComb.of((key,))
    rest = frozenset().union(*parts[1:])
    out = LinComb()
    for (a, b), c in h.delta(key, parts[0], rest).items():
        for tail, d in iterated_coproduct(h, b, parts[1:]).items():
            out.add_term((a,) + tail, c * d)
    return out


def iterated_product(h, xs):
    """mu(x_1, ..., x_k) for LinCombs x_i (left to right)."""
    acc = xs[0]
    for x in xs[1:]:
        acc = h.mul(acc, x)
    return acc


def eulerian_idempotent(h, x):
    """e(x) where e = log(id) = sum_k (-1)^(k+1)/k (id - iota eps)^(*k).

    (id - iota eps)^(*k) sums mu . Delta over decompositions into k
    nonempty parts, so the series stops at k = |I|.
    """
    if isinstance(x, LinComb):
        return x.map(lambda k: eulerian_idempotent(h, k))
    cache = h.__dict__.setdefault("_euler", {})
    r = cache.get(x)
    if r is not None:
        return r
    out = LinComb()
    for parts in set_compositions(h.ground(x)):
        if not parts:
            continue
        k = len(parts)
        coeff = Fraction((-1) ** (k + 1), k)
        for word, c in iterated_coproduct(h, x, parts).items():
            out.iadd(iterated_product(h, [LinComb.of(w) for w in word]), coeff * c)
    cache[x] = out
    return out


def is_primitive(h, x, ground):
    for S in subsets(ground):
        if S and S != ground and h.comul(x, S, ground - S):
            return False
    return True


def freeness_certificate(h, generators, n_max, eulerian=True):
    """Certify that ``generators`` freely generate the monoid h on grounds
    {0..n-1}, n <= n_max.

    ``generators(S)`` returns {name: LinComb in h[S]} for nonempty S. The
    multiplication map from the free monoid on the generators must be
    square and of full rank. With ``eulerian`` set (h cocommutative) the
    Eulerian images e(w) are checked primitive, e(w) - w is checked to lie
    in the span of products of at least two generators, the e(w) are checked
    to generate freely, and the induced map from the free monoid with its
    canonical coproduct is checked to be a Hopf morphism.
    """
    rep = CheckReport("freeness of %s up to n=%d" % (h.name, n_max))
    gen_cache = {}

    def gens(S):
        S = frozenset(S)
        if S not in gen_cache:
            gen_cache[S] = generators(S)
        return gen_cache[S]

    class Q(Species):
        name = "gens"

        def basis(self, ground):
            return [(frozenset(ground), g) for g in gens(ground)] if ground else []

        def ground(self, key):
            return key[0]

        def relabel(self, key, mapping):
            raise NotImplementedError

    q = Q()
    T = FreeMonoid(q, "T(gens)")

    def image(word, which):
        return iterated_product(h, [which(S, g) for S, g in word]) if word else LinComb.of(h.unit())

    plain = lambda S, g: gens(S)[g]  # noqa: E731
    e_cache = {}

    def euler(S, g):
        if (S, g) not in e_cache:
            e_cache[(S, g)] = eulerian_idempotent(h, gens(S)[g])
        return e_cache[(S, g)]

    for n in range(n_max + 1):
        I = standard_ground(n)
        hb = {y: i for i, y in enumerate(h.basis(I))}
        words = T.basis(I)
        rep.observed["n=%d" % n] = "dim T=%d, dim h=%d" % (len(words), len(hb))
        rep.record("square", len(words) == len(hb), "n=%d: %d words vs dim %d" % (n, len(words), len(hb)))
        ech = SparseEchelon()
        rows = []
        for w in words:
            row = {hb[y]: c for y, c in image(w, plain).items()}
            rows.append(row)
            ech.add(row, w)
        r = rank(rows)
        rep.record("full rank", r == len(hb) == len(words), "n=%d: rank %d, dim %d, words %d" % (n, r, len(hb), len(words)))
        if not eulerian or n == 0:
            continue
        for S, g in [(k[0], k[1]) for k in q.basis(I)]:
            ex = euler(S, g)
            rep.record("eulerian primitive", is_primitive(h, ex, I), (sorted(S), g))
            diff = ex - gens(S)[g]
            comb = ech.express({hb[y]: c for y, c in diff.items()})
            ok = comb is not None and all(len(w) >= 2 for w in comb)
            rep.record("eulerian triangularity", ok, (sorted(S), g))
        erows = [{hb[y]: c for y, c in image(w, euler).items()} for w in words]
        r = rank(erows)
        rep.record("eulerian generators free", r == len(hb), "n=%d: rank %d" % (n, r))
    if eulerian:
        phi = SpeciesMorphism(T, h, lambda w: image(w, euler), "canonical")
        sub = check_morphism(phi, n_max, equivariance=False)
        for check, (cnt, bad) in sub.counts.items():
            if check == "equivariance":
                continue
            rep.counts["canonical Hopf map " + check] = [cnt, bad]
            if bad:
                rep.failures["canonical Hopf map " + check] = sub.failures.get(check, [])
    return rep


def type_series(h, N):
    """Coefficient n = number of S_n-orbits on the basis of h[n]."""
    coeffs = []
    for n in range(N + 1):
        if h.order_free:
            d = h.dim(n)
            if d % factorial(n):
                raise ValueError("dim %s[%d] = %d not divisible by %d!" % (h.name, n, d, n))
            coeffs.append(d // factorial(n))
            continue
        I = standard_ground(n)
        basis = h.basis(I)
        parent = {x: x for x in basis}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in range(n - 1):
            sigma = {i: i for i in I}
            sigma[a], sigma[a + 1] = a + 1, a
            for x in basis:
                y = h.relabel(x, sigma)
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[rx] = ry
        coeffs.append(len({find(x) for x in basis}))
    return TruncSeries(coeffs, N)
