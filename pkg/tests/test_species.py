import random
from fractions import Fraction
from math import factorial

import pytest

from unihopf.enumerative import bell_and_atomic
from unihopf.instances import (
    AtomicDiagrams,
    Exponential,
    Graphs,
    LinearOrders,
    Partitions,
    SuperclassFunctions,
    SuperclassLambda,
    constant_functions,
    scf_atomic_generators,
    scf_lambda_to_kappa,
)
from unihopf.partitions import ArcDiagram, SetPartition
from unihopf.species import (
    Endomorphism,
    LinComb,
    Species,
    SpeciesMorphism,
    TruncSeries,
    check_hopf_axioms,
    check_morphism,
    convolution,
    eulerian_idempotent,
    free_monoid,
    freeness_certificate,
    hadamard,
    identity_map,
    is_primitive,
    standard_ground,
    subsets,
    type_series,
    unit_counit,
)
from unihopf.algebra import series_invert


class Ones(Species):
    """One basis element on every nonempty ground."""

    name = "E+"

    def basis(self, ground):
        return [frozenset(ground)] if ground else []

    def ground(self, key):
        return key

    def relabel(self, key, mapping):
        return frozenset(mapping[a] for a in key)


def test_lincomb_arithmetic():
    x = LinComb({"a": 1, "b": 2})
    y = LinComb({"a": -1, "c": Fraction(1, 2)})
    s = x + y
    assert s == LinComb({"b": 2, "c": Fraction(1, 2)})
    assert "a" not in s.keys()
    assert (x - x) == LinComb() and not (x - x)
    assert x * 0 == LinComb()
    assert (-x).coeff("b") == -2
    assert LinComb.sum_of(["a", "a", "b"]) == LinComb({"a": 2, "b": 1})
    t = LinComb.of("a").tensor(LinComb({"b": 3}))
    assert t == LinComb({("a", "b"): 3})


def test_free_monoid_dimension():
    T = free_monoid(Ones())
    assert [T.dim(n) for n in range(5)] == [1, 1, 3, 13, 75]


def test_free_monoid_rejects_empty_generators():
    class Bad(Ones):
        def basis(self, ground):
            return [frozenset(ground)]

    with pytest.raises(ValueError):
        free_monoid(Bad())


def test_generators_primitive():
    T = free_monoid(Ones())
    I = standard_ground(3)
    x = (I,)
    for S in subsets(I):
        if S and S != I:
            assert not T.delta(x, S)
    assert is_primitive(T, LinComb.of(x), I)


def test_free_monoid_axioms():
    rep = check_hopf_axioms(free_monoid(Ones()), 4)
    assert rep.ok, str(rep)
    assert rep.observed["cocommutative"] and not rep.observed["commutative"]


def test_hadamard_dimension_and_unit():
    LP = hadamard(LinearOrders(), Partitions())
    assert LP.dim(3) == 30
    Pi = Partitions()
    EP = hadamard(Exponential(), Pi)
    for n in range(5):
        I = standard_ground(n)
        assert [b for _, b in EP.basis(I)] == Pi.basis(I)
    iso = SpeciesMorphism(Pi, EP, lambda X: LinComb.of((X.ground, X)), "E x")
    assert check_morphism(iso, 4, injective=True, surjective=True).ok


def test_hadamard_axioms_LG():
    rep = check_hopf_axioms(hadamard(LinearOrders(), Graphs()), 4)
    assert rep.ok, str(rep)


def test_identity_morphism():
    Pi = Partitions()
    assert check_morphism(SpeciesMorphism(Pi, Pi, LinComb.of, "id"), 4, injective=True).ok


def test_corrupted_morphism_reports_witness():
    good = constant_functions(2)
    target = good.target

    def bad(order):
        out = good(order)
        if len(order) == 2:
            U = next(iter(out.keys()))
            out = out - LinComb.of(U, 2)  # flip one sign
        return out

    f = SpeciesMorphism(good.source, target, bad, "corrupted")
    rep = check_morphism(f, 3)
    assert not rep.ok
    assert rep.failures["products"] or rep.failures["coproducts"]
    assert "FAIL" in str(rep)


def random_endo(h, seed):
    def f(key):
        rng = random.Random("%s/%r" % (seed, key))
        return LinComb({y: rng.randint(-2, 2) for y in h.basis(h.ground(key))})

    return Endomorphism(h, f, "r%d" % seed)


def test_convolution_unit_and_associativity():
    h = Partitions()
    f, g, k = (random_endo(h, s) for s in (1, 2, 3))
    u = unit_counit(h)
    for n in range(4):
        for x in h.basis(standard_ground(n)):
            assert convolution(u, f)(x) == f(x) == convolution(f, u)(x)
            assert convolution(convolution(f, g), k)(x) == convolution(f, convolution(g, k))(x)


@pytest.mark.parametrize("h", [LinearOrders(), Partitions()], ids=lambda h: h.name)
def test_local_unipotence(h):
    d = identity_map(h) - unit_counit(h)
    power = d
    for k in range(1, 5):
        for n in range(k):
            for x in h.basis(standard_ground(n)):
                assert not power(x)
        power = convolution(power, d)


def eulerian_endo(h):
    return Endomorphism(h, lambda x: eulerian_idempotent(h, x), "e")


@pytest.mark.parametrize(
    "h,n_max",
    [(LinearOrders(), 4), (Partitions(), 4), (Graphs(), 3)],
    ids=["L", "Pi", "G"],
)
def test_eulerian_projects_onto_primitives(h, n_max):
    for n in range(1, n_max + 1):
        I = standard_ground(n)
        for x in h.basis(I):
            ex = eulerian_idempotent(h, x)
            assert is_primitive(h, ex, I)
            assert eulerian_idempotent(h, ex) == ex


def test_exp_of_log_is_identity():
    h = Partitions()
    e = eulerian_endo(h)
    total = unit_counit(h)
    power = unit_counit(h)
    for k in range(1, 5):
        power = convolution(power, e)
        total = total + power.scaled(Fraction(1, factorial(k)))
    for n in range(5):
        for x in h.basis(standard_ground(n)):
            assert total(x) == LinComb.of(x)


def test_eulerian_fixes_primitives():
    T = free_monoid(Ones())
    x = (standard_ground(3),)
    assert eulerian_idempotent(T, x) == LinComb.of(x)
    scf = SuperclassFunctions(2)
    D = ArcDiagram(("i", "j"), SetPartition([["i", "j"]]))
    lam = scf_lambda_to_kappa(D)
    assert is_primitive(scf, lam, frozenset("ij"))
    assert eulerian_idempotent(scf, lam) == lam


@pytest.mark.parametrize("n", range(1, 5))
def test_eulerian_idempotent_on_scf(n):
    h = SuperclassFunctions(2)
    for x in h.basis(standard_ground(n)):
        ex = eulerian_idempotent(h, x)
        assert eulerian_idempotent(h, ex) == ex


def test_scf_freeness_certificate():
    rep = freeness_certificate(SuperclassFunctions(2), scf_atomic_generators(2), 4)
    assert rep.ok, str(rep)


def test_corrupted_generators_rank_defect():
    full = scf_atomic_generators(2)
    victim = ArcDiagram((0, 1, 2), SetPartition([[0, 2], [1]]))

    def gens(S):
        g = dict(full(S))
        g.pop(victim, None)
        return g

    rep = freeness_certificate(SuperclassFunctions(2), gens, 3, eulerian=False)
    assert not rep.ok
    assert rep.counts["full rank"][1] == 1
    assert "rank" in str(rep)


def test_lambda_instance_matches_kappa_instance():
    lam = SuperclassLambda(2)
    D = ArcDiagram((0, 1), SetPartition([[0, 1]]))
    E = ArcDiagram((2,), SetPartition([[2]]))
    assert lam.mu(D, E) == LinComb.of(D.union(E, (0, 1, 2)))


def test_type_series_examples():
    assert list(type_series(LinearOrders(), 6)) == [1] * 7
    # orbits of set partitions are integer partitions
    assert list(type_series(Partitions(), 6)) == [1, 1, 2, 3, 5, 7, 11]
    B, _ = bell_and_atomic(6)
    assert list(type_series(hadamard(LinearOrders(), Partitions()), 6)) == B


def test_type_series_of_free_monoid():
    q = Ones()
    T = free_monoid(q)
    tq = type_series(T, 5)
    one_minus = TruncSeries([1] + [-1] * 5, 5)
    assert tq == series_invert(one_minus)
    d = AtomicDiagrams(2)
    Td = free_monoid(d)
    assert type_series(Td, 5) == series_invert(TruncSeries([1] + [-c for c in list(type_series(d, 5))[1:]], 5))


def test_LxPi_is_free_on_atomic_partitions():
    N = 8
    B, A = bell_and_atomic(N)
    LP = hadamard(LinearOrders(), Partitions())
    assert list(type_series(LP, 6)) == B[:7]
    inv = series_invert(TruncSeries([1] + [-a for a in A[1:]], N))
    assert list(inv) == B
