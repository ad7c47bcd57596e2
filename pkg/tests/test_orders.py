import pytest
from hypothesis import given, strategies as st

from unihopf.orders import (
    compose_maps,
    concat_orders,
    enumerate_decompositions,
    is_segment,
    relabel,
    restrict_order,
    set_compositions,
)
from unihopf.partitions import SetPartition

L6 = tuple("fghijk")


def test_segments():
    assert is_segment(L6, {"h", "i"})
    assert not is_segment(L6, {"f", "i"})
    assert is_segment(L6, set())
    with pytest.raises(ValueError):
        is_segment(L6, {"z"})


def test_concat_and_restrict():
    assert concat_orders(("a", "b"), ("c",)) == ("a", "b", "c")
    assert concat_orders((), ("x", "y")) == ("x", "y")
    assert concat_orders(("b", "c"), ("a", "d")) == ("b", "c", "a", "d")
    with pytest.raises(ValueError):
        concat_orders(("a",), ("a",))
    assert restrict_order(("c", "a", "b"), {"a", "c"}) == ("c", "a")
    assert restrict_order(L6, set(L6)) == L6
    assert restrict_order(("a", "b", "c"), set()) == ()
    with pytest.raises(ValueError):
        restrict_order(("a",), {"b"})


def test_decomposition_counts():
    assert len(list(enumerate_decompositions({"a", "b"}, 2))) == 4
    assert len(list(enumerate_decompositions({"a", "b", "c"}, 2, nonempty=True))) == 6
    assert list(enumerate_decompositions(set(), 2)) == [(frozenset(), frozenset())]
    ds = list(enumerate_decompositions(range(4), 3))
    assert len(ds) == 81 and len(set(ds)) == 81
    # ordered set partitions of a 3-set: 1 + 6 + 6
    assert len(list(set_compositions(range(3)))) == 13
    with pytest.raises(ValueError):
        list(enumerate_decompositions({1}, 0))


def test_relabel_examples():
    m = {"a": "x", "b": "y", "c": "z"}
    assert relabel(("a", "b", "c"), m) == ("x", "y", "z")
    ident = {a: a for a in "abc"}
    assert relabel(("c", "a", "b"), ident) == ("c", "a", "b")
    X = SetPartition([["a", "b"], ["c"]])
    assert relabel(X, {"a": "c", "b": "b", "c": "a"}) == SetPartition([["c", "b"], ["a"]])
    with pytest.raises(ValueError):
        relabel(("a", "b"), {"a": "x", "b": "x"})


perms = st.permutations(list(range(6)))


@given(perms, st.sets(st.integers(0, 5)))
def test_restrict_concat(order, S):
    l1 = tuple(a for a in order if a in S)
    l2 = tuple(a for a in order if a not in S)
    assert restrict_order(concat_orders(l1, l2), S) == l1


@given(perms, st.integers(0, 5), st.integers(0, 5), st.integers(0, 5), st.integers(0, 5))
def test_segment_restricts(order, a, b, c, d):
    lo, hi = sorted((a, b))
    T = set(order[lo : hi + 1])
    lo2, hi2 = sorted((c, d))
    S = set(order[max(lo, lo2) : min(hi, hi2) + 1]) if max(lo, lo2) <= min(hi, hi2) else set()
    assert is_segment(order, S) and is_segment(order, T)
    assert is_segment(restrict_order(order, T), S & T)


@given(perms, perms, perms)
def test_relabel_is_action(order, s, t):
    sigma = dict(enumerate(s))
    tau = dict(enumerate(t))
    assert relabel(relabel(tuple(order), sigma), tau) == relabel(tuple(order), compose_maps(tau, sigma))
