import numpy as np
import pytest

from unihopf.census import (
    MAGIC,
    BudgetExceeded,
    build_census,
    census_size,
    get_census,
    load_census,
    save_census,
)
from unihopf.unitriangular import UniMatrix, canonical_superclass_rep, enumerate_group

from oracles import conjugacy_classes, superclasses


def partition_of(cen, ids):
    groups = {}
    for idx, c in enumerate(ids):
        groups.setdefault(int(c), set()).add(cen.matrix(idx))
    return groups


@pytest.mark.parametrize("n,p", [(1, 2), (2, 3), (3, 2), (3, 3), (4, 2)])
def test_matches_brute_force(n, p):
    cen = build_census(n, p)
    assert cen.size == census_size(n, p) == len(list(enumerate_group(tuple(range(n)), p)))
    got = partition_of(cen, cen.class_id)
    assert set(map(frozenset, got.values())) == set(map(frozenset, conjugacy_classes(n, p)))
    got = partition_of(cen, cen.superclass_id)
    assert set(map(frozenset, got.values())) == set(map(frozenset, superclasses(n, p)))


@pytest.mark.parametrize(
    "n,p,k,s",
    [(0, 2, 1, 1), (3, 2, 5, 5), (4, 2, 16, 15), (5, 2, 61, 52), (4, 3, 57, 49)],
)
def test_counts(n, p, k, s):
    cen = get_census(n, p)
    assert (cen.num_classes, cen.num_superclasses) == (k, s)


def test_ids_are_orbit_minima():
    cen = build_census(4, 3)
    idx = np.arange(cen.size)
    assert (cen.class_id <= idx).all() and (cen.superclass_id <= idx).all()
    assert (cen.class_id[cen.class_reps] == cen.class_reps).all()
    assert cen.class_id[0] == 0 and cen.matrix(0).is_identity()


@pytest.mark.parametrize("n,p", [(4, 2), (4, 3), (5, 2)])
def test_classes_refine_superclasses(n, p):
    cen = get_census(n, p)
    for c in cen.class_reps:
        members = cen.class_members(int(c))
        assert len(set(cen.superclass_id[members].tolist())) == 1


@pytest.mark.parametrize("n,p", [(3, 3), (4, 2), (4, 3), (5, 2)])
def test_canonical_rep_is_constant_on_superclasses(n, p):
    cen = get_census(n, p)
    reps = cen.superclass_reps_by_id
    for idx in range(cen.size):
        U = cen.matrix(idx)
        want = cen.matrix(reps[int(cen.superclass_id[idx])])
        assert canonical_superclass_rep(U) == want


def test_index_roundtrip_on_other_orders():
    cen = get_census(3, 3)
    order = ("c", "a", "b")
    for idx in range(cen.size):
        U = cen.matrix(idx, order)
        assert U.order == order and cen.index_of(U) == idx


def test_cache_roundtrip(tmp_path):
    cen = build_census(4, 2)
    path = tmp_path / "c.bin"
    save_census(cen, path)
    assert path.read_bytes().startswith(MAGIC)
    back = load_census(path)
    assert (back.class_id == cen.class_id).all()
    assert (back.superclass_id == cen.superclass_id).all()
    assert (back.class_reps == cen.class_reps).all()
    assert (back.superclass_reps == cen.superclass_reps).all()
    save_census(back, tmp_path / "d.bin")
    assert (tmp_path / "d.bin").read_bytes() == path.read_bytes()


def test_budget():
    with pytest.raises(BudgetExceeded, match="needs budget"):
        build_census(9, 2)
    with pytest.raises(BudgetExceeded):
        build_census(4, 2, budget=10)
    with pytest.raises(ValueError):
        build_census(3, 4)
