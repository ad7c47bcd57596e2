"""Brute-force census of conjugacy classes and superclasses of U_n(F_p).

Elements of U([n], 0<1<...<n-1) are indexed by reading the strictly upper
entries in row-major order as base-p digits, most significant first; the
identity has index 0. Orbits are the connected components of the graph
whose edges are single elementary-generator moves; every id is the minimal
element index of its orbit.
"""

import os
import struct
from pathlib import Path

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .algebra import is_prime
from .errors import BudgetExceeded
from .unitriangular import UniMatrix, upper_positions

__all__ = [
    "BudgetExceeded",
    "GroupCensus",
    "DEFAULT_BUDGET",
    "build_census",
    "get_census",
    "save_census",
    "load_census",
    "census_size",
    "default_cache_dir",
]

MAGIC = b"UQCENSUS1"
# largest group in the default range: U_4(F_7) with 7**6 = 117649 elements
DEFAULT_BUDGET = 2**17
CACHE_ENV = "UNIHOPF_CACHE_DIR"


def census_size(n, p):
    return p ** (n * (n - 1) // 2)


def default_cache_dir():
    env = os.environ.get(CACHE_ENV)
    return Path(env) if env else None


class GroupCensus:
    """Class and superclass partitions of U_n(F_p)."""

    def __init__(self, n, p, class_id, superclass_id, class_reps, superclass_reps):
        self.n = n
        self.p = p
        self.class_id = class_id
        self.superclass_id = superclass_id
        self.class_reps = class_reps
        self.superclass_reps = superclass_reps
        self.positions = upper_positions(n)
        self._weights = p ** np.arange(len(self.positions) - 1, -1, -1, dtype=np.int64)
        self._members = None

    @property
    def size(self):
        return len(self.class_id)

    @property
    def num_classes(self):
        return len(self.class_reps)

    @property
    def num_superclasses(self):
        return len(self.superclass_reps)

    def digits(self, index):
        out = []
        for w in self._weights:
            out.append(int(index // w) % self.p)
        return out

    def index_of_positions(self, pos_entries):
        """Index of the element with entries {(a, b): v} in standard coordinates."""
        idx = 0
        for k, ab in enumerate(self.positions):
            idx = idx * self.p + pos_entries.get(ab, 0) % self.p
        return idx

    def index_of(self, U):
        """Index of U after transporting it to the standard order."""
        pos = {a: k for k, a in enumerate(U.order)}
        return self.index_of_positions({(pos[i], pos[j]): v for (i, j), v in U.entries})

    def matrix(self, index, order=None):
        order = tuple(range(self.n)) if order is None else tuple(order)
        ent = {ab: d for ab, d in zip(self.positions, self.digits(index)) if d}
        return UniMatrix.from_positions(order, self.p, ent)

    def class_of(self, U):
        return int(self.class_id[self.index_of(U)])

    def superclass_of(self, U):
        return int(self.superclass_id[self.index_of(U)])

    def class_members(self, cid):
        if self._members is None:
            order = np.argsort(self.class_id, kind="stable")
            ids = self.class_id[order]
            bounds = np.flatnonzero(np.diff(ids)) + 1
            groups = np.split(order, bounds)
            self._members = {int(g[0]): g for g in groups}
        return self._members[cid]

    def superclass_rep_of_class(self, cid):
        return int(self.superclass_reps_by_id[int(self.superclass_id[cid])])

    @property
    def superclass_reps_by_id(self):
        return {int(self.superclass_id[r]): int(r) for r in self.superclass_reps}


def _decode_all(n, p):
    K = n * (n - 1) // 2
    N = p**K
    idx = np.arange(N, dtype=np.int64)
    digits = np.empty((N, K), dtype=np.int64)
    for k in range(K - 1, -1, -1):
        digits[:, k] = idx % p
        idx //= p
    mats = np.zeros((N, n, n), dtype=np.int64)
    for k, (a, b) in enumerate(upper_positions(n)):
        mats[:, a, b] = digits[:, k]
    return mats


def _encode_all(mats, n, p):
    idx = np.zeros(mats.shape[0], dtype=np.int64)
    for a, b in upper_positions(n):
        idx = idx * p + mats[:, a, b]
    return idx


def _orbit_ids(N, images):
    src = np.concatenate([np.arange(N, dtype=np.int64)] * len(images))
    dst = np.concatenate(images)
    graph = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(N, N)).tocsr()
    _, labels = connected_components(graph, directed=True, connection="weak")
    mins = np.full(labels.max() + 1, N, dtype=np.int64)
    np.minimum.at(mins, labels, np.arange(N, dtype=np.int64))
    return mins[labels]


def build_census(n, p, budget=DEFAULT_BUDGET):
    if not is_prime(p):
        raise ValueError("p must be prime, got %r" % (p,))
    if n < 0:
        raise ValueError("n must be nonnegative")
    N = census_size(n, p)
    if N > budget:
        raise BudgetExceeded(
            "U_%d(F_%d) has %d elements; budget is %d (needs budget >= %d)"
            % (n, p, N, budget, N)
        )
    nil = _decode_all(n, p)  # U - Id
    conj, sup = [], []
    for i, j in upper_positions(n):
        for c in range(1, p):
            # (Id + cE_ij) N (Id - cE_ij): row i += c row j, then col j -= c col i
            m = nil.copy()
            m[:, i, :] = (m[:, i, :] + c * m[:, j, :]) % p
            m[:, :, j] = (m[:, :, j] - c * m[:, :, i]) % p
            conj.append(_encode_all(m, n, p))
            # (Id + cE_ij) N
            m = nil.copy()
            m[:, i, :] = (m[:, i, :] + c * m[:, j, :]) % p
            sup.append(_encode_all(m, n, p))
            # N (Id + cE_ij)
            m = nil.copy()
            m[:, :, j] = (m[:, :, j] + c * m[:, :, i]) % p
            sup.append(_encode_all(m, n, p))
    if conj:
        class_id = _orbit_ids(N, conj)
        superclass_id = _orbit_ids(N, sup)
    else:
        class_id = np.zeros(N, dtype=np.int64)
        superclass_id = np.zeros(N, dtype=np.int64)
    class_reps = np.unique(class_id)
    nz = nil != 0
    sparse = (nz.sum(axis=2) <= 1).all(axis=1) & (nz.sum(axis=1) <= 1).all(axis=1)
    superclass_reps = np.flatnonzero(sparse)
    sc_of_reps = superclass_id[superclass_reps]
    if len(np.unique(sc_of_reps)) != len(sc_of_reps) or len(sc_of_reps) != len(
        np.unique(superclass_id)
    ):
        raise AssertionError("superclasses do not have unique row/column-sparse members")
    superclass_reps = superclass_reps[np.argsort(sc_of_reps, kind="stable")]
    return GroupCensus(n, p, class_id, superclass_id, class_reps, superclass_reps)


def save_census(census, path):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "wb") as f:
        f.write(MAGIC)
        f.write(struct.pack("<IIQ", census.n, census.p, census.size))
        for arr in (census.class_id, census.superclass_id):
            f.write(np.asarray(arr, dtype="<i8").tobytes())
        for arr in (census.class_reps, census.superclass_reps):
            f.write(struct.pack("<Q", len(arr)))
            f.write(np.asarray(arr, dtype="<i8").tobytes())


def load_census(path):
    with open(path, "rb") as f:
        data = f.read()
    if not data.startswith(MAGIC):
        raise ValueError("%s is not a census file" % path)
    off = len(MAGIC)
    n, p, size = struct.unpack_from("<IIQ", data, off)
    off += struct.calcsize("<IIQ")
    arrays = []
    for _ in range(2):
        arrays.append(np.frombuffer(data, dtype="<i8", count=size, offset=off).astype(np.int64))
        off += 8 * size
    for _ in range(2):
        (m,) = struct.unpack_from("<Q", data, off)
        off += 8
        arrays.append(np.frombuffer(data, dtype="<i8", count=m, offset=off).astype(np.int64))
        off += 8 * m
    return GroupCensus(n, p, *arrays)


def _cache_path(cache_dir, n, p):
    return Path(cache_dir) / ("census_n%d_p%d.bin" % (n, p))


_memory = {}


def get_census(n, p, cache_dir=None, budget=DEFAULT_BUDGET):
    """Census for (n, p), reusing the in-process and on-disk caches."""
    key = (n, p)
    if key in _memory:
        return _memory[key]
    cache_dir = cache_dir if cache_dir is not None else default_cache_dir()
    census = None
    if cache_dir is not None:
        path = _cache_path(cache_dir, n, p)
        if path.exists():
            census = load_census(path)
    if census is None:
        census = build_census(n, p, budget=budget)
        if cache_dir is not None:
            save_census(census, _cache_path(cache_dir, n, p))
    _memory[key] = census
    return census
