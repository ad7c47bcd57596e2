"""Finite label sets, linear orders, segments and decompositions.

A linear order is a plain tuple of distinct labels; a ground is a frozenset.
"""

from itertools import product

__all__ = [
    "ground_of",
    "is_segment",
    "concat_orders",
    "restrict_order",
    "enumerate_decompositions",
    "set_compositions",
    "relabel",
    "relabel_order",
    "standardize",
    "check_bijection",
    "compose_maps",
]


def ground_of(order):
    return frozenset(order)


def _check_subset(S, order):
    extra = set(S) - set(order)
    if extra:
        raise ValueError("labels %r are not in the ground" % sorted(extra, key=repr))


def is_segment(order, S):
    """True iff S is closed under betweenness in ``order``."""
    _check_subset(S, order)
    S = set(S)
    pos = [k for k, a in enumerate(order) if a in S]
    return not pos or pos[-1] - pos[0] + 1 == len(pos)


def concat_orders(l1, l2):
    if set(l1) & set(l2):
        raise ValueError("concatenated orders must have disjoint grounds")
    return tuple(l1) + tuple(l2)


def restrict_order(order, S):
    _check_subset(S, order)
    S = set(S)
    return tuple(a for a in order if a in S)


def enumerate_decompositions(I, k, nonempty=False):
    """All ordered decompositions (S_1, ..., S_k) of I, each exactly once.

    With empty parts allowed there are k**|I| of them.
    """
    if k < 1:
        raise ValueError("k must be positive")
    labels = sorted(I, key=_label_key)
    for assign in product(range(k), repeat=len(labels)):
        parts = [[] for _ in range(k)]
        for a, j in zip(labels, assign):
            parts[j].append(a)
        if nonempty and not all(parts):
            continue
        yield tuple(frozenset(x) for x in parts)


def set_compositions(I):
    """Ordered decompositions of I into any number of nonempty parts."""
    labels = sorted(I, key=_label_key)
    if not labels:
        yield ()
        return
    for k in range(1, len(labels) + 1):
        yield from enumerate_decompositions(labels, k, nonempty=True)


def _label_key(a):
    return (type(a).__name__, a)


def check_bijection(mapping, ground):
    ground = set(ground)
    missing = ground - set(mapping)
    if missing:
        raise ValueError("map undefined on %r" % sorted(missing, key=_label_key))
    images = [mapping[a] for a in ground]
    if len(set(images)) != len(images):
        raise ValueError("map is not injective on the ground")


def relabel_order(order, mapping):
    return tuple(mapping[a] for a in order)


def relabel(obj, mapping):
    """Transport a species basis key along a label bijection.

    Orders (tuples of labels) are handled here; other keys provide their own
    ``relabel`` method.
    """
    if hasattr(obj, "relabel"):
        check_bijection(mapping, obj.ground)
        return obj.relabel(mapping)
    if isinstance(obj, tuple):
        check_bijection(mapping, obj)
        return relabel_order(obj, mapping)
    raise TypeError("cannot relabel %r" % (obj,))


def compose_maps(tau, sigma):
    """tau after sigma, as a dict."""
    return {a: tau[b] for a, b in sigma.items()}


def standardize(order):
    """Map each label to its position in ``order``."""
    return {a: k for k, a in enumerate(order)}
