"""Hopf monoids of class functions on unitriangular groups.

Exact computations with the Hopf monoids of functions, class functions and
superclass functions on unitriangular matrix groups over prime fields, their
combinatorial models (orders, set partitions, graphs, arc diagrams), and the
enumerative consequences for counting conjugacy classes.
"""

from .algebra import FFElem, IntPoly, TruncSeries, interpolate_poly, is_prime, series_invert
from .census import GroupCensus, build_census, get_census
from .species import (
    LinComb,
    HopfMonoid,
    check_hopf_axioms,
    check_morphism,
    eulerian_idempotent,
    freeness_certificate,
    free_monoid,
    hadamard,
    type_series,
)
from .instances import instance

__version__ = "0.1.0"
