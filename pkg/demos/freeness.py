"""
Free generators and the Eulerian idempotent
===========================================

Certifies that lambda functions of atomic arc diagrams freely generate
scf(U), and compares two candidate generating sets for f(U).
"""

from unihopf import eulerian_idempotent, freeness_certificate, type_series
from unihopf.instances import (
    AtomicDiagrams,
    Functions,
    SuperclassFunctions,
    fU_atomic_generators,
    fU_connected_generators,
    scf_atomic_generators,
    scf_lambda_to_kappa,
)
from unihopf.partitions import ArcDiagram, SetPartition
from unihopf.species import is_primitive

scf = SuperclassFunctions(2)

# The Eulerian idempotent projects onto primitives; a single arc is
# already primitive so it is fixed.
lam = scf_lambda_to_kappa(ArcDiagram("ij", SetPartition([["i", "j"]])))
print(eulerian_idempotent(scf, lam) == lam, is_primitive(scf, lam, frozenset("ij")))

# Full certificate: square full-rank multiplication map, primitive
# Eulerian images, triangularity, and the induced Hopf map.
print(freeness_certificate(scf, scf_atomic_generators(2), 4))

# Orbit counts of atomic diagrams per size.
print(type_series(AtomicDiagrams(2), 5))

# For f(U), matrices with connected graphs are too few: 42 words against
# 48 basis elements at n = 3. Id + E_13 in the order 123 has a
# disconnected graph but is not a product of smaller pieces.
rep = freeness_certificate(Functions(2), fU_connected_generators(2), 3, eulerian=False)
print(rep)

# Matrices that are not block diagonal along a proper initial segment do
# generate freely.
print(freeness_certificate(Functions(2), fU_atomic_generators(2), 3))
