"""
Hopf monoids of functions on unitriangular groups
=================================================

Products and coproducts in a few of the instances, then the axiom and
morphism checkers, and a place where the graph model and the superclass
model part ways.
"""

from unihopf import LinComb, check_hopf_axioms, check_morphism, instance
from unihopf.instances import (
    Functions,
    SuperclassFunctions,
    phi_graphs,
    phi_partitions,
    rel_model,
    scf_to_f,
)
from unihopf.partitions import ArcDiagram, SetPartition
from unihopf.unitriangular import UniMatrix

# In f(U) the product of two one-point identities is the sum over both
# matrices of U_2 that restrict to them.
f = Functions(2)
a, b = UniMatrix(("a",), 2), UniMatrix(("b",), 2)
print(f.mu(a, b))

# Coproducts split only block-diagonal matrices.
U = UniMatrix("abc", 2, {("a", "c"): 1})
print(f.delta(U, {"a"}))        # zero: the entry (a, c) crosses the cut
print(f.delta(U, {"a", "c"}))

# Superclass functions on arc diagrams.
scf = SuperclassFunctions(2)
D = ArcDiagram("ab", SetPartition([["a", "b"]]))
E = ArcDiagram(("c",), SetPartition([["c"]]))
print(scf.mu(D, E))

# The axiom checker is exhaustive over decompositions of small grounds.
for name in ("L", "Pi", "scfU"):
    rep = check_hopf_axioms(instance(name), 3)
    print(rep)

# phi: L x Pi -> scf(U) is an isomorphism over F_2.
print(check_morphism(phi_partitions(2), 3, injective=True, surjective=True))

# Composing phi with the inclusion into f(U) and going through graphs
# instead agree up to n = 3 but not at n = 4: the superclass of
# E_03 + E_12 contains E_02 + E_12 + E_13, whose graph lost the arc (0, 3).
order = (0, 1, 2, 3)
X = SetPartition([[0, 3], [1, 2]])
via_superclass = set(scf_to_f(2).apply(phi_partitions(2)((order, X))).keys())
via_graphs = set(phi_graphs(2).apply(rel_model()((order, X))).keys())
print("only in the superclass:", via_superclass - via_graphs)
print("only via graphs:       ", via_graphs - via_superclass)
