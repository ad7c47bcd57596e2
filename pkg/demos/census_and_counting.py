"""
Counting classes of unitriangular groups
========================================

Builds censuses of U_n(F_p), reads off class and superclass counts, and
checks the identities and inequalities those counts satisfy.
"""

from unihopf import get_census
from unihopf.enumerative import (
    C_TABLE,
    bell_and_atomic,
    c_sequence,
    check_counting2,
    check_counting_inequality,
    class_counts,
    fit_conjecture,
)

# A census labels every element of U_6(F_2) with its conjugacy class and
# its superclass. 2^15 elements, well under a second.
cen = get_census(6, 2)
print("U_6(F_2): %d elements, %d classes, %d superclasses"
      % (cen.size, cen.num_classes, cen.num_superclasses))

# Superclasses over F_2 are counted by Bell numbers.
T = class_counts(2, 6)
B, A = bell_and_atomic(6)
print("k_n(2):        ", T.k)
print("superclasses:  ", T.superclasses)
print("Bell numbers:  ", B)

# Inverting sum k_n x^n gives the c_n, which should match the tabulated
# polynomials at t = q - 1.
c = c_sequence(T.k)
print("c_n(2):        ", c[1:])
print("table at t=1:  ", [C_TABLE[n](1) for n in range(1, 7)])

# Atomic partitions bound the class numbers from below.
rep = check_counting_inequality(2, 6)
for line in rep.lines():
    print("  ", line)
print("coefficients at n=6:", rep.rows[-1]["coefficients"])
print("order inequality holds:", check_counting2(2, 6).ok)

# Interpolating c_4 across four primes recovers a polynomial in t with
# nonnegative coefficients.
res = fit_conjecture(4, [2, 3, 5, 7])
print("c_4 =", res.poly, "| matches table:", res.table_match)
