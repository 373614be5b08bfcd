"""
Gaussian binomials and subspace counting
========================================

[n choose k]_q is a polynomial in q.  Evaluated at a prime power it counts
the k-dimensional subspaces of F_q^n.
"""

from qflag import ffspace as ff
from qflag import qkernel as qk

# the polynomial itself
print("[4 choose 2]_q =", qk.qbinomial(4, 2))

# two independent constructions give the same thing
assert qk.qbinomial(6, 3) == qk.qbinomial_by_division(6, 3)

# at q = 1 we get back the ordinary binomial coefficients
print("row 6 at q=1:", [qk.qbinomial(6, k).evaluate({"q": 1}) for k in range(7)])

# count planes in F_4^4 by brute force and compare
F4 = ff.field_for_order(4)
planes = sum(1 for _ in ff.enumerate_subspaces(F4, 4, 2))
print("planes in F_4^4:", planes, "=", qk.qbinomial(4, 2).evaluate({"q": 4}))

# Galois numbers count all subspaces at once
print("G_n at q=2:", [qk.galois(n).evaluate({"q": 2}) for n in range(8)])
