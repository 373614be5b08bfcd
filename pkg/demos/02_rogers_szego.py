"""
Rogers-Szegő polynomials and their recursion
=============================================

H_n(t_1, ..., t_(m-1)) collects the q-multinomials of length m, with the
last variable set to 1.
"""

from qflag import qkernel as qk
from qflag import rogers_szego as rsz

for n in range(4):
    print(f"H_{n}(t) =", rsz.rs(n, 2).value)

# H_n(1, ..., 1) is the generalized Galois number
print("H_3(1,1) =", rsz.rs(3, 3).at_ones(), "   G_3^(3) =", qk.galois_general(3, 3))

# the recursion with elementary symmetric coefficients, for m = 3
rhs = rsz.rs_two_variable_display(4)
print("recursion reproduces H_5(t1, t2):", rhs == rsz.rs(5, 3).value)

# scaling t_1 by q is again a short combination of H_n, H_(n-1)
print("H_3(t q) =", rsz.rs_qshift_single_rhs(3))

# the generating function, checked on a truncation
print("generating function holds mod (x^7, q^9):", rsz.rs_generating_check(3, 6, 8))
