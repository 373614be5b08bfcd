"""
Values at roots of unity
========================

Evaluating H_n at (w, w^2, ..., w^(m-1)) for a primitive m-th root of unity
w collapses the whole polynomial into a product.  Everything is computed
in Z[w] exactly, never with floats.
"""

from qflag import cyclotomic as cyc

print("Phi_12(x) =", cyc.cyclotomic_polynomial(12))

m = 3
for n in range(7):
    value = cyc.rs_eval_roots(n, m)
    print(f"H_{n}(w, w^2) =", value.to_mpoly(), "   rational:", value.is_rational_integral())

# the same point scaled by q
print("H_4(wq, w^2 q) =", cyc.rs_eval_roots(4, 3, scaled=True).to_mpoly())

# fractional powers: q^(1/m) is written as u
print("H_2(q^(1/2)) in u = q^(1/2):", cyc.special2_lhs(2, 2))

# H_1 at the scaled point, one variable at a time
for step in cyc.h1_scaling_chain(4):
    print("  ", step)
