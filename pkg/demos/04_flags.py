"""
Counting flags, and where the inclusion-exclusion terms come from
================================================================

A flag with dimension drops (k_1, ..., k_m) is counted by the q-multinomial.
Splitting flags by how each subspace sits against the last basis vector
recovers the terms of the expansion one J at a time.
"""

from qflag import ffspace as ff
from qflag import qkernel as qk

F2 = ff.build_field(2)
comp = (1, 2, 1)
print("flags of type", comp, "in F_2^4:", ff.count_flags(F2, comp))
print("q-multinomial at q=2:", qk.qmultinomial(comp).evaluate({"q": 2}))

# the three subspace types for lines in F_2^3
print("(Type1, Type2, Type3) lines in F_2^3:", ff.type_census(F2, 3, 1))

# one J at a time
for J in qk.nonempty_subsets(3):
    count = ff.flag_type_pattern_count(F2, comp, set(J))
    term = qk.lemma_term(comp, J).evaluate({"q": 2})
    print(f"J={set(J)}: {count} flags, expansion term {term}")

# one flag, as JSON
flag = next(ff.enumerate_flags(F2, qk.Composition(comp)))
print(flag.to_json())
