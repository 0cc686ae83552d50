# Nilpotency certificates, ideal flags, the Jacobson radical through the
# trace form, and the exact splitting off of a semisimple complement.
from ringstruct.documents import to_object
from ringstruct.generators import annihilator_gap, strictly_upper, upper_triangular
from ringstruct.radical import (
    is_nilpotent,
    jacobson_radical,
    nilpotent_flag,
    quotient_algebra,
    radical_complement,
)

t4 = to_object(strictly_upper(4))
cert = is_nilpotent(t4)
print("T4 nilpotent:", cert.is_nilpotent, "with index", cert.index)

flag = nilpotent_flag(t4)
print("full flag of two-sided ideals, dims:", [i.dim for i in flag.ideals])
print("the flag passes through the annihilator at step", flag.ann_index)

gap = to_object(annihilator_gap(2))
print("\nshared-socle family (n = 2): dim", gap.dim)
print("  nilpotency index:", is_nilpotent(gap).index)
print("  annihilator flag index:", nilpotent_flag(gap).ann_index)

ut3 = to_object(upper_triangular(3))
j = jacobson_radical(ut3)
print("\nupper triangular 3x3: radical dim", j.dim, "(the strictly upper part)")
s = radical_complement(ut3)
print("complement dim", s.dim, "basis:")
for row in s.subspace.basis_rows():
    print("  ", row)

quotient, proj = quotient_algebra(ut3, j)
print("quotient by the radical has dim", quotient.dim, "and is a split product:")
for pair, sparse in sorted(quotient.sparse_table().items()):
    print("  ", pair, "->", sparse)
