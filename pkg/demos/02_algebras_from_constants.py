# Algebras enter the engine as structure constants over labeled base fields.
# Associativity is validated at load; bad tables are rejected with the
# offending basis triple.
from ringstruct.algebra import (
    AlgebraPresentation,
    annihilators,
    center,
    classify_element,
    find_unity,
    generated_subring,
    power_span,
)
from ringstruct.documents import to_object
from ringstruct.errors import AssociativityError
from ringstruct.generators import matrix_algebra, quaternion, strictly_upper

m2 = to_object(matrix_algebra(2))
print("M2 over the base field: dim", m2.dim)
e12, e21 = m2.basis_element(1), m2.basis_element(2)
print("  E12 * E21 =", (e12 * e21).coords)
print("  unity:", find_unity(m2).coords)
print("  center dimension (scalar matrices):", center(m2).dim)

print("\nThe unit / zero-divisor trichotomy never leaves a third case:")
cls = classify_element(e12)
print("  E12 is a", cls.kind, "with witness", cls.witness.coords)
cls = classify_element(m2.element([3, 0, 0, 3]))
print("  3*I is a", cls.kind, "with inverse", cls.inverse.coords)

print("\nGenerated subrings and power spans:")
quat = to_object(quaternion())
print("  subring generated by i in the quaternions has dim", generated_subring([quat.basis_element(1)]).dim)
t3 = to_object(strictly_upper(3))
print("  spans of k-fold products in T3:", [power_span(t3, k).dim for k in (1, 2, 3)])

print("\nAnnihilators are one-sided ideals, computed as kernels:")
left, right, both = annihilators(t3.basis_elements())
print("  Ann(T3) has dim", both.dim, "spanned by", both.subspace.basis_rows())

print("\nA non-associative table is refused:")
try:
    AlgebraPresentation("broken", 2, {(0, 0): [0, 1], (1, 0): [1, 0]})
except AssociativityError as exc:
    print("  rejected:", exc)
