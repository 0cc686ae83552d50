# Finite rings by tables are the brute-force counterweight to the exact
# linear algebra: the radical comes straight from the quasi-regularity
# formula, and everything is cross-checked by exhaustive ideal enumeration.
from ringstruct.finite import (
    finite_structure,
    jacobson_definitional,
    largest_nilpotent_ideal,
    matrix_ring_zp,
    strictly_upper_zp,
    zmod,
)

for n in (4, 6, 12, 16):
    ring = zmod(n)
    j = sorted(jacobson_definitional(ring))
    print(f"J(Z/{n}) = {j}")

print("\nM2 over Z/2 (order 16) is semisimple at finite scale:")
m22 = matrix_ring_zp(2, 2)
print("  definitional radical:", sorted(jacobson_definitional(m22)))
print("  largest nilpotent ideal by enumeration:", sorted(largest_nilpotent_ideal(m22)))

print("\nstrictly upper 3x3 over Z/2 (order 8) is nilpotent:")
t32 = strictly_upper_zp(3, 2)
st = finite_structure(t32)
print(
    "  nilpotent:", st.nilpotent,
    "index:", st.nilpotency_index,
    "only idempotent is zero:", st.idempotents == [t32.zero],
    "radical is everything:", len(st.jacobson) == t32.order,
)

print("\nZ/4 structure record:")
st = finite_structure(zmod(4))
print("  idempotents:", st.idempotents)
print("  units:", st.units)
print("  zero divisors:", st.zero_divisors)
print("  reduced:", st.is_reduced)
print("\nevery nonzero element of a finite ring is a unit or a zero-divisor:")
for x in range(1, 4):
    print(f"  {x}: unit={x in st.units} zero-divisor={x in st.zero_divisors}")
