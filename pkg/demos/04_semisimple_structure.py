# Semiprime algebras split into simple two-sided ideals; inside each one the
# primitive idempotents expose the matrix degree and the division corner.
import itertools

from ringstruct.classify import (
    corner_division_check,
    frobenius_type,
    reduced_decompose,
    semisimple_decompose,
)
from ringstruct.documents import to_object
from ringstruct.generators import direct_sum, matrix_algebra, quaternion, reduced_ring
from ringstruct.idempotents import brauer_idempotent, minimal_one_sided_ideal

m3 = to_object(matrix_algebra(3))
factors, family = semisimple_decompose(m3)
print("M3 decomposes into", len(factors), "simple factor(s):", factors[0])
print("primitive idempotents found:", len(family))
print("corner verdicts (diagonal vs off-diagonal):")
for a, b in itertools.product(family.members[:2], repeat=2):
    print("  ", "same" if a == b else "diff", "->", corner_division_check(m3, a, b))

print("\nminimal left ideal of M3 via Brauer's lemma:")
ideal = minimal_one_sided_ideal(m3, "left")
print("  dim", ideal.dim, "generator idempotent:", brauer_idempotent(m3, ideal).coords)

mixed = to_object(direct_sum([matrix_algebra(1), matrix_algebra(2)], name="Q+M2"))
factors, _ = semisimple_decompose(mixed)
print("\nQ x M2 has factors:", sorted((f.matrix_degree, f.division_dim) for f in factors))

quat = to_object(quaternion())
print("\nquaternion corner recognition:", frobenius_type(quat))

red = to_object(reduced_ring(2, 1, 1))
result = reduced_decompose(red)
print("reduced ring K^2 x C x H recovered as:", result.counts)
bad = reduced_decompose(to_object(matrix_algebra(2)))
print("M2 is not reduced; witness with square zero:", bad.witness.coords)
