# Exact rational linear algebra: every later structure computation reduces
# to row echelon forms, kernels, and canonical subspaces over Q.
from fractions import Fraction as F

from ringstruct.linalg import RatMatrix, Subspace, kernel, rref, solve

print("Row reduction is exact: no epsilons, no pivoting heuristics.")
m = RatMatrix.from_rows([[2, 4, 1], [1, 2, 0], [0, 0, 1]])
print("rref of a rank-2 matrix:")
for row in rref(m).row_list():
    print("  ", row)

print("\nSolving a system with fractional data:")
a = RatMatrix.from_rows([[2, 1], [1, 3]])
print("  solution of a.x = (1, -1/2):", solve(a, [F(1), F(-1, 2)]))

print("\nKernels come back as canonical subspaces (echelon basis, increasing pivots):")
k = kernel(RatMatrix.from_rows([[1, 1, 1], [0, 1, 2]]))
print("  kernel basis:", k.basis_rows())

print("\nSubspace arithmetic: sums, intersections, deterministic complements.")
u = Subspace(3, [[1, 1, 0]])
v = Subspace(3, [[1, 0, 0], [0, 1, 0]])
print("  dim(u + v) =", u.add(v).dim)
print("  dim(u intersect v) =", u.intersect(v).dim)
w = u.complement_in(v)
print("  complement of u inside v:", w.basis_rows())
assert u.add(w) == v and u.intersect(w).dim == 0

print("\nCanonical form makes equality a byte comparison:")
one = Subspace(3, [[1, 2, 3], [0, 1, 1]])
two = Subspace(3, [[1, 1, 2], [2, 3, 5]])
print("  same subspace from different spans:", one == two)
