from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from ringstruct.errors import DimensionMismatch
from ringstruct.linalg import (
    RatMatrix,
    Subspace,
    format_rat,
    kernel,
    parse_rat,
    rref,
    solve,
)


def test_rref_rank_one():
    m = RatMatrix.from_rows([[2, 4], [1, 2]])
    assert rref(m) == RatMatrix.from_rows([[1, 2], [0, 0]])


def test_rref_identity_fixed():
    assert rref(RatMatrix.identity(3)) == RatMatrix.identity(3)


def test_rref_permutation():
    m = RatMatrix.from_rows([[0, 1], [1, 0]])
    assert rref(m) == RatMatrix.identity(2)


def test_solve_identity():
    assert solve(RatMatrix.identity(2), [F(3), F(-1, 2)]) == (F(3), F(-1, 2))


def test_solve_inconsistent():
    assert solve(RatMatrix.from_rows([[1, 1], [1, 1]]), [1, 2]) is None


def test_solve_scalar():
    assert solve(RatMatrix.from_rows([[2]]), [1]) == (F(1, 2),)


def test_solve_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        solve(RatMatrix.identity(2), [1, 2, 3])


def test_kernel_line():
    assert kernel(RatMatrix.from_rows([[1, 1]])) == Subspace(2, [[1, -1]])


def test_kernel_identity_trivial():
    assert kernel(RatMatrix.identity(4)).dim == 0


def test_kernel_zero_matrix_full():
    assert kernel(RatMatrix.from_rows([[0, 0], [0, 0]])).dim == 2


def test_complement_standard():
    u = Subspace(2, [[1, 0]])
    assert u.complement_in(Subspace.full(2)) == Subspace(2, [[0, 1]])


def test_intersect_trivial():
    assert Subspace(2, [[1, 1]]).intersect(Subspace(2, [[1, 0]])).dim == 0


def test_sum_full():
    assert Subspace(2, [[1, 0]]).add(Subspace(2, [[0, 1]])) == Subspace.full(2)


def test_canonical_equality():
    a = Subspace(3, [[1, 1, 0], [0, 1, 1]])
    b = Subspace(3, [[1, 0, -1], [2, 3, 1]])
    assert a == b
    assert a.basis == b.basis


def test_complement_requires_containment():
    with pytest.raises(DimensionMismatch):
        Subspace(2, [[1, 0]]).complement_in(Subspace(2, [[0, 1]]))


small_rationals = st.integers(min_value=-6, max_value=6)


def vectors(n):
    return st.lists(small_rationals, min_size=n, max_size=n)


def subspaces(n):
    return st.lists(vectors(n), min_size=0, max_size=n + 1).map(lambda vs: Subspace(n, vs))


@settings(max_examples=120, deadline=None)
@given(st.lists(vectors(4), min_size=1, max_size=5))
def test_rref_preserves_rowspace(rows):
    m = RatMatrix.from_rows(rows)
    reduced = rref(m)
    original = Subspace(4, rows)
    after = Subspace(4, reduced.row_list())
    assert original.contains_subspace(after)
    assert after.contains_subspace(original)


@settings(max_examples=120, deadline=None)
@given(subspaces(4), subspaces(4))
def test_grassmann_dimension_identity(u, v):
    assert u.add(v).dim + u.intersect(v).dim == u.dim + v.dim


@settings(max_examples=120, deadline=None)
@given(subspaces(4), subspaces(4))
def test_complement_splits(u, v):
    big = u.add(v)
    w = u.complement_in(big)
    assert u.intersect(w).dim == 0
    assert u.add(w) == big


@settings(max_examples=120, deadline=None)
@given(st.lists(vectors(3), min_size=2, max_size=4), vectors(3))
def test_solve_substitutes_exactly(rows, target):
    m = RatMatrix.from_rows([list(r) for r in zip(*rows)])  # 3 x k
    x = solve(m, target)
    if x is not None:
        assert m.mat_vec(x) == tuple(F(t) for t in target)
    else:
        assert not Subspace(3, rows).contains(target)


def test_rational_serialization_round_trip():
    for q in [F(0), F(3), F(-7, 2), F(22, 7)]:
        assert parse_rat(format_rat(q)) == q
    assert format_rat(F(4, 2)) == "2"
    assert format_rat(F(-1, 3)) == "-1/3"
