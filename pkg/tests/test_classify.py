import itertools
from fractions import Fraction as F

import pytest

from ringstruct.algebra import AlgebraPresentation, find_unity
from ringstruct.classify import (
    COMPLEX,
    DIVISION,
    NULL,
    QUATERNION,
    REAL,
    UNRECOGNIZED,
    central_primitive_idempotents,
    classify,
    corner_division_check,
    dorroh_unitization,
    frobenius_type,
    minimal_unitization,
    prime_check,
    reduced_decompose,
    semiprime_check,
    semisimple_decompose,
)
from ringstruct.documents import to_object
from ringstruct.errors import NotSemiprime, ValidationError
from ringstruct.generators import (
    annihilator_gap,
    base_field,
    direct_sum,
    matrix_algebra,
    null_ring,
    quadratic_line,
    quaternion,
    reduced_ring,
    relabel,
    square_cocycle,
    strictly_upper,
    upper_triangular,
)
from ringstruct.idempotents import principal_ideal
from ringstruct.linalg import Subspace, is_zero_vec, unit_vec
from ringstruct.radical import is_nilpotent, jacobson_radical


def test_semiprime_and_prime_examples():
    m2 = to_object(matrix_algebra(2))
    assert semiprime_check(m2) and prime_check(m2)
    pair = AlgebraPresentation("QxQ", 2, {(0, 0): [1, 0], (1, 1): [0, 1]})
    assert semiprime_check(pair) and not prime_check(pair)
    ut2 = to_object(upper_triangular(2))
    assert not semiprime_check(ut2) and not prime_check(ut2)


def test_semisimple_decompose_matrix_algebra():
    m2 = to_object(matrix_algebra(2))
    factors, family = semisimple_decompose(m2)
    assert len(factors) == 1
    f = factors[0]
    assert f.matrix_degree == 2 and f.division_dim == 1
    assert len(family) == 2
    total = m2.zero_element()
    for e in family.members:
        total = total + e
    assert total == find_unity(m2)


def test_semisimple_decompose_product():
    doc = direct_sum([matrix_algebra(1), matrix_algebra(2)], name="Q+M2")
    alg = to_object(doc)
    factors, _ = semisimple_decompose(alg)
    shapes = sorted((f.matrix_degree, f.division_dim) for f in factors)
    assert shapes == [(1, 1), (2, 1)]


def test_semisimple_decompose_quaternion():
    quat = to_object(quaternion())
    factors, family = semisimple_decompose(quat)
    assert len(factors) == 1
    assert factors[0].matrix_degree == 1 and factors[0].division_dim == 4
    assert len(family) == 1


def test_semisimple_rejects_radical():
    with pytest.raises(NotSemiprime):
        semisimple_decompose(to_object(upper_triangular(2)))


def test_dimension_accounting_over_semiprime_corpus(corpus):
    for alg in corpus:
        if alg.dim == 0 or not semiprime_check(alg):
            continue
        factors, family = semisimple_decompose(alg)
        assert sum(f.matrix_degree**2 * f.division_dim for f in factors) == alg.dim
        # central idempotents commute with everything
        for f in factors:
            c = f.central_idempotent
            for i in range(alg.dim):
                b = alg.basis_element(i)
                assert (c * b) == (b * c)
        # each factor is simple: members generate it as a two-sided ideal
        import random as _random

        rng = _random.Random(31)
        for f in factors:
            rows = list(f.ideal.subspace.basis_rows())
            for _ in range(4):
                combo = [F(0)] * alg.dim
                for r in rows:
                    c = rng.randint(-2, 2)
                    combo = [x + c * y for x, y in zip(combo, r)]
                if any(x != 0 for x in combo):
                    rows.append(tuple(combo))
            for v in rows:
                generated = _two_sided_closure(alg, v)
                assert generated == f.ideal.subspace


def _two_sided_closure(alg, v):
    current = Subspace(alg.dim, [v])
    while True:
        rows = current.basis_rows()
        new_rows = list(rows)
        for i in range(alg.dim):
            e = unit_vec(alg.dim, i)
            for r in rows:
                new_rows.append(alg.multiply_coords(e, r))
                new_rows.append(alg.multiply_coords(r, e))
        grown = Subspace(alg.dim, new_rows)
        if grown == current:
            return current
        current = grown


def test_minimal_left_ideals_are_primitive_columns(corpus):
    from ringstruct.idempotents import minimal_one_sided_ideal

    for alg in corpus:
        if alg.dim == 0 or not semiprime_check(alg):
            continue
        factors, family = semisimple_decompose(alg)
        expected = sum(f.matrix_degree for f in factors)
        assert len(family) == expected
        columns = {
            principal_ideal(alg, e, "left").add(Subspace(alg.dim, [e.coords])).basis
            for e in family.members
        }
        minimal = minimal_one_sided_ideal(alg, "left")
        assert minimal.subspace.basis in columns


def test_corner_checks_matrix_algebra():
    m2 = to_object(matrix_algebra(2))
    _, family = semisimple_decompose(m2)
    e1, e2 = family.members
    assert corner_division_check(m2, e1, e1) == DIVISION
    assert corner_division_check(m2, e1, e2) == NULL
    quat = to_object(quaternion())
    _, qfam = semisimple_decompose(quat)
    assert corner_division_check(quat, qfam.members[0], qfam.members[0]) == DIVISION


def test_corner_checks_across_corpus(corpus):
    for alg in corpus:
        if alg.dim == 0 or not semiprime_check(alg):
            continue
        _, family = semisimple_decompose(alg)
        for a, b in itertools.product(family.members, repeat=2):
            verdict = corner_division_check(alg, a, b)
            assert verdict == (DIVISION if a == b else NULL)


def test_frobenius_examples():
    assert frobenius_type(to_object(base_field())) == REAL
    assert frobenius_type(to_object(quadratic_line())) == COMPLEX
    assert frobenius_type(to_object(quaternion())) == QUATERNION


def test_frobenius_refuses_split_quadratic():
    # t^2 = 2: splits over the real closure, not an imaginary line
    sqrt2 = AlgebraPresentation(
        "Q(sqrt2)", 2, {(0, 0): [1, 0], (0, 1): [0, 1], (1, 0): [0, 1], (1, 1): [2, 0]}
    )
    assert frobenius_type(sqrt2) == UNRECOGNIZED


def test_frobenius_refuses_quartic_field():
    constants = {}
    for i in range(4):
        for j in range(4):
            v = [0, 0, 0, 0]
            if i + j < 4:
                v[i + j] = 1
            else:
                v[i + j - 4] = 2
            constants[(i, j)] = v
    quartic = AlgebraPresentation("quartic", 4, constants)
    assert frobenius_type(quartic) == UNRECOGNIZED
    rep = classify(quartic)
    shapes = [
        (sf.matrix_degree, sf.division_dim, sf.division_type)
        for f in rep.factors
        for sf in f.simple_factors
    ]
    assert shapes == [(1, 4, UNRECOGNIZED)]


def test_split_quaternions_are_a_matrix_algebra():
    # (1, 1) quaternions have an isotropic norm form, i.e. they split
    alg = to_object(quaternion(1, 1))
    factors, family = semisimple_decompose(alg)
    assert [(f.matrix_degree, f.division_dim) for f in factors] == [(2, 1)]
    assert len(family) == 2


def test_reduced_round_trip_one_label():
    for r, p, q in itertools.product(range(3), range(3), range(2)):
        if r + p + q == 0:
            continue
        alg = to_object(reduced_ring(r, p, q))
        result = reduced_decompose(alg)
        assert result.is_reduced
        assert result.counts == {
            "K1": {"r": r, "p": p, "q": q, "unrecognized": 0}
        }


def test_reduced_round_trip_two_labels():
    doc = direct_sum(
        [reduced_ring(1, 1, 0, "K1"), reduced_ring(2, 0, 1, "K2")], name="two-label"
    )
    alg = to_object(doc)
    result = reduced_decompose(alg)
    assert result.counts == {
        "K1": {"r": 1, "p": 1, "q": 0, "unrecognized": 0},
        "K2": {"r": 2, "p": 0, "q": 1, "unrecognized": 0},
    }


def test_reduced_rejects_matrix_algebra():
    result = reduced_decompose(to_object(matrix_algebra(2)))
    assert not result.is_reduced
    w = result.witness
    assert not w.is_zero() and (w * w).is_zero()


def test_reduced_rejects_radical():
    result = reduced_decompose(to_object(upper_triangular(2)))
    assert not result.is_reduced
    w = result.witness
    assert not w.is_zero() and (w * w).is_zero()


def test_classify_null_ring():
    rep = classify(to_object(null_ring(3)))
    assert rep.s == 0 and rep.r0_dim == 3 and not rep.unital


def test_classify_two_label_example():
    doc = direct_sum([matrix_algebra(2, "K1"), relabel(base_field(), "K2")], name="two")
    rep = classify(to_object(doc))
    assert rep.s == 2 and rep.unital and rep.unity_subring_dim == 2
    assert rep.field_witnesses == ["K1", "K2"]


def test_classify_strictly_upper():
    rep = classify(to_object(strictly_upper(3)))
    assert rep.s == 1 and rep.r0_dim == 0
    factor = rep.factors[0]
    assert factor.is_nilpotent and factor.radical_dim == 3


def test_classify_r0_and_products(corpus):
    for alg in corpus:
        rep = classify(alg)
        pivots = set(rep.r0_space.pivots())
        for i in range(alg.dim):
            for j in range(alg.dim):
                prod = alg.basis_product(i, j)
                assert not any(prod[c] != 0 for c in pivots)
        for row in rep.r0_space.basis_rows():
            for i in range(alg.dim):
                e = unit_vec(alg.dim, i)
                assert is_zero_vec(alg.multiply_coords(row, e))
                assert is_zero_vec(alg.multiply_coords(e, row))
        if rep.unital:
            assert rep.unity_subring_dim == rep.s and rep.r0_dim == 0


def test_central_idempotents_split_gaussian_pair():
    doc = direct_sum([quadratic_line(), quadratic_line()], name="CxC")
    alg = to_object(doc)
    centrals = central_primitive_idempotents(alg)
    assert len(centrals) == 2
    total = alg.zero_element()
    for c in centrals:
        assert (c * c) == c
        total = total + c
    assert total == find_unity(alg)


def test_dorroh_unitization_null_line():
    null1 = to_object(null_ring(1))
    out, embedding = dorroh_unitization(null1)
    assert out.dim == 2 and embedding == [1]
    u, x = out.basis_element(0), out.basis_element(1)
    assert (u * x) == x and (x * u) == x and (x * x).is_zero()


def test_dorroh_unitization_strictly_upper():
    out, _ = dorroh_unitization(to_object(strictly_upper(3)))
    assert out.dim == 4
    assert find_unity(out) is not None
    assert not is_nilpotent(out)


def test_dorroh_on_unital_keeps_old_unity_as_idempotent():
    m1 = to_object(matrix_algebra(1))
    out, embedding = dorroh_unitization(m1)
    old_unity = out.basis_element(embedding[0])
    assert (old_unity * old_unity) == old_unity
    assert old_unity != find_unity(out)


def test_dorroh_rejects_multi_label():
    doc = direct_sum([null_ring(1, "K1"), relabel(null_ring(1), "K2")])
    with pytest.raises(ValidationError):
        dorroh_unitization(to_object(doc))


def test_minimal_unitization_null_line_equality():
    out, _ = minimal_unitization(to_object(null_ring(1)))
    assert out.dim == 2  # increment 1 = dim R_0 + s = 1 + 0


def test_minimal_unitization_strictly_upper():
    t3 = to_object(strictly_upper(3))
    out, embedding = minimal_unitization(t3)
    assert out.dim == 4  # increment 1 <= 0 + 1
    assert find_unity(out) is not None
    image = Subspace(out.dim, [unit_vec(out.dim, p) for p in embedding])
    for row in image.basis_rows():
        for i in range(out.dim):
            e = unit_vec(out.dim, i)
            assert image.contains(out.multiply_coords(row, e))
            assert image.contains(out.multiply_coords(e, row))


def test_minimal_unitization_identity_on_unital():
    m2 = to_object(matrix_algebra(2))
    out, embedding = minimal_unitization(m2)
    assert out is m2 and embedding == [0, 1, 2, 3]


def test_minimal_unitization_bound_over_corpus(corpus):
    for alg in corpus:
        rep = classify(alg)
        out, embedding = minimal_unitization(alg)
        increment = out.dim - alg.dim
        assert increment <= rep.r0_dim + rep.s
        assert find_unity(out) is not None
        if is_nilpotent(alg) and alg.dim > 0:
            blocks = len(alg.label_blocks())
            if rep.s == 0 and rep.r0_dim == alg.dim and all(
                len(list(b)) == 1 for _, b in alg.label_blocks()
            ):
                assert increment == rep.r0_dim + rep.s
