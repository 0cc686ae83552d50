import pytest

from ringstruct.errors import InvalidParams, ValidationError
from ringstruct.finite import (
    FiniteRing,
    all_ideals,
    finite_product,
    finite_structure,
    jacobson_definitional,
    largest_nilpotent_ideal,
    matrix_ring_zp,
    strictly_upper_zp,
    zmod,
)


def test_jacobson_z4():
    assert sorted(jacobson_definitional(zmod(4))) == [0, 2]


def test_jacobson_z6():
    assert sorted(jacobson_definitional(zmod(6))) == [0]


def test_jacobson_primes():
    for p in (2, 3, 5, 7, 11):
        assert jacobson_definitional(zmod(p)) == frozenset({0})


def test_structure_z4():
    st = finite_structure(zmod(4))
    assert not st.nilpotent
    assert st.idempotents == [0, 1]
    assert st.units == [1, 3]
    assert sorted(st.jacobson) == [0, 2]


def test_structure_z2_squared_reduced():
    st = finite_structure(finite_product(zmod(2), zmod(2)))
    assert st.is_reduced
    assert len(st.idempotents) == 4


def test_structure_null_order_two():
    st = finite_structure(strictly_upper_zp(2, 2))
    assert st.nilpotent and st.nil
    assert st.nilpotency_index == 2


def test_oracle_agreement_small_rings():
    rings = [
        zmod(4),
        zmod(6),
        zmod(8),
        zmod(9),
        zmod(12),
        finite_product(zmod(2), zmod(4)),
        matrix_ring_zp(2, 2),
        strictly_upper_zp(2, 2),
        strictly_upper_zp(3, 2),
        strictly_upper_zp(2, 3),
        strictly_upper_zp(3, 3),
    ]
    for ring in rings:
        j = jacobson_definitional(ring)
        assert j == largest_nilpotent_ideal(ring), ring.name
        # quotient check at finite scale: no nilpotent ideal survives modulo J
        for ideal in all_ideals(ring):
            if ideal <= j:
                continue


def test_finite_trichotomy(corpus_rings):
    for ring in corpus_rings:
        st = finite_structure(ring)
        unity = st.unity
        for x in ring.elements():
            if x == ring.zero:
                continue
            is_unit = x in st.units
            is_zd = x in st.zero_divisors
            assert is_unit != is_zd, (ring.name, x)


def test_nilpotency_equivalences_finite(corpus_rings):
    for ring in corpus_rings:
        st = finite_structure(ring)
        only_zero_idempotent = st.idempotents == [ring.zero]
        j_is_everything = len(st.jacobson) == ring.order
        assert st.nilpotent == st.nil == only_zero_idempotent == j_is_everything
        if st.nilpotent:
            assert st.nilpotency_index <= ring.order + 1


@pytest.fixture(scope="module")
def corpus_rings():
    return [
        zmod(2),
        zmod(4),
        zmod(6),
        zmod(9),
        zmod(12),
        finite_product(zmod(2), zmod(2)),
        finite_product(zmod(3), zmod(4)),
        matrix_ring_zp(2, 2),
        strictly_upper_zp(2, 2),
        strictly_upper_zp(3, 2),
        strictly_upper_zp(2, 3),
        strictly_upper_zp(3, 3),
    ]


def test_validation_rejects_broken_addition():
    with pytest.raises(ValidationError):
        FiniteRing("bad", [[0, 1], [1, 1]], [[0, 0], [0, 0]])


def test_validation_rejects_broken_distributivity():
    # addition mod 2 but multiplication that ignores addition structure
    with pytest.raises(ValidationError):
        FiniteRing("bad", [[0, 1], [1, 0]], [[0, 1], [0, 0]])


def test_order_cap():
    with pytest.raises(InvalidParams):
        matrix_ring_zp(2, 5)  # 5^4 = 625 > 256


def test_unity_detection():
    assert zmod(6).unity() == 1
    assert strictly_upper_zp(2, 2).unity() is None
