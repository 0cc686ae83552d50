import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ringstruct.algebra import AlgebraPresentation, IdealSpace
from ringstruct.documents import to_object
from ringstruct.generators import (
    annihilator_gap,
    base_field,
    direct_sum,
    matrix_algebra,
    null_ring,
    quadratic_line,
    quaternion,
    relabel,
    square_cocycle,
    strictly_upper,
    upper_triangular,
)
from ringstruct.linalg import Subspace, unit_vec
from ringstruct.radical import quotient_algebra


def alg(doc) -> AlgebraPresentation:
    return to_object(doc)


def _ideal_span(a: AlgebraPresentation, indices):
    return IdealSpace(a, Subspace(a.dim, [unit_vec(a.dim, i) for i in indices]), "two-sided")


def build_corpus():
    """Deterministic corpus: named families, random direct sums, quotients.

    Mixes single- and two-label sums; quotients are taken by small explicit
    two-sided ideals.  Size stays above fifty.
    """
    basics = (
        [alg(strictly_upper(n)) for n in range(2, 6)]
        + [alg(matrix_algebra(n)) for n in range(1, 4)]
        + [alg(quaternion())]
        + [alg(annihilator_gap(n)) for n in range(1, 4)]
        + [alg(square_cocycle())]
        + [alg(upper_triangular(n)) for n in range(1, 5)]
        + [alg(quadratic_line()), alg(base_field()), alg(null_ring(1))]
    )
    corpus = list(basics)
    corpus.append(alg(direct_sum([null_ring(1, "K1"), relabel(null_ring(1), "K2")])))
    pool = [
        strictly_upper(2),
        strictly_upper(3),
        matrix_algebra(2),
        matrix_algebra(3),
        quaternion(),
        annihilator_gap(1),
        square_cocycle(),
        upper_triangular(2),
        upper_triangular(3),
        quadratic_line(),
        base_field(),
        null_ring(1),
    ]
    rng = random.Random(20240317)
    for _ in range(17):
        a, b = rng.sample(pool, 2)
        corpus.append(alg(direct_sum([a, b])))
    for _ in range(9):
        a, b = rng.sample(pool, 2)
        corpus.append(alg(direct_sum([a, relabel(b, "K2")])))
    # quotients by explicit two-sided ideals
    t4 = alg(strictly_upper(4))
    corpus.append(quotient_algebra(t4, _ideal_span(t4, [2]))[0])  # kill E14
    t5 = alg(strictly_upper(5))
    corpus.append(quotient_algebra(t5, _ideal_span(t5, [3]))[0])  # kill E15
    ut3 = alg(upper_triangular(3))
    corpus.append(quotient_algebra(ut3, _ideal_span(ut3, [2]))[0])  # kill E13
    gap2 = alg(annihilator_gap(2))
    corpus.append(quotient_algebra(gap2, _ideal_span(gap2, [1]))[0])  # kill a1
    coc = alg(square_cocycle())
    corpus.append(quotient_algebra(coc, _ideal_span(coc, [1]))[0])  # kill x^2
    mixed_sum = alg(direct_sum([matrix_algebra(2), strictly_upper(3)]))
    corpus.append(quotient_algebra(mixed_sum, _ideal_span(mixed_sum, [5]))[0])
    return corpus


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()
