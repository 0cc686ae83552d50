"""Exact structure theory for rings presented as algebras, tables, or mixtures.

The package decomposes finite-dimensional associative algebras over labeled
exact base fields (Jacobson radical, Wedderburn-style complements and simple
factors, idempotent structure, unitization), runs brute-force oracles on
finite rings given by tables, and handles mixed rings with finite, connected
and divisible-torsion parts.  All arithmetic is exact rational.
"""

from .algebra import (
    AlgebraPresentation,
    Element,
    ElementClassification,
    IdealSpace,
    annihilators,
    algebra_annihilator,
    center,
    centralizer,
    classify_element,
    find_unity,
    generated_subring,
    multiply,
    power_span,
)
from .classify import (
    ClassificationReport,
    IdempotentSet,
    ReducedDecomposition,
    SimpleFactorReport,
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
from .errors import (
    AssociativityError,
    DocumentError,
    InternalInvariantError,
    InvalidParams,
    RingstructError,
    ValidationError,
)
from .finite import (
    FiniteRing,
    finite_structure,
    jacobson_definitional,
    largest_nilpotent_ideal,
)
from .idempotents import (
    NullSquare,
    brauer_idempotent,
    find_idempotent,
    lift_idempotent,
    minimal_one_sided_ideal,
    pierce_decomposition,
)
from .linalg import Rat, RatMatrix, Subspace, kernel, rref, solve
from .mixed import MixedElement, MixedRing, finite_connected_split, mixed_multiply, torsion_ideal
from .radical import (
    element_nilpotency,
    is_nilpotent,
    jacobson_radical,
    nilpotent_flag,
    quotient_algebra,
    radical_complement,
)

__version__ = "0.1.0"
