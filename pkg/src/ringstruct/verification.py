"""Independent re-verification of report certificates.

These checks deliberately avoid the decomposition engine: they use only
element multiplication, subspace membership, and set arithmetic on the
certificates quoted in a report, so a report that passes was right for
checkable reasons.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List

from .algebra import AlgebraPresentation
from .errors import InternalInvariantError
from .finite import FiniteRing, subset_is_nilpotent, is_ideal
from .linalg import Subspace, is_zero_vec, parse_rat, unit_vec


def _vec(coords: List[str]):
    return tuple(parse_rat(c) for c in coords)


def _space(alg: AlgebraPresentation, basis: List[List[str]]) -> Subspace:
    return Subspace(alg.dim, [_vec(row) for row in basis])


def _fail(message: str):
    raise InternalInvariantError(f"certificate verification failed: {message}")


def verify_classify_report(alg: AlgebraPresentation, report: dict):
    """Re-check a classification report from its certificates alone."""
    certs = report["certificates"]
    verdict = report["verdict"]
    r0 = _space(alg, certs["r0_basis"])
    if r0.dim != verdict["r0_dim"]:
        _fail("r0 dimension mismatch")
    # R_0 annihilates everything
    for row in r0.basis_rows():
        for i in range(alg.dim):
            e = unit_vec(alg.dim, i)
            if not is_zero_vec(alg.multiply_coords(row, e)) or not is_zero_vec(
                alg.multiply_coords(e, row)
            ):
                _fail("r0 vector fails to annihilate")
    # every pairwise product avoids the R_0 coordinates
    pivots = set(r0.pivots())
    for i in range(alg.dim):
        for j in range(alg.dim):
            prod = alg.basis_product(i, j)
            if any(prod[c] != 0 for c in pivots):
                _fail("a product meets the annihilator factor coordinates")
    acc = certs["dimension_accounting"]
    if acc["r0"] + sum(acc["factor_dims"]) != acc["total"] or acc["total"] != alg.dim:
        _fail("dimension accounting does not add up")
    if verdict["s"] != len(certs["factors"]):
        _fail("factor count disagrees with s")
    # central idempotents are central within the semisimple part: they must
    # commute with every vector of every reported simple ideal
    semisimple_rows = [
        _vec(row)
        for factor in certs["factors"]
        for sf in factor["simple_factors"]
        for row in sf["ideal_basis"]
    ]
    for factor in certs["factors"]:
        for sf in factor["simple_factors"]:
            prims = [alg.element(_vec(c)) for c in sf["primitive_idempotents"]]
            central = alg.element(_vec(sf["central_idempotent"]))
            _check_orthogonal_idempotents(prims)
            if (central * central) != central:
                _fail("central idempotent is not idempotent")
            for row in semisimple_rows:
                v = alg.element(row)
                if (central * v) != (v * central):
                    _fail("central idempotent fails to commute with the semisimple part")
            if sf["matrix_degree"] != len(prims):
                _fail("matrix degree disagrees with the primitive family size")
            total = alg.zero_element()
            for p in prims:
                total = total + p
            if total != central:
                _fail("primitive family does not sum to the factor's central idempotent")
            ideal = _space(alg, sf["ideal_basis"])
            if ideal.dim != sf["matrix_degree"] ** 2 * sf["division_dim"]:
                _fail("simple factor dimension accounting fails")
    if verdict["unital"]:
        unity = alg.element(_vec(certs["unity"]))
        for i in range(alg.dim):
            b = alg.basis_element(i)
            if (unity * b) != b or (b * unity) != b:
                _fail("claimed unity is not a unity")
        if verdict["unity_subring_dim"] != verdict["s"]:
            _fail("unital report must have unity subring dimension s")
        if verdict["r0_dim"] != 0:
            _fail("unital report must have trivial annihilator factor")


def _check_orthogonal_idempotents(elements):
    for i, e in enumerate(elements):
        if e.is_zero() or (e * e) != e:
            _fail("family member is not a nonzero idempotent")
        for j in range(i):
            f = elements[j]
            if not (e * f).is_zero() or not (f * e).is_zero():
                _fail("family members are not orthogonal")


def verify_radical_report(alg: AlgebraPresentation, report: dict):
    """Radical basis must be a two-sided, nilpotent ideal; complement must split."""
    certs = report["certificates"]
    radical = _space(alg, certs["radical_basis"])
    if radical.dim != report["verdict"]["radical_dim"]:
        _fail("radical dimension mismatch")
    for row in radical.basis_rows():
        for i in range(alg.dim):
            e = unit_vec(alg.dim, i)
            if not radical.contains(alg.multiply_coords(row, e)):
                _fail("radical is not a right ideal")
            if not radical.contains(alg.multiply_coords(e, row)):
                _fail("radical is not a left ideal")
    # nilpotency by direct powering of the span
    current = radical
    for _ in range(radical.dim + 1):
        if current.is_zero():
            break
        current = Subspace(
            alg.dim,
            [
                alg.multiply_coords(u, v)
                for u in radical.basis_rows()
                for v in current.basis_rows()
            ],
        )
    if not current.is_zero():
        _fail("radical basis does not power down to zero")
    complement = _space(alg, certs["complement_basis"])
    if complement.dim + radical.dim != alg.dim:
        _fail("complement dimension mismatch")
    if not complement.intersect(radical).is_zero():
        _fail("complement meets the radical")
    for u in complement.basis_rows():
        for v in complement.basis_rows():
            if not complement.contains(alg.multiply_coords(u, v)):
                _fail("complement is not multiplication-closed")


def verify_idempotents_report(alg: AlgebraPresentation, report: dict):
    certs = report["certificates"]
    if report["verdict"]["found"]:
        e = alg.element(_vec(certs["idempotent"]))
        if e.is_zero() or (e * e) != e:
            _fail("reported idempotent is invalid")
    if "primitive_family" in certs:
        family = [alg.element(_vec(c)) for c in certs["primitive_family"]]
        _check_orthogonal_idempotents(family)
        unity = alg.element(_vec(certs["unity"]))
        total = alg.zero_element()
        for e in family:
            total = total + e
        if total != unity:
            _fail("primitive family does not sum to the unity")


def verify_unitize_report(alg: AlgebraPresentation, report: dict):
    """The unitized document must be unital and contain the image as a two-sided ideal."""
    from .documents import parse, to_object

    certs = report["certificates"]
    verdict = report["verdict"]
    if verdict["increment"] > verdict["bound"]:
        _fail("unitization increment exceeds its bound")
    out = to_object(parse(certs["document"]))
    embedding = certs["embedding"]
    if len(embedding) != alg.dim:
        _fail("embedding length mismatch")
    unity = out.element(_vec(certs["unity"]))
    for i in range(out.dim):
        b = out.basis_element(i)
        if (unity * b) != b or (b * unity) != b:
            _fail("unitization unity fails")
    image = Subspace(out.dim, [unit_vec(out.dim, p) for p in embedding])

    def embed_vec(coords):
        dense = [Fraction(0)] * out.dim
        for c, p in zip(coords, embedding):
            dense[p] = c
        return tuple(dense)

    # embedded copy multiplies as the original and is a two-sided ideal
    for i in range(alg.dim):
        for j in range(alg.dim):
            expect = embed_vec(alg.basis_product(i, j))
            got = out.multiply_coords(
                embed_vec(unit_vec(alg.dim, i)), embed_vec(unit_vec(alg.dim, j))
            )
            if expect != got:
                _fail("embedding does not respect products")
    for row in image.basis_rows():
        for i in range(out.dim):
            e = unit_vec(out.dim, i)
            if not image.contains(out.multiply_coords(row, e)) or not image.contains(
                out.multiply_coords(e, row)
            ):
                _fail("embedded image is not a two-sided ideal")


def verify_oracle_report(ring: FiniteRing, report: dict):
    """Radical subset must be an ideal; against enumeration it must be the
    largest nilpotent one; idempotents and units must check out."""
    verdict = report["verdict"]
    certs = report["certificates"]
    j = frozenset(verdict["jacobson"])
    if not is_ideal(ring, j):
        _fail("reported radical is not an ideal")
    if not subset_is_nilpotent(ring, j):
        _fail("reported radical is not nilpotent")
    for x in certs["idempotents"]:
        if int(ring.mul[x, x]) != x:
            _fail("reported idempotent fails x*x = x")
    if certs["unity"] is not None:
        u = certs["unity"]
        for x in ring.elements():
            if int(ring.mul[u, x]) != x or int(ring.mul[x, u]) != x:
                _fail("reported unity fails")
    if "largest_nilpotent_ideal" in certs:
        if sorted(j) != certs["largest_nilpotent_ideal"]:
            _fail("definitional radical disagrees with the enumerated nilpotent ideal")
