"""
Linear Algebra Module
Exact elimination over Q, Z/p and Z on sympy's DomainMatrix: rank, reduced
echelon form, nullspace and inverse over the fields QQ and GF(p), and the
Smith normal form and invariant factors over ZZ.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Tuple

from sympy.polys.domains import GF, QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError
from sympy.polys.matrices.normalforms import invariant_factors, smith_normal_decomp

from src.matcat import ExactMatrix, ExactRing, INTEGERS, RATIONALS
from src.utils import InvalidObjectError, RingMismatchError

logger = logging.getLogger(__name__)

SparseRow = Dict[int, object]


# ------------------------------------------------------------------ conversion

def sympy_domain(ring: ExactRing):
    """The sympy domain of an exact ring: QQ, ZZ or GF(p)."""
    if ring.kind == "Q":
        return QQ
    if ring.kind == "Z":
        return ZZ
    return GF(ring.modulus)


def _to_domain_element(ring: ExactRing, domain, value):
    if ring.kind == "Q":
        value = Fraction(value)
        return domain(value.numerator, value.denominator)
    return domain(int(value))


def _from_domain_element(ring: ExactRing, domain, value):
    if ring.kind == "Q":
        return Fraction(int(domain.numer(value)), int(domain.denom(value)))
    if ring.kind == "Z":
        return int(value)
    return int(domain.to_int(value)) % ring.modulus


def to_domain_matrix(m: ExactMatrix) -> DomainMatrix:
    """
    Sparse DomainMatrix with the same entries as m.

    Args:
        m (ExactMatrix): Matrix over Q, Z or Z/p

    Returns:
        DomainMatrix: Over sympy_domain(m.ring)
    """
    domain = sympy_domain(m.ring)
    dod = {}
    for i in range(m.rows):
        row = m.row(i)
        if row:
            dod[i] = {j: _to_domain_element(m.ring, domain, v) for j, v in row.items()}
    return DomainMatrix(dod, (m.rows, m.cols), domain)


def from_domain_matrix(dm: DomainMatrix, ring: ExactRing) -> ExactMatrix:
    """Back from a DomainMatrix over sympy_domain(ring)."""
    rows, cols = dm.shape
    domain = dm.domain
    data = {
        i: {j: _from_domain_element(ring, domain, v) for j, v in row.items()}
        for i, row in dm.to_dod().items()
    }
    return ExactMatrix(ring, rows, cols, data)


def _field_matrix(m: ExactMatrix, name: str) -> DomainMatrix:
    if not m.ring.is_field:
        raise RingMismatchError(f"{name} needs a field")
    return to_domain_matrix(m)


# ------------------------------------------------------------------ fields

def rank(m: ExactMatrix) -> int:
    """
    Rank of m. Over Z this is the rank over Q.
    """
    if m.rows == 0 or m.cols == 0 or m.is_zero():
        return 0
    dm = to_domain_matrix(m)
    if m.ring == INTEGERS:
        dm = dm.convert_to(QQ)
    return dm.rank()


def rref(m: ExactMatrix) -> Tuple[Dict[int, SparseRow], List[int]]:
    """
    Reduced row echelon form over a field.

    Returns:
        Tuple: (pivot column -> fully reduced row, sorted pivot columns)
    """
    dm = _field_matrix(m, "rref")
    if m.rows == 0 or m.cols == 0:
        return {}, []
    reduced, pivots = dm.rref()
    dod = reduced.to_dod()
    rows = {}
    for k, col in enumerate(pivots):
        rows[col] = {j: _from_domain_element(m.ring, dm.domain, v) for j, v in dod.get(k, {}).items()}
    return rows, list(pivots)


def nullspace(m: ExactMatrix) -> List[ExactMatrix]:
    """
    A basis of {x : m x = 0} over a field, as column vectors.
    """
    dm = _field_matrix(m, "nullspace")
    if m.cols == 0:
        return []
    if m.rows == 0 or m.is_zero():
        return [ExactMatrix.from_entries(m.ring, m.cols, 1, [(j, 0, m.ring.one)]) for j in range(m.cols)]

    basis = from_domain_matrix(dm.nullspace(), m.ring)
    return [
        ExactMatrix.from_entries(m.ring, m.cols, 1, [(j, 0, v) for j, v in basis.row(k).items()])
        for k in range(basis.rows)
    ]


def inverse(m: ExactMatrix) -> ExactMatrix:
    """
    Inverse of a square matrix. Over Z the matrix must be unimodular.
    """
    if m.rows != m.cols:
        raise InvalidObjectError("Only square matrices are invertible")
    if m.rows == 0:
        return m

    dm = to_domain_matrix(m)
    work_ring = RATIONALS if m.ring == INTEGERS else m.ring
    if m.ring == INTEGERS:
        dm = dm.convert_to(QQ)
    try:
        inv = dm.inv()
    except DMNonInvertibleMatrixError as e:
        raise InvalidObjectError("Matrix is singular") from e

    result = from_domain_matrix(inv, work_ring)
    if m.ring == INTEGERS:
        return result.change_ring(INTEGERS)
    return result


# ------------------------------------------------------------------ integers

def smith_normal_form(m: ExactMatrix) -> Tuple[ExactMatrix, ExactMatrix, ExactMatrix]:
    """
    Smith normal form of an integer matrix.

    Returns:
        Tuple[ExactMatrix, ExactMatrix, ExactMatrix]: (D, U, V) with D = U @ m @ V,
        U and V unimodular, D diagonal with each entry dividing the next
    """
    if m.ring != INTEGERS:
        raise RingMismatchError("Smith normal form is computed over Z")
    if m.rows == 0 or m.cols == 0:
        return m, ExactMatrix.identity(INTEGERS, m.rows), ExactMatrix.identity(INTEGERS, m.cols)

    d, u, v = smith_normal_decomp(to_domain_matrix(m).to_dense())
    return tuple(from_domain_matrix(x, INTEGERS) for x in (d, u, v))


def _unit_pivot_reduce(m: ExactMatrix) -> Tuple[int, Dict[int, SparseRow]]:
    """
    Eliminate along entries +-1 on the sparse rows. Each such pivot is an
    invariant factor 1; returns their count and the rows that remain.
    """
    rows: Dict[int, SparseRow] = {i: dict(m.row(i)) for i in range(m.rows) if m.row(i)}
    units = 0
    while True:
        pivot = next(
            ((i, j) for i, row in rows.items() for j, v in row.items() if v in (1, -1)),
            None
        )
        if pivot is None:
            return units, rows

        i0, j0 = pivot
        pivot_row = rows.pop(i0)
        sign = pivot_row[j0]
        for i, row in list(rows.items()):
            factor = row.pop(j0, 0) * sign
            if factor:
                for j, v in pivot_row.items():
                    if j == j0:
                        continue
                    value = row.get(j, 0) - factor * v
                    if value:
                        row[j] = value
                    else:
                        row.pop(j, None)
            if not row:
                del rows[i]
        units += 1


def elementary_divisors(m: ExactMatrix) -> List[int]:
    """
    Nonzero invariant factors of an integer matrix, in divisibility order.

    Unit pivots are cleared on the sparse rows first; the block that remains
    goes through sympy's invariant factors over ZZ.
    """
    if m.ring != INTEGERS:
        raise RingMismatchError("Elementary divisors are computed over Z")

    units, rows = _unit_pivot_reduce(m)
    divisors = [1] * units
    if rows:
        cols = sorted({j for row in rows.values() for j in row})
        col_index = {j: k for k, j in enumerate(cols)}
        dense = [[ZZ(0)] * len(cols) for _ in rows]
        for r, row in enumerate(rows.values()):
            for j, v in row.items():
                dense[r][col_index[j]] = ZZ(v)
        block = DomainMatrix(dense, (len(rows), len(cols)), ZZ)
        divisors.extend(abs(int(f)) for f in invariant_factors(block) if f != 0)

    logger.debug("Elementary divisors of %dx%d: %d units, rest %s", m.rows, m.cols, units, divisors[units:])
    return sorted(divisors)


# Example usage and testing
if __name__ == "__main__":
    m = ExactMatrix.from_rows(INTEGERS, [[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    print(f"Elementary divisors: {elementary_divisors(m)}")
    print(f"Rank over Q: {rank(m)}")
    d, u, v = smith_normal_form(m)
    print(f"D = U M V: {d == u @ m @ v}")
