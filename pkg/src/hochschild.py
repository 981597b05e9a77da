"""
Hochschild Module
Finite-dimensional algebras by structure constants, the cyclic bar complex
C_p(A) = A^{(x)(p+1)} with its paracyclic operators, Hochschild homology over
Q, Z and Z/p, and truncated negative cyclic homology.

Basis of C_p: the tuple (i_0, ..., i_p) has index sum_k i_k * d^(p-k).
Conventions:
- d_i multiplies slots i and i+1 for i < p; d_p(a_0, ..., a_p) = (a_p a_0, a_1, ..., a_{p-1}).
- s_j inserts the unit after slot j.
- tau(a_0, ..., a_p) = (a_p, a_0, ..., a_{p-1}); t = (-1)^p tau.
- b = sum (-1)^i d_i, N = sum t^i, B = (1 - t) s_extra N with s_extra inserting
  the unit in front.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from src.linalg import elementary_divisors, inverse, nullspace, rank
from src.matcat import (
    DualityData,
    ExactMatrix,
    ExactRing,
    INTEGERS,
    RATIONALS,
    kron,
)
from src.utils import (
    AlgebraValidationError,
    CircleTraceError,
    InputFormatError,
    InvalidObjectError,
    RingMismatchError,
    format_scalar,
)

logger = logging.getLogger(__name__)

DEFAULT_NORMALIZED = True


@dataclass(frozen=True, eq=False)
class AlgebraSC:
    """
    An algebra with basis e_0..e_{d-1}: e_i e_j = sum_k mul[k + d*(j + d*i)] e_k.

    trace_form, when present, is the linear functional used by trace_hh0.
    """

    ring: ExactRing
    dim: int
    unit: Tuple
    mul: Tuple
    name: str = "algebra"
    trace_form: Optional[Tuple] = None
    _products: Dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.dim < 1:
            raise InvalidObjectError("Algebra dimension must be positive")
        unit = tuple(self.ring.coerce(u) for u in self.unit)
        mul = tuple(self.ring.coerce(c) for c in self.mul)
        if len(unit) != self.dim:
            raise InvalidObjectError(f"Unit needs {self.dim} entries, got {len(unit)}")
        if len(mul) != self.dim ** 3:
            raise InvalidObjectError(f"Structure constants need {self.dim ** 3} entries, got {len(mul)}")
        object.__setattr__(self, "unit", unit)
        object.__setattr__(self, "mul", mul)
        if self.trace_form is not None:
            object.__setattr__(self, "trace_form", tuple(self.ring.coerce(v) for v in self.trace_form))

        d = self.dim
        table = {}
        for i in range(d):
            for j in range(d):
                terms = [(k, mul[k + d * (j + d * i)]) for k in range(d) if mul[k + d * (j + d * i)] != 0]
                table[(i, j)] = terms
        object.__setattr__(self, "_products", table)

    def structure_constant(self, i: int, j: int, k: int):
        return self.mul[k + self.dim * (j + self.dim * i)]

    def basis_product(self, i: int, j: int) -> List[Tuple[int, object]]:
        """Nonzero terms (k, c) of e_i e_j."""
        return self._products[(i, j)]

    def multiply(self, x: Dict[int, object], y: Dict[int, object]) -> Dict[int, object]:
        """Product of two sparse vectors {basis index: coefficient}."""
        out: Dict[int, object] = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self._products[(i, j)]:
                    out[k] = self.ring.normalize(out.get(k, 0) + a * b * c)
        return {k: v for k, v in out.items() if v != 0}

    def unit_terms(self) -> Dict[int, object]:
        return {i: u for i, u in enumerate(self.unit) if u != 0}

    def multiplication_matrix(self) -> ExactMatrix:
        """mu: A (x) A -> A as a d x d^2 matrix."""
        d = self.dim
        entries = [
            (k, i * d + j, c)
            for i in range(d) for j in range(d)
            for k, c in self._products[(i, j)]
        ]
        return ExactMatrix.from_entries(self.ring, d, d * d, entries)

    def unit_matrix(self) -> ExactMatrix:
        return ExactMatrix.column(self.ring, list(self.unit))

    def left_multiplication(self, x: Sequence) -> ExactMatrix:
        """The d x d matrix of y -> x y."""
        xv = {i: self.ring.coerce(v) for i, v in enumerate(x) if v != 0}
        entries = []
        for j in range(self.dim):
            for k, c in self.multiply(xv, {j: self.ring.one}).items():
                entries.append((k, j, c))
        return ExactMatrix.from_entries(self.ring, self.dim, self.dim, entries)

    def change_ring(self, ring: ExactRing) -> "AlgebraSC":
        trace = self.trace_form
        return AlgebraSC(ring, self.dim, self.unit, self.mul, self.name, trace)

    def to_document(self) -> dict:
        return {
            "ring": self.ring.label,
            "dim": self.dim,
            "unit": [format_scalar(u) for u in self.unit],
            "mul": [format_scalar(c) for c in self.mul],
        }


@dataclass(frozen=True)
class AlgebraValidationReport:
    valid: bool
    failure: Optional[str] = None
    witness: Optional[Tuple[int, ...]] = None


def validate_algebra(A: AlgebraSC) -> AlgebraValidationReport:
    """
    Check associativity on all basis triples and unitality on all basis
    elements, reporting the first failing witness.
    """
    d = A.dim
    one = A.unit_terms()
    for i in range(d):
        e_i = {i: A.ring.one}
        if A.multiply(one, e_i) != e_i or A.multiply(e_i, one) != e_i:
            return AlgebraValidationReport(False, "unitality", (i,))

    for i in range(d):
        for j in range(d):
            ij = A.multiply({i: 1}, {j: 1})
            for k in range(d):
                left = A.multiply(ij, {k: 1})
                right = A.multiply({i: 1}, A.multiply({j: 1}, {k: 1}))
                if left != right:
                    return AlgebraValidationReport(False, "associativity", (i, j, k))

    return AlgebraValidationReport(True)


def require_valid(A: AlgebraSC) -> None:
    report = validate_algebra(A)
    if not report.valid:
        raise AlgebraValidationError(
            f"Algebra {A.name} fails {report.failure} at {report.witness}",
            witness=report.witness
        )


# ------------------------------------------------------------------ generators

def matrix_algebra(d: int, ring: ExactRing = RATIONALS) -> AlgebraSC:
    """M_d with matrix units E_ab at index a*d + b."""
    n = d * d
    mul = [0] * (n ** 3)
    for a in range(d):
        for b in range(d):
            for c in range(d):
                # E_ab E_bc = E_ac
                i, j, k = a * d + b, b * d + c, a * d + c
                mul[k + n * (j + n * i)] = 1
    unit = [1 if (idx // d) == (idx % d) else 0 for idx in range(n)]
    return AlgebraSC(ring, n, tuple(unit), tuple(mul), f"matrix:{d}", tuple(unit))


def truncated_polynomial(n: int, ring: ExactRing = RATIONALS) -> AlgebraSC:
    """k[x]/x^n with basis 1, x, ..., x^{n-1}."""
    mul = [0] * (n ** 3)
    for i in range(n):
        for j in range(n):
            if i + j < n:
                mul[(i + j) + n * (j + n * i)] = 1
    unit = [1] + [0] * (n - 1)
    return AlgebraSC(ring, n, tuple(unit), tuple(mul), f"truncpoly:{n}")


def group_algebra(n: int, ring: ExactRing = RATIONALS) -> AlgebraSC:
    """The group algebra of the cyclic group C_n with basis g^0..g^{n-1}."""
    mul = [0] * (n ** 3)
    for i in range(n):
        for j in range(n):
            mul[((i + j) % n) + n * (j + n * i)] = 1
    unit = [1] + [0] * (n - 1)
    return AlgebraSC(ring, n, tuple(unit), tuple(mul), f"group:C{n}")


def endomorphism_algebra(data: DualityData) -> AlgebraSC:
    """
    End(V) = V^v (x) V built from duality data. The basis element
    e_(i,j) = e_i^v (x) e_j (index i*d + j) acts by v -> eps(v (x) e_i^v) e_j,
    so e_(i,j) e_(k,l) = E[l*d + i] e_(k,j), the unit is eta and the trace
    of e_(i,j) is E[j*d + i].
    """
    d = data.dim
    n = d * d
    eps = [data.eps[0, idx] for idx in range(n)]
    eta = [data.eta[idx, 0] for idx in range(n)]
    mul = [0] * (n ** 3)
    for i in range(d):
        for j in range(d):
            for k in range(d):
                for l in range(d):
                    a, b, c = i * d + j, k * d + l, k * d + j
                    mul[c + n * (b + n * a)] = eps[l * d + i]
    trace = [eps[(idx % d) * d + idx // d] for idx in range(n)]
    return AlgebraSC(data.ring, n, tuple(eta), tuple(mul), f"end:{d}", tuple(trace))


def algebra_from_spec(spec: str, ring: ExactRing = RATIONALS) -> AlgebraSC:
    """
    Build a built-in algebra from "matrix:d", "truncpoly:n" or "group:Cn".
    """
    try:
        kind, arg = spec.split(":", 1)
        if kind == "matrix":
            return matrix_algebra(int(arg), ring)
        if kind == "truncpoly":
            return truncated_polynomial(int(arg), ring)
        if kind == "group" and arg.startswith("C"):
            return group_algebra(int(arg[1:]), ring)
    except ValueError as e:
        raise InputFormatError(f"Malformed algebra spec {spec!r}: {e}") from e
    raise InputFormatError(f"Unknown algebra spec {spec!r}")


def change_basis(A: AlgebraSC, P: ExactMatrix) -> AlgebraSC:
    """
    Rewrite A in the basis f_a = sum_b P[b, a] e_b given by the columns of
    an invertible matrix P.
    """
    d = A.dim
    if P.shape != (d, d):
        raise InvalidObjectError(f"Basis change must be {d}x{d}")
    P_inv = inverse(P)
    columns = [{b: P[b, a] for b in range(d) if P[b, a] != 0} for a in range(d)]

    mul = [0] * (d ** 3)
    for a in range(d):
        for b in range(d):
            old = A.multiply(columns[a], columns[b])
            for k in range(d):
                value = sum((P_inv[k, g] * c for g, c in old.items()), A.ring.zero)
                mul[k + d * (b + d * a)] = A.ring.normalize(value)

    unit = [
        A.ring.normalize(sum((P_inv[k, g] * u for g, u in A.unit_terms().items()), A.ring.zero))
        for k in range(d)
    ]
    trace = None
    if A.trace_form is not None:
        trace = [
            A.ring.normalize(sum((c * A.trace_form[b] for b, c in columns[a].items()), A.ring.zero))
            for a in range(d)
        ]
    return AlgebraSC(A.ring, d, tuple(unit), tuple(mul), f"{A.name}*", trace)


# ------------------------------------------------------------------ chain operators

@dataclass(frozen=True)
class ChainVector:
    """An element of C_p(A) = A^{(x)(p+1)}."""

    degree: int
    coefficients: Tuple

    def validate(self, A: AlgebraSC) -> None:
        if len(self.coefficients) != A.dim ** (self.degree + 1):
            raise InvalidObjectError(
                f"C_{self.degree} has dimension {A.dim ** (self.degree + 1)}, got {len(self.coefficients)}"
            )

    def as_column(self, A: AlgebraSC) -> ExactMatrix:
        self.validate(A)
        return ExactMatrix.column(A.ring, list(self.coefficients))


def chain_dimension(A: AlgebraSC, p: int) -> int:
    return A.dim ** (p + 1) if p >= 0 else 0


def _flatten(index: Sequence[int], d: int) -> int:
    flat = 0
    for i in index:
        flat = flat * d + i
    return flat


def _slot_operator(A: AlgebraSC, p_in: int, p_out: int, column) -> ExactMatrix:
    """Matrix C_{p_in} -> C_{p_out} from a basis-tuple -> [(tuple, coeff)] rule."""
    d = A.dim
    entries = []
    for col, a in enumerate(product(range(d), repeat=p_in + 1)):
        for out, c in column(a):
            entries.append((_flatten(out, d), col, c))
    return ExactMatrix.from_entries(A.ring, chain_dimension(A, p_out), chain_dimension(A, p_in), entries)


def _check_range(name: str, i: int, p: int) -> None:
    if p < 0 or not 0 <= i <= p:
        raise InvalidObjectError(f"{name} index {i} out of range for degree {p}")


@lru_cache(maxsize=None)
def face(A: AlgebraSC, i: int, p: int) -> ExactMatrix:
    """d_i: C_p -> C_{p-1}."""
    _check_range("Face", i, p)
    if p == 0:
        raise InvalidObjectError("C_0 has no faces")

    def column(a):
        if i < p:
            return [(a[:i] + (k,) + a[i + 2:], c) for k, c in A.basis_product(a[i], a[i + 1])]
        return [((k,) + a[1:p], c) for k, c in A.basis_product(a[p], a[0])]

    return _slot_operator(A, p, p - 1, column)


@lru_cache(maxsize=None)
def degeneracy(A: AlgebraSC, j: int, p: int) -> ExactMatrix:
    """s_j: C_p -> C_{p+1}, inserting the unit after slot j."""
    _check_range("Degeneracy", j, p)
    units = list(A.unit_terms().items())

    def column(a):
        return [(a[:j + 1] + (u,) + a[j + 1:], c) for u, c in units]

    return _slot_operator(A, p, p + 1, column)


@lru_cache(maxsize=None)
def unsigned_rotation(A: AlgebraSC, p: int) -> ExactMatrix:
    """tau(a_0, ..., a_p) = (a_p, a_0, ..., a_{p-1})."""
    return _slot_operator(A, p, p, lambda a: [((a[p],) + a[:p], 1)])


@lru_cache(maxsize=None)
def t(A: AlgebraSC, p: int) -> ExactMatrix:
    """Signed cyclic operator (-1)^p tau."""
    return unsigned_rotation(A, p).scale((-1) ** p)


@lru_cache(maxsize=None)
def b(A: AlgebraSC, p: int) -> ExactMatrix:
    """Hochschild boundary C_p -> C_{p-1}; the zero map out of C_0."""
    if p == 0:
        return ExactMatrix.zeros(A.ring, 0, A.dim)
    total = ExactMatrix.zeros(A.ring, chain_dimension(A, p - 1), chain_dimension(A, p))
    for i in range(p + 1):
        term = face(A, i, p)
        total = total + term if i % 2 == 0 else total - term
    return total


@lru_cache(maxsize=None)
def N(A: AlgebraSC, p: int) -> ExactMatrix:
    """Norm operator sum_{i=0}^{p} t^i."""
    step = t(A, p)
    power = ExactMatrix.identity(A.ring, chain_dimension(A, p))
    total = power
    for _ in range(p):
        power = step @ power
        total = total + power
    return total


@lru_cache(maxsize=None)
def s_extra(A: AlgebraSC, p: int) -> ExactMatrix:
    """Extra degeneracy C_p -> C_{p+1}: (a_0..a_p) -> (1, a_0, ..., a_p)."""
    units = list(A.unit_terms().items())
    return _slot_operator(A, p, p + 1, lambda a: [((u,) + a, c) for u, c in units])


@lru_cache(maxsize=None)
def B(A: AlgebraSC, p: int) -> ExactMatrix:
    """Connes operator (1 - t) s_extra N: C_p -> C_{p+1}."""
    one_minus_t = ExactMatrix.identity(A.ring, chain_dimension(A, p + 1)) - t(A, p + 1)
    return one_minus_t @ s_extra(A, p) @ N(A, p)


# ------------------------------------------------------------------ normalized complex

def _unit_pivot(A: AlgebraSC) -> Optional[int]:
    """A basis index whose unit coefficient is invertible in the ring."""
    for i, u in enumerate(A.unit):
        if u == 0:
            continue
        if A.ring.is_field or u in (1, -1):
            return i
    return None


def supports_normalization(A: AlgebraSC) -> bool:
    return _unit_pivot(A) is not None


@lru_cache(maxsize=None)
def _reduced_maps(A: AlgebraSC) -> Tuple[ExactMatrix, ExactMatrix]:
    """
    Projection A -> A/k.1 and section A/k.1 -> A, with A/k.1 spanned by the
    basis vectors other than the unit pivot.
    """
    u = _unit_pivot(A)
    if u is None:
        raise RingMismatchError(f"Unit of {A.name} has no invertible coordinate")
    d = A.dim
    others = [i for i in range(d) if i != u]
    pos = {i: k for k, i in enumerate(others)}
    inv_u = A.ring.inverse(A.unit[u])

    proj_entries = [(pos[i], i, 1) for i in others]
    # e_u = -(1/unit_u) sum_{i != u} unit_i e_i modulo the unit
    proj_entries += [(pos[i], u, -A.unit[i] * inv_u) for i in others if A.unit[i] != 0]
    projection = ExactMatrix.from_entries(A.ring, d - 1, d, proj_entries)
    section = ExactMatrix.from_entries(A.ring, d, d - 1, [(i, pos[i], 1) for i in others])
    return projection, section


def normalized_dimension(A: AlgebraSC, p: int) -> int:
    return A.dim * (A.dim - 1) ** p if p >= 0 else 0


@lru_cache(maxsize=None)
def projection(A: AlgebraSC, p: int) -> ExactMatrix:
    """C_p -> normalized C_p, id (x) pi^{(x)p}."""
    pi, _ = _reduced_maps(A)
    result = ExactMatrix.identity(A.ring, A.dim)
    for _ in range(p):
        result = kron(result, pi)
    return result


@lru_cache(maxsize=None)
def section(A: AlgebraSC, p: int) -> ExactMatrix:
    """Normalized C_p -> C_p, id (x) iota^{(x)p}."""
    _, iota = _reduced_maps(A)
    result = ExactMatrix.identity(A.ring, A.dim)
    for _ in range(p):
        result = kron(result, iota)
    return result


@lru_cache(maxsize=None)
def normalized_b(A: AlgebraSC, p: int) -> ExactMatrix:
    if p == 0:
        return ExactMatrix.zeros(A.ring, 0, A.dim)
    return projection(A, p - 1) @ b(A, p) @ section(A, p)


@lru_cache(maxsize=None)
def normalized_B(A: AlgebraSC, p: int) -> ExactMatrix:
    return projection(A, p + 1) @ B(A, p) @ section(A, p)


def _use_normalized(A: AlgebraSC, normalized: Optional[bool]) -> bool:
    if normalized is None:
        normalized = DEFAULT_NORMALIZED
    if normalized and not supports_normalization(A):
        logger.warning("Unit of %s has no invertible coordinate; using the full complex", A.name)
        return False
    return normalized


def boundary(A: AlgebraSC, p: int, normalized: Optional[bool] = None) -> ExactMatrix:
    return normalized_b(A, p) if _use_normalized(A, normalized) else b(A, p)


def connes(A: AlgebraSC, p: int, normalized: Optional[bool] = None) -> ExactMatrix:
    return normalized_B(A, p) if _use_normalized(A, normalized) else B(A, p)


def complex_dimension(A: AlgebraSC, p: int, normalized: Optional[bool] = None) -> int:
    if _use_normalized(A, normalized):
        return normalized_dimension(A, p)
    return chain_dimension(A, p)


# ------------------------------------------------------------------ homology

@dataclass(frozen=True)
class HomologyGroup:
    """
    A finitely generated module: free part of rank `rank` plus cyclic
    torsion summands Z/e for e in `torsion` (always empty over a field).
    """

    degree: int
    rank: int
    ring: str
    torsion: Tuple[int, ...] = ()

    def describe(self) -> str:
        base = {"Q": "Q", "Z": "Z"}.get(self.ring, self.ring.replace("Fp:", "F"))
        parts = []
        if self.rank:
            parts.append(f"{base}^{self.rank}" if self.rank > 1 else base)
        parts.extend(f"Z/{e}" for e in self.torsion)
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "rank": self.rank,
            "torsion": list(self.torsion),
            "description": self.describe(),
        }


def homology_from_complex(
    ring: ExactRing,
    dims: Dict[int, int],
    differentials: Dict[int, ExactMatrix],
    degrees: Sequence[int]
) -> List[HomologyGroup]:
    """
    Homology of a complex given by chain dimensions and differentials
    d_n: C_n -> C_{n-1} (missing differentials are zero).
    """
    def diff_rank(n):
        m = differentials.get(n)
        return rank(m) if m is not None and not m.is_zero() else 0

    def torsion_of(n):
        m = differentials.get(n)
        if m is None or m.is_zero():
            return []
        return [e for e in elementary_divisors(m) if e > 1]

    ranks = {}
    groups = []
    for n in degrees:
        for k in (n, n + 1):
            if k not in ranks:
                ranks[k] = diff_rank(k)
        free = dims.get(n, 0) - ranks[n] - ranks[n + 1]
        torsion = tuple(torsion_of(n + 1)) if ring == INTEGERS else ()
        groups.append(HomologyGroup(n, free, ring.label, torsion))
    return groups


def hh_ranks(A: AlgebraSC, n_max: int, normalized: Optional[bool] = None) -> List[HomologyGroup]:
    """
    HH_n(A) = ker b_n / im b_{n+1} for 0 <= n <= n_max: dimensions over a
    field, free rank plus elementary divisors over Z.
    """
    if n_max < 0:
        raise InvalidObjectError("n_max must be non-negative")
    require_valid(A)
    use_norm = _use_normalized(A, normalized)

    dims = {p: complex_dimension(A, p, use_norm) for p in range(n_max + 2)}
    differentials = {p: boundary(A, p, use_norm) for p in range(1, n_max + 2)}
    logger.info("HH of %s over %s: chain dimensions %s", A.name, A.ring.label, dims)
    return homology_from_complex(A.ring, dims, differentials, range(n_max + 1))


def hh_to_json(A: AlgebraSC, groups: Sequence[HomologyGroup]) -> dict:
    return {
        "algebra": A.name,
        "ring": A.ring.label,
        "groups": [g.to_dict() for g in groups],
    }


def mod_p_prediction(integral: Sequence[HomologyGroup], p: int) -> List[int]:
    """
    Dimensions over Z/p predicted by universal coefficients from integral
    homology: free_n + #(p-torsion in degree n) + #(p-torsion in degree n-1).
    """
    predicted = []
    previous = 0
    for group in integral:
        current = sum(1 for e in group.torsion if e % p == 0)
        predicted.append(group.rank + current + previous)
        previous = current
    return predicted


def euler_audit(A: AlgebraSC, n_max: int, normalized: Optional[bool] = None) -> Dict[str, object]:
    """
    Check sum (-1)^n dim C_n = sum (-1)^n dim HH_n + (-1)^N rank b_{N+1}
    over 0 <= n <= N = n_max.
    """
    use_norm = _use_normalized(A, normalized)
    groups = hh_ranks(A, n_max, use_norm)
    chain_side = sum((-1) ** n * complex_dimension(A, n, use_norm) for n in range(n_max + 1))
    homology_side = sum((-1) ** g.degree * g.rank for g in groups)
    top = rank(boundary(A, n_max + 1, use_norm))
    homology_side += (-1) ** n_max * top
    return {"chain_side": chain_side, "homology_side": homology_side, "passed": chain_side == homology_side}


def hochschild_resolution_ranks(n: int, max_degree: int, ring: ExactRing = RATIONALS) -> List[HomologyGroup]:
    """
    HH of k[x]/x^n from the 2-periodic resolution of A over A (x) A^op:
    A <-0- A <-(n x^{n-1})- A <-0- A <- ... , independent of the bar complex.
    """
    A = truncated_polynomial(n, ring)
    element = [0] * n
    element[n - 1] = n
    multiply = A.left_multiplication(element)
    zero = ExactMatrix.zeros(ring, n, n)

    dims = {k: n for k in range(max_degree + 2)}
    differentials = {k: (multiply if k % 2 == 0 else zero) for k in range(1, max_degree + 2)}
    return homology_from_complex(ring, dims, differentials, range(max_degree + 1))


# ------------------------------------------------------------------ traces

@dataclass(frozen=True)
class HH0Trace:
    functional: ExactMatrix
    descends: bool
    rank: int
    hh0_dimension: int


def trace_functional(A: AlgebraSC) -> ExactMatrix:
    if A.trace_form is None:
        raise InvalidObjectError(f"{A.name} carries no trace form")
    return ExactMatrix.row_vector(A.ring, list(A.trace_form))


def trace_hh0(A: AlgebraSC) -> HH0Trace:
    """
    The trace on C_0 = A restricted to HH_0. It must vanish on im b_1; its
    rank on HH_0 is 1 for a matrix algebra.
    """
    tr = trace_functional(A)
    descends = (tr @ b(A, 1)).is_zero()
    if not descends:
        raise CircleTraceError(f"Trace on {A.name} does not vanish on boundaries")
    hh0 = hh_ranks(A, 0)[0].rank
    return HH0Trace(tr, descends, rank(tr), hh0)


@dataclass(frozen=True)
class NegativeCyclicDegree:
    degree: int
    dimension: int
    reliable: bool

    def to_dict(self) -> dict:
        return {"degree": self.degree, "dimension": self.dimension, "reliable": self.reliable}


def _total_layout(A: AlgebraSC, n: int, weight: int, use_norm: bool) -> List[Tuple[int, int, int]]:
    """Blocks (column i, chain degree p, offset) of the total degree n space."""
    layout = []
    offset = 0
    for i in range(weight):
        p = n + 2 * i
        if p < 0:
            continue
        layout.append((i, p, offset))
        offset += complex_dimension(A, p, use_norm)
    return layout


def _layout_size(A: AlgebraSC, layout, use_norm: bool) -> int:
    if not layout:
        return 0
    i, p, offset = layout[-1]
    return offset + complex_dimension(A, p, use_norm)


def total_differential(A: AlgebraSC, n: int, weight: int, normalized: Optional[bool] = None) -> ExactMatrix:
    """
    (b + uB) from total degree n to n-1 on sum_{i < weight} C_{n+2i} u^i,
    dropping every term with u^weight.
    """
    use_norm = _use_normalized(A, normalized)
    source = _total_layout(A, n, weight, use_norm)
    target = _total_layout(A, n - 1, weight, use_norm)
    target_offset = {i: (p, off) for i, p, off in target}

    entries = []
    for i, p, src_off in source:
        if i in target_offset and p >= 1:
            _, dst_off = target_offset[i]
            for r, c, v in boundary(A, p, use_norm).items():
                entries.append((dst_off + r, src_off + c, v))
        if i + 1 in target_offset:
            _, dst_off = target_offset[i + 1]
            for r, c, v in connes(A, p, use_norm).items():
                entries.append((dst_off + r, src_off + c, v))

    return ExactMatrix.from_entries(
        A.ring,
        _layout_size(A, target, use_norm),
        _layout_size(A, source, use_norm),
        entries
    )


def reliable_window(weight: int) -> int:
    """Lowest degree reported as reliable for truncation weight w."""
    return -2 * (weight - 1)


def hc_minus_truncated(
    A: AlgebraSC,
    weight: int,
    min_degree: Optional[int] = None,
    max_degree: int = 1,
    normalized: Optional[bool] = None
) -> List[NegativeCyclicDegree]:
    """
    Homology of the (b, B) total complex truncated to columns 0..weight-1,
    for degrees max_degree down to min_degree. Degrees below -2(weight-1)
    are computed but flagged unreliable.
    """
    if weight < 1:
        raise InvalidObjectError("weight must be at least 1")
    if not A.ring.is_field:
        raise RingMismatchError("Truncated negative cyclic homology is computed over a field")
    require_valid(A)
    use_norm = _use_normalized(A, normalized)
    if min_degree is None:
        min_degree = reliable_window(weight)

    results = []
    ranks: Dict[int, int] = {}

    def diff_rank(n):
        if n not in ranks:
            ranks[n] = rank(total_differential(A, n, weight, use_norm))
        return ranks[n]

    for n in range(max_degree, min_degree - 1, -1):
        size = _layout_size(A, _total_layout(A, n, weight, use_norm), use_norm)
        dim = size - diff_rank(n) - diff_rank(n + 1)
        reliable = n >= reliable_window(weight)
        if not reliable:
            logger.warning("Degree %d is outside the reliable window for weight %d", n, weight)
        results.append(NegativeCyclicDegree(n, dim, reliable))
    return results


@dataclass(frozen=True)
class NegativeCyclicTrace:
    degree: int
    weight: int
    cycle_count: int
    trace_values: Tuple
    rank: int


def trace_negative_cyclic(A: AlgebraSC, weight: int, j: int, normalized: Optional[bool] = None) -> NegativeCyclicTrace:
    """
    Evaluate the trace on negative cyclic classes in degree -2j: for a basis
    of (b + uB)-cycles, the C_0 component (coefficient of u^j) is fed to the
    trace functional. Boundaries have C_0 component in im b_1, where the
    trace vanishes, so the values only depend on classes.
    """
    if not 0 <= j < weight:
        raise InvalidObjectError(f"Degree -2*{j} lies outside the window of weight {weight}")
    use_norm = _use_normalized(A, normalized)
    tr = trace_functional(A)
    n = -2 * j
    cycles = nullspace(total_differential(A, n, weight, use_norm))
    layout = _total_layout(A, n, weight, use_norm)
    offset = next(off for i, p, off in layout if p == 0)

    values = []
    for z in cycles:
        component = [z[offset + k, 0] for k in range(A.dim)]
        values.append(sum((tr[0, k] * component[k] for k in range(A.dim)), A.ring.zero))
    rank_value = 1 if any(v != 0 for v in values) else 0
    return NegativeCyclicTrace(n, weight, len(cycles), tuple(values), rank_value)


# ------------------------------------------------------------------ fiber products

def fiber_product_matrix(A: AlgebraSC, in_slots: int, fibers: Sequence[Sequence[int]]) -> ExactMatrix:
    """
    The map A^{(x) in_slots} -> A^{(x) len(fibers)} whose output slot k is the
    ordered product of the input slots listed in fibers[k] (the unit when
    fibers[k] is empty).
    """
    d = A.dim
    one = A.unit_terms()
    entries = []
    for col, a in enumerate(product(range(d), repeat=in_slots)):
        factors = []
        for fiber in fibers:
            vector = dict(one) if not fiber else {a[fiber[0]]: A.ring.one}
            for x in fiber[1:]:
                vector = A.multiply(vector, {a[x]: A.ring.one})
            factors.append(list(vector.items()))
        for combo in product(*factors):
            coeff = A.ring.one
            out = []
            for k, c in combo:
                coeff = coeff * c
                out.append(k)
            entries.append((_flatten(out, d), col, coeff))
    return ExactMatrix.from_entries(A.ring, d ** len(fibers), d ** in_slots, entries)


# Example usage and testing
if __name__ == "__main__":
    for spec in ("matrix:2", "truncpoly:2", "group:C2"):
        algebra = algebra_from_spec(spec)
        print(f"{spec}: {[g.describe() for g in hh_ranks(algebra, 3)]}")

    integral = hh_ranks(group_algebra(2, INTEGERS), 3)
    print(f"group:C2 over Z: {[g.describe() for g in integral]}")

    window = hc_minus_truncated(algebra_from_spec("matrix:1"), 3, -4, 1)
    print(f"HC- of Q, weight 3: {[(w.degree, w.dimension) for w in window]}")
