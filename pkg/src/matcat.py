"""
Matrix Category Module
Free modules of finite rank over an exact ring (Q, Z, Z/p): exact matrices,
Kronecker products, symmetry isomorphisms, duality data and the evaluation
of words in V = L and its dual R.

Tensor flattening: the basis vector e_i (x) e_j of a d1*d2 dimensional
product has index i*d2 + j (row-major), for every product used here.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from src.utils import (
    ContractionError,
    DualityValidationError,
    InvalidObjectError,
    RingMismatchError,
    parse_scalar,
)

logger = logging.getLogger(__name__)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class ExactRing:
    """
    One of Q, Z, or Z/p. Scalars are Fraction over Q, int over Z and ints
    in [0, p) over Z/p.
    """

    kind: str
    modulus: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("Q", "Z", "Fp"):
            raise InvalidObjectError(f"Unknown ring kind {self.kind!r}")
        if self.kind == "Fp":
            if self.modulus is None or not _is_prime(self.modulus):
                raise InvalidObjectError(f"Prime field modulus must be prime, got {self.modulus!r}")
        elif self.modulus is not None:
            raise InvalidObjectError("Only prime fields carry a modulus")

    @property
    def label(self) -> str:
        return f"Fp:{self.modulus}" if self.kind == "Fp" else self.kind

    @property
    def is_field(self) -> bool:
        return self.kind != "Z"

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    @classmethod
    def from_label(cls, label: str) -> "ExactRing":
        """
        Parse "Q", "Z", "Fp:p" (also "Fp" followed directly by digits, e.g. "F5").
        """
        text = label.strip()
        if text == "Q":
            return RATIONALS
        if text == "Z":
            return INTEGERS
        if text.startswith("Fp:"):
            return prime_field(int(text[3:]))
        if text.startswith("F") and text[1:].isdigit():
            return prime_field(int(text[1:]))
        raise InvalidObjectError(f"Unknown ring {label!r}")

    def coerce(self, value):
        """
        Bring an int, Fraction or scalar string into this ring.
        """
        if isinstance(value, str):
            value = parse_scalar(value)
        if isinstance(value, np.generic):
            value = value.item()
        value = Fraction(value)

        if self.kind == "Q":
            return value
        if self.kind == "Z":
            if value.denominator != 1:
                raise RingMismatchError(f"{value} is not an integer")
            return value.numerator

        p = self.modulus
        if value.denominator % p == 0:
            raise RingMismatchError(f"Denominator of {value} vanishes mod {p}")
        return (value.numerator * pow(value.denominator, -1, p)) % p

    def normalize(self, value):
        """Reduce the result of Python arithmetic on ring scalars."""
        if self.kind == "Fp":
            return value % self.modulus
        return value

    def inverse(self, value):
        if value == 0:
            raise ZeroDivisionError("Zero has no inverse")
        if self.kind == "Q":
            return 1 / Fraction(value)
        if self.kind == "Z":
            if value not in (1, -1):
                raise RingMismatchError(f"{value} is not a unit in Z")
            return value
        return pow(value, -1, self.modulus)

    def divide(self, a, b):
        return self.normalize(a * self.inverse(b))


RATIONALS = ExactRing("Q")
INTEGERS = ExactRing("Z")


def prime_field(p: int) -> ExactRing:
    return ExactRing("Fp", p)


class ExactMatrix:
    """
    A matrix over an exact ring, stored sparsely as {row: {col: value}}
    with no explicit zeros. Instances are treated as immutable.
    """

    __slots__ = ("ring", "rows", "cols", "_data")

    def __init__(self, ring: ExactRing, rows: int, cols: int, data: Optional[Dict[int, Dict[int, object]]] = None):
        if rows < 0 or cols < 0:
            raise InvalidObjectError(f"Invalid shape {rows}x{cols}")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self._data: Dict[int, Dict[int, object]] = {}

        for i, row in (data or {}).items():
            if not 0 <= i < rows:
                raise InvalidObjectError(f"Row {i} outside {rows}")
            clean = {}
            for j, value in row.items():
                if not 0 <= j < cols:
                    raise InvalidObjectError(f"Column {j} outside {cols}")
                value = ring.normalize(value)
                if value != 0:
                    clean[j] = value
            if clean:
                self._data[i] = clean

    # ---------------------------------------------------------------- builders

    @classmethod
    def zeros(cls, ring: ExactRing, rows: int, cols: int) -> "ExactMatrix":
        return cls(ring, rows, cols)

    @classmethod
    def identity(cls, ring: ExactRing, n: int) -> "ExactMatrix":
        return cls(ring, n, n, {i: {i: ring.one} for i in range(n)})

    @classmethod
    def from_rows(cls, ring: ExactRing, rows: Sequence[Sequence]) -> "ExactMatrix":
        """
        Build from a dense list of rows; entries may be ints, Fractions or
        scalar strings.
        """
        n_rows = len(rows)
        n_cols = len(rows[0]) if n_rows else 0
        data = {}
        for i, row in enumerate(rows):
            if len(row) != n_cols:
                raise InvalidObjectError("Ragged rows")
            data[i] = {j: ring.coerce(v) for j, v in enumerate(row)}
        return cls(ring, n_rows, n_cols, data)

    @classmethod
    def column(cls, ring: ExactRing, values: Sequence) -> "ExactMatrix":
        return cls.from_rows(ring, [[v] for v in values]) if values else cls(ring, 0, 1)

    @classmethod
    def row_vector(cls, ring: ExactRing, values: Sequence) -> "ExactMatrix":
        return cls(ring, 1, len(values), {0: {j: ring.coerce(v) for j, v in enumerate(values)}})

    @classmethod
    def from_numpy(cls, ring: ExactRing, array: np.ndarray) -> "ExactMatrix":
        array = np.asarray(array, dtype=object)
        if array.ndim != 2:
            raise InvalidObjectError("Expected a 2-dimensional array")
        return cls.from_rows(ring, array.tolist()) if array.shape[0] else cls(ring, 0, array.shape[1])

    @classmethod
    def from_entries(cls, ring: ExactRing, rows: int, cols: int, entries: Iterable[Tuple[int, int, object]]) -> "ExactMatrix":
        """Build from (i, j, value) triples; repeated positions are summed."""
        data: Dict[int, Dict[int, object]] = {}
        for i, j, value in entries:
            row = data.setdefault(i, {})
            row[j] = row.get(j, 0) + value
        return cls(ring, rows, cols, data)

    # ---------------------------------------------------------------- access

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, index: Tuple[int, int]):
        i, j = index
        return self._data.get(i, {}).get(j, self.ring.zero)

    def row(self, i: int) -> Dict[int, object]:
        return dict(self._data.get(i, {}))

    def items(self) -> Iterator[Tuple[int, int, object]]:
        for i in sorted(self._data):
            for j in sorted(self._data[i]):
                yield i, j, self._data[i][j]

    def nnz(self) -> int:
        return sum(len(r) for r in self._data.values())

    def is_zero(self) -> bool:
        return not self._data

    def is_identity(self) -> bool:
        return self == ExactMatrix.identity(self.ring, self.rows) if self.rows == self.cols else False

    def to_rows(self) -> List[List]:
        return [[self[i, j] for j in range(self.cols)] for i in range(self.rows)]

    def to_numpy(self) -> np.ndarray:
        array = np.full((self.rows, self.cols), self.ring.zero, dtype=object)
        for i, j, value in self.items():
            array[i, j] = value
        return array

    def to_strings(self) -> List[List[str]]:
        from src.utils import format_scalar

        return [[format_scalar(v) for v in row] for row in self.to_rows()]

    def scalar(self):
        """The entry of a 1x1 matrix."""
        if self.shape != (1, 1):
            raise InvalidObjectError(f"Not a scalar matrix: shape {self.shape}")
        return self[0, 0]

    # ---------------------------------------------------------------- arithmetic

    def _check_ring(self, other: "ExactMatrix") -> None:
        if self.ring != other.ring:
            raise RingMismatchError(f"Ring mismatch: {self.ring.label} vs {other.ring.label}")

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_ring(other)
        if self.cols != other.rows:
            raise InvalidObjectError(f"Cannot multiply {self.shape} by {other.shape}")
        data = {}
        for i, row in self._data.items():
            acc: Dict[int, object] = {}
            for k, a in row.items():
                other_row = other._data.get(k)
                if not other_row:
                    continue
                for j, b in other_row.items():
                    acc[j] = acc.get(j, 0) + a * b
            data[i] = acc
        return ExactMatrix(self.ring, self.rows, other.cols, data)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_ring(other)
        if self.shape != other.shape:
            raise InvalidObjectError(f"Cannot add {self.shape} and {other.shape}")
        data = {i: dict(r) for i, r in self._data.items()}
        for i, row in other._data.items():
            target = data.setdefault(i, {})
            for j, v in row.items():
                target[j] = target.get(j, 0) + v
        return ExactMatrix(self.ring, self.rows, self.cols, data)

    def __neg__(self) -> "ExactMatrix":
        return self.scale(-1)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + (-other)

    def scale(self, c) -> "ExactMatrix":
        c = self.ring.coerce(c)
        data = {i: {j: c * v for j, v in r.items()} for i, r in self._data.items()}
        return ExactMatrix(self.ring, self.rows, self.cols, data)

    def transpose(self) -> "ExactMatrix":
        data: Dict[int, Dict[int, object]] = {}
        for i, j, v in self.items():
            data.setdefault(j, {})[i] = v
        return ExactMatrix(self.ring, self.cols, self.rows, data)

    @property
    def T(self) -> "ExactMatrix":
        return self.transpose()

    def trace(self):
        if self.rows != self.cols:
            raise InvalidObjectError("Trace of a non-square matrix")
        total = self.ring.zero
        for i in range(self.rows):
            total = total + self[i, i]
        return self.ring.normalize(total)

    def reduce_mod(self, p: int) -> "ExactMatrix":
        """Reduce an integer matrix modulo a prime."""
        target = prime_field(p)
        return ExactMatrix(
            target, self.rows, self.cols,
            {i: {j: target.coerce(v) for j, v in r.items()} for i, r in self._data.items()}
        )

    def change_ring(self, ring: ExactRing) -> "ExactMatrix":
        return ExactMatrix(
            ring, self.rows, self.cols,
            {i: {j: ring.coerce(v) for j, v in r.items()} for i, r in self._data.items()}
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.shape == other.shape
            and self._data == other._data
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"ExactMatrix({self.ring.label}, {self.rows}x{self.cols}, {self.to_rows()})"


def kron(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """
    Kronecker product; entry (i1*b.rows + i2, j1*b.cols + j2) = a[i1,j1]*b[i2,j2].
    """
    if a.ring != b.ring:
        raise RingMismatchError(f"Ring mismatch: {a.ring.label} vs {b.ring.label}")
    entries = []
    b_items = list(b.items())
    for i1, j1, x in a.items():
        for i2, j2, y in b_items:
            entries.append((i1 * b.rows + i2, j1 * b.cols + j2, x * y))
    return ExactMatrix.from_entries(a.ring, a.rows * b.rows, a.cols * b.cols, entries)


def kron_all(ring: ExactRing, factors: Iterable[ExactMatrix]) -> ExactMatrix:
    result = ExactMatrix.identity(ring, 1)
    for f in factors:
        result = kron(result, f)
    return result


def tensor_power(m: ExactMatrix, k: int) -> ExactMatrix:
    return kron_all(m.ring, [m] * k)


def matrix_trace(m: ExactMatrix):
    return m.trace()


def symmetry(ring: ExactRing, dims: Sequence[int], perm: Sequence[int]) -> ExactMatrix:
    """
    The permutation isomorphism that places input factor perm[k] at output
    position k. Composition: symmetry(dims', s) @ symmetry(dims, t) equals
    symmetry(dims, [t[s[k]] for k]) where dims' = [dims[t[k]] for k].

    Args:
        ring (ExactRing): Coefficient ring
        dims (Sequence[int]): Input factor dimensions
        perm (Sequence[int]): A permutation of range(len(dims))

    Returns:
        ExactMatrix: 0/1 permutation matrix
    """
    r = len(dims)
    if len(perm) != r or sorted(perm) != list(range(r)):
        raise InvalidObjectError(f"{list(perm)} is not a permutation of {r} factors")

    out_dims = [dims[perm[k]] for k in range(r)]
    total = 1
    for d in dims:
        total *= d

    def flatten(index: Sequence[int], shape: Sequence[int]) -> int:
        flat = 0
        for i, d in zip(index, shape):
            flat = flat * d + i
        return flat

    entries = []
    for index in product(*[range(d) for d in dims]):
        out_index = [index[perm[k]] for k in range(r)]
        entries.append((flatten(out_index, out_dims), flatten(index, dims), 1))
    return ExactMatrix.from_entries(ring, total, total, entries)


def vec(m: ExactMatrix) -> ExactMatrix:
    """Row-major vectorization of a d x d matrix as a d^2 x 1 column."""
    entries = [(i * m.cols + j, 0, v) for i, j, v in m.items()]
    return ExactMatrix.from_entries(m.ring, m.rows * m.cols, 1, entries)


def unvec(v: ExactMatrix, d: int) -> ExactMatrix:
    """Inverse of vec for a d^2 column or row vector."""
    entries = []
    for i, j, value in v.items():
        flat = i if v.cols == 1 else j
        entries.append((flat // d, flat % d, value))
    return ExactMatrix.from_entries(v.ring, d, d, entries)


@dataclass(frozen=True, eq=False)
class DualityData:
    """
    Duality data for V of dimension d:
    eta: 1 -> V^v (x) V, with e_i^v (x) e_j at index i*d + j,
    eps: V (x) V^v -> 1, with e_i (x) e_j^v at index i*d + j.
    """

    dim: int
    eta: ExactMatrix
    eps: ExactMatrix

    def __post_init__(self):
        if self.dim < 1:
            raise InvalidObjectError("Duality data needs dim >= 1")
        if self.eta.shape != (self.dim ** 2, 1) or self.eps.shape != (1, self.dim ** 2):
            raise InvalidObjectError(
                f"eta must be {self.dim ** 2}x1 and eps 1x{self.dim ** 2}"
            )
        if self.eta.ring != self.eps.ring:
            raise RingMismatchError("eta and eps over different rings")

    @property
    def ring(self) -> ExactRing:
        return self.eta.ring

    @property
    def eta_matrix(self) -> ExactMatrix:
        """eta as a d x d matrix H with H[i][j] the coefficient of e_i^v (x) e_j."""
        return unvec(self.eta, self.dim)

    @property
    def eps_matrix(self) -> ExactMatrix:
        """eps as a d x d matrix E with E[i][j] = eps(e_i (x) e_j^v)."""
        return unvec(self.eps, self.dim)


def zigzag_maps(data: DualityData) -> Tuple[ExactMatrix, ExactMatrix]:
    """
    The two snake composites (eps (x) id_V)(id_V (x) eta) on V and
    (id_V^v (x) eps)(eta (x) id_V^v) on V^v.
    """
    d = data.dim
    ident = ExactMatrix.identity(data.ring, d)
    snake_v = kron(data.eps, ident) @ kron(ident, data.eta)
    snake_dual = kron(ident, data.eps) @ kron(data.eta, ident)
    return snake_v, snake_dual


def validate_duality(data: DualityData) -> None:
    """
    Raise DualityValidationError unless both zig-zag identities hold exactly.
    """
    ident = ExactMatrix.identity(data.ring, data.dim)
    snake_v, snake_dual = zigzag_maps(data)
    if snake_v != ident:
        raise DualityValidationError(
            "Zig-zag (eps x id_V)(id_V x eta) != id_V", identity="V"
        )
    if snake_dual != ident:
        raise DualityValidationError(
            "Zig-zag (id x eps)(eta x id) != id_V^v", identity="V^v"
        )


def canonical_duality(d: int, ring: ExactRing = RATIONALS) -> DualityData:
    """
    The standard duality: eta = sum_i e_i^v (x) e_i and eps the evaluation.

    Args:
        d (int): Dimension, d >= 1
        ring (ExactRing): Coefficient ring

    Returns:
        DualityData: Validated duality data
    """
    if d < 1:
        raise InvalidObjectError("canonical_duality needs d >= 1")
    ident = ExactMatrix.identity(ring, d)
    data = DualityData(d, vec(ident), vec(ident).transpose())
    validate_duality(data)
    return data


def duality_from_matrix(h: ExactMatrix) -> DualityData:
    """
    Non-canonical duality data eta = vec(H), eps = vec(H^-1) for an
    invertible H. The zig-zags reduce to E.H = I and H.E = I.
    """
    from src.linalg import inverse as matrix_inverse

    if h.rows != h.cols:
        raise InvalidObjectError("Duality matrix must be square")
    e = matrix_inverse(h)
    data = DualityData(h.rows, vec(h), vec(e).transpose())
    validate_duality(data)
    return data


def duality_from_document(ring: ExactRing, dim: int, eta: Sequence, eps: Sequence) -> DualityData:
    data = DualityData(
        dim,
        ExactMatrix.column(ring, list(eta)),
        ExactMatrix.row_vector(ring, list(eps))
    )
    validate_duality(data)
    return data


L = "L"
R = "R"


@dataclass(frozen=True)
class WordObject:
    """
    A word in L (= V) and R (= V^v), i.e. an object of the free monoidal
    category on a dual pair, evaluated in free modules.
    """

    word: Tuple[str, ...]
    data: DualityData

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        for letter in self.word:
            if letter not in (L, R):
                raise InvalidObjectError(f"Unknown letter {letter!r}")

    @property
    def dimension(self) -> int:
        return self.data.dim ** len(self.word)

    def _pad(self, position: int, middle: ExactMatrix, consumed: int) -> ExactMatrix:
        ring = self.data.ring
        d = self.data.dim
        left = ExactMatrix.identity(ring, d ** position)
        right = ExactMatrix.identity(ring, d ** (len(self.word) - position - consumed))
        return kron(kron(left, middle), right)

    def identity(self) -> ExactMatrix:
        return ExactMatrix.identity(self.data.ring, self.dimension)

    def insert_eta(self, position: int) -> Tuple["WordObject", ExactMatrix]:
        """Insert the pair R, L at `position` via eta."""
        if not 0 <= position <= len(self.word):
            raise InvalidObjectError(f"Position {position} outside word of length {len(self.word)}")
        new_word = self.word[:position] + (R, L) + self.word[position:]
        return WordObject(new_word, self.data), self._pad(position, self.data.eta, 0)

    def contract_eps(self, position: int) -> Tuple["WordObject", ExactMatrix]:
        """Contract the adjacent pair L, R at `position` via eps."""
        if self.word[position:position + 2] != (L, R):
            raise ContractionError(
                f"No (L, R) pair at position {position} of {''.join(self.word)}"
            )
        new_word = self.word[:position] + self.word[position + 2:]
        return WordObject(new_word, self.data), self._pad(position, self.data.eps, 2)

    def swap(self, position: int) -> Tuple["WordObject", ExactMatrix]:
        """Exchange the letters at position and position+1 via the symmetry."""
        if not 0 <= position < len(self.word) - 1:
            raise InvalidObjectError(f"No adjacent pair at position {position}")
        d = self.data.dim
        new_word = list(self.word)
        new_word[position], new_word[position + 1] = new_word[position + 1], new_word[position]
        twist = symmetry(self.data.ring, [d, d], [1, 0])
        return WordObject(tuple(new_word), self.data), self._pad(position, twist, 2)


def eval_word(word: Sequence[str], data: DualityData) -> WordObject:
    """
    Evaluate a word in L, R: the result carries the tensor dimension and the
    generator 2-cell evaluators (insert_eta, contract_eps, swap).
    """
    return WordObject(tuple(word), data)


# Example usage and testing
if __name__ == "__main__":
    data = canonical_duality(2)
    print(f"eps o eta = {(data.eps @ symmetry(RATIONALS, [2, 2], [1, 0]) @ data.eta).scalar()}")

    start = eval_word([L], data)
    mid, up = start.insert_eta(1)
    end, down = mid.contract_eps(0)
    print(f"snake is identity: {(down @ up) == start.identity()}")
