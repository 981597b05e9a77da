"""
Unit Tests for the Matrix Category
Tests exact rings, sparse matrices, Kronecker products, symmetries,
duality data and word evaluation.
"""

import unittest
import sys
from fractions import Fraction
from itertools import permutations
from pathlib import Path

import numpy as np

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.matcat import (
    INTEGERS,
    L,
    R,
    RATIONALS,
    DualityData,
    ExactMatrix,
    ExactRing,
    canonical_duality,
    duality_from_document,
    duality_from_matrix,
    eval_word,
    kron,
    prime_field,
    symmetry,
    tensor_power,
    unvec,
    vec,
)
from src.utils import ContractionError, DualityValidationError, InvalidObjectError, RingMismatchError


class TestRings(unittest.TestCase):
    """Test cases for ExactRing"""

    @classmethod
    def setUpClass(cls):
        print("\n" + "="*60)
        print("TESTING: Exact Rings")
        print("="*60)

    def test_labels(self):
        self.assertEqual(ExactRing.from_label("Q"), RATIONALS)
        self.assertEqual(ExactRing.from_label("Z"), INTEGERS)
        self.assertEqual(ExactRing.from_label("Fp:5"), prime_field(5))
        self.assertEqual(ExactRing.from_label("F7").label, "Fp:7")
        for bad in ("R", "Fp:4", "F1"):
            with self.assertRaises(InvalidObjectError):
                ExactRing.from_label(bad)
        print("✓ Ring labels parsed")

    def test_coerce(self):
        f5 = prime_field(5)
        self.assertEqual(f5.coerce("1/2"), 3)
        self.assertEqual(f5.coerce(-1), 4)
        self.assertEqual(RATIONALS.coerce("2/4"), Fraction(1, 2))
        self.assertEqual(INTEGERS.coerce(np.int64(3)), 3)
        with self.assertRaises(RingMismatchError):
            INTEGERS.coerce(Fraction(1, 2))
        with self.assertRaises(RingMismatchError):
            f5.coerce(Fraction(1, 5))
        print("✓ Coercion exact")

    def test_inverse(self):
        self.assertEqual(prime_field(7).inverse(3), 5)
        self.assertEqual(INTEGERS.inverse(-1), -1)
        with self.assertRaises(RingMismatchError):
            INTEGERS.inverse(2)
        with self.assertRaises(ZeroDivisionError):
            RATIONALS.inverse(0)
        print("✓ Inverses computed")


class TestMatrices(unittest.TestCase):
    """Test cases for ExactMatrix arithmetic"""

    @classmethod
    def setUpClass(cls):
        print("\n" + "="*60)
        print("TESTING: Exact Matrices")
        print("="*60)
        cls.a = ExactMatrix.from_rows(RATIONALS, [[1, 2], [3, 4]])
        cls.b = ExactMatrix.from_rows(RATIONALS, [[0, 1], ["1/2", 0]])

    def test_arithmetic(self):
        self.assertEqual((self.a @ self.b).to_rows(), [[1, 1], [2, 3]])
        self.assertEqual((self.a - self.a).is_zero(), True)
        self.assertEqual(self.a.scale(2).to_rows(), [[2, 4], [6, 8]])
        self.assertEqual(self.a.T.to_rows(), [[1, 3], [2, 4]])
        self.assertEqual(self.a.trace(), 5)
        print("✓ Arithmetic exact")

    def test_sparse_storage(self):
        m = ExactMatrix.from_entries(RATIONALS, 2, 2, [(0, 0, 1), (0, 0, -1), (1, 1, 2)])
        self.assertEqual(m.nnz(), 1)
        self.assertEqual(m[0, 0], 0)
        self.assertEqual(prime_field(3).coerce(3), 0)
        print("✓ Zeros dropped")

    def test_shape_and_ring_errors(self):
        with self.assertRaises(InvalidObjectError):
            self.a @ ExactMatrix.identity(RATIONALS, 3)
        with self.assertRaises(RingMismatchError):
            self.a @ ExactMatrix.identity(INTEGERS, 2)
        with self.assertRaises(InvalidObjectError):
            ExactMatrix.from_rows(RATIONALS, [[1, 2], [3]])
        print("✓ Mismatches rejected")

    def test_reduce_mod(self):
        m = ExactMatrix.from_rows(INTEGERS, [[2, 3], [-1, 4]])
        self.assertEqual(m.reduce_mod(2).to_rows(), [[0, 1], [1, 0]])
        print("✓ Reduction mod p")

    def test_kron(self):
        """Mixed-product property and row-major flattening"""
        c = ExactMatrix.from_rows(RATIONALS, [[1, -1], [2, 0]])
        self.assertEqual(kron(self.a, self.b) @ kron(c, c), kron(self.a @ c, self.b @ c))
        k = kron(self.a, ExactMatrix.identity(RATIONALS, 2))
        self.assertEqual(k[2, 0], 3)
        self.assertEqual(tensor_power(self.a, 2).shape, (4, 4))
        print("✓ Kronecker products")

    def test_symmetry_composition(self):
        """Symmetries compose as permutations and are natural"""
        dims = [2, 3, 2]
        for s in permutations(range(3)):
            for t in permutations(range(3)):
                out = [dims[t[k]] for k in range(3)]
                self.assertEqual(
                    symmetry(RATIONALS, out, s) @ symmetry(RATIONALS, dims, t),
                    symmetry(RATIONALS, dims, [t[s[k]] for k in range(3)])
                )
        swap = symmetry(RATIONALS, [2, 2], [1, 0])
        self.assertEqual(swap @ kron(self.a, self.b), kron(self.b, self.a) @ swap)
        with self.assertRaises(InvalidObjectError):
            symmetry(RATIONALS, [2, 2], [0, 0])
        print("✓ Symmetries compose and are natural")

    def test_vec_unvec(self):
        v = vec(self.a)
        self.assertEqual(v.shape, (4, 1))
        self.assertEqual(v[1, 0], 2)
        self.assertEqual(unvec(v, 2), self.a)
        self.assertEqual(unvec(v.T, 2), self.a)
        print("✓ vec and unvec are inverse")


class TestDuality(unittest.TestCase):
    """Test cases for duality data and words"""

    @classmethod
    def setUpClass(cls):
        print("\n" + "="*60)
        print("TESTING: Duality Data")
        print("="*60)

    def test_canonical_duality(self):
        for ring in (RATIONALS, INTEGERS, prime_field(5)):
            for d in range(1, 5):
                data = canonical_duality(d, ring)
                self.assertEqual(data.eta_matrix, ExactMatrix.identity(ring, d))
        print("✓ Canonical dualities validate")

    def test_duality_from_matrix(self):
        h = ExactMatrix.from_rows(RATIONALS, [[1, 2], [0, 1]])
        data = duality_from_matrix(h)
        self.assertEqual(data.eps_matrix, ExactMatrix.from_rows(RATIONALS, [[1, -2], [0, 1]]))
        with self.assertRaises(InvalidObjectError):
            duality_from_matrix(ExactMatrix.from_rows(RATIONALS, [[1, 1], [1, 1]]))
        print("✓ Non-canonical duality built")

    def test_broken_zigzag_reported(self):
        with self.assertRaises(DualityValidationError) as ctx:
            duality_from_document(RATIONALS, 2, [1, 0, 0, 1], [2, 0, 0, 2])
        self.assertEqual(ctx.exception.identity, "V")
        with self.assertRaises(InvalidObjectError):
            DualityData(2, ExactMatrix.column(RATIONALS, [1, 0, 0, 1]), ExactMatrix.row_vector(RATIONALS, [1]))
        print("✓ Broken zig-zags reported with the failing identity")

    def test_snake_through_words(self):
        """Inserting eta then contracting eps is the identity on L"""
        data = canonical_duality(3)
        start = eval_word([L], data)
        mid, up = start.insert_eta(1)
        self.assertEqual(mid.word, (L, R, L))
        end, down = mid.contract_eps(0)
        self.assertEqual(end.word, (L,))
        self.assertEqual(down @ up, start.identity())
        with self.assertRaises(ContractionError):
            mid.contract_eps(1)
        print("✓ Snake identity via words")

    def test_loop_is_dimension(self):
        """eps o swap o eta = dim V"""
        for d in range(1, 5):
            data = canonical_duality(d)
            empty = eval_word([], data)
            rl, eta = empty.insert_eta(0)
            lr, swap = rl.swap(0)
            _, eps = lr.contract_eps(0)
            self.assertEqual((eps @ swap @ eta).scalar(), d)
        print("✓ Loops evaluate to the dimension")


if __name__ == "__main__":
    unittest.main(verbosity=2)
