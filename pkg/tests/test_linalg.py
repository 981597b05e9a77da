"""
Unit Tests for Exact Linear Algebra
Tests rank, nullspace, inverse and Smith normal form.
"""

import unittest
import sys
from pathlib import Path

import numpy as np

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.linalg import (
    elementary_divisors,
    from_domain_matrix,
    inverse,
    nullspace,
    rank,
    rref,
    smith_normal_form,
    to_domain_matrix,
)
from src.matcat import INTEGERS, RATIONALS, ExactMatrix, prime_field
from src.utils import InvalidObjectError, RingMismatchError


class TestFieldElimination(unittest.TestCase):
    """Test cases for elimination over fields"""

    @classmethod
    def setUpClass(cls):
        print("\n" + "="*60)
        print("TESTING: Exact Linear Algebra")
        print("="*60)
        cls.singular = ExactMatrix.from_rows(RATIONALS, [[1, 2, 3], [2, 4, 6], [1, 0, 1]])

    def test_rank(self):
        self.assertEqual(rank(self.singular), 2)
        self.assertEqual(rank(ExactMatrix.identity(RATIONALS, 4)), 4)
        self.assertEqual(rank(ExactMatrix.zeros(RATIONALS, 3, 0)), 0)
        # Rank depends on the characteristic
        m = [[2, 0], [0, 1]]
        self.assertEqual(rank(ExactMatrix.from_rows(prime_field(2), m)), 1)
        self.assertEqual(rank(ExactMatrix.from_rows(INTEGERS, m)), 2)
        print("✓ Ranks computed")

    def test_rref(self):
        pivots, order = rref(self.singular)
        self.assertEqual(order, [0, 1])
        self.assertEqual(pivots[0], {0: 1, 2: 1})
        self.assertEqual(pivots[1], {1: 1, 2: 1})
        print("✓ Reduced echelon form")

    def test_nullspace(self):
        basis = nullspace(self.singular)
        self.assertEqual(len(basis), 1)
        self.assertTrue((self.singular @ basis[0]).is_zero())
        last = basis[0][2, 0]
        self.assertEqual([[v / last] for [v] in basis[0].to_rows()], [[-1], [-1], [1]])
        with self.assertRaises(RingMismatchError):
            nullspace(ExactMatrix.identity(INTEGERS, 2))
        print("✓ Nullspace basis")

    def test_inverse(self):
        m = ExactMatrix.from_rows(RATIONALS, [[2, 1], [1, 1]])
        self.assertEqual(m @ inverse(m), ExactMatrix.identity(RATIONALS, 2))
        f5 = ExactMatrix.from_rows(prime_field(5), [[2, 0], [0, 3]])
        self.assertEqual(inverse(f5).to_rows(), [[3, 0], [0, 2]])
        unimodular = ExactMatrix.from_rows(INTEGERS, [[1, 3], [0, 1]])
        self.assertEqual(inverse(unimodular).to_rows(), [[1, -3], [0, 1]])
        with self.assertRaises(InvalidObjectError):
            inverse(self.singular)
        print("✓ Inverses exact")


class TestDomainConversion(unittest.TestCase):
    """Test cases for moving matrices in and out of sympy domains"""

    @classmethod
    def setUpClass(cls):
        print("\n" + "="*60)
        print("TESTING: Domain Conversion")
        print("="*60)

    def test_entries_survive(self):
        for ring, rows in (
            (RATIONALS, [["1/2", 0], [-3, "7/5"]]),
            (INTEGERS, [[4, -1], [0, 9]]),
            (prime_field(7), [[6, 0], [3, 1]]),
        ):
            m = ExactMatrix.from_rows(ring, rows)
            dm = to_domain_matrix(m)
            self.assertEqual(dm.shape, (2, 2))
            self.assertEqual(from_domain_matrix(dm, ring), m, ring.label)
        print("✓ Entries preserved over Q, Z and F_7")


class TestSmithNormalForm(unittest.TestCase):
    """Test cases for integer elimination"""

    @classmethod
    def setUpClass(cls):
        print("\n" + "="*60)
        print("TESTING: Smith Normal Form")
        print("="*60)

    def test_smith_form(self):
        """D = U M V with divisibility along the diagonal"""
        m = ExactMatrix.from_rows(INTEGERS, [[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
        d, u, v = smith_normal_form(m)
        self.assertEqual(u @ m @ v, d)
        diagonal = [d[i, i] for i in range(3)]
        self.assertEqual(diagonal, [2, 6, 12])
        for i in range(3):
            for j in range(3):
                if i != j:
                    self.assertEqual(d[i, j], 0)
        print(f"✓ Smith form diagonal {diagonal}")

    def test_elementary_divisors(self):
        m = ExactMatrix.from_rows(INTEGERS, [[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
        self.assertEqual(elementary_divisors(m), [2, 6, 12])
        self.assertEqual(elementary_divisors(ExactMatrix.from_rows(INTEGERS, [[1, 0], [0, 2]])), [1, 2])
        self.assertEqual(elementary_divisors(ExactMatrix.zeros(INTEGERS, 2, 2)), [])
        with self.assertRaises(RingMismatchError):
            elementary_divisors(ExactMatrix.identity(RATIONALS, 2))
        print("✓ Elementary divisors")

    def test_unit_pivots_then_invariant_factors(self):
        """Unit pivots are cleared first and agree with the full Smith form"""
        m = ExactMatrix.from_rows(INTEGERS, [[1, 1, 0], [0, 2, 0], [0, 0, 4]])
        self.assertEqual(elementary_divisors(m), [1, 2, 4])
        d, _, _ = smith_normal_form(m)
        self.assertEqual([d[i, i] for i in range(3)], [1, 2, 4])
        print("✓ Sparse unit pivots agree with the Smith form")

    def test_torsion_of_boundary(self):
        """The boundary 2 on Z has cokernel Z/2"""
        boundary = ExactMatrix.from_numpy(INTEGERS, np.array([[2]], dtype=object))
        self.assertEqual(elementary_divisors(boundary), [2])
        print("✓ Torsion detected")


if __name__ == "__main__":
    unittest.main(verbosity=2)
