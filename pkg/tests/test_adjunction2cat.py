"""
Unit Tests for the Adjunction 2-Category
Tests 1-cells, 2-cells, vertical and horizontal composition, the triangle
identities and the monoidal functor attached to an algebra.
"""

import unittest
import sys
from itertools import product
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.adjunction2cat import (
    LEFT_ADJOINT,
    MINUS,
    PLUS,
    RIGHT_ADJOINT,
    OneCell,
    TwoCell,
    compose_one_cells,
    counit_eps,
    enumerate_one_cells,
    enumerate_two_cells,
    from_gap_map,
    hcompose,
    identity_one_cell,
    identity_two_cell,
    interchange_witnesses,
    monad_functor,
    positive_gap_map,
    swap_one_cell,
    triangle_check,
    unit_eta,
    vcompose,
)
from src.hochschild import group_algebra, matrix_algebra, truncated_polynomial
from src.matcat import ExactMatrix, L, R, kron
from src.ordsets import FinOrd, MonotoneMap, compose_monotone, enumerate_monotone, join
from src.utils import CompositionError, InvalidObjectError


class TestOneCells(unittest.TestCase):
    """Test cases for words and their composition"""

    @classmethod
    def setUpClass(cls):
        print("\n" + "="*60)
        print("TESTING: Adjunction 1-Cells")
        print("="*60)

    def test_words(self):
        self.assertEqual(OneCell(MINUS, MINUS, 2).word, (R, L, R, L))
        self.assertEqual(OneCell(MINUS, PLUS, 1).word, (L, R, L))
        self.assertEqual(OneCell(PLUS, MINUS, 1).word, (R, L, R))
        self.assertEqual(OneCell(PLUS, PLUS, 1).word, (L, R))
        self.assertEqual(identity_one_cell(PLUS).label(), "id+")
        with self.assertRaises(InvalidObjectError):
            OneCell(MINUS, MINUS, -1)
        print("✓ Alternating words")

    def test_composition(self):
        """Words concatenate, outer letter first"""
        rl = compose_one_cells(RIGHT_ADJOINT, LEFT_ADJOINT)
        self.assertEqual(rl, OneCell(MINUS, MINUS, 1))
        lr = compose_one_cells(LEFT_ADJOINT, RIGHT_ADJOINT)
        self.assertEqual(lr, OneCell(PLUS, PLUS, 1))
        self.assertEqual(compose_one_cells(LEFT_ADJOINT, OneCell(MINUS, MINUS, 2)).word, (L, R, L, R, L))
        with self.assertRaises(CompositionError):
            compose_one_cells(LEFT_ADJOINT, LEFT_ADJOINT)
        print("✓ 1-cells compose by concatenation")

    def test_swap(self):
        self.assertEqual(swap_one_cell(LEFT_ADJOINT), RIGHT_ADJOINT)
        self.assertEqual(swap_one_cell(OneCell(PLUS, PLUS, 2)).word, (R, L, R, L))
        print("✓ Swapping exchanges L and R")


class TestTwoCells(unittest.TestCase):
    """Test cases for 2-cells and their compositions"""

    @classmethod
    def setUpClass(cls):
        print("\n" + "="*60)
        print("TESTING: Adjunction 2-Cells")
        print("="*60)
        cls.cells = {}
        for a, b in product((MINUS, PLUS), repeat=2):
            for f, g in product(enumerate_one_cells(a, b, 2), repeat=2):
                cls.cells[(f, g)] = enumerate_two_cells(f, g)

    def test_validation(self):
        with self.assertRaises(CompositionError):
            TwoCell(OneCell(MINUS, MINUS, 0), LEFT_ADJOINT, MonotoneMap(FinOrd(0), FinOrd(0), ()))
        with self.assertRaises(InvalidObjectError):
            TwoCell(OneCell(MINUS, MINUS, 1), OneCell(MINUS, MINUS, 1), MonotoneMap(FinOrd(1), FinOrd(2), (0,)))
        with self.assertRaises(InvalidObjectError):
            from_gap_map(OneCell(PLUS, PLUS, 1), OneCell(PLUS, PLUS, 1), (1, 1))
        print("✓ Invalid 2-cells rejected")

    def test_gap_map_round_trip(self):
        """from_gap_map inverts positive_gap_map on every hom set"""
        for (f, g), alphas in self.cells.items():
            for alpha in alphas:
                gap = positive_gap_map(alpha)
                self.assertEqual(from_gap_map(f, g, gap.values), alpha)
        print("✓ Gap maps determine 2-cells")

    def test_counts(self):
        """Hom categories have the expected sizes"""
        k1 = OneCell(MINUS, MINUS, 1)
        k2 = OneCell(MINUS, MINUS, 2)
        self.assertEqual(len(self.cells[(k1, k2)]), 2)
        self.assertEqual(len(self.cells[(OneCell(PLUS, PLUS, 2), OneCell(PLUS, PLUS, 1))]), 2)
        self.assertEqual(len(self.cells[(LEFT_ADJOINT, OneCell(MINUS, PLUS, 1))]), 1)
        self.assertEqual(len(self.cells[(OneCell(MINUS, PLUS, 1), LEFT_ADJOINT)]), 1)
        print("✓ Hom sets counted")

    def test_vertical_category(self):
        """Identities are units and vertical composition is associative"""
        for (f, g), alphas in self.cells.items():
            for alpha in alphas:
                self.assertEqual(vcompose(identity_two_cell(g), alpha), alpha)
                self.assertEqual(vcompose(alpha, identity_two_cell(f)), alpha)
                for h in enumerate_one_cells(f.src, f.dst, 2):
                    for beta in self.cells[(g, h)]:
                        for k in enumerate_one_cells(f.src, f.dst, 1):
                            for gamma in self.cells[(h, k)]:
                                self.assertEqual(
                                    vcompose(gamma, vcompose(beta, alpha)),
                                    vcompose(vcompose(gamma, beta), alpha)
                                )
        print("✓ Vertical composition is a category")

    def test_horizontal_units(self):
        for (f, g), alphas in self.cells.items():
            for alpha in alphas:
                left = hcompose(identity_two_cell(identity_one_cell(f.dst)), alpha)
                right = hcompose(alpha, identity_two_cell(identity_one_cell(f.src)))
                self.assertEqual(left, alpha)
                self.assertEqual(right, alpha)
        print("✓ Identity 2-cells are horizontal units")

    def test_endomorphisms_of_minus_compose_by_join(self):
        """On (- -> -) horizontal composition is the join of ordered sets"""
        for (f, g), alphas in self.cells.items():
            if f.pattern != (MINUS, MINUS):
                continue
            for (f2, g2), betas in self.cells.items():
                if f2.pattern != (MINUS, MINUS):
                    continue
                for alpha in alphas:
                    for beta in betas:
                        self.assertEqual(hcompose(beta, alpha).map, join(beta.map, alpha.map))
        print("✓ End(-) is the augmented simplex category under join")

    def test_interchange(self):
        self.assertEqual(list(interchange_witnesses(1)), [])
        print("✓ Interchange law holds")

    def test_triangles(self):
        self.assertEqual(triangle_check(), (True, True))
        eta, eps = unit_eta(), counit_eps()
        self.assertEqual(eta.dst.word, (R, L))
        self.assertEqual(eps.src.word, (L, R))
        self.assertEqual(positive_gap_map(eps).values, (0, 0))
        print("✓ Triangle identities hold")


class TestMonadFunctor(unittest.TestCase):
    """Test cases for the functor on ordered sets attached to an algebra"""

    @classmethod
    def setUpClass(cls):
        print("\n" + "="*60)
        print("TESTING: Algebra Functor")
        print("="*60)

    def test_multiplication_and_unit(self):
        A = truncated_polynomial(2)
        self.assertEqual(monad_functor(A, MonotoneMap(FinOrd(2), FinOrd(1), (0, 0))), A.multiplication_matrix())
        self.assertEqual(monad_functor(A, MonotoneMap(FinOrd(0), FinOrd(1), ())), A.unit_matrix())
        self.assertEqual(monad_functor(A, FinOrd(2)).shape, (4, 4))
        print("✓ Multiplication and unit recovered")

    def test_functoriality(self):
        A = group_algebra(3)
        for m, n, k in product(range(3), repeat=3):
            for f in enumerate_monotone(FinOrd(m), FinOrd(n)):
                for g in enumerate_monotone(FinOrd(n), FinOrd(k)):
                    self.assertEqual(
                        monad_functor(A, compose_monotone(g, f)),
                        monad_functor(A, g) @ monad_functor(A, f)
                    )
        print("✓ Functor preserves composition")

    def test_monoidal(self):
        """Joins of maps go to tensor products, the empty order to the ground ring"""
        A = matrix_algebra(2)
        maps = [f for m, n in product(range(3), repeat=2) for f in enumerate_monotone(FinOrd(m), FinOrd(n))]
        for f in maps:
            for g in maps:
                self.assertEqual(
                    monad_functor(A, join(f, g)),
                    kron(monad_functor(A, f), monad_functor(A, g))
                )
        self.assertEqual(monad_functor(A, FinOrd(0)), ExactMatrix.identity(A.ring, 1))
        print(f"✓ Monoidal over {len(maps) ** 2} pairs of maps")


if __name__ == "__main__":
    unittest.main(verbosity=2)
