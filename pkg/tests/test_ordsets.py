"""
Unit Tests for Ordered Sets
Tests monotone maps, joins, marked orders and the simplex-to-interval functor.
"""

import unittest
import sys
from itertools import product
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.ordsets import (
    FinOrd,
    MAX,
    MIN,
    MarkedOrd,
    MonotoneMap,
    compose_marked,
    compose_monotone,
    delta_to_interval,
    delta_to_interval_map,
    enumerate_marked,
    enumerate_monotone,
    identity,
    join,
    join_all,
    marked_identity,
    marked_map,
    reverse,
)
from src.utils import CompositionError, InvalidObjectError


class TestMonotoneMaps(unittest.TestCase):
    """Test cases for FinOrd and MonotoneMap"""

    @classmethod
    def setUpClass(cls):
        print("\n" + "="*60)
        print("TESTING: Monotone Maps")
        print("="*60)
        cls.maps = {
            (m, n): enumerate_monotone(FinOrd(m), FinOrd(n))
            for m in range(4) for n in range(4)
        }

    def test_rejects_invalid_values(self):
        """Constructor validates range and monotonicity"""
        with self.assertRaises(InvalidObjectError):
            MonotoneMap(FinOrd(2), FinOrd(2), (1, 0))
        with self.assertRaises(InvalidObjectError):
            MonotoneMap(FinOrd(2), FinOrd(2), (0, 2))
        with self.assertRaises(InvalidObjectError):
            MonotoneMap(FinOrd(2), FinOrd(2), (0,))
        with self.assertRaises(InvalidObjectError):
            FinOrd(-1)
        print("✓ Invalid maps rejected")

    def test_enumeration_counts(self):
        """There are C(m+n-1, m) monotone maps from m to n elements"""
        from math import comb

        for (m, n), maps in self.maps.items():
            expected = comb(m + n - 1, m) if n > 0 else (1 if m == 0 else 0)
            self.assertEqual(len(maps), expected, f"{m} -> {n}")
            self.assertEqual(len(set(maps)), len(maps))
        print("✓ Enumeration counts match binomials")

    def test_category_laws(self):
        """Associativity and unit laws, exhaustively up to size 3"""
        sizes = range(4)
        for m, n, k in product(sizes, repeat=3):
            for f in self.maps[(m, n)]:
                self.assertEqual(compose_monotone(identity(f.dst), f), f)
                self.assertEqual(compose_monotone(f, identity(f.src)), f)
                for g in self.maps[(n, k)]:
                    gf = compose_monotone(g, f)
                    for l in range(3):
                        for h in self.maps[(k, l)]:
                            self.assertEqual(
                                compose_monotone(h, gf),
                                compose_monotone(compose_monotone(h, g), f)
                            )
        print("✓ Category laws hold")

    def test_composition_mismatch(self):
        """Composing non-composable maps raises"""
        f = MonotoneMap(FinOrd(1), FinOrd(2), (0,))
        with self.assertRaises(CompositionError):
            compose_monotone(f, f)
        print("✓ Composition mismatch detected")

    def test_fiber(self):
        """Fibers are the contiguous preimages"""
        f = MonotoneMap(FinOrd(4), FinOrd(3), (0, 0, 2, 2))
        self.assertEqual(f.fiber(0), [0, 1])
        self.assertEqual(f.fiber(1), [])
        self.assertEqual(f.fiber(2), [2, 3])
        print("✓ Fibers computed")

    def test_join_bifunctorial(self):
        """(g o f) + (g' o f') = (g + g') o (f + f')"""
        for f, f2 in product(self.maps[(2, 2)], self.maps[(1, 2)]):
            for g, g2 in product(self.maps[(2, 1)], self.maps[(2, 3)]):
                lhs = join(compose_monotone(g, f), compose_monotone(g2, f2))
                rhs = compose_monotone(join(g, g2), join(f, f2))
                self.assertEqual(lhs, rhs)
        print("✓ Join is bifunctorial")

    def test_join_unit_and_associativity(self):
        """The empty order is a unit and join is associative"""
        empty = identity(FinOrd(0))
        for f in self.maps[(2, 3)]:
            self.assertEqual(join(empty, f), f)
            self.assertEqual(join(f, empty), f)
        a, b, c = self.maps[(1, 2)][0], self.maps[(2, 1)][0], self.maps[(2, 2)][1]
        self.assertEqual(join(join(a, b), c), join(a, join(b, c)))
        self.assertEqual(join_all([a, b, c]), join(a, join(b, c)))
        self.assertEqual(join(FinOrd(2), FinOrd(3)), FinOrd(5))
        print("✓ Join is a strict monoidal product")


class TestMarkedOrders(unittest.TestCase):
    """Test cases for marked orders, reversal and the interval functor"""

    @classmethod
    def setUpClass(cls):
        print("\n" + "="*60)
        print("TESTING: Marked Orders")
        print("="*60)

    def test_marks_preserved(self):
        """Marked maps must send marked elements to marked elements"""
        lo = MarkedOrd(3, {MIN})
        hi = MarkedOrd(3, {MAX})
        with self.assertRaises(InvalidObjectError):
            marked_map(lo, lo, (1, 1, 2))
        with self.assertRaises(InvalidObjectError):
            marked_map(hi, hi, (0, 1, 1))
        with self.assertRaises(InvalidObjectError):
            marked_map(lo, hi, (0, 1, 2))
        with self.assertRaises(InvalidObjectError):
            MarkedOrd(1, {MIN, MAX})
        print("✓ Mark violations rejected")

    def test_enumerate_marked(self):
        """MIN-preserving maps 3 -> 3 fix 0 and are otherwise free"""
        lo = MarkedOrd(3, {MIN})
        maps = enumerate_marked(lo, lo)
        self.assertEqual(len(maps), 6)
        self.assertTrue(all(f.values[0] == 0 for f in maps))
        both = MarkedOrd(3, {MIN, MAX})
        self.assertEqual(len(enumerate_marked(both, both)), 3)
        print(f"✓ {len(maps)} MIN-preserving maps")

    def test_marked_composition(self):
        x = MarkedOrd(3, {MAX})
        for f in enumerate_marked(x, x):
            self.assertEqual(compose_marked(marked_identity(x), f), f)
        print("✓ Marked identities are units")

    def test_reverse_involution_and_functoriality(self):
        """Reversal is an involution and covariant"""
        lo3, lo2 = MarkedOrd(3, {MIN}), MarkedOrd(2, {MIN})
        self.assertEqual(reverse(lo3), MarkedOrd(3, {MAX}))
        for f in enumerate_marked(lo3, lo2):
            self.assertEqual(reverse(reverse(f)), f)
            self.assertEqual(reverse(f).src, reverse(lo3))
            for g in enumerate_marked(lo2, lo3):
                self.assertEqual(reverse(compose_marked(g, f)), compose_marked(reverse(g), reverse(f)))
        print("✓ Reversal is a covariant involution")

    def test_delta_to_interval_objects(self):
        """[p] goes to a doubly marked order with p+2 elements"""
        x = delta_to_interval(FinOrd(3))
        self.assertEqual(x.size, 4)
        self.assertEqual(x.marks, frozenset({MIN, MAX}))
        with self.assertRaises(InvalidObjectError):
            delta_to_interval(FinOrd(0))
        print("✓ Interval objects correct")

    def test_delta_to_interval_contravariant(self):
        """Hom(-, [1]) turns composites around and keeps identities"""
        sizes = range(1, 4)
        for p, q in product(sizes, repeat=2):
            for phi in enumerate_monotone(FinOrd(p), FinOrd(q)):
                if p == q and phi.is_identity():
                    self.assertEqual(delta_to_interval_map(phi), marked_identity(delta_to_interval(FinOrd(p))))
                for r in sizes:
                    for psi in enumerate_monotone(FinOrd(q), FinOrd(r)):
                        lhs = delta_to_interval_map(compose_monotone(psi, phi))
                        rhs = compose_marked(delta_to_interval_map(phi), delta_to_interval_map(psi))
                        self.assertEqual(lhs, rhs)
        print("✓ Interval functor is contravariant")

    def test_marked_category_laws(self):
        """Associativity and unit laws for each marking, exhaustively up to size 4"""
        for marks in ({MIN}, {MAX}, {MIN, MAX}):
            objects = [MarkedOrd(n, marks) for n in range(1, 5) if len(marks) < 2 or n >= 2]
            homs = {(x, y): enumerate_marked(x, y) for x, y in product(objects, repeat=2)}
            composites = {}
            for x, y, z in product(objects, repeat=3):
                for f in homs[(x, y)]:
                    for g in homs[(y, z)]:
                        composites[(g, f)] = compose_marked(g, f)

            for x, y in product(objects, repeat=2):
                for f in homs[(x, y)]:
                    self.assertEqual(compose_marked(marked_identity(y), f), f)
                    self.assertEqual(compose_marked(f, marked_identity(x)), f)

            checked = 0
            for w, x, y, z in product(objects, repeat=4):
                for f in homs[(w, x)]:
                    for g in homs[(x, y)]:
                        gf = composites[(g, f)]
                        for h in homs[(y, z)]:
                            self.assertEqual(composites[(h, gf)], composites[(composites[(h, g)], f)])
                            checked += 1
            print(f"✓ Marks {sorted(m.value for m in marks)}: {checked} associativity triples")

    def test_delta_to_interval_bijective_on_homs(self):
        """Hom([p],[q]) and the marked Hom between intervals match one to one"""
        sizes = range(1, 5)
        for p, q in product(sizes, repeat=2):
            with self.subTest(p=p, q=q):
                maps = enumerate_monotone(FinOrd(p), FinOrd(q))
                images = [delta_to_interval_map(phi) for phi in maps]
                marked = enumerate_marked(delta_to_interval(FinOrd(q)), delta_to_interval(FinOrd(p)))
                self.assertEqual(len(maps), len(marked))
                self.assertEqual(len(set(images)), len(images))
                self.assertEqual(set(images), set(marked))
        print("✓ Interval functor is fully faithful up to size 4")


if __name__ == "__main__":
    unittest.main(verbosity=2)
