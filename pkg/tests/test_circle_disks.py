"""
Unit Tests for Circle Configurations
Tests arc conventions, elementary moves, rotations, monodromy and the
comparison with the paracyclic category.
"""

import unittest
import sys
from fractions import Fraction
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.circle_disks import (
    MONODROMY_SIGN,
    CircleConfig,
    CircleMorphism,
    act_rotation,
    act_rotation_morphism,
    arc_containing,
    arc_end,
    arc_left_endpoint,
    arc_preimage,
    arc_start,
    coarsen,
    compose_all,
    compose_moves,
    default_grid,
    elementary_moves,
    enumerate_composites,
    follow_lift,
    from_para,
    generation_check,
    geometric_para,
    identity_morphism,
    insert_point,
    is_rigid_path,
    merge_points,
    monodromy,
    move_rotation,
    point_map,
    realize_para_maps,
    refine,
    rotation_morphism,
    to_para,
    to_para_map,
)
from src.paracyclic import ParaObj, identity, is_bijective, z_action
from src.utils import CompositionError, InvalidObjectError

F = Fraction


class TestConfigurations(unittest.TestCase):
    """Test cases for CircleConfig and arc bookkeeping"""

    @classmethod
    def setUpClass(cls):
        print("\n" + "="*60)
        print("TESTING: Circle Configurations")
        print("="*60)
        cls.with_zero = CircleConfig((F(0), F(1, 2)))
        cls.without_zero = CircleConfig((F(1, 4), F(3, 4)))

    def test_validation(self):
        with self.assertRaises(InvalidObjectError):
            CircleConfig(())
        with self.assertRaises(InvalidObjectError):
            CircleConfig((F(1, 2), F(1, 4)))
        with self.assertRaises(InvalidObjectError):
            CircleConfig((F(1),))
        print("✓ Invalid configurations rejected")

    def test_round_trip(self):
        """to_para o from_para is the identity on objects"""
        for n in range(1, 9):
            config = from_para(ParaObj(n))
            self.assertEqual(to_para(config), ParaObj(n))
            self.assertEqual(config.points[1 % n], F(1 % n, n) if n > 1 else F(0))
        print("✓ Round trip on 1..8 orbits")

    def test_base_arc(self):
        """Arc 0 starts at 0 when 0 is a point, and contains 0 otherwise"""
        self.assertEqual(arc_left_endpoint(self.with_zero, 0), F(0))
        self.assertEqual(arc_left_endpoint(self.with_zero, 3), F(3, 2))
        self.assertEqual(arc_left_endpoint(self.without_zero, 0), F(-1, 4))
        self.assertEqual(arc_containing(self.without_zero, F(0)), 0)
        self.assertEqual(arc_containing(self.without_zero, F(1, 2)), 1)
        self.assertEqual(arc_containing(self.without_zero, F(-1, 2)), -1)
        print("✓ Base arc conventions hold")

    def test_arc_endpoints(self):
        self.assertEqual((arc_start(self.with_zero, 0), arc_end(self.with_zero, 0)), (0, 1))
        self.assertEqual((arc_start(self.without_zero, 0), arc_end(self.without_zero, 0)), (1, 0))
        self.assertEqual((arc_start(self.without_zero, 1), arc_end(self.without_zero, 1)), (0, 1))
        print("✓ Arc endpoints correct")


class TestMoves(unittest.TestCase):
    """Test cases for merges, insertions, rotations and their composites"""

    @classmethod
    def setUpClass(cls):
        print("\n" + "="*60)
        print("TESTING: Elementary Moves")
        print("="*60)
        cls.c = CircleConfig((F(0), F(1, 2)))
        cls.square = from_para(ParaObj(4))

    def test_merge(self):
        m = merge_points(self.c, 0)
        self.assertEqual(m.dst, CircleConfig((F(0),)))
        self.assertEqual(m.para_map.values, (0, 0))
        m = merge_points(self.c, 1)
        self.assertEqual(m.dst, CircleConfig((F(1, 2),)))
        self.assertEqual(m.para_map.values, (0, 1))
        with self.assertRaises(InvalidObjectError):
            merge_points(CircleConfig((F(0),)), 0)
        print("✓ Merges delete the end point of the arc")

    def test_insert(self):
        """The new arc has empty preimage"""
        m = insert_point(CircleConfig((F(0),)), F(1, 2))
        self.assertEqual(m.dst, self.c)
        self.assertEqual(m.para_map.values, (0,))
        self.assertEqual(arc_preimage(m, 0), [0])
        self.assertEqual(arc_preimage(m, 1), [])
        with self.assertRaises(InvalidObjectError):
            insert_point(self.c, F(1, 2))
        print("✓ Insertions split arcs")

    def test_coarsen_and_refine(self):
        m = coarsen(self.square, [0, 2])
        self.assertEqual(m.dst, self.c)
        self.assertEqual(m.para_map.values, (0, 0, 1, 1))
        r = refine(self.c, [F(1, 4), F(3, 4)])
        self.assertEqual(r.dst, self.square)
        self.assertEqual(r.para_map.values, (0, 2))
        print("✓ Direct coarsening and refinement")

    def test_chains_match_geometry(self):
        """Insert-then-merge, merge-only and insert-only chains agree with the direct map"""
        ins = insert_point(self.c, F(1, 4))
        merge = merge_points(ins.dst, 1)
        chain = compose_all([ins, merge])
        self.assertEqual(chain.dst, CircleConfig((F(0), F(1, 4))))
        self.assertEqual(chain.para_map, geometric_para(self.c, chain.dst))

        m1 = merge_points(self.square, 0)
        m2 = merge_points(m1.dst, 0)
        merged = compose_moves(m2, m1)
        self.assertEqual(merged.para_map, geometric_para(self.square, merged.dst))

        i1 = insert_point(CircleConfig((F(0),)), F(1, 2))
        i2 = insert_point(i1.dst, F(1, 4))
        inserted = compose_moves(i2, i1)
        self.assertEqual(inserted.para_map, geometric_para(i1.src, inserted.dst))
        print("✓ Move chains agree with geometric maps")

    def test_composition_mismatch(self):
        with self.assertRaises(CompositionError):
            compose_moves(merge_points(self.c, 0), merge_points(self.c, 0))
        with self.assertRaises(InvalidObjectError):
            CircleMorphism(self.c, self.c, identity(ParaObj(1)))
        print("✓ Mismatched moves rejected")

    def test_rotation(self):
        """Rotations are isomorphisms and a full turn is the Z-action"""
        quarter = rotation_morphism(self.c, F(1, 4))
        self.assertEqual(quarter.dst, CircleConfig((F(1, 4), F(3, 4))))
        self.assertEqual(quarter.para_map.values, (1, 2))
        self.assertTrue(is_bijective(quarter.para_map))
        self.assertEqual(act_rotation(self.c, F(5, 4)), quarter.dst)

        full = rotation_morphism(self.c, F(1))
        self.assertEqual(full.para_map, z_action(1, identity(ParaObj(2))))
        steps = compose_all([rotation_morphism(act_rotation(self.c, F(k, 4)), F(1, 4)) for k in range(4)])
        self.assertEqual(steps.para_map, full.para_map)
        print("✓ Rotations track lifts")

    def test_monodromy(self):
        """A full turn after a morphism acts as z_action(+-1)"""
        for m in (identity_morphism(self.c), merge_points(self.square, 2), insert_point(self.c, F(3, 4))):
            for turns in (1, -1, 2):
                self.assertEqual(
                    monodromy(m, turns).para_map,
                    z_action(turns * MONODROMY_SIGN, m.para_map)
                )
        print(f"✓ Monodromy sign {MONODROMY_SIGN:+d}")

    def test_act_rotation_morphism(self):
        """Conjugating by a rotation keeps the shape of a merge"""
        m = merge_points(self.c, 0)
        rotated = act_rotation_morphism(m, F(1, 8))
        self.assertEqual(rotated.src, act_rotation(self.c, F(1, 8)))
        self.assertEqual(rotated.dst, act_rotation(m.dst, F(1, 8)))
        self.assertEqual(act_rotation_morphism(m, F(0)), m)
        print("✓ Rotation acts on morphisms")

    def test_point_map_contravariant(self):
        """Point maps compose in the opposite order, also without a point at 0"""
        c = CircleConfig((F(1, 8), F(3, 8), F(5, 8)))
        chains = [
            [rotation_morphism(c, F(1, 4))],
            [merge_points(c, 2), rotation_morphism(CircleConfig((F(1, 8), F(3, 8))), F(-1, 8))],
        ]
        for chain in chains:
            move = compose_all(chain)
            expected = list(range(move.dst.size))
            for step in reversed(chain):
                expected = [point_map(step)[i] for i in expected]
            self.assertEqual(point_map(move), expected)

        keep = coarsen(from_para(ParaObj(4)), [1, 3])
        self.assertEqual(point_map(keep), [1, 3])
        print("✓ Point maps are contravariant")

    def test_functoriality_over_move_composites(self):
        """Every composite of up to three moves agrees with the geometry of its moves"""
        rigid = 0
        for names, steps, composite in enumerate_composites(self.c, 4, 3, 3):
            with self.subTest(path=names):
                f = to_para_map(composite)
                for l in range(-2, 4):
                    self.assertEqual(f(l), follow_lift(names, steps, l))
                if is_rigid_path(names):
                    theta = sum((move_rotation(n) for n in names), F(0))
                    self.assertEqual(f, geometric_para(composite.src, composite.dst, theta))
                    rigid += 1
        self.assertGreater(rigid, 0)
        print(f"✓ Functoriality over all 3-move composites ({rigid} rigid)")

    def test_merge_then_insert_is_not_rigid(self):
        names = ["merge:0", "insert:1/2"]
        steps = [merge_points(self.c, 0)]
        steps.append(insert_point(steps[0].dst, F(1, 2)))
        composite = compose_all(steps)
        self.assertFalse(is_rigid_path(names))
        self.assertTrue(is_rigid_path(["insert:1/4", "rotate:1/4", "merge:1"]))
        self.assertEqual(composite.dst, self.c)
        self.assertEqual(composite.para_map.values, (0, 0))
        self.assertNotEqual(composite.para_map, geometric_para(self.c, self.c))
        self.assertEqual([follow_lift(names, steps, l) for l in range(2)], [0, 0])
        print("✓ A merge followed by an insertion leaves the rigid picture")

    def test_enumerate_composites(self):
        first = list(enumerate_composites(self.c, 4, 3, 1))
        self.assertEqual(len(first), len(elementary_moves(self.c, 4, 3)))
        self.assertEqual(move_rotation("rotate:-1/4"), F(-1, 4))
        self.assertEqual(move_rotation("merge:1"), 0)
        for names, steps, composite in enumerate_composites(self.c, 4, 3, 2):
            self.assertEqual(len(names), len(steps))
            self.assertEqual(composite, compose_all(steps))
        print(f"✓ {len(first)} one-move composites")

    def test_elementary_moves(self):
        names = [name for name, _ in elementary_moves(self.c, 4, 3)]
        self.assertIn("merge:0", names)
        self.assertIn("insert:1/4", names)
        self.assertIn("rotate:1/4", names)
        self.assertIn("rotate:-1/4", names)
        self.assertNotIn("insert:1/2", names)
        full = [name for name, _ in elementary_moves(self.c, 4, 2)]
        self.assertFalse(any(n.startswith("insert") for n in full))
        print(f"✓ {len(names)} elementary moves")


class TestGeneration(unittest.TestCase):
    """Test cases for the generation search"""

    @classmethod
    def setUpClass(cls):
        print("\n" + "="*60)
        print("TESTING: Generation by Moves")
        print("="*60)

    def test_identity_realized_without_moves(self):
        realized = realize_para_maps(1, 1, 1)
        self.assertEqual(realized[identity(ParaObj(1))], [])
        print(f"✓ {len(realized)} maps realized on one orbit")

    def test_translations_generated(self):
        self.assertEqual(generation_check(1, 1, 1), [])
        print("✓ Every endomorphism of one orbit is a composite of moves")

    def test_small_hom_sets_generated(self):
        """Moves generate every map between 1..3 orbits with offset at most 1"""
        for m in range(1, 4):
            for n in range(1, 4):
                with self.subTest(src=m, dst=n):
                    self.assertEqual(generation_check(m, n, 1), [])
        print("✓ Moves generate all hom-sets up to three orbits")

    def test_default_grid(self):
        self.assertEqual(default_grid(1, 1), 2)
        self.assertEqual(default_grid(2, 2), 4)
        self.assertEqual(default_grid(2, 3), 6)
        self.assertEqual(default_grid(3, 3), 6)
        self.assertEqual(default_grid(1, 3), 6)
        print("✓ Default lattices")


if __name__ == "__main__":
    unittest.main(verbosity=2)
