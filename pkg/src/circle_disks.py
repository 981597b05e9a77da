"""
Circle Disks Module
Disk-refinements of the circle: finite configurations of rational points
on S^1 = [0, 1), the morphisms between them as paracyclic maps on arc lifts,
and the elementary moves (merge, insert, rotate).

Arc conventions:
- Arcs run counterclockwise (increasing angle).
- Arc 0 is the base arc: the arc starting at 0 if 0 is a point, otherwise
  the arc containing angle 0. Arc-lift l has left endpoint a(l) in R with
  a(l + r) = a(l) + 1.
- A geometric map sends a source arc to the target arc containing its left
  endpoint (after rotating by theta).
"""

import logging
from bisect import bisect_right
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from src.paracyclic import (
    ParaMap,
    ParaObj,
    compose,
    enumerate_maps,
    identity,
    inverse,
    poincare_dual,
    z_action,
)
from src.utils import CompositionError, InvalidObjectError

logger = logging.getLogger(__name__)

# A positive full turn acts on morphisms as z_action(MONODROMY_SIGN, -)
MONODROMY_SIGN = 1


@dataclass(frozen=True)
class CircleConfig:
    """Nonempty strictly increasing rational points in [0, 1)."""

    points: Tuple[Fraction, ...]

    def __post_init__(self):
        points = tuple(Fraction(p) for p in self.points)
        object.__setattr__(self, "points", points)

        if not points:
            raise InvalidObjectError("A circle configuration needs at least one point")
        for p in points:
            if not 0 <= p < 1:
                raise InvalidObjectError(f"Point {p} outside [0, 1)")
        for a, b in zip(points, points[1:]):
            if a >= b:
                raise InvalidObjectError(f"Points not strictly increasing: {points}")

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def has_zero(self) -> bool:
        return self.points[0] == 0

    def to_strings(self) -> List[str]:
        return [str(p) for p in self.points]


@dataclass(frozen=True)
class CircleMorphism:
    """A morphism of configurations, given by its paracyclic map on arcs."""

    src: CircleConfig
    dst: CircleConfig
    para_map: ParaMap

    def __post_init__(self):
        if self.para_map.src.orbits != self.src.size or self.para_map.dst.orbits != self.dst.size:
            raise InvalidObjectError(
                f"Para map {self.para_map.src.orbits}->{self.para_map.dst.orbits} "
                f"does not match {self.src.size}->{self.dst.size} arcs"
            )


def arc_left_endpoint(c: CircleConfig, lift: int) -> Fraction:
    """Left endpoint in R of arc-lift `lift`."""
    q, j = divmod(lift, c.size)
    if c.has_zero:
        return c.points[j] + q
    if j == 0:
        return c.points[-1] - 1 + q
    return c.points[j - 1] + q


def arc_containing(c: CircleConfig, a: Fraction) -> int:
    """Arc-lift whose half-open interval [a(l), a(l+1)) contains a."""
    whole = floor(a)
    frac = a - whole
    offset = 1 if c.has_zero else 0
    return c.size * whole + bisect_right(c.points, frac) - offset


def arc_start(c: CircleConfig, arc: int) -> int:
    """Index of the point where arc `arc` (taken mod r) starts."""
    j = arc % c.size
    if c.has_zero:
        return j
    return (j - 1) % c.size


def arc_end(c: CircleConfig, arc: int) -> int:
    """Index of the point where arc `arc` (taken mod r) ends."""
    return (arc_start(c, arc) + 1) % c.size


def point_of_lift(c: CircleConfig, lift: int) -> int:
    """Point index of point-lift `lift`, the start of arc-lift `lift`."""
    return arc_start(c, lift)


def lift_of_point(c: CircleConfig, index: int) -> int:
    """The point-lift in [0, r] whose point is `index`."""
    return index if c.has_zero else index + 1


def geometric_para(src: CircleConfig, dst: CircleConfig, theta: Fraction = Fraction(0)) -> ParaMap:
    """
    Paracyclic map sending each source arc to the target arc containing its
    left endpoint rotated by theta.
    """
    values = [arc_containing(dst, arc_left_endpoint(src, l) + theta) for l in range(src.size)]
    return ParaMap(ParaObj(src.size), ParaObj(dst.size), tuple(values))


def to_para(c: CircleConfig) -> ParaObj:
    return ParaObj(c.size)


def to_para_map(m: CircleMorphism) -> ParaMap:
    return m.para_map


def from_para(n: ParaObj) -> CircleConfig:
    """The evenly spaced configuration {0, 1/n, ..., (n-1)/n}."""
    return CircleConfig(tuple(Fraction(i, n.orbits) for i in range(n.orbits)))


def identity_morphism(c: CircleConfig) -> CircleMorphism:
    return CircleMorphism(c, c, identity(to_para(c)))


def compose_moves(m2: CircleMorphism, m1: CircleMorphism) -> CircleMorphism:
    """
    Compose m2 after m1.
    """
    if m1.dst != m2.src:
        raise CompositionError("Cannot compose circle morphisms: configurations differ")
    return CircleMorphism(m1.src, m2.dst, compose(m2.para_map, m1.para_map))


def compose_all(moves: Sequence[CircleMorphism]) -> CircleMorphism:
    """Compose a nonempty sequence of moves, first move first."""
    result = moves[0]
    for move in moves[1:]:
        result = compose_moves(move, result)
    return result


def merge_points(c: CircleConfig, arc_index: int) -> CircleMorphism:
    """
    Delete the end point of arc `arc_index`, fusing it with the next arc.

    Args:
        c (CircleConfig): Configuration with at least two points
        arc_index (int): Arc whose end point is removed

    Returns:
        CircleMorphism: Surjective on arcs
    """
    if c.size < 2:
        raise InvalidObjectError("Cannot merge the only point of a configuration")
    if not 0 <= arc_index < c.size:
        raise InvalidObjectError(f"Arc index {arc_index} outside [0, {c.size})")

    removed = arc_end(c, arc_index)
    dst = CircleConfig(tuple(p for i, p in enumerate(c.points) if i != removed))
    return CircleMorphism(c, dst, geometric_para(c, dst))


def insert_point(c: CircleConfig, angle: Fraction) -> CircleMorphism:
    """
    Add a point at `angle`. The old arc maps to its left piece, so the new
    arc starting at `angle` has empty preimage.
    """
    angle = Fraction(angle)
    if not 0 <= angle < 1:
        raise InvalidObjectError(f"Angle {angle} outside [0, 1)")
    if angle in c.points:
        raise InvalidObjectError(f"Angle {angle} is already a point")

    dst = CircleConfig(tuple(sorted(c.points + (angle,))))
    return CircleMorphism(c, dst, geometric_para(c, dst))


def coarsen(c: CircleConfig, keep: Iterable[int]) -> CircleMorphism:
    """Delete every point whose index is not in `keep` in one move."""
    keep = sorted(set(keep))
    if not keep:
        raise InvalidObjectError("Must keep at least one point")
    dst = CircleConfig(tuple(c.points[i] for i in keep))
    return CircleMorphism(c, dst, geometric_para(c, dst))


def refine(c: CircleConfig, angles: Iterable[Fraction]) -> CircleMorphism:
    """Insert several new points in one move."""
    angles = [Fraction(a) for a in angles]
    for a in angles:
        if a in c.points:
            raise InvalidObjectError(f"Angle {a} is already a point")
    dst = CircleConfig(tuple(sorted(set(c.points) | set(angles))))
    return CircleMorphism(c, dst, geometric_para(c, dst))


def act_rotation(c: CircleConfig, theta: Fraction) -> CircleConfig:
    """Rotate every point by theta (mod 1)."""
    theta = Fraction(theta)
    return CircleConfig(tuple(sorted((p + theta) % 1 for p in c.points)))


def rotation_morphism(c: CircleConfig, theta: Fraction) -> CircleMorphism:
    """
    The rotation by theta as an isomorphism c -> act_rotation(c, theta),
    tracking lifts, so theta = 1 gives z_action(1, id).
    """
    theta = Fraction(theta)
    dst = act_rotation(c, theta)
    return CircleMorphism(c, dst, geometric_para(c, dst, theta))


def act_rotation_morphism(m: CircleMorphism, theta: Fraction) -> CircleMorphism:
    """Conjugate a morphism by the rotation by theta."""
    rho_src = rotation_morphism(m.src, theta)
    rho_dst = rotation_morphism(m.dst, theta)
    para = compose(rho_dst.para_map, compose(m.para_map, inverse(rho_src.para_map)))
    return CircleMorphism(rho_src.dst, rho_dst.dst, para)


def monodromy(m: CircleMorphism, turns: int = 1) -> CircleMorphism:
    """
    Follow m by `turns` full rotations of the target, tracked on lifts.
    Equals z_action(turns * MONODROMY_SIGN, m).
    """
    loop = rotation_morphism(m.dst, Fraction(turns))
    return compose_moves(loop, m)


def point_map(m: CircleMorphism) -> List[int]:
    """
    Map target points to source points, indexed by target point: point-lift
    y goes to source point-lift f^v(y - 1) + 1, where f^v is the Poincare
    dual of the arc map.
    """
    dual = poincare_dual(m.para_map)
    lifts = [lift_of_point(m.dst, i) for i in range(m.dst.size)]
    return [point_of_lift(m.src, dual(y - 1) + 1) for y in lifts]


def point_lift_map(m: CircleMorphism, y: int) -> int:
    return poincare_dual(m.para_map)(y - 1) + 1


def arc_preimage(m: CircleMorphism, k: int) -> List[int]:
    """Source arc-lifts mapping to target arc-lift k, in increasing order."""
    dual = poincare_dual(m.para_map)
    return list(range(dual(k - 1) + 1, dual(k) + 1))


def elementary_moves(c: CircleConfig, grid: int, max_points: int) -> List[Tuple[str, CircleMorphism]]:
    """
    All elementary moves out of c on the 1/grid lattice: merges, insertions
    of free lattice angles, and rotations by +-1/grid.
    """
    moves = []
    if c.size >= 2:
        for j in range(c.size):
            moves.append((f"merge:{j}", merge_points(c, j)))
    if c.size < max_points:
        for i in range(grid):
            angle = Fraction(i, grid)
            if angle not in c.points:
                moves.append((f"insert:{angle}", insert_point(c, angle)))
    step = Fraction(1, grid)
    moves.append((f"rotate:{step}", rotation_morphism(c, step)))
    moves.append((f"rotate:{-step}", rotation_morphism(c, -step)))
    return moves


def move_rotation(name: str) -> Fraction:
    """Rotation carried by an elementary move, 0 unless it is a rotate move."""
    if name.startswith("rotate:"):
        return Fraction(name.split(":", 1)[1])
    return Fraction(0)


def enumerate_composites(
    start: CircleConfig,
    grid: int,
    max_points: int,
    max_moves: int
) -> Iterator[Tuple[List[str], List[CircleMorphism], CircleMorphism]]:
    """
    Every composite of 1..max_moves elementary moves out of start, with no
    deduplication.

    Yields:
        Tuple: (move names, the moves in order, their composite)
    """
    frontier = [([], [], identity_morphism(start))]
    for _ in range(max_moves):
        next_frontier = []
        for names, steps, current in frontier:
            for name, move in elementary_moves(current.dst, grid, max_points):
                item = (names + [name], steps + [move], compose_moves(move, current))
                yield item
                next_frontier.append(item)
        frontier = next_frontier


def follow_lift(names: Sequence[str], steps: Sequence[CircleMorphism], lift: int) -> int:
    """
    Image of a source arc-lift under a chain of moves, computed by carrying
    its left endpoint through each move geometrically.
    """
    for name, step in zip(names, steps):
        lift = arc_containing(step.dst, arc_left_endpoint(step.src, lift) + move_rotation(name))
    return lift


def is_rigid_path(names: Sequence[str]) -> bool:
    """
    True when no insertion follows a merge. Along such a path every arc's
    left endpoint moves rigidly with the rotation, so the composite is
    geometric_para(src, dst, total rotation).
    """
    merged = False
    for name in names:
        if name.startswith("merge:"):
            merged = True
        elif name.startswith("insert:") and merged:
            return False
    return True


def default_grid(src_orbits: int, dst_orbits: int) -> int:
    """
    Smallest lattice containing both evenly spaced configurations with at
    least two slots per point of the larger one.
    """
    base = src_orbits * dst_orbits // gcd(src_orbits, dst_orbits)
    grid = base
    while grid < 2 * max(src_orbits, dst_orbits):
        grid += base
    return grid


def realize_para_maps(
    src_orbits: int,
    dst_orbits: int,
    offset_bound: int,
    grid: Optional[int] = None,
    max_points: int = 4,
    search_bound: Optional[int] = None
) -> Dict[ParaMap, List[str]]:
    """
    Breadth-first search over composites of elementary moves starting at
    from_para(src_orbits), recording which maps into from_para(dst_orbits)
    are reached and by which move sequence.

    Args:
        src_orbits (int): Source object
        dst_orbits (int): Target object
        offset_bound (int): Only targets with |values[0]| <= offset_bound are kept
        grid (int): Points live on the 1/grid lattice (default: default_grid)
        max_points (int): Largest intermediate configuration
        search_bound (int): Bound on |values[0]| of intermediate maps

    Returns:
        Dict[ParaMap, List[str]]: Reached maps with a witnessing move sequence
    """
    if grid is None:
        grid = default_grid(src_orbits, dst_orbits)
    if search_bound is None:
        search_bound = offset_bound + 2

    start = from_para(ParaObj(src_orbits))
    target = from_para(ParaObj(dst_orbits))
    for p in start.points + target.points:
        if (p * grid).denominator != 1:
            raise InvalidObjectError(f"Grid 1/{grid} does not contain {p}")

    initial = identity_morphism(start)
    seen = {(initial.dst, initial.para_map)}
    queue = deque([(initial, [])])
    realized: Dict[ParaMap, List[str]] = {}

    while queue:
        current, path = queue.popleft()
        if current.dst == target and abs(current.para_map.values[0]) <= offset_bound:
            realized.setdefault(current.para_map, path)

        for name, move in elementary_moves(current.dst, grid, max_points):
            nxt = compose_moves(move, current)
            if abs(nxt.para_map.values[0]) > search_bound:
                continue
            key = (nxt.dst, nxt.para_map)
            if key in seen:
                continue
            seen.add(key)
            queue.append((nxt, path + [name]))

    logger.info(
        "Generation search %d -> %d: %d states, %d maps realized",
        src_orbits, dst_orbits, len(seen), len(realized)
    )
    return realized


def generation_check(src_orbits: int, dst_orbits: int, offset_bound: int = 1) -> List[ParaMap]:
    """
    Return the enumerated maps that no composite of moves realizes
    (empty when the moves generate the hom-set).
    """
    realized = realize_para_maps(src_orbits, dst_orbits, offset_bound)
    expected = enumerate_maps(ParaObj(src_orbits), ParaObj(dst_orbits), offset_bound)
    return [f for f in expected if f not in realized]


# Example usage and testing
if __name__ == "__main__":
    c = CircleConfig((Fraction(0), Fraction(1, 2)))
    merge = merge_points(c, 0)
    print(f"merge [0, 1/2] arc 0 -> {merge.dst.to_strings()} via {merge.para_map.values}")

    ins = insert_point(CircleConfig((Fraction(0),)), Fraction(1, 2))
    print(f"insert 1/2 -> {ins.dst.to_strings()} via {ins.para_map.values}")

    loop = monodromy(identity_morphism(c))
    print(f"monodromy of id = {loop.para_map.values} == {z_action(MONODROMY_SIGN, identity(ParaObj(2))).values}")
    print(f"missing generators: {generation_check(2, 2)}")
