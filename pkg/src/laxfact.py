"""
Lax Factorization Module
Circle configurations labeled in the walking adjunction: points carry
objects - or +, arcs carry 1-cells between the labels of their endpoints.
A morphism is a move of configurations together with, for each target
arc, a 2-cell from the composite of the source labels over it to the
target label.

Composites over an arc preimage put later arcs on the left; an empty
preimage composes to the identity 1-cell at the point the arc starts from.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.adjunction2cat import (
    MINUS,
    PLUS,
    AdjObj,
    OneCell,
    TwoCell,
    compose_one_cells,
    enumerate_two_cells,
    hcompose,
    identity_one_cell,
    identity_two_cell,
    swap_one_cell,
    vcompose,
)
from src.circle_disks import (
    CircleConfig,
    CircleMorphism,
    arc_end,
    arc_preimage,
    arc_start,
    coarsen,
    compose_moves,
    identity_morphism,
    insert_point,
    point_lift_map,
    point_map,
    point_of_lift,
    rotation_morphism,
)
from src.paracyclic import ParaMap, enumerate_maps, poincare_dual
from src.utils import CompositionError, InvalidObjectError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LaxObject:
    """Point labels in {-, +} and one 1-cell per arc, start point to end point."""

    config: CircleConfig
    point_labels: Tuple[AdjObj, ...]
    arc_labels: Tuple[OneCell, ...]

    def __post_init__(self):
        object.__setattr__(self, "point_labels", tuple(AdjObj(p) for p in self.point_labels))
        object.__setattr__(self, "arc_labels", tuple(self.arc_labels))

        r = self.config.size
        if len(self.point_labels) != r or len(self.arc_labels) != r:
            raise InvalidObjectError(
                f"{r} points need {r} point labels and {r} arc labels"
            )
        for j, cell in enumerate(self.arc_labels):
            start = self.point_labels[arc_start(self.config, j)]
            end = self.point_labels[arc_end(self.config, j)]
            if (cell.src, cell.dst) != (start, end):
                raise InvalidObjectError(
                    f"Arc {j} runs {start.value} -> {end.value} but is labeled {cell.label()}"
                )

    def to_dict(self) -> dict:
        return {
            "points": self.config.to_strings(),
            "point_labels": [p.value for p in self.point_labels],
            "arc_labels": [cell.label() for cell in self.arc_labels],
        }


def arc_composite(o: LaxObject, move: CircleMorphism, k: int) -> OneCell:
    """Composite of the labels of o over the preimage of target arc k."""
    preimage = arc_preimage(move, k)
    if not preimage:
        start = point_of_lift(o.config, point_lift_map(move, k))
        return identity_one_cell(o.point_labels[start])
    r = o.config.size
    cell = o.arc_labels[preimage[0] % r]
    for j in preimage[1:]:
        cell = compose_one_cells(o.arc_labels[j % r], cell)
    return cell


def transported_point_labels(o: LaxObject, move: CircleMorphism) -> Tuple[AdjObj, ...]:
    return tuple(
        o.point_labels[source]
        for source in point_map(move)
    )


def transported_object(o: LaxObject, move: CircleMorphism) -> LaxObject:
    """The target of the coCartesian lift of move starting at o."""
    labels = transported_point_labels(o, move)
    cells = tuple(arc_composite(o, move, k) for k in range(move.dst.size))
    return LaxObject(move.dst, labels, cells)


@dataclass(frozen=True)
class LaxMorphism:
    src: LaxObject
    dst: LaxObject
    move: CircleMorphism
    gamma: Tuple[TwoCell, ...]

    def __post_init__(self):
        object.__setattr__(self, "gamma", tuple(self.gamma))

        if self.move.src != self.src.config or self.move.dst != self.dst.config:
            raise CompositionError("Move does not connect the configurations of its objects")
        if transported_point_labels(self.src, self.move) != self.dst.point_labels:
            raise InvalidObjectError("Target point labels differ from the transported source labels")
        if len(self.gamma) != self.dst.config.size:
            raise InvalidObjectError(
                f"Need one 2-cell per target arc: {self.dst.config.size}, got {len(self.gamma)}"
            )
        for k, cell in enumerate(self.gamma):
            expected = arc_composite(self.src, self.move, k)
            if cell.src != expected or cell.dst != self.dst.arc_labels[k]:
                raise InvalidObjectError(
                    f"2-cell on arc {k} runs {cell.src.label()} => {cell.dst.label()}, "
                    f"expected {expected.label()} => {self.dst.arc_labels[k].label()}"
                )


def identity_lax(o: LaxObject) -> LaxMorphism:
    return LaxMorphism(o, o, identity_morphism(o.config), tuple(identity_two_cell(c) for c in o.arc_labels))


def compose_lax(m2: LaxMorphism, m1: LaxMorphism) -> LaxMorphism:
    """
    m2 after m1: for each target arc k, the 2-cells of m1 over the preimage
    of k are composed horizontally, then followed by the 2-cell of m2 at k.
    """
    if m1.dst != m2.src:
        raise CompositionError("Cannot compose lax morphisms: objects differ")

    move = compose_moves(m2.move, m1.move)
    r = m1.dst.config.size
    gamma = []
    for k in range(m2.dst.config.size):
        preimage = arc_preimage(m2.move, k)
        if preimage:
            bottom = m1.gamma[preimage[0] % r]
            for j in preimage[1:]:
                bottom = hcompose(m1.gamma[j % r], bottom)
        else:
            bottom = identity_two_cell(m2.gamma[k].src)
        gamma.append(vcompose(m2.gamma[k], bottom))
    return LaxMorphism(m1.src, m2.dst, move, tuple(gamma))


def is_cocartesian(m: LaxMorphism) -> bool:
    """Every 2-cell is invertible; in skeletal hom categories, an identity."""
    return all(cell.src == cell.dst and cell == identity_two_cell(cell.src) for cell in m.gamma)


@dataclass(frozen=True)
class Membership:
    in_plus_monad: bool
    in_minus_monad: bool
    in_unit_image: bool
    in_counit_image: bool
    in_A0: bool
    in_Aplus: bool
    in_Aminus: bool

    def to_dict(self) -> Dict[str, bool]:
        return dict(self.__dict__)


def classify(o: LaxObject) -> Membership:
    labels = set(o.point_labels)
    all_plus = labels == {PLUS}
    all_minus = labels == {MINUS}
    identity_arcs = all(cell.is_identity() for cell in o.arc_labels)
    return Membership(
        in_plus_monad=all_plus,
        in_minus_monad=all_minus,
        in_unit_image=all_minus and identity_arcs,
        in_counit_image=all_plus and identity_arcs,
        in_A0=labels == {MINUS, PLUS},
        in_Aplus=not all_minus,
        in_Aminus=not all_plus,
    )


def left_fibration_report(m: LaxMorphism) -> Dict[str, bool]:
    """
    Closure of the distinguished subcategories along m, keyed by the
    direction checked. The all-plus, all-minus and counit-image
    subcategories are closed forward (src in implies dst in); the unit
    image, where 2-cells point out of identities, is closed backward
    (dst in implies src in).
    """
    src, dst = classify(m.src), classify(m.dst)
    return {
        "plus_monad: src => dst": not src.in_plus_monad or dst.in_plus_monad,
        "minus_monad: src => dst": not src.in_minus_monad or dst.in_minus_monad,
        "counit_image: src => dst": not src.in_counit_image or dst.in_counit_image,
        "unit_image: dst => src": not dst.in_unit_image or src.in_unit_image,
    }


def left_fibration_check(m: LaxMorphism) -> bool:
    return all(left_fibration_report(m).values())


def swap_labels(o: LaxObject) -> LaxObject:
    """Exchange - with + on points and L with R on arcs."""
    return LaxObject(
        o.config,
        tuple(p.swapped() for p in o.point_labels),
        tuple(swap_one_cell(c) for c in o.arc_labels)
    )


# ------------------------------------------------------------------ generators

def coarsening_lift(o: LaxObject, keep: Sequence[int]) -> LaxMorphism:
    """coCartesian lift of deleting every point outside `keep`."""
    move = coarsen(o.config, keep)
    target = transported_object(o, move)
    return LaxMorphism(o, target, move, tuple(identity_two_cell(c) for c in target.arc_labels))


def insertion_lift(o: LaxObject, angle: Fraction) -> LaxMorphism:
    """
    coCartesian lift of inserting a point: it takes the label of the end
    of the arc it splits, and the new arc is an identity.
    """
    move = insert_point(o.config, angle)
    target = transported_object(o, move)
    return LaxMorphism(o, target, move, tuple(identity_two_cell(c) for c in target.arc_labels))


def rotation_lift(o: LaxObject, theta: Fraction) -> LaxMorphism:
    move = rotation_morphism(o.config, theta)
    target = transported_object(o, move)
    return LaxMorphism(o, target, move, tuple(identity_two_cell(c) for c in target.arc_labels))


def two_cell_morphism(o: LaxObject, arc: int, alpha: TwoCell) -> LaxMorphism:
    """Over the identity move, apply alpha to arc `arc` and identities elsewhere."""
    if alpha.src != o.arc_labels[arc]:
        raise CompositionError(f"2-cell does not start at the label of arc {arc}")
    cells = list(o.arc_labels)
    cells[arc] = alpha.dst
    target = LaxObject(o.config, o.point_labels, tuple(cells))
    gamma = [identity_two_cell(c) for c in o.arc_labels]
    gamma[arc] = alpha
    return LaxMorphism(o, target, identity_morphism(o.config), tuple(gamma))


# ------------------------------------------------------------------ reflections

def _reflection(o: LaxObject, sign: AdjObj) -> Tuple[LaxObject, LaxMorphism]:
    keep = [i for i, p in enumerate(o.point_labels) if p == sign]
    if not keep:
        raise InvalidObjectError(f"No point labeled {sign.value}: nothing to reflect onto")
    unit = coarsening_lift(o, keep)
    return unit.dst, unit


def plus_reflection(o: LaxObject) -> Tuple[LaxObject, LaxMorphism]:
    """
    Keep the +-labeled points, composing labels across the deleted - points.
    Returns the reflected object and the (coCartesian) unit o -> o+.
    """
    return _reflection(o, PLUS)


def minus_reflection(o: LaxObject) -> Tuple[LaxObject, LaxMorphism]:
    return _reflection(o, MINUS)


def factor_through_plus_reflection(m: LaxMorphism) -> LaxMorphism:
    """
    For m: o -> o' with o' all-plus, the morphism o+ -> o' whose composite
    with the unit o -> o+ is m. Its arc map is x -> f(c^v(x)) for the
    unit's arc map c, and it carries the 2-cells of m.
    """
    if not classify(m.dst).in_plus_monad:
        raise InvalidObjectError("Factorization needs an all-plus target")
    reflected, unit = plus_reflection(m.src)
    c_dual = poincare_dual(unit.move.para_map)
    f = m.move.para_map
    values = tuple(f(c_dual(x)) for x in range(reflected.config.size))
    para = ParaMap(unit.move.para_map.dst, f.dst, values)
    move = CircleMorphism(reflected.config, m.dst.config, para)
    return LaxMorphism(reflected, m.dst, move, m.gamma)


def count_factorizations(m: LaxMorphism, offset_bound: Optional[int] = None) -> int:
    """
    Count morphisms g: o+ -> o' with g o unit = m by enumerating every arc
    map (first value within offset_bound) and every choice of 2-cells.
    """
    reflected, unit = plus_reflection(m.src)
    if offset_bound is None:
        offset_bound = abs(factor_through_plus_reflection(m).move.para_map.values[0]) + 1

    count = 0
    for para in enumerate_maps(unit.move.para_map.dst, m.move.para_map.dst, offset_bound):
        move = CircleMorphism(reflected.config, m.dst.config, para)
        if transported_point_labels(reflected, move) != m.dst.point_labels:
            continue
        choices = []
        for k in range(m.dst.config.size):
            source = arc_composite(reflected, move, k)
            target = m.dst.arc_labels[k]
            if source.pattern != target.pattern:
                choices = None
                break
            choices.append(enumerate_two_cells(source, target))
        if choices is None:
            continue
        for gamma in product(*choices):
            candidate = LaxMorphism(reflected, m.dst, move, gamma)
            if compose_lax(candidate, unit) == m:
                count += 1
    return count


def reflect_plus_morphism(m: LaxMorphism) -> LaxMorphism:
    """The morphism o1+ -> o2+ induced by m: o1 -> o2 between objects with + points."""
    _, target_unit = plus_reflection(m.dst)
    return factor_through_plus_reflection(compose_lax(target_unit, m))


# ------------------------------------------------------------------ random samples

def random_lax_object(
    rng: np.random.Generator,
    max_points: int = 4,
    max_blocks: int = 1,
    grid: int = 8
) -> LaxObject:
    r = int(rng.integers(1, max_points + 1))
    angles = sorted(rng.choice(grid, size=r, replace=False).tolist())
    config = CircleConfig(tuple(Fraction(a, grid) for a in angles))
    labels = tuple(MINUS if rng.integers(2) == 0 else PLUS for _ in range(r))
    cells = []
    for j in range(r):
        src = labels[arc_start(config, j)]
        dst = labels[arc_end(config, j)]
        cells.append(OneCell(src, dst, int(rng.integers(0, max_blocks + 1))))
    return LaxObject(config, labels, tuple(cells))


def _random_generator(rng: np.random.Generator, o: LaxObject, max_blocks: int, grid: int) -> LaxMorphism:
    kind = int(rng.integers(4))
    r = o.config.size
    if kind == 0 and r > 1:
        size = int(rng.integers(1, r))
        keep = sorted(rng.choice(r, size=size, replace=False).tolist())
        return coarsening_lift(o, keep)
    if kind == 1:
        free = [a for a in range(grid) if Fraction(a, grid) not in o.config.points]
        if free:
            return insertion_lift(o, Fraction(int(rng.choice(free)), grid))
    if kind == 2:
        return rotation_lift(o, Fraction(int(rng.integers(-grid, grid + 1)), grid))

    arc = int(rng.integers(r))
    source = o.arc_labels[arc]
    options: List[TwoCell] = []
    for blocks in range(max_blocks + 1):
        options.extend(enumerate_two_cells(source, OneCell(source.src, source.dst, blocks)))
    return two_cell_morphism(o, arc, options[int(rng.integers(len(options)))]) if options else identity_lax(o)


def random_lax_morphism(
    rng: np.random.Generator,
    o: LaxObject,
    steps: int = 2,
    max_blocks: int = 1,
    grid: int = 8
) -> LaxMorphism:
    """A composite of `steps` random generators starting at o."""
    m = identity_lax(o)
    for _ in range(steps):
        m = compose_lax(_random_generator(rng, m.dst, max_blocks, grid), m)
    return m


# Example usage and testing
if __name__ == "__main__":
    config = CircleConfig((Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)))
    labels = (PLUS, MINUS, PLUS, MINUS)
    cells = tuple(
        OneCell(labels[arc_start(config, j)], labels[arc_end(config, j)], 0) for j in range(4)
    )
    o = LaxObject(config, labels, cells)
    reflected, unit = plus_reflection(o)
    print(f"classify: {classify(o).to_dict()}")
    print(f"plus reflection: {reflected.to_dict()} (unit coCartesian: {is_cocartesian(unit)})")

    rng = np.random.default_rng(0)
    m = random_lax_morphism(rng, o)
    print(f"random morphism passes left fibration check: {left_fibration_check(m)}")
