"""
Adjunction 2-Category Module
The walking adjunction as a strict 2-category. Objects are - and +, the
1-cells are alternating words in L: - -> + and R: + -> -, and the hom
categories are the ordered-set categories O, O^op, O- and O+.

A 2-cell w => w' is stored in the hom category of its endpoints:
- (- -> -): a monotone map of RL-blocks, k -> k'
- (+ -> +): a monotone map of LR-blocks in the opposite direction, k' -> k
- (- -> +): a MIN-marked map on orders of size k+1
- (+ -> -): a MAX-marked map on orders of size k+1

Composition goes through the positive gap map: the covariant monotone map
on the +-labelled regions of the word (written left to right, outermost
letter first), with + boundary regions preserved.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List, Tuple, Union

from src.hochschild import AlgebraSC, fiber_product_matrix, require_valid
from src.matcat import L, R, ExactMatrix
from src.ordsets import (
    MAX,
    MIN,
    FinOrd,
    MarkedMap,
    MarkedOrd,
    MonotoneMap,
    enumerate_monotone,
    marked_map,
)
from src.utils import CompositionError, InvalidObjectError

logger = logging.getLogger(__name__)


class AdjObj(str, Enum):
    MINUS = "-"
    PLUS = "+"

    @property
    def sign(self) -> str:
        return self.value

    def swapped(self) -> "AdjObj":
        return AdjObj.PLUS if self is AdjObj.MINUS else AdjObj.MINUS


MINUS = AdjObj.MINUS
PLUS = AdjObj.PLUS


@dataclass(frozen=True)
class OneCell:
    """
    The alternating word from src to dst with `blocks` RL- (or LR-) blocks:
    (- -> -) (RL)^k, (- -> +) L(RL)^k, (+ -> -) (RL)^k R, (+ -> +) (LR)^k.
    """

    src: AdjObj
    dst: AdjObj
    blocks: int

    def __post_init__(self):
        object.__setattr__(self, "src", AdjObj(self.src))
        object.__setattr__(self, "dst", AdjObj(self.dst))
        if not isinstance(self.blocks, int) or self.blocks < 0:
            raise InvalidObjectError(f"blocks must be a non-negative integer, got {self.blocks!r}")

    @property
    def pattern(self) -> Tuple[AdjObj, AdjObj]:
        return (self.src, self.dst)

    @property
    def word(self) -> Tuple[str, ...]:
        k = self.blocks
        if self.pattern == (MINUS, MINUS):
            return (R, L) * k
        if self.pattern == (MINUS, PLUS):
            return (L,) + (R, L) * k
        if self.pattern == (PLUS, MINUS):
            return (R, L) * k + (R,)
        return (L, R) * k

    @property
    def length(self) -> int:
        return 2 * self.blocks + (1 if self.src != self.dst else 0)

    @property
    def gap_count(self) -> int:
        """Number of +-labelled regions of the word, boundaries included."""
        return self.blocks + (1 if PLUS in self.pattern else 0)

    def is_identity(self) -> bool:
        return self.src == self.dst and self.blocks == 0

    def label(self) -> str:
        return "".join(self.word) or f"id{self.src.value}"


def identity_one_cell(x: AdjObj) -> OneCell:
    return OneCell(x, x, 0)


def compose_one_cells(g: OneCell, f: OneCell) -> OneCell:
    """g o f, whose word is the concatenation g.word + f.word."""
    if f.dst != g.src:
        raise CompositionError(f"Cannot compose {g.label()} after {f.label()}: {f.dst.value} != {g.src.value}")
    return OneCell(f.src, g.dst, (g.length + f.length) // 2)


def swap_one_cell(f: OneCell) -> OneCell:
    """Exchange - with + and L with R letterwise."""
    return OneCell(f.src.swapped(), f.dst.swapped(), f.blocks)


def enumerate_one_cells(src: AdjObj, dst: AdjObj, max_blocks: int) -> List[OneCell]:
    return [OneCell(src, dst, k) for k in range(max_blocks + 1)]


HomMap = Union[MonotoneMap, MarkedMap]


def _marked_order(cell: OneCell) -> MarkedOrd:
    marks = {MIN} if cell.pattern == (MINUS, PLUS) else {MAX}
    return MarkedOrd(cell.blocks + 1, frozenset(marks))


@dataclass(frozen=True)
class TwoCell:
    """A 2-cell src => dst, stored as a morphism of its hom category."""

    src: OneCell
    dst: OneCell
    map: HomMap

    def __post_init__(self):
        if self.src.pattern != self.dst.pattern:
            raise CompositionError(
                f"2-cell endpoints differ: {self.src.label()} vs {self.dst.label()}"
            )
        pattern = self.src.pattern
        k, k2 = self.src.blocks, self.dst.blocks

        if pattern in ((MINUS, MINUS), (PLUS, PLUS)):
            if not isinstance(self.map, MonotoneMap):
                raise InvalidObjectError("Endomorphism 2-cells are stored as monotone maps")
            expected = (k, k2) if pattern == (MINUS, MINUS) else (k2, k)
            if (self.map.src.size, self.map.dst.size) != expected:
                raise InvalidObjectError(
                    f"Map {self.map.src.size}->{self.map.dst.size} does not fit blocks {k}->{k2}"
                )
        else:
            if not isinstance(self.map, MarkedMap):
                raise InvalidObjectError("Mixed 2-cells are stored as marked maps")
            if self.map.src != _marked_order(self.src) or self.map.dst != _marked_order(self.dst):
                raise InvalidObjectError("Marked map does not fit the blocks of its 1-cells")

    @property
    def pattern(self) -> Tuple[AdjObj, AdjObj]:
        return self.src.pattern


def positive_gap_map(alpha: TwoCell) -> MonotoneMap:
    """
    The covariant map on +-regions induced by alpha. For (+ -> +) the stored
    map psi: k' -> k becomes phi(i) = #{j : psi(j) < i} on k+1 -> k'+1.
    """
    src = FinOrd(alpha.src.gap_count)
    dst = FinOrd(alpha.dst.gap_count)
    if alpha.pattern == (PLUS, PLUS):
        psi = alpha.map.values
        values = tuple(sum(1 for v in psi if v < i) for i in range(src.size))
        return MonotoneMap(src, dst, values)
    return MonotoneMap(src, dst, alpha.map.values)


def from_gap_map(src: OneCell, dst: OneCell, values) -> TwoCell:
    """Inverse of positive_gap_map: rebuild the stored 2-cell."""
    values = tuple(values)
    pattern = src.pattern
    if pattern == (MINUS, MINUS):
        return TwoCell(src, dst, MonotoneMap(FinOrd(src.blocks), FinOrd(dst.blocks), values))
    if pattern == (PLUS, PLUS):
        if values[0] != 0 or values[-1] != dst.blocks:
            raise InvalidObjectError(f"Gap map {values} does not preserve the boundary regions")
        # psi(j) = max{i : phi(i) <= j}
        psi = tuple(
            max(i for i, v in enumerate(values) if v <= j)
            for j in range(dst.blocks)
        )
        return TwoCell(src, dst, MonotoneMap(FinOrd(dst.blocks), FinOrd(src.blocks), psi))
    return TwoCell(src, dst, marked_map(_marked_order(src), _marked_order(dst), values))


def identity_two_cell(f: OneCell) -> TwoCell:
    return from_gap_map(f, f, range(f.gap_count))


def vcompose(beta: TwoCell, alpha: TwoCell) -> TwoCell:
    """beta after alpha; the (+ -> +) case composes the stored maps in reverse."""
    if alpha.dst != beta.src:
        raise CompositionError(
            f"Cannot stack 2-cells: {alpha.dst.label()} != {beta.src.label()}"
        )
    first = positive_gap_map(alpha)
    second = positive_gap_map(beta)
    return from_gap_map(alpha.src, beta.dst, (second.values[v] for v in first.values))


def hcompose(beta: TwoCell, alpha: TwoCell) -> TwoCell:
    """
    Horizontal composite of beta on g: b -> c with alpha on f: a -> b.

    Regions of g come first. Over a - middle object the gap maps are
    joined; over a + middle object the last region of g and the first
    region of f fuse into one.
    """
    if alpha.src.dst != beta.src.src:
        raise CompositionError(
            f"Cannot compose horizontally: {alpha.src.dst.value} != {beta.src.src.value}"
        )
    src = compose_one_cells(beta.src, alpha.src)
    dst = compose_one_cells(beta.dst, alpha.dst)
    outer = positive_gap_map(beta)
    inner = positive_gap_map(alpha)

    if alpha.src.dst == MINUS:
        offset = outer.dst.size
        values = outer.values + tuple(v + offset for v in inner.values)
    else:
        offset = outer.dst.size - 1
        values = outer.values[:-1] + tuple(v + offset for v in inner.values)
    return from_gap_map(src, dst, values)


def whisker_left(g: OneCell, alpha: TwoCell) -> TwoCell:
    """g applied after alpha."""
    return hcompose(identity_two_cell(g), alpha)


def whisker_right(beta: TwoCell, f: OneCell) -> TwoCell:
    """beta applied after f."""
    return hcompose(beta, identity_two_cell(f))


def unit_eta() -> TwoCell:
    """eta: id_- => RL, the unique map from the empty order to a point."""
    return TwoCell(
        identity_one_cell(MINUS),
        OneCell(MINUS, MINUS, 1),
        MonotoneMap(FinOrd(0), FinOrd(1), ())
    )


def counit_eps() -> TwoCell:
    """eps: LR => id_+, stored in O-direction as the map from the empty order to a point."""
    return TwoCell(
        OneCell(PLUS, PLUS, 1),
        identity_one_cell(PLUS),
        MonotoneMap(FinOrd(0), FinOrd(1), ())
    )


LEFT_ADJOINT = OneCell(MINUS, PLUS, 0)
RIGHT_ADJOINT = OneCell(PLUS, MINUS, 0)


def triangle_check() -> Tuple[bool, bool]:
    """
    (eps . L) o (L . eta) = id_L and (R . eps) o (eta . R) = id_R.
    """
    eta, eps = unit_eta(), counit_eps()
    left = vcompose(whisker_right(eps, LEFT_ADJOINT), whisker_left(LEFT_ADJOINT, eta))
    right = vcompose(whisker_left(RIGHT_ADJOINT, eps), whisker_right(eta, RIGHT_ADJOINT))
    return (
        left == identity_two_cell(LEFT_ADJOINT),
        right == identity_two_cell(RIGHT_ADJOINT),
    )


def enumerate_two_cells(src: OneCell, dst: OneCell) -> List[TwoCell]:
    """All 2-cells src => dst."""
    if src.pattern != dst.pattern:
        raise CompositionError("2-cells need 1-cells with equal endpoints")
    pattern = src.pattern
    if pattern == (MINUS, MINUS):
        return [TwoCell(src, dst, f) for f in enumerate_monotone(FinOrd(src.blocks), FinOrd(dst.blocks))]
    if pattern == (PLUS, PLUS):
        return [TwoCell(src, dst, f) for f in enumerate_monotone(FinOrd(dst.blocks), FinOrd(src.blocks))]

    cells = []
    lower, upper = _marked_order(src), _marked_order(dst)
    for f in enumerate_monotone(lower.underlying, upper.underlying):
        if MIN in lower.marks and f.values[0] != 0:
            continue
        if MAX in lower.marks and f.values[-1] != upper.size - 1:
            continue
        cells.append(TwoCell(src, dst, MarkedMap(lower, upper, f)))
    return cells


PATTERNS = [(a, b, c) for a in (MINUS, PLUS) for b in (MINUS, PLUS) for c in (MINUS, PLUS)]


def interchange_witnesses(max_blocks: int) -> Iterator[Tuple]:
    """
    Yield every instance (beta', beta, alpha', alpha) violating
    (beta' o beta) * (alpha' o alpha) = (beta' * alpha') o (beta * alpha),
    over all patterns a -> b -> c and 1-cells with at most max_blocks blocks.
    """
    for a, b, c in PATTERNS:
        fs = enumerate_one_cells(a, b, max_blocks)
        gs = enumerate_one_cells(b, c, max_blocks)
        for f0 in fs:
            for f1 in fs:
                first_alphas = enumerate_two_cells(f0, f1)
                if not first_alphas:
                    continue
                for f2 in fs:
                    second_alphas = enumerate_two_cells(f1, f2)
                    for g0 in gs:
                        for g1 in gs:
                            first_betas = enumerate_two_cells(g0, g1)
                            if not first_betas:
                                continue
                            for g2 in gs:
                                second_betas = enumerate_two_cells(g1, g2)
                                for alpha in first_alphas:
                                    for alpha2 in second_alphas:
                                        vertical_a = vcompose(alpha2, alpha)
                                        for beta in first_betas:
                                            bottom = hcompose(beta, alpha)
                                            for beta2 in second_betas:
                                                lhs = hcompose(vcompose(beta2, beta), vertical_a)
                                                rhs = vcompose(hcompose(beta2, alpha2), bottom)
                                                if lhs != rhs:
                                                    yield (beta2, beta, alpha2, alpha)


def monad_functor(A: AlgebraSC, x: Union[FinOrd, MonotoneMap]) -> ExactMatrix:
    """
    The monoidal functor O -> free modules determined by A: the object I
    goes to A^{(x)|I|} (returned as its identity matrix) and f: I -> J
    multiplies each fiber in order, inserting the unit on empty fibers.
    """
    require_valid(A)
    if isinstance(x, FinOrd):
        return ExactMatrix.identity(A.ring, A.dim ** x.size)
    fibers = [x.fiber(j) for j in range(x.dst.size)]
    return fiber_product_matrix(A, x.src.size, fibers)


# Example usage and testing
if __name__ == "__main__":
    print(f"triangles: {triangle_check()}")
    eta = unit_eta()
    print(f"eta: blocks {eta.src.blocks} -> {eta.dst.blocks}")
    fused = compose_one_cells(RIGHT_ADJOINT, LEFT_ADJOINT)
    print(f"R o L = {fused.label()} with {fused.blocks} block(s)")
    print(f"interchange failures (blocks <= 1): {sum(1 for _ in interchange_witnesses(1))}")
