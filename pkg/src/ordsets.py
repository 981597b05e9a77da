"""
Ordered Sets Module
Finite linear orders, monotone maps, joins, and the marked variants used as
hom-categories of the walking adjunction.

Orders are skeletal: a FinOrd of size n is {0 < 1 < ... < n-1}. Marks are
positional, MIN marks element 0 and MAX marks element size-1.
"""

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations_with_replacement
from typing import FrozenSet, Iterable, List, Tuple, Union

from src.utils import CompositionError, InvalidObjectError


class Mark(str, Enum):
    MIN = "MIN"
    MAX = "MAX"


MIN = Mark.MIN
MAX = Mark.MAX


@dataclass(frozen=True)
class FinOrd:
    """The linear order {0 < ... < size-1}; size 0 is the empty order."""

    size: int

    def __post_init__(self):
        if not isinstance(self.size, int) or self.size < 0:
            raise InvalidObjectError(f"FinOrd size must be a non-negative integer, got {self.size!r}")


@dataclass(frozen=True)
class MonotoneMap:
    """
    An order preserving map src -> dst stored by its values.
    """

    src: FinOrd
    dst: FinOrd
    values: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))

        if len(self.values) != self.src.size:
            raise InvalidObjectError(
                f"Expected {self.src.size} values, got {len(self.values)}"
            )
        for v in self.values:
            if not 0 <= v < self.dst.size:
                raise InvalidObjectError(f"Value {v} outside [0, {self.dst.size})")
        for a, b in zip(self.values, self.values[1:]):
            if a > b:
                raise InvalidObjectError(f"Values not weakly increasing: {self.values}")

    def __call__(self, i: int) -> int:
        return self.values[i]

    def fiber(self, j: int) -> List[int]:
        """Preimage of j; contiguous since the map is monotone."""
        return [i for i, v in enumerate(self.values) if v == j]

    def is_identity(self) -> bool:
        return self.src == self.dst and self.values == tuple(range(self.src.size))


def identity(x: FinOrd) -> MonotoneMap:
    return MonotoneMap(x, x, tuple(range(x.size)))


def compose_monotone(g: MonotoneMap, f: MonotoneMap) -> MonotoneMap:
    """
    Compose g after f.

    Args:
        g (MonotoneMap): Second map
        f (MonotoneMap): First map, with f.dst == g.src

    Returns:
        MonotoneMap: g o f
    """
    if f.dst != g.src:
        raise CompositionError(f"Cannot compose: f.dst={f.dst.size} but g.src={g.src.size}")
    return MonotoneMap(f.src, g.dst, tuple(g.values[v] for v in f.values))


def join(
    a: Union[FinOrd, MonotoneMap],
    b: Union[FinOrd, MonotoneMap]
) -> Union[FinOrd, MonotoneMap]:
    """
    Join of linear orders (a placed below b), and of maps between them.

    Args:
        a: Lower summand
        b: Upper summand, of the same kind as a

    Returns:
        The join, of the same kind as the arguments
    """
    if isinstance(a, FinOrd) and isinstance(b, FinOrd):
        return FinOrd(a.size + b.size)

    if isinstance(a, MonotoneMap) and isinstance(b, MonotoneMap):
        offset = a.dst.size
        return MonotoneMap(
            FinOrd(a.src.size + b.src.size),
            FinOrd(a.dst.size + b.dst.size),
            a.values + tuple(v + offset for v in b.values)
        )

    raise TypeError("join expects two FinOrd or two MonotoneMap values")


def join_all(items: Iterable[MonotoneMap]) -> MonotoneMap:
    result = identity(FinOrd(0))
    for item in items:
        result = join(result, item)
    return result


def enumerate_monotone(src: FinOrd, dst: FinOrd) -> List[MonotoneMap]:
    """All monotone maps src -> dst, in lexicographic order."""
    return [
        MonotoneMap(src, dst, values)
        for values in combinations_with_replacement(range(dst.size), src.size)
    ]


@dataclass(frozen=True)
class MarkedOrd:
    """A nonempty linear order with MIN and/or MAX marked."""

    size: int
    marks: FrozenSet[Mark] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "marks", frozenset(Mark(m) for m in self.marks))

        if not isinstance(self.size, int) or self.size < 1:
            raise InvalidObjectError(f"MarkedOrd size must be positive, got {self.size!r}")
        if self.marks == frozenset({MIN, MAX}) and self.size < 2:
            raise InvalidObjectError("Distinct minimum and maximum need size >= 2")

    @property
    def underlying(self) -> FinOrd:
        return FinOrd(self.size)


@dataclass(frozen=True)
class MarkedMap:
    """
    A monotone map between marked orders with equal marks that preserves
    the marked elements.
    """

    src: MarkedOrd
    dst: MarkedOrd
    underlying: MonotoneMap

    def __post_init__(self):
        if self.src.marks != self.dst.marks:
            raise InvalidObjectError("Marked maps need equal marks on source and target")
        if self.underlying.src.size != self.src.size or self.underlying.dst.size != self.dst.size:
            raise InvalidObjectError("Underlying map does not match the marked orders")

        values = self.underlying.values
        if MIN in self.src.marks and values[0] != 0:
            raise InvalidObjectError(f"Minimum not preserved: {values}")
        if MAX in self.src.marks and values[-1] != self.dst.size - 1:
            raise InvalidObjectError(f"Maximum not preserved: {values}")

    @property
    def values(self) -> Tuple[int, ...]:
        return self.underlying.values


def marked_map(src: MarkedOrd, dst: MarkedOrd, values: Iterable[int]) -> MarkedMap:
    return MarkedMap(src, dst, MonotoneMap(src.underlying, dst.underlying, tuple(values)))


def marked_identity(x: MarkedOrd) -> MarkedMap:
    return MarkedMap(x, x, identity(x.underlying))


def compose_marked(g: MarkedMap, f: MarkedMap) -> MarkedMap:
    if f.dst != g.src:
        raise CompositionError("Cannot compose marked maps with mismatched orders")
    return MarkedMap(f.src, g.dst, compose_monotone(g.underlying, f.underlying))


def enumerate_marked(src: MarkedOrd, dst: MarkedOrd) -> List[MarkedMap]:
    """All mark-preserving maps src -> dst."""
    result = []
    for f in enumerate_monotone(src.underlying, dst.underlying):
        if MIN in src.marks and f.values[0] != 0:
            continue
        if MAX in src.marks and f.values[-1] != dst.size - 1:
            continue
        result.append(MarkedMap(src, dst, f))
    return result


def delta_to_interval(p: FinOrd) -> MarkedOrd:
    """
    Send [p] (a FinOrd of size p+1) to the doubly marked order Hom([p], [1]).

    The maps [p] -> [1] are indexed by their number of ones, so the order
    has p+2 elements with the constant maps as minimum and maximum.
    """
    if p.size < 1:
        raise InvalidObjectError("The simplex category has no empty object")
    return MarkedOrd(p.size + 1, frozenset({MIN, MAX}))


def delta_to_interval_map(phi: MonotoneMap) -> MarkedMap:
    """
    Precomposition with phi: [p] -> [q], as a map Hom([q],[1]) -> Hom([p],[1]).

    Element j of Hom([q],[1]) is the map whose last j values are 1; its
    precomposite with phi has #{i : phi(i) >= q+1-j} ones.
    """
    if phi.src.size < 1 or phi.dst.size < 1:
        raise InvalidObjectError("The simplex category has no empty object")

    src = delta_to_interval(phi.dst)
    dst = delta_to_interval(phi.src)
    values = [
        sum(1 for v in phi.values if v >= phi.dst.size - j)
        for j in range(src.size)
    ]
    return marked_map(src, dst, values)


def reverse(x: Union[MarkedOrd, MarkedMap]) -> Union[MarkedOrd, MarkedMap]:
    """
    Reverse a marked order (swapping MIN and MAX) or a marked map.

    On maps this is index reflection i -> size-1-i on both sides, which
    turns a MIN-preserving map into a MAX-preserving one and back.
    """
    if isinstance(x, MarkedOrd):
        swapped = {MIN: MAX, MAX: MIN}
        return MarkedOrd(x.size, frozenset(swapped[m] for m in x.marks))

    if isinstance(x, MarkedMap):
        n_src = x.src.size
        n_dst = x.dst.size
        values = [n_dst - 1 - x.values[n_src - 1 - i] for i in range(n_src)]
        return marked_map(reverse(x.src), reverse(x.dst), values)

    raise TypeError("reverse expects a MarkedOrd or MarkedMap")


# Example usage and testing
if __name__ == "__main__":
    f = MonotoneMap(FinOrd(3), FinOrd(2), (0, 0, 1))
    g = MonotoneMap(FinOrd(2), FinOrd(1), (0, 0))
    print(f"g o f = {compose_monotone(g, f).values}")

    a = MonotoneMap(FinOrd(1), FinOrd(1), (0,))
    b = MonotoneMap(FinOrd(2), FinOrd(1), (0, 0))
    print(f"join = {join(a, b).values}")

    print(f"delta_to_interval([1]) size = {delta_to_interval(FinOrd(2)).size}")

    m = marked_map(MarkedOrd(3, {MIN}), MarkedOrd(3, {MIN}), (0, 0, 2))
    print(f"reverse = {reverse(m).values}")
