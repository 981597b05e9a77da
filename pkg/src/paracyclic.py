"""
Paracyclic Module
The skeletal paracyclic category: objects are Z with the shift x -> x + n,
morphisms are Z-equivariant monotone maps stored on a fundamental domain.
Includes the Z-action on hom-sets, combinatorial Poincare duality and the
functor from the simplex category.
"""

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import List, Tuple

from src.ordsets import MonotoneMap
from src.utils import CompositionError, InvalidObjectError


@dataclass(frozen=True)
class ParaObj:
    """Z with Z acting by x -> x + orbits."""

    orbits: int

    def __post_init__(self):
        if not isinstance(self.orbits, int) or self.orbits < 1:
            raise InvalidObjectError(f"orbits must be a positive integer, got {self.orbits!r}")


@dataclass(frozen=True)
class ParaMap:
    """
    A Z-equivariant monotone map, f(x + m) = f(x) + n, given by f(0..m-1).
    """

    src: ParaObj
    dst: ParaObj
    values: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))

        if len(self.values) != self.src.orbits:
            raise InvalidObjectError(
                f"Expected {self.src.orbits} values, got {len(self.values)}"
            )
        for a, b in zip(self.values, self.values[1:]):
            if a > b:
                raise InvalidObjectError(f"Values not weakly increasing: {self.values}")
        if self.values[-1] > self.values[0] + self.dst.orbits:
            raise InvalidObjectError(
                f"Wraparound violated: {self.values[-1]} > {self.values[0]} + {self.dst.orbits}"
            )

    def __call__(self, x: int) -> int:
        return evaluate(self, x)

    def to_dict(self) -> dict:
        return {
            "src_orbits": self.src.orbits,
            "dst_orbits": self.dst.orbits,
            "values": list(self.values)
        }


def evaluate(f: ParaMap, x: int) -> int:
    """
    Evaluate the equivariant extension of f at any integer.

    Args:
        f (ParaMap): The map
        x (int): Any integer

    Returns:
        int: values[x mod m] + n * floor(x / m)
    """
    q, r = divmod(x, f.src.orbits)
    return f.values[r] + f.dst.orbits * q


def identity(n: ParaObj) -> ParaMap:
    return ParaMap(n, n, tuple(range(n.orbits)))


def translation(n: ParaObj, t: int = 1) -> ParaMap:
    """The automorphism x -> x + t of n."""
    return ParaMap(n, n, tuple(i + t for i in range(n.orbits)))


def double_dual_shift(n: ParaObj) -> ParaMap:
    """
    The translation x -> x - 1 relating a map to its double dual:
    f^vv = shift_n o f o shift_m^-1.
    """
    return translation(n, -1)


def compose(g: ParaMap, f: ParaMap) -> ParaMap:
    """
    Compose g after f.

    Args:
        g (ParaMap): Second map
        f (ParaMap): First map, with f.dst == g.src

    Returns:
        ParaMap: g o f
    """
    if f.dst != g.src:
        raise CompositionError(
            f"Cannot compose: f.dst has {f.dst.orbits} orbits but g.src has {g.src.orbits}"
        )
    return ParaMap(f.src, g.dst, tuple(evaluate(g, v) for v in f.values))


def z_action(r: int, f: ParaMap) -> ParaMap:
    """
    Act by r on Hom(m, n): the map x -> f(x) + r*n.
    """
    shift = r * f.dst.orbits
    return ParaMap(f.src, f.dst, tuple(v + shift for v in f.values))


def poincare_dual(f: ParaMap) -> ParaMap:
    """
    The upper Galois adjoint f^v(y) = max{x : f(x) <= y}.

    Satisfies f(x) <= y iff x <= f^v(y), and (g o f)^v = f^v o g^v.

    Args:
        f (ParaMap): Map from m to n orbits

    Returns:
        ParaMap: Map from n to m orbits
    """
    m = f.src.orbits
    n = f.dst.orbits
    v0 = f.values[0]
    values = []

    for y in range(n):
        # f(k*m) = v0 + k*n <= y, and f((k+1)*m) > y bounds the scan below
        k = (y - v0) // n
        x = k * m
        while evaluate(f, x + 1) <= y:
            x += 1
        values.append(x)

    return ParaMap(f.dst, f.src, tuple(values))


def is_injective(f: ParaMap) -> bool:
    strictly = all(a < b for a, b in zip(f.values, f.values[1:]))
    return strictly and f.values[-1] < f.values[0] + f.dst.orbits


def is_surjective(f: ParaMap) -> bool:
    n = f.dst.orbits
    return len({v % n for v in f.values}) == n


def is_bijective(f: ParaMap) -> bool:
    return is_injective(f) and is_surjective(f)


def inverse(f: ParaMap) -> ParaMap:
    """Inverse of a bijection, which coincides with its Poincare dual."""
    if not is_bijective(f):
        raise InvalidObjectError(f"Map is not invertible: {f.values}")
    return poincare_dual(f)


def from_simplex(phi: MonotoneMap) -> ParaMap:
    """
    The functor from the simplex category: [p] goes to p+1 orbits and a map
    keeps its values.
    """
    if phi.src.size < 1 or phi.dst.size < 1:
        raise InvalidObjectError("The simplex category has no empty object")
    return ParaMap(ParaObj(phi.src.size), ParaObj(phi.dst.size), phi.values)


def surj_inj_factorize(f: ParaMap) -> Tuple[ParaMap, ParaMap]:
    """
    Factor f as a surjection followed by an injection.

    The image of f within [v0, v0 + n) gives the intermediate object; an
    injective f factors through the identity and f itself.

    Args:
        f (ParaMap): Any map

    Returns:
        Tuple[ParaMap, ParaMap]: (surj, inj) with f = inj o surj
    """
    n = f.dst.orbits
    v0 = f.values[0]
    image = sorted({v for v in f.values if v < v0 + n})
    k = len(image)
    position = {v: i for i, v in enumerate(image)}

    middle = ParaObj(k)
    # v0 + n is the image of the start of the next fundamental domain
    surj_values = [position[v] if v < v0 + n else k for v in f.values]

    surj = ParaMap(f.src, middle, tuple(surj_values))
    inj = ParaMap(middle, f.dst, tuple(image))
    return surj, inj


def enumerate_maps(m: ParaObj, n: ParaObj, offset_bound: int) -> List[ParaMap]:
    """
    All maps m -> n with first value in [-offset_bound, offset_bound].

    Args:
        m (ParaObj): Source
        n (ParaObj): Target
        offset_bound (int): Bound on |values[0]|

    Returns:
        List[ParaMap]: Exhaustive, duplicate-free list
    """
    if offset_bound < 0:
        raise InvalidObjectError("offset_bound must be non-negative")

    maps = []
    for v0 in range(-offset_bound, offset_bound + 1):
        for rest in combinations_with_replacement(range(v0, v0 + n.orbits + 1), m.orbits - 1):
            maps.append(ParaMap(m, n, (v0,) + rest))
    return maps


# Example usage and testing
if __name__ == "__main__":
    f = ParaMap(ParaObj(2), ParaObj(1), (0, 0))
    g = ParaMap(ParaObj(1), ParaObj(2), (1,))
    print(f"f(3) = {evaluate(f, 3)}")
    print(f"g o f = {compose(g, f).values}")
    print(f"dual of [3] = {poincare_dual(ParaMap(ParaObj(1), ParaObj(1), (3,))).values}")

    surj, inj = surj_inj_factorize(ParaMap(ParaObj(2), ParaObj(2), (0, 0)))
    print(f"surj = {surj.values}, inj = {inj.values}")
    print(f"#maps 1 -> 1, bound 1: {len(enumerate_maps(ParaObj(1), ParaObj(1), 1))}")
