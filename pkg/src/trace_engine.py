"""
Trace Engine Module
Evaluates traces of labeled circle configurations: each point contributes
eta: 1 -> V^v (x) V, each arc acts on V by its label, the factors are
cyclically regrouped into V (x) V^v pairs and contracted by eps.

Arc k runs from point k to point k+1 (counterclockwise, arc 0 the base
arc); its label acts on the V factor of its starting point, which is then
paired with the V^v factor of the next point.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Sequence

import numpy as np

from src.circle_disks import (
    MONODROMY_SIGN,
    CircleConfig,
    CircleMorphism,
    arc_preimage,
    from_para,
    identity_morphism,
    monodromy,
    rotation_morphism,
)
from src.hochschild import AlgebraSC, fiber_product_matrix, require_valid
from src.matcat import (
    DualityData,
    ExactMatrix,
    ExactRing,
    RATIONALS,
    kron,
    kron_all,
    symmetry,
)
from src.paracyclic import ParaMap, ParaObj, poincare_dual, z_action
from src.utils import CompositionError, InvalidObjectError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class LabeledCircle:
    """A configuration with one d x d endomorphism of V per arc."""

    config: CircleConfig
    duality: DualityData
    arc_labels: tuple

    def __post_init__(self):
        labels = tuple(self.arc_labels)
        object.__setattr__(self, "arc_labels", labels)

        if len(labels) != self.config.size:
            raise InvalidObjectError(
                f"{self.config.size} arcs but {len(labels)} labels"
            )
        d = self.duality.dim
        for k, label in enumerate(labels):
            if label.shape != (d, d):
                raise InvalidObjectError(f"Label {k} has shape {label.shape}, expected {d}x{d}")
            if label.ring != self.duality.ring:
                raise InvalidObjectError(f"Label {k} is over {label.ring.label}, not {self.duality.ring.label}")

    @property
    def ring(self) -> ExactRing:
        return self.duality.ring

    def cyclic_composite(self) -> ExactMatrix:
        """phi_{r-1} ... phi_1 phi_0, the base arc applied first."""
        result = ExactMatrix.identity(self.ring, self.duality.dim)
        for label in self.arc_labels:
            result = label @ result
        return result


def evaluate(lc: LabeledCircle) -> object:
    """
    The scalar eps^{(x)r} o regroup o (labels) o eta^{(x)r}, contracted
    point by point: with H = eta and E = eps as d x d matrices, the running
    product is S_0 = H phi_0^T, S_k = S_{k-1} E H phi_k^T and the result is
    trace(S_{r-1} E).
    """
    H = lc.duality.eta_matrix
    E = lc.duality.eps_matrix
    glue = E @ H
    running = H @ lc.arc_labels[0].T
    for label in lc.arc_labels[1:]:
        running = running @ glue @ label.T
    return (running @ E).trace()


def evaluate_literal(lc: LabeledCircle) -> object:
    """
    The same scalar with every tensor factor materialized; the intermediate
    vectors have d^(2r) entries.
    """
    d = lc.duality.dim
    r = lc.config.size
    ring = lc.ring
    ident = ExactMatrix.identity(ring, d)

    units = kron_all(ring, [lc.duality.eta] * r)
    act = kron_all(ring, [kron(ident, label) for label in lc.arc_labels])
    regroup = symmetry(ring, [d] * (2 * r), list(range(1, 2 * r)) + [0])
    counits = kron_all(ring, [lc.duality.eps] * r)
    return (counits @ regroup @ act @ units).scalar()


def dimension_via_duality(data: DualityData) -> object:
    """eps o swap o eta: 1 -> V^v (x) V -> V (x) V^v -> 1."""
    swap = symmetry(data.ring, [data.dim, data.dim], [1, 0])
    return (data.eps @ swap @ data.eta).scalar()


def transport(lc: LabeledCircle, move: CircleMorphism) -> LabeledCircle:
    """
    Push labels along a move: each target arc is labeled by the composite of
    the source arcs over it (earlier arc applied first), or the identity if
    nothing maps to it. Singleton preimages reuse the source label object.
    """
    if move.src != lc.config:
        raise CompositionError("Move does not start at the labeled configuration")

    r = lc.config.size
    ident = ExactMatrix.identity(lc.ring, lc.duality.dim)
    labels = []
    for k in range(move.dst.size):
        preimage = arc_preimage(move, k)
        if not preimage:
            labels.append(ident)
            continue
        label = lc.arc_labels[preimage[0] % r]
        for j in preimage[1:]:
            label = lc.arc_labels[j % r] @ label
        labels.append(label)
    return LabeledCircle(move.dst, lc.duality, tuple(labels))


def transport_along(lc: LabeledCircle, moves: Sequence[CircleMorphism]) -> LabeledCircle:
    for move in moves:
        lc = transport(lc, move)
    return lc


def labeled_loop(labels: Sequence[ExactMatrix], duality: DualityData) -> LabeledCircle:
    """Labels on the evenly spaced configuration with len(labels) points."""
    return LabeledCircle(from_para(ParaObj(len(labels))), duality, tuple(labels))


def rotation_invariance_report(lc: LabeledCircle, max_denominator: int = 6) -> Dict[str, object]:
    """
    Evaluate after every rotation by a/q with 1 <= q <= max_denominator and
    0 <= a < q, plus one full turn in each direction.
    """
    base = evaluate(lc)
    angles = sorted({Fraction(a, q) for q in range(1, max_denominator + 1) for a in range(q)})
    angles += [Fraction(1), Fraction(-1)]
    failures = []
    for theta in angles:
        value = evaluate(transport(lc, rotation_morphism(lc.config, theta)))
        if value != base:
            failures.append({"theta": str(theta), "value": str(value)})
    return {"value": base, "angles": len(angles), "failures": failures, "passed": not failures}


def monodromy_report(lc: LabeledCircle, turns: Sequence[int] = (1, -1, 2)) -> Dict[str, object]:
    """
    A full turn acts on identity morphisms as the Z-action and leaves the
    evaluation unchanged.
    """
    base = evaluate(lc)
    ident = identity_morphism(lc.config)
    failures = []
    for n in turns:
        loop = monodromy(ident, n)
        if loop.para_map != z_action(n * MONODROMY_SIGN, ident.para_map):
            failures.append({"turns": n, "reason": "para map differs from the Z-action"})
        if evaluate(transport(lc, loop)) != base:
            failures.append({"turns": n, "reason": "evaluation changed"})
    return {"value": base, "failures": failures, "passed": not failures}


def cyclic_invariance_check(
    labels: Sequence[ExactMatrix],
    duality: DualityData,
    max_denominator: int = 6
) -> bool:
    """
    True iff every cyclic rotation of the labels evaluates to the same
    scalar, and rational rotations of the configuration preserve it.
    """
    if not labels:
        raise InvalidObjectError("Need at least one label")
    labels = list(labels)
    base = evaluate(labeled_loop(labels, duality))
    for shift in range(1, len(labels)):
        rotated = labels[shift:] + labels[:shift]
        if evaluate(labeled_loop(rotated, duality)) != base:
            logger.info("Cyclic shift %d changes the trace", shift)
            return False
    report = rotation_invariance_report(labeled_loop(labels, duality), max_denominator)
    return report["passed"]


def random_label(rng: np.random.Generator, ring: ExactRing, d: int, bound: int = 3) -> ExactMatrix:
    values = rng.integers(-bound, bound + 1, size=(d, d))
    return ExactMatrix.from_rows(ring, [[int(v) for v in row] for row in values])


def random_labeled_circle(
    rng: np.random.Generator,
    duality: DualityData,
    points: int,
    grid: int = 12
) -> LabeledCircle:
    """Random labels on `points` distinct angles of the 1/grid lattice."""
    angles = sorted(rng.choice(grid, size=points, replace=False).tolist())
    config = CircleConfig(tuple(Fraction(a, grid) for a in angles))
    labels = tuple(random_label(rng, duality.ring, duality.dim) for _ in range(points))
    return LabeledCircle(config, duality, labels)


def hochschild_diagram(A: AlgebraSC, x) -> ExactMatrix:
    """
    The cyclic bar construction on para: n orbits go to A^{(x)n} (returned
    as its identity) and f: m -> n multiplies, for each target y, the
    source lifts over y in increasing order, reading slot x mod m.
    """
    require_valid(A)
    if isinstance(x, ParaObj):
        return ExactMatrix.identity(A.ring, A.dim ** x.orbits)
    if not isinstance(x, ParaMap):
        raise InvalidObjectError("hochschild_diagram expects a ParaObj or ParaMap")

    m = x.src.orbits
    dual = poincare_dual(x)
    fibers = [
        [lift % m for lift in range(dual(y - 1) + 1, dual(y) + 1)]
        for y in range(x.dst.orbits)
    ]
    return fiber_product_matrix(A, m, fibers)


def hochschild_cone(A: AlgebraSC, n: int) -> ExactMatrix:
    """The cone point goes to the ground ring; its map to n orbits inserts units."""
    require_valid(A)
    return fiber_product_matrix(A, 0, [[] for _ in range(n)])


def bar_face_map(p: int, i: int) -> ParaMap:
    """The para map inducing the face d_i on C_p."""
    values = [x if x <= i else x - 1 for x in range(p + 1)]
    if i == p:
        values = list(range(p)) + [p]
    return ParaMap(ParaObj(p + 1), ParaObj(p), tuple(values))


def bar_degeneracy_map(p: int, j: int) -> ParaMap:
    """The para map inducing s_j on C_p."""
    return ParaMap(ParaObj(p + 1), ParaObj(p + 2), tuple(x if x <= j else x + 1 for x in range(p + 1)))


# Example usage and testing
if __name__ == "__main__":
    from src.matcat import canonical_duality

    data = canonical_duality(2)
    phi = ExactMatrix.from_rows(RATIONALS, [[1, 2], [0, 1]])
    psi = ExactMatrix.from_rows(RATIONALS, [[0, 1], [1, 0]])
    lc = labeled_loop([phi, psi], data)
    print(f"evaluate = {evaluate(lc)}, literal = {evaluate_literal(lc)}, trace(psi phi) = {(psi @ phi).trace()}")
    print(f"dim V = {dimension_via_duality(data)}")
    print(f"rotations: {rotation_invariance_report(lc)['passed']}")
