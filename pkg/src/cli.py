"""
CLI Module
Command-line surface: argument parsing, JSON input documents, command
handlers and the machine-readable report every command produces.
"""

import argparse
import logging
import time
from fractions import Fraction
from typing import Any, Callable, Dict, List, Literal, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, Field, ValidationError, model_validator

from src import adjunction2cat as adj
from src import circle_disks as cd
from src import hochschild as hh
from src import paracyclic as para
from src import trace_engine as te
from src.cache_manager import ResultCache
from src.matcat import (
    RATIONALS,
    ExactMatrix,
    ExactRing,
    canonical_duality,
    duality_from_document,
)
from src.suite_runner import DEFAULT_SEED, AcceptanceSuite, chain_operator_identities
from src.utils import (
    AlgebraValidationError,
    CircleTraceError,
    CompositionError,
    DualityValidationError,
    InputFormatError,
    InvalidObjectError,
    RingMismatchError,
    format_scalar,
    load_json_document,
    parse_int_list,
    parse_rational_list,
    validate_file,
)

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2

ScalarField = Union[int, str]


# ------------------------------------------------------------------ documents

class Report(BaseModel):
    """Result of one command."""

    command: str = Field(..., description="Subcommand, e.g. 'hh compute'")
    inputs: Dict[str, Any] = Field(default_factory=dict, description="Echo of the parsed arguments")
    results: Dict[str, Any] = Field(default_factory=dict, description="Scalars, rank tables and booleans")
    failures: List[Dict[str, Any]] = Field(default_factory=list, description="Witnesses of failed checks")
    status: Literal["pass", "fail", "error"] = Field(..., description="Overall status")
    wall_time_seconds: float = Field(0.0, description="Elapsed time")

    @model_validator(mode="after")
    def failures_match_status(self) -> "Report":
        if (self.status == "pass") == bool(self.failures):
            raise ValueError("failures must be empty exactly when status is 'pass'")
        return self

    @property
    def exit_code(self) -> int:
        return {"pass": EXIT_PASS, "fail": EXIT_FAIL, "error": EXIT_INPUT}[self.status]


class AlgebraDocument(BaseModel):
    """
    {"ring": "Q"|"Z"|"Fp:p", "dim": d, "unit": [d scalars], "mul": [d^3 scalars]}
    with mul[k + d*(j + d*i)] the coefficient of e_k in e_i e_j.
    """

    ring: str = Field("Q", description="Coefficient ring label")
    dim: int = Field(..., ge=1, description="Dimension of the algebra")
    unit: List[ScalarField] = Field(..., description="Coordinates of the unit")
    mul: List[ScalarField] = Field(..., description="Structure constants")
    name: str = Field("document", description="Name used in reports")

    @model_validator(mode="after")
    def check_lengths(self) -> "AlgebraDocument":
        if len(self.unit) != self.dim:
            raise ValueError(f"unit needs {self.dim} entries, got {len(self.unit)}")
        if len(self.mul) != self.dim ** 3:
            raise ValueError(f"mul needs {self.dim ** 3} entries, got {len(self.mul)}")
        return self

    def to_algebra(self) -> hh.AlgebraSC:
        ring = ExactRing.from_label(self.ring)
        return hh.AlgebraSC(ring, self.dim, tuple(self.unit), tuple(self.mul), self.name)


class DualityDocument(BaseModel):
    eta: List[ScalarField] = Field(..., description="eta coefficients, e_i^v (x) e_j at i*d + j")
    eps: List[ScalarField] = Field(..., description="eps coefficients, e_i (x) e_j^v at i*d + j")


class LabeledCircleDocument(BaseModel):
    """
    {"ring": "Q", "dim": d, "points": ["0", "1/2"], "labels": [d x d matrices],
    "duality": optional {"eta": [...], "eps": [...]}}; label k sits on the arc
    starting at point k.
    """

    ring: str = Field("Q", description="Coefficient ring label")
    dim: int = Field(..., ge=1, description="Dimension of V")
    points: List[str] = Field(..., min_length=1, description="Angles in [0, 1) as 'a/b'")
    labels: List[List[List[ScalarField]]] = Field(..., description="One d x d matrix per arc")
    duality: Optional[DualityDocument] = Field(None, description="Non-canonical duality data")

    @model_validator(mode="after")
    def check_shapes(self) -> "LabeledCircleDocument":
        if len(self.labels) != len(self.points):
            raise ValueError(f"{len(self.points)} points need {len(self.points)} labels, got {len(self.labels)}")
        for k, label in enumerate(self.labels):
            if len(label) != self.dim or any(len(row) != self.dim for row in label):
                raise ValueError(f"label {k} is not {self.dim}x{self.dim}")
        return self

    def to_labeled_circle(self) -> te.LabeledCircle:
        ring = ExactRing.from_label(self.ring)
        if self.duality is None:
            data = canonical_duality(self.dim, ring)
        else:
            data = duality_from_document(ring, self.dim, self.duality.eta, self.duality.eps)
        config = cd.CircleConfig(tuple(parse_rational_list(",".join(self.points))))
        labels = tuple(ExactMatrix.from_rows(ring, label) for label in self.labels)
        return te.LabeledCircle(config, data, labels)


# ------------------------------------------------------------------ parsing helpers

def parse_para_map(text: str) -> para.ParaMap:
    """
    Parse "m:n:v0,v1,..." into a ParaMap from m to n orbits.
    """
    try:
        m, n, values = text.split(":")
        return para.ParaMap(para.ParaObj(int(m)), para.ParaObj(int(n)), tuple(parse_int_list(values)))
    except ValueError as e:
        raise InputFormatError(f"Malformed para map {text!r}, expected 'm:n:v0,v1,...'") from e


def load_algebra(source: str, ring_label: Optional[str]) -> hh.AlgebraSC:
    """
    A built-in spec ("matrix:2", "truncpoly:3", "group:C2") over --ring, or
    a JSON algebra document (file path or inline), whose own ring wins.
    """
    is_file, _ = validate_file(source)
    if is_file or source.lstrip().startswith("{"):
        document = AlgebraDocument(**load_json_document(source))
        algebra = document.to_algebra()
        if ring_label and ExactRing.from_label(ring_label) != algebra.ring:
            logger.warning("Ignoring --ring %s: the document is over %s", ring_label, algebra.ring.label)
        return algebra
    ring = ExactRing.from_label(ring_label) if ring_label else RATIONALS
    return hh.algebra_from_spec(source, ring)


def _scalar(value: Any) -> str:
    return format_scalar(value) if isinstance(value, (int, Fraction)) else str(value)


# ------------------------------------------------------------------ handlers
#
# Each handler returns (results, failures).

HandlerResult = Tuple[Dict[str, Any], List[Dict[str, Any]]]


def _check_to_result(check) -> HandlerResult:
    results = {
        "check": check.name,
        "passed": check.passed,
        "cases": check.cases,
        "details": check.details,
    }
    return results, [dict(f, check=check.name) for f in check.failures]


def handle_para_dual(args) -> HandlerResult:
    f = parse_para_map(args.map)
    dual = para.poincare_dual(f)
    double = para.poincare_dual(dual)
    shifted = para.compose(
        para.double_dual_shift(f.dst),
        para.compose(f, para.inverse(para.double_dual_shift(f.src)))
    )
    failures = [] if double == shifted else [{"law": "double dual", "map": f.to_dict()}]
    return {"map": f.to_dict(), "dual": dual.to_dict(), "double_dual": double.to_dict()}, failures


def handle_para_compose(args) -> HandlerResult:
    f = parse_para_map(args.first)
    g = parse_para_map(args.second)
    gf = para.compose(g, f)
    failures = []
    if para.poincare_dual(gf) != para.compose(para.poincare_dual(f), para.poincare_dual(g)):
        failures.append({"law": "dual contravariance", "f": f.to_dict(), "g": g.to_dict()})
    return {"composite": gf.to_dict()}, failures


def handle_para_enumerate(args) -> HandlerResult:
    maps = para.enumerate_maps(para.ParaObj(args.src), para.ParaObj(args.dst), args.offset_bound)
    return {"count": len(maps), "maps": [list(f.values) for f in maps]}, []


def handle_para_axioms(args) -> HandlerResult:
    suite = AcceptanceSuite(seed=args.seed)
    return _check_to_result(suite.check_paracyclic(args.max_orbits, args.offset_bound))


def handle_circle_roundtrip(args) -> HandlerResult:
    failures = []
    for n in range(1, args.max_orbits + 1):
        config = cd.from_para(para.ParaObj(n))
        if cd.to_para(config).orbits != n:
            failures.append({"orbits": n, "config": config.to_strings()})
    return {"orbits_checked": args.max_orbits}, failures


def handle_circle_moves(args) -> HandlerResult:
    config = cd.CircleConfig(tuple(parse_rational_list(args.points)))
    moves = cd.elementary_moves(config, args.grid, args.max_points)
    listing = [
        {"move": name, "target": move.dst.to_strings(), "para_map": list(move.para_map.values)}
        for name, move in moves
    ]
    results = {"config": config.to_strings(), "moves": listing}
    if args.check:
        suite = AcceptanceSuite(seed=args.seed)
        check_results, failures = _check_to_result(suite.check_circle_para())
        results["check"] = check_results
        return results, failures
    return results, []


def handle_adj_axioms(args) -> HandlerResult:
    suite = AcceptanceSuite(seed=args.seed)
    return _check_to_result(suite.check_adjunction(args.max_blocks))


def handle_adj_triangles(args) -> HandlerResult:
    left, right = adj.triangle_check()
    failures = []
    if not left:
        failures.append({"identity": "(eps * L) o (L * eta) = id_L"})
    if not right:
        failures.append({"identity": "(R * eps) o (eta * R) = id_R"})
    return {"left": left, "right": right}, failures


def _labeled_circles(args) -> List[te.LabeledCircle]:
    if args.input:
        return [LabeledCircleDocument(**load_json_document(args.input)).to_labeled_circle()]
    config = cd.CircleConfig(tuple(parse_rational_list(args.points)))
    ring = ExactRing.from_label(args.ring or "Q")
    circles = []
    for d in parse_int_list(args.dims):
        ident = ExactMatrix.identity(ring, d)
        circles.append(te.LabeledCircle(config, canonical_duality(d, ring), tuple([ident] * config.size)))
    if not circles:
        raise InputFormatError("Give --input or at least one dimension in --dims")
    return circles


def handle_trace_eval(args) -> HandlerResult:
    evaluations = []
    failures = []
    for lc in _labeled_circles(args):
        value = te.evaluate(lc)
        classical = lc.cyclic_composite().trace()
        evaluations.append({
            "dim": lc.duality.dim,
            "points": lc.config.to_strings(),
            "value": _scalar(value),
            "classical_trace": _scalar(classical),
        })
        if value != classical:
            failures.append({"dim": lc.duality.dim, "value": _scalar(value), "expected": _scalar(classical)})
    results = {"evaluations": evaluations}
    if len(evaluations) == 1:
        results["value"] = evaluations[0]["value"]
    return results, failures


def handle_trace_invariance(args) -> HandlerResult:
    reports = []
    failures = []
    for lc in _labeled_circles(args):
        rotations = te.rotation_invariance_report(lc, args.max_denominator)
        loops = te.monodromy_report(lc)
        cyclic = te.cyclic_invariance_check(list(lc.arc_labels), lc.duality, max_denominator=2)
        reports.append({
            "dim": lc.duality.dim,
            "value": _scalar(rotations["value"]),
            "angles": rotations["angles"],
            "rotations_passed": rotations["passed"],
            "monodromy_passed": loops["passed"],
            "cyclic_passed": cyclic,
        })
        failures.extend(dict(f, dim=lc.duality.dim, stage="rotation") for f in rotations["failures"])
        failures.extend(dict(f, dim=lc.duality.dim, stage="monodromy") for f in loops["failures"])
        if not cyclic:
            failures.append({"dim": lc.duality.dim, "stage": "cyclic shift"})
    return {"reports": reports}, failures


def _cache(args) -> Optional[ResultCache]:
    return None if args.no_cache else ResultCache(args.cache_db)


def _cached(args, key: str, request: Dict[str, Any], compute: Callable[[], Dict[str, Any]]) -> Dict[str, Any]:
    cache = _cache(args)
    if cache is not None:
        payload = cache.check_cache(key, request)
        if payload is not None:
            return dict(payload, cached=True)
    payload = compute()
    if cache is not None:
        cache.save_result(key, request, payload)
    return dict(payload, cached=False)


def _normalized_flag(args) -> Optional[bool]:
    return False if args.unnormalized else None


def handle_hh_compute(args) -> HandlerResult:
    A = load_algebra(args.algebra, args.ring)
    hh.require_valid(A)
    normalized = _normalized_flag(args)
    request = {
        "command": "hh compute",
        "algebra": A.to_document(),
        "max_degree": args.max_degree,
        "normalized": normalized,
    }

    def compute():
        groups = hh.hh_ranks(A, args.max_degree, normalized)
        payload = hh.hh_to_json(A, groups)
        payload["dims"] = [g.rank for g in groups]
        payload["euler_audit"] = hh.euler_audit(A, args.max_degree, normalized)
        return payload

    results = _cached(args, f"hh:{A.name}:{A.ring.label}:{args.max_degree}", request, compute)
    failures = []
    if not results["euler_audit"]["passed"]:
        failures.append(dict(results["euler_audit"], stage="euler audit"))
    return results, failures


def handle_hh_operators(args) -> HandlerResult:
    A = load_algebra(args.algebra, args.ring)
    hh.require_valid(A)
    failures = []
    checked = 0
    for p in range(args.max_degree + 1):
        for name, ok in chain_operator_identities(A, p):
            checked += 1
            if not ok:
                failures.append({"degree": p, "identity": name})
    return {"algebra": A.name, "ring": A.ring.label, "identities_checked": checked}, failures


def handle_hcminus(args) -> HandlerResult:
    A = load_algebra(args.algebra, args.ring)
    if not A.ring.is_field:
        raise RingMismatchError(f"hcminus needs a field, got {A.ring.label}")
    normalized = _normalized_flag(args)
    min_degree = args.min_degree if args.min_degree is not None else hh.reliable_window(args.weight)
    request = {
        "command": "hcminus",
        "algebra": A.to_document(),
        "weight": args.weight,
        "min_degree": min_degree,
        "max_degree": args.max_degree,
        "normalized": normalized,
    }

    def compute():
        window = hh.hc_minus_truncated(A, args.weight, min_degree, args.max_degree, normalized)
        traces = []
        if A.trace_form is not None:
            for j in range(args.weight):
                if -2 * j < min_degree:
                    break
                trace = hh.trace_negative_cyclic(A, args.weight, j, normalized)
                traces.append({"degree": trace.degree, "rank": trace.rank, "cycles": trace.cycle_count})
        return {
            "algebra": A.name,
            "ring": A.ring.label,
            "weight": args.weight,
            "reliable_from": hh.reliable_window(args.weight),
            "degrees": [w.to_dict() for w in window],
            "trace": traces,
        }

    key = f"hcminus:{A.name}:{A.ring.label}:{args.weight}:{min_degree}:{args.max_degree}"
    return _cached(args, key, request, compute), []


def handle_laxfact_properties(args) -> HandlerResult:
    suite = AcceptanceSuite(seed=args.seed, quick=args.quick)
    return _check_to_result(suite.check_laxfact(args.objects, args.morphisms, args.factorizations))


def handle_suite(args) -> HandlerResult:
    suite = AcceptanceSuite(seed=args.seed, quick=args.quick)
    names = [n.strip() for n in args.checks.split(",")] if args.checks else None
    try:
        checks = suite.run(names)
    except KeyError as e:
        raise InputFormatError(str(e)) from e
    failures = []
    for check in checks:
        failures.extend(dict(f, check=check.name) for f in check.failures)
    results = {
        "checks": {
            c.name: {"passed": c.passed, "cases": c.cases, "wall_time_seconds": c.wall_time_seconds, "details": c.details}
            for c in checks
        },
        "stats": suite.get_stats(),
    }
    return results, failures


# ------------------------------------------------------------------ parser

def _common_parent() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Print the report as JSON")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"Seed for randomized checks (default: {DEFAULT_SEED})")
    common.add_argument("--verbose", action="store_true", help="Enable debug logging")
    common.add_argument("--cache-db", type=str, default="cache/results_cache.db", help="Result cache database (default: cache/results_cache.db)")
    common.add_argument("--no-cache", action="store_true", help="Bypass the result cache")
    return common


def _algebra_arguments(parser: argparse.ArgumentParser, default_algebra: str) -> None:
    parser.add_argument("--algebra", type=str, default=default_algebra, help=f"Built-in spec or JSON document (default: {default_algebra})")
    parser.add_argument("--ring", type=str, default=None, help="Q, Z or Fp:p for built-in algebras (default: Q)")
    parser.add_argument("--unnormalized", action="store_true", help="Use the full instead of the normalized complex")


def _trace_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", type=str, default=None, help="Labeled circle JSON document (file or inline)")
    parser.add_argument("--dims", type=str, default="1", help="Comma-separated dimensions for identity labels (default: 1)")
    parser.add_argument("--points", type=str, default="0", help="Comma-separated angles in [0, 1) (default: 0)")
    parser.add_argument("--ring", type=str, default=None, help="Ring for identity labels (default: Q)")


def build_parser() -> argparse.ArgumentParser:
    """
    Build the argument parser with one subcommand per component.

    Returns:
        argparse.ArgumentParser: Parser whose leaves set `handler` and `command`
    """
    common = _common_parent()
    parser = argparse.ArgumentParser(
        prog="circle-trace",
        description="Circle Trace Engine - exact traces, paracyclic combinatorics and Hochschild homology"
    )
    commands = parser.add_subparsers(dest="group", required=True)

    def leaf(group, name, handler, help_text):
        sub = group.add_parser(name, parents=[common], help=help_text)
        sub.set_defaults(handler=handler, command=f"{group_name[id(group)]} {name}".strip())
        return sub

    group_name: Dict[int, str] = {}

    def group(name, help_text):
        sub = commands.add_parser(name, help=help_text)
        actions = sub.add_subparsers(dest="action", required=True)
        group_name[id(actions)] = name
        return actions

    # para
    para_group = group("para", "Paracyclic category")
    p = leaf(para_group, "dual", handle_para_dual, "Poincare dual of a map")
    p.add_argument("--map", required=True, help="Map as 'm:n:v0,v1,...'")
    p = leaf(para_group, "compose", handle_para_compose, "Compose second after first")
    p.add_argument("--first", required=True, help="First map f as 'm:n:v0,...'")
    p.add_argument("--second", required=True, help="Second map g as 'n:k:v0,...'")
    p = leaf(para_group, "enumerate", handle_para_enumerate, "List all maps with bounded offset")
    p.add_argument("--src", type=int, required=True, help="Source orbits")
    p.add_argument("--dst", type=int, required=True, help="Target orbits")
    p.add_argument("--offset-bound", type=int, default=1, help="Bound on |f(0)| (default: 1)")
    p = leaf(para_group, "axioms", handle_para_axioms, "Exhaustive category, duality and Z-action laws")
    p.add_argument("--max-orbits", type=int, default=3, help="Largest object (default: 3)")
    p.add_argument("--offset-bound", type=int, default=2, help="Bound on |f(0)| (default: 2)")

    # circle
    circle_group = group("circle", "Disk refinements of the circle")
    p = leaf(circle_group, "roundtrip", handle_circle_roundtrip, "to_para o from_para = id")
    p.add_argument("--max-orbits", type=int, default=8, help="Largest object (default: 8)")
    p = leaf(circle_group, "moves", handle_circle_moves, "Elementary moves out of a configuration")
    p.add_argument("--points", type=str, default="0", help="Comma-separated angles (default: 0)")
    p.add_argument("--grid", type=int, default=4, help="Insertion lattice 1/grid (default: 4)")
    p.add_argument("--max-points", type=int, default=4, help="No insertions beyond this size (default: 4)")
    p.add_argument("--check", action="store_true", help="Also run the functoriality and monodromy check")

    # adj
    adj_group = group("adj", "Walking adjunction")
    p = leaf(adj_group, "axioms", handle_adj_axioms, "Interchange law and unit laws")
    p.add_argument("--max-blocks", type=int, default=2, help="Largest 1-cell (default: 2)")
    leaf(adj_group, "triangles", handle_adj_triangles, "Triangle identities")

    # trace
    trace_group = group("trace", "Traces of labeled circles")
    p = leaf(trace_group, "eval", handle_trace_eval, "Evaluate a labeled circle")
    _trace_arguments(p)
    p = leaf(trace_group, "invariance", handle_trace_invariance, "Rotation, monodromy and cyclic invariance")
    _trace_arguments(p)
    p.add_argument("--max-denominator", type=int, default=6, help="Rotations a/q with q up to this (default: 6)")

    # hh
    hh_group = group("hh", "Hochschild homology")
    p = leaf(hh_group, "compute", handle_hh_compute, "HH_0..HH_N")
    _algebra_arguments(p, "matrix:2")
    p.add_argument("--max-degree", type=int, default=3, help="Top degree N (default: 3)")
    p = leaf(hh_group, "operators", handle_hh_operators, "Exact identities among the cyclic bar operators")
    _algebra_arguments(p, "truncpoly:2")
    p.add_argument("--max-degree", type=int, default=3, help="Top chain degree (default: 3)")

    # hcminus is a single command
    p = commands.add_parser("hcminus", parents=[common], help="Truncated negative cyclic homology")
    p.set_defaults(handler=handle_hcminus, command="hcminus")
    _algebra_arguments(p, "matrix:1")
    p.add_argument("--weight", type=int, default=3, help="Number of u-columns kept (default: 3)")
    p.add_argument("--min-degree", type=int, default=None, help="Lowest degree (default: reliable window)")
    p.add_argument("--max-degree", type=int, default=1, help="Highest degree (default: 1)")

    # laxfact
    lax_group = group("laxfact", "Lax factorization category")
    p = leaf(lax_group, "properties", handle_laxfact_properties, "Membership, left fibration and reflection properties")
    p.add_argument("--objects", type=int, default=None, help="Random objects (default: 1000)")
    p.add_argument("--morphisms", type=int, default=None, help="Random morphisms (default: 500)")
    p.add_argument("--factorizations", type=int, default=None, help="Reflection candidates (default: 40)")
    p.add_argument("--quick", action="store_true", help="Reduced sample counts")

    # suite
    p = commands.add_parser("suite", parents=[common], help="Full acceptance run")
    p.set_defaults(handler=handle_suite, command="suite")
    p.add_argument("--checks", type=str, default=None, help="Comma-separated subset of checks")
    p.add_argument("--quick", action="store_true", help="Reduced sample counts")

    return parser


# ------------------------------------------------------------------ running

INPUT_ERRORS = (
    InputFormatError,
    ValidationError,
    InvalidObjectError,
    CompositionError,
    RingMismatchError,
    DualityValidationError,
    AlgebraValidationError,
)


def _error_witness(e: Exception) -> Dict[str, Any]:
    witness = {"error": type(e).__name__, "message": str(e)}
    for attr in ("identity", "witness"):
        if hasattr(e, attr):
            witness[attr] = getattr(e, attr)
    return witness


def _inputs(args: argparse.Namespace) -> Dict[str, Any]:
    skip = {"handler", "command", "group", "action"}
    return {k: v for k, v in vars(args).items() if k not in skip}


def execute(args: argparse.Namespace) -> Report:
    """
    Run the handler selected by parsed arguments and wrap its outcome.

    Args:
        args (argparse.Namespace): Output of build_parser().parse_args

    Returns:
        Report: pass, fail (exit 1) or error (exit 2)
    """
    start = time.perf_counter()
    logger.info("Running %s", args.command)
    try:
        results, failures = args.handler(args)
        status = "fail" if failures else "pass"
    except INPUT_ERRORS as e:
        logger.error("Input error in %s: %s", args.command, e)
        results, failures, status = {}, [_error_witness(e)], "error"
    except CircleTraceError as e:
        logger.error("Check failed in %s: %s", args.command, e)
        results, failures, status = {}, [_error_witness(e)], "fail"

    return Report(
        command=args.command,
        inputs=_inputs(args),
        results=results,
        failures=failures,
        status=status,
        wall_time_seconds=round(time.perf_counter() - start, 4),
    )


def run(argv: Optional[Sequence[str]] = None) -> Tuple[int, Optional[Report]]:
    """
    Parse argv and execute it.

    Args:
        argv: Arguments without the program name

    Returns:
        Tuple[int, Optional[Report]]: Exit code and report (None after --help)
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        code = e.code if isinstance(e.code, int) else EXIT_INPUT
        if code == 0:
            return 0, None
        report = Report(
            command=" ".join(argv or [])[:80] or "(none)",
            failures=[{"error": "usage", "message": "invalid arguments"}],
            status="error",
        )
        return EXIT_INPUT, report

    report = execute(args)
    return report.exit_code, report


def render(report: Report, as_json: bool) -> str:
    """The report as indented JSON, or as a short text summary."""
    if as_json:
        return report.model_dump_json(indent=2)

    lines = [f"{report.command}: {report.status} ({report.wall_time_seconds}s)"]
    for key, value in report.results.items():
        lines.append(f"  {key}: {value}")
    for failure in report.failures[:20]:
        lines.append(f"  failure: {failure}")
    if len(report.failures) > 20:
        lines.append(f"  ... {len(report.failures) - 20} more failures")
    return "\n".join(lines)


# Example usage and testing
if __name__ == "__main__":
    for argv in (["adj", "triangles"], ["hh", "compute", "--algebra", "matrix:2", "--no-cache"]):
        code, report = run(argv)
        print(render(report, as_json=False))
        print(f"exit code: {code}")
