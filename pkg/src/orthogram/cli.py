"""Batch JSON command line: one command per process, JSON in, JSON out.

Scalars travel as "p/q" strings (plain integers are accepted on input),
graph vertices are 1-based on the wire, and output is byte-stable for a
fixed (input, seed) pair.  Verdict-style exit codes let shell pipelines
branch without parsing: classify exits 0 / 10 / 20 for stable / strictly
semistable / unstable; malformed input exits 2, a resource cap exits 3.
"""

from __future__ import annotations

import argparse
import json
import sys

from .config import CapExceeded
from .graphs import (
    Multigraph,
    determinantal_term_counts,
    enumerate_determinantal_classes,
    enumerate_regular_multigraphs,
    two_factorization,
)
from .invariants import GraphPolynomial, determinant_polynomial, eval_monomial, vanishes_on_low_rank
from .linalg import Matrix, PointConfiguration, SymmetricMatrix, gram_matrix, scalar_to_str
from .spheres import (
    AT_INFINITY,
    LiftedPoint,
    NormalizationError,
    Sphere,
    are_orthogonal,
    are_tangent,
    common_point,
    hyperbolic_pair,
    lift,
    unlift,
)
from .spheres import recover_isometry
from .stability import classify

EXIT_OK = 0
EXIT_STRICTLY_SEMISTABLE = 10
EXIT_UNSTABLE = 20
EXIT_INPUT = 2
EXIT_CAP = 3


class InputError(ValueError):
    """Malformed or schema-violating command input."""


def _take(data: dict, required=(), optional=()) -> dict:
    if not isinstance(data, dict):
        raise InputError("expected a JSON object, got %s" % type(data).__name__)
    unknown = set(data) - set(required) - set(optional)
    if unknown:
        raise InputError("unknown fields: %s" % ", ".join(sorted(unknown)))
    missing = set(required) - set(data)
    if missing:
        raise InputError("missing fields: %s" % ", ".join(sorted(missing)))
    return data


def _read_input(path: str) -> dict:
    try:
        raw = sys.stdin.read() if path == "-" else open(path, "r", encoding="utf-8").read()
    except OSError as exc:
        raise InputError("cannot read input: %s" % exc) from exc
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InputError("invalid JSON: %s" % exc) from exc


def _parse_matrix(data) -> SymmetricMatrix:
    try:
        matrix = Matrix.from_json(data)
    except (TypeError, ValueError) as exc:
        raise InputError("bad matrix: %s" % exc) from exc
    if not matrix.is_symmetric():
        raise InputError("matrix is not symmetric")
    return matrix.as_symmetric()


def _parse_config(data) -> PointConfiguration:
    _take(data, required=("form", "vectors"))
    try:
        return PointConfiguration.from_json(data)
    except (TypeError, ValueError) as exc:
        raise InputError("bad configuration: %s" % exc) from exc


def _parse_graph(data) -> Multigraph:
    _take(data, required=("m", "edges"))
    try:
        return Multigraph.from_json(data)
    except (TypeError, ValueError) as exc:
        raise InputError("bad graph: %s" % exc) from exc


def _parse_polynomial(data) -> GraphPolynomial:
    _take(data, required=("m", "terms"))
    try:
        return GraphPolynomial.from_json(data)
    except (TypeError, ValueError, KeyError) as exc:
        raise InputError("bad polynomial: %s" % exc) from exc


def _parse_lifted(data) -> LiftedPoint:
    _take(data, required=("coords",))
    try:
        return LiftedPoint.from_json(data)
    except (TypeError, ValueError) as exc:
        raise InputError("bad lifted point: %s" % exc) from exc


def _emit(obj: dict, pretty: bool) -> None:
    if pretty:
        text = json.dumps(obj, sort_keys=True, indent=2)
    else:
        text = json.dumps(obj, sort_keys=True, separators=(",", ":"))
    sys.stdout.write(text + "\n")


# -- commands ----------------------------------------------------------------


def _cmd_classify(args) -> tuple[dict, int]:
    data = _take(_read_input(args.input), optional=("gram", "config"))
    if ("gram" in data) == ("config" in data):
        raise InputError("give exactly one of 'gram' or 'config'")
    if "gram" in data:
        matrix = _parse_matrix(data["gram"])
    else:
        matrix = gram_matrix(_parse_config(data["config"]))
    verdict = classify(matrix, max_vertices=args.cap_m)
    code = {
        "stable": EXIT_OK,
        "strictly_semistable": EXIT_STRICTLY_SEMISTABLE,
        "unstable": EXIT_UNSTABLE,
    }[verdict.status]
    return verdict.to_json(), code


def _cmd_count(args) -> tuple[dict, int]:
    data = _take(_read_input(args.input), required=("m",), optional=("d",))
    m = _as_int(data["m"], "m")
    max_d = _as_int(data.get("d", 1), "d")
    if max_d < 1:
        raise InputError("d must be positive")
    classes = enumerate_determinantal_classes(m, max_vertices=args.cap_m)
    counts = determinantal_term_counts(m)
    lattice = {}
    for d in range(1, max_d + 1):
        lattice[str(d)] = len(
            enumerate_regular_multigraphs(m, 2 * d, max_vertices=args.cap_m)
        )
    return {
        "k": len(classes),
        "lattice_points": lattice,
        "gf_check": counts[m - 1] == len(classes),
    }, EXIT_OK


def _as_int(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError("'%s' must be an integer" % name)
    return value


def _cmd_sphere(args) -> tuple[dict, int]:
    data = _read_input(args.input)
    sub = args.subcommand
    if sub == "lift":
        _take(data, required=("sphere",))
        sphere = _sphere_from(data["sphere"])
        return lift(sphere).to_json(), EXIT_OK
    if sub == "unlift":
        _take(data, required=("point",))
        result = unlift(_parse_lifted(data["point"]))
        if result is AT_INFINITY:
            return {"at_infinity": True}, EXIT_OK
        return {"sphere": result.to_json()}, EXIT_OK
    if sub == "orthogonal":
        _take(data, required=("p", "q"))
        return {
            "orthogonal": are_orthogonal(_parse_lifted(data["p"]), _parse_lifted(data["q"]))
        }, EXIT_OK
    if sub == "tangent":
        _take(data, required=("p", "q"))
        return {
            "tangent": are_tangent(_parse_lifted(data["p"]), _parse_lifted(data["q"]))
        }, EXIT_OK
    if sub == "common-point":
        _take(data, required=("points",))
        points = [_parse_lifted(p) for p in data["points"]]
        try:
            check = common_point(points)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        return {
            "common_point": check.concurrent,
            "hyperplanes_dependent": check.hyperplanes_dependent,
        }, EXIT_OK
    if sub == "hyperbolic":
        _take(data, required=("p", "q"))
        try:
            result = hyperbolic_pair(_parse_lifted(data["p"]), _parse_lifted(data["q"]))
        except NormalizationError as exc:
            return {
                "kind": "not_normalizable",
                "self_pairing": scalar_to_str(exc.self_pairing),
            }, EXIT_OK
        return {"kind": result.kind, "value": scalar_to_str(result.value)}, EXIT_OK
    raise InputError("unknown sphere subcommand %r" % sub)


def _sphere_from(data) -> Sphere:
    _take(data, required=("n", "center", "radius_sq"))
    try:
        return Sphere.from_json(data)
    except (TypeError, ValueError) as exc:
        raise InputError("bad sphere: %s" % exc) from exc


def _cmd_invariants(args) -> tuple[dict, int]:
    data = _read_input(args.input)
    sub = args.subcommand
    if sub == "eval":
        _take(data, required=("matrix",), optional=("monomial", "polynomial"))
        if ("monomial" in data) == ("polynomial" in data):
            raise InputError("give exactly one of 'monomial' or 'polynomial'")
        matrix = _parse_matrix(data["matrix"])
        if "monomial" in data:
            value = eval_monomial(_parse_graph(data["monomial"]), matrix)
        else:
            value = _parse_polynomial(data["polynomial"]).evaluate(matrix)
        return {"value": scalar_to_str(value)}, EXIT_OK
    if sub == "det-basis":
        _take(data, required=("m",))
        poly = determinant_polynomial(_as_int(data["m"], "m"), max_vertices=args.cap_m)
        return {"polynomial": poly.to_json()}, EXIT_OK
    if sub == "kernel-test":
        _take(data, required=("polynomial", "n"), optional=("evaluate_at",))
        poly = _parse_polynomial(data["polynomial"])
        n = _as_int(data["n"], "n")
        if n < 0:
            raise InputError("n must be nonnegative")
        outcome = vanishes_on_low_rank(poly, n + 1, trials=args.trials, seed=args.seed)
        result = {
            "member": outcome.vanishes,
            "meta": {"seed": args.seed, "trials": args.trials},
        }
        if outcome.witness is not None:
            result["witness"] = outcome.witness.to_json()
        if "evaluate_at" in data:
            at = _parse_matrix(data["evaluate_at"])
            result["value_at"] = scalar_to_str(poly.evaluate(at))
        return result, EXIT_OK
    if sub == "factorize":
        _take(data, required=("graph",))
        graph = _parse_graph(data["graph"])
        try:
            parts = two_factorization(graph)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        return {"factors": [p.to_json() for p in parts]}, EXIT_OK
    raise InputError("unknown invariants subcommand %r" % sub)


def _cmd_reconstruct(args) -> tuple[dict, int]:
    data = _take(_read_input(args.input), required=("form", "x", "y"))
    try:
        form = _parse_matrix(data["form"])
        x = PointConfiguration.from_json({"form": data["form"], "vectors": data["x"]})
        y = PointConfiguration.from_json({"form": data["form"], "vectors": data["y"]})
    except (TypeError, ValueError) as exc:
        raise InputError("bad reconstruction input: %s" % exc) from exc
    del form
    try:
        result = recover_isometry(x, y)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if result is None:
        return {"isometry": None}, EXIT_OK
    return {"isometry": result.to_json()}, EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", default="-", help="input JSON path, or - for stdin")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized tests")
    common.add_argument("--trials", type=int, default=20, help="trials for randomized tests")
    common.add_argument("--cap-m", type=int, default=None, dest="cap_m",
                        help="override the enumeration size cap")
    common.add_argument("--pretty", action="store_true", help="indent the JSON output")
    parser = argparse.ArgumentParser(
        prog="orthogram",
        description="Exact stability, invariant and sphere-geometry computations.",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    commands.add_parser("classify", parents=[common],
                        help="stability verdict for a Gram matrix")
    commands.add_parser("count", parents=[common],
                        help="determinantal-term and lattice-point counts")
    sphere = commands.add_parser("sphere", parents=[common],
                                 help="sphere dictionary operations")
    sphere.add_argument(
        "subcommand",
        choices=["lift", "unlift", "orthogonal", "tangent", "common-point", "hyperbolic"],
    )
    invariants = commands.add_parser("invariants", parents=[common],
                                     help="graph-monomial invariants")
    invariants.add_argument(
        "subcommand", choices=["eval", "det-basis", "kernel-test", "factorize"]
    )
    commands.add_parser("reconstruct", parents=[common],
                        help="recover the isometry matching two configurations")
    return parser


_HANDLERS = {
    "classify": _cmd_classify,
    "count": _cmd_count,
    "sphere": _cmd_sphere,
    "invariants": _cmd_invariants,
    "reconstruct": _cmd_reconstruct,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        payload, code = _HANDLERS[args.command](args)
    except InputError as exc:
        _emit({"error": {"kind": "input", "message": str(exc)}}, args.pretty)
        return EXIT_INPUT
    except CapExceeded as exc:
        _emit({"error": {"kind": "cap", "message": str(exc)}}, args.pretty)
        return EXIT_CAP
    _emit(payload, args.pretty)
    return code


if __name__ == "__main__":
    sys.exit(main())
