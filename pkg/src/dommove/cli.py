"""Command-line front end.

Exit codes: 0 success, 2 input/parse error, 3 unsupported dimension or
operation, 4 oracle budget exceeded.
"""

from __future__ import annotations

import argparse
import inspect
import json
import sys
from pathlib import Path

from . import __version__
from .compare import UnsupportedDimension, compare_sets, dominance_move
from .generators import GENERATORS
from .indicators import epsilon_additive, epsilon_multiplicative, hypervolume_2d
from .io import format_points, read_points, write_points
from .model import DimensionError, DomResult, SolutionSet, ValidationError
from .oracle import BudgetExceeded
from .pareto import nondominated_filter
from .svg import scatter_svg

SCHEMA = "dommove/1"

EXIT_INPUT = 2
EXIT_UNSUPPORTED = 3
EXIT_BUDGET = 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _num(v: float) -> str:
    return f"{v:.12g}"


def _point(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(t) for t in text.replace(" ", ",").split(",") if t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a point: {text!r}") from None


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _set_info(path: str, S: SolutionSet) -> dict:
    return {"path": path, "n": len(S), "dim": S.dim}


def _load_pair(args) -> tuple[SolutionSet, SolutionSet]:
    P = read_points(args.P, negate=args.negate)
    Q = read_points(args.Q, negate=args.negate)
    if P.dim != Q.dim:
        raise CliError(f"dimension mismatch: {args.P} has {P.dim} objectives, {args.Q} has {Q.dim}", EXIT_INPUT)
    return P, Q


def _partition_json(res: DomResult) -> list[dict]:
    return [{"anchor": g.anchor, "members": sorted(g.members), "move": g.move} for g in res.partition.groups]


def cmd_dom(args) -> None:
    P, Q = _load_pair(args)
    res = dominance_move(P, Q, oracle=args.oracle)
    method = "oracle" if args.oracle else "biobjective"
    if args.json:
        out = {
            "schema": SCHEMA,
            "command": "dom",
            "method": method,
            "P": _set_info(args.P, P),
            "Q": _set_info(args.Q, Q),
            "value": res.value,
            "partition": _partition_json(res),
        }
        if args.trace:
            out["trace"] = [{"left": e.left, "right": e.right, "ideal": list(e.ideal)} for e in res.trace]
        _emit_json(out)
        return
    print(_num(res.value))
    if args.trace:
        for e in res.trace:
            ideal = ", ".join(_num(v) for v in e.ideal)
            print(f"merge q{e.left} + q{e.right} -> ({ideal})")
        for g in res.partition.groups:
            members = " ".join(f"q{j}" for j in sorted(g.members))
            print(f"group p{g.anchor}: {members}  move={_num(g.move)}")


def cmd_eps(args) -> None:
    P, Q = _load_pair(args)
    fn = epsilon_multiplicative if args.multiplicative else epsilon_additive
    value = fn(P, Q)
    if args.json:
        _emit_json(
            {
                "schema": SCHEMA,
                "command": "eps",
                "kind": "multiplicative" if args.multiplicative else "additive",
                "P": _set_info(args.P, P),
                "Q": _set_info(args.Q, Q),
                "value": value,
            }
        )
    else:
        print(_num(value))


def cmd_hv(args) -> None:
    S = read_points(args.file, negate=args.negate)
    if S.dim != 2:
        raise CliError("hypervolume is only provided for two objectives", EXIT_UNSUPPORTED)
    if len(args.ref) != 2:
        raise CliError("--ref needs two coordinates", EXIT_INPUT)
    value = hypervolume_2d(S, args.ref)
    if args.json:
        _emit_json({"schema": SCHEMA, "command": "hv", "set": _set_info(args.file, S), "ref": list(args.ref), "value": value})
    else:
        print(_num(value))


def cmd_filter(args) -> None:
    S = read_points(args.file, negate=args.negate)
    F = nondominated_filter(S)
    if args.output:
        write_points(F, args.output)
    else:
        sys.stdout.write(format_points(F))


def cmd_compare(args) -> None:
    P, Q = _load_pair(args)
    if args.ref is not None and P.dim != 2:
        raise CliError("hypervolume (--ref) is only provided for two objectives", EXIT_UNSUPPORTED)
    if args.ref is not None and len(args.ref) != 2:
        raise CliError("--ref needs two coordinates", EXIT_INPUT)
    rep = compare_sets(P, Q, ref=args.ref, oracle=args.oracle)
    if args.json:
        out = {"schema": SCHEMA, "command": "compare", "P": _set_info(args.P, P), "Q": _set_info(args.Q, Q)}
        if args.ref is not None:
            out["ref"] = list(args.ref)
        out.update(rep.as_dict())
        _emit_json(out)
        return
    rows = [
        ("relation", rep.relation),
        ("D(P,Q)", _num(rep.dom_pq)),
        ("D(Q,P)", _num(rep.dom_qp)),
        ("eps(P,Q)", _num(rep.eps_pq)),
        ("eps(Q,P)", _num(rep.eps_qp)),
    ]
    if rep.hv_p is not None:
        rows += [("HV(P)", _num(rep.hv_p)), ("HV(Q)", _num(rep.hv_q))]
    for k, v in rows:
        print(f"{k:<10}{v}")


_GEN_PARAMS = {
    "convergence": ("points", "d1", "d2"),
    "uniformity": ("points", "mode", "seed"),
    "extensity": ("points", "shrink"),
    "cardinality": ("points", "extra", "seed"),
    "cardinality-count": ("points", "fewer"),
}


def cmd_gen(args) -> None:
    spec = GENERATORS.get(args.name)
    if spec is None:
        raise CliError(f"unknown generator {args.name!r}; choose from {', '.join(GENERATORS)}", EXIT_INPUT)
    given = {k: getattr(args, k) for k in _GEN_PARAMS[args.name] if getattr(args, k) is not None}
    bound = inspect.signature(spec.func).bind(**given)
    bound.apply_defaults()
    params = dict(bound.arguments)
    A, B = spec.func(**params)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    write_points(A, out / "A.txt", header=f"{args.name} pair, set A")
    write_points(B, out / "B.txt", header=f"{args.name} pair, set B")
    worse = "B" if spec.better == "A" else "A"
    meta = {
        "schema": SCHEMA,
        "generator": args.name,
        "parameters": params,
        "seed": params.get("seed"),
        "files": {"A": "A.txt", "B": "B.txt"},
        "expected": f"D({spec.better},{worse}) < D({worse},{spec.better})",
    }
    (out / "meta.json").write_text(json.dumps(meta, indent=2) + "\n")
    print(f"wrote {out / 'A.txt'} {out / 'B.txt'} {out / 'meta.json'}")


def cmd_plot(args) -> None:
    P, Q = _load_pair(args)
    if P.dim != 2:
        raise CliError("plots need two objectives", EXIT_UNSUPPORTED)
    Path(args.output).write_text(scatter_svg(P, Q))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dommove", description="Dominance move and related quality indicators.")
    parser.add_argument("-V", "--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def pair(p):
        p.add_argument("P", help="point file of the set that moves")
        p.add_argument("Q", help="point file of the set to cover")
        p.add_argument("--negate", action="store_true", help="negate all objectives (maximisation input)")

    p = sub.add_parser("dom", help="dominance move D(P,Q)")
    pair(p)
    p.add_argument("--oracle", action="store_true", help="exhaustive enumeration, any dimension")
    p.add_argument("--trace", action="store_true", help="print merge events and the partition")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_dom)

    p = sub.add_parser("oracle", help="alias for dom --oracle")
    pair(p)
    p.add_argument("--trace", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_dom, oracle=True)

    p = sub.add_parser("eps", help="epsilon indicator I(P,Q)")
    pair(p)
    p.add_argument("--multiplicative", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_eps)

    p = sub.add_parser("hv", help="2-D hypervolume of a set")
    p.add_argument("file")
    p.add_argument("--ref", type=_point, required=True, help="reference point, e.g. 1,1")
    p.add_argument("--negate", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_hv)

    p = sub.add_parser("filter", help="keep the nondominated points of a set")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.add_argument("--negate", action="store_true")
    p.set_defaults(func=cmd_filter)

    p = sub.add_parser("compare", help="relation, DoM, epsilon and HV for a pair")
    pair(p)
    p.add_argument("--ref", type=_point, help="reference point for hypervolume")
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("gen", help="write an artificial test pair")
    p.add_argument("name", help=", ".join(GENERATORS))
    p.add_argument("--out", default=".", help="output directory")
    p.add_argument("--points", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--d1", type=float)
    p.add_argument("--d2", type=float)
    p.add_argument("--mode", choices=("random", "graded"))
    p.add_argument("--shrink", type=float)
    p.add_argument("--extra", type=int)
    p.add_argument("--fewer", type=int)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("plot", help="SVG scatter of two 2-D sets")
    pair(p)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except CliError as exc:
        print(f"dommove: {exc}", file=sys.stderr)
        return exc.code
    except UnsupportedDimension as exc:
        print(f"dommove: {exc} (pass --oracle)", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except BudgetExceeded as exc:
        print(f"dommove: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except DimensionError as exc:
        print(f"dommove: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValidationError as exc:
        # ParseError and friends
        print(f"dommove: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return 0


if __name__ == "__main__":
    sys.exit(main())
