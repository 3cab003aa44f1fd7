"""Command-line interface.

Subcommands cover validation, exact measures, bound checks, the randomized
inequality suite, region scans, copula sampling, the bound-curve data of
the tau-rho plane, and the maximal gap between the sharp bound and the
diagonal.  Functions are exchanged as JSON ``{"vertices": [[x, y], ...]}``;
delimited output is CSV with a header row, numbers printed with 17
significant digits for lossless round-trips.  Optional ``--fig`` flags
render matplotlib figures next to the CSV.

Exit codes: 0 success, 1 I/O or parse error, 2 validation failure,
3 invariant violation in ``lemmas``/``region``.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import measures, sampler, transforms, verification
from .errors import EvcopulaError, ValidationError
from .pickands import PiecewiseLinearPickands

EXIT_OK = 0
EXIT_IO = 1
EXIT_INVALID = 2
EXIT_VIOLATION = 3


class _Parser(argparse.ArgumentParser):
    # Unknown flags and malformed argv are I/O-class failures, not
    # validation failures: exit 1, not argparse's default 2.
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit_(EXIT_IO, message)


class SystemExit_(Exception):
    def __init__(self, code, message=""):
        super().__init__(message)
        self.code = code
        self.message = message


def _fmt(value: float) -> str:
    return format(value, ".17g")


def _load_function(spec: str) -> PiecewiseLinearPickands:
    """Parse a function from inline JSON or from a file path."""
    text = spec
    if not spec.lstrip().startswith("{"):
        try:
            with open(spec, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise SystemExit_(EXIT_IO, f"cannot read {spec}: {exc}")
    try:
        data = json.loads(text)
        vertices = data["vertices"]
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise SystemExit_(EXIT_IO, f"malformed function JSON: {exc}")
    try:
        return PiecewiseLinearPickands.validate(vertices)
    except EvcopulaError as exc:
        report = {"valid": False, "error": type(exc).__name__, "message": str(exc)}
        print(json.dumps(report))
        raise SystemExit_(EXIT_INVALID, "")


def _write_csv(path: str, header: list[str], rows):
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(",".join(header) + "\n")
            for row in rows:
                fh.write(",".join(_fmt(v) for v in row) + "\n")
    except OSError as exc:
        raise SystemExit_(EXIT_IO, f"cannot write {path}: {exc}")


def _measures_dict(A, resolution="exact"):
    return {"tau": measures.tau(A), "rho": measures.rho(A), "resolution": resolution}


def _bounds_dict(A):
    t, r = measures.tau(A), measures.rho(A)
    slack_sharp = r - measures.sharp_lower(t)
    slack_hl = r - measures.hl_lower(t)
    return {
        "tau": t,
        "rho": r,
        "slack_sharp": slack_sharp,
        "slack_hl": slack_hl,
        "satisfied": bool(
            slack_sharp >= -measures.BOUND_SLACK and slack_hl >= -measures.BOUND_SLACK
        ),
    }


# ----------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------
def _cmd_validate(args) -> int:
    A = _load_function(args.function)
    print(json.dumps({"valid": True, "vertices": [[x, y] for x, y in A.vertices]}))
    return EXIT_OK


def _cmd_measures(args) -> int:
    print(json.dumps(_measures_dict(_load_function(args.function))))
    return EXIT_OK


def _cmd_bounds(args) -> int:
    print(json.dumps(_bounds_dict(_load_function(args.function))))
    return EXIT_OK


def _cmd_triangular(args) -> int:
    try:
        A = transforms.triangular(args.x1, args.y1)
    except EvcopulaError as exc:
        print(json.dumps({"valid": False, "error": type(exc).__name__, "message": str(exc)}))
        return EXIT_INVALID
    out = _bounds_dict(A)
    out["vertices"] = [[x, y] for x, y in A.vertices]
    print(json.dumps(out))
    return EXIT_OK


def _cmd_lemmas(args) -> int:
    report = verification.lemma_suite(args.trials, args.seed)
    print(json.dumps(report.to_dict()))
    return EXIT_OK if report.ok else EXIT_VIOLATION


def _cmd_region(args) -> int:
    samples = verification.region_scan(args.count, args.max_vertices, args.seed)
    _write_csv(
        args.out,
        ["tau", "rho", "slack_sharp", "slack_hl"],
        ((s.tau, s.rho, s.slack_sharp, s.slack_hl) for s in samples),
    )
    if args.fig:
        from . import plotting

        plotting.plot_region(samples, args.fig)
    if not all(s.ok for s in samples):
        print(json.dumps({"ok": False, "violations": sum(not s.ok for s in samples)}))
        return EXIT_VIOLATION
    return EXIT_OK


def _cmd_figure_data(args) -> int:
    rows = []
    for i in range(1001):
        t = i / 1000.0
        lo, up, sharp = measures.bound_curves(t)
        # Independent trace of the single-vertex family at the same tau.
        tri = measures.rho(transforms.triangular(0.5, 1.0 / (1.0 + t)))
        rows.append((t, lo, up, sharp, tri))
    _write_csv(
        args.out,
        ["tau", "hl_lower", "hl_upper", "sharp_lower", "triangular_rho"],
        rows,
    )
    if args.fig:
        from . import plotting

        plotting.plot_bound_curves(args.fig)
    return EXIT_OK


def _cmd_sample(args) -> int:
    A = _load_function(args.function)
    pairs = sampler.sample(A, args.n, args.seed)
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            if not args.no_header:
                fh.write("u,v\n")
            for u, v in pairs:
                fh.write(f"{_fmt(u)},{_fmt(v)}\n")
    except OSError as exc:
        raise SystemExit_(EXIT_IO, f"cannot write {args.out}: {exc}")
    return EXIT_OK


def _cmd_gap(args) -> int:
    from scipy.optimize import minimize_scalar

    res = minimize_scalar(
        lambda t: -measures.gap_function(t), bounds=(0.0, 1.0), method="bounded",
        options={"xatol": 1e-12},
    )
    print(json.dumps({"argmax": float(res.x), "max": float(-res.fun)}))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="evcopula", description=__doc__.split("\n")[1])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a function file, exit 0/2")
    p.add_argument("function", help="path to JSON file or inline JSON")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("measures", help="exact Kendall tau and Spearman rho")
    p.add_argument("function")
    p.set_defaults(func=_cmd_measures)

    p = sub.add_parser("bounds", help="measures plus slack above both lower bounds")
    p.add_argument("function")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("triangular", help="single-vertex function from (x1, y1)")
    p.add_argument("--x1", type=float, required=True)
    p.add_argument("--y1", type=float, required=True)
    p.set_defaults(func=_cmd_triangular)

    p = sub.add_parser("lemmas", help="randomized insertion-inequality suite")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=_cmd_lemmas)

    p = sub.add_parser("region", help="scan the tau-rho region to CSV")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--max-vertices", type=int, default=16)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--fig", help="also render a scatter figure (PNG/PDF)")
    p.set_defaults(func=_cmd_region)

    p = sub.add_parser(
        "figure-data",
        help="bound curves on a 1001-point tau grid plus the single-vertex trace",
        description=(
            "Emits the two classical Hutchinson-Lai curves and the sharp "
            "lower bound, together with an independently computed trace of "
            "the single-vertex family.  The boundary of the tau-rho region "
            "of the full copula class is out of scope and not emitted."
        ),
    )
    p.add_argument("--out", required=True)
    p.add_argument("--fig", help="also render the curves (PNG/PDF)")
    p.set_defaults(func=_cmd_figure_data)

    p = sub.add_parser("sample", help="draw pairs from the copula to CSV")
    p.add_argument("function")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--no-header", action="store_true")
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("gap", help="argmax and max of 3*tau/(2+tau) - tau")
    p.set_defaults(func=_cmd_gap)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit_ as exc:
        if exc.message:
            print(exc.message, file=sys.stderr)
        return exc.code
    except EvcopulaError as exc:
        code = EXIT_INVALID if isinstance(exc, ValidationError) else EXIT_IO
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}))
        return code


if __name__ == "__main__":
    sys.exit(main())
