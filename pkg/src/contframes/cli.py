"""Command line front end.

Exit codes: 0 success / property holds, 1 property fails, 2 malformed input,
3 capacity or generation failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

import numpy as np

from . import frame_analysis as an
from . import generators as gen
from .errors import CapacityError, FrameError, FrameInputError, GenerationError
from .io import read_family, write_family
from .operators import extension_equivalence_check
from .topology import (AuxMode, PathMode, auxiliary_family, build_path, certify_path,
                       density_perturb)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAPACITY = 0, 1, 2, 3


def _emit(args, plain_lines, payload):
    if args.format == "structured":
        print(json.dumps(payload, indent=2, sort_keys=True, default=_jsonable))
    else:
        for line in plain_lines:
            print(line)


def _jsonable(x):
    if isinstance(x, (np.floating, np.integer, np.bool_)):
        return x.item()
    if hasattr(x, "value"):
        return x.value
    raise TypeError(f"not serializable: {type(x).__name__}")


def _parse_vector(text: str) -> np.ndarray:
    try:
        return np.array([complex(part.strip().replace(" ", "")) for part in text.split(",")])
    except ValueError:
        raise FrameInputError(f"cannot parse test vector {text!r}") from None


def cmd_analyze(args):
    fam = read_family(args.file)
    v = an.analyze(fam, args.tol_frame, args.tol_parseval)
    lines = [
        f"family      {fam.label or args.file}",
        f"points      {v.points} (n = {v.n})",
        f"energy      {v.energy:.12g}  (tail bound {v.tail_bound:.3g})",
        f"bounds      A = {v.lower_bound:.12g}  B = {v.upper_bound:.12g}",
        f"det U       {v.det_U:.12g}",
        f"frame       {v.is_frame}  (lambda_min > {v.tol_frame:.3g})",
        f"parseval    {v.is_parseval}  (max |U - I| = {v.parseval_deviation:.3g} <= {v.tol_parseval:.3g})",
    ]
    if v.f2_holds is not None:
        lines.append(f"F^2 test    {v.f2_holds}  (guaranteed A = {v.guaranteed_A:.12g})")
    _emit(args, lines, v.as_dict())
    return EXIT_OK


def cmd_bounds(args):
    fam = read_family(args.file)
    A, B = an.frame_bounds(fam)
    _emit(args, [f"A={A:.10g} B={B:.10g}"], {"lower_bound": A, "upper_bound": B})
    return EXIT_OK


def cmd_check_parseval(args):
    fam = read_family(args.file)
    dev = an.parseval_deviation(fam)
    ok = an.is_parseval(fam, args.tol)
    _emit(args, [f"parseval={ok} max|U-I|={dev:.3e} tol={args.tol:.3e}"],
          {"is_parseval": ok, "parseval_deviation": dev, "tol_parseval": args.tol})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_quotient(args):
    fam = read_family(args.file)
    v = _parse_vector(args.vector)
    values = {form.value: an.quotient_N(v, fam, form) for form in an.QuotientForm}
    lines = [f"N({args.vector}) = {values['direct']:.12g}"] + [
        f"  {k:6s} {val:.15g}" for k, val in values.items()]
    _emit(args, lines, {"vector": args.vector, "quotient": values})
    return EXIT_OK


def cmd_extend_check(args):
    fam = read_family(args.file)
    rep = extension_equivalence_check(fam, args.trials, args.blocks, args.seed, args.tol)
    lines = [
        f"bounds A = {rep.lower_bound:.12g}  B = {rep.upper_bound:.12g}  frame = {rep.is_frame}",
        f"blocks {rep.blocks}, trials {rep.trials}, tol {rep.tolerance:.3g}",
        f"max bound violation      {rep.max_bound_violation:.3e}",
        f"max delta reduction err  {rep.max_delta_error:.3e}",
        f"max indicator err        {rep.max_indicator_error:.3e}",
        f"passed {rep.passed}",
    ]
    payload = dict(vars(rep), passed=rep.passed)
    _emit(args, lines, payload)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_path(args):
    u = read_family(args.u_file)
    v = read_family(args.v_file)
    path = build_path(u, v, PathMode(args.mode), seed=args.seed)
    cert = certify_path(path, args.samples, args.tol)
    tol_text = (f"{cert.tolerance:.3g} x max(1, lambda_max)" if cert.relative_tolerance
                else f"{cert.tolerance:.3g}")
    lines = [
        f"mode {cert.mode.value}, samples {cert.samples} per leg, tol {tol_text}",
        f"min lambda_min           {cert.min_lower_bound:.6g}",
        f"max |U(t) - I|           {cert.max_parseval_deviation:.3e}",
        f"passed {cert.passed}" + (f" (first failure on leg {cert.first_failure[0]} "
                                   f"at t = {cert.first_failure[1]:.4g})"
                                   if cert.first_failure else ""),
    ]
    payload = {
        "mode": cert.mode.value, "samples": cert.samples, "passed": cert.passed,
        "min_lower_bound": cert.min_lower_bound,
        "max_parseval_deviation": cert.max_parseval_deviation,
        "tolerance": cert.tolerance, "relative_tolerance": cert.relative_tolerance,
        "first_failure": cert.first_failure,
    }
    _emit(args, lines, payload)
    return EXIT_OK if cert.passed else EXIT_FAIL


def cmd_perturb(args):
    u = read_family(args.file)
    a = auxiliary_family(u, u.n, mode=AuxMode.INDEPENDENT, seed=args.seed)
    out = density_perturb(u, a, args.eps, seed=args.seed)
    write_family(out, args.output)
    diff = out.vectors - u.vectors
    dist = float(np.sqrt(np.sum(u.weights * np.sum(np.abs(diff) ** 2, axis=1))))
    A, _ = an.frame_bounds(out)
    tol = an.default_frame_tol(out)
    _emit(args, [f"wrote {args.output}: distance {dist:.3e} <= eps {args.eps:.3e}, "
                 f"lambda_min {A:.3e} > tol {tol:.3e}"],
          {"output": args.output, "distance": dist, "eps": args.eps,
           "lower_bound": A, "tol_frame": tol})
    return EXIT_OK


def cmd_generate(args):
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        if args.kind == "dirichlet":
            fam = gen.dirichlet_example(args.a, args.b, args.terms)
        elif args.kind == "circle":
            fam = gen.circle_frame(args.nodes, args.scale)
        elif args.kind == "mercedes":
            fam = gen.mercedes_benz(args.scale)
        else:
            fam = gen.random_family(args.points, args.dim, args.field, args.seed)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    write_family(fam, args.output)
    _emit(args, [f"wrote {args.output}: {fam.label} ({fam.size} points, n = {fam.n})"],
          {"output": args.output, "label": fam.label, "points": fam.size, "n": fam.n,
           "warnings": [str(w.message) for w in caught]})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("plain", "structured"), default="plain")

    p = argparse.ArgumentParser(prog="contframes", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("analyze", parents=[fmt], help="full frame diagnostics")
    s.add_argument("file")
    s.add_argument("--tol-frame", type=float, default=None)
    s.add_argument("--tol-parseval", type=float, default=an.DEFAULT_PARSEVAL_TOL)
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("bounds", parents=[fmt], help="optimal frame bounds")
    s.add_argument("file")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("check-parseval", parents=[fmt], help="exit 0 iff U = I within tol")
    s.add_argument("file")
    s.add_argument("--tol", type=float, default=an.DEFAULT_PARSEVAL_TOL)
    s.set_defaults(func=cmd_check_parseval)

    s = sub.add_parser("quotient", parents=[fmt], help="frame quotient of a test vector")
    s.add_argument("file")
    s.add_argument("--vector", required=True, help="comma separated, e.g. 1,0 or 1,1j")
    s.set_defaults(func=cmd_quotient)

    s = sub.add_parser("extend-check", parents=[fmt], help="extended-frame equivalence checks")
    s.add_argument("file")
    s.add_argument("--blocks", type=int, default=2)
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--tol", type=float, default=1e-10)
    s.set_defaults(func=cmd_extend_check)

    s = sub.add_parser("path", parents=[fmt], help="build and certify a path between two frames")
    s.add_argument("u_file")
    s.add_argument("v_file")
    s.add_argument("--mode", choices=("frame", "parseval"), default="frame")
    s.add_argument("--samples", type=int, default=21)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--tol", type=float, default=None)
    s.set_defaults(func=cmd_path)

    s = sub.add_parser("perturb", parents=[fmt], help="nearby frame within eps")
    s.add_argument("file")
    s.add_argument("--eps", type=float, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_perturb)

    s = sub.add_parser("generate", help="write a reference family")
    gsub = s.add_subparsers(dest="kind", required=True)
    g = gsub.add_parser("dirichlet", parents=[fmt])
    g.add_argument("--a", type=float, required=True)
    g.add_argument("--b", type=float, required=True)
    g.add_argument("--terms", type=int, default=100000)
    g = gsub.add_parser("circle", parents=[fmt])
    g.add_argument("--nodes", type=int, default=64)
    g.add_argument("--scale", type=float, default=1.0)
    g = gsub.add_parser("mercedes", parents=[fmt])
    g.add_argument("--scale", type=float, default=1.0)
    g = gsub.add_parser("random", parents=[fmt])
    g.add_argument("--points", type=int, required=True)
    g.add_argument("--dim", type=int, required=True)
    g.add_argument("--field", choices=("R", "C"), default="R")
    g.add_argument("--seed", type=int, default=0)
    for g in gsub.choices.values():
        g.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_generate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CapacityError, GenerationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except FrameError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
