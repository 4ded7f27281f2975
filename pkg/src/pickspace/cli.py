"""Command line front end.

    pickspace classify FILE [--json]
    pickspace gen --geodesic --n 4 --seed 7 | pickspace classify -

Exit status: 0 on success, 2 on invalid input, 3 on numerical failure.
Indices (``--base``) are 0-based.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import io
from .classify import CRITERIA, classify_gram, classify_points, dual_membership_probe
from .conjugation import r_orthogonality_witness
from .errors import NumericalError, ValidationError
from .gram import Tolerances, as_gram, delta_matrix, dual_gram
from .hyperbolic import as_points, congruent_sets, in_single_geodesic
from .multipliers import complement, delta_product, extremal_vanishing_multiplier
from .pick import as_zeros, da_gram, model_gram, realize_in_ball
from .sampling import random_generic_set, random_geodesic_set

EXIT_OK, EXIT_INVALID, EXIT_NUMERICAL = 0, 2, 3
ENV_TOL = "PICKSPACE_TOL"


def _fmt(x):
    if isinstance(x, complex | np.complexfloating):
        if x.imag == 0:
            return _fmt(x.real)
        return f"{x.real:.12g}{x.imag:+.12g}j"
    return f"{x:.12g}"


def _fmt_matrix(a):
    return "\n".join("  " + "  ".join(_fmt(v) for v in row) for row in np.asarray(a))


def resolve_tolerances(args, document_tol=None):
    """Defaults, then the input document, then ``PICKSPACE_TOL``, then flags."""
    values = {}
    values.update(document_tol or {})
    env = os.environ.get(ENV_TOL)
    if env:
        try:
            v = float(env)
        except ValueError:
            raise ValidationError(f"{ENV_TOL}={env!r} is not a number") from None
        values.update(psd_tol=v, rankone_tol=v, match_tol=v)
    for name in ("psd", "rankone", "match"):
        flag = getattr(args, f"tol_{name}", None)
        if flag is not None:
            values[f"{name}_tol"] = flag
    return Tolerances(**values)


def _read(path):
    if path == "-":
        return sys.stdin.read(), "<stdin>"
    try:
        with open(path) as fh:
            return fh.read(), path
    except OSError as exc:
        raise ValidationError(f"{path}: {exc.strerror}") from None


def _load(path):
    text, source = _read(path)
    return io.parse_document(text, source)


def _gram_of(doc, tol):
    if doc.kind is io.Kind.POINTS:
        return da_gram(doc.payload, tol)
    if doc.kind is io.Kind.BLASCHKE:
        return model_gram(doc.payload, tol)
    return as_gram(doc.payload, tol)


def _points_of(doc, tol):
    if doc.kind is io.Kind.POINTS:
        return as_points(doc.payload, tol)
    if doc.kind is io.Kind.BLASCHKE:
        return as_zeros(doc.payload, tol)[:, None]
    return realize_in_ball(as_gram(doc.payload, tol), tol).points


# each command returns (result dict, human-readable text)

def cmd_classify(doc, tol, args):
    if doc.kind is io.Kind.GRAM:
        report = classify_gram(doc.payload, tol)
    else:
        report = classify_points(_points_of(doc, tol), tol)
    lines = []
    for name in CRITERIA:
        r = getattr(report, name)
        stat = "-" if r.statistic is None else _fmt(r.statistic)
        flag = "  (borderline)" if r.borderline else ""
        lines.append(f"{name:<22}{r.status.value:<16}statistic {stat}{flag}")
    lines.append(f"consistent            {str(report.consistent).lower()}")
    lines.append(f"is_model_space        {str(report.is_model_space).lower()}")
    return report.to_dict(), "\n".join(lines)


def cmd_delta(doc, tol, args):
    d = delta_matrix(_gram_of(doc, tol))
    return {"delta": d}, "delta matrix:\n" + _fmt_matrix(d)


def cmd_dual(doc, tol, args):
    d = dual_gram(_gram_of(doc, tol), tol)
    return {"n": len(d), "entries": d}, "dual Gram:\n" + _fmt_matrix(d)


def cmd_orthogonalize(doc, tol, args):
    g = _gram_of(doc, tol)
    rep = r_orthogonality_witness(g, tol)
    if rep.witness is None:
        lam = rescaled = None
    else:
        lam = rep.witness.lambdas
        rescaled = rep.witness.unapply(g)
    result = {"verdict": rep.verdict, "ratio": rep.ratio, "residual": rep.residual,
              "lambdas": lam, "rescaled": rescaled}
    text = [f"verdict   {rep.verdict.value}", f"ratio     {_fmt(rep.ratio)}"]
    if lam is not None:
        text += [f"residual  {_fmt(rep.residual)}",
                 "lambdas   " + "  ".join(_fmt(v) for v in lam),
                 "rescaled Gram:", _fmt_matrix(rescaled)]
    return result, "\n".join(text)


def cmd_extremal(doc, tol, args):
    g = _gram_of(doc, tol)
    base = args.base
    if not 0 <= base < len(g):
        raise ValidationError(f"--base {base} out of range for n = {len(g)}")
    sol = extremal_vanishing_multiplier(g, base, complement(len(g), base), tol)
    prod = delta_product(g, base)
    result = {"base": base, "value": sol.value, "indices": sol.indices,
              "multiplier": sol.multiplier, "h": sol.h,
              "delta_product": prod, "excess": sol.value - prod}
    text = (f"base            {base}\nextremal value  {_fmt(sol.value)}\n"
            f"delta product   {_fmt(prod)}\nexcess          {_fmt(sol.value - prod)}")
    return result, text


def cmd_geodesic(doc, tol, args):
    res = in_single_geodesic(_points_of(doc, tol), tol)
    result = {"in_single_geodesic": res.holds, "ratio": res.ratio, "direction": res.direction}
    text = f"in_single_geodesic  {str(res.holds).lower()}\nratio               {_fmt(res.ratio)}"
    if res.direction is not None:
        text += "\ndirection           " + "  ".join(_fmt(v) for v in res.direction)
    return result, text


def cmd_congruent(doc, tol, args):
    other = _load(args.other)
    same = congruent_sets(_points_of(doc, tol), _points_of(other, tol), tol)
    return {"congruent": same}, f"congruent  {str(same).lower()}"


def cmd_realize(doc, tol, args):
    real = realize_in_ball(_gram_of(doc, tol), tol)
    result = {"m": real.points.shape[1], "points": real.points,
              "lambdas": real.witness.lambdas, "residual": real.witness.residual}
    text = (f"m         {real.points.shape[1]}\npoints:\n{_fmt_matrix(real.points)}\n"
            f"lambdas   " + "  ".join(_fmt(v) for v in real.witness.lambdas)
            + f"\nresidual  {_fmt(real.witness.residual)}")
    return result, text


def cmd_probe_dual(doc, tol, args):
    probe = dual_membership_probe(_gram_of(doc, tol), tol)
    text = (f"dual_in_F  {str(probe.dual_in_F).lower()}\n"
            f"dual_in_M  {str(probe.dual_in_M).lower()}")
    return probe.to_dict(), text


COMMANDS = {
    "classify": (cmd_classify, "evaluate the six model-space criteria"),
    "delta": (cmd_delta, "matrix of kernel distances delta(i, j)"),
    "dual": (cmd_dual, "Gram matrix of the dual basis"),
    "orthogonalize": (cmd_orthogonalize, "r-orthogonality witness and rescaled Gram"),
    "extremal": (cmd_extremal, "extremal vanishing multiplier at a base index"),
    "geodesic": (cmd_geodesic, "complex geodesic membership of a point set"),
    "congruent": (cmd_congruent, "whether two point sets are congruent"),
    "realize": (cmd_realize, "realize a complete Pick Gram as ball points"),
    "probe-dual": (cmd_probe_dual, "complete Pick / model membership of the dual space"),
}


def cmd_gen(args):
    rng = np.random.default_rng(args.seed)
    if args.generic:
        tol = resolve_tolerances(args)
        points = random_generic_set(args.n, args.m, rng, margin=10 * tol.rankone_tol)
    else:
        points = random_geodesic_set(args.n, args.m, rng)
    return json.dumps(io.points_document(points))


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a single JSON document")
    common.add_argument("--tol-psd", type=float, default=None)
    common.add_argument("--tol-rankone", type=float, default=None)
    common.add_argument("--tol-match", type=float, default=None)

    parser = argparse.ArgumentParser(
        prog="pickspace", description="Model spaces among finite complete Pick spaces.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("file", nargs="?", default="-", help="input JSON file, '-' for stdin")
        if name == "extremal":
            p.add_argument("--base", type=int, default=0, help="base index (0-based)")
        if name == "congruent":
            p.add_argument("other", help="second point set file")

    gen = sub.add_parser("gen", parents=[common], help="reproducible random point sets")
    kind = gen.add_mutually_exclusive_group(required=True)
    kind.add_argument("--geodesic", action="store_true")
    kind.add_argument("--generic", action="store_true")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--m", type=int, default=2)
    gen.add_argument("--seed", type=int, default=0)
    return parser


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        if args.command == "gen":
            if args.n < 1 or args.m < 1:
                raise ValidationError("--n and --m must be positive")
            try:
                print(cmd_gen(args), file=stdout)
            except ValueError as exc:
                raise ValidationError(str(exc)) from None
            return EXIT_OK
        func = COMMANDS[args.command][0]
        doc = _load(args.file)
        tol = resolve_tolerances(args, doc.tolerances)
        result, text = func(doc, tol, args)
    except ValidationError as exc:
        print(f"pickspace: error: {exc}", file=stderr)
        return EXIT_INVALID
    except NumericalError as exc:
        print(f"pickspace: numerical failure: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_NUMERICAL

    if args.json:
        out = {
            "command": args.command,
            "input_kind": doc.kind.value,
            "tolerances": {"psd_tol": tol.psd_tol, "rankone_tol": tol.rankone_tol,
                           "match_tol": tol.match_tol},
            "result": io.to_jsonable(result),
        }
        print(json.dumps(out, indent=2), file=stdout)
    else:
        print(text, file=stdout)
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
