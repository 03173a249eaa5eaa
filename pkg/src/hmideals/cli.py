"""Command-line front end: tables on stdout, JSON with --json.

Exit codes: 0 success, 2 malformed input, 3 cutoff exceeded.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from fractions import Fraction

from .errors import CutoffExceededError, HypothesisError
from .graded import (
    StrataData,
    containment_threshold,
    gdim_ordinary,
    hodge_cyclic_eigenspace,
    hodge_prim_hypersurface,
    independent_conditions_degree,
    nontriviality_data,
    symbolic_power_exponent,
)
from .monomial import format_monomial, var_names
from .rat import fmt_rat, parse_rat
from .resolution import (
    ResolutionData,
    builtin_family,
    lct,
    max_weight_level,
    min_exponent_bounds,
    minimal_lc_center,
)
from .constructors import (
    spectrum_diagonal,
    spectrum_one_var,
    spectrum_ordinary_fermat,
    spectrum_thom_sebastiani,
)


def _parse_params(text: str):
    return [int(p) for p in text.split(",") if p.strip()]


def _first_jump_estimate(klass: str, params) -> Fraction:
    if klass in ("diagonal", "ts"):
        return sum(Fraction(1, m) for m in params)
    if klass == "power":
        return Fraction(1, params[0])
    if klass == "fermat-cone":
        return Fraction(params[0], params[1])
    raise ValueError(f"unknown spectrum class {klass!r}")


def build_spectrum(klass: str, params, cutoff=None):
    """Construct the spectrum named on the command line.

    Default cutoff is the first jump plus 3.
    """
    if cutoff is None:
        cutoff = _first_jump_estimate(klass, params) + 3
    if klass == "diagonal":
        return spectrum_diagonal(params, cutoff)
    if klass == "power":
        (m,) = params
        return spectrum_one_var(m, cutoff)
    if klass == "fermat-cone":
        n, m = params
        return spectrum_ordinary_fermat(n, m, cutoff)
    if klass == "ts":
        if len(params) < 2:
            raise ValueError("ts needs at least two one-variable powers")
        spect = spectrum_one_var(params[0], cutoff + 1)
        for m in params[1:-1]:
            spect = spectrum_thom_sebastiani(spect, spectrum_one_var(m, cutoff + 1), cutoff + 1)
        return spectrum_thom_sebastiani(spect, spectrum_one_var(params[-1], cutoff + 1), cutoff)
    raise ValueError(f"unknown spectrum class {klass!r}")


def _ideal_str(ideal) -> str:
    names = var_names(ideal.n)
    if ideal.is_zero():
        return "(0)"
    return ", ".join(format_monomial(g, names) for g in reversed(ideal.gens))


def cmd_spectrum(args, out):
    spect = build_spectrum(args.klass, _parse_params(args.params), args.cutoff)
    if args.json:
        json.dump(spect.to_json(), out, indent=2)
        out.write("\n")
        return 0
    out.write(f"cutoff: {fmt_rat(spect.cutoff)}\n")
    out.write("beta | minimal generators\n")
    for beta, ideal in spect.jumps:
        out.write(f"{fmt_rat(beta)} | {_ideal_str(ideal)}\n")
    return 0


def cmd_ideal(args, out):
    params = _parse_params(args.params)
    alpha = parse_rat(args.alpha)
    cutoff = args.cutoff
    if cutoff is None:
        t = max(0, math.ceil(-alpha) - 1)
        cutoff = _first_jump_estimate(args.klass, params) + 3 + args.k + t
    spect = build_spectrum(args.klass, params, cutoff)
    if alpha >= -1:
        hmi = spect.hmi(args.k, alpha)
        f_power = 0
    else:
        f_exps = None
        if args.klass == "power":
            f_exps = (params[0],)
        twisted = spect.hmi_twisted(args.k, alpha, f_exps)
        hmi, f_power = twisted.ideal, twisted.f_power
    if args.json:
        json.dump({"f_power": f_power, "ideal": hmi.to_json()}, out, indent=2)
        out.write("\n")
        return 0
    prefix = f"f^{f_power} * " if f_power else ""
    out.write(prefix + _ideal_str(hmi) + "\n")
    return 0


def cmd_gdim(args, out):
    value = gdim_ordinary(args.n, args.m, args.k, parse_rat(args.alpha))
    out.write(f"{value}\n")
    return 0


def cmd_hodge(args, out):
    n = args.ambient_dim + 1  # variable count of the cone
    if args.eigen is not None:
        match = re.fullmatch(r"(\d+)/(\d+)", args.eigen)
        if not match or int(match.group(2)) != args.degree:
            raise ValueError("--eigen must be p/m with m the degree")
        value = hodge_cyclic_eigenspace(n, args.degree, args.level, int(match.group(1)))
    else:
        value = hodge_prim_hypersurface(n, args.degree, args.level)
    out.write(f"{value}\n")
    return 0


def cmd_criteria(args, out):
    if args.which == "nontriviality":
        rec = nontriviality_data(args.n, args.d, args.m)
        rec = {"k": rec["k"], "r": rec["r"], "alpha": fmt_rat(rec["alpha"])}
    elif args.which == "symbolic-power":
        rec = {
            "p": symbolic_power_exponent(args.codim, args.m, args.level, parse_rat(args.alpha))
        }
    elif args.which == "threshold":
        rec = {"threshold": fmt_rat(containment_threshold(args.codim, args.m))}
    else:  # indep-conditions
        rec = {"degree": independent_conditions_degree(args.n, args.m, args.d)}
    if args.json:
        json.dump(rec, out, indent=2)
        out.write("\n")
    else:
        for key, value in rec.items():
            out.write(f"{key}: {value}\n")
    return 0


_BUILTIN_RE = re.compile(r"(\w+)(?:\((\d*)\))?$")


def _load_resolution(args):
    if args.builtin:
        match = _BUILTIN_RE.fullmatch(args.builtin)
        if not match:
            raise ValueError(f"malformed builtin {args.builtin!r}")
        name = match.group(1)
        params = [int(match.group(2))] if match.group(2) else []
        fam = builtin_family(name, *params)
        return fam["resolution"], fam["strata"], fam["expected_min_exponent"]
    res = ResolutionData.load(args.file)
    strata = None
    if args.strata:
        pairs = [tuple(int(x) for x in p.split(":")) for p in args.strata.split(",")]
        strata = StrataData(tuple(pairs))
    return res, strata, None


def cmd_resolution(args, out):
    res, strata, expected = _load_resolution(args)
    if args.action == "lct":
        rec = {"lct": fmt_rat(lct(res))}
    elif args.action == "bounds":
        if strata is None:
            raise ValueError("bounds needs stratum data (--strata or a builtin)")
        b = min_exponent_bounds(res, strata)
        rec = {"lower": fmt_rat(b["lower"]), "upper": fmt_rat(b["upper"])}
        if expected is not None:
            rec["expected"] = fmt_rat(expected)
    elif args.action == "weight-level":
        rec = {"level": max_weight_level(res, parse_rat(args.alpha))}
    else:  # lc-center
        centers = minimal_lc_center(res)
        rec = {
            "centers": sorted(
                sorted(res.components[i].label for i in j) for j in centers
            )
        }
    if args.json:
        json.dump(rec, out, indent=2)
        out.write("\n")
    else:
        for key, value in rec.items():
            out.write(f"{key}: {value}\n")
    return 0


def cmd_bs_classes(args, out):
    spect = build_spectrum(args.klass, _parse_params(args.params), args.cutoff)
    classes = sorted(spect.bs_root_classes())
    if args.json:
        json.dump([fmt_rat(c) for c in classes], out)
        out.write("\n")
    else:
        out.write(", ".join(fmt_rat(c) for c in classes) + "\n")
    return 0


def _rat_arg(text):
    try:
        return parse_rat(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hmideals",
        description="Exact invariants of hypersurface singularities with "
        "closed-form filtration data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def spectrum_flags(p, cutoff_required=False):
        p.add_argument("--class", dest="klass", required=True,
                       choices=["diagonal", "fermat-cone", "ts", "power"])
        p.add_argument("--params", required=True,
                       help="comma-separated integers, e.g. 2,3")
        p.add_argument("--cutoff", type=_rat_arg, default=None,
                       help='rational "p/q"; default: first jump + 3')
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("spectrum", help="jump table of a filtration spectrum")
    spectrum_flags(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("ideal", help="one two-index ideal, with f-power twist")
    spectrum_flags(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--alpha", required=True, help='rational "p/q", e.g. -1/2')
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("gdim", help="graded-piece dimension at an ordinary point")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--alpha", required=True)
    p.set_defaults(func=cmd_gdim)

    p = sub.add_parser("hodge", help="primitive Hodge numbers via the residue grading")
    p.add_argument("--ambient-dim", type=int, required=True,
                   help="projective dimension of the ambient space")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--eigen", default=None, help="p/m for the cyclic-cover eigenspace")
    p.set_defaults(func=cmd_hodge)

    p = sub.add_parser("criteria", help="numerical criteria arithmetic")
    which = p.add_subparsers(dest="which", required=True)
    q = which.add_parser("nontriviality")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q = which.add_parser("symbolic-power")
    q.add_argument("--codim", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--level", type=int, required=True)
    q.add_argument("--alpha", required=True)
    q = which.add_parser("threshold")
    q.add_argument("--codim", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q = which.add_parser("indep-conditions")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--d", type=int, required=True)
    for q in which.choices.values():
        q.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_criteria)

    p = sub.add_parser("resolution", help="log-resolution combinatorics")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--file", help="JSON resolution data")
    src.add_argument("--builtin", help="family name, e.g. hyperelliptic_theta(5)")
    p.add_argument("action", choices=["lct", "bounds", "weight-level", "lc-center"])
    p.add_argument("--alpha", default=None, help="index for weight-level")
    p.add_argument("--strata", default=None, help='m:codim pairs, e.g. "2:3,3:5"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_resolution)

    p = sub.add_parser("bs-classes", help="Bernstein-Sato root classes mod Z")
    spectrum_flags(p)
    p.set_defaults(func=cmd_bs_classes)

    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args, out)
    except CutoffExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, HypothesisError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
