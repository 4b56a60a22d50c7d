"""``padebary`` command line tool.

Exit codes: 0 success, 2 numerical failure (singular system, repeated
nodes, vanishing denominator), 3 invalid input.
"""

from __future__ import annotations

import argparse
import ast
import json
import math
import operator
import sys

import numpy as np

from . import experiments as ex
from . import series as fps
from .barycentric import bpa_form1, bpa_form2, bpta_form1, bpta_form2, interpolatory_form1
from .errors import InvalidInput, NumericalFailure, PadeError
from .formats import (
    approximant_to_dict,
    load_approximant,
    load_series,
    save_approximant,
    save_series,
    series_from_dict,
    series_to_dict,
)
from .pade_core import pade, pade_type
from .prony import pfpa
from .series import FormalPowerSeries, contact_order

EXIT_NUMERICAL = 2
EXIT_INVALID = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


_OPS = {
    ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
    ast.Div: operator.truediv, ast.Pow: operator.pow,
    ast.USub: operator.neg, ast.UAdd: operator.pos,
}
_NAMES = {"pi": math.pi, "j": 1j, "i": 1j}


def _eval_number(node):
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float, complex)):
        return node.value
    if isinstance(node, ast.Name) and node.id in _NAMES:
        return _NAMES[node.id]
    if isinstance(node, ast.BinOp) and type(node.op) in _OPS:
        return _OPS[type(node.op)](_eval_number(node.left), _eval_number(node.right))
    if isinstance(node, ast.UnaryOp) and type(node.op) in _OPS:
        return _OPS[type(node.op)](_eval_number(node.operand))
    raise ValueError


def parse_number(text: str) -> complex:
    """Parse ``2``, ``-0.5+1j``, ``3*pi/8`` and the like."""
    try:
        return complex(_eval_number(ast.parse(text.strip(), mode="eval").body))
    except (SyntaxError, ValueError, TypeError, ZeroDivisionError):
        raise InvalidInput(f"cannot parse number {text!r}") from None


def parse_numbers(text):
    if text is None:
        return None
    return np.array([parse_number(tok) for tok in text.split(",") if tok.strip()], dtype=complex)


def parse_seeds(text: str):
    """``"1,2,5"`` or a half-open range ``"0:20"``."""
    try:
        if ":" in text:
            lo, hi = (int(x) for x in text.split(":"))
            seeds = list(range(lo, hi))
        else:
            seeds = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InvalidInput(f"bad seed list {text!r}") from None
    if not seeds:
        raise InvalidInput("need at least one seed")
    return seeds


def _emit_text(text, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


# -- gen ---------------------------------------------------------------------

def _read_coeff_file(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        return [parse_number(t) for t in text.replace(",", " ").split()]
    if isinstance(obj, list):
        obj = {"coeffs": obj}
    return series_from_dict(obj).coeffs


def cmd_gen(args):
    N = args.order
    if N is None or N < 0:
        raise InvalidInput("--order N >= 0 is required")
    fn = args.function
    if fn == "tan-over-t":
        s = fps.tan_over_t_series(args.omega, N)
    elif fn == "log1p-over-t":
        s = fps.log1p_over_t_series(N)
    elif fn == "exp":
        s = fps.exp_series(N)
    elif fn == "geometric":
        s = fps.geometric_series(parse_number(args.r), N)
    elif fn == "file":
        if not args.input:
            raise InvalidInput("function 'file' needs --input PATH")
        s = FormalPowerSeries(_read_coeff_file(args.input)).truncate(N)
    else:
        raise InvalidInput(f"unknown function {fn!r}")
    if args.out:
        save_series(s, args.out)
    else:
        sys.stdout.write(json.dumps(series_to_dict(s)) + "\n")


# -- approx ------------------------------------------------------------------

def _need(value, flag, kind):
    if value is None:
        raise InvalidInput(f"--kind {kind} needs {flag}")
    return value


def build_approximant(kind, c: FormalPowerSeries, args):
    """Dispatch to the constructor for `kind`; returns (approximant, contracted order)."""
    poles = parse_numbers(args.poles)
    zeros = parse_numbers(args.zeros)
    b = parse_numbers(args.b)
    if kind == "pade":
        p, q = _need(args.p, "--p", kind), _need(args.q, "--q", kind)
        c.require(p + q, f"[{p}/{q}] Padé")
        return pade(c, p, q), p + q + 1
    if kind == "pta":
        p = _need(args.p, "--p", kind)
        b = _need(b, "--b", kind)
        return pade_type(c, b, p), p + 1
    if kind in ("bpa1", "bpa2", "bpta1", "bpta2"):
        poles = _need(poles, "--poles", kind)
        zeros = _need(zeros, "--zeros", kind)
        p, q = len(poles) - 1, len(zeros) - 1
        if args.p is not None and args.p != p or args.q is not None and args.q != q:
            raise InvalidInput(f"--p/--q disagree with the node counts ({p}, {q})")
        if kind.startswith("bpa"):
            c.require(p + q, f"barycentric [{p}/{q}]")
            build = bpa_form1 if kind == "bpa1" else bpa_form2
            return build(c, poles, zeros), p + q + 1
        weights = b if b is not None else parse_numbers(args.weights)
        weights = _need(weights, "--b", kind)
        build = bpta_form1 if kind == "bpta1" else bpta_form2
        return build(c, weights, poles, zeros), p + 1
    if kind == "pfpa":
        k = _need(args.k, "--k", kind)
        c.require(2 * k + 1, f"[{k}/{k + 1}] partial fraction")
        return pfpa(c, k), 2 * k + 2
    if kind == "interp1":
        poles = _need(poles, "--poles", kind)
        values = _need(parse_numbers(args.values), "--values", kind)
        weights = _need(parse_numbers(args.weights), "--weights", kind)
        return interpolatory_form1(poles, values, weights), 0
    raise InvalidInput(f"unknown kind {kind!r}")


def cmd_approx(args):
    c = load_series(args.series)
    R, contracted = build_approximant(args.kind, c, args)
    achieved = contact_order(R.expand(c.order), c)
    if args.out:
        save_approximant(R, args.out)
    else:
        sys.stdout.write(json.dumps(approximant_to_dict(R)) + "\n")
    print(f"contact order: {achieved} (contracted {contracted}, series order {c.order})",
          file=sys.stderr if not args.out else sys.stdout)
    if achieved < min(contracted, len(c)):
        raise NumericalFailure(f"achieved contact order {achieved} below contracted {contracted}")


# -- eval / expand -----------------------------------------------------------

def cmd_eval(args):
    grid = ex.parse_grid(args.grid)
    ref = ex.reference_function(args.ref)
    R = load_approximant(args.approx)
    rep = ex.make_report(R, grid, ref)
    if args.out in (None, "-"):
        ex.write_report_csv(rep, sys.stdout)
    else:
        with open(args.out, "w", newline="") as fh:
            ex.write_report_csv(rep, fh)


def cmd_expand(args):
    if args.order is None or args.order < 0:
        raise InvalidInput("--order N >= 0 is required")
    R = load_approximant(args.approx)
    d = R.expand(args.order)
    lines = ["k,re,im"] + [f"{k},{ex.fmt(v.real)},{ex.fmt(v.imag)}" for k, v in enumerate(d.coeffs)]
    _emit_text("\n".join(lines) + "\n", args.out)


# -- experiments -------------------------------------------------------------

def cmd_perturb(args):
    if args.eps < 0:
        raise InvalidInput("--eps must be >= 0")
    seeds = parse_seeds(args.seed)
    grid = ex.parse_grid(args.grid)
    results = ex.perturbation_study(args.eps, seeds, grid=grid)
    if args.out in (None, "-"):
        ex.write_perturbation_csv(results, sys.stdout, args.eps)
    else:
        with open(args.out, "w", newline="") as fh:
            ex.write_perturbation_csv(results, fh, args.eps)
        for name, lo, hi, med in ex.summarize(results):
            print(f"{name}: errors in [{lo:.4e}, {hi:.4e}], median max {med:.4e}")
        for name, (lo, hi) in ex.REFERENCE_INTERVALS.items():
            print(f"reference {name}: [{lo:.4e}, {hi:.4e}]")
    bad = [r for r in results if r.status != "ok"]
    if bad:
        raise NumericalFailure(f"{len(bad)} of {len(results)} seed/method runs failed")


def cmd_reproduce(args):
    for path in ex.reproduce(args.example, args.out, seed=args.seed, eps=args.eps):
        print(path)


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="padebary", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="write the coefficients of a test series as JSON")
    g.add_argument("function", choices=["tan-over-t", "log1p-over-t", "exp", "geometric", "file"])
    g.add_argument("--order", "-N", type=int, help="truncation order N (coefficients c_0..c_N)")
    g.add_argument("--omega", type=float, default=ex.OMEGA, help="frequency for tan-over-t (default 4)")
    g.add_argument("--r", default="2", help="ratio for geometric (default 2)")
    g.add_argument("--input", help="coefficient file for 'file' (JSON list or whitespace separated)")
    g.add_argument("--out", help="output path (default stdout)")
    g.set_defaults(func=cmd_gen)

    a = sub.add_parser("approx", help="build an approximant from a series JSON")
    a.add_argument("--kind", required=True,
                   choices=["pade", "pta", "bpa1", "bpa2", "bpta1", "bpta2", "pfpa", "interp1"])
    a.add_argument("--series", required=True)
    a.add_argument("--p", type=int)
    a.add_argument("--q", type=int)
    a.add_argument("--k", type=int)
    a.add_argument("--poles", help="comma separated pole nodes, e.g. --poles=pi/8,-pi/8")
    a.add_argument("--zeros", help="comma separated zero nodes")
    a.add_argument("--b", help="denominator coefficients (pta) or weights (bpta)")
    a.add_argument("--weights", help="interpolation weights (interp1)")
    a.add_argument("--values", help="values at the nodes (interp1)")
    a.add_argument("--out")
    a.set_defaults(func=cmd_approx)

    e = sub.add_parser("eval", help="evaluate an approximant on a grid and write CSV")
    e.add_argument("--approx", required=True)
    e.add_argument("--grid", default=ex.DEFAULT_GRID, help="a:b:n (default %(default)s)")
    e.add_argument("--ref", default="none",
                   help="tan-over-t:W, log1p-over-t, exp, geometric:R, const:V or none")
    e.add_argument("--out")
    e.set_defaults(func=cmd_eval)

    x = sub.add_parser("expand", help="print the series coefficients of an approximant")
    x.add_argument("--approx", required=True)
    x.add_argument("--order", "-N", type=int, required=True)
    x.add_argument("--out")
    x.set_defaults(func=cmd_expand)

    pt = sub.add_parser("perturb", help="perturbation study on tan(4t)/(4t)")
    pt.add_argument("--eps", type=float, default=ex.DEFAULT_EPS)
    pt.add_argument("--seed", default="0:20", help="seed list '1,2,3' or range 'a:b' (default %(default)s)")
    pt.add_argument("--grid", default=ex.DEFAULT_GRID)
    pt.add_argument("--out")
    pt.set_defaults(func=cmd_perturb)

    r = sub.add_parser("reproduce", help="write the data behind the example figures")
    r.add_argument("example", choices=["example1", "example2"])
    r.add_argument("--out", default=".", help="output directory")
    r.add_argument("--seed", type=int, default=ex.DEFAULT_SEED,
                   help="seed of the perturbed run in example1 (default %(default)s)")
    r.add_argument("--eps", type=float, default=ex.DEFAULT_EPS)
    r.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except NumericalFailure as exc:
        print(f"padebary: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (InvalidInput, PadeError) as exc:
        print(f"padebary: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"padebary: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return 0


if __name__ == "__main__":
    sys.exit(main())
