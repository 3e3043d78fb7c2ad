"""Command-line front end.

Subcommands::

    slantlab build-op --alpha z^4 --beta z^2 --k 2 --phi z
    slantlab verify all --seed 7
    slantlab product --analytic --alpha z^8 --beta z^4 --gamma z^2 --k 2 --m 2 --phi "1+z" --psi z
    slantlab symbol --recover --alpha z^3 --beta z^2 --k 2 --phi "conj(z) + 2*z^3"

Inner functions are given as ``z``, ``z^N`` or a JSON object / file with keys
``zeros`` (list of ``[re, im]``) and optional ``constant``.  Symbols are sums
of terms ``c*z^n`` and ``c*conj(z)^n`` with complex literals such as ``2``,
``-1.5i`` or ``(1+2i)``, or a JSON object / file in the circle-function
layout.

Exit codes: 0 success, 1 a verification failed, 2 bad input.
"""

import argparse
import json
import logging
import os
import re
import sys
import warnings

from . import characterize as ch
from . import products as pr
from .circle import CircleFunction, conj_fn
from .inner import FiniteBlaschke, monomial_inner
from .model_space import build
from .operators import OperatorMatrix, slant_compression
from .suites import SUITES, SuiteConfig, run_suite

log = logging.getLogger("slantlab")

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(ValueError):
    """Malformed command-line input."""


# -- parsing ----------------------------------------------------------------

def _load_json(text):
    text = text.strip()
    if text.startswith("{"):
        return json.loads(text)
    if os.path.isfile(text):
        with open(text) as fh:
            return json.load(fh)
    return None


def parse_inner(text):
    """``z``, ``z^N`` or JSON (inline or file) -> :class:`FiniteBlaschke`."""
    s = text.replace(" ", "")
    m = re.fullmatch(r"z(?:\^(\d+))?", s)
    if m:
        return monomial_inner(int(m.group(1) or 1))
    try:
        data = _load_json(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read inner function {text!r}: {exc}") from exc
    if data is None:
        raise InputError(f"cannot parse inner function {text!r}")
    try:
        return FiniteBlaschke.from_dict(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad inner function JSON: {exc}") from exc


_MONO = re.compile(r"(conj\(z\)|z)(?:\^(\d+))?$")


def _parse_coefficient(text):
    t = text.strip()
    if t in ("", "+"):
        return 1.0
    if t == "-":
        return -1.0
    sign = 1.0
    if t[0] in "+-" and t[1:].startswith("("):
        sign, t = (-1.0 if t[0] == "-" else 1.0), t[1:]
    while t.startswith("(") and t.endswith(")"):
        t = t[1:-1]
    t = t.replace("i", "j")
    if t in ("j", "+j", "-j"):
        t = t.replace("j", "1j")
    try:
        return sign * complex(t)
    except ValueError as exc:
        raise InputError(f"bad coefficient {text!r}") from exc


def _split_terms(s):
    terms, depth, start = [], 0, 0
    for i, c in enumerate(s):
        if c == "(":
            depth += 1
        elif c == ")":
            depth -= 1
        elif c in "+-" and depth == 0 and i > start and s[i - 1] not in "eE*^":
            terms.append(s[start:i])
            start = i
    terms.append(s[start:])
    return [t for t in terms if t]


def parse_symbol(text, band):
    """Symbol shorthand or circle-function JSON -> :class:`CircleFunction` at ``band``."""
    try:
        data = _load_json(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read symbol {text!r}: {exc}") from exc
    if data is not None:
        try:
            return CircleFunction.from_dict(data).with_band(band)
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad symbol JSON: {exc}") from exc
    s = text.replace(" ", "")
    if not s:
        raise InputError("empty symbol")
    terms = {}
    for term in _split_terms(s):
        m = _MONO.search(term)
        if m:
            head = term[:m.start()]
            if head.endswith("*"):
                head = head[:-1]
            power = int(m.group(2) or 1)
            n = -power if m.group(1).startswith("conj") else power
        else:
            head, n = term, 0
        coeff = _parse_coefficient(head)
        if abs(n) > band:
            raise InputError(f"frequency {n} outside band {band}")
        terms[n] = terms.get(n, 0) + coeff
    return CircleFunction.from_terms(terms, band)


def _default_tol():
    env = os.environ.get("SLANTLAB_TOL")
    if env is None:
        return 1e-8
    try:
        return float(env)
    except ValueError as exc:
        raise InputError(f"SLANTLAB_TOL={env!r} is not a number") from exc


# -- output -----------------------------------------------------------------

def _emit(records, out_path):
    lines = "".join(json.dumps(r, sort_keys=True) + "\n" for r in records)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(lines)
    else:
        sys.stdout.write(lines)


# -- commands ---------------------------------------------------------------

def cmd_build_op(args):
    alpha, beta = parse_inner(args.alpha), parse_inner(args.beta)
    if alpha.is_constant() or beta.is_constant():
        raise InputError("alpha and beta must be nonconstant (K = {0} otherwise)")
    phi = parse_symbol(args.phi, args.k * args.band)
    U = slant_compression(phi, build(alpha, args.band), build(beta, args.band), args.k)
    rec = U.to_dict()
    rec.update(alpha=alpha.to_dict(), beta=beta.to_dict(), band=args.band)
    _emit([rec], args.out)
    return EXIT_OK


def cmd_verify(args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    cfg = SuiteConfig(seed=args.seed, tol=args.tol, band=args.band,
                      max_degree=args.max_degree, trials=args.trials, k=args.k)
    records = []
    for name in names:
        records.extend(run_suite(name, cfg))
    failed = [r for r in records if not r["pass"]]
    summary = {"summary": True, "suites": names, "records": len(records),
               "failed": len(failed), "pass": not failed, "seed": cfg.seed, "tol": cfg.tol}
    _emit(records + [summary], args.out)
    for r in failed[:20]:
        log.error("FAIL %s/%s trial %d residual %.3e tol %.3e", r["suite"], r["property"],
                  r["trial"], r["residual"], r["tol"])
    return EXIT_FAIL if failed else EXIT_OK


def _product_spaces(args):
    names = ("alpha", "beta", "gamma")
    vals = []
    for n in names:
        v = getattr(args, n)
        if v is None:
            raise InputError(f"--{n} is required for product")
        b = parse_inner(v)
        if b.is_constant():
            raise InputError(f"{n} must be nonconstant")
        vals.append(b)
    return vals


def cmd_product(args):
    alpha, beta, gamma = _product_spaces(args)
    k, m, band = args.k, args.m, args.band
    N = k * m * band
    phi = parse_symbol(args.phi or "1", N)
    psi = parse_symbol(args.psi or "1", N)
    if args.mode == "analytic":
        rep = pr.product_analytic(phi, psi, alpha, beta, gamma, k, m, band, args.tol)
    elif args.mode == "antianalytic":
        # accept the symbols either as written for the operators or as their
        # analytic conjugates
        phi, psi = (conj_fn(f) if not f.is_analytic(1e-14) else f for f in (phi, psi))
        rep = pr.product_antianalytic(phi, psi, alpha, beta, gamma, k, m, band, args.tol)
    elif args.mode == "mixed":
        order = k if args.case in ("a", "c") else m
        if args.case in ("c", "d"):
            phi, psi = (conj_fn(f) if not f.is_analytic(1e-14) else f for f in (phi, psi))
        rep = pr.product_mixed(args.case, phi, psi, alpha, beta, gamma, order, band, args.tol)
    else:
        Ka, Kb, Kg = build(alpha, band), build(beta, band), build(gamma, band)
        B = slant_compression(psi.with_band(k * band), Ka, Kb, k)
        A = slant_compression(phi.with_band(m * band), Kb, Kg, m)
        rep = pr.product_membership_L2(A, B, tol=args.tol)
    rec = rep.to_dict()
    rec["mode"] = args.mode
    _emit([rec], args.out)
    ok = rep.member and all(rep.passed(n) for n in rep.symbols)
    if args.mode == "l2":
        ok = rep.details["membership_test_agrees"] and all(rep.passed(n) for n in rep.symbols)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_symbol(args):
    alpha, beta = parse_inner(args.alpha), parse_inner(args.beta)
    if alpha.is_constant() or beta.is_constant():
        raise InputError("alpha and beta must be nonconstant")
    k, band = args.k, args.band
    Ka, Kb = build(alpha, band), build(beta, band)
    if args.recover:
        if args.op:
            with open(args.op) as fh:
                U = OperatorMatrix.from_dict(json.load(fh), Ka, Kb)
        elif args.phi:
            U = slant_compression(parse_symbol(args.phi, k * band), Ka, Kb, k)
        else:
            raise InputError("--recover needs --phi or --op")
        d = ch.membership_test(U, k, args.variant, args.tol)
        rec = {"member": d.member, "defect_residual": d.residual, "variant": d.variant}
        ok = d.member
        if d.member:
            phi = ch.symbol_from_defect(d)
            dist = (slant_compression(phi, Ka, Kb, k) - U).norm()
            rec.update(symbol=phi.to_dict(), round_trip=dist)
            ok = dist <= max(args.tol, 1e-6) * (1 + U.norm())
        _emit([rec], args.out)
        return EXIT_OK if ok else EXIT_FAIL
    if not args.phi:
        raise InputError("--canonical needs --phi")
    phi = parse_symbol(args.phi, k * band)
    reduce = k <= alpha.degree and not args.no_reduce
    cs = ch.canonical_symbol(phi, alpha, beta, k, band, reduce=reduce)
    rec = cs.to_dict()
    rec["parts_norm"] = cs.parts_norm()
    _emit([rec], args.out)
    return EXIT_OK


# -- argument parser --------------------------------------------------------

def _add_common(p, tol_default):
    p.add_argument("--band", type=int, default=256, help="Fourier band M (default 256)")
    p.add_argument("--tol", type=float, default=tol_default, help="tolerance")
    p.add_argument("--out", help="write JSON lines here instead of stdout")


def build_parser(tol_default=1e-8):
    parser = argparse.ArgumentParser(prog="slantlab",
                                     description="Compressed slant Toeplitz operators on model spaces")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-op", help="matrix of U_phi between two model spaces")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--phi", required=True)
    p.add_argument("--k", type=int, default=1)
    _add_common(p, tol_default)
    p.set_defaults(func=cmd_build_op)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite", choices=list(SUITES) + ["all"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--max-degree", type=int, default=6)
    p.add_argument("--k", type=int, default=None, help="slant order for example3")
    _add_common(p, tol_default)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("product", help="symbol of a product of two compressions")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--analytic", dest="mode", action="store_const", const="analytic")
    mode.add_argument("--antianalytic", dest="mode", action="store_const", const="antianalytic")
    mode.add_argument("--mixed", dest="case", choices=["a", "b", "c", "d"])
    mode.add_argument("--l2", dest="mode", action="store_const", const="l2")
    for n in ("alpha", "beta", "gamma"):
        p.add_argument(f"--{n}")
    p.add_argument("--phi", help="symbol of the left factor")
    p.add_argument("--psi", help="symbol of the right factor")
    p.add_argument("--k", type=int, default=1, help="order of the right factor")
    p.add_argument("--m", type=int, default=1, help="order of the left factor")
    _add_common(p, tol_default)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("symbol", help="recover or canonicalise a symbol")
    what = p.add_mutually_exclusive_group(required=True)
    what.add_argument("--recover", action="store_true")
    what.add_argument("--canonical", action="store_true")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--phi")
    p.add_argument("--op", help="operator JSON written by build-op")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--variant", choices=["A", "B"], default="B")
    p.add_argument("--no-reduce", action="store_true",
                   help="keep the component along residual zero symbols")
    _add_common(p, tol_default)
    p.set_defaults(func=cmd_symbol)
    return parser


def main(argv=None):
    try:
        tol_default = _default_tol()
    except InputError as exc:
        print(f"slantlab: {exc}", file=sys.stderr)
        return EXIT_INPUT
    parser = build_parser(tol_default)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    if args.command == "product" and args.case:
        args.mode = "mixed"
    if getattr(args, "k", 1) is not None and getattr(args, "k", 1) < 1:
        print("slantlab: --k must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    if getattr(args, "m", 1) < 1:
        print("slantlab: --m must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("default")
            return args.func(args)
    except (InputError, ch.PreconditionError, ValueError, KeyError) as exc:
        print(f"slantlab: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
