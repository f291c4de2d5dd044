"""``tbchar`` command line.

Variables are written x, xp, y for the negated traces of X, X' and XX'.

Exit status: 0 success, 1 a verification check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .charvariety import eta, eta_ab, eta_nab, run_checks
from .linkparam import InvalidLinkParameter, TwoBridgeParam, all_params, canonical, is_equivalent, presentation
from .polyparse import PolySyntaxError, parse
from .polyring import Polynomial
from .skeinreduce import BasisDescriptor, normal_form

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(out, doc) -> None:
    out.write(json.dumps(doc, indent=2) + "\n")


def _param(args) -> TwoBridgeParam:
    try:
        return TwoBridgeParam(args.twop, args.q)
    except InvalidLinkParameter as exc:
        raise UsageError(f"{type(exc).__name__}: {exc}") from None


def _monomial_text(exp) -> str:
    return Polynomial.monomial(exp).to_text()


def cmd_eta(args, out) -> int:
    param = _param(args)
    _check_counts(args)
    if args.json:
        report = run_checks(param, args.samples, args.seed)
        _emit(out, report.to_json())
        return EXIT_OK if report.passed else EXIT_CHECK_FAILED
    if args.nab:
        out.write(f"eta = {eta(param)}\n")
        out.write(f"eta_ab = {eta_ab()}\n")
        out.write(f"eta_nab = {eta_nab(param)}\n")
    else:
        out.write(f"{eta(param)}\n")
    return EXIT_OK


def cmd_basis(args, out) -> int:
    param = _param(args)
    if args.max_degree < 0:
        raise UsageError("--max-degree must be >= 0")
    basis = BasisDescriptor(param)
    monos = basis.monomials(args.max_degree)
    if args.json:
        _emit(out, {
            "link": {"twop": param.twop, "q": param.q},
            "y_degree_bound": basis.y_degree_bound,
            "max_degree": args.max_degree,
            "monomials": [list(m) for m in monos],
        })
    else:
        out.write(f"# {param}: basis x^a*xp^b*y^c with c <= {basis.y_degree_bound}, "
                  f"total degree <= {args.max_degree}: {len(monos)} monomials\n")
        for m in monos:
            out.write(_monomial_text(m) + "\n")
    return EXIT_OK


def cmd_reduce(args, out) -> int:
    param = _param(args)
    try:
        f = parse(args.poly)
    except PolySyntaxError as exc:
        raise UsageError(f"{type(exc).__name__}: {exc}\n{exc.caret()}") from None
    nf = normal_form(param, f)
    if args.json:
        _emit(out, {
            "link": {"twop": param.twop, "q": param.q},
            "input": f.to_json(),
            "normal_form": nf.to_json(),
        })
    else:
        out.write(f"{nf}\n")
    return EXIT_OK


def _write_report(report, out) -> None:
    out.write(f"{report.param}  p = {report.param.p}  canonical {canonical(report.param)}\n")
    out.write(f"eta = {report.eta}\n")
    out.write(f"eta_nab = {report.eta_nab}\n")
    for name, res in report.checks.items():
        out.write(f"  {'PASS' if res else 'FAIL'}  {name}: {res.detail}\n")
    out.write(f"overall: {'PASS' if report.passed else 'FAIL'}\n")


def _check_counts(args):
    if args.samples < 0:
        raise UsageError("--samples must be >= 0")


def cmd_check(args, out) -> int:
    param = _param(args)
    _check_counts(args)
    report = run_checks(param, args.samples, args.seed)
    if args.json:
        _emit(out, report.to_json())
    else:
        _write_report(report, out)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_scan(args, out) -> int:
    if args.max_p < 1:
        raise UsageError("--max-p must be >= 1")
    _check_counts(args)
    reports = [run_checks(param, args.samples, args.seed) for param in all_params(args.max_p)]
    failed = [r for r in reports if not r.passed]
    if args.json:
        _emit(out, {
            "max_p": args.max_p,
            "samples": args.samples,
            "seed": args.seed,
            "links": [
                {
                    "link": {"twop": r.param.twop, "q": r.param.q},
                    "canonical": {"twop": canonical(r.param).twop, "q": canonical(r.param).q},
                    "checks": {name: res.passed for name, res in r.checks.items()},
                }
                for r in reports
            ],
            "failures": len(failed),
        })
    else:
        names = list(reports[0].checks)
        out.write(f"{'link':<10} {'canon':<10} {'terms':>6}  " + "  ".join(names) + "\n")
        for r in reports:
            marks = "  ".join(("ok" if r.checks[n] else "FAIL").ljust(len(n)) for n in names)
            out.write(f"{str(r.param):<10} {str(canonical(r.param)):<10} {len(r.eta):>6}  {marks}".rstrip() + "\n")
        out.write(f"{len(reports)} links, {len(failed)} failures\n")
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def cmd_presentation(args, out) -> int:
    param = _param(args)
    pres = presentation(param)
    if args.json:
        _emit(out, {
            "link": {"twop": param.twop, "q": param.q},
            "generators": list(pres.generators),
            "relator": {"lhs": str(pres.lhs), "rhs": str(pres.rhs)},
            "w": str(pres.w),
        })
    else:
        out.write(f"{pres}\n")
        out.write(f"w = {pres.w}\n")
    return EXIT_OK


def _swap_x(f: Polynomial) -> Polynomial:
    return Polynomial({(b, a, c): k for (a, b, c), k in f.terms.items()}, f.variables)


def cmd_compare(args, out) -> int:
    """Exploratory: are the eta polynomials of two parameters equal up to sign / x<->xp swap?"""
    try:
        a = TwoBridgeParam(args.twop, args.q)
        b = TwoBridgeParam(args.twop2, args.q2)
    except InvalidLinkParameter as exc:
        raise UsageError(f"{type(exc).__name__}: {exc}") from None
    ea, eb = eta(a), eta(b)
    doc = {
        "links": [str(a), str(b)],
        "equivalent_parameters": is_equivalent(a, b),
        "eta_equal": ea == eb,
        "eta_equal_up_to_sign": ea == eb or ea == -eb,
        "eta_equal_after_swap": _swap_x(ea) in (eb, -eb),
        "eta_symmetric": [_swap_x(ea) == ea, _swap_x(eb) == eb],
    }
    if args.json:
        _emit(out, doc)
    else:
        for k, v in doc.items():
            out.write(f"{k}: {v}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--seed", type=int, default=0, help="oracle RNG seed (default 0)")
    common.add_argument("--samples", type=int, default=20, help="oracle sample count (default 20)")

    parser = argparse.ArgumentParser(
        prog="tbchar",
        description="SL2 character ring and t=-1 skein normal form of two-bridge links b(2p,q).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def link_cmd(name, func, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.add_argument("twop", type=int, help="2p (even)")
        sp.add_argument("q", type=int, help="odd, 1 <= q < 2p, coprime to 2p")
        sp.set_defaults(func=func)
        return sp

    sp = link_cmd("eta", cmd_eta, "print eta (and eta_nab with --nab)")
    sp.add_argument("--nab", action="store_true", help="also print eta_ab and eta_nab")

    sp = link_cmd("basis", cmd_basis, "list basis monomials up to a total degree")
    sp.add_argument("--max-degree", type=int, default=2)

    sp = link_cmd("reduce", cmd_reduce, "normal form of a polynomial modulo eta")
    sp.add_argument("--poly", required=True, help='e.g. "y^2 + x*xp"')

    link_cmd("check", cmd_check, "run all checks for one link")
    link_cmd("presentation", cmd_presentation, "print the link group presentation")

    sp = sub.add_parser("scan", parents=[common], help="run checks for every link with p <= max-p")
    sp.add_argument("--max-p", type=int, required=True)
    sp.set_defaults(func=cmd_scan)

    sp = link_cmd("compare", cmd_compare, "compare eta of two parameter pairs (exploratory)")
    sp.add_argument("twop2", type=int)
    sp.add_argument("q2", type=int)

    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"tbchar: error: {exc}\n")
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())
