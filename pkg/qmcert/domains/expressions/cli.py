# qmcert/domains/expressions/cli.py
import argparse

import mpmath

from qmcert.core.exception_handlers import EXIT_OK
from qmcert.domains.expressions.service import elaborate, evaluate, expand_qexp
from qmcert.domains.qseries.codec import format_qseries, format_qseries_human
from qmcert.domains.qseries.entities import SeriesValue


def cmd_qexp(args: argparse.Namespace) -> int:
    series = expand_qexp(elaborate(args.expr), args.prec)
    if args.terms is not None:
        print(format_qseries_human(series, args.terms))
    else:
        print(format_qseries(series))
    return EXIT_OK


def cmd_eval(args: argparse.Namespace) -> int:
    result = evaluate(elaborate(args.expr), args.t, args.prec, args.tol)
    print(mpmath.nstr(result.value, args.digits))
    if isinstance(result, SeriesValue):
        print(f"tail {mpmath.nstr(result.tail, 5)}{' (flagged)' if result.flagged else ''}")
    else:
        print(f"magnitude {mpmath.nstr(result.magnitude, 5)}{' (via t -> 1/t)' if result.flipped else ''}")
    return EXIT_OK


def register(subparsers) -> None:
    qexp = subparsers.add_parser("qexp", help="print the q-expansion of an expression")
    qexp.add_argument("expr")
    qexp.add_argument("--prec", type=int, default=None, help="series index, in units of q^(1/2)")
    qexp.add_argument("--terms", type=int, default=None, help="print only the first nonzero terms")
    qexp.set_defaults(handler=cmd_qexp)

    ev = subparsers.add_parser("eval", help="evaluate an expression at z = it")
    ev.add_argument("expr")
    ev.add_argument("--t", required=True)
    ev.add_argument("--prec", type=int, default=None)
    ev.add_argument("--tol", type=float, default=None)
    ev.add_argument("--digits", type=int, default=20)
    ev.set_defaults(handler=cmd_eval)
