# qmcert/domains/extremal/cli.py
import argparse

from qmcert.core.exception_handlers import EXIT_OK
from qmcert.domains.extremal.service import extremal
from qmcert.domains.qm1.service import qm1_to_qexp
from qmcert.domains.qseries.codec import format_qseries_human


def cmd_extremal(args: argparse.Namespace) -> int:
    form = extremal(args.weight, args.depth)
    print(f"{form.label} = {form.poly}")
    if args.qexp:
        series = qm1_to_qexp(form.poly, 2 * (form.expected_order + args.qexp))
        print(format_qseries_human(series, args.qexp))
    return EXIT_OK


def register(subparsers) -> None:
    parser = subparsers.add_parser("extremal", help="print a normalised extremal form")
    parser.add_argument("--weight", type=int, required=True)
    parser.add_argument("--depth", type=int, required=True)
    parser.add_argument("--qexp", type=int, default=0, metavar="N", help="also print N terms")
    parser.set_defaults(handler=cmd_extremal)
