# qmcert/domains/certify/cli.py
import argparse
import sys
from pathlib import Path

from qmcert.core.config import settings
from qmcert.core.exception_handlers import EXIT_FAILED, EXIT_OK
from qmcert.domains.certify.figures import FIGURES, write_figure, write_figure_file
from qmcert.domains.certify.schemas import VerificationReport
from qmcert.domains.certify.suites import SUITE_NAMES, run_suite
from qmcert.shared.utils.logger import get_logger

logger = get_logger(__name__)


def cmd_verify(args: argparse.Namespace) -> int:
    certificates = run_suite(args.suite)
    report = VerificationReport.build(args.suite, certificates, settings.model_dump(mode="json"))
    if args.report:
        Path(args.report).write_bytes(report.to_json())
        logger.info("report written to %s", args.report)
    print(report.summary_table())
    for cert in certificates:
        if not cert.passed:
            print(f"{cert.name}: {cert.verdict.value} {cert.evidence}", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_figure(args: argparse.Namespace) -> int:
    if args.out in (None, "-"):
        write_figure(args.name, sys.stdout, args.points)
    else:
        write_figure_file(args.name, Path(args.out), args.points)
    return EXIT_OK


def register(subparsers) -> None:
    verify = subparsers.add_parser("verify", help="run a certificate suite")
    verify.add_argument("--suite", choices=SUITE_NAMES, default="all")
    verify.add_argument("--report", help="path of the JSON report")
    verify.set_defaults(handler=cmd_verify)

    figure = subparsers.add_parser("figure", help="emit CSV data for a figure")
    figure.add_argument("--name", choices=sorted(FIGURES), required=True)
    figure.add_argument("--out", help="CSV path; stdout when omitted")
    figure.add_argument("--points", type=int, default=None)
    figure.set_defaults(handler=cmd_figure)
