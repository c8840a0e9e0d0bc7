import argparse
from typing import List, Optional

from qmcert.core.exception_handlers import EXIT_USAGE, cli_error_boundary
from qmcert.domains.certify import cli as certify_cli
from qmcert.domains.expressions import cli as expressions_cli
from qmcert.domains.extremal import cli as extremal_cli


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qmcert",
        description="Quasimodular forms algebra and sphere-packing inequality certificates",
    )
    subparsers = parser.add_subparsers(dest="command")

    # Include commands
    certify_cli.register(subparsers)
    expressions_cli.register(subparsers)
    extremal_cli.register(subparsers)
    return parser


@cli_error_boundary
def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "handler", None):
        parser.print_help()
        return EXIT_USAGE
    return args.handler(args)
