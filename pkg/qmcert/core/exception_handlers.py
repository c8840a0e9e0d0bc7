import functools
import sys
from typing import Callable

from qmcert.core.exceptions import QmCertError
from qmcert.shared.utils.logger import get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def cli_error_boundary(func: Callable[..., int]) -> Callable[..., int]:
    """Turn library errors into an exit status and a single stderr line."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs) -> int:
        try:
            return func(*args, **kwargs)
        except QmCertError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        except Exception:
            logger.exception("Unhandled error in %s", func.__name__)
            print("error: internal error, see log", file=sys.stderr)
            return EXIT_FAILED

    return wrapper
