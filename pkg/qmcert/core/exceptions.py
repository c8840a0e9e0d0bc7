# qmcert/core/exceptions.py
from typing import Optional


class QmCertError(Exception):
    """Base for every error raised by the library."""


class DomainError(QmCertError, ValueError):
    """Argument outside the operation's domain (weights, generator indices, names)."""


class PrecisionError(QmCertError):
    """Truncated data is insufficient for the requested result."""


class InhomogeneousError(QmCertError):
    """Weight-dependent operation applied to an element without a single weight."""


class DepthError(QmCertError):
    """Operation defined only for depth-zero elements."""


class RingMismatchError(QmCertError):
    """Operands cannot be brought into a common ring."""


class ExpressionSyntaxError(QmCertError):
    def __init__(self, message: str, offset: Optional[int] = None):
        self.offset = offset
        where = f" at offset {offset}" if offset is not None else ""
        super().__init__(f"{message}{where}")


class UnknownIdentifierError(ExpressionSyntaxError):
    pass
