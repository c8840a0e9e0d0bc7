from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from types import MappingProxyType
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

from qmcert.core.exceptions import DomainError, PrecisionError

Scalar = Union[int, Fraction]


@dataclass(frozen=True, eq=False)
class QSeries:
    """Truncated power series in q^(1/2); index n stands for q^(n/2).

    Coefficients are exact and known for every index below ``prec``.
    """

    coeffs: Mapping[int, Fraction]
    prec: int

    def __post_init__(self):
        if self.prec < 0:
            raise DomainError(f"series precision must be >= 0, got {self.prec}")
        clean: Dict[int, Fraction] = {}
        for n, c in sorted(self.coeffs.items()):
            if n < 0:
                raise DomainError(f"negative exponent index {n}")
            c = Fraction(c)
            if c and n < self.prec:
                clean[n] = c
        object.__setattr__(self, "coeffs", MappingProxyType(clean))

    # --- construction ---

    @classmethod
    def zero(cls, prec: int) -> "QSeries":
        return cls({}, prec)

    @classmethod
    def constant(cls, value: Scalar, prec: int) -> "QSeries":
        return cls({0: Fraction(value)}, prec)

    # --- inspection ---

    @property
    def order(self) -> int:
        """Lowest stored index; ``prec`` for a series that is zero to precision."""
        return next(iter(self.coeffs), self.prec)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, n: int) -> Fraction:
        if n >= self.prec:
            raise PrecisionError(f"index {n} is beyond series precision {self.prec}")
        return self.coeffs.get(n, Fraction(0))

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(self.coeffs.items())

    def truncate(self, prec: int) -> "QSeries":
        return QSeries(self.coeffs, min(prec, self.prec))

    def is_integral_exponent(self) -> bool:
        return all(n % 2 == 0 for n in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.prec == other.prec and dict(self.coeffs) == dict(other.coeffs)

    def __hash__(self) -> int:
        return hash((self.prec, frozenset(self.coeffs.items())))

    def __repr__(self) -> str:
        from qmcert.domains.qseries.codec import format_qseries

        return f"QSeries({format_qseries(self)!r})"

    # --- arithmetic ---

    def __neg__(self) -> "QSeries":
        return QSeries({n: -c for n, c in self.coeffs.items()}, self.prec)

    def __add__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            other = QSeries.constant(other, self.prec)
        if not isinstance(other, QSeries):
            return NotImplemented
        prec = min(self.prec, other.prec)
        out: Dict[int, Fraction] = dict(self.coeffs)
        for n, c in other.coeffs.items():
            out[n] = out.get(n, 0) + c
        return QSeries(out, prec)

    __radd__ = __add__

    def __sub__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            other = QSeries.constant(other, self.prec)
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QSeries":
        return (-self) + other

    def scale(self, factor: Scalar) -> "QSeries":
        factor = Fraction(factor)
        return QSeries({n: factor * c for n, c in self.coeffs.items()}, self.prec)

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        prec = min(self.prec + other.order, other.prec + self.order)
        if self.is_zero() or other.is_zero():
            return QSeries.zero(prec)
        # integer kernels: clear denominators, multiply, divide once
        da = lcm(*(c.denominator for c in self.coeffs.values()))
        db = lcm(*(c.denominator for c in other.coeffs.values()))
        left = [(n, int(c * da)) for n, c in self.coeffs.items()]
        right = [(n, int(c * db)) for n, c in other.coeffs.items()]
        acc: Dict[int, int] = {}
        for i, a in left:
            if i >= prec:
                break
            for j, b in right:
                k = i + j
                if k >= prec:
                    break
                acc[k] = acc.get(k, 0) + a * b
        denom = da * db
        return QSeries({k: Fraction(v, denom) for k, v in acc.items()}, prec)

    __rmul__ = __mul__

    def inverse(self) -> "QSeries":
        """Multiplicative inverse of a unit series (order 0, nonzero constant)."""
        c0 = self.coeffs.get(0)
        if self.prec == 0 or c0 is None:
            raise PrecisionError("only series with nonzero constant term are invertible")
        inv0 = 1 / c0
        out: Dict[int, Fraction] = {0: inv0}
        tail = [(n, c) for n, c in self.coeffs.items() if n > 0]
        for m in range(1, self.prec):
            s = Fraction(0)
            for n, c in tail:
                if n > m:
                    break
                b = out.get(m - n)
                if b:
                    s += c * b
            if s:
                out[m] = -inv0 * s
        return QSeries(out, self.prec)

    def __pow__(self, exponent: int) -> "QSeries":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        if exponent == 0:
            return QSeries.constant(1, self.prec)
        result: Optional[QSeries] = None
        base = self
        while exponent:
            if exponent & 1:
                result = base if result is None else result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result


@dataclass(frozen=True)
class VanishingOrder:
    """Lowest nonzero index of an expansion, with its coefficient.

    ``index`` is None when the expansion is zero up to ``prec``.
    """

    index: Optional[int]
    leading: Optional[Fraction]
    prec: int

    @property
    def exponent(self) -> Optional[Fraction]:
        return None if self.index is None else Fraction(self.index, 2)

    @property
    def conclusive(self) -> bool:
        return self.index is not None


@dataclass(frozen=True)
class SeriesValue:
    value: object  # mpmath.mpf
    tail: object  # mpmath.mpf, advisory only
    flagged: bool = False
    notes: Tuple[str, ...] = field(default_factory=tuple)
