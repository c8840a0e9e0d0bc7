from fractions import Fraction
from functools import lru_cache
from typing import Union

from sympy import divisor_sigma, divisors

Rational = Union[int, Fraction]


@lru_cache(maxsize=None)
def sigma(k: int, n: int) -> int:
    """Divisor sum σ_k(n) = Σ_{d|n} d^k."""
    if n <= 0:
        raise ValueError(f"sigma is defined for n >= 1, got {n}")
    return int(divisor_sigma(n, k))


@lru_cache(maxsize=None)
def r4_divisor_formula(n: int) -> int:
    """r₄(n) = 8·Σ_{d|n, 4∤d} d, with r₄(0) = 1."""
    if n < 0:
        raise ValueError(f"r4 is defined for n >= 0, got {n}")
    if n == 0:
        return 1
    return 8 * sum(int(d) for d in divisors(n) if d % 4)


def as_fraction(value: Rational) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text.replace(" ", ""))
