# qmcert/shared/models/polynomial.py
"""
Sparse graded polynomials in three weighted generators.
- terms map exponent triples to exact rationals; zero coefficients are never stored
- one generator (the "depth slot", E2) measures depth
- subclasses fix generator names, weights and the derivation on generators
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from types import MappingProxyType
from typing import Callable, ClassVar, Dict, List, Mapping, NamedTuple, Optional, Sequence, Tuple, TypeVar

from qmcert.core.exceptions import InhomogeneousError
from qmcert.domains.qseries.entities import QSeries
from qmcert.shared.utils.arith import format_fraction

Monomial = Tuple[int, int, int]
P = TypeVar("P", bound="GradedPolynomial")


class WeightDepth(NamedTuple):
    weight: Optional[int]  # None marks an inhomogeneous element
    depth: int

    @property
    def homogeneous(self) -> bool:
        return self.weight is not None


def _dense_mul(x: List[int], y: List[int], prec: int) -> List[int]:
    out = [0] * prec
    ys = [(j, b) for j, b in enumerate(y) if b]
    for i, a in enumerate(x):
        if not a:
            continue
        for j, b in ys:
            k = i + j
            if k >= prec:
                break
            out[k] += a * b
    return out


@dataclass(frozen=True, eq=False)
class GradedPolynomial:
    terms: Mapping[Monomial, Fraction]

    GENERATORS: ClassVar[Tuple[str, str, str]] = ("x", "y", "z")
    WEIGHTS: ClassVar[Tuple[int, int, int]] = (1, 1, 1)
    DEPTH_SLOT: ClassVar[int] = 0

    def __post_init__(self):
        clean: Dict[Monomial, Fraction] = {}
        for mono, c in self.terms.items():
            c = Fraction(c)
            if c:
                mono = tuple(int(e) for e in mono)
                if len(mono) != 3 or min(mono) < 0:
                    raise ValueError(f"invalid monomial {mono}")
                clean[mono] = clean.get(mono, Fraction(0)) + c
        clean = {m: c for m, c in sorted(clean.items()) if c}
        object.__setattr__(self, "terms", MappingProxyType(clean))

    # --- construction ---

    @classmethod
    def zero(cls: type[P]) -> P:
        return cls({})

    @classmethod
    def constant(cls: type[P], value) -> P:
        return cls({(0, 0, 0): Fraction(value)})

    @classmethod
    def one(cls: type[P]) -> P:
        return cls.constant(1)

    @classmethod
    def generator(cls: type[P], name: str) -> P:
        slot = cls.GENERATORS.index(name)
        mono = [0, 0, 0]
        mono[slot] = 1
        return cls({tuple(mono): Fraction(1)})

    @classmethod
    def monomial_weight(cls, mono: Monomial) -> int:
        return sum(w * e for w, e in zip(cls.WEIGHTS, mono))

    # --- inspection ---

    def is_zero(self) -> bool:
        return not self.terms

    def items(self):
        return self.terms.items()

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient((0, 0, 0))

    def weights(self) -> set:
        return {self.monomial_weight(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.weights()) == 1

    def depth(self) -> int:
        return max((m[self.DEPTH_SLOT] for m in self.terms), default=0)

    def weight_depth(self) -> WeightDepth:
        if self.is_zero():
            raise InhomogeneousError("the zero polynomial has no weight")
        ws = self.weights()
        weight = next(iter(ws)) if len(ws) == 1 else None
        return WeightDepth(weight=weight, depth=self.depth())

    @property
    def weight(self) -> int:
        wd = self.weight_depth()
        if wd.weight is None:
            raise InhomogeneousError(f"element of mixed weights {sorted(self.weights())}")
        return wd.weight

    def homogeneous_components(self: P) -> Dict[int, P]:
        parts: Dict[int, Dict[Monomial, Fraction]] = {}
        for m, c in self.terms.items():
            parts.setdefault(self.monomial_weight(m), {})[m] = c
        return {w: type(self)(t) for w, t in sorted(parts.items())}

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((type(self).__name__, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return not self.is_zero()

    # --- ring operations ---

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return type(self).constant(other)
        if type(other) is type(self):
            return other
        return None

    def __neg__(self: P) -> P:
        return type(self)({m: -c for m, c in self.terms.items()})

    def __add__(self: P, other) -> P:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: Dict[Monomial, Fraction] = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return type(self)(out)

    __radd__ = __add__

    def __sub__(self: P, other) -> P:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self: P, other) -> P:
        return (-self) + other

    def scale(self: P, factor) -> P:
        factor = Fraction(factor)
        return type(self)({m: factor * c for m, c in self.terms.items()})

    def __mul__(self: P, other) -> P:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if type(other) is not type(self):
            return NotImplemented
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                out[m] = out.get(m, 0) + c1 * c2
        return type(self)(out)

    __rmul__ = __mul__

    def __truediv__(self: P, other) -> P:
        if isinstance(other, (int, Fraction)):
            return self.scale(1 / Fraction(other))
        return NotImplemented

    def __pow__(self: P, exponent: int) -> P:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"polynomial powers need a nonnegative integer, got {exponent}")
        result = type(self).one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # --- maps ---

    def apply_derivation(self: P, images: Sequence[P]) -> P:
        """Extend generator images to a derivation by linearity and Leibniz."""
        out: Dict[Monomial, Fraction] = {}
        for mono, c in self.terms.items():
            for slot, e in enumerate(mono):
                if not e:
                    continue
                lower = list(mono)
                lower[slot] -= 1
                for m2, c2 in images[slot].terms.items():
                    m = (lower[0] + m2[0], lower[1] + m2[1], lower[2] + m2[2])
                    out[m] = out.get(m, 0) + c * e * c2
        return type(self)(out)

    def derivative(self: P) -> P:
        raise NotImplementedError

    def serre(self: P, k) -> P:
        """∂_k = D − (k/12)·E2."""
        e2 = type(self).generator(self.GENERATORS[self.DEPTH_SLOT])
        return self.derivative() - e2 * self * Fraction(k) / 12

    def serre_iter(self: P, k, r: int) -> P:
        if r < 0:
            raise ValueError(f"iteration count must be >= 0, got {r}")
        out = self
        for i in range(r):
            out = out.serre(Fraction(k) + 2 * i)
        return out

    def substitute(self, images: Sequence, one, scalar: Callable = lambda c: c):
        """Ring morphism sending generator i to images[i]; ``one`` is the target unit."""
        cache: Dict[Tuple[int, int], object] = {}

        def power(slot: int, e: int):
            key = (slot, e)
            if key not in cache:
                cache[key] = one if e == 0 else power(slot, e - 1) * images[slot]
            return cache[key]

        total = None
        for mono, c in self.terms.items():
            term = one * scalar(c)
            for slot, e in enumerate(mono):
                if e:
                    term = term * power(slot, e)
            total = term if total is None else total + term
        return one * 0 if total is None else total

    def to_qexp(self, generator_series: Sequence[QSeries], prec: int) -> QSeries:
        """Exact q-expansion by substituting the generator series (all of order >= 0)."""
        dense: List[Tuple[List[int], int]] = []
        for s in generator_series:
            s = s.truncate(prec)
            den = lcm(*(c.denominator for _, c in s.items())) if not s.is_zero() else 1
            row = [0] * prec
            for n, c in s.items():
                row[n] = int(c * den)
            dense.append((row, den))
        cache: Dict[Tuple[int, int], Tuple[List[int], int]] = {}

        def power(slot: int, e: int) -> Tuple[List[int], int]:
            key = (slot, e)
            if key not in cache:
                if e == 0:
                    cache[key] = ([1] + [0] * (prec - 1) if prec else [], 1)
                else:
                    half = power(slot, e // 2)
                    sq = (_dense_mul(half[0], half[0], prec), half[1] * half[1])
                    if e % 2:
                        row, den = dense[slot]
                        sq = (_dense_mul(sq[0], row, prec), sq[1] * den)
                    cache[key] = sq
            return cache[key]

        acc = [Fraction(0)] * prec
        for mono, c in self.terms.items():
            row, den = [1] + [0] * (prec - 1) if prec else [], 1
            for slot, e in enumerate(mono):
                if e:
                    prow, pden = power(slot, e)
                    row, den = _dense_mul(row, prow, prec), den * pden
            scale = c / den
            for n, v in enumerate(row):
                if v:
                    acc[n] += scale * v
        return QSeries({n: v for n, v in enumerate(acc) if v}, prec)

    # --- text ---

    def _format_monomial(self, mono: Monomial) -> str:
        parts = []
        for name, e in zip(self.GENERATORS, mono):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        out = []
        for mono, c in self.terms.items():
            body = self._format_monomial(mono)
            mag = abs(c)
            if not body:
                text = format_fraction(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{format_fraction(mag)}*{body}"
            out.append(("-" if c < 0 else "+", text))
        first = ("-" if out[0][0] == "-" else "") + out[0][1]
        return first + "".join(f" {s} {t}" for s, t in out[1:])

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"
