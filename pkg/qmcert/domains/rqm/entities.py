# qmcert/domains/rqm/entities.py
"""
Extension ring QM[P, T] with P = 1/π and T = i/z, both of weight 1.
- on the imaginary axis z = it, T evaluates to 1/t
- T exponents may be negative; P exponents are nonnegative
- terms are keyed by (p, u, base monomial) over level 1 (E2, E4, E6) or level 2 (H2, H4, E2)
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, Mapping, Tuple, Type, Union

from qmcert.core.exceptions import DomainError, InhomogeneousError, RingMismatchError
from qmcert.domains.qm1.entities import QmPoly1
from qmcert.domains.qm2.entities import QmPoly2
from qmcert.shared.models.polynomial import GradedPolynomial, Monomial

Key = Tuple[int, int, Monomial]
BasePoly = Union[QmPoly1, QmPoly2]

_BASE_RINGS: Dict[int, Type[GradedPolynomial]] = {1: QmPoly1, 2: QmPoly2}


def level_of(poly: GradedPolynomial) -> int:
    if isinstance(poly, QmPoly1):
        return 1
    if isinstance(poly, QmPoly2):
        return 2
    raise RingMismatchError(f"no quasimodular level for {type(poly).__name__}")


@lru_cache(maxsize=4096)
def _lift_monomial(mono: Monomial) -> QmPoly2:
    from qmcert.domains.qm2.service import from_level1

    return from_level1(QmPoly1({mono: Fraction(1)}))


@dataclass(frozen=True, eq=False)
class RqmElem:
    terms: Mapping[Key, Fraction]
    level: int = 1

    def __post_init__(self):
        if self.level not in _BASE_RINGS:
            raise DomainError(f"level must be 1 or 2, got {self.level}")
        clean: Dict[Key, Fraction] = {}
        for (p, u, mono), c in self.terms.items():
            if p < 0:
                raise DomainError(f"negative power of P in term {(p, u, mono)}")
            c = Fraction(c)
            key = (int(p), int(u), tuple(mono))
            clean[key] = clean.get(key, Fraction(0)) + c
        clean = {k: c for k, c in sorted(clean.items()) if c}
        object.__setattr__(self, "terms", MappingProxyType(clean))

    # --- construction ---

    @property
    def base_ring(self) -> Type[GradedPolynomial]:
        return _BASE_RINGS[self.level]

    @classmethod
    def from_poly(cls, poly: BasePoly, p: int = 0, u: int = 0) -> "RqmElem":
        return cls({(p, u, m): c for m, c in poly.items()}, level_of(poly))

    @classmethod
    def constant(cls, value, level: int = 1) -> "RqmElem":
        return cls({(0, 0, (0, 0, 0)): Fraction(value)}, level)

    @classmethod
    def one(cls, level: int = 1) -> "RqmElem":
        return cls.constant(1, level)

    @classmethod
    def P(cls, level: int = 1) -> "RqmElem":
        return cls({(1, 0, (0, 0, 0)): Fraction(1)}, level)

    @classmethod
    def T(cls, exponent: int = 1, level: int = 1) -> "RqmElem":
        return cls({(0, exponent, (0, 0, 0)): Fraction(1)}, level)

    # --- inspection ---

    def is_zero(self) -> bool:
        return not self.terms

    def items(self):
        return self.terms.items()

    def term_weight(self, key: Key) -> int:
        p, u, mono = key
        return self.base_ring.monomial_weight(mono) + p + u

    def weights(self) -> set:
        return {self.term_weight(k) for k in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.weights()) == 1

    @property
    def weight(self) -> int:
        ws = self.weights()
        if len(ws) != 1:
            raise InhomogeneousError(f"element of weights {sorted(ws)}")
        return next(iter(ws))

    def components(self) -> Dict[Tuple[int, int], BasePoly]:
        """Group terms by (P-power, T-power) into base-ring polynomials."""
        grouped: Dict[Tuple[int, int], Dict[Monomial, Fraction]] = {}
        for (p, u, mono), c in self.terms.items():
            grouped.setdefault((p, u), {})[mono] = c
        ring = self.base_ring
        return {pu: ring(t) for pu, t in grouped.items()}

    def promote(self, level: int) -> "RqmElem":
        if level == self.level:
            return self
        if level < self.level:
            raise RingMismatchError("level Γ(2) elements cannot be lowered to level 1")
        out: Dict[Key, Fraction] = {}
        for (p, u, mono), c in self.terms.items():
            for m2, c2 in _lift_monomial(mono).items():
                key = (p, u, m2)
                out[key] = out.get(key, 0) + c * c2
        return RqmElem(out, level)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = _align(self, other)
        return dict(a.terms) == dict(b.terms)

    def __hash__(self) -> int:
        return hash((self.level, frozenset(self.terms.items())))

    # --- arithmetic ---

    def _coerce(self, other):
        if isinstance(other, RqmElem):
            return other
        if isinstance(other, (int, Fraction)):
            return RqmElem.constant(other, self.level)
        if isinstance(other, (QmPoly1, QmPoly2)):
            return RqmElem.from_poly(other)
        return None

    def __neg__(self) -> "RqmElem":
        return RqmElem({k: -c for k, c in self.terms.items()}, self.level)

    def __add__(self, other) -> "RqmElem":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = _align(self, other)
        out: Dict[Key, Fraction] = dict(a.terms)
        for k, c in b.terms.items():
            out[k] = out.get(k, 0) + c
        return RqmElem(out, a.level)

    __radd__ = __add__

    def __sub__(self, other) -> "RqmElem":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RqmElem":
        return (-self) + other

    def scale(self, factor) -> "RqmElem":
        factor = Fraction(factor)
        return RqmElem({k: factor * c for k, c in self.terms.items()}, self.level)

    def __mul__(self, other) -> "RqmElem":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = _align(self, other)
        out: Dict[Key, Fraction] = {}
        for (p1, u1, m1), c1 in a.terms.items():
            for (p2, u2, m2), c2 in b.terms.items():
                key = (p1 + p2, u1 + u2, (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]))
                out[key] = out.get(key, 0) + c1 * c2
        return RqmElem(out, a.level)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RqmElem":
        if isinstance(other, (int, Fraction)):
            return self.scale(1 / Fraction(other))
        return NotImplemented

    def __pow__(self, exponent: int) -> "RqmElem":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            # only monomials c·T^u are invertible here
            if len(self.terms) != 1:
                raise DomainError("negative powers are defined only for c·T^u")
            (p, u, mono), c = next(iter(self.terms.items()))
            if p or any(mono):
                raise DomainError("negative powers are defined only for c·T^u")
            return RqmElem({(0, u * exponent, mono): c ** exponent}, self.level)
        result = RqmElem.one(self.level)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        chunks = []
        for (p, u), poly in self.components().items():
            factors = []
            if p:
                factors.append("P" if p == 1 else f"P^{p}")
            if u:
                factors.append("T" if u == 1 else f"T^{u}" if u > 0 else f"T^({u})")
            prefix = "*".join(factors)
            body = str(poly)
            if not prefix:
                chunks.append(f"({body})")
            elif body == "1":
                chunks.append(prefix)
            else:
                chunks.append(f"{prefix}*({body})")
        return " + ".join(chunks)

    def __repr__(self) -> str:
        return f"RqmElem({str(self)!r}, level={self.level})"


def _align(a: RqmElem, b: RqmElem) -> Tuple[RqmElem, RqmElem]:
    level = max(a.level, b.level)
    return a.promote(level), b.promote(level)
