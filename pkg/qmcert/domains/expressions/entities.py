"""AST of the modular-form expression language."""

from dataclasses import dataclass
from typing import Optional, Union

GENERATORS = ("E2", "E4", "E6", "H2", "H3", "H4", "Delta", "P", "T")
FUNCTIONS = ("D", "S", "slashS", "flip")


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class XRef:
    weight: int
    depth: int


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Call:
    func: str  # D, S, slashS or flip
    arg: "Expr"
    weight: Optional[int] = None  # only for S[k]


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Binary:
    op: str  # + - * /
    left: "Expr"
    right: "Expr"


Expr = Union[Gen, XRef, Num, Neg, Call, Pow, Binary]
