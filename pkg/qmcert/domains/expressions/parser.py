# qmcert/domains/expressions/parser.py
"""
Top-down operator precedence parser.

    expr   := expr ('+' | '-') expr | expr ('*' | '/') expr | '-' expr | atom ('^' ['-'] INT)*
    atom   := INT | NAME | 'X' '(' INT ',' INT ')' | 'S' '[' ['-'] INT ']' '(' expr ')'
            | ('D' | 'slashS' | 'flip') '(' expr ')' | '(' expr ')'

Binding powers: '+'/'-' 10, '*'/'/' 20, prefix '-' 25, '^' 30. Offsets in
errors are byte offsets into the UTF-8 source.
"""

import re
from dataclasses import dataclass
from typing import Iterator, List

from qmcert.core.exceptions import ExpressionSyntaxError, UnknownIdentifierError
from qmcert.domains.expressions.entities import (
    GENERATORS,
    Binary,
    Call,
    Expr,
    Gen,
    Neg,
    Num,
    Pow,
    XRef,
)

TOKEN_PAT = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()\[\],]))")

LBP = {"+": 10, "-": 10, "*": 20, "/": 20, "^": 30}
PREFIX_BP = 25

UNARY_CALLS = ("D", "slashS", "flip")


@dataclass(frozen=True)
class Token:
    kind: str  # int, name, op or end
    text: str
    offset: int  # byte offset

    @property
    def lbp(self) -> int:
        return LBP.get(self.text, 0) if self.kind == "op" else 0


def tokenize(src: str) -> Iterator[Token]:
    pos = 0
    while True:
        m = TOKEN_PAT.match(src, pos)
        if m is None or m.end() == pos:
            rest = src[pos:]
            if rest.strip() == "":
                yield Token("end", "", len(src.encode()))
                return
            bad = pos + (len(rest) - len(rest.lstrip()))
            raise ExpressionSyntaxError(f"unexpected character {src[bad]!r}", len(src[:bad].encode()))
        kind = m.lastgroup
        start = m.start(kind)
        yield Token(kind, m.group(kind), len(src[:start].encode()))
        pos = m.end()


class Parser:
    def __init__(self, src: str):
        self.src = src
        self._tokens: List[Token] = list(tokenize(src))
        self._i = 0

    @property
    def token(self) -> Token:
        return self._tokens[self._i]

    def advance(self) -> Token:
        t = self.token
        if t.kind != "end":
            self._i += 1
        return t

    def expect(self, text: str) -> Token:
        t = self.token
        if t.text != text or t.kind == "end":
            found = "end of input" if t.kind == "end" else repr(t.text)
            raise ExpressionSyntaxError(f"expected {text!r}, found {found}", t.offset)
        return self.advance()

    def integer(self, signed: bool = False) -> int:
        sign = 1
        if signed and self.token.text == "-" and self.token.kind == "op":
            self.advance()
            sign = -1
        t = self.token
        if t.kind != "int":
            raise ExpressionSyntaxError("expected an integer literal", t.offset)
        self.advance()
        return sign * int(t.text)

    def parse(self) -> Expr:
        if self.token.kind == "end":
            raise ExpressionSyntaxError("empty expression", self.token.offset)
        tree = self.expression()
        if self.token.kind != "end":
            raise ExpressionSyntaxError(f"unexpected {self.token.text!r}", self.token.offset)
        return tree

    def expression(self, rbp: int = 0) -> Expr:
        t = self.advance()
        left = self.nud(t)
        while rbp < self.token.lbp:
            t = self.advance()
            left = self.led(t, left)
        return left

    # prefix position
    def nud(self, t: Token) -> Expr:
        if t.kind == "int":
            return Num(int(t.text))
        if t.kind == "name":
            return self.name(t)
        if t.text == "(":
            inner = self.expression()
            self.expect(")")
            return inner
        if t.text == "-":
            return Neg(self.expression(PREFIX_BP))
        if t.kind == "end":
            raise ExpressionSyntaxError("unexpected end of input", t.offset)
        raise ExpressionSyntaxError(f"unexpected {t.text!r}", t.offset)

    # infix position
    def led(self, t: Token, left: Expr) -> Expr:
        if t.text == "^":
            return Pow(left, self.integer(signed=True))
        right = self.expression(t.lbp)
        return Binary(t.text, left, right)

    def name(self, t: Token) -> Expr:
        if t.text in GENERATORS:
            return Gen(t.text)
        if t.text == "X":
            self.expect("(")
            w = self.integer()
            self.expect(",")
            s = self.integer()
            self.expect(")")
            return XRef(w, s)
        if t.text == "S":
            self.expect("[")
            k = self.integer(signed=True)
            self.expect("]")
            return Call("S", self.argument(), k)
        if t.text in UNARY_CALLS:
            return Call(t.text, self.argument())
        raise UnknownIdentifierError(f"unknown identifier {t.text!r}", t.offset)

    def argument(self) -> Expr:
        self.expect("(")
        inner = self.expression()
        self.expect(")")
        return inner


def parse_expr(src: str) -> Expr:
    return Parser(src).parse()
