"""Parser for polynomial expressions.

Grammar (whitespace insensitive, columns are 1-based):

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := "-" unary | power
    power  := atom ("^" INT)?
    atom   := INT ("/" INT)? | NAME | "(" expr ")"

Multiplication must be explicit; ``^`` is the only power operator.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .ring import Poly, PolyRing


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    column: int


def _tokenize(src: str) -> list[_Token]:
    tokens = []
    i, n = 0, len(src)
    while i < n:
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        col = i + 1
        if ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            tokens.append(_Token("INT", src[i:j], col))
            i = j
        elif ch.isalpha():
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            tokens.append(_Token("NAME", src[i:j], col))
            i = j
        elif ch == "*":
            if i + 1 < n and src[i + 1] == "*":
                raise ParseError("'**' is not a power operator, use '^'", col)
            tokens.append(_Token("*", ch, col))
            i += 1
        elif ch in "+-^/()":
            tokens.append(_Token(ch, ch, col))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", col)
    tokens.append(_Token("END", "", n + 1))
    return tokens


class _Parser:
    def __init__(self, ring: PolyRing, tokens: list[_Token]):
        self.ring = ring
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(
                f"expected {kind!r}, found {tok.text or 'end of input'!r}",
                tok.column,
            )
        return self.advance()

    def parse(self) -> Poly:
        p = self.expr()
        tok = self.peek()
        if tok.kind != "END":
            raise ParseError(f"unexpected {tok.text!r}", tok.column)
        return p

    def expr(self) -> Poly:
        p = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            q = self.term()
            p = p + q if op.kind == "+" else p - q
        return p

    def term(self) -> Poly:
        p = self.unary()
        while self.peek().kind == "*":
            self.advance()
            p = p * self.unary()
        return p

    def unary(self) -> Poly:
        if self.peek().kind == "-":
            self.advance()
            return -self.unary()
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.peek().kind == "^":
            self.advance()
            tok = self.expect("INT")
            return base ** int(tok.text)
        return base

    def atom(self) -> Poly:
        tok = self.peek()
        if tok.kind == "INT":
            self.advance()
            num = int(tok.text)
            if self.peek().kind == "/":
                self.advance()
                den_tok = self.expect("INT")
                den = int(den_tok.text)
                if den == 0:
                    raise ParseError("division by zero", den_tok.column)
                try:
                    c = self.ring.domain.from_literal(num, den)
                except Exception as exc:
                    raise ParseError(str(exc), den_tok.column) from None
                return self.ring.const(c)
            return self.ring.const(num)
        if tok.kind == "NAME":
            self.advance()
            if tok.text not in self.ring._index:
                raise ParseError(f"unknown variable {tok.text!r}", tok.column)
            return self.ring.var(tok.text)
        if tok.kind == "(":
            self.advance()
            p = self.expr()
            self.expect(")")
            return p
        raise ParseError(
            f"expected a number, variable or '(', found "
            f"{tok.text or 'end of input'!r}",
            tok.column,
        )


def parse_poly(ring: PolyRing, src: str) -> Poly:
    """Parse one polynomial expression in the given ring."""
    return _Parser(ring, _tokenize(src)).parse()
