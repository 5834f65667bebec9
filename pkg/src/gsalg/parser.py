"""Parser for relation expressions over the free algebra.

Accepted syntax: integer constants, rationals via '/', the operators
+ - * / ^ with parentheses and unary minus.  Generators are written x, y
for two letters or x1, x2, ... in general.  Juxtaposition is not
multiplication: write x*y, not xy.  A relation must be a nonzero element
with no constant term.

Relation files are UTF-8 text, one expression per line; '#' starts a
comment and blank lines are skipped.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, NamedTuple

from .elements import Element
from .words import letter_names

__all__ = ["ParseError", "parse_expression", "parse_relation", "parse_relations"]


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


class _Token(NamedTuple):
    kind: str   # INT NAME OP END
    text: str
    line: int
    col: int


_OPS = set("+-*/^()")


def _tokenize(text: str, line0: int = 1) -> List[_Token]:
    toks: List[_Token] = []
    line, col = line0, 1
    i = 0
    while i < len(text):
        c = text[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if c in " \t\r":
            i += 1
            col += 1
            continue
        start_col = col
        if c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(_Token("INT", text[i:j], line, start_col))
            col += j - i
            i = j
        elif c.isalpha():
            j = i + 1
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(_Token("NAME", text[i:j], line, start_col))
            col += j - i
            i = j
        elif c in _OPS:
            toks.append(_Token("OP", c, line, start_col))
            i += 1
            col += 1
        else:
            raise ParseError(f"unexpected character {c!r}", line, start_col)
    toks.append(_Token("END", "", line, col))
    return toks


class _Parser:
    def __init__(self, tokens: List[_Token], d: int):
        self.toks = tokens
        self.pos = 0
        self.d = d
        self.vars = {nm: i for i, nm in enumerate(letter_names(d))}
        if d <= 2:
            self.vars.setdefault("x1", 0)
            if d == 2:
                self.vars.setdefault("x2", 1)

    def peek(self) -> _Token:
        return self.toks[self.pos]

    def take(self) -> _Token:
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def error(self, msg: str, tok: _Token | None = None):
        t = tok or self.peek()
        raise ParseError(msg, t.line, t.col)

    def parse(self) -> Element:
        e = self.expr()
        t = self.peek()
        if t.kind != "END":
            self.error(f"unexpected {t.text!r}", t)
        return e

    def expr(self) -> Element:
        e = self.term()
        while self.peek().kind == "OP" and self.peek().text in "+-":
            op = self.take().text
            rhs = self.term()
            e = e + rhs if op == "+" else e - rhs
        return e

    def term(self) -> Element:
        e = self.unary()
        while True:
            t = self.peek()
            if t.kind == "OP" and t.text == "*":
                self.take()
                e = e * self.unary()
            elif t.kind == "OP" and t.text == "/":
                self.take()
                rhs_tok = self.peek()
                rhs = self.unary()
                if rhs.degree() > 0:
                    self.error("can only divide by a constant", rhs_tok)
                c = rhs.constant_term()
                if c == 0:
                    self.error("division by zero", rhs_tok)
                e = e.scale(Fraction(1) / c)
            elif t.kind in ("INT", "NAME") or (t.kind == "OP" and t.text == "("):
                self.error(
                    f"missing operator before {t.text!r} (juxtaposition is not multiplication)",
                    t,
                )
            else:
                break
        return e

    def unary(self) -> Element:
        if self.peek().kind == "OP" and self.peek().text == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self) -> Element:
        base = self.atom()
        if self.peek().kind == "OP" and self.peek().text == "^":
            self.take()
            t = self.take()
            if t.kind != "INT":
                self.error("exponent must be a nonnegative integer", t)
            n = int(t.text)
            out = Element.one(self.d)
            for _ in range(n):
                out = out * base
            return out
        return base

    def atom(self) -> Element:
        t = self.take()
        if t.kind == "INT":
            return Element.one(self.d).scale(int(t.text))
        if t.kind == "NAME":
            if t.text not in self.vars:
                self.error(f"unknown generator {t.text!r}", t)
            return Element.generator(self.d, self.vars[t.text])
        if t.kind == "OP" and t.text == "(":
            e = self.expr()
            t2 = self.take()
            if t2.kind != "OP" or t2.text != ")":
                self.error("expected ')'", t2)
            return e
        self.error(f"unexpected {t.text!r}" if t.text else "unexpected end of input", t)


def parse_expression(text: str, d: int = 2, line: int = 1) -> Element:
    return _Parser(_tokenize(text, line), d).parse()


def parse_relation(text: str, d: int = 2, line: int = 1) -> Element:
    """Parse one relation: nonzero, no constant term."""
    e = parse_expression(text, d, line)
    if e.is_zero():
        raise ParseError("relation simplifies to zero", line, 1)
    if e.constant_term() != 0:
        raise ParseError("relation has a constant term", line, 1)
    return e


def parse_relations(text: str, d: int = 2) -> List[Element]:
    """Parse a relation file: one expression per line, '#' comments."""
    out: List[Element] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        out.append(parse_relation(body, d, lineno))
    return out
