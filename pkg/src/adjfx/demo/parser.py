"""Parser and printer for the demo expression language.

    expr   := 'let' IDENT '=' expr 'in' expr | sum
    sum    := term (('+' | '-') term)*
    term   := atom (('*' | '/') atom)*
    atom   := INT | IDENT | 'ask' IDENT | 'get'
            | 'log' '(' expr ')' | 'put' '(' expr ')' | '(' expr ')'

``let`` extends as far to the right as it can.  ``#`` starts a comment that
runs to the end of the line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

__all__ = [
    "ParseError", "Num", "Var", "BinOp", "Let", "Ask", "Log", "Get", "Put",
    "Expr", "DemoProgram", "parse_program", "pretty", "identifiers",
]

KEYWORDS = frozenset({"let", "in", "ask", "log", "get", "put"})


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Let:
    name: str
    bound: "Expr"
    body: "Expr"


@dataclass(frozen=True)
class Ask:
    name: str


@dataclass(frozen=True)
class Log:
    arg: "Expr"


@dataclass(frozen=True)
class Get:
    pass


@dataclass(frozen=True)
class Put:
    arg: "Expr"


Expr = Union[Num, Var, BinOp, Let, Ask, Log, Get, Put]


@dataclass(frozen=True)
class DemoProgram:
    source: str
    ast: Expr


_TOKEN = re.compile(r"\s+|#[^\n]*|(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)"
                    r"|(?P<sym>[-+*/()=])")


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            raise ParseError(f"unexpected character {src[pos]!r}", pos)
        kind = m.lastgroup
        if kind == "ident" and m.group() in KEYWORDS:
            kind = "kw"
        if kind is not None:
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("eof", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, text: str | None = None) -> tuple[str, str, int]:
        tok = self.peek()
        if tok[0] != kind or (text is not None and tok[1] != text):
            want = text or kind
            got = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise ParseError(f"expected {want}, got {got}", tok[2])
        return self.advance()

    def expr(self) -> Expr:
        if self.peek()[:2] == ("kw", "let"):
            self.advance()
            name = self.expect("ident")[1]
            self.expect("sym", "=")
            bound = self.expr()
            self.expect("kw", "in")
            return Let(name, bound, self.expr())
        return self.binary(("+", "-"), self.term)

    def term(self) -> Expr:
        return self.binary(("*", "/"), self.atom)

    def binary(self, ops, operand) -> Expr:
        left = operand()
        while self.peek()[0] == "sym" and self.peek()[1] in ops:
            op = self.advance()[1]
            left = BinOp(op, left, operand())
        return left

    def atom(self) -> Expr:
        kind, text, pos = self.peek()
        if kind == "int":
            self.advance()
            return Num(int(text))
        if kind == "ident":
            self.advance()
            return Var(text)
        if kind == "kw":
            self.advance()
            if text == "ask":
                return Ask(self.expect("ident")[1])
            if text == "get":
                return Get()
            if text in ("log", "put"):
                self.expect("sym", "(")
                arg = self.expr()
                self.expect("sym", ")")
                return Log(arg) if text == "log" else Put(arg)
            if text == "let":
                # only reachable when a let appears as an operand
                self.i -= 1
                return self.expr()
            raise ParseError(f"unexpected keyword {text!r}", pos)
        if (kind, text) == ("sym", "("):
            self.advance()
            inner = self.expr()
            self.expect("sym", ")")
            return inner
        got = "end of input" if kind == "eof" else repr(text)
        raise ParseError(f"expected an expression, got {got}", pos)


def parse_program(src: str) -> DemoProgram:
    p = _Parser(src)
    ast = p.expr()
    p.expect("eof")
    return DemoProgram(src, ast)


_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def pretty(e: Expr) -> str:
    """Source text that parses back to ``e``, with minimal parentheses."""
    return _pretty(e, 0)


def _pretty(e: Expr, ctx: int) -> str:
    # ctx is how tightly the surrounding position binds; 0 is top level
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Ask):
        return f"ask {e.name}"
    if isinstance(e, Get):
        return "get"
    if isinstance(e, Log):
        return f"log({_pretty(e.arg, 0)})"
    if isinstance(e, Put):
        return f"put({_pretty(e.arg, 0)})"
    if isinstance(e, Let):
        text = f"let {e.name} = {_pretty(e.bound, 0)} in {_pretty(e.body, 0)}"
        return text if ctx == 0 else f"({text})"
    prec = _PREC[e.op]
    text = f"{_pretty(e.left, prec)} {e.op} {_pretty(e.right, prec + 0.5)}"
    return text if ctx <= prec else f"({text})"


def identifiers(e: Expr) -> set[str]:
    """Every name the program mentions, bound or asked for."""
    if isinstance(e, (Var, Ask)):
        return {e.name}
    if isinstance(e, BinOp):
        return identifiers(e.left) | identifiers(e.right)
    if isinstance(e, Let):
        return {e.name} | identifiers(e.bound) | identifiers(e.body)
    if isinstance(e, (Log, Put)):
        return identifiers(e.arg)
    return set()
