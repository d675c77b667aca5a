"""Tokenizer, recursive-descent parser, evaluator and printer for scalar
connective expressions over the variables ``x`` and ``y``.

Grammar (full EBNF in docs/grammar.md):

    expr   := term { ("+" | "-") term }
    term   := factor { ("*" | "/") factor }
    factor := "-" factor | atom
    atom   := NUMBER | "x" | "y"
            | ("min" | "max" | "pow") "(" expr "," expr ")"
            | "abs" "(" expr ")"
            | "(" expr ")"

Numbers are plain decimals with an optional fraction; exponent notation
is rejected so test vectors stay human-auditable.  ``#`` starts a comment
running to the end of the line.  Offsets are in characters (identical to
byte offsets for ASCII sources).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .errors import (
    DivisionByZeroError,
    ParseError,
    UnboundVariableError,
)


@dataclass(frozen=True)
class SourceSpan:
    """Extent of a token or AST node: character offsets plus 1-based line/column."""

    start: int
    end: int
    line: int
    column: int

    def __post_init__(self):
        if self.start > self.end:
            raise ValueError(f"invalid span: start {self.start} > end {self.end}")

    def merge(self, other: "SourceSpan") -> "SourceSpan":
        first = self if self.start <= other.start else other
        return SourceSpan(min(self.start, other.start), max(self.end, other.end),
                          first.line, first.column)

    def excerpt(self, text: str) -> str:
        return text[self.start:self.end]


# Token kinds
NUMBER = "number"
IDENT = "ident"
STRING = "string"
PUNCT = "punct"
EOF = "eof"

_PUNCT_CHARS = set("(),;=+-*/")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    span: SourceSpan
    value: float | None = None

    def describe(self) -> str:
        if self.kind == EOF:
            return "end of input"
        return f"{self.text!r}"


def _is_digit(c: str) -> bool:
    # ASCII only: str.isdigit() accepts characters float() rejects.
    return "0" <= c <= "9"


def tokenize(text: str) -> list[Token]:
    """Split source text into tokens, skipping whitespace and # comments.

    Raises ``ParseError`` with a span on the first illegal character,
    malformed number, or unterminated string.
    """
    tokens: list[Token] = []
    i, line, col = 0, 1, 1
    n = len(text)

    def span(start: int, end: int, sline: int, scol: int) -> SourceSpan:
        return SourceSpan(start, end, sline, scol)

    while i < n:
        c = text[i]
        if c == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if c in " \t\r":
            i += 1
            col += 1
            continue
        if c == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start, sline, scol = i, line, col
        if _is_digit(c):
            while i < n and _is_digit(text[i]):
                i += 1
            if i < n and text[i] == ".":
                i += 1
                if i >= n or not _is_digit(text[i]):
                    raise ParseError(
                        "malformed number: expected digits after the decimal point",
                        span(start, i, sline, scol),
                    )
                while i < n and _is_digit(text[i]):
                    i += 1
            if i < n and (text[i].isalpha() or text[i] == "_" or text[i] == "."):
                reason = (
                    "only one decimal point is allowed"
                    if text[i] == "."
                    else "exponent notation is not supported"
                )
                raise ParseError(
                    f"malformed number {text[start:i + 1]!r} ({reason})",
                    span(start, i + 1, sline, scol),
                )
            lexeme = text[start:i]
            col += i - start
            tokens.append(Token(NUMBER, lexeme, span(start, i, sline, scol), float(lexeme)))
            continue
        if c.isalpha() or c == "_":
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
            lexeme = text[start:i]
            col += i - start
            tokens.append(Token(IDENT, lexeme, span(start, i, sline, scol)))
            continue
        if c == '"':
            i += 1
            while i < n and text[i] not in ('"', "\n"):
                i += 1
            if i >= n or text[i] != '"':
                raise ParseError("unterminated string", span(start, i, sline, scol))
            i += 1
            lexeme = text[start:i]
            col += i - start
            tokens.append(Token(STRING, lexeme, span(start, i, sline, scol)))
            continue
        if c == "=":
            if i + 1 < n and text[i + 1] == ">":
                tokens.append(Token(PUNCT, "=>", span(i, i + 2, sline, scol)))
                i += 2
                col += 2
            else:
                tokens.append(Token(PUNCT, "=", span(i, i + 1, sline, scol)))
                i += 1
                col += 1
            continue
        if c in _PUNCT_CHARS:
            tokens.append(Token(PUNCT, c, span(i, i + 1, sline, scol)))
            i += 1
            col += 1
            continue
        raise ParseError(f"illegal character {c!r}", span(i, i + 1, sline, scol))

    tokens.append(Token(EOF, "", SourceSpan(n, n, line, col)))
    return tokens


# ---------------------------------------------------------------------------
# Scalar expression AST.  Spans never participate in equality, so two parses
# of the same shape compare structurally equal.

@dataclass(frozen=True)
class Num:
    value: float
    span: SourceSpan = field(compare=False)


@dataclass(frozen=True)
class Var:
    name: str
    span: SourceSpan = field(compare=False)


@dataclass(frozen=True)
class Neg:
    operand: "ScalarExpr"
    span: SourceSpan = field(compare=False)


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "ScalarExpr"
    right: "ScalarExpr"
    span: SourceSpan = field(compare=False)


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple["ScalarExpr", ...]
    span: SourceSpan = field(compare=False)


ScalarExpr = Union[Num, Var, Neg, BinOp, Call]

_CALL_ARITY = {"min": 2, "max": 2, "pow": 2, "abs": 1}
_VARIABLES = ("x", "y")


class _ScalarParser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != EOF:
            self.pos += 1
        return tok

    def match_punct(self, text: str) -> bool:
        tok = self.peek()
        if tok.kind == PUNCT and tok.text == text:
            self.advance()
            return True
        return False

    def expect_punct(self, text: str, context: str) -> Token:
        tok = self.peek()
        if tok.kind == PUNCT and tok.text == text:
            return self.advance()
        raise ParseError(f"expected {text!r} {context}, found {tok.describe()}", tok.span)

    def parse_expr(self) -> ScalarExpr:
        node = self.parse_term()
        while True:
            tok = self.peek()
            if tok.kind == PUNCT and tok.text in ("+", "-"):
                self.advance()
                right = self.parse_term()
                node = BinOp(tok.text, node, right, node.span.merge(right.span))
            else:
                return node

    def parse_term(self) -> ScalarExpr:
        node = self.parse_factor()
        while True:
            tok = self.peek()
            if tok.kind == PUNCT and tok.text in ("*", "/"):
                self.advance()
                right = self.parse_factor()
                node = BinOp(tok.text, node, right, node.span.merge(right.span))
            else:
                return node

    def parse_factor(self) -> ScalarExpr:
        tok = self.peek()
        if tok.kind == PUNCT and tok.text == "-":
            self.advance()
            operand = self.parse_factor()
            return Neg(operand, tok.span.merge(operand.span))
        return self.parse_atom()

    def parse_atom(self) -> ScalarExpr:
        tok = self.peek()
        if tok.kind == NUMBER:
            self.advance()
            return Num(tok.value, tok.span)
        if tok.kind == IDENT:
            if tok.text in _VARIABLES:
                self.advance()
                return Var(tok.text, tok.span)
            if tok.text in _CALL_ARITY:
                return self.parse_call()
            raise ParseError(
                f"unknown identifier {tok.text!r} (variables are 'x' and 'y'; "
                f"functions are min, max, pow, abs)",
                tok.span,
            )
        if tok.kind == PUNCT and tok.text == "(":
            self.advance()
            node = self.parse_expr()
            self.expect_punct(")", "to close the parenthesized expression")
            return node
        raise ParseError(f"expected expression, found {tok.describe()}", tok.span)

    def parse_call(self) -> ScalarExpr:
        name_tok = self.advance()
        func = name_tok.text
        arity = _CALL_ARITY[func]
        self.expect_punct("(", f"after {func!r}")
        args = [self.parse_expr()]
        while self.match_punct(","):
            args.append(self.parse_expr())
        close = self.expect_punct(")", f"to close the arguments of {func!r}")
        if len(args) != arity:
            raise ParseError(
                f"{func} takes exactly {arity} argument{'s' if arity != 1 else ''}, got {len(args)}",
                name_tok.span.merge(close.span),
            )
        return Call(func, tuple(args), name_tok.span.merge(close.span))


def parse_scalar(text: str) -> ScalarExpr:
    """Parse one scalar expression; the whole input must be consumed."""
    tokens = tokenize(text)
    parser = _ScalarParser(tokens)
    node = parser.parse_expr()
    trailing = parser.peek()
    if trailing.kind != EOF:
        raise ParseError(f"trailing input: found {trailing.describe()}", trailing.span)
    return node


def variables_used(node: ScalarExpr) -> frozenset[str]:
    if isinstance(node, Var):
        return frozenset((node.name,))
    if isinstance(node, Neg):
        return variables_used(node.operand)
    if isinstance(node, BinOp):
        return variables_used(node.left) | variables_used(node.right)
    if isinstance(node, Call):
        out: frozenset[str] = frozenset()
        for arg in node.args:
            out |= variables_used(arg)
        return out
    return frozenset()


def find_variable(node: ScalarExpr, name: str) -> Var | None:
    """First (left-most) occurrence of a variable, for diagnostics."""
    if isinstance(node, Var):
        return node if node.name == name else None
    if isinstance(node, Neg):
        return find_variable(node.operand, name)
    if isinstance(node, BinOp):
        return find_variable(node.left, name) or find_variable(node.right, name)
    if isinstance(node, Call):
        for arg in node.args:
            hit = find_variable(arg, name)
            if hit is not None:
                return hit
    return None


def eval_scalar(node: ScalarExpr, x, y=None):
    """Evaluate an expression at ``x`` (and ``y`` for binary use).

    Accepts floats or numpy arrays; arrays broadcast through every node.
    The result is returned unclamped -- codomain policy belongs to callers.
    """
    scalar_inputs = not (isinstance(x, np.ndarray) or isinstance(y, np.ndarray))
    with np.errstate(all="ignore"):
        out = _eval(node, x, y)
    if scalar_inputs:
        return float(out)
    return out


def _eval(node: ScalarExpr, x, y):
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Var):
        bound = x if node.name == "x" else y
        if bound is None:
            raise UnboundVariableError(f"variable {node.name!r} is not bound", node.span)
        return bound
    if isinstance(node, Neg):
        return -_eval(node.operand, x, y)
    if isinstance(node, BinOp):
        left = _eval(node.left, x, y)
        right = _eval(node.right, x, y)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        if np.any(np.asarray(right) == 0.0):
            raise DivisionByZeroError("division by zero", node.span)
        return left / right
    if isinstance(node, Call):
        args = [_eval(arg, x, y) for arg in node.args]
        if node.func == "min":
            return np.minimum(args[0], args[1])
        if node.func == "max":
            return np.maximum(args[0], args[1])
        if node.func == "pow":
            return np.power(args[0], args[1])
        return np.abs(args[0])
    raise TypeError(f"not a scalar expression node: {node!r}")


# ---------------------------------------------------------------------------
# Pretty printer: canonical spacing, minimal parentheses.  Re-parsing the
# rendering of any parseable input yields a structurally identical AST.

_BIN_PREC = {"+": 0, "-": 0, "*": 1, "/": 1}
_UNARY_PREC = 2
_ATOM_PREC = 3


def pretty_print(node: ScalarExpr) -> str:
    return _fmt(node, -1, False)


def format_number(value: float) -> str:
    """Decimal rendering that re-parses to the identical float."""
    if value == int(value) and abs(value) < 1e16:
        return str(int(value))
    text = repr(value)
    if "e" in text or "E" in text:
        # repr fell back to exponent form, which the grammar rejects.
        text = np.format_float_positional(value, unique=True, trim="-")
    return text


def _fmt(node: ScalarExpr, parent_prec: int, is_right: bool) -> str:
    if isinstance(node, Num):
        return format_number(node.value)
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Call):
        args = ", ".join(_fmt(arg, -1, False) for arg in node.args)
        return f"{node.func}({args})"
    if isinstance(node, Neg):
        text = "-" + _fmt(node.operand, _UNARY_PREC, False)
        prec = _UNARY_PREC
    else:
        prec = _BIN_PREC[node.op]
        left = _fmt(node.left, prec, False)
        right = _fmt(node.right, prec, True)
        text = f"{left} {node.op} {right}"
    if prec < parent_prec or (prec == parent_prec and is_right):
        return f"({text})"
    return text
