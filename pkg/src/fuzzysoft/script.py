"""Set-level scripts: assignments, printing and saving of fuzzy soft sets
composed with union, intersect, complement and connective application.

Statement forms (full EBNF in docs/grammar.md)::

    H = union(S, G);
    K = apply(dual(product), S, G);
    L = apply(fn(x, y) => x * y, S, G);
    print H;
    save(H, "out.fss");

Free identifiers must be declared external at parse time (the CLI passes
the names bound via ``--bind``); everything else must be assigned before
use, and builtin connective names cannot be shadowed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Union

from .connectives import (
    ScalarConnective,
    builtin,
    dual_of,
    scalar_from_parsed,
)
from .connectives import _BUILTINS  # stable builtin name table
from .errors import (
    FuzzySoftError,
    ParseError,
    ScriptRuntimeError,
    UndefinedNameError,
    UnknownBuiltinError,
)
from .expr import (
    EOF,
    IDENT,
    NUMBER,
    PUNCT,
    STRING,
    ScalarExpr,
    SourceSpan,
    Token,
    _ScalarParser,
    tokenize,
)
from .fileio import save_fss
from .sets import (
    FuzzySoftSet,
    apply_connective,
    complement_fss,
    intersect_fss,
    render_fss,
    union_fss,
)

_KEYWORDS = frozenset(
    {"print", "save", "union", "intersect", "apply", "complement", "dual", "fn",
     "min", "max", "pow", "abs", "x", "y"}
)


# --- AST ------------------------------------------------------------------

@dataclass(frozen=True)
class NameRef:
    name: str
    span: SourceSpan = field(compare=False)


@dataclass(frozen=True)
class ComplementOp:
    operand: "SetExpr"
    span: SourceSpan = field(compare=False)


@dataclass(frozen=True)
class UnionOp:
    left: "SetExpr"
    right: "SetExpr"
    span: SourceSpan = field(compare=False)


@dataclass(frozen=True)
class IntersectOp:
    left: "SetExpr"
    right: "SetExpr"
    span: SourceSpan = field(compare=False)


@dataclass(frozen=True)
class BuiltinRef:
    name: str
    span: SourceSpan = field(compare=False)


@dataclass(frozen=True)
class DualRef:
    inner: "ConnTerm"
    span: SourceSpan = field(compare=False)


@dataclass(frozen=True)
class InlineFn:
    body: ScalarExpr
    span: SourceSpan = field(compare=False)


ConnTerm = Union[BuiltinRef, DualRef, InlineFn]


@dataclass(frozen=True)
class ApplyOp:
    connective: ConnTerm
    left: "SetExpr"
    right: "SetExpr"
    span: SourceSpan = field(compare=False)


SetExpr = Union[NameRef, ComplementOp, UnionOp, IntersectOp, ApplyOp]


@dataclass(frozen=True)
class Assign:
    name: str
    expr: SetExpr
    span: SourceSpan = field(compare=False)


@dataclass(frozen=True)
class Print:
    expr: SetExpr
    span: SourceSpan = field(compare=False)


@dataclass(frozen=True)
class Save:
    expr: SetExpr
    path: str
    span: SourceSpan = field(compare=False)


Statement = Union[Assign, Print, Save]


@dataclass(frozen=True)
class Script:
    statements: tuple[Statement, ...]


# --- Parser ----------------------------------------------------------------

class _ScriptParser:
    def __init__(self, tokens: list[Token], externals: frozenset[str]):
        self.tokens = tokens
        self.pos = 0
        self.defined: set[str] = set(externals)

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

    def expect_ident(self, context: str) -> Token:
        tok = self.peek()
        if tok.kind == IDENT:
            return self.advance()
        raise ParseError(f"expected identifier {context}, found {tok.describe()}", tok.span)

    def parse_script(self) -> Script:
        statements = []
        while self.peek().kind != EOF:
            statements.append(self.parse_statement())
        return Script(tuple(statements))

    def parse_statement(self) -> Statement:
        tok = self.peek()
        if tok.kind == IDENT and tok.text == "print":
            self.advance()
            expr = self.parse_setexpr()
            end = self.expect_punct(";", "to end the print statement")
            return Print(expr, tok.span.merge(end.span))
        if tok.kind == IDENT and tok.text == "save":
            self.advance()
            self.expect_punct("(", "after 'save'")
            expr = self.parse_setexpr()
            self.expect_punct(",", "between the set and the target path")
            path_tok = self.peek()
            if path_tok.kind != STRING:
                raise ParseError(
                    f'expected a quoted path like "out.fss", found {path_tok.describe()}',
                    path_tok.span,
                )
            self.advance()
            self.expect_punct(")", "to close 'save'")
            end = self.expect_punct(";", "to end the save statement")
            return Save(expr, path_tok.text[1:-1], tok.span.merge(end.span))
        if tok.kind == IDENT:
            name_tok = self.advance()
            self.expect_punct("=", f"after identifier {name_tok.text!r}")
            expr = self.parse_setexpr()
            end = self.expect_punct(";", "to end the assignment")
            name = name_tok.text
            if name in _KEYWORDS or name in _BUILTINS:
                raise ParseError(
                    f"cannot shadow the builtin name {name!r}", name_tok.span
                )
            self.defined.add(name)
            return Assign(name, expr, name_tok.span.merge(end.span))
        raise ParseError(f"expected a statement, found {tok.describe()}", tok.span)

    def parse_setexpr(self) -> SetExpr:
        tok = self.peek()
        if tok.kind != IDENT:
            raise ParseError(f"expected a set expression, found {tok.describe()}", tok.span)
        if tok.text == "complement":
            self.advance()
            self.expect_punct("(", "after 'complement'")
            operand = self.parse_setexpr()
            end = self.expect_punct(")", "to close 'complement'")
            return ComplementOp(operand, tok.span.merge(end.span))
        if tok.text in ("union", "intersect"):
            self.advance()
            self.expect_punct("(", f"after {tok.text!r}")
            left = self.parse_setexpr()
            self.expect_punct(",", f"between the operands of {tok.text!r}")
            right = self.parse_setexpr()
            end = self.expect_punct(")", f"to close {tok.text!r}")
            cls = UnionOp if tok.text == "union" else IntersectOp
            return cls(left, right, tok.span.merge(end.span))
        if tok.text == "apply":
            self.advance()
            self.expect_punct("(", "after 'apply'")
            conn = self.parse_connective()
            self.expect_punct(",", "after the connective")
            left = self.parse_setexpr()
            self.expect_punct(",", "between the operands of 'apply'")
            right = self.parse_setexpr()
            end = self.expect_punct(")", "to close 'apply'")
            return ApplyOp(conn, left, right, tok.span.merge(end.span))
        name_tok = self.advance()
        if name_tok.text in _KEYWORDS:
            raise ParseError(
                f"{name_tok.text!r} cannot be used as a set name here", name_tok.span
            )
        if name_tok.text not in self.defined:
            raise UndefinedNameError(
                f"undefined identifier {name_tok.text!r}", name_tok.span
            )
        return NameRef(name_tok.text, name_tok.span)

    def parse_connective(self) -> ConnTerm:
        tok = self.peek()
        if tok.kind == IDENT and tok.text == "dual":
            self.advance()
            self.expect_punct("(", "after 'dual'")
            inner = self.parse_connective()
            end = self.expect_punct(")", "to close 'dual'")
            return DualRef(inner, tok.span.merge(end.span))
        if tok.kind == IDENT and tok.text == "fn":
            self.advance()
            self.expect_punct("(", "after 'fn'")
            first = self.expect_ident("as the first parameter")
            if first.text != "x":
                raise ParseError(f"inline fn parameters are (x, y), found {first.text!r}",
                                 first.span)
            self.expect_punct(",", "between fn parameters")
            second = self.expect_ident("as the second parameter")
            if second.text != "y":
                raise ParseError(f"inline fn parameters are (x, y), found {second.text!r}",
                                 second.span)
            self.expect_punct(")", "after fn parameters")
            self.expect_punct("=>", "before the fn body")
            inner = _ScalarParser(self.tokens)
            inner.pos = self.pos
            body = inner.parse_expr()
            end_span = self.tokens[inner.pos - 1].span
            self.pos = inner.pos
            return InlineFn(body, tok.span.merge(end_span))
        if tok.kind == IDENT:
            return self.parse_builtin_name()
        raise ParseError(f"expected a connective, found {tok.describe()}", tok.span)

    def parse_builtin_name(self) -> BuiltinRef:
        """A builtin name: hyphen-joined identifiers, optionally with a
        numeric parameter, e.g. ``standard-negation`` or ``sugeno(1)``."""
        first = self.advance()
        parts = [first.text]
        span = first.span
        while True:
            tok = self.peek()
            nxt = self.tokens[self.pos + 1] if tok.kind != EOF else tok
            if tok.kind == PUNCT and tok.text == "-" and nxt.kind == IDENT:
                self.advance()
                part = self.advance()
                parts.append(part.text)
                span = span.merge(part.span)
            else:
                break
        name = "-".join(parts)
        if self.peek().kind == PUNCT and self.peek().text == "(":
            self.advance()
            num = self.peek()
            negative = False
            if num.kind == PUNCT and num.text == "-":
                self.advance()
                negative = True
                num = self.peek()
            if num.kind != NUMBER:
                raise ParseError(
                    f"expected a numeric parameter for {name!r}, found {num.describe()}",
                    num.span,
                )
            self.advance()
            end = self.expect_punct(")", f"to close the parameter of {name!r}")
            value = -num.value if negative else num.value
            name = f"{name}({num.text if not negative else '-' + num.text})"
            span = span.merge(end.span)
        try:
            builtin(name)
        except UnknownBuiltinError as err:
            raise ParseError(str(err), span) from None
        return BuiltinRef(name, span)


def parse_script(text: str, externals: Iterable[str] = ()) -> Script:
    """Parse a script; identifiers must be assigned before use or listed
    in ``externals`` (names the caller promises to bind at evaluation)."""
    tokens = tokenize(text)
    parser = _ScriptParser(tokens, frozenset(externals))
    return parser.parse_script()


# --- Evaluator ---------------------------------------------------------------

@dataclass(frozen=True)
class ScriptResult:
    """Outputs of a script run: printed renderings, saved paths, final
    name bindings."""

    printed: tuple[str, ...]
    saved: tuple[str, ...]
    env: dict[str, FuzzySoftSet]


def _resolve_connective(term: ConnTerm) -> ScalarConnective:
    if isinstance(term, BuiltinRef):
        return builtin(term.name)
    if isinstance(term, DualRef):
        return dual_of(_resolve_connective(term.inner))
    return scalar_from_parsed(term.body, arity=2)


def eval_script(
    script: Script,
    env: Mapping[str, FuzzySoftSet] | None = None,
    base_dir: str | Path | None = None,
) -> ScriptResult:
    """Execute statements in order against the given name bindings.

    Set operations failing mid-script (universe mismatch, codomain
    violation, tag collision) are re-raised as ``ScriptRuntimeError``
    with the statement's span attached.  Saved paths resolve relative to
    ``base_dir`` (default: the current directory).
    """
    bindings: dict[str, FuzzySoftSet] = dict(env or {})
    printed: list[str] = []
    saved: list[str] = []
    base = Path(base_dir) if base_dir is not None else Path(".")

    def eval_set(node: SetExpr) -> FuzzySoftSet:
        if isinstance(node, NameRef):
            value = bindings.get(node.name)
            if value is None:
                raise UndefinedNameError(
                    f"identifier {node.name!r} has no bound value", node.span
                )
            return value
        if isinstance(node, ComplementOp):
            return complement_fss(eval_set(node.operand))
        if isinstance(node, UnionOp):
            return union_fss(eval_set(node.left), eval_set(node.right))
        if isinstance(node, IntersectOp):
            return intersect_fss(eval_set(node.left), eval_set(node.right))
        if isinstance(node, ApplyOp):
            connective = _resolve_connective(node.connective)
            return apply_connective(connective, eval_set(node.left), eval_set(node.right))
        raise TypeError(f"not a set expression node: {node!r}")

    for statement in script.statements:
        try:
            if isinstance(statement, Assign):
                bindings[statement.name] = eval_set(statement.expr)
            elif isinstance(statement, Print):
                printed.append(render_fss(eval_set(statement.expr)))
            elif isinstance(statement, Save):
                value = eval_set(statement.expr)
                target = base / statement.path
                save_fss(value, target)
                saved.append(str(target))
            else:
                raise TypeError(f"not a statement node: {statement!r}")
        except FuzzySoftError as err:
            if isinstance(err, (UndefinedNameError, ScriptRuntimeError)):
                raise
            raise ScriptRuntimeError(str(err), statement.span) from err
    return ScriptResult(tuple(printed), tuple(saved), bindings)
