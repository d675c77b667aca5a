"""Scalar connectives on [0, 1] and their parameter-tagged lifts.

A scalar connective is a unary or binary function on the unit interval,
either a named builtin or a parsed expression.  Lifting turns a scalar
into an operation on tagged memberships: binary lifts combine the two
tags into their canonical product and apply the scalar to the values;
negation lifts keep the tag and map the value.

Builtin names (stable identifiers, also used by the expression language
and the command line):

    product                    x * y
    minimum                    min(x, y)
    lukasiewicz                max(x + y - 1, 0)
    maximum                    max(x, y)
    probsum                    x + y - x * y
    boundedsum                 min(1, x + y)
    standard-negation          1 - x
    sugeno(L)                  (1 - x) / (1 + L * x), with L > -1
    lukasiewicz-implication    min(1, 1 - x + y)
    godel-implication          1 if x <= y else y
    kleene-dienes-implication  max(1 - x, y)

Lift constructors do not verify axioms; verification lives in
``fuzzysoft.analysis``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Mapping

import numpy as np

from .errors import (
    ArityError,
    CodomainError,
    MissingLabelError,
    ParseError,
    UnknownBuiltinError,
)
from .expr import (
    ScalarExpr,
    eval_scalar,
    find_variable,
    format_number,
    parse_scalar,
    pretty_print,
    variables_used,
)
from .tags import ParamTag, TaggedMembership, combine_tags

# Scalar connective kinds (metadata only; never affects evaluation).
KIND_TNORM = "t-norm"
KIND_TCONORM = "t-conorm"
KIND_NEGATION = "negation"
KIND_IMPLICATION = "implication"
KIND_UNCLASSIFIED = "unclassified"

# Lifted connective kinds.
LIFT_TNORM = "fuzzy-soft-t-norm"
LIFT_TCONORM = "fuzzy-soft-t-conorm"
LIFT_NEGATION = "fuzzy-soft-negation"
LIFT_IMPLICATION = "fuzzy-soft-implication"

#: Outputs within this distance of [0, 1] are clamped; anything farther
#: out is a codomain violation.
CLAMP_TOLERANCE = 1e-12


@dataclass(frozen=True)
class ScalarConnective:
    """A unary or binary function on [0, 1].

    ``kind`` and ``continuity`` are declared metadata: evaluation depends
    only on the arity and the body.  Calling the connective accepts floats
    or numpy arrays and returns the raw, unclamped result.
    """

    name: str
    arity: int
    kind: str
    continuity: bool
    fn: Callable = field(compare=False, repr=False)
    expr: ScalarExpr | None = field(default=None, compare=False, repr=False)

    def __call__(self, x, y=None):
        if self.arity == 1:
            if y is not None:
                raise ArityError(f"{self.name!r} is unary, got 2 arguments")
            return self.fn(x)
        if y is None:
            raise ArityError(f"{self.name!r} is binary, got 1 argument")
        return self.fn(x, y)

    def __repr__(self) -> str:
        return f"ScalarConnective({self.name!r}, arity={self.arity}, kind={self.kind!r})"


def _product(x, y):
    return x * y


def _minimum(x, y):
    return np.minimum(x, y)


def _lukasiewicz(x, y):
    return np.maximum(x + y - 1.0, 0.0)


def _maximum(x, y):
    return np.maximum(x, y)


def _probsum(x, y):
    return x + y - x * y


def _boundedsum(x, y):
    return np.minimum(1.0, x + y)


def _standard_negation(x):
    return 1.0 - x


def _lukasiewicz_implication(x, y):
    return np.minimum(1.0, 1.0 - x + y)


def _godel_implication(x, y):
    return np.where(x <= y, 1.0, y)


def _kleene_dienes_implication(x, y):
    return np.maximum(1.0 - x, y)


_BUILTINS: dict[str, tuple[int, str, Callable]] = {
    "product": (2, KIND_TNORM, _product),
    "minimum": (2, KIND_TNORM, _minimum),
    "lukasiewicz": (2, KIND_TNORM, _lukasiewicz),
    "maximum": (2, KIND_TCONORM, _maximum),
    "probsum": (2, KIND_TCONORM, _probsum),
    "boundedsum": (2, KIND_TCONORM, _boundedsum),
    "standard-negation": (1, KIND_NEGATION, _standard_negation),
    "lukasiewicz-implication": (2, KIND_IMPLICATION, _lukasiewicz_implication),
    "godel-implication": (2, KIND_IMPLICATION, _godel_implication),
    "kleene-dienes-implication": (2, KIND_IMPLICATION, _kleene_dienes_implication),
}

_SUGENO_RE = re.compile(r"^sugeno\((.*)\)$")


def builtin_names() -> tuple[str, ...]:
    """All builtin identifiers, with ``sugeno(L)`` shown parametrically."""
    return tuple(sorted(_BUILTINS)) + ("sugeno(L)",)


def builtin(name: str) -> ScalarConnective:
    """Look up a builtin connective by its stable identifier.

    ``sugeno`` takes its parameter inline, e.g. ``sugeno(1)``.
    """
    name = name.strip()
    entry = _BUILTINS.get(name)
    if entry is not None:
        arity, kind, fn = entry
        return ScalarConnective(name=name, arity=arity, kind=kind, continuity=True, fn=fn)
    match = _SUGENO_RE.match(name)
    if match:
        try:
            lam = float(match.group(1))
        except ValueError:
            raise UnknownBuiltinError(
                f"sugeno parameter {match.group(1)!r} is not a number"
            ) from None
        if not lam > -1.0:
            raise UnknownBuiltinError(f"sugeno parameter must be > -1, got {lam!r}")

        def fn(x, lam=lam):
            return (1.0 - x) / (1.0 + lam * x)

        return ScalarConnective(
            name=f"sugeno({format_number(lam)})",
            arity=1,
            kind=KIND_NEGATION,
            continuity=True,
            fn=fn,
        )
    raise UnknownBuiltinError(
        f"unknown builtin {name!r}; known names: {', '.join(builtin_names())}"
    )


def scalar_from_parsed(
    ast: ScalarExpr,
    arity: int = 2,
    kind: str = KIND_UNCLASSIFIED,
    continuity: bool = False,
) -> ScalarConnective:
    """Wrap an already-parsed expression AST as a scalar connective."""
    if arity not in (1, 2):
        raise ArityError(f"connective arity must be 1 or 2, got {arity}")
    if arity == 1 and "y" in variables_used(ast):
        offending = find_variable(ast, "y")
        raise ParseError("unary connective must not reference 'y'", offending.span)
    if arity == 1:
        def fn(x, _ast=ast):
            return eval_scalar(_ast, x)
    else:
        def fn(x, y, _ast=ast):
            return eval_scalar(_ast, x, y)
    return ScalarConnective(
        name=pretty_print(ast), arity=arity, kind=kind, continuity=continuity,
        fn=fn, expr=ast,
    )


def scalar_from_expression(
    text: str,
    arity: int = 2,
    kind: str = KIND_UNCLASSIFIED,
    continuity: bool = False,
) -> ScalarConnective:
    """Build a scalar connective from expression source text.

    Unary connectives use the variable ``x`` only; referencing ``y`` in a
    unary connective is rejected with the offending span.  ``continuity``
    is caller-asserted metadata (builtins declare it; expressions cannot
    prove it from finitely many samples).
    """
    return scalar_from_parsed(parse_scalar(text), arity=arity, kind=kind,
                              continuity=continuity)


def resolve_connective(text: str, arity: int = 2) -> ScalarConnective:
    """Resolve ``text`` as a builtin name first, else parse it as an expression."""
    try:
        scalar = builtin(text)
    except UnknownBuiltinError:
        return scalar_from_expression(text, arity=arity)
    if scalar.arity != arity:
        raise ArityError(
            f"builtin {scalar.name!r} has arity {scalar.arity}, expected {arity}"
        )
    return scalar


def dual_of(scalar: ScalarConnective) -> ScalarConnective:
    """The order-dual of a binary scalar under the standard negation:
    ``g(x, y) = 1 - f(1 - x, 1 - y)``.

    Turns a t-norm into a t-conorm and back; any other kind becomes
    unclassified.  Purely numeric wrapping -- no symbolic simplification.
    """
    if scalar.arity != 2:
        raise ArityError(f"dual is defined for binary connectives, {scalar.name!r} is unary")
    kind = {KIND_TNORM: KIND_TCONORM, KIND_TCONORM: KIND_TNORM}.get(
        scalar.kind, KIND_UNCLASSIFIED
    )

    def fn(x, y, inner=scalar.fn):
        return 1.0 - inner(1.0 - x, 1.0 - y)

    return ScalarConnective(
        name=f"dual({scalar.name})", arity=2, kind=kind,
        continuity=scalar.continuity, fn=fn,
    )


@dataclass(frozen=True)
class LiftedConnective:
    """A scalar connective lifted to tagged memberships.

    Binary kinds map ``((a, x), (b, y))`` to ``(combine(a, b), f(x, y))``.
    The negation kind preserves the tag: ``(a, x) -> (a, n_a(x))``, where
    ``n_a`` may come from a per-label family with an optional default.
    """

    kind: str
    scalar: ScalarConnective | None = None
    family: tuple[tuple[str, ScalarConnective], ...] | None = None
    default: ScalarConnective | None = None

    @property
    def arity(self) -> int:
        return 1 if self.kind == LIFT_NEGATION else 2

    @property
    def name(self) -> str:
        if self.scalar is not None:
            return self.scalar.name
        entries = ", ".join(f"{label}: {s.name}" for label, s in self.family or ())
        return f"family({entries})"

    def scalar_for(self, tag: ParamTag) -> ScalarConnective:
        """Resolve the unary scalar for a tag (negations only).

        Family lookup uses the tag's canonical text, so product tags need
        an explicit entry or a default.
        """
        if self.scalar is not None:
            return self.scalar
        key = tag.text
        for label, scalar in self.family or ():
            if label == key:
                return scalar
        if self.default is not None:
            return self.default
        raise MissingLabelError(
            f"negation family has no entry for label {key!r} and no default"
        )

    def __call__(self, *args: TaggedMembership) -> TaggedMembership:
        return eval_lifted(self, *args)


def _lift_binary(scalar: ScalarConnective, lift_kind: str) -> LiftedConnective:
    if scalar.arity != 2:
        raise ArityError(
            f"{lift_kind} lift needs a binary scalar, {scalar.name!r} is unary"
        )
    return LiftedConnective(kind=lift_kind, scalar=scalar)


def lift_tnorm(scalar: ScalarConnective) -> LiftedConnective:
    """Lift a scalar t-norm; the caller asserts (or has verified) its axioms."""
    return _lift_binary(scalar, LIFT_TNORM)


def lift_tconorm(scalar: ScalarConnective) -> LiftedConnective:
    """Lift a scalar t-conorm; the caller asserts (or has verified) its axioms."""
    return _lift_binary(scalar, LIFT_TCONORM)


def lift_implication(scalar: ScalarConnective) -> LiftedConnective:
    """Lift a scalar implication; the caller asserts (or has verified) its axioms."""
    return _lift_binary(scalar, LIFT_IMPLICATION)


def lift_negation(
    scalars: ScalarConnective | Mapping[str, ScalarConnective],
    default: ScalarConnective | None = None,
) -> LiftedConnective:
    """Lift a negation: one unary scalar for every parameter, or a
    label-to-scalar family with an optional default."""
    if isinstance(scalars, ScalarConnective):
        if scalars.arity != 1:
            raise ArityError(f"negation lift needs a unary scalar, {scalars.name!r} is binary")
        if default is not None:
            raise ArityError("a uniform negation lift does not take a default")
        return LiftedConnective(kind=LIFT_NEGATION, scalar=scalars)
    family = []
    for label, scalar in scalars.items():
        if scalar.arity != 1:
            raise ArityError(
                f"negation family entry {label!r} must be unary, {scalar.name!r} is binary"
            )
        family.append((str(label), scalar))
    if default is not None and default.arity != 1:
        raise ArityError(f"negation default must be unary, {default.name!r} is binary")
    if not family and default is None:
        raise MissingLabelError("negation family is empty and has no default")
    return LiftedConnective(
        kind=LIFT_NEGATION, family=tuple(sorted(family)), default=default
    )


def into_unit_interval(value, context: str) -> float:
    """Clamp near-boundary floating-point drift; reject real violations.

    Values within ``CLAMP_TOLERANCE`` of [0, 1] are snapped to the
    boundary; anything farther out (including NaN) raises ``CodomainError``.
    """
    v = float(value)
    if 0.0 <= v <= 1.0:
        return v
    if -CLAMP_TOLERANCE <= v < 0.0:
        return 0.0
    if 1.0 < v <= 1.0 + CLAMP_TOLERANCE:
        return 1.0
    raise CodomainError(f"{context} produced {v!r}, outside [0, 1]")


def eval_lifted(conn: LiftedConnective, *args: TaggedMembership) -> TaggedMembership:
    """Apply a lifted connective to tagged memberships.

    Binary kinds produce the canonical product tag; negations keep the
    input tag.  The scalar output is codomain-checked (with near-boundary
    clamping) before the result is built.
    """
    if conn.arity == 1:
        if len(args) != 1:
            raise ArityError(f"negation lift takes 1 argument, got {len(args)}")
        (arg,) = args
        scalar = conn.scalar_for(arg.tag)
        raw = scalar(arg.value)
        value = into_unit_interval(raw, f"negation {scalar.name!r} at ({arg.tag.text}, {arg.value!r})")
        return TaggedMembership(arg.tag, value)
    if len(args) != 2:
        raise ArityError(f"{conn.kind} takes 2 arguments, got {len(args)}")
    first, second = args
    raw = conn.scalar(first.value, second.value)
    tag = combine_tags(first.tag, second.tag)
    value = into_unit_interval(
        raw,
        f"connective {conn.scalar.name!r} at (({first.tag.text}, {first.value!r}), "
        f"({second.tag.text}, {second.value!r}))",
    )
    return TaggedMembership(tag, value)
