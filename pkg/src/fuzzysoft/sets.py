"""Fuzzy sets over finite universes, fuzzy soft sets, and their operations.

A fuzzy soft set assigns a fuzzy set over a fixed finite universe to each
parameter tag.  Binary operations between two fuzzy soft sets produce one
assignment per pair of source tags, under the canonical product tag; when
two source pairs collapse to the same canonical tag they must agree
exactly, otherwise the collision is an error rather than a silent merge.

All types are immutable values; operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .connectives import LiftedConnective, ScalarConnective, builtin, into_unit_interval
from .errors import (
    ArityError,
    TagCollisionError,
    UniverseMismatchError,
    ValidationError,
)
from .tags import ParamTag, combine_tags


@dataclass(frozen=True)
class Universe:
    """An ordered, non-empty sequence of distinct element identifiers."""

    elements: tuple[str, ...]

    def __post_init__(self):
        elements = tuple(self.elements)
        if not elements:
            raise ValidationError("a universe needs at least one element")
        seen = set()
        for element in elements:
            if not isinstance(element, str) or not element:
                raise ValidationError(f"universe element must be a non-empty string, got {element!r}")
            if element in seen:
                raise ValidationError(f"duplicate universe element {element!r}")
            seen.add(element)
        object.__setattr__(self, "elements", elements)

    @classmethod
    def of(cls, *elements: str) -> "Universe":
        return cls(tuple(elements))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, element: str) -> bool:
        return element in self.elements


@dataclass(frozen=True)
class FuzzySet:
    """Membership values in [0, 1], one per universe element, in order."""

    universe: Universe
    memberships: tuple[float, ...]

    def __post_init__(self):
        memberships = tuple(float(m) for m in self.memberships)
        if len(memberships) != len(self.universe):
            raise ValidationError(
                f"expected {len(self.universe)} membership values "
                f"for universe {list(self.universe.elements)}, got {len(memberships)}"
            )
        for element, value in zip(self.universe.elements, memberships):
            if not 0.0 <= value <= 1.0:
                raise ValidationError(
                    f"membership {value!r} for element {element!r} is outside [0, 1]"
                )
        object.__setattr__(self, "memberships", memberships)

    def membership(self, element: str) -> float:
        try:
            index = self.universe.elements.index(element)
        except ValueError:
            raise ValidationError(f"element {element!r} is not in the universe") from None
        return self.memberships[index]

    def complement(self) -> "FuzzySet":
        return FuzzySet(self.universe, tuple(1.0 - m for m in self.memberships))


@dataclass(frozen=True)
class FuzzySoftSet:
    """A universe plus a mapping from canonical parameter tags to fuzzy sets.

    Assignments are stored as a tag-sorted tuple of pairs, which makes
    equality exact (same universe, same tags, bitwise-identical
    membership vectors) and iteration deterministic.
    """

    universe: Universe
    assignments: tuple[tuple[ParamTag, FuzzySet], ...]

    def __post_init__(self):
        pairs = tuple(self.assignments)
        if not pairs:
            raise ValidationError("a fuzzy soft set needs at least one parameter tag")
        seen: set[ParamTag] = set()
        for tag, fuzzy in pairs:
            if fuzzy.universe != self.universe:
                raise ValidationError(
                    f"fuzzy set under tag {tag.text!r} belongs to a different universe"
                )
            if tag in seen:
                raise ValidationError(f"duplicate parameter tag {tag.text!r}")
            seen.add(tag)
        object.__setattr__(self, "assignments", tuple(sorted(pairs, key=lambda p: p[0])))

    @property
    def tags(self) -> tuple[ParamTag, ...]:
        return tuple(tag for tag, _ in self.assignments)

    def approximation(self, tag: ParamTag | str) -> FuzzySet:
        if isinstance(tag, str):
            tag = ParamTag.parse(tag)
        for candidate, fuzzy in self.assignments:
            if candidate == tag:
                return fuzzy
        raise ValidationError(f"no assignment for tag {tag.text!r}")

    def __getitem__(self, tag: ParamTag | str) -> FuzzySet:
        return self.approximation(tag)

    def __len__(self) -> int:
        return len(self.assignments)


def make_fuzzy_soft_set(
    universe: Universe | Sequence[str],
    assignments: Mapping[ParamTag | str, Sequence[float]]
    | Iterable[tuple[ParamTag | str, Sequence[float]]],
) -> FuzzySoftSet:
    """Validated construction from tag -> membership-sequence pairs.

    Tags may be given as ``ParamTag`` or as text (``"a1"`` or ``"a1*b1"``).
    Every membership sequence must match the universe length with values
    in [0, 1]; errors name the offending tag and element.
    """
    if not isinstance(universe, Universe):
        universe = Universe(tuple(universe))
    if isinstance(assignments, Mapping):
        items = assignments.items()
    else:
        items = list(assignments)
    pairs: list[tuple[ParamTag, FuzzySet]] = []
    seen: set[ParamTag] = set()
    for raw_tag, values in items:
        tag = raw_tag if isinstance(raw_tag, ParamTag) else ParamTag.parse(str(raw_tag))
        if tag in seen:
            raise ValidationError(f"duplicate parameter tag {tag.text!r}")
        seen.add(tag)
        try:
            fuzzy = FuzzySet(universe, tuple(float(v) for v in values))
        except ValidationError as err:
            raise ValidationError(f"tag {tag.text!r}: {err}") from None
        pairs.append((tag, fuzzy))
    return FuzzySoftSet(universe, tuple(pairs))


def tau_family(fss: FuzzySoftSet, distinct: bool = False) -> tuple[FuzzySet, ...]:
    """The family of approximations, one per tag, in canonical tag order.

    With ``distinct=True``, identical fuzzy sets reached under different
    tags are reported once (set semantics), keeping first-seen order.
    """
    family = tuple(fuzzy for _, fuzzy in fss.assignments)
    if not distinct:
        return family
    out: list[FuzzySet] = []
    for fuzzy in family:
        if fuzzy not in out:
            out.append(fuzzy)
    return tuple(out)


def complement_fss(fss: FuzzySoftSet) -> FuzzySoftSet:
    """Complement every approximation: each membership m becomes 1 - m.

    Same universe, same tags.  Note that 1 - (1 - m) reproduces m exactly
    only when 1 - m is itself representable (true for all multiples of
    2**-53, e.g. anything drawn from a standard uniform generator).
    """
    return FuzzySoftSet(
        fss.universe,
        tuple((tag, fuzzy.complement()) for tag, fuzzy in fss.assignments),
    )


def _binary_scalar(conn: LiftedConnective | ScalarConnective) -> ScalarConnective:
    if isinstance(conn, LiftedConnective):
        if conn.arity != 2:
            raise ArityError("set application needs a binary connective, got a negation lift")
        return conn.scalar
    if not isinstance(conn, ScalarConnective):
        raise ArityError(f"not a connective: {conn!r}")
    if conn.arity != 2:
        raise ArityError(f"set application needs a binary connective, {conn.name!r} is unary")
    return conn


def apply_connective(
    conn: LiftedConnective | ScalarConnective,
    f1: FuzzySoftSet,
    f2: FuzzySoftSet,
) -> FuzzySoftSet:
    """Combine two fuzzy soft sets pointwise under a binary connective.

    For every tag pair (a, b) the result assigns, under the canonical
    product tag, the vector ``scalar(m1(u), m2(u))`` per element.  Two
    pairs collapsing to one canonical tag must produce bitwise-identical
    vectors, otherwise ``TagCollisionError`` is raised.  Scalar outputs
    are codomain-checked with near-boundary clamping.
    """
    scalar = _binary_scalar(conn)
    if f1.universe != f2.universe:
        raise UniverseMismatchError(
            "operands are defined over different universes "
            f"({list(f1.universe.elements)} vs {list(f2.universe.elements)})"
        )
    universe = f1.universe
    out: dict[ParamTag, tuple[float, ...]] = {}
    with np.errstate(all="ignore"):
        for tag_a, fs_a in f1.assignments:
            va = np.asarray(fs_a.memberships, dtype=float)
            for tag_b, fs_b in f2.assignments:
                vb = np.asarray(fs_b.memberships, dtype=float)
                tag = combine_tags(tag_a, tag_b)
                raw = np.broadcast_to(np.asarray(scalar(va, vb), dtype=float), va.shape)
                vector = tuple(
                    into_unit_interval(
                        value,
                        f"connective {scalar.name!r} under tag {tag.text!r} "
                        f"at element {element!r}",
                    )
                    for element, value in zip(universe.elements, raw)
                )
                previous = out.get(tag)
                if previous is None:
                    out[tag] = vector
                elif previous != vector:
                    raise TagCollisionError(
                        f"tag pairs ({tag_a.text}, {tag_b.text}) collide on canonical tag "
                        f"{tag.text!r} with different membership vectors"
                    )
    return FuzzySoftSet(
        universe,
        tuple((tag, FuzzySet(universe, vector)) for tag, vector in out.items()),
    )


def union_fss(f1: FuzzySoftSet, f2: FuzzySoftSet) -> FuzzySoftSet:
    """Union: pointwise maximum under canonical product tags."""
    return apply_connective(builtin("maximum"), f1, f2)


def intersect_fss(f1: FuzzySoftSet, f2: FuzzySoftSet) -> FuzzySoftSet:
    """Intersection: pointwise minimum under canonical product tags."""
    return apply_connective(builtin("minimum"), f1, f2)


def render_fss(fss: FuzzySoftSet) -> str:
    """Deterministic plain-text rendering used by scripts and the CLI."""
    lines = [f"universe: {' '.join(fss.universe.elements)}"]
    for tag, fuzzy in fss.assignments:
        values = " ".join(repr(v) for v in fuzzy.memberships)
        lines.append(f"{tag.text}: {values}")
    return "\n".join(lines)
