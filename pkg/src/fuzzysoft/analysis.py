"""Axiom verification with counterexample search, element classification,
equilibrium solving, and a continuity probe.

Every check evaluates the candidate over a regular grid on [0, 1] plus a
configurable number of pseudo-random samples drawn from a seeded
generator, so identical inputs always produce identical reports.  A
failed check carries a witness -- the lexicographically smallest violating
argument tuple -- that re-evaluates to a violation beyond the tolerance.

Sampling falsifies, it does not prove: a report in which every axiom
passes means no counterexample was found at the examined points.

Unless noted otherwise, comparisons use an absolute tolerance; membership
values live in [0, 1], where absolute error is the natural metric.
Monotonicity and antitonicity are checked between adjacent grid points
along each axis (which implies the quantified property on the whole
grid), plus jointly on sampled pairs of pairs.  Associativity and
exchange walk the full grid cube, so their cost grows with the cube of
the grid resolution; the default 64 steps gives roughly 275k triples.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .connectives import (
    LIFT_NEGATION,
    LiftedConnective,
    ScalarConnective,
    lift_negation,
)
from .errors import ArityError, CandidateEvaluationError, DslError, FuzzySoftError
from .tags import ParamTag

#: Bisection stops once the bracket is narrower than this; three orders
#: of magnitude finer than the default verdict tolerance.
BISECTION_BRACKET = 1e-12

#: The continuity probe flags a jump larger than this multiple of the
#: fine-grid spacing (builtin connectives move at most one spacing per
#: step along an axis).
CONTINUITY_JUMP_FACTOR = 10.0


@dataclass(frozen=True)
class CheckConfig:
    """Shared configuration for every verification routine."""

    grid_steps: int = 64
    random_samples: int = 10000
    tolerance: float = 1e-9
    seed: int = 0

    def __post_init__(self):
        if self.grid_steps < 2:
            raise ValueError(f"grid_steps must be >= 2, got {self.grid_steps}")
        if self.random_samples < 0:
            raise ValueError(f"random_samples must be >= 0, got {self.random_samples}")
        if not self.tolerance > 0:
            raise ValueError(f"tolerance must be > 0, got {self.tolerance}")

    def to_dict(self) -> dict:
        return {
            "grid_steps": self.grid_steps,
            "random_samples": self.random_samples,
            "tolerance": self.tolerance,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class Witness:
    """A reproducible counterexample: re-evaluating the candidate at
    ``args`` violates the stated relation beyond the tolerance."""

    args: tuple[float, ...]
    got: float
    want: float | None
    relation: str

    def to_dict(self) -> dict:
        return {
            "args": list(self.args),
            "got": self.got,
            "want": self.want,
            "relation": self.relation,
        }


@dataclass(frozen=True)
class AxiomCheck:
    """Verdict for one axiom; ``param`` names the family label for
    per-parameter negation checks."""

    label: str
    description: str
    passed: bool
    witness: Witness | None
    points: int
    param: str | None = None

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "description": self.description,
            "param": self.param,
            "passed": self.passed,
            "points": self.points,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }


@dataclass(frozen=True)
class AxiomReport:
    """All axiom verdicts for one candidate under one configuration."""

    kind: str
    candidate: str
    config: CheckConfig
    checks: tuple[AxiomCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> tuple[AxiomCheck, ...]:
        return tuple(check for check in self.checks if not check.passed)

    def check(self, label: str, param: str | None = None) -> AxiomCheck:
        for entry in self.checks:
            if entry.label == label and entry.param == param:
                return entry
        raise KeyError(f"no check labelled {label!r} (param={param!r})")

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "candidate": self.candidate,
            "config": self.config.to_dict(),
            "passed": self.passed,
            "checks": [check.to_dict() for check in self.checks],
        }


@dataclass(frozen=True)
class ZeroDivisor:
    value: float
    witness: float

    def to_dict(self) -> dict:
        return {"value": self.value, "witness": self.witness}


@dataclass(frozen=True)
class ClassificationReport:
    """Grid scan for idempotent, nilpotent and zero-divisor elements."""

    candidate: str
    grid_steps: int
    tolerance: float
    idempotents: tuple[float, ...]
    nilpotents: tuple[float, ...]
    zero_divisors: tuple[ZeroDivisor, ...]

    @property
    def nonzero_nilpotents(self) -> tuple[float, ...]:
        return tuple(v for v in self.nilpotents if v > 0.0)

    @property
    def zero_divisor_values(self) -> tuple[float, ...]:
        return tuple(z.value for z in self.zero_divisors)

    @property
    def confirmed_nilpotent_zero_divisors(self) -> tuple[float, ...]:
        """Non-zero nilpotents that also appear among the zero divisors
        (each is its own witness, since f(x, x) vanished)."""
        divisors = set(self.zero_divisor_values)
        return tuple(v for v in self.nonzero_nilpotents if v in divisors)

    def to_dict(self) -> dict:
        return {
            "candidate": self.candidate,
            "grid_steps": self.grid_steps,
            "tolerance": self.tolerance,
            "idempotents": list(self.idempotents),
            "nilpotents": list(self.nilpotents),
            "zero_divisors": [z.to_dict() for z in self.zero_divisors],
            "confirmed_nilpotent_zero_divisors": list(self.confirmed_nilpotent_zero_divisors),
        }


@dataclass(frozen=True)
class EquilibriumEntry:
    """Fixed-point verdict for one parameter label."""

    label: str
    value: float | None
    residual: float | None
    is_equilibrium: bool
    note: str | None = None

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "value": self.value,
            "residual": self.residual,
            "is_equilibrium": self.is_equilibrium,
            "note": self.note,
        }


@dataclass(frozen=True)
class EquilibriumResult:
    entries: tuple[EquilibriumEntry, ...]
    tolerance: float

    @property
    def equilibria(self) -> tuple[EquilibriumEntry, ...]:
        return tuple(e for e in self.entries if e.is_equilibrium)

    @property
    def count(self) -> int:
        return len(self.equilibria)

    def entry(self, label: str) -> EquilibriumEntry:
        for entry in self.entries:
            if entry.label == label:
                return entry
        raise KeyError(f"no entry for label {label!r}")

    def to_dict(self) -> dict:
        return {
            "tolerance": self.tolerance,
            "count": self.count,
            "entries": [e.to_dict() for e in self.entries],
        }


@dataclass(frozen=True)
class ContinuityEstimate:
    """Heuristic continuity estimate from a fine-grid scan; never a proof."""

    candidate: str
    fine_steps: int
    spacing: float
    max_jump: float
    at: tuple[float, float, float, float]
    threshold: float
    suspected_discontinuity: bool

    def to_dict(self) -> dict:
        return {
            "candidate": self.candidate,
            "fine_steps": self.fine_steps,
            "spacing": self.spacing,
            "max_jump": self.max_jump,
            "at": list(self.at),
            "threshold": self.threshold,
            "suspected_discontinuity": self.suspected_discontinuity,
        }


# ---------------------------------------------------------------------------
# Evaluation helpers


def _grid(cfg: CheckConfig) -> np.ndarray:
    return np.arange(cfg.grid_steps + 1, dtype=float) / cfg.grid_steps


def _locate_failure(candidate: ScalarConnective, args, shape) -> tuple[float, ...]:
    broadcast = [np.broadcast_to(np.asarray(a, dtype=float), shape) for a in args]
    for idx in np.ndindex(shape):
        point = tuple(float(b[idx]) for b in broadcast)
        try:
            candidate(*point)
        except (DslError, FuzzySoftError):
            return point
    return tuple(float("nan") for _ in args)


def _call(candidate: ScalarConnective, *args) -> np.ndarray:
    """Evaluate on broadcast arrays; wrap evaluation errors with the
    first (lexicographically smallest) offending point."""
    shape = np.broadcast_shapes(*(np.shape(a) for a in args))
    try:
        with np.errstate(all="ignore"):
            out = candidate(*args)
    except (DslError, FuzzySoftError) as err:
        point = _locate_failure(candidate, args, shape)
        raise CandidateEvaluationError(
            f"candidate {candidate.name!r} failed at {point}: {err}", point
        ) from err
    return np.broadcast_to(np.asarray(out, dtype=float), shape)


def _require_arity(candidate: ScalarConnective, arity: int) -> None:
    if not isinstance(candidate, ScalarConnective):
        raise ArityError(f"not a scalar connective: {candidate!r}")
    if candidate.arity != arity:
        raise ArityError(
            f"expected a {'unary' if arity == 1 else 'binary'} scalar connective, "
            f"{candidate.name!r} has arity {candidate.arity}"
        )


def _lex_min_index(rows: np.ndarray) -> int:
    order = np.lexsort(rows.T[::-1])
    return int(order[0])


def _violations(got: np.ndarray, want, relation: str, tol: float) -> np.ndarray:
    if relation == "==":
        return ~(np.abs(got - want) <= tol)
    if relation == "<=":
        return ~(got <= want + tol)
    if relation == ">=":
        return ~(got >= want - tol)
    if relation == "in [0, 1]":
        return ~((got >= -tol) & (got <= 1.0 + tol))
    raise ValueError(f"unknown relation {relation!r}")


def _check_from_violations(
    label: str,
    description: str,
    relation: str,
    points: int,
    viol_rows: np.ndarray,
    viol_got: np.ndarray,
    viol_want: np.ndarray | None,
    param: str | None = None,
) -> AxiomCheck:
    if viol_rows.shape[0] == 0:
        return AxiomCheck(label, description, True, None, points, param)
    index = _lex_min_index(viol_rows)
    witness = Witness(
        args=tuple(float(v) for v in viol_rows[index]),
        got=float(viol_got[index]),
        want=None if viol_want is None else float(viol_want[index]),
        relation=relation,
    )
    return AxiomCheck(label, description, False, witness, points, param)


def _check(
    label: str,
    description: str,
    rows: np.ndarray,
    got: np.ndarray,
    want,
    relation: str,
    tol: float,
    param: str | None = None,
) -> AxiomCheck:
    rows = np.atleast_2d(np.asarray(rows, dtype=float))
    got = np.asarray(got, dtype=float).ravel()
    viol = _violations(got, want, relation, tol)
    points = int(got.size)
    if not viol.any():
        return AxiomCheck(label, description, True, None, points, param)
    want_arr = None if want is None else np.broadcast_to(np.asarray(want, dtype=float).ravel(), got.shape)
    return _check_from_violations(
        label,
        description,
        relation,
        points,
        rows[viol],
        got[viol],
        None if want_arr is None else want_arr[viol],
        param,
    )


def _pairs_rows(g: np.ndarray) -> np.ndarray:
    X, Y = np.meshgrid(g, g, indexing="ij")
    return np.column_stack([X.ravel(), Y.ravel()])


def _sorted_pair(rng: np.random.Generator, count: int) -> tuple[np.ndarray, np.ndarray]:
    draw = np.sort(rng.random((count, 2)), axis=1)
    return draw[:, 0], draw[:, 1]


def _cube_violations(candidate: ScalarConnective, g: np.ndarray, tol: float, form: str):
    """Walk the grid cube in x-slabs, keeping memory flat; returns the
    total point count plus every violating (args, got, want) triple."""
    n = len(g)
    rows, got, want = [], [], []
    points = 0
    block = max(1, 4_000_000 // max(n * n, 1))
    Y = g[None, :, None]
    Z = g[None, None, :]
    for start in range(0, n, block):
        xs = g[start:start + block]
        X = xs[:, None, None]
        if form == "assoc":
            lhs = _call(candidate, X, _call(candidate, Y, Z))
            rhs = _call(candidate, _call(candidate, X, Y), Z)
        else:  # exchange
            lhs = _call(candidate, X, _call(candidate, Y, Z))
            rhs = _call(candidate, Y, _call(candidate, X, Z))
        points += lhs.size
        viol = ~(np.abs(lhs - rhs) <= tol)
        if viol.any():
            ii, jj, kk = np.nonzero(viol)
            rows.append(np.column_stack([xs[ii], g[jj], g[kk]]))
            got.append(lhs[viol])
            want.append(rhs[viol])
    if rows:
        return points, np.concatenate(rows), np.concatenate(got), np.concatenate(want)
    return points, np.zeros((0, 3)), np.zeros(0), np.zeros(0)


def _cube_check(
    candidate: ScalarConnective,
    g: np.ndarray,
    rng: np.random.Generator,
    cfg: CheckConfig,
    form: str,
    label: str,
    description: str,
) -> AxiomCheck:
    tol = cfg.tolerance
    points, rows, got, want = _cube_violations(candidate, g, tol, form)
    m = cfg.random_samples
    sx, sy, sz = rng.random(m), rng.random(m), rng.random(m)
    if form == "assoc":
        lhs = _call(candidate, sx, _call(candidate, sy, sz))
        rhs = _call(candidate, _call(candidate, sx, sy), sz)
    else:
        lhs = _call(candidate, sx, _call(candidate, sy, sz))
        rhs = _call(candidate, sy, _call(candidate, sx, sz))
    points += lhs.size
    viol = ~(np.abs(lhs - rhs) <= tol)
    if viol.any():
        rows = np.concatenate([rows, np.column_stack([sx[viol], sy[viol], sz[viol]])])
        got = np.concatenate([got, lhs[viol]])
        want = np.concatenate([want, rhs[viol]])
    return _check_from_violations(label, description, "==", points, rows, got, want)


# ---------------------------------------------------------------------------
# Binary connective checks


def _check_binary_common(
    candidate: ScalarConnective,
    cfg: CheckConfig,
    boundary_unit: float,
    boundary_desc_i: str,
    boundary_desc_ii: str,
) -> tuple[AxiomCheck, ...]:
    """Codomain, two boundary axioms, commutativity, associativity and
    joint monotonicity, shared by the t-norm and t-conorm checks."""
    g = _grid(cfg)
    tol = cfg.tolerance
    m = cfg.random_samples
    rng = np.random.default_rng(cfg.seed)
    F = _call(candidate, g[:, None], g[None, :])

    checks: list[AxiomCheck] = []

    # Codomain containment over the grid and sampled pairs.
    cod_x, cod_y = rng.random(m), rng.random(m)
    cod_vals = _call(candidate, cod_x, cod_y)
    rows = np.concatenate([_pairs_rows(g), np.column_stack([cod_x, cod_y])])
    got = np.concatenate([F.ravel(), cod_vals])
    checks.append(_check("codomain", "values stay in [0, 1]", rows, got, None, "in [0, 1]", tol))

    # Boundary axioms (i) and (ii); the unit is 1 for t-norms, 0 for t-conorms.
    unit_index = -1 if boundary_unit == 1.0 else 0
    b1_y = rng.random(m)
    rows = np.column_stack([
        np.concatenate([np.full_like(g, boundary_unit), np.full_like(b1_y, boundary_unit)]),
        np.concatenate([g, b1_y]),
    ])
    got = np.concatenate([F[unit_index, :], _call(candidate, boundary_unit, b1_y)])
    want = np.concatenate([g, b1_y])
    checks.append(_check("i", boundary_desc_i, rows, got, want, "==", tol))

    b2_x = rng.random(m)
    rows = np.column_stack([
        np.concatenate([g, b2_x]),
        np.concatenate([np.full_like(g, boundary_unit), np.full_like(b2_x, boundary_unit)]),
    ])
    got = np.concatenate([F[:, unit_index], _call(candidate, b2_x, boundary_unit)])
    want = np.concatenate([g, b2_x])
    checks.append(_check("ii", boundary_desc_ii, rows, got, want, "==", tol))

    # (iii) commutativity.
    com_x, com_y = rng.random(m), rng.random(m)
    rows = np.concatenate([_pairs_rows(g), np.column_stack([com_x, com_y])])
    got = np.concatenate([F.ravel(), _call(candidate, com_x, com_y)])
    want = np.concatenate([F.T.ravel(), _call(candidate, com_y, com_x)])
    checks.append(_check("iii", "commutativity f(x, y) = f(y, x)", rows, got, want, "==", tol))

    # (iv) associativity on the grid cube plus sampled triples.
    checks.append(
        _cube_check(candidate, g, rng, cfg, "assoc",
                    "iv", "associativity f(x, f(y, z)) = f(f(x, y), z)")
    )

    # (v) monotonicity: adjacent grid points along each axis, plus the
    # joint form on sampled pairs of pairs.
    lo_rows = []
    lo_vals = []
    hi_vals = []
    X, Y = np.meshgrid(g[:-1], g, indexing="ij")
    X2 = np.meshgrid(g[1:], g, indexing="ij")[0]
    lo_rows.append(np.column_stack([X.ravel(), Y.ravel(), X2.ravel(), Y.ravel()]))
    lo_vals.append(F[:-1, :].ravel())
    hi_vals.append(F[1:, :].ravel())
    X, Y = np.meshgrid(g, g[:-1], indexing="ij")
    Y2 = np.meshgrid(g, g[1:], indexing="ij")[1]
    lo_rows.append(np.column_stack([X.ravel(), Y.ravel(), X.ravel(), Y2.ravel()]))
    lo_vals.append(F[:, :-1].ravel())
    hi_vals.append(F[:, 1:].ravel())
    x1, x2 = _sorted_pair(rng, m)
    y1, y2 = _sorted_pair(rng, m)
    lo_rows.append(np.column_stack([x1, y1, x2, y2]))
    lo_vals.append(_call(candidate, x1, y1))
    hi_vals.append(_call(candidate, x2, y2))
    checks.append(
        _check(
            "v",
            "monotonicity: f(x1, y1) <= f(x2, y2) whenever x1 <= x2 and y1 <= y2",
            np.concatenate(lo_rows),
            np.concatenate(lo_vals),
            np.concatenate(hi_vals),
            "<=",
            tol,
        )
    )
    return tuple(checks)


def check_tnorm_axioms(candidate: ScalarConnective, cfg: CheckConfig | None = None) -> AxiomReport:
    """Verify the five t-norm axioms: boundary with 1 in each argument,
    commutativity, associativity, and joint monotonicity."""
    cfg = cfg or CheckConfig()
    _require_arity(candidate, 2)
    checks = _check_binary_common(
        candidate, cfg, 1.0,
        "boundary f(1, y) = y", "boundary f(x, 1) = x",
    )
    return AxiomReport("tnorm", candidate.name, cfg, checks)


def check_tconorm_axioms(candidate: ScalarConnective, cfg: CheckConfig | None = None) -> AxiomReport:
    """Mirror of the t-norm check with the boundary taken at 0."""
    cfg = cfg or CheckConfig()
    _require_arity(candidate, 2)
    checks = _check_binary_common(
        candidate, cfg, 0.0,
        "boundary f(0, y) = y", "boundary f(x, 0) = x",
    )
    return AxiomReport("tconorm", candidate.name, cfg, checks)


def check_implication_axioms(candidate: ScalarConnective, cfg: CheckConfig | None = None) -> AxiomReport:
    """Verify the five implication axioms: antitone in the first argument,
    monotone in the second, the two boundary identities, and exchange."""
    cfg = cfg or CheckConfig()
    _require_arity(candidate, 2)
    g = _grid(cfg)
    tol = cfg.tolerance
    m = cfg.random_samples
    rng = np.random.default_rng(cfg.seed)
    F = _call(candidate, g[:, None], g[None, :])

    checks: list[AxiomCheck] = []

    cod_x, cod_y = rng.random(m), rng.random(m)
    cod_vals = _call(candidate, cod_x, cod_y)
    rows = np.concatenate([_pairs_rows(g), np.column_stack([cod_x, cod_y])])
    got = np.concatenate([F.ravel(), cod_vals])
    checks.append(_check("codomain", "values stay in [0, 1]", rows, got, None, "in [0, 1]", tol))

    # (i) antitone in the first argument: h(x1, y) >= h(x2, y) for x1 <= x2.
    X, Y = np.meshgrid(g[:-1], g, indexing="ij")
    X2 = np.meshgrid(g[1:], g, indexing="ij")[0]
    rows_grid = np.column_stack([X.ravel(), Y.ravel(), X2.ravel(), Y.ravel()])
    x1, x2 = _sorted_pair(rng, m)
    ay = rng.random(m)
    rows = np.concatenate([rows_grid, np.column_stack([x1, ay, x2, ay])])
    got = np.concatenate([F[:-1, :].ravel(), _call(candidate, x1, ay)])
    want = np.concatenate([F[1:, :].ravel(), _call(candidate, x2, ay)])
    checks.append(
        _check("i", "antitone in the first argument: h(x1, y) >= h(x2, y) for x1 <= x2",
               rows, got, want, ">=", tol)
    )

    # (ii) monotone in the second argument.
    X, Y = np.meshgrid(g, g[:-1], indexing="ij")
    Y2 = np.meshgrid(g, g[1:], indexing="ij")[1]
    rows_grid = np.column_stack([X.ravel(), Y.ravel(), X.ravel(), Y2.ravel()])
    mx = rng.random(m)
    y1, y2 = _sorted_pair(rng, m)
    rows = np.concatenate([rows_grid, np.column_stack([mx, y1, mx, y2])])
    got = np.concatenate([F[:, :-1].ravel(), _call(candidate, mx, y1)])
    want = np.concatenate([F[:, 1:].ravel(), _call(candidate, mx, y2)])
    checks.append(
        _check("ii", "monotone in the second argument: h(x, y1) <= h(x, y2) for y1 <= y2",
               rows, got, want, "<=", tol)
    )

    # (iii) boundary h(1, y) = y.
    b3_y = rng.random(m)
    rows = np.column_stack([
        np.concatenate([np.ones_like(g), np.ones_like(b3_y)]),
        np.concatenate([g, b3_y]),
    ])
    got = np.concatenate([F[-1, :], _call(candidate, 1.0, b3_y)])
    want = np.concatenate([g, b3_y])
    checks.append(_check("iii", "boundary h(1, y) = y", rows, got, want, "==", tol))

    # (iv) boundary h(0, y) = 1.
    b4_y = rng.random(m)
    rows = np.column_stack([
        np.concatenate([np.zeros_like(g), np.zeros_like(b4_y)]),
        np.concatenate([g, b4_y]),
    ])
    got = np.concatenate([F[0, :], _call(candidate, 0.0, b4_y)])
    checks.append(_check("iv", "boundary h(0, y) = 1", rows, got, 1.0, "==", tol))

    # (v) exchange on the grid cube plus sampled triples.
    checks.append(
        _cube_check(candidate, g, rng, cfg, "exchange",
                    "v", "exchange h(x, h(y, z)) = h(y, h(x, z))")
    )
    return AxiomReport("implication", candidate.name, cfg, tuple(checks))


# ---------------------------------------------------------------------------
# Negation checks


def _as_negation_lift(
    candidate: ScalarConnective | Mapping[str, ScalarConnective] | LiftedConnective,
) -> LiftedConnective:
    if isinstance(candidate, LiftedConnective):
        if candidate.kind != LIFT_NEGATION:
            raise ArityError(f"expected a negation lift, got kind {candidate.kind!r}")
        return candidate
    if isinstance(candidate, ScalarConnective):
        return lift_negation(candidate)
    if isinstance(candidate, Mapping):
        return lift_negation(candidate)
    raise ArityError(f"not a negation candidate: {candidate!r}")


def check_negation_axioms(
    candidate: ScalarConnective | Mapping[str, ScalarConnective] | LiftedConnective,
    labels: Sequence[str] | None = None,
    cfg: CheckConfig | None = None,
) -> AxiomReport:
    """Verify the negation axioms per parameter label: boundary swaps of
    0 and 1, antitonicity, and involution.

    ``candidate`` may be one unary scalar (applied uniformly), a
    label-to-scalar mapping, or an already-lifted negation.  With no
    explicit ``labels``, a family is checked on its own labels and a
    uniform negation once.
    """
    cfg = cfg or CheckConfig()
    lifted = _as_negation_lift(candidate)
    if labels is None:
        if lifted.family:
            labels = tuple(label for label, _ in lifted.family)
        else:
            labels = (None,)

    g = _grid(cfg)
    tol = cfg.tolerance
    m = cfg.random_samples
    rng = np.random.default_rng(cfg.seed)
    checks: list[AxiomCheck] = []
    for label in labels:
        if label is None:
            scalar = lifted.scalar if lifted.scalar is not None else lifted.default
        else:
            scalar = lifted.scalar_for(ParamTag(label))
        N = _call(scalar, g)

        cod_x = rng.random(m)
        rows = np.concatenate([g, cod_x])[:, None]
        got = np.concatenate([N, _call(scalar, cod_x)])
        checks.append(
            _check("codomain", "values stay in [0, 1]", rows, got, None, "in [0, 1]", tol,
                   param=label)
        )

        rows = np.array([[1.0], [0.0]])
        got = np.array([float(N[-1]), float(N[0])])
        want = np.array([0.0, 1.0])
        checks.append(
            _check("i", "boundary n(1) = 0 and n(0) = 1", rows, got, want, "==", tol,
                   param=label)
        )

        x1, x2 = _sorted_pair(rng, m)
        rows = np.concatenate([
            np.column_stack([g[:-1], g[1:]]),
            np.column_stack([x1, x2]),
        ])
        got = np.concatenate([N[:-1], _call(scalar, x1)])
        want = np.concatenate([N[1:], _call(scalar, x2)])
        checks.append(
            _check("ii", "antitonicity: n(x1) >= n(x2) for x1 <= x2", rows, got, want,
                   ">=", tol, param=label)
        )

        inv_x = rng.random(m)
        xs = np.concatenate([g, inv_x])
        rows = xs[:, None]
        inner = np.concatenate([N, _call(scalar, inv_x)])
        got = _call(scalar, inner)
        checks.append(
            _check("iii", "involution n(n(x)) = x", rows, got, xs, "==", tol, param=label)
        )
    return AxiomReport("negation", lifted.name, cfg, tuple(checks))


# ---------------------------------------------------------------------------
# Classification, equilibria, continuity


def classify_elements(candidate: ScalarConnective, cfg: CheckConfig | None = None) -> ClassificationReport:
    """Scan the grid for idempotent elements (f(x, x) = x), nilpotent
    elements (f(x, x) = 0) and zero divisors (x > 0 with some y > 0 such
    that f(x, y) = 0), all within the configured tolerance.

    The zero-divisor witness search walks the positive grid in ascending
    order and keeps the first hit, so witnesses are deterministic.
    """
    cfg = cfg or CheckConfig()
    _require_arity(candidate, 2)
    g = _grid(cfg)
    tol = cfg.tolerance
    F = _call(candidate, g[:, None], g[None, :])
    diag = _call(candidate, g, g)

    idempotents = tuple(float(v) for v in g[np.abs(diag - g) <= tol])
    nilpotents = tuple(float(v) for v in g[np.abs(diag) <= tol])

    positive = g[1:]
    zero_hits = np.abs(F[1:, 1:]) <= tol
    zero_divisors = []
    for i in range(len(positive)):
        hits = np.nonzero(zero_hits[i])[0]
        if hits.size:
            zero_divisors.append(
                ZeroDivisor(float(positive[i]), float(positive[hits[0]]))
            )
    return ClassificationReport(
        candidate=candidate.name,
        grid_steps=cfg.grid_steps,
        tolerance=tol,
        idempotents=idempotents,
        nilpotents=nilpotents,
        zero_divisors=tuple(zero_divisors),
    )


def _bisect_fixed_point(scalar: ScalarConnective) -> float | None:
    """Bisection for n(x) = x on [0, 1].

    Needs n(0) - 0 >= 0 and n(1) - 1 <= 0 to bracket a crossing; any
    candidate satisfying the negation boundary axioms qualifies, since
    then n(0) = 1 and n(1) = 0.  Returns None when no bracket exists."""
    d0 = float(scalar(0.0)) - 0.0
    d1 = float(scalar(1.0)) - 1.0
    if d0 == 0.0:
        return 0.0
    if d1 == 0.0:
        return 1.0
    if d0 < 0.0 or d1 > 0.0:
        return None
    lo, hi = 0.0, 1.0
    while hi - lo > BISECTION_BRACKET:
        mid = 0.5 * (lo + hi)
        if float(scalar(mid)) - mid > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def find_equilibria(
    negation: ScalarConnective | Mapping[str, ScalarConnective] | LiftedConnective,
    labels: Sequence[str],
    cfg: CheckConfig | None = None,
) -> EquilibriumResult:
    """Locate, per parameter label, the fixed point of the negation by
    bisection on n(x) - x down to a 1e-12 bracket.

    An entry is an equilibrium iff its residual |n(x*) - x*| is within
    the configured tolerance; non-existence is a verdict, not an error.
    At most one equilibrium is reported per label, so the total count
    never exceeds the number of labels.
    """
    cfg = cfg or CheckConfig()
    lifted = _as_negation_lift(negation)
    entries = []
    seen: set[str] = set()
    for label in labels:
        if label in seen:
            continue
        seen.add(label)
        scalar = lifted.scalar_for(ParamTag(label))
        x_star = _bisect_fixed_point(scalar)
        if x_star is None:
            entries.append(
                EquilibriumEntry(label, None, None, False,
                                 note="no sign change of n(x) - x on [0, 1]")
            )
            continue
        residual = abs(float(scalar(x_star)) - x_star)
        entries.append(
            EquilibriumEntry(label, x_star, residual, residual <= cfg.tolerance)
        )
    return EquilibriumResult(tuple(entries), cfg.tolerance)


def continuity_probe(candidate: ScalarConnective, cfg: CheckConfig | None = None) -> ContinuityEstimate:
    """Heuristic continuity scan on a grid four times finer than the
    configured one: the largest jump between adjacent neighbours along
    either axis is compared against ``CONTINUITY_JUMP_FACTOR`` spacings
    (builtins move at most one spacing per step).  A flag here suggests a
    discontinuity; the absence of one proves nothing.
    """
    cfg = cfg or CheckConfig()
    _require_arity(candidate, 2)
    fine_steps = 4 * cfg.grid_steps
    g = np.arange(fine_steps + 1, dtype=float) / fine_steps
    spacing = 1.0 / fine_steps
    F = _call(candidate, g[:, None], g[None, :])

    jumps_x = np.abs(F[1:, :] - F[:-1, :])
    jumps_y = np.abs(F[:, 1:] - F[:, :-1])
    ix = np.unravel_index(np.argmax(jumps_x), jumps_x.shape)
    iy = np.unravel_index(np.argmax(jumps_y), jumps_y.shape)
    max_x = float(jumps_x[ix])
    max_y = float(jumps_y[iy])
    if max_x >= max_y:
        max_jump = max_x
        at = (float(g[ix[0]]), float(g[ix[1]]), float(g[ix[0] + 1]), float(g[ix[1]]))
    else:
        max_jump = max_y
        at = (float(g[iy[0]]), float(g[iy[1]]), float(g[iy[0]]), float(g[iy[1] + 1]))
    threshold = CONTINUITY_JUMP_FACTOR * spacing
    return ContinuityEstimate(
        candidate=candidate.name,
        fine_steps=fine_steps,
        spacing=spacing,
        max_jump=max_jump,
        at=at,
        threshold=threshold,
        suspected_discontinuity=max_jump > threshold,
    )
