import math

import pytest

from fuzzysoft import (
    CandidateEvaluationError,
    CheckConfig,
    builtin,
    check_implication_axioms,
    check_negation_axioms,
    check_tconorm_axioms,
    check_tnorm_axioms,
    classify_elements,
    continuity_probe,
    dual_of,
    find_equilibria,
    lift_negation,
    scalar_from_expression,
)

FAST = CheckConfig(grid_steps=16, random_samples=200, seed=5)


# --- axiom suites --------------------------------------------------------------

@pytest.mark.parametrize("name", ["product", "minimum", "lukasiewicz"])
def test_builtin_tnorms_pass(name):
    report = check_tnorm_axioms(builtin(name), FAST)
    assert report.passed, report.failures()
    assert [c.label for c in report.checks] == ["codomain", "i", "ii", "iii", "iv", "v"]


@pytest.mark.parametrize("name", ["maximum", "probsum", "boundedsum"])
def test_builtin_tconorms_pass(name):
    report = check_tconorm_axioms(builtin(name), FAST)
    assert report.passed, report.failures()


@pytest.mark.parametrize("name", ["standard-negation", "sugeno(1)", "sugeno(0.5)"])
def test_builtin_negations_pass(name):
    report = check_negation_axioms(builtin(name), cfg=FAST)
    assert report.passed, report.failures()


@pytest.mark.parametrize(
    "name", ["lukasiewicz-implication", "godel-implication", "kleene-dienes-implication"]
)
def test_builtin_implications_pass(name):
    report = check_implication_axioms(builtin(name), FAST)
    assert report.passed, report.failures()


def test_expression_candidates_pass_their_kind():
    assert check_tnorm_axioms(scalar_from_expression("x*y"), FAST).passed
    assert check_tconorm_axioms(scalar_from_expression("x+y-x*y"), FAST).passed
    assert check_negation_axioms(scalar_from_expression("1-x", arity=1), cfg=FAST).passed


# --- negative controls with reproducible witnesses ------------------------------

def test_probsum_fails_tnorm_boundary():
    report = check_tnorm_axioms(builtin("probsum"), FAST)
    assert not report.passed
    failed = report.check("i")
    assert not failed.passed
    w = failed.witness
    # smallest lexicographic witness on the grid: f(1, 0) = 1, want 0
    assert w.args == (1.0, 0.0)
    assert w.got == 1.0 and w.want == 0.0
    # witness re-evaluates to a violation beyond tolerance
    re_got = float(builtin("probsum")(*w.args))
    assert re_got == w.got
    assert abs(re_got - w.want) > FAST.tolerance


def test_scaled_product_fails_boundary():
    report = check_tnorm_axioms(scalar_from_expression("x*y/2"), FAST)
    failed = report.check("i")
    assert not failed.passed
    x, y = failed.witness.args
    assert x == 1.0
    assert abs(y / 2.0 - y) > FAST.tolerance


def test_product_fails_tconorm_boundary():
    report = check_tconorm_axioms(builtin("product"), FAST)
    failed = report.check("i")
    assert not failed.passed
    x, y = failed.witness.args
    assert x == 0.0
    assert failed.witness.got == 0.0
    assert abs(failed.witness.got - y) > FAST.tolerance


def test_minimum_fails_implication_falsity_boundary():
    report = check_implication_axioms(scalar_from_expression("min(x,y)"), FAST)
    failed = report.check("iv")
    assert not failed.passed
    w = failed.witness
    assert w.args[0] == 0.0
    assert w.want == 1.0
    assert w.got == 0.0
    re_got = min(*w.args)
    assert abs(re_got - w.want) > FAST.tolerance


def test_noncommutative_candidate_fails_iii():
    report = check_tnorm_axioms(scalar_from_expression("x*y*y"), FAST)
    failed = report.check("iii")
    assert not failed.passed
    x, y = failed.witness.args
    lhs, rhs = x * y * y, y * x * x
    assert abs(lhs - rhs) > FAST.tolerance
    assert failed.witness.got == lhs
    assert failed.witness.want == rhs


def test_nonmonotone_candidate_fails_v():
    # decreasing in both arguments, with passing boundaries impossible;
    # monotonicity is what we probe here
    report = check_tnorm_axioms(scalar_from_expression("(1-x)*(1-y)"), FAST)
    failed = report.check("v")
    assert not failed.passed
    x1, y1, x2, y2 = failed.witness.args
    assert x1 <= x2 and y1 <= y2
    f = scalar_from_expression("(1-x)*(1-y)")
    assert f(x1, y1) > f(x2, y2) + FAST.tolerance


def test_imperfect_involution_fails_iii():
    report = check_negation_axioms(scalar_from_expression("1-x*x", arity=1), cfg=FAST)
    failed = report.check("iii")
    assert not failed.passed
    # frozen derived value: n(n(0.5)) for n(x) = 1 - x^2 is exactly 0.4375
    n = scalar_from_expression("1-x*x", arity=1)
    assert n(n(0.5)) == 0.4375
    (x,) = failed.witness.args
    assert abs(n(n(x)) - x) > FAST.tolerance


def test_codomain_violation_detected():
    report = check_tnorm_axioms(scalar_from_expression("x*y*2"), FAST)
    failed = report.check("codomain")
    assert not failed.passed
    x, y = failed.witness.args
    assert x * y * 2 > 1.0 + FAST.tolerance


# --- report structure ------------------------------------------------------------

def test_report_is_deterministic():
    candidate = scalar_from_expression("x+y-x*y")
    first = check_tnorm_axioms(candidate, FAST)
    second = check_tnorm_axioms(candidate, FAST)
    assert first.to_dict() == second.to_dict()


def test_grid_completeness_point_counts():
    report = check_tnorm_axioms(builtin("product"), FAST)
    n = FAST.grid_steps + 1
    m = FAST.random_samples
    assert report.check("codomain").points == n * n + m
    assert report.check("i").points == n + m
    assert report.check("iii").points == n * n + m
    assert report.check("iv").points == n**3 + m
    assert report.check("v").points == 2 * n * (n - 1) + m


def test_zero_samples_is_grid_only():
    cfg = CheckConfig(grid_steps=8, random_samples=0)
    report = check_tnorm_axioms(builtin("minimum"), cfg)
    assert report.passed
    assert report.check("iv").points == 9**3


def test_config_validation():
    with pytest.raises(ValueError):
        CheckConfig(grid_steps=1)
    with pytest.raises(ValueError):
        CheckConfig(tolerance=0.0)
    with pytest.raises(ValueError):
        CheckConfig(random_samples=-1)


def test_candidate_evaluation_error_carries_point():
    exploding = scalar_from_expression("x/y")
    with pytest.raises(CandidateEvaluationError) as err:
        check_tnorm_axioms(exploding, FAST)
    assert err.value.point == (0.0, 0.0)


# --- family negation ---------------------------------------------------------------

def test_family_negation_reports_per_label():
    family = lift_negation(
        {"a1": builtin("standard-negation"), "a2": builtin("sugeno(1)")}
    )
    report = check_negation_axioms(family, cfg=FAST)
    params = {c.param for c in report.checks}
    assert params == {"a1", "a2"}
    assert report.passed


def test_family_negation_failure_names_label():
    family = lift_negation(
        {"ok": builtin("standard-negation"),
         "bad": scalar_from_expression("1-x*x", arity=1)}
    )
    report = check_negation_axioms(family, cfg=FAST)
    assert report.check("iii", param="ok").passed
    assert not report.check("iii", param="bad").passed


# --- duality theorem ------------------------------------------------------------------

@pytest.mark.parametrize("name", ["product", "minimum", "lukasiewicz"])
def test_dual_of_passing_tnorm_passes_tconorm_suite(name):
    report = check_tconorm_axioms(dual_of(builtin(name)), FAST)
    assert report.passed, report.failures()


def test_dual_of_expression_tnorm_passes():
    report = check_tconorm_axioms(dual_of(scalar_from_expression("x*y")), FAST)
    assert report.passed


# --- classification ---------------------------------------------------------------------

def test_classify_minimum():
    cfg = CheckConfig(grid_steps=10)
    report = classify_elements(builtin("minimum"), cfg)
    grid = tuple(k / 10 for k in range(11))
    assert report.idempotents == grid
    assert report.nilpotents == (0.0,)
    assert report.zero_divisors == ()


def test_classify_product():
    report = classify_elements(builtin("product"), CheckConfig(grid_steps=10))
    assert report.idempotents == (0.0, 1.0)
    assert report.nilpotents == (0.0,)
    assert report.zero_divisors == ()


def test_classify_bounded_difference():
    report = classify_elements(builtin("lukasiewicz"), CheckConfig(grid_steps=10))
    assert report.idempotents == (0.0, 1.0)
    assert report.nilpotents == (0.0, 0.1, 0.2, 0.3, 0.4, 0.5)
    values = report.zero_divisor_values
    assert values == (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)
    # 0.8 has a witness but is not nilpotent: f(0.8, 0.8) = 0.6
    entry = next(z for z in report.zero_divisors if z.value == 0.8)
    assert float(builtin("lukasiewicz")(entry.value, entry.witness)) <= report.tolerance
    assert 0.8 not in report.nilpotents
    assert abs(float(builtin("lukasiewicz")(0.8, 0.8)) - 0.6) <= 1e-12
    # every non-zero nilpotent is confirmed a zero divisor
    assert set(report.nonzero_nilpotents) <= set(values)
    assert report.confirmed_nilpotent_zero_divisors == report.nonzero_nilpotents


def test_classify_zero_divisor_witness_is_first_ascending():
    report = classify_elements(builtin("lukasiewicz"), CheckConfig(grid_steps=10))
    for z in report.zero_divisors:
        # the recorded witness is the smallest positive grid value that works
        k = 1
        while float(builtin("lukasiewicz")(z.value, k / 10)) > report.tolerance:
            k += 1
        assert z.witness == k / 10


def test_boundary_idempotence_for_all_builtin_tnorms():
    for name in ("product", "minimum", "lukasiewicz"):
        report = classify_elements(builtin(name), CheckConfig(grid_steps=16))
        assert 0.0 in report.idempotents
        assert 1.0 in report.idempotents


# --- equilibria ---------------------------------------------------------------------------

def _oracle_fixed_point(fn, iters=200):
    """Independent bisection oracle: fixed iteration count, sign-product test."""
    def d(t):
        return fn(t) - t

    lo, hi = 0.0, 1.0
    for _ in range(iters):
        mid = (lo + hi) / 2.0
        if d(lo) * d(mid) <= 0.0:
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2.0


def test_standard_negation_equilibrium_is_half():
    result = find_equilibria(builtin("standard-negation"), ["a1", "a2"])
    assert result.count == 2
    for entry in result.entries:
        assert abs(entry.value - 0.5) <= 1e-9
        assert entry.is_equilibrium


def test_sugeno_equilibrium_matches_oracles():
    result = find_equilibria(builtin("sugeno(1)"), ["a1"])
    got = result.entry("a1").value
    closed_form = math.sqrt(2.0) - 1.0
    oracle = _oracle_fixed_point(lambda t: (1.0 - t) / (1.0 + t))
    assert abs(got - closed_form) <= 1e-9
    assert abs(got - oracle) <= 1e-9


def test_family_has_one_equilibrium_per_label():
    family = lift_negation(
        {"a1": builtin("standard-negation"), "a2": builtin("sugeno(1)")}
    )
    result = find_equilibria(family, ["a1", "a2"])
    assert result.count == 2
    assert abs(result.entry("a1").value - 0.5) <= 1e-9
    assert abs(result.entry("a2").value - (math.sqrt(2) - 1)) <= 1e-9
    # never more equilibria than labels, even with repeats in the request
    repeated = find_equilibria(family, ["a1", "a1", "a2"])
    assert repeated.count == 2


def test_no_sign_change_is_a_verdict_not_an_error():
    result = find_equilibria(scalar_from_expression("0-1-x", arity=1), ["a1"])
    entry = result.entry("a1")
    assert not entry.is_equilibrium
    assert entry.value is None
    assert "sign change" in entry.note


# --- continuity probe -----------------------------------------------------------------------

_CONTINUOUS_BINARY_BUILTINS = (
    "product", "minimum", "lukasiewicz", "maximum", "probsum", "boundedsum",
    "lukasiewicz-implication", "kleene-dienes-implication",
)


@pytest.mark.parametrize("name", _CONTINUOUS_BINARY_BUILTINS)
def test_probe_clears_lipschitz_builtins(name):
    cfg = CheckConfig(grid_steps=32)
    estimate = continuity_probe(builtin(name), cfg)
    # per-axis Lipschitz-1, so adjacent jumps stay within 2 grid spacings
    assert estimate.max_jump <= 2.0 / estimate.fine_steps + 1e-12
    assert not estimate.suspected_discontinuity


def test_probe_flags_jump():
    estimate = continuity_probe(builtin("godel-implication"), CheckConfig(grid_steps=32))
    assert estimate.suspected_discontinuity
    x1, y1, x2, y2 = estimate.at
    g = builtin("godel-implication")
    assert abs(float(g(x2, y2)) - float(g(x1, y1))) == estimate.max_jump
