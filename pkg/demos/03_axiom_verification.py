"""Verifying connective axioms with counterexample search.

The engine walks a regular grid plus seeded random samples, so reports
are reproducible.  A failed axiom carries a witness -- the smallest
violating argument tuple -- that re-evaluates to the same violation.
Passing means "no counterexample found", not a proof.
"""

from fuzzysoft import (
    CheckConfig,
    builtin,
    check_implication_axioms,
    check_tconorm_axioms,
    check_tnorm_axioms,
    scalar_from_expression,
)

cfg = CheckConfig(grid_steps=64, random_samples=10000, tolerance=1e-9, seed=0)


def show(report):
    print(f"{report.candidate} as {report.kind}: "
          f"{'PASS' if report.passed else 'FAIL'}")
    for check in report.checks:
        line = f"  ({check.label}) {check.description}: "
        if check.passed:
            line += f"pass ({check.points} points)"
        else:
            w = check.witness
            line += f"FAIL at {w.args}: got {w.got!r}"
            if w.want is not None:
                line += f", want {w.relation} {w.want!r}"
        print(line)
    print()


# The product passes all five t-norm axioms.
show(check_tnorm_axioms(builtin("product"), cfg))

# The probabilistic sum is a t-conorm, not a t-norm: its unit is 0, so
# checking it as a t-norm fails the boundary axiom f(1, y) = y.
show(check_tnorm_axioms(builtin("probsum"), cfg))
show(check_tconorm_axioms(builtin("probsum"), cfg))

# User-defined candidates are checked the same way.  Halving the product
# breaks the boundary; min(x, y) is no implication (0 should imply 1).
show(check_tnorm_axioms(scalar_from_expression("x*y/2"), cfg))
show(check_implication_axioms(scalar_from_expression("min(x,y)"), cfg))

# Witnesses re-evaluate: the report is independently checkable.
report = check_tnorm_axioms(builtin("probsum"), cfg)
witness = report.check("i").witness
x, y = witness.args
print(f"witness re-evaluation: f({x}, {y}) = {x + y - x * y!r} "
      f"(report said {witness.got!r}, wanted {witness.want!r})")
