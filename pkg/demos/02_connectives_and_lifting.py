"""Scalar connectives and their lifts to tagged membership values.

A tagged membership is a pair (tag, value).  Lifting a binary scalar
combines the tags into their canonical product and applies the scalar to
the values; lifting a negation keeps the tag.
"""

import numpy as np

from fuzzysoft import (
    ParamTag,
    TaggedMembership,
    builtin,
    builtin_names,
    dual_of,
    lift_negation,
    lift_tnorm,
    scalar_from_expression,
)

print("builtin connectives:", ", ".join(builtin_names()))
print()

# The bounded-difference t-norm max(x + y - 1, 0) annihilates whenever
# the two values sum below 1.
luk = builtin("lukasiewicz")
T = lift_tnorm(luk)
a8 = TaggedMembership(ParamTag("a"), 0.8)
b1 = TaggedMembership(ParamTag("b"), 0.1)
b8 = TaggedMembership(ParamTag("b"), 0.8)
print("T((a, 0.8), (b, 0.1)) =", T(a8, b1))   # -> (a*b, 0.0)
print("T((a, 0.8), (b, 0.8)) =", T(a8, b8))   # -> (a*b, 0.6)
print()

# Arguments commute because tags are canonical multisets.
assert T(a8, b1) == T(b1, a8)
print("lifted evaluation commutes: OK")
print()

# Negations keep the parameter; a family can assign one negation per label.
N = lift_negation({
    "risk": builtin("sugeno(1)"),
    "cost": builtin("standard-negation"),
})
print("N(risk, 0.5) =", N(TaggedMembership(ParamTag("risk"), 0.5)))
print("N(cost, 0.5) =", N(TaggedMembership(ParamTag("cost"), 0.5)))
print()

# Connectives can also be written as expressions in x and y.
einstein_like = scalar_from_expression("x*y/(1+(1-x)*(1-y))")
print("expression connective:", einstein_like.name)
print("  at (0.5, 0.5):", einstein_like(0.5, 0.5))
print()

# Duality: g(x, y) = 1 - f(1 - x, 1 - y) turns a t-norm into a t-conorm.
# The dual of min is max, of product the probabilistic sum, of the
# bounded difference the bounded sum.
g = np.arange(11) / 10
for name, mate in [("minimum", "maximum"), ("product", "probsum"),
                   ("lukasiewicz", "boundedsum")]:
    dual = dual_of(builtin(name))
    gap = np.max(np.abs(dual(g[:, None], g[None, :])
                        - builtin(mate)(g[:, None], g[None, :])))
    print(f"dual({name}) vs {mate}: max gap {gap:.1e} (kind: {dual.kind})")
