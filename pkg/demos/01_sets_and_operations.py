"""Fuzzy soft sets and their set-level operations.

A fuzzy soft set assigns a fuzzy set over a fixed universe to each
parameter tag; the parameters are just names for the approximations.
Binary operations pair up the tags of both operands, so the result
carries product tags like ``quality*price``.
"""

from fuzzysoft import (
    complement_fss,
    intersect_fss,
    make_fuzzy_soft_set,
    render_fss,
    tau_family,
    union_fss,
)

# Two assessments of the same three houses, each under its own parameters.
houses = ["h1", "h2", "h3"]
by_quality = make_fuzzy_soft_set(houses, {
    "modern": (0.9, 0.4, 0.1),
    "spacious": (0.6, 0.8, 0.3),
})
by_price = make_fuzzy_soft_set(houses, {
    "cheap": (0.2, 0.5, 0.9),
})

print("first assessment:")
print(render_fss(by_quality))
print()

# The family of approximations, one fuzzy set per tag (sorted by tag).
print("approximations:", len(tau_family(by_quality)))
print("distinct approximations:", len(tau_family(by_quality, distinct=True)))
print()

# Complement flips every membership to 1 - m, keeping the tags.
print("complement:")
print(render_fss(complement_fss(by_quality)))
print()

# Union and intersection combine every tag of one operand with every tag
# of the other: 2 tags x 1 tag -> 2 product tags.
print("union (pointwise max under product tags):")
print(render_fss(union_fss(by_quality, by_price)))
print()
print("intersection (pointwise min):")
print(render_fss(intersect_fss(by_quality, by_price)))
print()

# Product tags are unordered: union(S, G) and union(G, S) are the same
# fuzzy soft set, because 'modern*cheap' and 'cheap*modern' are the same
# canonical tag.
assert union_fss(by_quality, by_price) == union_fss(by_price, by_quality)
print("union is commutative as set equality: OK")
