"""The script language and the JSON document format.

Scripts compose fuzzy soft sets with union/intersect/complement/apply
and can print or save the results.  Documents round-trip exactly:
load(save(s)) == s bit for bit.
"""

import tempfile
from pathlib import Path

from fuzzysoft import (
    eval_script,
    load_fss,
    make_fuzzy_soft_set,
    parse_script,
    save_fss,
)

S = make_fuzzy_soft_set(["u1", "u2"], {"a1": (0.3, 0.7)})
G = make_fuzzy_soft_set(["u1", "u2"], {"b1": (0.5, 0.2)})

source = """
# combine the two assessments under product tags
H = union(S, G);
K = apply(dual(product), S, G);      # probabilistic sum, via duality
L = apply(fn(x, y) => x * y, S, G);  # inline connective
print H;
print K;
print L;
save(L, "product.fss");
"""

script = parse_script(source, externals=["S", "G"])
with tempfile.TemporaryDirectory() as tmp:
    result = eval_script(script, {"S": S, "G": G}, base_dir=tmp)
    for block in result.printed:
        print(block)
        print()
    print("saved files:", [Path(p).name for p in result.saved])

    # Documents are deterministic JSON; reloading gives the same set.
    reloaded = load_fss(Path(tmp) / "product.fss")
    assert reloaded == result.env["L"]
    print("load(save(L)) == L:", reloaded == result.env["L"])
    print()
    print("document text:")
    print((Path(tmp) / "product.fss").read_text())

# save_fss works directly too, without a script.
with tempfile.TemporaryDirectory() as tmp:
    target = Path(tmp) / "S.fss"
    save_fss(S, target)
    assert load_fss(target) == S
print("direct save/load round trip: OK")
