"""Classifying pairs by s(N, L) and diffing against the reference lists.

Run: python demos/04_classification.py
"""

from nilpair.catalog import families_with_s
from nilpair.classifier import classify, enumerate_solutions, pair_equation
from nilpair.statements import verify

# One family at a time: a linear equation in m = dim K and c = dim K^2
for fam in families_with_s(1) + families_with_s(2)[:1]:
    eq = pair_equation(fam, 7)
    sols = enumerate_solutions(eq)
    print(f"{fam.name}, s(N,L) = 7: {eq} -> {[str(s) for s in sols]}")

print("\ns(N, L) = 6:")
for line in classify(6).lines():
    print(" ", line)

print()
for sigma in range(8):
    v = verify(sigma)
    print(f"s = {sigma}: {len(v.matched)} matched, {len(v.annotated)} annotated differences")
    for d in v.annotated:
        print(f"    {d.side}: {d.label} ({d.erratum.kind})")
