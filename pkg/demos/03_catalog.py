"""The catalog of nilpotent Lie algebras with s(L) <= 7, checked by computation.

Run: python demos/03_catalog.py
"""

from nilpair import families_with_s, self_check
from nilpair.catalog import PRINTED_ROWS, algebra_summary, lookup

for v in range(8):
    names = ", ".join(f.name for f in families_with_s(v))
    print(f"s = {v}: {names}")

print()
for name in ("L_{6,22}", "37C", "S_1", "L_{6,10}∔H(1)"):
    print(algebra_summary(lookup(name)))

report = self_check(max_dim=10)
print(f"\nchecked {len(report.checked)} instances, {len(report.mismatches)} mismatches")
for e in report.omissions:
    print(f"not in any list: {e.instance} with s = {e.computed}")
for name, (rows, note) in PRINTED_ROWS.items():
    print(f"{name}: {note}")
