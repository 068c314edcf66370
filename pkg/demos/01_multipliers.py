"""Schur multipliers from the Chevalley-Eilenberg complex.

Run: python demos/01_multipliers.py
"""

from nilpair import abelian, direct_sum, heisenberg, lookup, multiplier_dim
from nilpair.homology import abelianization_dim, d2_matrix, d3_matrix
from nilpair.linalg import rank

# Heisenberg algebras: dim M(H(1)) = 2, then 2r^2 - r - 1
for r in range(1, 6):
    print(f"dim M(H({r})) = {multiplier_dim(heisenberg(r))}")

# The two boundary maps behind one of those numbers
L = lookup("L_{5,8}")
d2, d3 = d2_matrix(L), d3_matrix(L)
print(f"\n{L}: d2 is {d2.rows}x{d2.cols} of rank {rank(d2)}, "
      f"d3 is {d3.rows}x{d3.cols} of rank {rank(d3)}")
print(f"dim M({L}) = 10 - {rank(d2)} - {rank(d3)} = {multiplier_dim(L)}")

# Direct sums add an extra ab(X) * ab(Y)
X, Y = lookup("L_{4,3}"), heisenberg(1)
S = direct_sum(X, Y)
print(f"\ndim M({S}) = {multiplier_dim(S)}"
      f" = {multiplier_dim(X)} + {multiplier_dim(Y)} + {abelianization_dim(X)}*{abelianization_dim(Y)}")

# Abelian padding
for k in range(4):
    A = direct_sum(heisenberg(2), abelian(k))
    print(f"dim M({A}) = {multiplier_dim(A)}")
