"""Invariants of split pairs (N, N ⊕ K).

Run: python demos/02_pairs.py
"""

from nilpair import SplitPair, abelian, heisenberg, lookup, multiplier_dim, pair_s, s_invariant
from nilpair.invariants import pair_invariants, s_lower_bound_check

N = lookup("L_{5,8}")
print(f"s({N}) = {s_invariant(N)}")

# s(N, L) grows with K; only dim K and dim K^2 matter
for K in (abelian(1), abelian(3), abelian(6), heisenberg(1), lookup("L_{4,3}")):
    p = SplitPair(N, K)
    inv = pair_invariants(p)
    print(f"  K = {K.label:<8} m={p.m} c={p.c}: dim M(N,L) = {inv.dimM:>3}, "
          f"s(N,L) = {inv.s:>2}, t(N,L) = {inv.t:>3}, bound ok: {s_lower_bound_check(p)}")

# The pair multiplier is what M(N ⊕ K) has beyond M(K)
p = SplitPair(N, abelian(5))
print(f"\ndim M(N ⊕ A(5)) - dim M(A(5)) = {multiplier_dim(p.L)} - {multiplier_dim(p.K)}"
      f" = {multiplier_dim(p.L) - multiplier_dim(p.K)}")

# Same s(N, L) from different N
for n_name, k in (("L_{5,8}", abelian(6)), ("H(1)⊕A(4)", heisenberg(1)), ("L_{4,3}", heisenberg(1))):
    p = SplitPair(lookup(n_name), k)
    print(f"s({p.N}, {p.L}) = {pair_s(p)}")
