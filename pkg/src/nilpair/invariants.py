"""The invariants s, t of a nilpotent Lie algebra and of a split pair (N, L).

For ``L = N ⊕ K`` with ``n = dim N``, ``m = dim K``, ``d = dim N^2`` and
``c = dim K^2`` the pair multiplier is

    dim M(N, L) = dim M(N) + (n - d)(m - c)

and everything else follows from the definitions of s and t.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .algebra import LieAlgebra, abelian, derived_subalgebra, direct_sum
from .homology import multiplier_dim


def _s_from(n: int, mult: int) -> int:
    return (n - 1) * (n - 2) // 2 + 1 - mult


def s_invariant(L: LieAlgebra) -> int:
    if L.dim < 1:
        raise ValueError("s(L) needs dim L >= 1")
    return _s_from(L.dim, multiplier_dim(L))


def t_invariant(L: LieAlgebra) -> int:
    if L.dim < 1:
        raise ValueError("t(L) needs dim L >= 1")
    n = L.dim
    return n * (n - 1) // 2 - multiplier_dim(L)


@dataclass(frozen=True)
class InvariantRecord:
    dimM: int
    t: int
    s: int


def invariants(L: LieAlgebra) -> InvariantRecord:
    mult = multiplier_dim(L)
    n = L.dim
    return InvariantRecord(mult, n * (n - 1) // 2 - mult, _s_from(n, mult))


@dataclass(frozen=True)
class SplitPair:
    """``L = N ⊕ K`` with both summands ideals; ``K`` may be the zero algebra."""

    N: LieAlgebra
    K: LieAlgebra = field(default_factory=lambda: abelian(0))

    def __post_init__(self):
        if self.N.dim < 1:
            raise ValueError("the ideal N must be nonzero")

    @property
    def n(self) -> int:
        return self.N.dim

    @property
    def m(self) -> int:
        return self.K.dim

    @cached_property
    def d(self) -> int:
        return derived_subalgebra(self.N).rank

    @cached_property
    def c(self) -> int:
        return derived_subalgebra(self.K).rank

    @cached_property
    def L(self) -> LieAlgebra:
        return direct_sum(self.N, self.K)

    def __str__(self):
        return f"({self.N}, {self.L})"


def pair_multiplier_dim(p: SplitPair) -> int:
    return multiplier_dim(p.N) + (p.n - p.d) * (p.m - p.c)


def pair_s(p: SplitPair) -> int:
    n, m = p.n, p.m
    return (n - 1) * (n - 2) // 2 + 1 + (n - 1) * m - pair_multiplier_dim(p)


def pair_t(p: SplitPair) -> int:
    n, m = p.n, p.m
    return n * (n + 2 * m - 1) // 2 - pair_multiplier_dim(p)


def pair_invariants(p: SplitPair) -> InvariantRecord:
    return InvariantRecord(pair_multiplier_dim(p), pair_t(p), pair_s(p))


def s_lower_bound_check(p: SplitPair) -> bool:
    """``s(N, L) - s(N) >= m (dim N^2 - 1)``."""
    return pair_s(p) - s_invariant(p.N) >= p.m * (p.d - 1)
