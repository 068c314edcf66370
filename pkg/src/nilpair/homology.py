"""Schur multiplier dimension via the Chevalley-Eilenberg complex.

With trivial coefficients the low-degree part of the complex is

    Λ³L --d3--> Λ²L --d2--> L

with ``d2(x∧y) = [x, y]`` and
``d3(x∧y∧z) = [x,y]∧z - [x,z]∧y + [y,z]∧x``.  The multiplier is the
degree-2 homology, so ``dim M(L) = C(n,2) - rank d2 - rank d3``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

from .algebra import LieAlgebra, StructureConstants
from .linalg import RationalMatrix, rank


@dataclass(frozen=True)
class ExteriorBasis:
    """Lexicographically ordered ``p``-subsets of ``{0..n-1}``."""

    n: int
    p: int

    @property
    def subsets(self) -> tuple[tuple[int, ...], ...]:
        return _subsets(self.n, self.p)

    @property
    def index(self) -> dict[tuple[int, ...], int]:
        return _index(self.n, self.p)

    def __len__(self):
        return comb(self.n, self.p)


@lru_cache(maxsize=None)
def _subsets(n, p):
    return tuple(combinations(range(n), p))


@lru_cache(maxsize=None)
def _index(n, p):
    return {s: i for i, s in enumerate(_subsets(n, p))}


def d2_matrix(L: LieAlgebra) -> RationalMatrix:
    """``n x C(n,2)``; column ``(i, j)`` holds the coordinates of ``[e_i, e_j]``."""
    n = L.dim
    cols = ExteriorBasis(n, 2)
    idx = cols.index
    entries = {}
    for (i, j), coeffs in L.sc.brackets.items():
        c = idx[(i, j)]
        for k, v in coeffs.items():
            entries[(k, c)] = v
    return RationalMatrix(n, len(cols), entries)


def d3_matrix(L: LieAlgebra) -> RationalMatrix:
    """``C(n,2) x C(n,3)`` boundary ``Λ³L -> Λ²L``."""
    n = L.dim
    sc = L.sc
    rows = ExteriorBasis(n, 2).index
    entries: dict[tuple[int, int], Fraction] = {}
    for col, (x, y, z) in enumerate(ExteriorBasis(n, 3).subsets):
        for a, b, w, sign in ((x, y, z, 1), (x, z, y, -1), (y, z, x, 1)):
            for k, v in sc.basis_bracket(a, b).items():
                if k == w:
                    continue
                # e_k ∧ e_w, normalized to increasing order
                key, s = ((k, w), sign) if k < w else ((w, k), -sign)
                pos = (rows[key], col)
                entries[pos] = entries.get(pos, 0) + s * v
    return RationalMatrix(comb(n, 2), comb(n, 3), entries)


@lru_cache(maxsize=4096)
def _multiplier_dim(sc: StructureConstants) -> int:
    L = LieAlgebra(sc)
    n = sc.dim
    return comb(n, 2) - rank(d2_matrix(L)) - rank(d3_matrix(L))


def multiplier_dim(L: LieAlgebra) -> int:
    """``dim M(L)`` as the second Lie algebra homology with trivial coefficients."""
    return _multiplier_dim(L.sc)


def abelianization_dim(L: LieAlgebra) -> int:
    """``dim L/L^2``."""
    return L.dim - rank(d2_matrix(L))


def heisenberg_multiplier(r: int) -> int:
    """Closed form for ``dim M(H(r))``."""
    if r < 1:
        raise ValueError("r >= 1 required")
    return 2 if r == 1 else 2 * r * r - r - 1


def derived_one_multiplier(total_dim: int, r: int) -> int:
    """``dim M(H(r) ⊕ A(j))`` with ``total_dim = 2r + 1 + j``, the dim L^2 = 1 case."""
    if r < 1 or total_dim < 2 * r + 1:
        raise ValueError(f"no H({r}) summand fits in dimension {total_dim}")
    base = (total_dim - 1) * (total_dim - 2) // 2
    return base + 1 if r == 1 else base - 1


def direct_sum_multiplier(mult_a: int, ab_a: int, mult_b: int, ab_b: int) -> int:
    """Multiplier of ``X ⊕ Y`` from the multipliers and abelianization dims."""
    return mult_a + mult_b + ab_a * ab_b


def multiplier_dim_closed_form(family) -> int | None:
    """Closed-form ``dim M`` for a concrete catalog family, or ``None``.

    Covered: ``A(k)``, ``H(r)``, ``H(r) ⊕ A(j)`` and ``X ⊕ A(k)`` where the
    multiplier of ``X`` is itself known in closed form or from the
    single-algebra classification (its listed s-value).  Everything else is
    "not covered" and returns ``None``.
    """
    from .catalog import closed_form_inputs

    inputs = closed_form_inputs(family)
    if inputs is None:
        return None
    kind = inputs[0]
    if kind == "abelian":
        k = inputs[1]
        return k * (k - 1) // 2
    if kind == "heisenberg":
        _, r, j = inputs
        if j == 0:
            return heisenberg_multiplier(r)
        return derived_one_multiplier(2 * r + 1 + j, r)
    _, base_mult, base_ab, k = inputs
    return direct_sum_multiplier(base_mult, base_ab, k * (k - 1) // 2, k)
