"""Finite-dimensional Lie algebras given by structure constants.

Basis indices are 1-based everywhere a user sees them (constructors, JSON
files, validation reports), matching the usual ``[e_1, e_2] = e_3``
notation.  Coordinate vectors are plain tuples, so ``e_k`` is position
``k - 1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .linalg import as_scalar, format_scalar, in_span, nullspace, row_space_basis

Vector = tuple[Fraction, ...]


class AlgebraError(ValueError):
    """Malformed structure constants or an invalid construction."""


@dataclass(frozen=True)
class StructureConstants:
    """Sparse table of ``[e_i, e_j] = sum_k c_ij^k e_k`` with ``i < j``.

    ``table`` is a sorted tuple of ``((i, j), ((k, c), ...))`` using
    1-based indices.  Use :meth:`from_brackets` to build one from a mapping;
    it normalizes ``i > j`` entries by antisymmetry and drops zeros.
    """

    dim: int
    table: tuple = ()

    def __post_init__(self):
        if self.dim < 0:
            raise AlgebraError(f"dimension must be nonnegative, got {self.dim}")
        for (i, j), coeffs in self.table:
            if not 1 <= i < j <= self.dim:
                raise AlgebraError(f"bad bracket index pair ({i}, {j}) for dim {self.dim}")
            for k, c in coeffs:
                if not 1 <= k <= self.dim:
                    raise AlgebraError(f"bracket [e{i}, e{j}] has e{k} out of range")
                if not c:
                    raise AlgebraError("zero coefficient stored")

    @classmethod
    def from_brackets(cls, dim: int, brackets) -> "StructureConstants":
        """``brackets`` maps ``(i, j)`` to ``{k: coeff}`` (or is an iterable of
        ``(i, j, k, coeff)`` / ``(i, j, k)`` tuples)."""
        acc: dict[tuple[int, int], dict[int, Fraction]] = {}

        def add(i, j, k, c):
            c = as_scalar(c)
            if i == j:
                if c:
                    raise AlgebraError(f"[e{i}, e{i}] must vanish")
                return
            if i > j:
                i, j, c = j, i, -c
            slot = acc.setdefault((i, j), {})
            slot[k] = slot.get(k, 0) + c

        if isinstance(brackets, Mapping):
            for (i, j), coeffs in brackets.items():
                for k, c in coeffs.items():
                    add(i, j, k, c)
        else:
            for item in brackets:
                if len(item) == 3:
                    add(*item, 1)
                else:
                    add(*item)
        table = []
        for key in sorted(acc):
            coeffs = tuple((k, c) for k, c in sorted(acc[key].items()) if c)
            if coeffs:
                table.append((key, coeffs))
        return cls(dim, tuple(table))

    @cached_property
    def brackets(self) -> dict[tuple[int, int], dict[int, Fraction]]:
        """0-based view ``{(i, j): {k: c}}`` with ``i < j``."""
        return {
            (i - 1, j - 1): {k - 1: c for k, c in coeffs} for (i, j), coeffs in self.table
        }

    def basis_bracket(self, i: int, j: int) -> dict[int, Fraction]:
        """0-based ``[e_i, e_j]`` as a sparse dict."""
        if i == j:
            return {}
        if i < j:
            return self.brackets.get((i, j), {})
        return {k: -c for k, c in self.brackets.get((j, i), {}).items()}

    def permuted(self, perm: Sequence[int]) -> "StructureConstants":
        """Relabel ``e_i -> e_perm[i]`` (0-based permutation)."""
        if sorted(perm) != list(range(self.dim)):
            raise AlgebraError("not a permutation of the basis")
        out = []
        for (i, j), coeffs in self.brackets.items():
            for k, c in coeffs.items():
                out.append((perm[i] + 1, perm[j] + 1, perm[k] + 1, c))
        return StructureConstants.from_brackets(self.dim, out)


@dataclass(frozen=True)
class LieAlgebra:
    sc: StructureConstants
    label: str | None = field(default=None, compare=False)
    params: tuple = field(default=(), compare=False)

    @property
    def dim(self) -> int:
        return self.sc.dim

    def e(self, i: int) -> Vector:
        """Coordinate vector of the basis element ``e_i`` (1-based)."""
        if not 1 <= i <= self.dim:
            raise IndexError(f"e{i} not in a basis of dimension {self.dim}")
        return tuple(Fraction(int(k == i - 1)) for k in range(self.dim))

    def zero(self) -> Vector:
        return (Fraction(0),) * self.dim

    def __str__(self):
        return self.label or f"<Lie algebra of dim {self.dim}>"

    def relabeled(self, label: str | None, params: Mapping | None = None) -> "LieAlgebra":
        return LieAlgebra(self.sc, label, tuple(sorted((params or {}).items())))


def from_brackets(dim: int, brackets, label=None, params=None) -> LieAlgebra:
    sc = StructureConstants.from_brackets(dim, brackets)
    return LieAlgebra(sc, label, tuple(sorted((params or {}).items())))


# --------------------------------------------------------------------------
# brackets and subspaces


def bracket(x: Sequence, y: Sequence, L: LieAlgebra) -> Vector:
    n = L.dim
    if len(x) != n or len(y) != n:
        raise AlgebraError(f"vectors of length {len(x)}, {len(y)} for dim {n}")
    out = [Fraction(0)] * n
    for (i, j), coeffs in L.sc.brackets.items():
        w = x[i] * y[j] - x[j] * y[i]
        if w:
            for k, c in coeffs.items():
                out[k] += w * c
    return tuple(out)


@dataclass(frozen=True)
class SubspaceBasis:
    """Linearly independent coordinate vectors (reduced row echelon form)."""

    vectors: tuple[Vector, ...]
    dim: int

    @property
    def rank(self) -> int:
        return len(self.vectors)

    def __len__(self):
        return self.rank

    def contains(self, v: Sequence) -> bool:
        return in_span(v, self.vectors, self.dim)


def span(vectors: Iterable[Sequence], n: int) -> SubspaceBasis:
    return SubspaceBasis(tuple(row_space_basis(list(vectors), n)), n)


def derived_subalgebra(L: LieAlgebra) -> SubspaceBasis:
    n = L.dim
    images = []
    for coeffs in L.sc.brackets.values():
        images.append(tuple(Fraction(coeffs.get(k, 0)) for k in range(n)))
    return span(images, n)


def center(L: LieAlgebra) -> SubspaceBasis:
    """Kernel of ``x -> ad x``; one equation per (basis element, coordinate)."""
    n = L.dim
    if n == 0:
        return SubspaceBasis((), 0)
    rows = []
    for j in range(n):
        for k in range(n):
            # coefficient of e_k in [x, e_j] as a linear form in x
            row = [L.sc.basis_bracket(i, j).get(k, Fraction(0)) for i in range(n)]
            if any(row):
                rows.append(row)
    return SubspaceBasis(tuple(nullspace(rows, n)), n)


def commutator(A: SubspaceBasis, B: SubspaceBasis, L: LieAlgebra) -> SubspaceBasis:
    return span((bracket(a, b, L) for a in A.vectors for b in B.vectors), L.dim)


def lower_central_series(L: LieAlgebra, max_terms: int | None = None) -> list[SubspaceBasis]:
    """``[L^1, L^2, ...]`` up to and including the first repeated dimension."""
    n = L.dim
    whole = span((L.e(i) for i in range(1, n + 1)), n)
    series = [whole]
    limit = max_terms or n + 2
    while len(series) < limit:
        nxt = commutator(series[-1], whole, L)
        series.append(nxt)
        if nxt.rank == series[-2].rank:
            break
    return series


def is_nilpotent(L: LieAlgebra) -> tuple[bool, int | None]:
    """``(True, class)`` if the lower central series reaches zero."""
    series = lower_central_series(L)
    if series[-1].rank != 0:
        return False, None
    # L^{c+1} = 0 with c minimal
    return True, next(i for i, term in enumerate(series) if term.rank == 0)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple = ()  # ((i, j, k), jacobiator) with 1-based indices

    def __bool__(self):
        return self.ok


def validate(L: LieAlgebra) -> ValidationReport:
    """Check the Jacobi identity on every basis triple ``i < j < k``."""
    n = L.dim
    sc = L.sc
    bad = []

    def br_vec_basis(vec: Mapping[int, Fraction], k: int) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for a, x in vec.items():
            for t, c in sc.basis_bracket(a, k).items():
                out[t] = out.get(t, 0) + x * c
        return out

    for i, j, k in combinations(range(n), 3):
        total: dict[int, Fraction] = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            for t, v in br_vec_basis(sc.basis_bracket(a, b), c).items():
                total[t] = total.get(t, 0) + v
        if any(total.values()):
            vec = tuple(Fraction(total.get(t, 0)) for t in range(n))
            bad.append(((i + 1, j + 1, k + 1), vec))
    return ValidationReport(not bad, tuple(bad))


# --------------------------------------------------------------------------
# constructors


def abelian(k: int) -> LieAlgebra:
    if k < 0:
        raise AlgebraError(f"abelian algebra of negative dimension {k}")
    return LieAlgebra(StructureConstants(k), f"A({k})", (("k", k),))


def heisenberg(r: int) -> LieAlgebra:
    """``H(r)``: ``[e_{2i-1}, e_{2i}] = e_{2r+1}`` for ``i = 1..r``."""
    if r < 1:
        raise AlgebraError(f"Heisenberg algebra needs r >= 1, got {r}")
    z = 2 * r + 1
    return from_brackets(z, [(2 * i - 1, 2 * i, z) for i in range(1, r + 1)], f"H({r})", {"r": r})


def filiform(n: int) -> LieAlgebra:
    """Standard graded filiform algebra ``[e_1, e_i] = e_{i+1}``, ``dim L^2 = n - 2``."""
    if n < 3:
        raise AlgebraError(f"filiform algebra needs dimension >= 3, got {n}")
    return from_brackets(n, [(1, i, i + 1) for i in range(2, n)], f"F({n})", {"n": n})


def _sum_label(a: str | None, b: str | None) -> str | None:
    if a is None or b is None:
        return None
    if b == "A(0)":
        return a
    if a == "A(0)":
        return b
    return f"{a}⊕{b}"


def direct_sum(L1: LieAlgebra, L2: LieAlgebra, label: str | None = None) -> LieAlgebra:
    shift = L1.dim
    items = [(i, j, k, c) for (i, j), cs in L1.sc.table for k, c in cs]
    items += [(i + shift, j + shift, k + shift, c) for (i, j), cs in L2.sc.table for k, c in cs]
    label = label if label is not None else _sum_label(L1.label, L2.label)
    return from_brackets(L1.dim + L2.dim, items, label)


def central_product(
    M: LieAlgebra,
    N: LieAlgebra,
    ident: Sequence[tuple[Sequence, Sequence]],
    label: str | None = None,
) -> LieAlgebra:
    """Glue ``M`` and ``N`` along central vectors, ``u_i ~ v_i``.

    ``ident`` lists pairs ``(u, v)`` of coordinate vectors with ``u`` in
    ``Z(M)``, ``v`` in ``Z(N)``; both families must be independent.  The
    result is ``(M ⊕ N) / span{(u_i, -v_i)}``.  The basis of ``M`` is kept
    and the glued directions of ``N`` are dropped.
    """
    m, n = M.dim, N.dim
    us = [tuple(as_scalar(x) for x in u) for u, _ in ident]
    vs = [tuple(as_scalar(x) for x in v) for _, v in ident]
    if any(len(u) != m for u in us) or any(len(v) != n for v in vs):
        raise AlgebraError("identification vectors have the wrong length")
    if len(row_space_basis(us, m)) != len(us) or len(row_space_basis(vs, n)) != len(vs):
        raise AlgebraError("identification is not invertible (dependent vectors)")
    zm, zn = center(M), center(N)
    for u in us:
        if not zm.contains(u):
            raise AlgebraError("identified subspace of the first factor is not central")
    for v in vs:
        if not zn.contains(v):
            raise AlgebraError("identified subspace of the second factor is not central")
    total = direct_sum(M, N, label="")
    dim = m + n
    if not us:
        return total.relabeled(label if label is not None else _sum_label(M.label, N.label))

    # Gluing vectors (u, -v) in reduced echelon form with pivots chosen from
    # the highest coordinates, so M's basis survives intact.
    glue = [tuple(reversed(u + tuple(-x for x in v))) for u, v in zip(us, vs)]
    rref = [tuple(reversed(row)) for row in row_space_basis(glue, dim)]
    pivots = [max(i for i, x in enumerate(row) if x) for row in rref]
    keep = [i for i in range(dim) if i not in set(pivots)]
    pos = {old: new for new, old in enumerate(keep)}

    def project(vec: Mapping[int, Fraction]) -> dict[int, Fraction]:
        x = [Fraction(vec.get(i, 0)) for i in range(dim)]
        for p, row in zip(pivots, rref):
            if x[p]:
                coef = x[p] / row[p]
                x = [a - coef * b for a, b in zip(x, row)]
        return {pos[i]: x[i] for i in keep if x[i]}

    items = []
    for a_idx, a in enumerate(keep):
        for b in keep[a_idx + 1:]:
            for k, c in project(total.sc.basis_bracket(a, b)).items():
                items.append((pos[a] + 1, pos[b] + 1, k + 1, c))
    if label is None and M.label and N.label:
        label = f"{M.label}∔{N.label}"
    return from_brackets(len(keep), items, label)


def permute_basis(L: LieAlgebra, perm: Sequence[int]) -> LieAlgebra:
    return LieAlgebra(L.sc.permuted(perm), L.label, L.params)


# --------------------------------------------------------------------------
# JSON file format


def to_json(L: LieAlgebra) -> dict:
    brackets = [
        {"i": i, "j": j, "coeffs": {str(k): format_scalar(c) for k, c in coeffs}}
        for (i, j), coeffs in L.sc.table
    ]
    out: dict = {"dim": L.dim, "brackets": brackets}
    if L.label is not None:
        out["label"] = L.label
    return out


def from_json(data: Mapping) -> LieAlgebra:
    """Parse the ``{"dim", "brackets", "label"}`` format; rejects ``i >= j``."""
    try:
        dim = data["dim"]
        raw = data.get("brackets", [])
    except (KeyError, TypeError, AttributeError) as exc:
        raise AlgebraError(f"missing field in algebra file: {exc}") from None
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
        raise AlgebraError(f"'dim' must be a nonnegative integer, got {dim!r}")
    items = []
    seen = set()
    for entry in raw:
        try:
            i, j, coeffs = entry["i"], entry["j"], entry["coeffs"]
        except (KeyError, TypeError):
            raise AlgebraError(f"bracket entry needs i, j, coeffs: {entry!r}") from None
        if not (isinstance(i, int) and isinstance(j, int)):
            raise AlgebraError(f"indices must be integers: {entry!r}")
        if i >= j:
            raise AlgebraError(f"bracket entries need i < j, got ({i}, {j})")
        if not (1 <= i and j <= dim):
            raise AlgebraError(f"index pair ({i}, {j}) out of range for dim {dim}")
        if (i, j) in seen:
            raise AlgebraError(f"duplicate bracket entry ({i}, {j})")
        seen.add((i, j))
        for k, c in coeffs.items():
            try:
                k = int(k)
                c = as_scalar(c)
            except (TypeError, ValueError, ZeroDivisionError):
                raise AlgebraError(f"bad coefficient {k!r}: {c!r}") from None
            if not 1 <= k <= dim:
                raise AlgebraError(f"output index {k} out of range for dim {dim}")
            items.append((i, j, k, c))
    label = data.get("label")
    if label is not None and not isinstance(label, str):
        raise AlgebraError("'label' must be a string")
    return from_brackets(dim, items, label)


def load(path) -> LieAlgebra:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise AlgebraError(f"cannot read {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraError(f"{path}: invalid JSON ({exc.msg})") from None
    return from_json(data)


def dump(L: LieAlgebra, path) -> None:
    Path(path).write_text(json.dumps(to_json(L), sort_keys=True, indent=2) + "\n", encoding="utf-8")
