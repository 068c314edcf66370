"""Exact linear algebra over the rationals.

Everything here works on :class:`fractions.Fraction` or plain ``int``
entries; there is no floating point anywhere.  Ranks are computed by an
integer-preserving (fraction-free) elimination on sparse rows, which keeps
the Chevalley-Eilenberg matrices of catalog algebras cheap even at
dimension twelve.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

Scalar = Fraction


def as_scalar(value) -> Fraction:
    """Coerce ``int``, ``Fraction`` or a ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty rational string")
        return Fraction(text)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_scalar(value: Fraction) -> str:
    """Canonical string form: ``"p"`` for integers, ``"p/q"`` otherwise."""
    value = as_scalar(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class RationalMatrix:
    """Sparse rational matrix; only nonzero entries are stored."""

    rows: int
    cols: int
    entries: Mapping[tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (r, c), v in dict(self.entries).items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise IndexError(f"entry ({r}, {c}) outside {self.rows}x{self.cols}")
            v = as_scalar(v)
            if v:
                clean[(r, c)] = v
        object.__setattr__(self, "entries", clean)

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence]) -> "RationalMatrix":
        rows = len(dense)
        cols = len(dense[0]) if rows else 0
        entries = {
            (r, c): v for r, row in enumerate(dense) for c, v in enumerate(row) if v
        }
        return cls(rows, cols, entries)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def row_dicts(self) -> list[dict[int, Fraction]]:
        out: list[dict[int, Fraction]] = [{} for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        by_row = other.row_dicts()
        acc: dict[tuple[int, int], Fraction] = {}
        for (r, k), v in self.entries.items():
            for c, w in by_row[k].items():
                acc[(r, c)] = acc.get((r, c), 0) + v * w
        return RationalMatrix(self.rows, other.cols, acc)

    def is_zero(self) -> bool:
        return not self.entries

    def to_json(self) -> dict:
        """Debug dump with canonical rational strings."""
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [
                [r, c, format_scalar(v)] for (r, c), v in sorted(self.entries.items())
            ],
        }


def _integer_row(row: Mapping[int, Fraction]) -> dict[int, int]:
    """Scale a rational row to a primitive integer row (same span)."""
    items = [(c, as_scalar(v)) for c, v in row.items() if v]
    if not items:
        return {}
    den = lcm(*(v.denominator for _, v in items))
    ints = {c: int(v * den) for c, v in items}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    return {c: v // g for c, v in ints.items()}


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {c: v // g for c, v in row.items()}


def _reduce(row: dict[int, int], pivots: dict[int, dict[int, int]]) -> dict[int, int]:
    # Each pivot row has its leading entry at its key, so the leading
    # column of ``row`` strictly increases with every elimination step.
    while row:
        lead = min(row)
        piv = pivots.get(lead)
        if piv is None:
            return row
        a, b = piv[lead], row[lead]
        new = {c: a * v for c, v in row.items()}
        for c, v in piv.items():
            t = new.get(c, 0) - b * v
            if t:
                new[c] = t
            else:
                new.pop(c, None)
        row = _primitive(new) if new else new
    return row


def echelon_rows(rows: Iterable[Mapping[int, Fraction]]) -> dict[int, dict[int, int]]:
    """Integer row echelon form keyed by leading column."""
    pivots: dict[int, dict[int, int]] = {}
    for raw in rows:
        row = _reduce(_integer_row(raw), pivots)
        if row:
            pivots[min(row)] = row
    return pivots


def rank(matrix) -> int:
    """Exact rank of a :class:`RationalMatrix` or a dense list of rows."""
    if isinstance(matrix, RationalMatrix):
        if matrix.is_zero():
            return 0
        rows = matrix.row_dicts()
        # eliminate along the shorter side
        if matrix.rows > matrix.cols:
            cols: list[dict[int, Fraction]] = [{} for _ in range(matrix.cols)]
            for (r, c), v in matrix.entries.items():
                cols[c][r] = v
            rows = cols
    else:
        rows = [{c: v for c, v in enumerate(row) if v} for row in matrix]
    return len(echelon_rows(r for r in rows if r))


def _dense(vec: Mapping[int, Fraction], n: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(vec.get(i, 0)) for i in range(n))


def row_space_basis(vectors: Iterable[Sequence], n: int) -> list[tuple[Fraction, ...]]:
    """Reduced row echelon basis of the span of ``vectors`` (length ``n``)."""
    pivots = echelon_rows({i: v for i, v in enumerate(vec) if v} for vec in vectors)
    basis: dict[int, dict[int, Fraction]] = {}
    for lead in sorted(pivots):
        row = pivots[lead]
        scale = Fraction(1, row[lead])
        basis[lead] = {c: v * scale for c, v in row.items()}
    # back substitution to reduced form
    leads = sorted(basis)
    for lead in reversed(leads):
        for other in leads:
            if other >= lead:
                break
            coef = basis[other].get(lead)
            if coef:
                row = basis[other]
                for c, v in basis[lead].items():
                    t = row.get(c, 0) - coef * v
                    if t:
                        row[c] = t
                    else:
                        row.pop(c, None)
    return [_dense(basis[lead], n) for lead in leads]


def nullspace(matrix: Sequence[Sequence], n: int) -> list[tuple[Fraction, ...]]:
    """Basis of ``{x : matrix @ x = 0}`` for a dense matrix with ``n`` columns."""
    rref = row_space_basis(matrix, n)
    leads = []
    for row in rref:
        leads.append(next(i for i, v in enumerate(row) if v))
    free = [i for i in range(n) if i not in set(leads)]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for lead, row in zip(leads, rref):
            x[lead] = -row[f]
        basis.append(tuple(x))
    return basis


def in_span(vector: Sequence, basis: Sequence[Sequence], n: int) -> bool:
    return len(row_space_basis(list(basis) + [vector], n)) == len(
        row_space_basis(basis, n)
    )
