"""Classification of split pairs ``(N, N ⊕ K)`` by the value of s(N, L).

For ``n = dim N``, ``d = dim N^2``, ``m = dim K``, ``c = dim K^2``,

    s(N, L) - s(N) = (d - 1) m + (n - d) c.

Given a target σ, every candidate N with ``s(N) <= σ`` yields one linear
Diophantine equation in ``(m, c)``.  Its nonnegative solutions are filtered
by whether a nilpotent K of that shape exists, and K is then described as
precisely as ``(m, c)`` allows.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from .algebra import LieAlgebra, abelian, direct_sum, filiform, heisenberg
from .catalog import AlgebraFamily, families_with_s
from .invariants import SplitPair, pair_s, s_invariant, s_lower_bound_check


class ClassificationError(ValueError):
    pass


def _check_sigma(sigma) -> int:
    if not isinstance(sigma, int) or isinstance(sigma, bool) or not 0 <= sigma <= 7:
        raise ClassificationError(f"s(N,L) must be an integer in 0..7, got {sigma!r}")
    return sigma


# --------------------------------------------------------------------------
# equations


@dataclass(frozen=True)
class PairEquation:
    """``(d - 1) m + (n - d) c = R`` for one candidate family N."""

    family: AlgebraFamily
    sigma: int
    d: int
    n: int | None
    R: int

    @property
    def sN(self) -> int:
        return self.sigma - self.R

    def __str__(self):
        if self.d == 1:
            n = "n" if self.n is None else str(self.n)
            return f"({n}-1)c = {self.R}"
        a, b = self.d - 1, self.n - self.d
        lhs = ("m" if a == 1 else f"{a}m") + " + " + ("c" if b == 1 else f"{b}c")
        return f"{lhs} = {self.R}"


def pair_equation(family: AlgebraFamily, sigma: int) -> PairEquation:
    if family.expected_s is None:
        raise ClassificationError(f"{family.name} has no known s-value")
    _check_sigma(sigma)
    R = sigma - family.expected_s
    if R < 0:
        raise ClassificationError(f"s({family.name}) = {family.expected_s} exceeds {sigma}")
    return PairEquation(family, sigma, family.d, family.n, R)


# --------------------------------------------------------------------------
# K shapes


def feasible(m: int, c: int, allow_trivial: bool = False) -> bool:
    """Does a nilpotent algebra with ``dim K = m``, ``dim K^2 = c`` exist?

    There is one iff ``c = 0`` or ``m >= c + 2`` (a non-abelian nilpotent
    algebra needs two generators; filiform algebras realize every
    ``c = m - 2``).  ``K = 0`` is only accepted with ``allow_trivial``.
    """
    if m < 0 or c < 0:
        return False
    if c == 0:
        return m >= 1 or (allow_trivial and m == 0)
    return m >= c + 2


@dataclass(frozen=True)
class KDescription:
    """What is known about K from ``(m, c)``; ``m is None`` means m is free."""

    kind: str  # abelian | heisenberg_family | any_nilpotent | trivial
    m: int | None
    c: int
    m_min: int = 0

    @property
    def key(self) -> tuple:
        if self.kind == "trivial":
            return ("0",)
        tag = {"abelian": "A", "heisenberg_family": "H", "any_nilpotent": "any"}[self.kind]
        m = "free" if self.m is None else self.m
        if self.kind == "abelian" and self.m is None:
            return ("A", "free", self.m_min)
        if self.kind == "any_nilpotent":
            return ("any", self.c, m)
        return (tag, m)

    @property
    def heisenberg_ranks(self) -> list[int] | None:
        if self.kind != "heisenberg_family" or self.m is None:
            return None
        return list(range(1, (self.m - 1) // 2 + 1))

    @property
    def name(self) -> str:
        if self.kind == "trivial":
            return "0"
        if self.kind == "abelian":
            return "A(m)" if self.m is None else f"A({self.m})"
        if self.kind == "heisenberg_family":
            if self.m is None:
                return "H(r)⊕A(m-2r-1)"
            return " | ".join(_heis_name(r, self.m - 2 * r - 1) for r in self.heisenberg_ranks)
        return "K" if self.m is None else f"K_{self.m}"

    @property
    def note(self) -> str:
        if self.kind == "trivial":
            return "K = 0"
        if self.kind == "abelian":
            return "any m >= %d" % self.m_min if self.m is None else ""
        if self.kind == "heisenberg_family":
            return "r >= 1, m >= 3" if self.m is None else "dim K^2 = 1"
        where = "every" if self.m is None else f"every {self.m}-dimensional"
        return f"{where} nilpotent K with dim K^2 = {self.c}"

    def covers(self, m: int, c: int) -> bool:
        if c != self.c:
            return False
        if self.m is None:
            return m >= self.m_min
        return m == self.m

    def instance(self) -> LieAlgebra:
        """Smallest concrete K of this shape."""
        m = self.m if self.m is not None else self.m_min
        return standard_nilpotent(m, self.c)

    def to_json(self) -> dict:
        return {"kind": self.kind, "m": self.m, "c": self.c, "m_min": self.m_min, "note": self.note}


def _heis_name(r: int, j: int) -> str:
    return f"H({r})" if j == 0 else f"H({r})⊕A({j})"


def standard_nilpotent(m: int, c: int) -> LieAlgebra:
    """A nilpotent algebra of dimension ``m`` with ``dim K^2 = c``."""
    if not feasible(m, c, allow_trivial=True):
        raise ClassificationError(f"no nilpotent algebra with dim {m} and derived dim {c}")
    if c == 0:
        return abelian(m)
    if c == 1:
        return direct_sum(heisenberg(1), abelian(m - 3))
    return direct_sum(filiform(c + 2), abelian(m - c - 2))


def resolve_K(m: int | None, c: int, allow_trivial: bool = False) -> KDescription:
    """Describe K from its shape; ``m=None`` leaves the dimension free."""
    m_min = 0 if (c == 0 and allow_trivial) else (1 if c == 0 else c + 2)
    if m is not None and not feasible(m, c, allow_trivial):
        raise ClassificationError(f"no nilpotent K with m = {m}, dim K^2 = {c}")
    if c == 0:
        if m == 0:
            return KDescription("trivial", 0, 0, 0)
        return KDescription("abelian", m, 0, m_min)
    if c == 1:
        return KDescription("heisenberg_family", m, 1, m_min)
    return KDescription("any_nilpotent", m, c, m_min)


# --------------------------------------------------------------------------
# solutions


@dataclass(frozen=True)
class PairSolution:
    N: AlgebraFamily
    K: KDescription
    sigma: int
    sN: int

    @property
    def key(self) -> tuple:
        return (self.N.key, self.K.key)

    @property
    def L_name(self) -> str:
        if self.K.kind == "trivial":
            return self.N.name
        return f"{self.N.name}⊕{self.K.name}"

    def __str__(self):
        note = f" [{self.K.note}]" if self.K.note else ""
        return f"({self.N.name}, {self.L_name}){note}"

    def covers(self, family: AlgebraFamily, m: int, c: int) -> bool:
        """Is the concrete pair ``(family, K of shape (m, c))`` one of ours?"""
        if not self.K.covers(m, c):
            return False
        if self.N.key == family.key:
            return True
        if self.N.is_free and family.kind == "heisenberg_plus_abelian" and not family.is_free:
            n = 2 * family.r + 1 + family.k
            return family.r in self.N.heisenberg_ranks(n)
        return False

    def instance_pairs(self) -> list[SplitPair]:
        """Smallest concrete witnesses, one per sampled ε."""
        K = self.K.instance()
        if self.N.has_eps:
            return [SplitPair(alg, K) for _, alg in self.N.instances(max_dim=99)]
        return [SplitPair(self.N.instance(), K)]

    def sort_key(self):
        m = -1 if self.K.m is None else self.K.m
        return (self.sN, self.N.name, m, self.K.c)

    def to_json(self) -> dict:
        params = {}
        if self.N.kind == "heisenberg_plus_abelian":
            params = {"r": self.N.r, "k": self.N.k, "r_min": self.N.r_min}
        elif self.N.k:
            params = {"k": self.N.k}
        n = {"family": self.N.name, "kind": self.N.kind, "params": params,
             "dim": self.N.n, "dim_N2": self.N.d}
        if self.N.note:
            n["note"] = self.N.note
        return {"N": n, "K": self.K.to_json(), "L": self.L_name, "source_sN": self.sN}


def _divisors(R: int) -> list[int]:
    return [c for c in range(1, R + 1) if R % c == 0]


def enumerate_solutions(eq: PairEquation, allow_trivial_K: bool = False) -> list[PairSolution]:
    fam, R, d = eq.family, eq.R, eq.d
    out = []

    def emit(N, m, c):
        out.append(PairSolution(N, resolve_K(m, c, allow_trivial_K), eq.sigma, eq.sN))

    if d == 0:
        raise ClassificationError("abelian N is not part of the classification")
    if d == 1:
        # the m-term vanishes: (n - 1) c = R with m free
        if R == 0:
            emit(fam, None, 0)
            return out
        for c in _divisors(R):
            n = R // c + 1
            if fam.is_free:
                members = fam.concrete(n) if n >= fam.n_min else []
            else:
                members = [fam] if fam.n == n else []
            for member in members:
                emit(member, None, c)
        return out
    n = eq.n
    if n is None:
        raise ClassificationError(f"free dimension with dim N^2 = {d} is not supported")
    for c in range(0, R // (n - d) + 1):
        rest = R - (n - d) * c
        if rest % (d - 1):
            continue
        m = rest // (d - 1)
        if feasible(m, c, allow_trivial_K):
            emit(fam, m, c)
    return out


@dataclass
class ClassificationReport:
    sigma: int
    allow_trivial_K: bool
    solutions: list[PairSolution]
    errata: list = field(default_factory=list)

    def keys(self) -> set:
        return {s.key for s in self.solutions}

    def covers(self, family: AlgebraFamily, m: int, c: int) -> bool:
        return any(s.covers(family, m, c) for s in self.solutions)

    def to_json(self) -> dict:
        return {
            "s": self.sigma,
            "allow_trivial_K": self.allow_trivial_K,
            "solutions": [s.to_json() for s in self.solutions],
            "errata": [e.to_json() for e in self.errata],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, ensure_ascii=False, indent=2)

    def lines(self) -> list[str]:
        return coalesce(self.solutions)


def _check_instances(sol: PairSolution) -> None:
    for p in sol.instance_pairs():
        got = pair_s(p)
        if got != sol.sigma:
            raise AssertionError(f"{sol}: witness {p} has s(N,L) = {got}, expected {sol.sigma}")
        if s_invariant(p.N) != sol.sN:
            raise AssertionError(f"{sol}: s({p.N}) differs from its listed value {sol.sN}")
        if not s_lower_bound_check(p):
            raise AssertionError(f"{sol}: lower bound on s(N,L) - s(N) violated")


def classify(sigma: int, allow_trivial_K: bool | None = None, check: bool = True) -> ClassificationReport:
    """All pairs with ``s(N, L) = sigma`` over the (computationally amended) catalog.

    ``allow_trivial_K`` defaults to ``sigma <= 2``: the small-σ classification
    includes ``K = 0`` while the non-zero-K classifications do not.
    """
    _check_sigma(sigma)
    if allow_trivial_K is None:
        allow_trivial_K = sigma <= 2
    sols: list[PairSolution] = []
    for v in range(sigma + 1):
        for fam in families_with_s(v, amended=True):
            sols.extend(enumerate_solutions(pair_equation(fam, sigma), allow_trivial_K))
    sols.sort(key=PairSolution.sort_key)
    if check:
        for sol in sols:
            _check_instances(sol)
    return ClassificationReport(sigma, allow_trivial_K, sols)


# --------------------------------------------------------------------------
# display


def coalesce(solutions: Iterable[PairSolution]) -> list[str]:
    """Group ``(X ⊕ A(i), X ⊕ A(t))`` entries over ``i`` for display."""
    groups: dict[tuple, list[int]] = {}
    order: list[tuple] = []
    singles: dict[tuple, PairSolution] = {}
    for sol in solutions:
        N = sol.N
        if N.kind in ("fixed", "direct_sum_abelian") and sol.K.kind in ("abelian", "trivial") \
                and sol.K.m is not None:
            base, i = N.key[1], N.key[2]
            gkey = ("pad", base, N.has_eps, i + sol.K.m)
            if gkey not in groups:
                groups[gkey] = []
                order.append(gkey)
            groups[gkey].append(i)
        else:
            gkey = ("one", sol.key)
            singles[gkey] = sol
            order.append(gkey)
    lines = []
    for gkey in order:
        if gkey[0] == "one":
            lines.append(str(singles[gkey]))
            continue
        _, base, eps, total = gkey
        idx = sorted(groups[gkey])
        b = base + ("(ε)" if eps else "")
        if len(idx) == 1:
            i = idx[0]
            n_name = b if i == 0 else f"{b}⊕A({i})"
            l_name = b if total == 0 else f"{b}⊕A({total})"
            lines.append(f"({n_name}, {l_name})")
        else:
            lines.append(f"({b}⊕A(i), {b}⊕A({total})), i ∈ {{{', '.join(map(str, idx))}}}")
    return lines
