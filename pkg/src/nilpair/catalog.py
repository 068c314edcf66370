"""Named nilpotent Lie algebras and the single-algebra s-classification.

The table below is the list of nonzero brackets of every named algebra the
classification uses.  ``EPS`` marks the free parameter of the four
one-parameter families.  Names follow the ``L_{i,j}`` / ``37A`` / ``S_1``
conventions of the nilpotent classification literature.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterator

from .algebra import (
    AlgebraError,
    LieAlgebra,
    abelian,
    center,
    central_product,
    derived_subalgebra,
    direct_sum,
    filiform,
    from_brackets,
    heisenberg,
)
from .linalg import as_scalar

EPS = "eps"
DEFAULT_EPS = Fraction(1)
EPS_SAMPLES = (Fraction(0), Fraction(1), Fraction(-1), Fraction(2))

BRACKET_TABLE: dict[str, list[tuple]] = {
    "L_{4,3}": [(1, 2, 3), (1, 3, 4)],
    "L_{5,5}": [(1, 2, 3), (1, 3, 5), (2, 4, 5)],
    "L_{5,6}": [(1, 2, 3), (1, 3, 4), (1, 4, 5), (2, 3, 5)],
    "L_{5,7}": [(1, 2, 3), (1, 3, 4), (1, 4, 5)],
    "L_{5,8}": [(1, 2, 4), (1, 3, 5)],
    "L_{5,9}": [(1, 2, 3), (1, 3, 4), (2, 3, 5)],
    "L_{6,10}": [(1, 2, 3), (1, 3, 6), (4, 5, 6)],
    "L_{6,11}": [(1, 2, 3), (1, 3, 4), (1, 4, 6), (2, 3, 6), (2, 5, 6)],
    "L_{6,12}": [(1, 2, 3), (1, 3, 4), (1, 4, 6), (2, 5, 6)],
    "L_{6,13}": [(1, 2, 3), (1, 3, 5), (2, 4, 5), (1, 5, 6), (3, 4, 6)],
    "L_{6,20}": [(1, 2, 4), (1, 3, 5), (1, 5, 6), (2, 4, 6)],
    "L_{6,23}": [(1, 2, 3), (1, 3, 5), (2, 4, 5), (1, 4, 6)],
    "L_{6,25}": [(1, 2, 3), (1, 3, 5), (1, 4, 6)],
    "L_{6,26}": [(1, 2, 4), (1, 3, 5), (2, 3, 6)],
    "L_{6,27}": [(1, 2, 3), (1, 3, 5), (2, 4, 6)],
    "L_{6,19}": [(1, 2, 4), (1, 3, 5), (1, 5, 6), (2, 4, 6), (3, 5, 6, EPS)],
    "L_{6,21}": [(1, 2, 3), (1, 3, 4), (2, 3, 5), (1, 4, 6), (2, 5, 6, EPS)],
    "L_{6,22}": [(1, 2, 5), (3, 4, 5), (1, 3, 6), (2, 4, 6, EPS)],
    "L_{6,24}": [(1, 2, 3), (1, 3, 5), (2, 4, 5), (2, 3, 6), (1, 4, 6, EPS)],
    "37A": [(1, 2, 5), (2, 3, 6), (2, 4, 7)],
    "37B": [(1, 2, 5), (2, 3, 6), (3, 4, 7)],
    "37C": [(1, 2, 5), (3, 4, 5), (2, 3, 6), (2, 4, 7)],
    "37D": [(1, 2, 5), (3, 4, 5), (1, 3, 6), (2, 4, 7)],
    "27A": [(1, 2, 6), (1, 4, 7), (3, 5, 7)],
    "27B": [(1, 2, 6), (3, 4, 6), (1, 5, 7), (2, 3, 7)],
    "157": [(1, 2, 3), (1, 3, 7), (2, 4, 7), (5, 6, 7)],
    "257A": [(1, 2, 3), (1, 3, 6), (2, 4, 6), (1, 5, 7)],
    "257C": [(1, 2, 3), (1, 3, 6), (2, 4, 6), (2, 5, 7)],
    "257F": [(1, 2, 3), (2, 3, 6), (4, 5, 6), (2, 4, 7)],
    "S_1": [(1, 2, 6), (1, 4, 8), (3, 5, 8), (2, 7, 8)],
    "S_2": [(1, 2, 4), (1, 3, 5), (6, 7, 5), (7, 8, 5)],
    "S_3": [(1, 3, 6), (1, 2, 5), (3, 4, 5), (7, 8, 5)],
}

# Rows whose printed form disagrees with how the algebra is used.  The printed
# L_{6,26} row has [e2,e4] = e6, giving s = 5; every list and pair equation
# needs s(L_{6,26}) = 3 with dim L^2 = 3, which is the free 2-step nilpotent
# algebra on three generators, i.e. [e2,e3] = e6.
PRINTED_ROWS: dict[str, tuple[list[tuple], str]] = {
    "L_{6,26}": (
        [(1, 2, 4), (1, 3, 5), (2, 4, 6)],
        "printed bracket [e2,e4]=e6 gives s = 5; corrected to [e2,e3]=e6 (s = 3)",
    ),
}

EPS_ALGEBRAS = frozenset(name for name, rows in BRACKET_TABLE.items() if any(EPS in r for r in rows))

# L_{6,i} = L_{5,i} ⊕ A(1) for i <= 9
SPLIT_ALIASES = {f"L_{{6,{i}}}": f"L_{{5,{i}}}" for i in range(5, 10)}

CENTRAL_PRODUCT = "L_{6,10}∔H(1)"
HEISENBERG_PAIR = "H(1)⊕H(2)"
DERIVED_NAMES = (*SPLIT_ALIASES, CENTRAL_PRODUCT, HEISENBERG_PAIR)


class CatalogError(KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "catalog error"


def table_row_dim(name: str) -> int:
    return max(max(row[:3]) for row in BRACKET_TABLE[name])


# --------------------------------------------------------------------------
# names


_L_NAME = re.compile(r"^L_?\{?(\d+)[,_](\d+)\}?$")
_S_NAME = re.compile(r"^S_?\{?(\d)\}?$")
_EPS_SUFFIX = re.compile(r"\((ε|eps|epsilon)\)$")


def normalize_name(name: str) -> str:
    """Canonical spelling of a single catalog name (``L5_8`` -> ``L_{5,8}``)."""
    text = _EPS_SUFFIX.sub("", name.strip().replace(" ", ""))
    m = _L_NAME.match(text)
    if m:
        return f"L_{{{m.group(1)},{m.group(2)}}}"
    m = _S_NAME.match(text)
    if m:
        return f"S_{m.group(1)}"
    if text in ("L_{6,10}*H(1)", "L_{6,10}∔H(1)", "L6_10*H1"):
        return CENTRAL_PRODUCT
    return text


def _split_sum(name: str) -> list[str]:
    parts, depth, cur = [], 0, ""
    for ch in name:
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        if ch in "⊕+" and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return [p.strip() for p in parts if p.strip()]


def _int_param(params, key, name):
    if key not in params:
        raise CatalogError(f"{name} needs the parameter {key}")
    try:
        return int(params[key])
    except (TypeError, ValueError):
        raise CatalogError(f"parameter {key}={params[key]!r} is not an integer") from None


# --------------------------------------------------------------------------
# construction


def table_algebra(name: str, eps=None) -> LieAlgebra:
    rows = BRACKET_TABLE[name]
    params = {}
    if name in EPS_ALGEBRAS:
        eps = DEFAULT_EPS if eps is None else as_scalar(eps)
        params["eps"] = eps
    items = [(i, j, k, eps if rest and rest[0] == EPS else 1) for (i, j, k, *rest) in rows]
    return from_brackets(table_row_dim(name), items, name, params)


def _central_product_entry() -> LieAlgebra:
    base = table_algebra("L_{6,10}")
    h = heisenberg(1)
    # e6 spans Z(L_{6,10}); e3 spans Z(H(1))
    return central_product(base, h, [(base.e(6), h.e(3))], label=CENTRAL_PRODUCT)


def _single(name: str, params: dict, eps) -> LieAlgebra:
    m = re.fullmatch(r"A\((\d+)\)", name)
    if m:
        return abelian(int(m.group(1)))
    m = re.fullmatch(r"H\((\d+)\)", name)
    if m:
        r = int(m.group(1))
        if r < 1:
            raise CatalogError("H(r) needs r >= 1")
        return heisenberg(r)
    m = re.fullmatch(r"F\((\d+)\)", name)
    if m:
        n = int(m.group(1))
        if n < 3:
            raise CatalogError("F(n) needs n >= 3")
        return filiform(n)
    if name == "A":
        k = _int_param(params, "k", "A")
        if k < 0:
            raise CatalogError(f"A(k) needs k >= 0, got {k}")
        return abelian(k)
    if name == "H":
        r = _int_param(params, "r", "H")
        if r < 1:
            raise CatalogError(f"H(r) needs r >= 1, got {r}")
        return heisenberg(r)
    key = normalize_name(name)
    if key in BRACKET_TABLE:
        return table_algebra(key, eps)
    if key in SPLIT_ALIASES:
        return direct_sum(table_algebra(SPLIT_ALIASES[key]), abelian(1), label=key)
    if key == CENTRAL_PRODUCT:
        return _central_product_entry()
    raise CatalogError(f"unknown algebra name {name!r}")


def lookup(name: str, params: dict | None = None, eps=None) -> LieAlgebra:
    """Build a catalog algebra by name.

    ``name`` may be a single entry (``"L_{5,8}"``, ``"L5_8"``, ``"37A"``,
    ``"A"`` with ``k``, ``"H"`` with ``r``, ``"A(3)"``, ``"H(2)"``) or a
    direct sum joined by ``⊕`` or ``+``.  Parameters a name does not use are
    ignored.  ``eps`` defaults to 1 for the one-parameter families.
    """
    params = dict(params or {})
    if eps is None and "eps" in params:
        eps = params["eps"]
    if eps is not None:
        try:
            eps = as_scalar(eps)
        except (TypeError, ValueError, ZeroDivisionError):
            raise CatalogError(f"bad eps value {eps!r}") from None
    text = name.strip()
    if normalize_name(text) == HEISENBERG_PAIR:
        return direct_sum(heisenberg(1), heisenberg(2), label=HEISENBERG_PAIR)
    parts = _split_sum(text) if text not in (CENTRAL_PRODUCT,) else [text]
    if not parts:
        raise CatalogError("empty algebra name")
    out = _single(parts[0], params, eps)
    for part in parts[1:]:
        out = direct_sum(out, _single(part, params, eps))
    return out


# --------------------------------------------------------------------------
# families


@dataclass(frozen=True)
class AlgebraFamily:
    """A catalog descriptor, possibly with free parameters.

    kind is one of ``abelian``, ``heisenberg``, ``heisenberg_plus_abelian``,
    ``fixed``, ``direct_sum_abelian``, ``central_product``.  For
    ``heisenberg_plus_abelian`` a ``None`` ``r`` or ``k`` is free (``r``
    then ranges over ``r >= r_min``), which leaves ``n`` free.
    """

    kind: str
    base: str | None = None
    k: int | None = 0
    r: int | None = None
    r_min: int = 1
    expected_s: int | None = field(default=None, compare=False)
    note: str | None = field(default=None, compare=False)

    @property
    def name(self) -> str:
        if self.kind == "abelian":
            return f"A({self.k})"
        if self.kind == "heisenberg":
            return f"H({self.r})"
        if self.kind == "heisenberg_plus_abelian":
            if self.r is None:
                return "H(r)⊕A(n-2r-1)"
            if self.k is None:
                return f"H({self.r})⊕A(n-{2 * self.r + 1})"
            return f"H({self.r})" if self.k == 0 else f"H({self.r})⊕A({self.k})"
        base = self.base + ("(ε)" if self.has_eps else "")
        if self.kind == "direct_sum_abelian" and self.k:
            return f"{base}⊕A({self.k})"
        return base

    def __str__(self):
        return self.name

    @property
    def has_eps(self) -> bool:
        return self.base in EPS_ALGEBRAS

    @property
    def is_free(self) -> bool:
        return self.kind == "heisenberg_plus_abelian" and (self.r is None or self.k is None)

    @property
    def n(self) -> int | None:
        """Dimension, or ``None`` when it is a free parameter."""
        if self.is_free:
            return None
        return self.instance().dim

    @property
    def n_min(self) -> int:
        if self.kind == "heisenberg_plus_abelian" and self.is_free:
            r = self.r if self.r is not None else self.r_min
            return 2 * r + 1
        return self.n

    def heisenberg_ranks(self, n: int) -> list[int]:
        """Values of ``r`` realizing a free Heisenberg-type family at dimension ``n``."""
        if self.r is not None:
            return [self.r] if n >= 2 * self.r + 1 else []
        return list(range(self.r_min, (n - 1) // 2 + 1))

    @cached_property
    def d(self) -> int:
        """``dim L^2``; the same for every instance of the family."""
        if self.kind == "heisenberg_plus_abelian" or self.kind == "heisenberg":
            return 1
        return derived_subalgebra(self.instance()).rank

    @property
    def key(self) -> tuple:
        """Identity up to the ``L_{6,i} = L_{5,i} ⊕ A(1)`` aliases."""
        if self.kind == "heisenberg_plus_abelian" and self.is_free:
            return ("H", self.r, None, self.r_min)
        if self.kind in ("heisenberg", "heisenberg_plus_abelian"):
            return ("H", self.r, self.k or 0)
        if self.kind == "abelian":
            return ("A", self.k)
        base, k = self.base, self.k or 0
        if base in SPLIT_ALIASES:
            base, k = SPLIT_ALIASES[base], k + 1
        return ("T", base, k)

    def concrete(self, n: int) -> list["AlgebraFamily"]:
        """Concrete members of dimension ``n`` (just ``[self]`` if fixed)."""
        if not self.is_free:
            return [self] if self.n == n else []
        return [
            AlgebraFamily("heisenberg_plus_abelian", k=n - 2 * r - 1, r=r,
                          expected_s=self.expected_s, note=self.note)
            for r in self.heisenberg_ranks(n)
        ]

    def instance(self, n: int | None = None, eps=None) -> LieAlgebra:
        """A concrete algebra; free families need ``n`` (smallest ``r`` is used)."""
        if self.is_free:
            n = self.n_min if n is None else n
            members = self.concrete(n)
            if not members:
                raise CatalogError(f"{self.name} has no member of dimension {n}")
            return members[0].instance()
        if self.kind == "abelian":
            return abelian(self.k)
        if self.kind == "heisenberg":
            return heisenberg(self.r)
        if self.kind == "heisenberg_plus_abelian":
            return direct_sum(heisenberg(self.r), abelian(self.k), label=self.name)
        base = lookup(self.base, eps=eps)
        if self.kind == "direct_sum_abelian" and self.k:
            return direct_sum(base, abelian(self.k), label=self._label(base))
        return base

    def _label(self, base: LieAlgebra) -> str:
        return f"{base.label}⊕A({self.k})" if self.k else base.label

    def instances(self, max_dim: int = 12, eps_values=EPS_SAMPLES) -> Iterator[tuple[dict, LieAlgebra]]:
        """Every in-range instance with ``dim <= max_dim``; ε is sampled."""
        if self.is_free:
            for n in range(self.n_min, max_dim + 1):
                for member in self.concrete(n):
                    yield {"n": n, "r": member.r}, member.instance()
            return
        if self.has_eps:
            for e in eps_values:
                alg = self.instance(eps=e)
                if alg.dim <= max_dim:
                    yield {"eps": e}, alg
            return
        alg = self.instance()
        if alg.dim <= max_dim:
            yield {}, alg


def parse_family(text: str, expected_s: int | None = None, note: str | None = None) -> AlgebraFamily:
    text = text.strip()
    if text == "H(1)⊕A(n-3)":
        return AlgebraFamily("heisenberg_plus_abelian", k=None, r=1, expected_s=expected_s, note=note)
    if text == "H(r)⊕A(n-2r-1)":
        return AlgebraFamily("heisenberg_plus_abelian", k=None, r=None, r_min=2,
                             expected_s=expected_s, note=note)
    if normalize_name(text) == CENTRAL_PRODUCT:
        return AlgebraFamily("central_product", CENTRAL_PRODUCT, expected_s=expected_s, note=note)
    if text == HEISENBERG_PAIR:
        return AlgebraFamily("fixed", HEISENBERG_PAIR, expected_s=expected_s, note=note)
    m = re.fullmatch(r"H\((\d+)\)(?:⊕A\((\d+)\))?", text)
    if m:
        return AlgebraFamily("heisenberg_plus_abelian", k=int(m.group(2) or 0), r=int(m.group(1)),
                             expected_s=expected_s, note=note)
    m = re.fullmatch(r"A\((\d+)\)", text)
    if m:
        return AlgebraFamily("abelian", k=int(m.group(1)), expected_s=expected_s, note=note)
    parts = _split_sum(text)
    base = normalize_name(parts[0])
    if base not in BRACKET_TABLE and base not in SPLIT_ALIASES:
        raise CatalogError(f"unknown family {text!r}")
    k = 0
    for extra in parts[1:]:
        m = re.fullmatch(r"A\((\d+)\)", extra)
        if not m:
            raise CatalogError(f"unsupported summand {extra!r} in {text!r}")
        k += int(m.group(1))
    kind = "direct_sum_abelian" if k else "fixed"
    return AlgebraFamily(kind, base, k=k, expected_s=expected_s, note=note)


# The single-algebra classification for s(L) = 0..7, as stated.
S_LISTS: dict[int, tuple[str, ...]] = {
    0: ("H(1)⊕A(n-3)",),
    1: ("L_{5,8}",),
    2: ("L_{4,3}", "L_{5,8}⊕A(1)", "H(r)⊕A(n-2r-1)"),
    3: ("L_{4,3}⊕A(1)", "L_{5,5}", "L_{6,22}", "L_{6,26}", "L_{5,8}⊕A(2)"),
    4: ("L_{5,8}⊕A(3)", "L_{4,3}⊕A(2)", "L_{5,5}⊕A(1)", "L_{5,6}", "L_{5,7}", "L_{5,9}",
        "L_{6,22}⊕A(1)", "37A"),
    5: ("L_{5,8}⊕A(4)", "L_{4,3}⊕A(3)", "L_{5,5}⊕A(2)", "L_{6,22}⊕A(2)", "L_{6,26}⊕A(1)",
        "L_{6,10}", "L_{6,23}", "L_{6,25}", "L_{6,27}", "37B", "37D"),
    6: ("L_{5,8}⊕A(5)", "L_{4,3}⊕A(4)", "L_{5,5}⊕A(3)", "L_{6,22}⊕A(3)", "L_{6,10}⊕A(1)",
        "27A", "157", "37A⊕A(1)", "L_{6,6}", "L_{6,7}", "L_{6,9}", "L_{6,11}", "L_{6,12}",
        "L_{6,19}", "L_{6,20}", "L_{6,24}"),
    7: ("L_{5,8}⊕A(6)", "L_{4,3}⊕A(5)", "L_{5,5}⊕A(4)", "L_{6,22}⊕A(4)", "27B",
        "L_{6,10}⊕A(2)", "27A⊕A(1)", "157⊕A(1)", CENTRAL_PRODUCT, HEISENBERG_PAIR,
        "S_1", "S_2", "S_3", "L_{6,23}⊕A(1)", "L_{6,25}⊕A(1)", "37B⊕A(1)", "37C⊕A(1)",
        "37D⊕A(1)", "L_{6,26}⊕A(2)", "L_{6,13}", "257A", "257C", "257F", "L_{6,21}"),
}

# Algebras whose computed s-value is in range but which the lists above omit.
# Both are forced by the lists themselves: 37C ⊕ A(1) is listed with s = 7
# and dim 37C^2 = 3, so s(37C) = 7 - 2 = 5; likewise L_{6,27} has s = 5 and
# dim L^2 = 3, so s(L_{6,27} ⊕ A(1)) = 7.
OMISSIONS: dict[int, tuple[tuple[str, str], ...]] = {
    5: (("37C", "missing from the s = 5 list although 37C⊕A(1) is listed with s = 7"),),
    7: (("L_{6,27}⊕A(1)", "missing from the s = 7 list although L_{6,23}⊕A(1), "
                          "L_{6,25}⊕A(1) are listed"),),
}


@lru_cache(maxsize=None)
def _families(v: int, amended: bool) -> tuple[AlgebraFamily, ...]:
    fams = [parse_family(t, expected_s=v) for t in S_LISTS[v]]
    if amended:
        fams += [parse_family(t, expected_s=v, note=note) for t, note in OMISSIONS.get(v, ())]
    return tuple(fams)


def families_with_s(v: int, amended: bool = False) -> list[AlgebraFamily]:
    """Families with ``s(L) = v`` (non-abelian), in the order they are listed.

    With ``amended=True`` the computed omissions in :data:`OMISSIONS` are
    appended, each carrying a ``note``.
    """
    if not isinstance(v, int) or not 0 <= v <= 7:
        raise ValueError(f"s-value must be in 0..7, got {v!r}")
    return list(_families(v, amended))


def all_families(amended: bool = False) -> list[AlgebraFamily]:
    return [f for v in range(8) for f in families_with_s(v, amended)]


def expected_s_of(family: AlgebraFamily) -> int | None:
    """Listed s-value of a concrete family (matched up to aliases)."""
    if family.kind in ("heisenberg", "heisenberg_plus_abelian") and not family.is_free:
        return 0 if family.r == 1 else 2
    for f in all_families(amended=False):
        if f.key == family.key:
            return f.expected_s
    return None


def table_families(max_dim: int = 12) -> list[AlgebraFamily]:
    """Every named base (bracket-table rows and composite entries) padded by ``A(k)``."""
    bases = [*BRACKET_TABLE, CENTRAL_PRODUCT, HEISENBERG_PAIR]
    out = []
    for base in bases:
        fam = parse_family(base)
        dim = fam.n
        for k in range(0, max_dim - dim + 1):
            if k == 0:
                out.append(fam)
            else:
                out.append(AlgebraFamily("direct_sum_abelian", fam.base, k=k))
    return out


def closed_form_inputs(family: AlgebraFamily):
    """Data for the closed-form multiplier, see ``homology.multiplier_dim_closed_form``."""
    if family.is_free:
        return None
    if family.kind == "abelian":
        return ("abelian", family.k)
    if family.kind == "heisenberg":
        return ("heisenberg", family.r, 0)
    if family.kind == "heisenberg_plus_abelian":
        return ("heisenberg", family.r, family.k)
    if family.kind == "direct_sum_abelian" and family.k:
        base = AlgebraFamily("fixed" if family.base != CENTRAL_PRODUCT else "central_product",
                             family.base)
        s = expected_s_of(base)
        if s is None:
            return None
        inst = base.instance()
        n = inst.dim
        base_mult = (n - 1) * (n - 2) // 2 + 1 - s
        return ("sum", base_mult, n - derived_subalgebra(inst).rank, family.k)
    return None


# --------------------------------------------------------------------------
# registry and self-check


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    family: AlgebraFamily
    source: str


def entries() -> list[CatalogEntry]:
    out = [CatalogEntry(name, parse_family(name), "table") for name in BRACKET_TABLE]
    for alias, base in SPLIT_ALIASES.items():
        out.append(CatalogEntry(alias, parse_family(alias), f"{base}⊕A(1)"))
    out.append(CatalogEntry(CENTRAL_PRODUCT, parse_family(CENTRAL_PRODUCT),
                            "central product gluing e6 of L_{6,10} to the center of H(1)"))
    out.append(CatalogEntry(HEISENBERG_PAIR, parse_family(HEISENBERG_PAIR), "direct sum"))
    return out


def algebra_summary(L: LieAlgebra) -> dict:
    from .invariants import invariants

    inv = invariants(L)
    return {
        "name": L.label,
        "dim": L.dim,
        "dim_L2": derived_subalgebra(L).rank,
        "dim_Z": center(L).rank,
        "dim_M": inv.dimM,
        "s": inv.s,
        "t": inv.t,
    }


@dataclass
class CheckEntry:
    family: str
    instance: str
    params: dict
    expected: int | None
    computed: int
    note: str | None = None

    @property
    def ok(self) -> bool:
        return self.expected is None or self.expected == self.computed


@dataclass
class SelfCheckReport:
    checked: list[CheckEntry] = field(default_factory=list)
    omissions: list[CheckEntry] = field(default_factory=list)
    eps_variation: list[str] = field(default_factory=list)
    printed_rows: list[CheckEntry] = field(default_factory=list)

    @property
    def mismatches(self) -> list[CheckEntry]:
        return [e for e in self.checked if not e.ok]

    @property
    def unexplained_omissions(self) -> list[CheckEntry]:
        return [e for e in self.omissions if e.note is None]

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.unexplained_omissions and not self.eps_variation


def self_check(max_dim: int = 12, eps_values=EPS_SAMPLES) -> SelfCheckReport:
    """Compare computed s-values with the listed ones.

    Also scans every named base padded by abelian summands (up to
    ``max_dim``) for algebras with ``s <= 7`` that no list contains; those
    matching :data:`OMISSIONS` carry the recorded note.
    """
    from .algebra import is_nilpotent, validate
    from .invariants import s_invariant

    report = SelfCheckReport()
    listed = set()
    for v in range(8):
        for fam in families_with_s(v):
            listed.add(fam.key)
            seen = set()
            for params, alg in fam.instances(max_dim, eps_values):
                if not validate(alg) or not is_nilpotent(alg)[0]:
                    raise AlgebraError(f"catalog instance {alg.label} is not a nilpotent Lie algebra")
                s = s_invariant(alg)
                seen.add(s)
                report.checked.append(CheckEntry(fam.name, alg.label, params, v, s))
            if fam.has_eps and len(seen) > 1:
                report.eps_variation.append(fam.name)

    for name, (rows, note) in PRINTED_ROWS.items():
        printed = from_brackets(max(max(r[:3]) for r in rows), rows, f"{name} (as printed)")
        corrected = parse_family(name)
        report.printed_rows.append(
            CheckEntry(name, printed.label, {}, expected_s_of(corrected), s_invariant(printed), note)
        )

    noted = {parse_family(t).key: note for notes in OMISSIONS.values() for t, note in notes}
    for fam in table_families(max_dim):
        if fam.key in listed:
            continue
        for params, alg in fam.instances(max_dim, eps_values):
            s = s_invariant(alg)
            if s <= 7:
                report.omissions.append(
                    CheckEntry(fam.name, alg.label, params, None, s, noted.get(fam.key))
                )
    return report
