"""Reference pair classifications for s(N, L) = 0..7, and their known errata.

Each list is transcribed entry by entry.  Entries
with a running index (``(X ⊕ A(i), X ⊕ A(t)), 0 <= i <= a``) are expanded
into one pair per ``i`` with ``K = A(t - i)``.  :func:`verify` diffs these
against :func:`nilpair.classifier.classify`.  Every difference must be
explained by an entry of :data:`ERRATA`, and every erratum must actually
occur.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .catalog import parse_family
from .classifier import ClassificationReport, classify

# K keys, matching KDescription.key
HEIS = ("H", "free")
H1 = ("H", 3)
ZERO = ("0",)


def A(m: int) -> tuple:
    return ZERO if m == 0 else ("A", m)


def A_free(m_min: int) -> tuple:
    return ("A", "free", m_min)


def ANY(c: int) -> tuple:
    return ("any", c, "free")


_DISPLAY: dict[tuple, str] = {}


def _k_text(K: tuple) -> str:
    if K == ZERO:
        return ""
    if K[0] == "A":
        return "⊕A(m)" if K[1] == "free" else f"⊕A({K[1]})"
    if K == HEIS:
        return "⊕H(r)⊕A(m-2r-1)"
    if K[0] == "H":
        return "⊕H(1)" if K[1] == 3 else f"⊕[dim {K[1]}, dim K^2 = 1]"
    return f"⊕K [dim K^2 = {K[1]}]"


def _entry(N: str, K: tuple) -> tuple:
    key = (parse_family(N).key, K)
    _DISPLAY.setdefault(key, f"({N}, {N}{_k_text(K)})")
    return key


def one(N: str, K: tuple) -> list[tuple]:
    return [_entry(N, K)]


def padded(base: str, indices, total: int) -> list[tuple]:
    """``(base ⊕ A(i), base ⊕ A(total))`` for each ``i`` in ``indices``."""
    out = []
    for i in indices:
        name = base if i == 0 else f"{base}⊕A({i})"
        out.append(_entry(name, A(total - i)))
    return out


def _statements() -> dict[int, list[tuple]]:
    r = range
    return {
        0: one("H(1)⊕A(n-3)", A_free(0)),
        1: one("L_{5,8}", ZERO),
        2: [
            *one("H(1)", HEIS),
            *one("H(r)⊕A(n-2r-1)", A_free(0)),
            *padded("L_{5,8}", (0, 1), 1),
            *one("L_{4,3}", ZERO),
        ],
        3: [
            *one("H(1)⊕A(1)", HEIS),
            *padded("L_{5,8}", r(0, 3), 2),
            *padded("L_{4,3}", (0, 1), 1),
        ],
        4: [
            *one("H(1)⊕A(2)", HEIS),
            *padded("L_{5,8}", r(0, 4), 3),
            *padded("L_{4,3}", r(0, 3), 2),
            *padded("L_{5,5}", (0, 1), 1),
            *padded("L_{6,22}", (0, 1), 1),
        ],
        5: [
            *one("H(1)⊕A(3)", HEIS),
            *padded("L_{5,8}", r(0, 5), 4),
            *padded("L_{4,3}", r(0, 4), 3),
            *padded("L_{5,5}", r(0, 3), 2),
            *padded("L_{6,22}", r(0, 3), 2),
            *padded("L_{6,26}", (0, 1), 1),
        ],
        6: [
            *one("H(1)⊕A(4)", HEIS),
            *one("H(1)⊕A(1)", ANY(2)),
            *one("H(1)", ANY(3)),
            *one("H(2)", HEIS),
            *padded("L_{5,8}", r(0, 5), 5),
            *padded("L_{4,3}", r(0, 4), 4),
            # printed with N = L_{5,5}⊕A(1) and an unused index range
            *one("L_{5,5}⊕A(1)", A(2)),
            *padded("L_{6,22}", r(0, 3), 3),
            *one("L_{5,6}", A(1)),
            *one("L_{5,7}", A(1)),
            *one("L_{5,8}", A(1)),
            *one("37A", A(1)),
            *one("L_{6,10}", A(1)),
        ],
        7: [
            *one("H(1)⊕A(5)", HEIS),
            *one("H(2)⊕A(1)", HEIS),
            *padded("L_{5,8}", r(0, 6), 6),
            *one("L_{4,3}", H1),
            *padded("L_{4,3}", r(0, 5), 5),
            *padded("L_{6,22}", r(0, 4), 4),
            *padded("L_{5,5}", r(0, 4), 4),
            *padded("L_{6,26}", (0, 1), 2),
            *padded("L_{6,10}", (0, 1), 2),
            *one("L_{6,23}", A(1)),
            *one("L_{6,25}", A(1)),
            *one("L_{6,27}", A(1)),
            *one("37B", A(1)),
            *one("37D", A(1)),
            *one("27A", A(1)),
            *one("157", A(1)),
        ],
    }


STATEMENTS = _statements()


@dataclass(frozen=True)
class Erratum:
    sigma: int
    side: str  # "statement_only" or "computed_only"
    N: str
    K: tuple
    kind: str
    note: str

    @property
    def key(self) -> tuple:
        return (parse_family(self.N).key, self.K)

    def to_json(self) -> dict:
        return {"s": self.sigma, "side": self.side, "N": self.N, "K": list(self.K),
                "kind": self.kind, "note": self.note}


_ENDPOINT = ("the index range runs up to K = 0, contradicting the non-zero K hypothesis "
             "(s(N) = s(N,L) there, so K must vanish)")


def _endpoint_errata() -> list[Erratum]:
    rows = {
        3: [("L_{5,8}⊕A(2)",), ("L_{4,3}⊕A(1)",)],
        4: [("L_{5,8}⊕A(3)",), ("L_{4,3}⊕A(2)",), ("L_{5,5}⊕A(1)",), ("L_{6,22}⊕A(1)",)],
        5: [("L_{5,8}⊕A(4)",), ("L_{4,3}⊕A(3)",), ("L_{5,5}⊕A(2)",), ("L_{6,22}⊕A(2)",),
            ("L_{6,26}⊕A(1)",)],
    }
    return [
        Erratum(sigma, "statement_only", N, ZERO, "index-range", _ENDPOINT)
        for sigma, names in rows.items()
        for (N,) in names
    ]


ERRATA: list[Erratum] = [
    Erratum(7, "computed_only", "L_{5,8}", H1, "omitted-entry",
            "the s(N) = 1 case analysis derives K = A(6) and K = H(1); only the first is listed"),
    Erratum(6, "statement_only", "L_{5,8}", A(1), "index-typo",
            "listed as L_{5,j} for j = 6,7,8 but the case analysis treats L_{5,6}, L_{5,7}, "
            "L_{5,9}; (L_{5,8}, L_{5,8}⊕A(1)) has s = 2"),
    Erratum(6, "computed_only", "L_{5,9}", A(1), "index-typo",
            "(L_{5,9}, L_{5,9}⊕A(1)) is derived in the case analysis; the list says j = 8"),
    Erratum(6, "computed_only", "L_{5,5}", A(3), "dangling-index",
            "printed as (L_{5,5}⊕A(1), L_{5,5}⊕A(3)) 'for all 0 <= i <= 2'; the intended "
            "entry is (L_{5,5}⊕A(i), L_{5,5}⊕A(3)), i = 0, 1, 2"),
    Erratum(6, "computed_only", "L_{5,5}⊕A(2)", A(1), "dangling-index",
            "see the i = 0 entry of the same line"),
    Erratum(4, "computed_only", "H(1)", ANY(2), "omitted-entry",
            "(n - 1) dim K^2 = 4 has the solution n = 3, dim K^2 = 2, the analogue of the "
            "listed s = 6 entries; (H(1), H(1)⊕K) with dim K^2 = 2 is missing"),
    Erratum(7, "computed_only", "37C", A(1), "omitted-entry",
            "37C has s = 5 (forced by 37C⊕A(1) having s = 7) but is absent from the s = 5 "
            "list, so (37C, 37C⊕A(1)) is missed exactly like (37B, 37B⊕A(1))"),
    *_endpoint_errata(),
]


@dataclass
class DiffItem:
    side: str
    key: tuple
    label: str
    erratum: Erratum | None = None

    def to_json(self) -> dict:
        return {"side": self.side, "pair": self.label,
                "erratum": self.erratum.to_json() if self.erratum else None}


@dataclass
class Verification:
    sigma: int
    report: ClassificationReport
    matched: list[tuple] = field(default_factory=list)
    diff: list[DiffItem] = field(default_factory=list)
    stale_errata: list[Erratum] = field(default_factory=list)

    @property
    def unexplained(self) -> list[DiffItem]:
        return [d for d in self.diff if d.erratum is None]

    @property
    def annotated(self) -> list[DiffItem]:
        return [d for d in self.diff if d.erratum is not None]

    @property
    def ok(self) -> bool:
        return not self.unexplained and not self.stale_errata

    def to_json(self) -> dict:
        return {
            "s": self.sigma,
            "ok": self.ok,
            "matched": len(self.matched),
            "diff": [d.to_json() for d in self.diff],
            "stale_errata": [e.to_json() for e in self.stale_errata],
        }


def _label(key: tuple) -> str:
    return _DISPLAY.get(key, repr(key))


def verify(sigma: int) -> Verification:
    """Diff the classifier output for ``sigma`` against the reference list."""
    report = classify(sigma)
    computed = {s.key: s for s in report.solutions}
    expected = set(STATEMENTS[sigma])
    errata = {(e.side, e.key): e for e in ERRATA if e.sigma == sigma}
    out = Verification(sigma, report)
    used = set()
    for key in sorted(expected | set(computed), key=repr):
        if key in expected and key in computed:
            out.matched.append(key)
            continue
        side = "statement_only" if key in expected else "computed_only"
        label = str(computed[key]) if key in computed else _label(key)
        e = errata.get((side, key))
        if e is not None:
            used.add((side, key))
        out.diff.append(DiffItem(side, key, label, e))
    out.stale_errata = [e for k, e in errata.items() if k not in used]
    report.errata = [d.erratum for d in out.annotated]
    return out


def verify_all(sigmas=range(8)) -> list[Verification]:
    return [verify(s) for s in sigmas]
