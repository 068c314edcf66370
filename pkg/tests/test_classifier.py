import pytest

from nilpair.catalog import parse_family
from nilpair.classifier import (
    ClassificationError,
    classify,
    enumerate_solutions,
    feasible,
    pair_equation,
    resolve_K,
    standard_nilpotent,
)
from nilpair.algebra import derived_subalgebra, is_nilpotent
from nilpair.invariants import SplitPair, pair_s, s_invariant


def fam(text, s):
    return parse_family(text, expected_s=s)


@pytest.mark.parametrize("text,s,sigma,expected", [
    ("L_{4,3}", 2, 6, "m + 2c = 4"),
    ("L_{5,8}⊕A(1)", 2, 7, "m + 4c = 5"),
    ("H(1)⊕A(n-3)", 0, 7, "(n-1)c = 7"),
    ("L_{6,26}", 3, 6, "2m + 3c = 3"),
])
def test_pair_equation(text, s, sigma, expected):
    assert str(pair_equation(fam(text, s), sigma)) == expected


def test_pair_equation_rejects():
    with pytest.raises(ClassificationError):
        pair_equation(fam("L_{4,3}", 2), 1)
    with pytest.raises(ClassificationError):
        pair_equation(fam("L_{4,3}", 2), 8)
    with pytest.raises(ClassificationError):
        pair_equation(parse_family("L_{4,3}"), 4)


def test_feasible():
    assert not feasible(2, 1)
    assert feasible(3, 1)
    assert not feasible(0, 0)
    assert feasible(0, 0, allow_trivial=True)
    assert feasible(5, 0)
    assert feasible(4, 2) and not feasible(3, 2)


@pytest.mark.parametrize("m", range(0, 8))
@pytest.mark.parametrize("c", range(0, 6))
def test_feasible_witnesses(m, c):
    if feasible(m, c, allow_trivial=True):
        K = standard_nilpotent(m, c)
        assert K.dim == m and derived_subalgebra(K).rank == c
        assert is_nilpotent(K)[0]
    else:
        with pytest.raises(ClassificationError):
            standard_nilpotent(m, c)


def test_resolve_K():
    k = resolve_K(None, 1)
    assert k.name == "H(r)⊕A(m-2r-1)" and k.m_min == 3
    assert resolve_K(4, 0).name == "A(4)"
    k = resolve_K(None, 3)
    assert k.kind == "any_nilpotent" and k.note == "every nilpotent K with dim K^2 = 3"
    assert resolve_K(7, 1).heisenberg_ranks == [1, 2, 3]
    assert resolve_K(0, 0, allow_trivial=True).kind == "trivial"
    with pytest.raises(ClassificationError):
        resolve_K(2, 1)


def test_enumerate_h1_padded_sigma6():
    sols = enumerate_solutions(pair_equation(fam("H(1)⊕A(n-3)", 0), 6))
    got = sorted((s.N.n, s.K.c) for s in sols)
    assert got == [(3, 3), (4, 2), (7, 1)]


def test_enumerate_heisenberg_family_sigma7():
    sols = enumerate_solutions(pair_equation(fam("H(r)⊕A(n-2r-1)", 2), 7))
    assert [(s.N.n, s.K.c, s.N.name) for s in sols] == [(6, 1, "H(2)⊕A(1)")]


def test_enumerate_l626_sigma6_empty():
    assert enumerate_solutions(pair_equation(fam("L_{6,26}", 3), 6)) == []


def test_enumerate_l58_sigma7():
    sols = enumerate_solutions(pair_equation(fam("L_{5,8}", 1), 7))
    assert sorted((s.K.m, s.K.c) for s in sols) == [(3, 1), (6, 0)]


def test_classify_sigma0():
    report = classify(0)
    assert [str(s) for s in report.solutions] == ["(H(1)⊕A(n-3), H(1)⊕A(n-3)⊕A(m)) [any m >= 0]"]


def test_classify_sigma5_contains_l626_entry():
    lines = classify(5).lines()
    assert "(L_{6,26}, L_{6,26}⊕A(1))" in lines


def test_classify_sigma6_uses_l59():
    keys = classify(6).keys()
    names = {s.N.name for s in classify(6).solutions if s.K.m == 1 and s.K.c == 0}
    assert {"L_{5,6}", "L_{5,7}", "L_{5,9}"} <= names
    assert "L_{5,8}" not in names
    assert keys


@pytest.mark.parametrize("sigma", range(8))
def test_solutions_sound(sigma):
    for sol in classify(sigma).solutions:
        for p in sol.instance_pairs():
            assert pair_s(p) == sigma
            assert pair_s(p) >= s_invariant(p.N)


def test_classify_trivial_k_option():
    with_zero = classify(4, allow_trivial_K=True)
    without = classify(4)
    assert with_zero.keys() > without.keys()
    assert all(s.K.kind != "trivial" for s in without.solutions)
    assert any(s.K.kind == "trivial" for s in classify(2).solutions)


@pytest.mark.parametrize("bad", [-1, 8, "3", 2.0])
def test_classify_rejects_sigma(bad):
    with pytest.raises(ClassificationError):
        classify(bad)


def test_report_deterministic():
    assert classify(7).dumps() == classify(7).dumps()
    assert classify(6, check=False).dumps() == classify(6).dumps()


def test_report_json_schema():
    import json

    data = json.loads(classify(3).dumps())
    assert data["s"] == 3
    sol = data["solutions"][0]
    assert set(sol) >= {"N", "K", "source_sN"}
    assert {"family", "params"} <= set(sol["N"])
    assert {"kind", "m", "c", "note"} <= set(sol["K"])


def test_l58_h1_witness():
    sol = next(s for s in classify(7).solutions if s.N.name == "L_{5,8}" and s.K.c == 1)
    (p,) = sol.instance_pairs()
    assert isinstance(p, SplitPair) and p.m == 3 and pair_s(p) == 7
