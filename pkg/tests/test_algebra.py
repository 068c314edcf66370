import json
from itertools import permutations
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from nilpair import algebra as alg
from nilpair.algebra import (
    AlgebraError,
    abelian,
    bracket,
    center,
    central_product,
    derived_subalgebra,
    direct_sum,
    filiform,
    from_brackets,
    heisenberg,
    is_nilpotent,
    permute_basis,
    validate,
)
from nilpair.catalog import BRACKET_TABLE, lookup, table_algebra


def vec(*coords):
    return tuple(Fraction(c) for c in coords)


def test_bracket_heisenberg():
    H = heisenberg(1)
    assert bracket(H.e(1), H.e(2), H) == vec(0, 0, 1)
    assert bracket(H.e(2), H.e(1), H) == vec(0, 0, -1)


def test_bracket_abelian_is_zero():
    A = abelian(4)
    assert bracket((1, 2, 3, 4), (0, -1, 5, 2), A) == vec(0, 0, 0, 0)


def test_bracket_bilinear_on_l43():
    L = lookup("L_{4,3}")
    assert bracket(L.e(1), L.e(3), L) == vec(0, 0, 0, 1)
    assert bracket((1, 1, 0, 0), (0, 2, 1, 0), L) == vec(0, 0, 2, 1)


def test_bracket_length_mismatch():
    with pytest.raises(AlgebraError):
        bracket((1, 0), (0, 1, 0), heisenberg(1))


@pytest.mark.parametrize("name", sorted(BRACKET_TABLE))
def test_table_entries_satisfy_jacobi(name):
    L = table_algebra(name)
    assert validate(L).ok
    assert oracle.jacobi_failures(L) == []


@pytest.mark.parametrize("eps", [0, -1, Fraction(3, 2)])
@pytest.mark.parametrize("name", ["L_{6,19}", "L_{6,21}", "L_{6,22}", "L_{6,24}"])
def test_eps_entries_satisfy_jacobi(name, eps):
    assert validate(table_algebra(name, eps)).ok


@pytest.mark.parametrize("n", range(0, 9))
def test_abelian_is_valid(n):
    assert validate(abelian(n)).ok


def test_jacobi_failure_reports_triple():
    rows = BRACKET_TABLE["L_{5,9}"] + [(2, 4, 5)]
    L = from_brackets(5, rows)
    report = validate(L)
    assert not report.ok
    triples = [t for t, _ in report.violations]
    assert triples == oracle.jacobi_failures(L)
    assert (1, 2, 3) in triples


def test_adding_e4_to_e2_e3_keeps_jacobi():
    # [e2,e3] = e4 + e5 on top of L_{5,9} is still a Lie algebra
    L = from_brackets(5, BRACKET_TABLE["L_{5,9}"] + [(2, 3, 4)])
    assert validate(L).ok
    assert oracle.jacobi_failures(L) == []


def test_derived_subalgebra_examples():
    d = derived_subalgebra(lookup("L_{4,3}"))
    assert d.rank == 2
    assert d.contains(vec(0, 0, 1, 0)) and d.contains(vec(0, 0, 0, 1))
    for r in range(1, 5):
        assert derived_subalgebra(heisenberg(r)).rank == 1
    d = derived_subalgebra(lookup("L_{6,26}"))
    assert d.rank == 3
    assert all(d.contains(lookup("L_{6,26}").e(i)) for i in (4, 5, 6))


def test_center_examples():
    assert center(heisenberg(1)).rank == 1
    assert center(heisenberg(1)).contains(vec(0, 0, 1))
    for k in range(6):
        assert center(abelian(k)).rank == k
    z = center(lookup("L_{6,10}"))
    assert z.rank == 1 and z.contains(vec(0, 0, 0, 0, 0, 1))


@pytest.mark.parametrize("name", sorted(BRACKET_TABLE))
def test_subspaces_match_oracle(name):
    L = table_algebra(name)
    assert derived_subalgebra(L).rank == oracle.derived_rank(L)
    assert center(L).rank == oracle.center_rank(L)


@pytest.mark.parametrize("name", sorted(BRACKET_TABLE))
def test_table_entries_nilpotent(name):
    L = table_algebra(name)
    ok, cls = is_nilpotent(L)
    assert ok
    assert cls == oracle.nilpotency_class(L)


def test_nilpotency_examples():
    assert is_nilpotent(abelian(4)) == (True, 1)
    assert is_nilpotent(heisenberg(2)) == (True, 2)
    assert is_nilpotent(filiform(6)) == (True, 5)
    solvable = from_brackets(2, [(1, 2, 2)])
    assert is_nilpotent(solvable) == (False, None)
    assert oracle.nilpotency_class(solvable) is None


def test_constructors():
    assert abelian(0).dim == 0
    assert derived_subalgebra(abelian(3)).rank == 0
    assert center(abelian(5)).rank == 5
    assert heisenberg(1).dim == 3
    H2 = heisenberg(2)
    assert H2.dim == 5 and derived_subalgebra(H2).rank == 1
    H3 = heisenberg(3)
    assert H3.dim == 7 and center(H3).rank == 1
    F = filiform(7)
    assert derived_subalgebra(F).rank == 5
    with pytest.raises(AlgebraError):
        heisenberg(0)
    with pytest.raises(AlgebraError):
        abelian(-1)


def test_direct_sum_examples():
    L = direct_sum(heisenberg(1), abelian(2))
    assert L.dim == 5 and derived_subalgebra(L).rank == 1
    L = direct_sum(lookup("L_{5,8}"), abelian(1))
    assert L.dim == 6 and L.sc == lookup("L_{6,8}").sc
    L = direct_sum(heisenberg(1), heisenberg(2))
    assert L.dim == 8 and derived_subalgebra(L).rank == 2
    assert validate(L).ok


def test_central_product_of_l610_and_h1():
    M, H = lookup("L_{6,10}"), heisenberg(1)
    P = central_product(M, H, [(M.e(6), H.e(3))])
    assert P.dim == 8
    assert validate(P).ok
    assert is_nilpotent(P)[0]
    assert derived_subalgebra(P).rank == 2
    assert center(P).rank == 1


def test_central_product_with_empty_identification_is_direct_sum():
    M, N = lookup("L_{4,3}"), heisenberg(1)
    assert central_product(M, N, []).sc == direct_sum(M, N).sc


def test_central_product_of_heisenbergs_is_h2():
    H = heisenberg(1)
    P = central_product(H, H, [(H.e(3), H.e(3))])
    assert P.dim == 5
    assert derived_subalgebra(P).rank == 1
    assert center(P).rank == 1
    # same bracket table as H(2) after relabeling the basis
    target = heisenberg(2).sc
    assert any(permute_basis(P, perm).sc == target for perm in permutations(range(5)))


def test_central_product_rejects_non_central():
    M, H = lookup("L_{4,3}"), heisenberg(1)
    with pytest.raises(AlgebraError):
        central_product(M, H, [(M.e(3), H.e(3))])
    with pytest.raises(AlgebraError):
        central_product(H, H, [(H.e(3), H.e(3)), (H.e(3), H.e(3))])


def test_antisymmetric_input_normalized():
    a = from_brackets(3, [(2, 1, 3, -1)])
    assert a.sc == heisenberg(1).sc


def test_from_brackets_rejects_bad_input():
    with pytest.raises(AlgebraError):
        from_brackets(3, [(1, 1, 2)])
    with pytest.raises(AlgebraError):
        from_brackets(3, [(1, 4, 2)])


def test_permute_basis_preserves_jacobi():
    L = lookup("L_{6,24}")
    P = permute_basis(L, [5, 3, 1, 0, 2, 4])
    assert validate(P).ok
    assert derived_subalgebra(P).rank == derived_subalgebra(L).rank


# JSON ---------------------------------------------------------------------

@pytest.mark.parametrize("name", sorted(BRACKET_TABLE))
def test_json_round_trip(name, tmp_path):
    L = table_algebra(name, Fraction(-3, 7))
    path = tmp_path / "a.json"
    alg.dump(L, path)
    again = alg.load(path)
    assert again.sc == L.sc and again.label == L.label


def test_json_format_shape():
    data = alg.to_json(heisenberg(1))
    assert data == {"dim": 3, "brackets": [{"i": 1, "j": 2, "coeffs": {"3": "1"}}], "label": "H(1)"}


@pytest.mark.parametrize("bad", [
    {"dim": 3, "brackets": [{"i": 2, "j": 2, "coeffs": {"3": "1"}}]},
    {"dim": 3, "brackets": [{"i": 2, "j": 1, "coeffs": {"3": "1"}}]},
    {"dim": 3, "brackets": [{"i": 1, "j": 4, "coeffs": {"3": "1"}}]},
    {"dim": 3, "brackets": [{"i": 1, "j": 2, "coeffs": {"4": "1"}}]},
    {"dim": 3, "brackets": [{"i": 1, "j": 2, "coeffs": {"3": "x"}}]},
    {"dim": 3, "brackets": [{"i": 1, "j": 2, "coeffs": {"3": "1"}},
                            {"i": 1, "j": 2, "coeffs": {"3": "1"}}]},
    {"dim": -1, "brackets": []},
    {"brackets": []},
])
def test_json_rejects(bad):
    with pytest.raises(AlgebraError):
        alg.from_json(bad)


def test_load_errors(tmp_path):
    with pytest.raises(AlgebraError):
        alg.load(tmp_path / "missing.json")
    p = tmp_path / "broken.json"
    p.write_text("{not json")
    with pytest.raises(AlgebraError):
        alg.load(p)


def test_json_rationals_are_canonical():
    L = from_brackets(3, [(1, 2, 3, Fraction(2, 4))])
    assert json.dumps(alg.to_json(L)["brackets"]) == '[{"i": 1, "j": 2, "coeffs": {"3": "1/2"}}]'


# property: random 2-step nilpotent algebras -------------------------------

@st.composite
def two_step(draw):
    g = draw(st.integers(2, 4))
    z = draw(st.integers(1, 3))
    pairs = [(i, j) for i in range(1, g + 1) for j in range(i + 1, g + 1)]
    items = []
    for i, j in pairs:
        for k in range(g + 1, g + z + 1):
            c = draw(st.integers(-2, 2))
            if c:
                items.append((i, j, k, c))
    return from_brackets(g + z, items)


@settings(max_examples=40, deadline=None)
@given(two_step())
def test_two_step_algebras_valid_and_nilpotent(L):
    assert validate(L).ok
    ok, cls = is_nilpotent(L)
    assert ok and cls <= 2
    assert derived_subalgebra(L).rank == oracle.derived_rank(L)
    assert center(L).rank == oracle.center_rank(L)
