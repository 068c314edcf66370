import pytest

from nilpair.statements import ERRATA, STATEMENTS, verify, verify_all


@pytest.mark.parametrize("sigma", range(8))
def test_verification_annotated(sigma):
    v = verify(sigma)
    assert v.ok, [d.label for d in v.unexplained] + [e.N for e in v.stale_errata]


def test_small_sigma_exact():
    for sigma in (0, 1, 2):
        assert verify(sigma).diff == []


def test_l58_h1_erratum():
    v = verify(7)
    labels = {d.label: d.erratum.kind for d in v.diff}
    assert labels["(L_{5,8}, L_{5,8}⊕H(1)) [dim K^2 = 1]"] == "omitted-entry"


def test_index_typo_erratum():
    v = verify(6)
    sides = {(d.side, d.label) for d in v.diff if d.erratum.kind == "index-typo"}
    assert sides == {("statement_only", "(L_{5,8}, L_{5,8}⊕A(1))"),
                     ("computed_only", "(L_{5,9}, L_{5,9}⊕A(1))")}


def test_every_erratum_is_used():
    used = {id(d.erratum) for v in verify_all() for d in v.diff}
    assert used == {id(e) for e in ERRATA}


def test_report_carries_errata():
    v = verify(7)
    assert len(v.report.errata) == len(v.annotated) == 2
    assert v.to_json()["ok"] is True


def test_statement_sizes():
    assert [len(STATEMENTS[s]) for s in range(8)] == [1, 1, 5, 6, 12, 18, 22, 33]
