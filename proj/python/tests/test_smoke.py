import pytest

import qfree


def test_normalize_text():
    out = qfree.normalize("x a x^-1 b = 1")
    assert out["text"] == "z1^-1 a z1 b = 1"
    assert out["chiBar"] == 2
    assert out["standard"]["genus"] == 0


def test_solve_and_verify():
    sat = qfree.solve("x a x^-1 b A B = 1")
    assert sat["decision"] == "SAT"
    verdict = qfree.verify("x a x^-1 b A B = 1", sat["certificate"])
    assert verdict["accepted"]
    assert qfree.solve("x a x^-1 b = 1")["decision"] == "UNSAT"


def test_budget_gives_unknown():
    r = qfree.solve("x a x^-1 y b y^-1 A B = 1", max_n=0)
    assert r["decision"] == "UNKNOWN"


def test_direct_search():
    r = qfree.direct_search("x x a a = 1", max_len=1)
    assert r["decision"] == "SAT"
    assert r["assignment"] == {"x": "A"}


def test_reduction_round_trip():
    inst = {"items": [2, 2, 1, 1], "B": 3, "N": 2, "exact": True}
    part = qfree.binpack_solve(inst)
    assert sorted(map(len, part["blocks"])) == [2, 2]
    eq = qfree.to_equation(inst)
    cert = qfree.packing_to_certificate(inst, part)
    assert qfree.verify(eq, cert)["accepted"]
    back = qfree.certificate_to_packing(inst, cert)
    for block in back["blocks"]:
        assert sum(inst["items"][j - 1] for j in block) == inst["B"]


def test_padding():
    conv = qfree.binpack_to_exact({"items": [2, 1], "B": 3, "N": 2, "exact": False})
    assert conv["feasible"] and conv["padding"] == 3


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        qfree.normalize("x a = 1")
    with pytest.raises(qfree.QfreeError):
        qfree.verify("x a x^-1 A = 1", {"images": 3, "boundaries": []})
