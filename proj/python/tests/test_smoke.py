import pytest

import nrtower as nr

A, B, C = nr.Variant.A, nr.Variant.B, nr.Variant.C


def test_relation_and_render():
    assert str(nr.parse("-t[1,2]+1+t[1,2]", A)) == "2"
    assert nr.parse("2+t[2,3]", A) == nr.parse("t[2,3]+3", A)
    assert str(nr.neg(nr.parse("1+t[1,2]", A))) == "-t[1,2]-1"


def test_products():
    x = nr.parse("t[1,-1]", A)
    assert str(nr.mul(x, nr.make_int(A, 2))) == "t[2,-2]"
    assert str(x * nr.make_int(A, 3)) == "t[3,-3]"
    assert nr.mul(nr.make_omega(C, 0), nr.parse("t[1,2]", C)) == nr.make_omega(C, 1)
    assert str(nr.f_eval(nr.make_pi(B, 1), nr.make_pi(B, 2))) == "pi(3)"
    assert nr.mu(nr.parse("pi(0)+pi(2)", B)) == 2


def test_membership_and_preimage():
    om0 = nr.make_omega(C, 0)
    assert nr.preimage(om0, nr.make_omega(C, 1)) == om0
    assert nr.preimage(om0, nr.make_int(C, 5)) is None
    assert nr.in_H(om0, om0)
    assert nr.in_W(nr.make_pi(B, 1))
    assert not nr.in_W(nr.make_pi(B, 0))
    assert nr.power_of(nr.make_int(A, 6), nr.make_int(A, 2)) == 3


def test_errors():
    with pytest.raises(nr.ExprSyntaxError):
        nr.parse("1+", A)
    with pytest.raises(nr.NrtError):
        nr.parse("om(0)", A)
    with pytest.raises(nr.NrtError):
        nr.make_stable(nr.make_int(A, 1), nr.make_int(A, 1))


def test_suite_report():
    report = nr.run_suite("axioms", B, seed=3, count=20)
    assert report["passed"] is True
    assert report["cases_run"] == 20
    assert list(report) == ["suite", "variant", "seed", "count", "depth",
                            "cases_run", "passed", "failures", "witnesses"]
    assert nr.run_suite_json("axioms", B, 3, 20) == nr.run_suite_json("axioms", B, 3, 20)
