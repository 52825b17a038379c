import os
import pathlib

import pytest

import metafix

DATA = pathlib.Path(os.environ.get("METAFIX_TEST_DATA", pathlib.Path(__file__).parent.parent / "data"))


def fixture(name):
    return (DATA / name).read_text()


def test_polynomial_and_word_basics():
    p = metafix.LaurentPoly.parse("x1 - 1", 2)
    q = metafix.LaurentPoly.parse("x1 + 1", 2)
    assert str(p * q) == str(metafix.LaurentPoly.parse("x1^2 - 1", 2))
    w = metafix.Word.parse("[x1,x2]", 2)
    assert str(w) == "x1^-1 x2^-1 x1 x2"
    assert w.exponent_sums() == [0, 0]
    assert metafix.is_trivial(w * w.inverse())
    assert not metafix.is_trivial(w)


def test_magnus_is_multiplicative():
    u = metafix.Word.parse("x1 x2^-1 x1", 2)
    v = metafix.Word.parse("x2 x1^-2", 2)
    ab_u, _ = metafix.magnus(u)
    ab_uv, _ = metafix.magnus(u * v)
    assert ab_u == [2, -1]
    assert ab_uv == [0, 0]


def test_opposite_shift_has_no_fixed_points():
    phi = metafix.Endomorphism.parse(fixture("no_fixed_n2.endo"))
    assert phi.is_ia()
    assert metafix.det_JmI(phi) == "0"
    assert metafix.rank_JmI(phi) == 1
    assert metafix.detect_fixed_in_Mprime(phi) is None
    report = metafix.analyze(phi, bound=3)
    assert report["fix"]["rank_class"] == "n-1"
    assert report["fix"]["mprime"] is None
    assert all(c["status"] == "none" for c in report["fix"]["cosets"])


def test_commutator_twist():
    phi = metafix.Endomorphism.parse(fixture("fixed_commutator_n3.endo"))
    g = metafix.detect_fixed_in_Mprime(phi)
    assert g is not None
    assert metafix.verify_fixed(phi, g)
    assert metafix.normality_check(phi, g)
    status, witness = metafix.detect_fixed_in_coset(phi, [0, 1, 0])
    assert status == "found"
    assert metafix.verify_fixed(phi, witness)
    assert metafix.detect_fixed_in_coset(phi, [2, 0, 0])[0] == "none"


def test_report_round_trip():
    report = metafix.analyze(fixture("identity_n3.endo"), bound=1)
    assert len(report["fix"]["cosets"]) == 26
    assert metafix.reload(report) == report
    report["input"]["images"] = ["x1 [x1,x2]", "x2 [x1,x2]^-1", "x3"]
    with pytest.raises(metafix.InvariantViolation):
        metafix.reload(report)


def test_braids():
    b = metafix.BraidWord.parse("A[1,2] A[2,3]^-1", 3)
    assert b.automorphism().is_ia()
    assert len(metafix.gassner_reduced(b)) == 2
    report = metafix.analyze_braid("A[1,2]", 2)
    assert report["braid"]["consistent"]
    empty = metafix.analyze_braid("", 3)
    assert empty["braid"]["alexander_vanishes"] and empty["braid"]["mprime_witness"]


def test_errors():
    with pytest.raises(metafix.ParseError):
        metafix.Word.parse("x1 [x2,", 2)
    with pytest.raises(metafix.ParseError):
        metafix.BraidWord.parse("A[1,4]", 3)
    with pytest.raises(metafix.Error):
        metafix.Endomorphism.parse(fixture("bad_syntax.endo"))
    swap = metafix.Endomorphism.parse(fixture("swap_n2.endo"))
    with pytest.raises(metafix.PreconditionError):
        metafix.detect_fixed_in_Mprime(swap)
    assert metafix.analyze(swap)["fix"] is None


def test_selftest():
    for name, cases, failures in metafix.selftest(5, 5):
        assert cases > 0 and failures == 0, name
