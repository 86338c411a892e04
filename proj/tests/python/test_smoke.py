"""Smoke tests for the python bindings."""

import pytest

hyperclass = pytest.importorskip("hyperclass")


def test_schwarz_count():
    assert hyperclass.type2_count() == 408


def test_volume():
    assert hyperclass.volume("G3") == 3
    assert hyperclass.volume("FC", 3) == 8
    assert hyperclass.volume("F4") == 4


def test_check_g3():
    report = hyperclass.check("G3", ["1/2", "1/3"])
    assert report["nonresonant"] is True
    assert report["algebraic"] is True

    report = hyperclass.check("G3", ["1/3", "1/3"])
    assert report["nonresonant"] is False


def test_gauss_routes_agree():
    assert hyperclass.gauss_is_algebraic("1/2", "1/6", "1/3")
    assert hyperclass.gauss_triple_kind("1/2", "1/6", "1/3") == "type2"
    assert hyperclass.gauss_triple_kind("1/4", "3/4", "1/2") == "type1"
    assert hyperclass.gauss_triple_kind("1/3", "1/3", "2/3") == "not_algebraic"


def test_signature_spot_value():
    # Classical parameters (a, b, c) = (1/6, (5/6,..), (2/3,..)) map to the
    # alpha with 7 apexpoints; the negated parameters give 5.
    params = ["1/6", "5/6", "5/6", "5/6", "2/3", "2/3", "2/3"]
    assert hyperclass.signature("FA", 3, params) == 7
    negated = ["5/6", "1/6", "1/6", "1/6", "1/3", "1/3", "1/3"]
    assert hyperclass.signature("FA", 3, negated) == 5


def test_classify_g1():
    sols = hyperclass.classify("G1")
    assert sols["sporadic_total"] == 6
    reps = [tuple(r["tuple"]) for r in sols["representatives"]]
    assert ("1/6", "1/2", "2/3") in reps


def test_interlace_g1():
    table = hyperclass.interlace("G1")
    assert table["max_signature"] == 3
    assert len(table["maximal"]) == 2


def test_family_dump():
    fam = hyperclass.family("H5")
    assert fam["volume"] == 4
    assert len(fam["facets"]) == 4


def test_bad_input():
    with pytest.raises(ValueError):
        hyperclass.check("G3", ["1/x", "1/3"])
