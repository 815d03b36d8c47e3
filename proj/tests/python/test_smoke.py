from fractions import Fraction

import pytest

import swapalg


def test_linking_and_parallel_numbers():
    assert swapalg.linking_number("a1", "a3", "a2", "a4", points=4) == 1
    assert swapalg.linking_number("a1", "a3", "a1", "a2", points=4) == Fraction(-1, 2)
    assert swapalg.parallel_number("a1", "a4", "a2", "a3", points=4) == 1
    assert swapalg.parallel_number("a1", "a3", "a1", "a2", points=4) == Fraction(1, 2)


def test_unknown_point_raises():
    with pytest.raises(swapalg.SwapalgError):
        swapalg.linking_number("a1", "a9", "a2", "a3", points=4)


def test_bracket_and_reduce():
    assert swapalg.bracket("a1.a3", "a2.a4", points=4) == "1 * a1.a4 * a2.a3"
    assert swapalg.reduce("det([a1,a2,a3];[a2,a3,a4])", points=4, rank=2) == "0"


def test_is_zero():
    assert swapalg.is_zero("det([a1,a2,a3];[a1,a2,a4])", points=4)["verdict"] == "ProvedZero"
    assert swapalg.is_zero("a1.a2", points=4)["verdict"] == "NonZero"


def test_main_theorem_report():
    rep = swapalg.verify("main-theorem", rank=2, points=4, subset=[1, 2], alpha=1, beta=0, seed=7)
    assert rep["pass"] is True
    assert len(rep["items"]) == 6
    assert set(rep["parameters"]) == {"n", "r", "I", "alpha", "beta", "prime", "trials", "seed"}


def test_parse_error_exit_code():
    code, _, err = swapalg.run("reduce", "--points", "4", "--expr", "a1.a2 +")
    assert code == 3
    assert "position" in err
