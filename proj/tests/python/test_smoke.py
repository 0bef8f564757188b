import pytest

import gprc


def test_stratum_of_reversal():
    prof = gprc.stratum("0 1 2 3 / 3 2 1 0")
    assert prof["holonomy"] == "abelian"
    assert prof["degrees"] == [2]
    assert prof["genus"] == 2


def test_quadratic_stratum():
    prof = gprc.stratum("0 2 2 / 1 1 0")
    assert prof["degrees"] == [-1, -1, -1, -1]
    assert prof["right_degree"] is None


def test_class_sizes():
    assert gprc.class_size("0 1 2 3 / 3 2 1 0") == 7
    assert gprc.class_size("0 1 2 3 4 5 6 / 3 2 6 5 4 1 0", extended=True) == 770


def test_ops():
    assert gprc.op_a("0 1 2 3 / 3 2 1 0") == "0 1 2 3 / 3 0 2 1"
    assert gprc.op_a("0 1 1 0 / 2 2") is None
    assert gprc.op_c("0 1 1 / 2 2 0") == "0 1 1 / 2 2 0"
    assert gprc.inverse("0 1 1 / 2 2 0") == "0 0 1 / 1 2 2"


def test_components_round_trip():
    assert gprc.components("H(4)") == ["H(4):hyp", "H(4):odd"]
    rep = gprc.representative("H(4):odd")
    assert gprc.classify(rep) == "H(4):odd"
    assert gprc.spin_parity(rep) == 1


def test_erasure():
    base = "0 1 2 3 4 5 6 7 8 / 4 3 2 5 8 7 6 1 0"
    assert gprc.erase(base, [3, 5], relabel=False) == "0 1 2 4 6 7 8 / 4 2 8 7 6 1 0"


def test_errors():
    with pytest.raises(gprc.Error):
        gprc.stratum("0 1 / 1")
    with pytest.raises(gprc.Error):
        gprc.classify("0 1 2 3 / 1 0 3 2")
