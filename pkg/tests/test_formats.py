import json

import numpy as np
import pytest

from padebary.barycentric import BarycentricForm1, BarycentricForm2
from padebary.errors import InvalidInput
from padebary.formats import (
    approximant_from_dict,
    approximant_to_dict,
    load_approximant,
    load_series,
    save_approximant,
    save_series,
    series_from_dict,
    series_to_dict,
)
from padebary.numkernel import Polynomial
from padebary.pade_core import RationalFunction
from padebary.prony import PartialFraction
from padebary.series import FormalPowerSeries

APPROXIMANTS = [
    RationalFunction(Polynomial([1, 0.5j]), Polynomial([1, -0.5, 0.25])),
    BarycentricForm1([1 + 1j, 2.0], [1.0, -3.0], [0.5], [2.0j]),
    BarycentricForm2([1.0], [0.0], [1.0, -0.25], [0.5, 0.75]),
    PartialFraction([2.0, 3.0 - 1j], [1.0, 2.0 + 0.5j]),
]


def test_series_round_trip(tmp_path):
    s = FormalPowerSeries([1, -0.5 + 2j, 1 / 3, 0])
    assert series_from_dict(series_to_dict(s)) == s
    path = tmp_path / "s.json"
    save_series(s, path)
    assert load_series(path) == s
    assert json.loads(path.read_text())["coeffs"][1] == [-0.5, 2.0]


def test_series_accepts_plain_numbers():
    assert series_from_dict({"coeffs": [1, 2.5, [0, 1]]}) == FormalPowerSeries([1, 2.5, 1j])


@pytest.mark.parametrize("R", APPROXIMANTS, ids=lambda R: type(R).__name__)
def test_approximant_round_trip(R, tmp_path):
    path = tmp_path / "r.json"
    save_approximant(R, path)
    back = load_approximant(path)
    assert type(back) is type(R)
    t = np.array([0.1, -0.3 + 0.2j, 0.45])
    np.testing.assert_array_equal(back(t), R(t))


@pytest.mark.parametrize(
    "obj",
    [
        None,
        {"kind": "nope"},
        {"kind": "rational", "num": [[1, 0]]},
        {"kind": "rational", "num": [], "den": [1]},
        {"kind": "bary1", "a": [1], "pnodes": [1, 2], "b": [1], "znodes": [2]},
        {"kind": "bary1", "a": [1, 1], "pnodes": [1, 1], "b": [1], "znodes": [2]},
        {"kind": "pfpa", "terms": [{"a": 1}]},
        {"kind": "pfpa", "terms": []},
        {"kind": "rational", "num": [["x", 0]], "den": [1]},
        {"kind": "rational", "num": [True], "den": [1]},
    ],
)
def test_malformed_approximants(obj):
    with pytest.raises(InvalidInput):
        approximant_from_dict(obj)


def test_malformed_files(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(InvalidInput):
        load_series(bad)
    with pytest.raises(InvalidInput):
        load_series(tmp_path / "missing.json")
    with pytest.raises(InvalidInput):
        series_from_dict({"coeffs": "123"})


def test_unknown_type_not_serializable():
    with pytest.raises(InvalidInput):
        approximant_to_dict(object())
