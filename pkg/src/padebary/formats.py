"""JSON records for series and approximants.

Complex numbers are written as ``[re, im]`` pairs::

    {"coeffs": [[1.0, 0.0], [0.5, 0.0]]}
    {"kind": "rational", "num": [...], "den": [...]}
    {"kind": "bary1" | "bary2", "a": [...], "pnodes": [...], "b": [...], "znodes": [...]}
    {"kind": "pfpa", "terms": [{"a": [re, im], "p": [re, im]}, ...]}
"""

from __future__ import annotations

import json

import numpy as np

from .barycentric import BarycentricForm1, BarycentricForm2
from .errors import InvalidInput
from .numkernel import Polynomial
from .pade_core import RationalFunction
from .prony import PartialFraction
from .series import FormalPowerSeries


def _pairs(v):
    return [[float(np.real(x)), float(np.imag(x))] for x in np.asarray(v, dtype=complex)]


def _complex(x):
    if isinstance(x, (int, float)) and not isinstance(x, bool):
        return complex(x)
    if isinstance(x, (list, tuple)) and len(x) == 2 and all(
        isinstance(y, (int, float)) and not isinstance(y, bool) for y in x
    ):
        return complex(x[0], x[1])
    raise InvalidInput(f"expected a number or an [re, im] pair, got {x!r}")


def _vector(obj, key):
    try:
        v = obj[key]
    except (KeyError, TypeError):
        raise InvalidInput(f"missing field {key!r}") from None
    if not isinstance(v, list) or not v:
        raise InvalidInput(f"field {key!r} must be a non-empty list")
    return np.array([_complex(x) for x in v], dtype=complex)


def series_to_dict(s: FormalPowerSeries) -> dict:
    return {"coeffs": _pairs(s.coeffs)}


def series_from_dict(obj) -> FormalPowerSeries:
    return FormalPowerSeries(_vector(obj, "coeffs"))


def approximant_to_dict(R) -> dict:
    if isinstance(R, RationalFunction):
        return {"kind": "rational", "num": _pairs(R.num.coeffs), "den": _pairs(R.den.coeffs)}
    if isinstance(R, (BarycentricForm1, BarycentricForm2)):
        return {
            "kind": "bary1" if isinstance(R, BarycentricForm1) else "bary2",
            "a": _pairs(R.a),
            "pnodes": _pairs(R.pnodes),
            "b": _pairs(R.b),
            "znodes": _pairs(R.znodes),
        }
    if isinstance(R, PartialFraction):
        return {
            "kind": "pfpa",
            "terms": [{"a": _pairs([a])[0], "p": _pairs([p])[0]} for a, p in R.terms],
        }
    raise InvalidInput(f"cannot serialize {type(R).__name__}")


def approximant_from_dict(obj):
    if not isinstance(obj, dict):
        raise InvalidInput("approximant record must be a JSON object")
    kind = obj.get("kind")
    if kind == "rational":
        return RationalFunction(Polynomial(_vector(obj, "num")), Polynomial(_vector(obj, "den")))
    if kind in ("bary1", "bary2"):
        cls = BarycentricForm1 if kind == "bary1" else BarycentricForm2
        return cls(_vector(obj, "a"), _vector(obj, "pnodes"), _vector(obj, "b"), _vector(obj, "znodes"))
    if kind == "pfpa":
        terms = obj.get("terms")
        if not isinstance(terms, list) or not terms:
            raise InvalidInput("field 'terms' must be a non-empty list")
        try:
            a = [_complex(t["a"]) for t in terms]
            p = [_complex(t["p"]) for t in terms]
        except (KeyError, TypeError):
            raise InvalidInput("each pfpa term needs 'a' and 'p'") from None
        return PartialFraction(a, p)
    raise InvalidInput(f"unknown approximant kind {kind!r}")


def _load(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path} is not valid JSON: {exc}") from None


def _dump(obj, path):
    with open(path, "w") as fh:
        json.dump(obj, fh)
        fh.write("\n")


def load_series(path) -> FormalPowerSeries:
    return series_from_dict(_load(path))


def save_series(s: FormalPowerSeries, path) -> None:
    _dump(series_to_dict(s), path)


def load_approximant(path):
    return approximant_from_dict(_load(path))


def save_approximant(R, path) -> None:
    _dump(approximant_to_dict(R), path)
