"""JSON input/output for arrangements, curves and family requests.

All rationals travel as strings ("-3/4") so nothing is lost to binary
floating point; floats in input are rejected rather than rounded.
"""

import json
from fractions import Fraction
from typing import Union

from .constructions import named_example
from .geometry import Arrangement, HomPoly, LinearForm, ProjPoint
from .linalg import rational_from_string, rational_to_string


class ParseError(ValueError):
    """Invalid input file or request."""


def parse_rational(value) -> Fraction:
    if isinstance(value, bool):
        raise ParseError(f"expected a rational, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return rational_from_string(value)
        except ValueError as e:
            raise ParseError(str(e)) from None
    raise ParseError(f"expected a rational string or integer, got {value!r}")


def _parse_lines(entries) -> Arrangement:
    if not isinstance(entries, list) or not entries:
        raise ParseError("lines must be a non-empty list")
    forms = []
    for entry in entries:
        if not isinstance(entry, list) or len(entry) != 3:
            raise ParseError(f"line must have three coefficients, got {entry!r}")
        try:
            forms.append(LinearForm(*(parse_rational(v) for v in entry)))
        except ValueError as e:
            raise ParseError(str(e)) from None
    try:
        return Arrangement(forms)
    except ValueError as e:
        raise ParseError(str(e)) from None


def _parse_curve(entries) -> HomPoly:
    if not isinstance(entries, list) or not entries:
        raise ParseError("curve must be a non-empty list of terms")
    terms = {}
    degree = None
    for entry in entries:
        if not isinstance(entry, dict) or set(entry) != {"coef", "exp"}:
            raise ParseError(f"curve term needs coef and exp, got {entry!r}")
        exp = entry["exp"]
        if (not isinstance(exp, list) or len(exp) != 3
                or not all(isinstance(e, int) and not isinstance(e, bool) and e >= 0 for e in exp)):
            raise ParseError(f"exp must be three non-negative integers, got {exp!r}")
        if degree is None:
            degree = sum(exp)
        elif sum(exp) != degree:
            raise ParseError("curve terms must share a total degree")
        key = tuple(exp)
        if key in terms:
            raise ParseError(f"duplicate exponent {exp!r}")
        c = parse_rational(entry["coef"])
        if c:
            terms[key] = c
    if not terms:
        raise ParseError("curve is identically zero")
    return HomPoly(degree, terms)


def _parse_family(entry) -> Union[Arrangement, HomPoly]:
    if not isinstance(entry, dict) or "id" not in entry:
        raise ParseError("family needs an id")
    ident = entry["id"]
    raw = entry.get("params", {})
    if not isinstance(raw, dict):
        raise ParseError("family params must be an object")
    params = {k: parse_rational(v) for k, v in raw.items()}
    try:
        return named_example(ident, params)
    except KeyError as e:
        raise ParseError(f"family {ident} is missing parameter {e.args[0]!r}") from None
    except ValueError as e:
        raise ParseError(str(e)) from None


def parse_input(data) -> Union[Arrangement, HomPoly]:
    """Decode the one-of lines/curve/family input object."""
    if not isinstance(data, dict):
        raise ParseError("input must be a JSON object")
    keys = {"lines", "curve", "family"} & set(data)
    if len(keys) != 1:
        raise ParseError("need exactly one of lines, curve, family")
    extra = set(data) - {"lines", "curve", "family"}
    if extra:
        raise ParseError(f"unknown keys: {sorted(extra)}")
    if "lines" in data:
        return _parse_lines(data["lines"])
    if "curve" in data:
        return _parse_curve(data["curve"])
    return _parse_family(data["family"])


def load_input(path) -> Union[Arrangement, HomPoly]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON in {path}: {e}") from None
    return parse_input(data)


def line_to_json(L: LinearForm):
    return [rational_to_string(Fraction(c)) for c in L.coeffs]


def point_to_json(p: ProjPoint):
    return [rational_to_string(Fraction(c)) for c in p.coords]


def arrangement_to_json(arr: Arrangement):
    return {"lines": [line_to_json(L) for L in arr]}


def curve_to_json(f: HomPoly):
    entries = []
    for exp in sorted(f.terms, reverse=True):
        entries.append({
            "coef": rational_to_string(f.terms[exp]),
            "exp": list(exp),
        })
    return {"curve": entries}


def object_to_json(obj: Union[Arrangement, HomPoly]):
    if isinstance(obj, Arrangement):
        return arrangement_to_json(obj)
    return curve_to_json(obj)


def dump_json(data, path):
    text = json.dumps(data, indent=2)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
        fh.write("\n")


def dumps_json(data) -> str:
    return json.dumps(data, indent=2) + "\n"
