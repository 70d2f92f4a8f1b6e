"""JSON file formats for arrangements and local systems.

Rationals are strings ``"p/q"`` (or ``"p"``); floats are rejected so that
nothing is ever rounded on the way in.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction

from .arrangement import ToricArrangement, make_arrangement
from .local_systems import LocalSystem, UnitScalar

_RATIONAL = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


class ParseError(ValueError):
    """Malformed input; the message carries the location."""


def _loads(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{what}: line {e.lineno}, column {e.colno}: {e.msg}") from None


def parse_rational(value, where: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ParseError(f"{where}: expected a rational string like \"1/2\", got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    m = _RATIONAL.match(value)
    if not m:
        raise ParseError(f"{where}: cannot parse rational {value!r}")
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"{where}: zero denominator in {value!r}")
    return Fraction(int(m.group(1)), den)


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _require(obj, key, where):
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected an object")
    if key not in obj:
        raise ParseError(f"{where}: missing field {key!r}")
    return obj[key]


def _int(value, where):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{where}: expected an integer, got {value!r}")
    return value


def arrangement_from_obj(obj) -> ToricArrangement:
    n = _int(_require(obj, "dimension", "arrangement"), "dimension")
    if n < 0:
        raise ParseError("dimension: must be nonnegative")
    hts = _require(obj, "hypertori", "arrangement")
    if not isinstance(hts, list):
        raise ParseError("hypertori: expected a list")
    pairs = []
    for i, h in enumerate(hts):
        where = f"hypertori[{i}]"
        chi = _require(h, "chi", where)
        if not isinstance(chi, list):
            raise ParseError(f"{where}.chi: expected a list of integers")
        chi = [_int(a, f"{where}.chi[{k}]") for k, a in enumerate(chi)]
        angle = parse_rational(_require(h, "angle", where), f"{where}.angle")
        pairs.append((chi, angle))
    return make_arrangement(n, pairs)


def parse_arrangement(text: str) -> ToricArrangement:
    return arrangement_from_obj(_loads(text, "arrangement"))


def arrangement_to_obj(arr: ToricArrangement) -> dict:
    return {
        "dimension": arr.dimension,
        "hypertori": [{"chi": list(h.chi), "angle": format_rational(h.angle)}
                      for h in arr.hypertori],
    }


def serialize_arrangement(arr: ToricArrangement) -> str:
    return json.dumps(arrangement_to_obj(arr), indent=2) + "\n"


def _scalar(obj, where) -> UnitScalar:
    modulus = parse_rational(_require(obj, "modulus", where), f"{where}.modulus")
    if modulus <= 0:
        raise ParseError(f"{where}.modulus: must be positive")
    angle = parse_rational(_require(obj, "angle", where), f"{where}.angle")
    return UnitScalar(modulus, angle)


def parse_local_system(text: str, arr: ToricArrangement | None = None) -> LocalSystem:
    obj = _loads(text, "local system")
    lam = _require(obj, "lambdas", "local system")
    tor = _require(obj, "torus", "local system")
    if not isinstance(lam, list) or not isinstance(tor, list):
        raise ParseError("local system: 'lambdas' and 'torus' must be lists")
    ls = LocalSystem(tuple(_scalar(x, f"lambdas[{i}]") for i, x in enumerate(lam)),
                     tuple(_scalar(x, f"torus[{i}]") for i, x in enumerate(tor)))
    if arr is not None:
        try:
            ls.check(arr)
        except ValueError as e:
            raise ParseError(f"local system: {e}") from None
    return ls


def local_system_to_obj(ls: LocalSystem) -> dict:
    def enc(u):
        return {"modulus": format_rational(u.modulus), "angle": format_rational(u.angle)}
    return {"lambdas": [enc(u) for u in ls.lambdas], "torus": [enc(u) for u in ls.torus_monodromies]}


def serialize_local_system(ls: LocalSystem) -> str:
    return json.dumps(local_system_to_obj(ls), indent=2) + "\n"
