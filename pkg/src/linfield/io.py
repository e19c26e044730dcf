"""JSON documents for towers, elements, polynomials, matrices and trace forms.

An element of GF(q^n) is written as ``n`` little-endian GF(q) coordinates, each
either a list of ``e`` GF(p) digits or a string of decimal digits (``"01"`` is
``0 + 1*u``).  When ``e == 1`` a coordinate may also be a plain int.  Output is
always the canonical nested list of ints, e.g. ``[[0], [1]]`` for ``w`` in GF(4).

A field document may name constants and polynomials for readability::

    {"p": 2, "f": [1, 1], "g": [[1], [1], [1]],
     "constants": {"w": [[0], [1]]},
     "polys": {"L_a": ["w", "1"]}}
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping, Sequence

from linfield.errors import MalformedInput, TowerMismatch
from linfield.finite_field import Elem, FieldTower, make_tower
from linfield.linearized import LinPoly
from linfield.moore_trace import TraceForm
from linfield.skew import SkewPoly


@dataclass
class FieldDoc:
    """A parsed field file: the tower plus its named constants and polynomials."""

    tower: FieldTower
    constants: dict[str, Elem] = field(default_factory=dict)
    polys: dict[str, Any] = field(default_factory=dict)


def _digits_entry(F: FieldTower, entry: Any) -> list[int]:
    if isinstance(entry, bool):
        raise MalformedInput("booleans are not field elements")
    if isinstance(entry, int):
        if F.e != 1:
            raise MalformedInput(f"GF({F.q}) coordinates need {F.e} digits, got a bare int")
        return [entry]
    if isinstance(entry, str):
        if not entry.isdigit():
            raise MalformedInput(f"{entry!r} is not a digit string")
        return [int(ch) for ch in entry]
    if isinstance(entry, list) and all(isinstance(d, int) and not isinstance(d, bool) for d in entry):
        return list(entry)
    raise MalformedInput(f"cannot read {entry!r} as a GF({F.q}) coordinate")


def parse_elem(doc: FieldDoc | FieldTower, value: Any) -> Elem:
    F, constants = _split(doc)
    if isinstance(value, str):
        if value in constants:
            return constants[value]
        if value.isdigit() and F.n == 1:
            return F.from_nested([_digits_entry(F, value)])
        if value in ("0", "1"):
            return int(value)
        raise MalformedInput(f"unknown constant {value!r}")
    if isinstance(value, int) and not isinstance(value, bool) and value in (0, 1):
        return value
    if not isinstance(value, list):
        raise MalformedInput(f"cannot read {value!r} as an element")
    return F.from_nested([_digits_entry(F, c) for c in value])


def _split(doc: FieldDoc | FieldTower) -> tuple[FieldTower, Mapping[str, Elem]]:
    if isinstance(doc, FieldDoc):
        return doc.tower, doc.constants
    return doc, {}


def dump_elem(F: FieldTower, a: Elem) -> list[list[int]]:
    return [list(c) for c in F.nested(a)]


def parse_elems(doc: FieldDoc | FieldTower, value: Any) -> list[Elem]:
    if not isinstance(value, list):
        raise MalformedInput("expected a JSON list of elements")
    return [parse_elem(doc, v) for v in value]


def dump_elems(F: FieldTower, xs: Sequence[Elem]) -> list[list[list[int]]]:
    return [dump_elem(F, a) for a in xs]


def parse_poly(doc: FieldDoc | FieldTower, value: Any) -> LinPoly:
    """A coefficient list, ``{"coeffs": [...]}``, ``"identity"``, ``"zero"`` or a named poly."""
    F, _ = _split(doc)
    if isinstance(value, str):
        if value == "identity":
            return LinPoly.identity(F)
        if value == "zero":
            return LinPoly.zero(F)
        if isinstance(doc, FieldDoc) and value in doc.polys:
            return parse_poly(doc, doc.polys[value])
        raise MalformedInput(f"unknown polynomial {value!r}")
    if isinstance(value, dict) and "coeffs" in value:
        value = value["coeffs"]
    if not isinstance(value, list) or not value:
        raise MalformedInput("a polynomial is a non-empty list of coefficients")
    if len(value) != F.n:
        raise TowerMismatch(f"expected {F.n} coefficients, got {len(value)}")
    return LinPoly(F, tuple(parse_elem(doc, v) for v in value))


def dump_poly(L: LinPoly) -> list[list[list[int]]]:
    return dump_elems(L.tower, L.coeffs)


def parse_skew(doc: FieldDoc | FieldTower, value: Any) -> SkewPoly:
    """Skew polynomials may have any length; ``{"skew": [...]}`` or a plain list."""
    F, _ = _split(doc)
    if isinstance(value, str):
        return SkewPoly(F, parse_poly(doc, value).coeffs)
    if isinstance(value, dict) and "skew" in value:
        value = value["skew"]
    if not isinstance(value, list):
        raise MalformedInput("a skew polynomial is a list of coefficients")
    return SkewPoly(F, tuple(parse_elem(doc, v) for v in value))


def dump_skew(s: SkewPoly) -> list[list[list[int]]]:
    return dump_elems(s.tower, s.coeffs)


def dump_matrix(F: FieldTower, M: Sequence[Sequence[Elem]]) -> list[list[list[list[int]]]]:
    return [dump_elems(F, row) for row in M]


def parse_matrix(doc: FieldDoc | FieldTower, value: Any) -> list[list[Elem]]:
    if not isinstance(value, list) or not all(isinstance(r, list) for r in value):
        raise MalformedInput("a matrix is a list of rows")
    return [parse_elems(doc, r) for r in value]


def dump_trace_form(tf: TraceForm) -> list[list[list[list[int]]]]:
    F = tf.tower
    return [[dump_elem(F, w), dump_elem(F, t)] for w, t in tf.pairs]


def parse_trace_form(doc: FieldDoc | FieldTower, value: Any) -> TraceForm:
    F, _ = _split(doc)
    if isinstance(value, dict) and "pairs" in value:
        value = value["pairs"]
    if not isinstance(value, list) or any(not isinstance(p, list) or len(p) != 2 for p in value):
        raise MalformedInput("a trace form is a list of [omega, theta] pairs")
    return TraceForm(F, tuple((parse_elem(doc, w), parse_elem(doc, t)) for w, t in value))


# -- field documents --------------------------------------------------------


def field_from_json(data: Any) -> FieldDoc:
    if not isinstance(data, dict) or not {"p", "f", "g"} <= data.keys():
        raise MalformedInput('a field document needs "p", "f" and "g"')
    p, f, g = data["p"], data["f"], data["g"]
    if not isinstance(p, int) or not isinstance(f, list) or not isinstance(g, list):
        raise MalformedInput('"p" must be an int, "f" and "g" lists')
    if not all(isinstance(c, int) for c in f):
        raise MalformedInput('"f" must list GF(p) integers')
    e = len(f) - 1
    g_digits = []
    for entry in g:
        if isinstance(entry, int) and e == 1:
            g_digits.append([entry])
        elif isinstance(entry, str) and entry.isdigit():
            g_digits.append([int(ch) for ch in entry])
        elif isinstance(entry, list) and all(isinstance(d, int) for d in entry):
            g_digits.append(entry)
        else:
            raise MalformedInput(f"cannot read {entry!r} as a coefficient of g")
    for digits in g_digits:
        if len(digits) > max(e, 1) or any(not 0 <= d < p for d in digits):
            raise MalformedInput(f"{digits!r} is not a GF(p^{e}) element")
    tower = make_tower(p, f, g_digits, **({"bound": data["bound"]} if "bound" in data else {}))
    doc = FieldDoc(tower)
    for name, value in data.get("constants", {}).items():
        doc.constants[name] = parse_elem(doc, value)
    doc.polys = dict(data.get("polys", {}))
    return doc


def field_to_json(F: FieldTower) -> dict[str, Any]:
    return {"p": F.p, "f": list(F.f), "g": [[c // F.p**i % F.p for i in range(F.e)] for c in F.g]}


def load_field(path: str | Path) -> FieldDoc:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise MalformedInput(f"cannot read field file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"field file is not JSON: {exc}") from exc
    return field_from_json(data)


def read_operand(text: str) -> Any:
    """``@path`` reads a file; otherwise JSON, falling back to a bare name."""
    if text.startswith("@"):
        try:
            text = Path(text[1:]).read_text()
        except OSError as exc:
            raise MalformedInput(f"cannot read {text[1:]}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        stripped = text.strip()
        if stripped.replace("_", "").isalnum():
            return stripped
        raise MalformedInput(f"not JSON: {text!r}") from None


def dumps(obj: Any, indent: int | None = None) -> str:
    """Canonical serialization: sorted keys, no floats, compact separators by default."""
    if indent is None:
        return json.dumps(obj, sort_keys=True, separators=(",", ":"))
    return json.dumps(obj, sort_keys=True, indent=indent)

