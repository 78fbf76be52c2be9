"""JSON encoding of elements, tensor elements and vector pools."""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from typing import Any

import jsonschema

from .bialgebra import TensorElement
from .canonical import CHI_BY_NAME, CHI_NAMES, BasicSharbly, Element, GradeError, Sharbly, canonical_form, element_from


class SchemaError(ValueError):
    """Input JSON does not describe a valid object."""


_INT = {"anyOf": [{"type": "integer"}, {"type": "string", "pattern": r"^-?[0-9]+$"}]}
_COEFF = {"anyOf": [{"type": "integer"}, {"type": "string", "pattern": r"^-?[0-9]+(/[0-9]+)?$"}]}
_COLS = {"type": "array", "items": {"type": "array", "items": _INT}}
_CHI = {"enum": sorted(CHI_BY_NAME)}

ELEMENT_SCHEMA = {
    "type": "object",
    "required": ["n", "chi", "terms"],
    "properties": {
        "n": {"type": "integer", "minimum": 0},
        "k": {"type": "integer", "minimum": -1},
        "chi": _CHI,
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["coeff", "cols"],
                "properties": {"coeff": _COEFF, "cols": _COLS},
            },
        },
    },
}

_FACTOR = {
    "type": "object",
    "required": ["n", "cols"],
    "properties": {"n": {"type": "integer", "minimum": 0}, "cols": _COLS},
}

TENSOR_SCHEMA = {
    "type": "object",
    "required": ["chi", "terms"],
    "properties": {
        "chi": _CHI,
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["coeff", "left", "right"],
                "properties": {"coeff": _COEFF, "left": _FACTOR, "right": _FACTOR},
            },
        },
    },
}

POOL_SCHEMA = {
    "anyOf": [
        {"type": "array", "items": {"type": "array", "items": _INT}},
        {
            "type": "object",
            "required": ["vectors"],
            "properties": {
                "n": {"type": "integer", "minimum": 1},
                "vectors": {"type": "array", "items": {"type": "array", "items": _INT}},
            },
        },
    ]
}


def _validate(data: Any, schema: dict):
    try:
        jsonschema.validate(data, schema)
    except jsonschema.ValidationError as exc:
        raise SchemaError(exc.message) from None


def _cols(cols) -> list[list[int]]:
    return [[int(x) for x in c] for c in cols]


def element_to_dict(x: Element) -> dict:
    return {
        "n": x.n,
        "k": x.k,
        "chi": CHI_NAMES[x.chi],
        "terms": [{"coeff": str(c), "cols": _cols(s.cols)} for s, c in x.items()],
    }


def element_from_dict(data: Any) -> Element:
    """Parse and canonicalize. Terms need not be in canonical form."""
    _validate(data, ELEMENT_SCHEMA)
    n, chi = data["n"], CHI_BY_NAME[data["chi"]]
    terms = []
    for t in data["terms"]:
        try:
            x = BasicSharbly(n, chi, tuple(tuple(c) for c in _cols(t["cols"])))
        except ValueError as exc:
            raise SchemaError(str(exc)) from None
        terms.append((Fraction(t["coeff"]), x))
    k = data.get("k")
    if k is None:
        if not terms:
            raise SchemaError("an element without terms needs an explicit k")
        k = terms[0][1].k
    for _, x in terms:
        if x.k != k:
            raise GradeError(f"term with {len(x.cols)} columns is not in grade ({n}, {k})")
    if k < 0 and terms:
        raise SchemaError("negative k only allowed for the zero element")
    return element_from(terms, n=n, k=k, chi=chi)


def tensor_to_dict(t: TensorElement) -> dict:
    return {
        "chi": CHI_NAMES[t.chi],
        "terms": [
            {
                "coeff": str(c),
                "left": {"n": a.n, "cols": _cols(a.cols)},
                "right": {"n": b.n, "cols": _cols(b.cols)},
            }
            for (a, b), c in t.items()
        ],
    }


def _factor(d: dict, chi: int) -> tuple[int, Sharbly]:
    try:
        x = BasicSharbly(d["n"], chi, tuple(tuple(c) for c in _cols(d["cols"])))
    except ValueError as exc:
        raise SchemaError(str(exc)) from None
    return canonical_form(x.n, x.chi, x.cols)


def tensor_from_dict(data: Any) -> TensorElement:
    _validate(data, TENSOR_SCHEMA)
    chi = CHI_BY_NAME[data["chi"]]
    acc: dict = {}
    for t in data["terms"]:
        ls, a = _factor(t["left"], chi)
        rs, b = _factor(t["right"], chi)
        if ls and rs:
            acc[(a, b)] = acc.get((a, b), 0) + ls * rs * Fraction(t["coeff"])
    return TensorElement(chi, acc)


def pool_from_dict(data: Any) -> tuple[int, list[tuple[int, ...]]]:
    """``(n, vectors)`` from either a bare list of vectors or ``{"n", "vectors"}``."""
    _validate(data, POOL_SCHEMA)
    vectors = data if isinstance(data, list) else data["vectors"]
    vecs = [tuple(int(x) for x in v) for v in vectors]
    lengths = {len(v) for v in vecs}
    n = data.get("n") if isinstance(data, dict) else None
    if n is None:
        if len(lengths) != 1:
            raise SchemaError("cannot infer pool rank")
        n = lengths.pop()
    elif lengths - {n}:
        raise SchemaError(f"pool vectors must have length {n}")
    if any(not any(v) for v in vecs):
        raise SchemaError("pool vectors must be nonzero")
    return n, vecs


def pool_hash(n: int, vectors) -> str:
    payload = json.dumps({"n": n, "vectors": [list(v) for v in vectors]}, separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=None, separators=(", ", ": "))
