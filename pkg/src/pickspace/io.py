"""JSON documents: input files and machine-readable reports.

Complex scalars are ``[re, im]`` pairs (a bare real number is also accepted on
input).  Matrices are row-major lists of rows.  Input kinds:

points
    ``{"m": 2, "points": [[[re, im], [re, im]], ...]}``
gram
    ``{"n": 2, "entries": [[[re, im], [re, im]], ...]}``
blaschke
    ``{"zeros": [[re, im], ...]}``

Any document may also carry ``"kind"`` (otherwise inferred from the keys) and
``"tolerances"`` with any of ``psd_tol``, ``rankone_tol``, ``match_tol``.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass

import jsonschema
import numpy as np

from .errors import ValidationError

SIG_DIGITS = 12

_complex = {
    "oneOf": [
        {"type": "number"},
        {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2},
    ]
}
_vector = {"type": "array", "items": _complex, "minItems": 1}
_matrix = {"type": "array", "items": _vector, "minItems": 1}
_tolerances = {
    "type": "object",
    "properties": {
        name: {"type": "number", "minimum": 0}
        for name in ("psd_tol", "rankone_tol", "match_tol")
    },
    "additionalProperties": False,
}

INPUT_SCHEMAS = {
    "points": {
        "type": "object",
        "properties": {
            "kind": {"const": "points"},
            "m": {"type": "integer", "minimum": 1},
            "points": _matrix,
            "tolerances": _tolerances,
        },
        "required": ["m", "points"],
        "additionalProperties": False,
    },
    "gram": {
        "type": "object",
        "properties": {
            "kind": {"const": "gram"},
            "n": {"type": "integer", "minimum": 1},
            "entries": _matrix,
            "tolerances": _tolerances,
        },
        "required": ["n", "entries"],
        "additionalProperties": False,
    },
    "blaschke": {
        "type": "object",
        "properties": {
            "kind": {"const": "blaschke"},
            "zeros": _vector,
            "tolerances": _tolerances,
        },
        "required": ["zeros"],
        "additionalProperties": False,
    },
}

_cnum = {
    "type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2,
}
_criterion = {
    "type": "object",
    "properties": {
        "status": {"enum": ["true", "false", "not_applicable"]},
        "statistic": {"type": ["number", "null"]},
        "threshold": {"type": ["number", "null"]},
        "borderline": {"type": "boolean"},
        "detail": {"type": "object"},
    },
    "required": ["status", "statistic", "threshold", "borderline", "detail"],
}
_classification = {
    "type": "object",
    "properties": {
        **{name: _criterion for name in (
            "c1_geodesic", "c2_triples", "c3_extremal_product",
            "c4_r_orthogonal", "c5_orthogonal_gram", "c6_model")},
        "consistent": {"type": "boolean"},
        "is_model_space": {"type": "boolean"},
        "borderline": {"type": "array", "items": {"type": "string"}},
        "gram_route": {"type": "object"},
    },
    "required": [
        "c1_geodesic", "c2_triples", "c3_extremal_product", "c4_r_orthogonal",
        "c5_orthogonal_gram", "c6_model", "consistent", "is_model_space", "borderline",
    ],
}
_cmatrix = {"type": "array", "items": {"type": "array", "items": _cnum}}
_rmatrix = {"type": "array", "items": {"type": "array", "items": {"type": "number"}}}
_cvector = {"type": "array", "items": _cnum}

RESULT_SCHEMAS = {
    "classify": _classification,
    "delta": {
        "type": "object",
        "properties": {"delta": _rmatrix},
        "required": ["delta"],
    },
    "dual": {
        "type": "object",
        "properties": {"n": {"type": "integer"}, "entries": _cmatrix},
        "required": ["n", "entries"],
    },
    "orthogonalize": {
        "type": "object",
        "properties": {
            "verdict": {"enum": ["orthogonal", "r_orthogonal", "not_r_orthogonal", "degenerate"]},
            "ratio": {"type": ["number", "null"]},
            "residual": {"type": ["number", "null"]},
            "lambdas": {"oneOf": [_cvector, {"type": "null"}]},
            "rescaled": {"oneOf": [_cmatrix, {"type": "null"}]},
        },
        "required": ["verdict", "lambdas", "rescaled"],
    },
    "extremal": {
        "type": "object",
        "properties": {
            "base": {"type": "integer"},
            "value": {"type": "number"},
            "indices": {"type": "array", "items": {"type": "integer"}},
            "multiplier": _cvector,
            "h": _cvector,
            "delta_product": {"type": "number"},
            "excess": {"type": "number"},
        },
        "required": ["base", "value", "multiplier", "h", "delta_product", "excess"],
    },
    "geodesic": {
        "type": "object",
        "properties": {
            "in_single_geodesic": {"type": "boolean"},
            "ratio": {"type": "number"},
            "direction": {"oneOf": [_cvector, {"type": "null"}]},
        },
        "required": ["in_single_geodesic", "ratio", "direction"],
    },
    "congruent": {
        "type": "object",
        "properties": {"congruent": {"type": "boolean"}},
        "required": ["congruent"],
    },
    "realize": {
        "type": "object",
        "properties": {
            "m": {"type": "integer"},
            "points": _cmatrix,
            "lambdas": _cvector,
            "residual": {"type": "number"},
        },
        "required": ["m", "points", "lambdas", "residual"],
    },
    "probe-dual": {
        "type": "object",
        "properties": {
            "dual_in_F": {"type": "boolean"},
            "dual_in_M": {"type": "boolean"},
            "report": _classification,
        },
        "required": ["dual_in_F", "dual_in_M"],
    },
}

REPORT_SCHEMA = {
    "type": "object",
    "properties": {
        "command": {"enum": sorted(RESULT_SCHEMAS)},
        "input_kind": {"type": ["string", "null"]},
        "tolerances": _tolerances,
        "result": {"type": "object"},
    },
    "required": ["command", "result"],
    "allOf": [
        {
            "if": {"properties": {"command": {"const": name}}},
            "then": {"properties": {"result": schema}},
        }
        for name, schema in RESULT_SCHEMAS.items()
    ],
}


class Kind(str, enum.Enum):
    POINTS = "points"
    GRAM = "gram"
    BLASCHKE = "blaschke"


@dataclass(frozen=True)
class InputDocument:
    kind: Kind
    payload: np.ndarray
    tolerances: dict


def _to_complex(v):
    if isinstance(v, list):
        return complex(v[0], v[1])
    return complex(v)


def _matrix_from(rows, where):
    try:
        return np.array([[_to_complex(e) for e in row] for row in rows], dtype=complex)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"{where}: {exc}") from exc


def _infer_kind(doc):
    if "kind" in doc:
        return Kind(doc["kind"]) if doc["kind"] in Kind._value2member_map_ else None
    for kind, key in ((Kind.POINTS, "points"), (Kind.GRAM, "entries"), (Kind.BLASCHKE, "zeros")):
        if key in doc:
            return kind
    return None


def parse_document(text, source="<input>"):
    """Parse and validate an input document; errors carry ``source:line`` anchors."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{source}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ValidationError(f"{source}:1: input must be a JSON object")
    kind = _infer_kind(doc)
    if kind is None:
        raise ValidationError(
            f"{source}:1: cannot tell the input kind; expected a 'points', 'entries' or 'zeros' key")
    try:
        jsonschema.validate(doc, INPUT_SCHEMAS[kind.value])
    except jsonschema.ValidationError as exc:
        pointer = "/" + "/".join(str(p) for p in exc.absolute_path)
        line = _line_of(text, exc.absolute_path)
        raise ValidationError(f"{source}:{line}: at {pointer}: {exc.message}") from None

    if kind is Kind.POINTS:
        payload = _matrix_from(doc["points"], source)
        if payload.shape[1] != doc["m"]:
            raise ValidationError(
                f"{source}:{_line_of(text, ['points'])}: points have dimension "
                f"{payload.shape[1]} but m = {doc['m']}")
    elif kind is Kind.GRAM:
        payload = _matrix_from(doc["entries"], source)
        if payload.shape != (doc["n"], doc["n"]):
            raise ValidationError(
                f"{source}:{_line_of(text, ['entries'])}: entries have shape "
                f"{payload.shape} but n = {doc['n']}")
    else:
        payload = np.array([_to_complex(z) for z in doc["zeros"]], dtype=complex)
    return InputDocument(kind, payload, dict(doc.get("tolerances", {})))


def _line_of(text, path):
    """Best-effort line number of the first JSON key on ``path``."""
    keys = [p for p in path if isinstance(p, str)]
    if not keys:
        return 1
    needle = json.dumps(keys[-1]) + ":"
    pos = text.replace('" :', '":').find(needle)
    return text.count("\n", 0, pos) + 1 if pos >= 0 else 1


def _round(x):
    return float(f"{x:.{SIG_DIGITS}g}")


def to_jsonable(obj):
    """Convert numpy values, complex numbers and enums to plain JSON types."""
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, list | tuple):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        if np.iscomplexobj(obj):
            return to_jsonable(np.stack([obj.real, obj.imag], axis=-1).tolist())
        return to_jsonable(obj.tolist())
    if isinstance(obj, bool | np.bool_):
        return bool(obj)
    if isinstance(obj, int | np.integer):
        return int(obj)
    if isinstance(obj, complex | np.complexfloating):
        return [_round(obj.real), _round(obj.imag)]
    if isinstance(obj, float | np.floating):
        x = float(obj)
        return _round(x) if np.isfinite(x) else None
    return obj


def complex_list(a):
    """``[re, im]`` form of a complex array, full precision."""
    a = np.asarray(a, dtype=complex)
    return np.stack([a.real, a.imag], axis=-1).tolist()


def points_document(points):
    points = np.asarray(points, dtype=complex)
    return {"kind": "points", "m": int(points.shape[1]), "points": complex_list(points)}


def validate_report(doc):
    jsonschema.validate(doc, REPORT_SCHEMA)
