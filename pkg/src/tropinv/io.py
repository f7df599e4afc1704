"""JSON formats for polynomials, polytopes, groups, expressions and specs.

Every loader validates against a JSON schema first and then checks the
semantic constraints a schema cannot express (lengths, bijectivity);
both kinds of failure raise :class:`ValidationError`.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import jsonschema

from .embed import EmbeddingSpec
from .errors import ValidationError
from .groups import PermGroup, parse_cycles, validate_permutation
from .poly import TropPoly
from .polytope import LatticePolytope
from .rational import TropRational, expr_from_json, expr_to_json

RATIONAL = r"^-?[0-9]+(/[0-9]*[1-9][0-9]*)?$"

POLY_SCHEMA = {
    "type": "object",
    "required": ["n", "terms"],
    "properties": {
        "n": {"type": "integer", "minimum": 0},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["exp", "coef"],
                "properties": {
                    "exp": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                    "coef": {"type": "string", "pattern": RATIONAL},
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}

POLYTOPE_SCHEMA = {
    "type": "object",
    "required": ["n", "vertices"],
    "properties": {
        "n": {"type": "integer", "minimum": 0},
        "vertices": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        },
    },
    "additionalProperties": False,
}

GROUP_SCHEMA = {
    "type": "object",
    "required": ["n", "generators"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "generators": {
            "type": "array",
            "items": {
                "oneOf": [
                    {"type": "array", "items": {"type": "integer", "minimum": 1}},
                    {"type": "string"},
                ]
            },
        },
    },
    "additionalProperties": False,
}

EXPR_SCHEMA = {
    "$defs": {
        "expr": {
            "oneOf": [
                {
                    "type": "object",
                    "required": ["gen"],
                    "properties": {"gen": {"type": "array", "items": {"type": "integer", "minimum": 0}}},
                    "additionalProperties": False,
                },
                {
                    "type": "object",
                    "required": ["op", "args"],
                    "properties": {
                        "op": {"enum": ["add", "mul"]},
                        "args": {"type": "array", "minItems": 1, "items": {"$ref": "#/$defs/expr"}},
                    },
                    "additionalProperties": False,
                },
                {
                    "type": "object",
                    "required": ["op", "m", "arg"],
                    "properties": {
                        "op": {"const": "pow"},
                        "m": {"type": "integer", "minimum": 1},
                        "arg": {"$ref": "#/$defs/expr"},
                    },
                    "additionalProperties": False,
                },
                {
                    "type": "object",
                    "required": ["op", "args"],
                    "properties": {
                        "op": {"const": "div"},
                        "args": {
                            "type": "array",
                            "minItems": 2,
                            "maxItems": 2,
                            "items": {"$ref": "#/$defs/expr"},
                        },
                    },
                    "additionalProperties": False,
                },
            ]
        }
    },
    "$ref": "#/$defs/expr",
}

RATIONAL_FN_SCHEMA = {
    "type": "object",
    "required": ["numerator", "denominator"],
    "properties": {"numerator": POLY_SCHEMA, "denominator": POLY_SCHEMA},
    "additionalProperties": False,
}

SPEC_SCHEMA = {
    "type": "object",
    "required": ["group", "e", "f", "m"],
    "properties": {
        "group": GROUP_SCHEMA,
        "e": {"type": "array", "items": POLY_SCHEMA},
        "f": {"type": "array", "items": POLY_SCHEMA},
        "templates": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
        "m": {"type": "integer", "minimum": 0},
    },
    "additionalProperties": False,
}


def validate(obj, schema, what: str):
    try:
        jsonschema.validate(obj, schema)
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path)
        raise ValidationError(f"invalid {what} JSON at '{path}': {exc.message}") from None


def load_json(path) -> object:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ValidationError(f"cannot read JSON from {path}: {exc}") from None


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


# -- polynomials --------------------------------------------------------------


def poly_to_json(f: TropPoly) -> dict:
    return {
        "n": f.n,
        "terms": [{"exp": list(a), "coef": str(f.terms[a])} for a in sorted(f.terms)],
    }


def poly_from_json(obj) -> TropPoly:
    validate(obj, POLY_SCHEMA, "polynomial")
    n = obj["n"]
    seen = set()
    terms = []
    for t in obj["terms"]:
        exp = tuple(t["exp"])
        if len(exp) != n:
            raise ValidationError(f"exponent {list(exp)} has length {len(exp)}, expected n={n}")
        if exp in seen:
            raise ValidationError(f"exponent {list(exp)} appears twice")
        seen.add(exp)
        terms.append((exp, Fraction(t["coef"])))
    return TropPoly(n, terms)


# -- polytopes ----------------------------------------------------------------


def polytope_to_json(A: LatticePolytope) -> dict:
    return {"n": A.n, "vertices": [list(v) for v in A.sorted_vertices()]}


def polytope_from_json(obj) -> LatticePolytope:
    validate(obj, POLYTOPE_SCHEMA, "polytope")
    n = obj["n"]
    for v in obj["vertices"]:
        if len(v) != n:
            raise ValidationError(f"vertex {v} has length {len(v)}, expected n={n}")
    return LatticePolytope(n, obj["vertices"])


# -- groups -------------------------------------------------------------------


def parse_permutation(spec, n: int):
    """A 1-based image list or a cycle-notation string, as 0-based images."""
    if isinstance(spec, str):
        return parse_cycles(spec, n)
    return validate_permutation([i - 1 for i in spec], n)


def group_to_json(G: PermGroup) -> dict:
    return {"n": G.n, "generators": [[i + 1 for i in g] for g in G.generators]}


def group_from_json(obj) -> PermGroup:
    validate(obj, GROUP_SCHEMA, "group")
    n = obj["n"]
    return PermGroup(n, [parse_permutation(g, n) for g in obj["generators"]])


# -- expressions, rational functions, specs -------------------------------------


def expr_from_json_checked(obj):
    validate(obj, EXPR_SCHEMA, "expression")
    return expr_from_json(obj)


def rational_to_json(r: TropRational) -> dict:
    return {"numerator": poly_to_json(r.num), "denominator": poly_to_json(r.den)}


def rational_from_json(obj) -> TropRational:
    validate(obj, RATIONAL_FN_SCHEMA, "rational function")
    num = poly_from_json(obj["numerator"])
    den = poly_from_json(obj["denominator"])
    if num.n != den.n:
        raise ValidationError("numerator and denominator have different n")
    if den.is_zero():
        raise ValidationError("denominator is the zero polynomial")
    return TropRational(num, den)


def spec_to_json(spec: EmbeddingSpec) -> dict:
    return {
        "group": group_to_json(spec.group),
        "e": [poly_to_json(f) for f in spec.e_list],
        "f": [poly_to_json(f) for f in spec.f_list],
        "templates": [list(t) for t in spec.templates],
        "m": spec.m,
    }


def spec_from_json(obj) -> EmbeddingSpec:
    validate(obj, SPEC_SCHEMA, "embedding spec")
    G = group_from_json(obj["group"])
    e_list = tuple(poly_from_json(p) for p in obj["e"])
    f_list = tuple(poly_from_json(p) for p in obj["f"])
    for f in e_list + f_list:
        if f.n != G.n:
            raise ValidationError(f"spec polynomial has n={f.n}, group has n={G.n}")
    if obj["m"] != len(e_list) + len(f_list):
        raise ValidationError("m differs from the number of listed invariants")
    templates = tuple(tuple(t) for t in obj.get("templates", []))
    return EmbeddingSpec(G, e_list, f_list, templates)


__all__ = [
    "dumps",
    "expr_from_json_checked",
    "expr_to_json",
    "group_from_json",
    "group_to_json",
    "load_json",
    "poly_from_json",
    "poly_to_json",
    "polytope_from_json",
    "polytope_to_json",
    "rational_from_json",
    "rational_to_json",
    "spec_from_json",
    "spec_to_json",
]
