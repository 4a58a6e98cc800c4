"""JSON encodings of flag tuples, generating sets and analyses."""

from __future__ import annotations

import json
import os
import tempfile
from fractions import Fraction
from typing import Any

from .exactalg import QQ, Field
from .flags import FLAG_NAMES, Flag, FlagTuple
from .gensets import CompatibleSet, GeneratingSet, LayerRef


def field_to_json(field: Field):
    return "rational" if field.p is None else {"prime": field.p}


def field_from_json(obj) -> Field:
    if obj == "rational":
        return QQ
    if isinstance(obj, dict) and "prime" in obj:
        return Field.prime(int(obj["prime"]))
    raise ValueError(f"unknown field {obj!r}")


def parse_field_option(text: str) -> Field:
    """``rational`` or ``fp:<p>`` as used on the command line."""
    if text in ("rational", "QQ", "Q"):
        return QQ
    if text.startswith("fp:"):
        return Field.prime(int(text[3:]))
    raise ValueError(f"field must be 'rational' or 'fp:<p>', got {text!r}")


def scalar_from_json(field: Field, s: str):
    if field.p is None:
        return Fraction(s)
    x = int(s)
    if not 0 <= x < field.p:
        raise ValueError(f"residue {s} outside [0, {field.p})")
    return x


def vector_to_json(field: Field, v) -> list[str]:
    return [field.format(x) for x in v]


def vector_from_json(field: Field, xs) -> tuple:
    return tuple(scalar_from_json(field, str(x)) for x in xs)


def flags_to_json(t: FlagTuple) -> dict:
    return {
        "field": field_to_json(t.field),
        "d": t.d,
        "flags": [[vector_to_json(t.field, c) for c in f.columns] for f in t],
    }


def flags_from_json(obj: dict) -> FlagTuple:
    field = field_from_json(obj["field"])
    d = int(obj["d"])
    flags = []
    for mat in obj["flags"]:
        cols = tuple(vector_from_json(field, c) for c in mat)
        if len(cols) != d or any(len(c) != d for c in cols):
            raise ValueError(f"flag matrix is not {d}x{d}")
        flags.append(Flag(field, cols))
    return FlagTuple(tuple(flags))


def layer_to_json(r: LayerRef) -> dict:
    return {"flag": FLAG_NAMES[r.flag], "level": r.level}


def layer_from_json(obj) -> LayerRef:
    return LayerRef(FLAG_NAMES.index(obj["flag"]), int(obj["level"]))


def genset_to_json(gs: GeneratingSet, field: Field) -> dict:
    return {
        "size": len(gs),
        "sets": [
            {"layers": [layer_to_json(r) for r in s.layers], "witness": vector_to_json(field, s.witness)}
            for s in gs.sets
        ],
    }


def genset_from_json(obj: dict, field: Field) -> GeneratingSet:
    sets = [
        CompatibleSet(tuple(layer_from_json(r) for r in s["layers"]), vector_from_json(field, s["witness"]))
        for s in obj["sets"]
    ]
    if "size" in obj and obj["size"] != len(sets):
        raise ValueError("size field disagrees with the number of sets")
    return GeneratingSet(sets)


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def load(path) -> Any:
    with open(path) as fh:
        return json.load(fh)


def save(path, obj: Any):
    """Write JSON atomically (temp file then rename)."""
    path = os.fspath(path)
    folder = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=folder, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        fh.write(obj if isinstance(obj, str) else dumps(obj))
    os.replace(tmp, path)
