"""Family files: a self-describing JSON document.

::

    {"field": "C", "n": 2,
     "points": [{"weight": 1.0, "value": [[re, im], [re, im]]}, ...],
     "meta": {"label": "...", "tail_bound": 2e-05}}

REAL families store plain numbers; COMPLEX families store ``[re, im]``
pairs.  Floats are written with ``repr`` so a write/read round trip is
value-identical.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .errors import FrameInputError
from .family import FieldTag, WeightedFamily

__all__ = ["family_to_dict", "family_from_dict", "write_family", "read_family",
           "dumps_family", "loads_family"]


def _reject_constant(name):
    raise FrameInputError(f"non-finite number {name} in family file")


def family_to_dict(fam: WeightedFamily) -> dict:
    points = []
    for w, vec in zip(fam.weights, fam.vectors):
        if fam.field is FieldTag.REAL:
            value = [float(z.real) for z in vec]
        else:
            value = [[float(z.real), float(z.imag)] for z in vec]
        points.append({"weight": float(w), "value": value})
    doc = {"field": fam.field.value, "n": fam.n, "points": points}
    meta = {}
    if fam.label is not None:
        meta["label"] = fam.label
    if fam.tail_bound:
        meta["tail_bound"] = fam.tail_bound
    if meta:
        doc["meta"] = meta
    return doc


def _number(x, where: str) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise FrameInputError(f"{where}: expected a number, got {x!r}")
    x = float(x)
    if not math.isfinite(x):
        raise FrameInputError(f"{where}: non-finite value")
    return x


def family_from_dict(doc) -> WeightedFamily:
    if not isinstance(doc, dict):
        raise FrameInputError("family document must be a JSON object")
    for key in ("field", "n", "points"):
        if key not in doc:
            raise FrameInputError(f"family document is missing {key!r}")
    field = FieldTag.coerce(doc["field"])
    n = doc["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise FrameInputError(f"'n' must be a positive integer, got {n!r}")
    points = doc["points"]
    if not isinstance(points, list) or not points:
        raise FrameInputError("'points' must be a non-empty list")
    weights = np.empty(len(points))
    vectors = np.empty((len(points), n), dtype=complex)
    for i, pt in enumerate(points):
        where = f"point {i}"
        if not isinstance(pt, dict) or "weight" not in pt or "value" not in pt:
            raise FrameInputError(f"{where}: expected an object with 'weight' and 'value'")
        w = _number(pt["weight"], f"{where} weight")
        if w < 0:
            raise FrameInputError(f"{where}: negative weight {w!r}")
        weights[i] = w
        value = pt["value"]
        if not isinstance(value, list) or len(value) != n:
            raise FrameInputError(f"{where}: 'value' must be a list of {n} scalars")
        for k, z in enumerate(value):
            if field is FieldTag.COMPLEX:
                if not isinstance(z, list) or len(z) != 2:
                    raise FrameInputError(
                        f"{where} entry {k}: complex scalars must be [re, im] pairs")
                vectors[i, k] = complex(_number(z[0], f"{where} entry {k}"),
                                        _number(z[1], f"{where} entry {k}"))
            else:
                vectors[i, k] = _number(z, f"{where} entry {k}")
    meta = doc.get("meta") or {}
    if not isinstance(meta, dict):
        raise FrameInputError("'meta' must be an object")
    tail = _number(meta.get("tail_bound", 0.0), "meta tail_bound")
    label = meta.get("label")
    if label is not None and not isinstance(label, str):
        raise FrameInputError("meta label must be a string")
    return WeightedFamily(weights, vectors, field, label=label, tail_bound=tail)


def dumps_family(fam: WeightedFamily) -> str:
    return json.dumps(family_to_dict(fam), allow_nan=False)


def loads_family(text: str) -> WeightedFamily:
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise FrameInputError(f"family file is not valid JSON: {exc}") from None
    return family_from_dict(doc)


def write_family(fam: WeightedFamily, path) -> None:
    Path(path).write_text(dumps_family(fam) + "\n")


def read_family(path) -> WeightedFamily:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FrameInputError(f"cannot read family file {path}: {exc.strerror}") from None
    return loads_family(text)
