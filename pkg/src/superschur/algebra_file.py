"""JSON interchange format for algebras (and optional pairs).

    {"name": "...", "even": [...], "odd": [...],
     "brackets": [{"left": "x1", "right": "x2", "value": {"z": "1"}}],
     "ideal": [...], "complement": [...]}

Rationals are always strings ("p/q" or "p"); only one orientation of each
bracket is needed, the other follows from super antisymmetry.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .core import GradedSubspace, SuperAlgebra
from .pairs import PairPresentation

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


class AlgebraFileError(ValueError):
    """Malformed algebra file (bad JSON, schema, labels or rationals)."""


def parse_rational(text) -> Fraction:
    if not isinstance(text, str) or not _RATIONAL.match(text.strip()):
        raise AlgebraFileError(f"expected a rational string 'p/q', got {text!r}")
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise AlgebraFileError(f"zero denominator in {text!r}") from None


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def _labels(data: dict, key: str, required: bool = True) -> list[str] | None:
    if key not in data:
        if required:
            raise AlgebraFileError(f"missing field {key!r}")
        return None
    val = data[key]
    if not isinstance(val, list) or not all(isinstance(x, str) for x in val):
        raise AlgebraFileError(f"field {key!r} must be a list of labels")
    return val


def algebra_from_dict(data: dict) -> tuple[SuperAlgebra, PairPresentation | None, str]:
    if not isinstance(data, dict):
        raise AlgebraFileError("top level must be a JSON object")
    name = data.get("name", "")
    if not isinstance(name, str):
        raise AlgebraFileError("field 'name' must be a string")
    even, odd = _labels(data, "even"), _labels(data, "odd")
    labels = even + odd
    if len(set(labels)) != len(labels):
        raise AlgebraFileError("labels must be unique across even and odd")
    known = set(labels)
    raw = data.get("brackets", [])
    if not isinstance(raw, list):
        raise AlgebraFileError("field 'brackets' must be a list")
    entries, where = [], []
    for k, b in enumerate(raw):
        loc = f"brackets[{k}]"
        if not isinstance(b, dict) or not {"left", "right", "value"} <= set(b):
            raise AlgebraFileError(f"{loc} needs 'left', 'right' and 'value'")
        left, right, value = b["left"], b["right"], b["value"]
        for lab in (left, right):
            if lab not in known:
                raise AlgebraFileError(f"{loc}: unknown label {lab!r}")
        if not isinstance(value, dict):
            raise AlgebraFileError(f"{loc}: 'value' must map labels to rational strings")
        vec = {}
        for lab, q in value.items():
            if lab not in known:
                raise AlgebraFileError(f"{loc}: unknown label {lab!r} in value")
            try:
                vec[lab] = parse_rational(q)
            except AlgebraFileError as e:
                raise AlgebraFileError(f"{loc}: {e}") from None
        entries.append((left, right, vec))
        where.append(loc)
    A = SuperAlgebra.from_brackets(even, odd, entries, where=where)
    ideal = _labels(data, "ideal", required=False)
    comp = _labels(data, "complement", required=False)
    for lab in (ideal or []) + (comp or []):
        if lab not in known:
            raise AlgebraFileError(f"unknown label {lab!r} in ideal/complement")
    pair = None
    if ideal is not None:
        pair = PairPresentation.from_labels(A, ideal, comp)
    elif comp is not None:
        raise AlgebraFileError("'complement' given without 'ideal'")
    return A, pair, name


def parse_algebra_file(path) -> tuple[SuperAlgebra, PairPresentation | None, str]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise AlgebraFileError(f"cannot read {path}: {e}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise AlgebraFileError(f"{path}: invalid JSON: {e}") from None
    return algebra_from_dict(data)


def _labels_of(A: SuperAlgebra, U: GradedSubspace) -> list[str]:
    out = []
    for v in U.vectors:
        support = [k for k, x in enumerate(v) if x]
        if len(support) != 1:
            raise ValueError("only basis-aligned subspaces can be written as label lists")
        out.append(A.names[support[0]])
    return sorted(out, key=A.names.index)


def algebra_to_dict(A: SuperAlgebra, name: str = "", ideal: GradedSubspace | None = None,
                    complement: GradedSubspace | None = None) -> dict:
    data = {
        "name": name,
        "even": list(A.even_names),
        "odd": list(A.odd_names),
        "brackets": [
            {"left": A.names[i], "right": A.names[j],
             "value": {A.names[k]: format_rational(x) for k, x in enumerate(v) if x}}
            for i, j, v in A.brackets()
        ],
    }
    if ideal is not None:
        data["ideal"] = _labels_of(A, ideal)
    if complement is not None:
        data["complement"] = _labels_of(A, complement)
    return data


def dumps(A: SuperAlgebra, name: str = "", **kw) -> str:
    return json.dumps(algebra_to_dict(A, name, **kw), indent=2, ensure_ascii=False) + "\n"


def write_algebra_file(path, A: SuperAlgebra, name: str = "", **kw) -> None:
    Path(path).write_text(dumps(A, name, **kw), encoding="utf-8")
