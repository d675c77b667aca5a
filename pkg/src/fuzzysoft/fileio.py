"""Loading and saving fuzzy soft sets as JSON documents.

Document shape::

    {
      "universe": ["u1", "u2"],
      "parameters": {
        "a1":    {"u1": 0.3, "u2": 0.7},
        "a1*b1": {"u1": 0.5, "u2": 0.2}
      }
    }

A parameter key is the canonical text of its tag: atomic labels joined
with ``*`` in sorted order (non-canonical key order is accepted on load
and re-canonicalized).  Every universe element must appear under every
parameter -- there are no implicit zero memberships.  Saving is
deterministic: universe in stored order, tags sorted, values rendered
with the shortest decimal that round-trips, so load(save(s)) == s
bit-exactly.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import DocumentError, ValidationError
from .sets import FuzzySet, FuzzySoftSet, Universe
from .tags import ParamTag


def fss_to_document(fss: FuzzySoftSet) -> dict:
    """Plain-dict form of a fuzzy soft set, with deterministic ordering."""
    parameters = {}
    for tag, fuzzy in fss.assignments:
        parameters[tag.text] = {
            element: value
            for element, value in zip(fss.universe.elements, fuzzy.memberships)
        }
    return {"universe": list(fss.universe.elements), "parameters": parameters}


def document_to_fss(doc, source: str = "document") -> FuzzySoftSet:
    """Validate a decoded JSON document and build the fuzzy soft set.

    Raises ``DocumentError`` with the JSON path of the offending field.
    """
    if not isinstance(doc, dict):
        raise DocumentError(f"{source} must be a JSON object, got {type(doc).__name__}")
    unknown = sorted(set(doc) - {"universe", "parameters"})
    if unknown:
        raise DocumentError(f"unknown top-level keys {unknown}", json_path=unknown[0])
    if "universe" not in doc:
        raise DocumentError("missing required key 'universe'", json_path="universe")
    if "parameters" not in doc:
        raise DocumentError("missing required key 'parameters'", json_path="parameters")

    raw_universe = doc["universe"]
    if not isinstance(raw_universe, list) or not raw_universe:
        raise DocumentError("'universe' must be a non-empty array of strings",
                            json_path="universe")
    for index, element in enumerate(raw_universe):
        if not isinstance(element, str) or not element:
            raise DocumentError(
                f"universe element must be a non-empty string, got {element!r}",
                json_path=f"universe[{index}]",
            )
        if element in raw_universe[:index]:
            raise DocumentError(f"duplicate universe element {element!r}",
                                json_path=f"universe[{index}]")
    universe = Universe(tuple(raw_universe))

    raw_parameters = doc["parameters"]
    if not isinstance(raw_parameters, dict) or not raw_parameters:
        raise DocumentError("'parameters' must be a non-empty object",
                            json_path="parameters")
    assignments: list[tuple[ParamTag, FuzzySet]] = []
    seen: dict[ParamTag, str] = {}
    for key, mapping in raw_parameters.items():
        path = f"parameters.{key}"
        try:
            tag = ParamTag.parse(key)
        except ValidationError as err:
            raise DocumentError(f"bad parameter tag {key!r}: {err}", json_path=path) from None
        if tag in seen:
            raise DocumentError(
                f"parameter keys {seen[tag]!r} and {key!r} are the same canonical tag "
                f"{tag.text!r}",
                json_path=path,
            )
        seen[tag] = key
        if not isinstance(mapping, dict):
            raise DocumentError("parameter value must be an object of memberships",
                                json_path=path)
        missing = [e for e in universe.elements if e not in mapping]
        if missing:
            raise DocumentError(
                f"missing membership for element(s) {missing} (no implicit zeros)",
                json_path=path,
            )
        extra = sorted(set(mapping) - set(universe.elements))
        if extra:
            raise DocumentError(f"element {extra[0]!r} is not in the universe",
                                json_path=f"{path}.{extra[0]}")
        values = []
        for element in universe.elements:
            value = mapping[element]
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise DocumentError(
                    f"membership must be a number, got {value!r}",
                    json_path=f"{path}.{element}",
                )
            if not 0.0 <= float(value) <= 1.0:
                raise DocumentError(
                    f"membership {value!r} is outside [0, 1]",
                    json_path=f"{path}.{element}",
                )
            values.append(float(value))
        assignments.append((tag, FuzzySet(universe, tuple(values))))
    return FuzzySoftSet(universe, tuple(assignments))


def load_fss(path: str | Path) -> FuzzySoftSet:
    """Read and validate a fuzzy soft set document from a JSON file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as err:
        raise DocumentError(f"cannot read {path}: {err}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise DocumentError(f"{path} is not valid JSON: {err}") from None
    return document_to_fss(doc, source=str(path))


def save_fss(fss: FuzzySoftSet, path: str | Path) -> None:
    """Write a fuzzy soft set document; output bytes are deterministic."""
    path = Path(path)
    document = fss_to_document(fss)
    with path.open("w", encoding="utf-8") as handle:
        json.dump(document, handle, indent=2)
        handle.write("\n")
