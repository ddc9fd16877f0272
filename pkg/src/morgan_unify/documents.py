"""JSON documents for posets, involutive posets, and algebras.

Canonical form: fixed field order, cover pairs sorted by element index,
maps keyed in element order.  Parsing accepts a full relation under
"le" or a Hasse diagram under "covers"; serialization always emits
covers, so parse-then-serialize is idempotent.
"""

from __future__ import annotations

import json
from typing import Any, Union

from .algebra import FiniteAlgebra, validate_algebra
from .errors import ValidationError
from .involutive import InvPoset, validate_involutive
from .order import Poset, validate_poset

Structure = Union[Poset, InvPoset, FiniteAlgebra]

KINDS = ("poset", "invposet", "algebra")


def parse_document(data: dict[str, Any]) -> Structure:
    if not isinstance(data, dict):
        raise ValidationError("document must be a JSON object")
    kind = data.get("kind")
    if kind not in KINDS:
        raise ValidationError(f"unknown document kind {kind!r}")
    elements = data.get("elements")
    if not isinstance(elements, list) or not all(isinstance(x, str) for x in elements):
        raise ValidationError("'elements' must be a list of strings")
    if "covers" in data and "le" in data:
        raise ValidationError("give either 'covers' or 'le', not both")
    if "covers" in data:
        pairs, mode = data["covers"], "covers"
    elif "le" in data:
        pairs, mode = data["le"], "le"
    else:
        pairs, mode = [], "covers"
    if not isinstance(pairs, list) or not all(
        isinstance(p, list) and len(p) == 2 for p in pairs
    ):
        raise ValidationError("relation must be a list of [a, b] pairs")
    base = validate_poset(elements, [tuple(p) for p in pairs], mode=mode)

    if kind == "poset":
        return base
    if kind == "invposet":
        inv = data.get("inv")
        if not isinstance(inv, dict):
            raise ValidationError("invposet document needs an 'inv' map")
        return validate_involutive(base, inv)
    neg = data.get("neg")
    if neg is not None and not isinstance(neg, dict):
        raise ValidationError("'neg' must be a map when present")
    return validate_algebra(base, neg)


def _sorted_covers(p: Poset) -> list[list[str]]:
    return [[a, b] for a, b in p.covers()]


def structure_document(s: Structure) -> dict[str, Any]:
    if isinstance(s, Poset):
        return {
            "kind": "poset",
            "elements": list(s.elements),
            "covers": _sorted_covers(s),
        }
    if isinstance(s, InvPoset):
        return {
            "kind": "invposet",
            "elements": list(s.elements),
            "covers": _sorted_covers(s.base),
            "inv": {x: s.i(x) for x in s.elements},
        }
    doc = {
        "kind": "algebra",
        "elements": list(s.elements),
        "covers": _sorted_covers(s.carrier),
    }
    if s.neg is not None:
        doc["neg"] = {x: s.neg[x] for x in s.elements}
    return doc


def dumps(data: dict[str, Any]) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> Structure:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON: {exc}") from exc
    return parse_document(data)
