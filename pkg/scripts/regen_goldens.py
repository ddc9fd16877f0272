#!/usr/bin/env python3
"""Regenerate the golden JSON documents under tests/data/.

Run from the repository root after changing serialization or the
gallery instances; the test suite asserts byte-identical round trips
against these files.
"""

from __future__ import annotations

import pathlib

from morgan_unify import DIAMOND, validate_involutive, validate_poset
from morgan_unify.documents import dumps, structure_document
from morgan_unify.gallery import (
    crown_poset,
    free_demorgan_one,
    k1_pattern_instance,
    k2_pattern_instance,
    m1_pattern_instance,
    m2_pattern_instance,
)

DATA = pathlib.Path(__file__).resolve().parent.parent / "tests" / "data"


def main() -> None:
    DATA.mkdir(parents=True, exist_ok=True)
    goldens = {
        "diamond.json": DIAMOND,
        "crown.json": crown_poset(),
        "empty.json": validate_poset([], []),
        "antichain2.json": validate_poset(["a", "b"], []),
        "antichain2_swap.json": validate_involutive(
            validate_poset(["a", "b"], []), {"a": "b", "b": "a"}
        ),
        "fm1.json": free_demorgan_one(),
        "k1_pattern.json": k1_pattern_instance(),
        "k2_pattern.json": k2_pattern_instance(),
        "m1_pattern.json": m1_pattern_instance(),
        "m2_pattern.json": m2_pattern_instance(),
    }
    for name, structure in goldens.items():
        path = DATA / name
        path.write_text(dumps(structure_document(structure)), encoding="utf-8")
        print("wrote", path)


if __name__ == "__main__":
    main()
