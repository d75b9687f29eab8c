from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict

import pytest

from hopfforge.catalog import export_presentation
from hopfforge.presentation import (
    PresentationError,
    dump_presentation,
    load_presentation,
    parse_presentation,
    save_presentation,
)
from hopfforge.verification import verify_presentation


def taft_payload() -> Dict[str, Any]:
    return {
        "name": "Taft(3)",
        "field": {"p": 2, "orders": [3]},
        "generators": [
            {"name": "x", "weight": 1},
            {"name": "g", "grouplike": True, "order": 3},
        ],
        "relations": ["g^3 - 1", "x^3", "g*x - xi*x*g"],
        "coproduct": {"x": "x(#)1 + g(#)x"},
        "counit": {"x": "0"},
    }


def test_presentation_file_defaults() -> None:
    H = parse_presentation(taft_payload())
    assert H.gens.precedence == ("x", "g")
    assert H.gens.weights == (1, 0)
    assert H.group_order == 3
    assert H.counit == {"x": 0, "g": 1}
    assert str(H.coproduct["g"]) == "g(#)g"
    report = verify_presentation(H, expected=9)
    assert report.passed
    assert report.dimension == 9


def test_presentation_round_trip(tmp_path: Path) -> None:
    path = tmp_path / "taft.json"
    path.write_text(json.dumps(taft_payload()))
    H = load_presentation(path)
    copy = tmp_path / "copy.json"
    save_presentation(H, copy)
    again = load_presentation(copy)
    assert again.dimension == H.dimension == 9
    assert dump_presentation(again)["relations"] == dump_presentation(H)["relations"]


def test_exported_case_loads_back() -> None:
    payload = export_presentation("A1", (2, 3), {"lambda": 1})
    assert payload["group_order"] == 6
    assert payload["field"]["p"] == 2
    H = parse_presentation(payload)
    assert H.dimension == 12
    assert H.grouplikes == {"g": 6}


@pytest.mark.parametrize(
    "patch, message",
    [
        ({"generators": [{"name": "x"}, {"name": "g", "grouplike": True}]}, "needs an order"),
        ({"coproduct": {"y": "y(#)1"}}, "unknown generators"),
        ({"relations": ["g^3 - "]}, ""),
        ({"field": {"p": 4, "orders": [3]}}, "prime"),
        ({"interpretation": {"x": [2, 0, 1]}}, "must be a pair"),
        ({"generators": [{"name": "x"}, {"name": "x"}]}, "distinct"),
    ],
)
def test_invalid_presentations(patch: Dict[str, Any], message: str) -> None:
    payload = {**taft_payload(), **patch}
    with pytest.raises(PresentationError) as excinfo:
        parse_presentation(payload)
    assert message in str(excinfo.value)


def test_unreadable_files(tmp_path: Path) -> None:
    with pytest.raises(PresentationError):
        load_presentation(tmp_path / "missing.json")
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    with pytest.raises(PresentationError):
        load_presentation(broken)
