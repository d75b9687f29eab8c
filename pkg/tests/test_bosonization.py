import pytest

from hopfforge.bosonization import (
    GroupData,
    YDCompatibilityError,
    YDGenerator,
    YDRealization,
    bosonize,
    compatibility_problems,
)
from hopfforge.field import FieldCtx
from hopfforge.hopf import check_bialgebra


def _quantum_plane(ctx: FieldCtx, second: int) -> YDRealization:
    xi = ctx.root(3)
    return YDRealization(
        GroupData.cyclic(3),
        (
            YDGenerator("x", ("g",), {"g": xi}),
            YDGenerator("y", ("g",), {"g": xi**second}),
        ),
        label="plane",
    )


def test_quantum_plane_bosonization(gf4: FieldCtx) -> None:
    yd = _quantum_plane(gf4, 2)
    assert compatibility_problems(gf4, yd) == []
    assert yd.braiding(0, 1) * yd.braiding(1, 0) == 1
    H = bosonize(gf4, yd, name="plane")
    assert H.confluence().confluent
    assert H.dimension == 27
    assert H.group_order == 3
    assert check_bialgebra(H).passed


def test_asymmetric_braiding_is_rejected(gf4: FieldCtx) -> None:
    yd = _quantum_plane(gf4, 1)
    problems = compatibility_problems(gf4, yd)
    assert problems == ["braiding of x and y is not symmetric"]
    with pytest.raises(YDCompatibilityError) as excinfo:
        bosonize(gf4, yd)
    assert excinfo.value.problems == problems


def test_character_must_respect_group_relations(gf3: FieldCtx) -> None:
    yd = YDRealization(GroupData.cyclic(3), (YDGenerator("x", (), {"g": gf3(2)}),))
    problems = compatibility_problems(gf3, yd)
    assert any(problem.startswith("character of x does not respect") for problem in problems)


def test_describe_lists_degrees_and_characters(gf4: FieldCtx) -> None:
    payload = _quantum_plane(gf4, 2).describe()
    assert payload["label"] == "plane"
    assert [gen["degree"] for gen in payload["generators"]] == ["g", "g"]
