import random
from typing import List

import pytest

from hopfforge.automaton import FactorAutomaton
from hopfforge.expressions import parse_poly
from hopfforge.field import FieldCtx
from hopfforge.freealg import GenSet, NcPoly
from hopfforge.rewrite import (
    OrientationError,
    ReductionOrder,
    check_confluence,
    complete,
    normal_words,
    orient,
)


def _relations(ctx: FieldCtx, gens: GenSet, *texts: str) -> List[NcPoly]:
    scalars = {"xi": ctx.root(3)} if 3 in ctx.roots else {}
    return [parse_poly(text, ctx, gens, scalars) for text in texts]


def test_forbidden_factor_automaton_counts_words() -> None:
    finite = FactorAutomaton(2, [(0, 0), (1, 1), (1, 0)])
    assert finite.find_cycle() is None
    assert sorted(finite.words()) == [(), (0,), (0, 1), (1,)]
    assert finite.count() == 4
    infinite = FactorAutomaton(2, [(0, 0), (1, 1)])
    assert infinite.find_cycle() is not None
    assert infinite.accepts((0, 1, 0, 1))
    assert not infinite.accepts((0, 1, 1))


def test_confluent_skew_group_algebra(gf3: FieldCtx, gx: GenSet) -> None:
    sys = orient(_relations(gf3, gx, "g^2 - 1", "x^3", "g*x + x*g"), gx)
    report = check_confluence(sys)
    assert report.confluent
    assert report.to_dict(gx)["unresolved"] == []
    basis = normal_words(sys)
    assert not basis.infinite
    assert basis.count == 6
    assert basis.format(gx) == ["1", "g", "x", "x*g", "x^2", "x^2*g"]


def test_orientation_moves_the_leading_word_left(gf3: FieldCtx, gx: GenSet) -> None:
    sys = orient(_relations(gf3, gx, "g*x + x*g"), gx)
    assert sys.rules[0].format() == "g*x -> -x*g"
    assert sys.rules[0].witness.startswith("wll")


def test_reduction_is_independent_of_strategy(gf3: FieldCtx, gx: GenSet) -> None:
    sys = orient(_relations(gf3, gx, "g^2 - 1", "x^3", "g*x + x*g"), gx)
    g = NcPoly.generator(gf3, gx, "g")
    x = NcPoly.generator(gf3, gx, "x")
    poly = (g + x) ** 4 + g * x * x * g
    expected = sys.reduce(poly)
    for seed in range(5):
        assert sys.reduce_randomized(poly, random.Random(seed)) == expected


def test_unresolved_overlap_and_completion(gf4: FieldCtx, gx: GenSet) -> None:
    sys = orient(_relations(gf4, gx, "g^3 - 1", "g*x - xi*x*g", "x^2 - x"), gx)
    report = check_confluence(sys)
    assert not report.confluent
    failure = report.failures[0]
    g, x = gx.index("g"), gx.index("x")
    assert failure.word == (g, x, x)
    assert failure.obstruction is not None
    assert set(failure.obstruction.terms) == {(x, g)}
    result = complete(sys)
    assert result.dimension == 3


def test_infinite_presentations_report_a_cycle(gf3: FieldCtx, xy: GenSet) -> None:
    sys = orient(_relations(gf3, xy, "x^2", "y^2"), xy)
    basis = normal_words(sys)
    assert basis.infinite
    assert basis.cycle is not None


def test_affine_interpretations(gf3: FieldCtx, xy: GenSet) -> None:
    with pytest.raises(OrientationError):
        ReductionOrder.affine(xy, {"x": (1, 0)})
    order = ReductionOrder.affine(xy, {"x": (2, 0), "y": (1, 3)})
    assert order.describe() == {"kind": "affine", "interpretation": {"x": [2, 0], "y": [1, 3]}}
    x, y = xy.index("x"), xy.index("y")
    assert order.compare((x,), (y,)) is None
    assert order.compare((x, x), (x,)) == 1
    with pytest.raises(OrientationError) as excinfo:
        orient(_relations(gf3, xy, "x - y"), xy, order)
    assert excinfo.value.tied
