import pytest

from hopfforge.cohomology import taft_algebra, truncated_line
from hopfforge.expressions import parse_poly
from hopfforge.field import FieldCtx
from hopfforge.freealg import GenSet, NcPoly, TensorPoly
from hopfforge.hopf import (
    HopfError,
    antipode_order,
    check_antipode,
    check_bialgebra,
    coradical_filtration,
    derive_antipode,
    group_likes,
    present,
    skew_primitives,
)


def test_taft_algebra_is_a_hopf_algebra(gf4: FieldCtx) -> None:
    H = taft_algebra(gf4, 3)
    assert H.confluence().confluent
    assert H.dimension == 9
    assert check_bialgebra(H).passed
    antipode = derive_antipode(H)
    assert check_antipode(H, antipode).passed
    assert antipode_order(H, antipode) == 6


def test_taft_group_likes_and_skew_primitives(gf4: FieldCtx) -> None:
    H = taft_algebra(gf4, 3)
    report = group_likes(H)
    assert report.certified
    assert report.format(H.gens) == ["1", "g", "g^2"]
    space = skew_primitives(H, H.one(), H.generator("g"))
    assert space.dimension == 2
    assert space.contains(H.generator("x"))
    assert space.contains(H.one() - H.generator("g"))
    assert not space.contains(H.generator("x") * H.generator("x"))


def test_taft_coradical_filtration(gf4: FieldCtx) -> None:
    H = taft_algebra(gf4, 3)
    report = coradical_filtration(H, taft_wilson=True)
    assert report.dims == [3, 6, 9]
    assert report.reaches_top
    assert report.generator_levels == {"x": 1, "g": 0}
    assert report.taft_wilson is True


def test_truncated_line(gf3: FieldCtx) -> None:
    H = truncated_line(gf3)
    assert H.dimension == 3
    assert check_bialgebra(H).passed
    antipode = derive_antipode(H)
    assert str(antipode["x"]) == "-x"
    assert antipode_order(H, antipode) == 2
    filtration = coradical_filtration(H)
    assert filtration.dims == [1, 2, 3]
    assert filtration.level_of == {"1": 0, "x": 1, "x^2": 2}


def test_coproduct_is_extended_multiplicatively(gf3: FieldCtx) -> None:
    H = truncated_line(gf3)
    x = H.generator("x")
    one = H.one()
    expected = H.tensor(x * x, one) + H.tensor(x, x).scale(2) + H.tensor(one, x * x)
    assert H.delta(x * x) == expected
    assert H.epsilon(x * x + one) == 1


def test_bialgebra_check_reports_incompatible_relations(gf3: FieldCtx) -> None:
    gens = GenSet.create(("x",), weights={"x": 1})
    x = NcPoly.generator(gf3, gens, "x")
    one = x.one()
    H = present(
        "bad",
        gf3,
        gens,
        [parse_poly("x^2 - 1", gf3, gens)],
        {"x": TensorPoly.tensor(x, one) + TensorPoly.tensor(one, x)},
        {"x": 0},
        {},
    )
    result = check_bialgebra(H)
    assert not result.passed
    texts = [msg.text for msg in result.errors]
    assert any(text.startswith("coproduct does not respect") for text in texts)
    assert any(text.startswith("counit does not respect") for text in texts)


def test_present_requires_structure_maps(gf3: FieldCtx) -> None:
    gens = GenSet.create(("x",), weights={"x": 1})
    x = NcPoly.generator(gf3, gens, "x")
    with pytest.raises(HopfError):
        present("incomplete", gf3, gens, [x**3], {}, {"x": 0}, {})


def test_taft_coproduct_is_linear_over_the_extension(gf4: FieldCtx) -> None:
    H = taft_algebra(gf4, 3)
    xi = gf4.root(3)
    x, g = H.generator("x"), H.generator("g")
    assert H.delta(x.scale(xi)) == H.delta(x).scale(xi)
    assert not H.reduce(H.delta(g * x - (x * g).scale(xi)))
    antipode = derive_antipode(H)
    assert H.apply_antipode(x.scale(xi), antipode) == H.apply_antipode(x, antipode).scale(xi)
