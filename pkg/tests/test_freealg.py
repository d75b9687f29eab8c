import pytest

from hopfforge.field import FieldCtx
from hopfforge.freealg import (
    FreeAlgebraError,
    GenSet,
    NcPoly,
    TensorPoly,
    UnassignedGeneratorError,
    ad_L_power,
    ad_R_power,
    commutator,
    format_word,
    jacobson_s,
    substitute,
    two_letter_algebra,
)


def test_genset_validation() -> None:
    with pytest.raises(FreeAlgebraError):
        GenSet.create(("x", "x"))
    with pytest.raises(FreeAlgebraError):
        GenSet.create(("x", "y"), precedence=("x", "z"))
    with pytest.raises(FreeAlgebraError):
        GenSet.create(("x",), weights={"x": -1})


def test_words_order_by_weight_then_length_then_precedence(gx: GenSet) -> None:
    g, x = gx.index("g"), gx.index("x")
    assert gx.key((x,)) > gx.key((g, g))
    assert gx.key((g, g)) > gx.key((g,))
    assert gx.key((g, x)) > gx.key((x, g))
    assert format_word(gx, (x, x, g, x)) == "x^2*g*x"
    assert format_word(gx, ()) == "1"


def test_polynomial_printing(gf3: FieldCtx, xy: GenSet) -> None:
    x = NcPoly.generator(gf3, xy, "x")
    y = NcPoly.generator(gf3, xy, "y")
    assert str((x + y) ** 2) == "y^2 + y*x + x*y + x^2"
    assert str(x - y) == "-y + x"
    assert str(commutator(x, y)) == "-y*x + x*y"
    assert str(NcPoly.zero(gf3, xy)) == "0"
    assert str(x.one().scale(2)) == "-1"


def test_arithmetic_cancels_in_characteristic(gf3: FieldCtx, xy: GenSet) -> None:
    x = NcPoly.generator(gf3, xy, "x")
    assert (x + x + x).is_zero()
    assert (x * 3).is_zero()
    assert x**0 == 1
    with pytest.raises(FreeAlgebraError):
        x ** -1


def test_tensor_printing_and_maps(gf3: FieldCtx, xy: GenSet) -> None:
    x = NcPoly.generator(gf3, xy, "x")
    one = x.one()
    delta = TensorPoly.tensor(x, one) + TensorPoly.tensor(one, x)
    assert str(delta) == "x(#)1 + 1(#)x"
    assert delta.swap() == delta
    assert delta.multiply_out() == x * 2
    counit = delta.contract(0, lambda word: 0 if word else 1)
    assert counit == x


def test_tensor_multiplication_is_componentwise(gf3: FieldCtx, xy: GenSet) -> None:
    x = NcPoly.generator(gf3, xy, "x")
    y = NcPoly.generator(gf3, xy, "y")
    product = TensorPoly.tensor(x, y) * TensorPoly.tensor(y, x)
    assert product == TensorPoly.tensor(x * y, y * x)


def test_substitute_hom_and_antihom(gf3: FieldCtx, xy: GenSet) -> None:
    x = NcPoly.generator(gf3, xy, "x")
    y = NcPoly.generator(gf3, xy, "y")
    swap = {"x": y, "y": x}
    assert substitute(x * y, swap) == y * x
    assert substitute(x * y, swap, antihom=True) == x * y
    with pytest.raises(UnassignedGeneratorError):
        substitute(x * y, {"x": y})


def test_adjoint_powers(gf3: FieldCtx, xy: GenSet) -> None:
    x = NcPoly.generator(gf3, xy, "x")
    y = NcPoly.generator(gf3, xy, "y")
    assert ad_R_power(x, y, 1) == commutator(x, y)
    assert ad_L_power(x, y, 2) == commutator(x, commutator(x, y))
    assert ad_R_power(x, y, 0) == x


def test_jacobson_polynomial_in_characteristic_two() -> None:
    ctx, gens = two_letter_algebra(2)
    a = NcPoly.generator(ctx, gens, "a")
    b = NcPoly.generator(ctx, gens, "b")
    assert jacobson_s(2) == [a * b + b * a]
    assert len(jacobson_s(5)) == 4


def test_extension_coefficients_survive_scaling(gf4: FieldCtx, xy: GenSet) -> None:
    xi = gf4.root(3)
    x = NcPoly.generator(gf4, xy, "x")
    y = NcPoly.generator(gf4, xy, "y")
    scaled = x.scale(xi)
    assert scaled.coefficient(xy.word("x")) == xi
    assert x.scale_encoded(xi.value) == scaled
    assert x * xi == scaled
    assert substitute(scaled + y, {"x": y, "y": x}) == y.scale(xi) + x
    pair = TensorPoly.tensor(x, y).scale(xi)
    assert pair.coefficient((xy.word("x"), xy.word("y"))) == xi
    assert TensorPoly.tensor(x, y).scale_encoded(xi.value) == pair
