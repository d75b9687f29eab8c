import pytest

from hopfforge.expressions import ExpressionError, names_in, parse_poly, parse_scalar, parse_tensor
from hopfforge.field import FieldCtx
from hopfforge.freealg import GenSet, NcPoly, TensorPoly


def test_parse_relation_with_root(gf4: FieldCtx, gx: GenSet) -> None:
    xi = gf4.root(3)
    relation = parse_poly("g*x - xi*x*g", gf4, gx, {"xi": xi})
    g = NcPoly.generator(gf4, gx, "g")
    x = NcPoly.generator(gf4, gx, "x")
    assert relation == g * x - (x * g).scale(xi)


def test_powers_and_parentheses(gf3: FieldCtx, gx: GenSet) -> None:
    g = NcPoly.generator(gf3, gx, "g")
    x = NcPoly.generator(gf3, gx, "x")
    assert parse_poly("x^3 - lambda*(1 - g^3)", gf3, gx, {"lambda": 1}) == x**3 - (g.one() - g**3)
    assert parse_poly("-(x + 1)^2", gf3, gx) == -((x + 1) ** 2)


def test_tensor_expressions(gf3: FieldCtx, gx: GenSet) -> None:
    g = NcPoly.generator(gf3, gx, "g")
    x = NcPoly.generator(gf3, gx, "x")
    delta = parse_tensor("x(#)1 + g(#)x", gf3, gx)
    assert delta == TensorPoly.tensor(x, g.one()) + TensorPoly.tensor(g, x)
    assert parse_tensor("2", gf3, gx) == TensorPoly.unit_of(gf3, gx, 2).scale(2)
    assert parse_tensor("x(#)x(#)1", gf3, gx, rank=3).rank == 3
    with pytest.raises(ExpressionError):
        parse_tensor("x(#)1", gf3, gx, rank=3)
    with pytest.raises(ExpressionError):
        parse_poly("x(#)1", gf3, gx)


def test_scalars_and_negative_powers(gf4: FieldCtx) -> None:
    w = gf4.primitive
    assert parse_scalar("w^-1", gf4, {"w": w}) == w * w
    assert parse_scalar("(1 + w)^2", gf4, {"w": w}) == w
    with pytest.raises(ExpressionError):
        parse_scalar("0^-1", gf4)


def test_printed_polynomials_parse_back(gf4: FieldCtx, gx: GenSet) -> None:
    w = gf4.primitive
    relation = parse_poly("g*x - w*x*g + w^2*g^2", gf4, gx, {"w": w})
    assert parse_poly(str(relation), gf4, gx, {"w": w}) == relation


def test_errors_carry_columns(gf3: FieldCtx, gx: GenSet) -> None:
    with pytest.raises(ExpressionError) as excinfo:
        parse_poly("g*x + gx", gf3, gx)
    assert excinfo.value.column == 6
    with pytest.raises(ExpressionError):
        parse_poly("x^y", gf3, gx)
    with pytest.raises(ExpressionError):
        parse_poly("x^-1", gf3, gx)
    with pytest.raises(ExpressionError):
        parse_poly("(x + 1", gf3, gx)
    with pytest.raises(ExpressionError):
        parse_poly("x $ 1", gf3, gx)


def test_names_in_lists_identifiers() -> None:
    assert list(names_in("g*x - xi*x*g")) == ["g", "x", "xi", "x", "g"]
