import itertools

import pytest

from hopfforge.field import (
    FieldCtx,
    FieldError,
    Fq,
    divided_binomial,
    divided_xi_binomial,
    embedding,
    extend_field,
    make_field,
    xi_binomial,
    xi_factorial,
    xi_integer,
)


def test_smallest_field_holding_requested_roots(gf4: FieldCtx, gf9: FieldCtx) -> None:
    assert (gf4.p, gf4.k, gf4.order) == (2, 2, 4)
    assert (gf9.p, gf9.k) == (3, 2)
    assert make_field(2, [3, 5]).k == 4
    assert gf4.root(3).order() == 3
    assert gf9.root(4).order() == 4


def test_invalid_fields_are_rejected() -> None:
    with pytest.raises(FieldError):
        make_field(4)
    with pytest.raises(FieldError):
        make_field(3, [3])
    with pytest.raises(FieldError):
        make_field(2, [3], degree=3)


def test_field_axioms_hold_exhaustively(gf9: FieldCtx) -> None:
    elements = list(gf9.elements())
    for a, b in itertools.product(elements, repeat=2):
        assert (a + b) - b == a
        assert a * b == b * a
        if b:
            assert (a / b) * b == a
    for a, b, c in itertools.product(elements[:5], repeat=3):
        assert a * (b + c) == a * b + a * c


def test_division_by_zero(gf4: FieldCtx) -> None:
    with pytest.raises(FieldError):
        gf4.one / gf4.zero


def test_foreign_elements_are_rejected(gf4: FieldCtx, gf3: FieldCtx) -> None:
    with pytest.raises(FieldError):
        gf4.element(gf3.one)


def test_primitive_element_formats_as_w(gf4: FieldCtx) -> None:
    w = gf4.primitive
    assert str(w) == "w"
    assert str(w * w) == "w^2"
    assert str(gf4(1)) == "1"
    assert w.order() == 3


def test_xi_arithmetic_at_a_cube_root(gf4: FieldCtx) -> None:
    xi = gf4.root(3)
    assert xi**3 == 1
    assert 1 + xi + xi**2 == 0
    assert xi_integer(3, xi) == 0
    assert xi_integer(2, xi) == 1 + xi
    assert xi_factorial(3, xi) == 0
    assert xi_binomial(2, 1, xi) == 1 + xi
    assert xi_binomial(3, 1, xi) == 0


def test_xi_binomial_at_one_is_ordinary_binomial() -> None:
    ctx = make_field(7)
    for n in range(7):
        for i in range(n + 1):
            assert xi_binomial(n, i, ctx.one) == [1, 1, 2, 6, 24, 120, 720][n] // (
                [1, 1, 2, 6, 24, 120, 720][i] * [1, 1, 2, 6, 24, 120, 720][n - i]
            ) % 7


def test_divided_binomials() -> None:
    assert [divided_binomial(5, i) for i in range(1, 5)] == [1, 2, 2, 1]
    assert [divided_binomial(3, i) for i in range(1, 3)] == [1, 1]
    for p in (3, 5, 7):
        for i in range(1, p):
            assert (divided_binomial(p, i) * i) % p == (-1) ** (i - 1) % p
    with pytest.raises(FieldError):
        divided_binomial(5, 0)


def test_divided_xi_binomial_avoids_vanishing_denominators(gf4: FieldCtx) -> None:
    xi = gf4.root(3)
    assert divided_xi_binomial(3, 1, xi) == 1
    assert divided_xi_binomial(3, 2, xi) == 1
    with pytest.raises(FieldError):
        divided_xi_binomial(3, 0, xi)


def test_extension_embeds_multiplicatively(gf4: FieldCtx) -> None:
    big = extend_field(gf4, 4)
    assert big.order == 16
    table = embedding(gf4, big)
    assert len(set(table)) == 4
    for a, b in itertools.product(range(4), repeat=2):
        assert table[gf4.mul(a, b)] == big.mul(table[a], table[b])
        assert table[gf4.add(a, b)] == big.add(table[a], table[b])
    with pytest.raises(FieldError):
        extend_field(gf4, 3)


def test_bare_ints_are_prime_field_residues(gf4: FieldCtx) -> None:
    assert gf4.element(2) == 0
    assert gf4.element(5) == 1
    encoded = Fq(gf4, 2)
    assert encoded != 0
    assert gf4.element(encoded) == 2
    assert gf4(encoded) == encoded
