import pytest

from hopfforge.field import FieldCtx, make_field
from hopfforge.hopf import HopfError, antipode_order
from hopfforge.isomorphism import Family, find_pq_iso, iso_check, pq_family_A, pq_family_B


def test_identity_map_is_an_isomorphism(gf3: FieldCtx) -> None:
    H = pq_family_B(gf3, gf3.one, 2)
    assert H.dimension == 6
    result = iso_check(H, H, {"g": H.generator("g"), "x": H.generator("x")})
    assert result.passed
    assert result.data["rank"] == 6


def test_parameter_change_needs_a_shift(gf3: FieldCtx) -> None:
    H1 = pq_family_B(gf3, gf3.one, 2)
    H2 = pq_family_B(gf3, gf3.zero, 2)
    result = iso_check(H1, H2, {"g": H2.generator("g"), "x": H2.generator("x")})
    assert not result.passed
    assert result.errors[0].text.startswith("relation")


def test_witness_found_after_field_extension() -> None:
    ctx = make_field(3)
    witness = find_pq_iso(Family.B, ctx.one, ctx.zero, 2)
    assert witness is not None
    assert witness.ctx.k == 3
    assert witness.check.passed
    assert witness.to_dict()["field"] == "GF(3^3)"
    assert witness.a**3 - witness.a == 1


def test_witness_search_respects_the_degree_bound() -> None:
    ctx = make_field(3)
    assert find_pq_iso(Family.B, ctx.one, ctx.zero, 2, max_degree=2) is None


def test_family_b_needs_q_dividing_p_minus_one(gf3: FieldCtx) -> None:
    with pytest.raises(HopfError):
        pq_family_B(gf3, gf3.one, 5)


def test_family_a_witness_over_the_base_field(gf4: FieldCtx) -> None:
    witness = find_pq_iso(Family.A, gf4.one, gf4.zero, 3)
    assert witness is not None
    assert witness.ctx.k == gf4.k
    assert witness.b == gf4.one
    assert witness.a**2 + witness.a == gf4.one
    assert witness.check.passed


def test_family_a_antipode_has_order_2p(gf4: FieldCtx, gf9: FieldCtx) -> None:
    assert antipode_order(pq_family_A(gf4, gf4.one, 3)) == 4
    assert antipode_order(pq_family_A(gf9, gf9.zero, 2)) == 6
