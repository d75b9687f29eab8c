import pytest

from hopfforge.hopf import HopfError
from hopfforge.lemmas import Identity, identity_grid, verify_identity, verify_jacobson


@pytest.mark.parametrize("p", [2, 3, 5])
def test_jacobson_expansion(p: int) -> None:
    result = verify_jacobson(p)
    assert result.passed
    assert set(result.data["claims"].values()) == {"0"}
    assert len(result.data["s"]) == p - 1


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("identity", [Identity.GROUP_ADJOINT, Identity.SKEW_PRIMITIVE_POWER])
def test_group_like_identities(identity: Identity, p: int) -> None:
    result = verify_identity(identity, p)
    assert result.passed, [msg.text for msg in result.errors]
    assert result.name == identity.value
    assert result.data["p"] == p


@pytest.mark.parametrize("p", [2, 3])
def test_twisted_adjoint(p: int) -> None:
    result = verify_identity(Identity.TWISTED_ADJOINT, p)
    assert result.passed, [msg.text for msg in result.errors]
    assert set(result.data["params"]) >= {"lambda1", "lambda2", "lambda3"}


@pytest.mark.parametrize("p", [2, 3])
def test_tail_adjoint_with_a_nonvanishing_tail(p: int) -> None:
    result = verify_identity(Identity.TAIL_ADJOINT, p)
    assert result.passed, [msg.text for msg in result.errors]
    assert result.data["params"]["q"] == 5
    assert result.data["params"]["lambda3"] == "1"
    assert set(result.data["claims"].values()) == {"0"}


@pytest.mark.parametrize("p", [2, 3])
def test_tail_adjoint_over_its_grid(p: int) -> None:
    for point in identity_grid(Identity.TAIL_ADJOINT, p):
        result = verify_identity(Identity.TAIL_ADJOINT, p, point)
        assert result.passed, (point, [msg.text for msg in result.errors])


def test_tail_adjoint_rejects_an_ill_defined_coproduct() -> None:
    with pytest.raises(HopfError, match="lambda2"):
        verify_identity(Identity.TAIL_ADJOINT, 3, {"q": 2, "lambda2": 1})
    assert verify_identity(Identity.TAIL_ADJOINT, 3, {"q": 3, "lambda2": 1}).passed
    assert verify_identity(Identity.TAIL_ADJOINT, 3, {"q": 2}).passed
    assert verify_identity(Identity.TAIL_ADJOINT, 2, {"q": 3}).passed


def test_identity_grid_sizes() -> None:
    assert identity_grid(Identity.GROUP_ADJOINT, 3) == [{}]
    assert len(identity_grid(Identity.TWISTED_ADJOINT, 3)) == 8
    central = identity_grid(Identity.CENTRAL_ADJOINT, 3)
    assert len(central) == 12
    assert {point["mu"] for point in central} == {0, 1, 2}
    tail = identity_grid(Identity.TAIL_ADJOINT, 3)
    assert len(tail) == 6
    assert all(point["theta"] == 5 for point in tail if point["lambda2"])
