from __future__ import annotations

from typing import Callable, Mapping, Optional, Sequence

import pytest

from hopfforge.catalog import build_instance
from hopfforge.field import FieldCtx, make_field
from hopfforge.freealg import GenSet
from hopfforge.hopf import HopfPresentation


@pytest.fixture()
def gf3() -> FieldCtx:
    return make_field(3)


@pytest.fixture()
def gf4() -> FieldCtx:
    return make_field(2, [3])


@pytest.fixture()
def gf9() -> FieldCtx:
    return make_field(3, [2, 4])


@pytest.fixture()
def xy() -> GenSet:
    return GenSet.create(("x", "y"), weights={"x": 1, "y": 1})


@pytest.fixture()
def gx() -> GenSet:
    return GenSet.create(("g", "x"), precedence=("x", "g"), weights={"x": 1})


@pytest.fixture()
def case_factory() -> Callable[..., HopfPresentation]:
    def _factory(
        case: str,
        primes: Sequence[int],
        params: Optional[Mapping[str, object]] = None,
        strict: bool = True,
    ) -> HopfPresentation:
        return build_instance(case, primes, params, strict=strict).presentation

    return _factory
