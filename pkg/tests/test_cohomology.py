import pytest

from hopfforge.cohomology import (
    BudgetExceeded,
    CoalgebraError,
    Coalgebra,
    cobar_dims,
    cohomology_dims,
    graded_cohomology_dims,
    skew_primitive_agreement,
    spec_from,
    taft_algebra,
    truncated_line,
)
from hopfforge.field import FieldCtx
from hopfforge.hopf import skew_primitives


def test_truncated_line_has_one_class_per_degree(gf3: FieldCtx) -> None:
    H = truncated_line(gf3)
    spec = spec_from(H, "1", "1")
    for n in (1, 2):
        report = cohomology_dims(H, spec, n)
        assert report.dim_h == 1
        assert cobar_dims(H, n).dim_h == 1


def test_adams_grading_of_truncated_line(gf3: FieldCtx) -> None:
    H = truncated_line(gf3)
    spec = spec_from(H, "1", "1")
    assert graded_cohomology_dims(H, spec, 1).adams == {1: 1}
    report = graded_cohomology_dims(H, spec, 2)
    assert report.adams == {3: 1}
    assert report.to_dict()["adams"] == {"3": 1}


def test_first_cohomology_matches_skew_primitives(gf4: FieldCtx) -> None:
    H = taft_algebra(gf4, 3)
    spec = spec_from(H, "1", "g")
    report = cohomology_dims(H, spec, 1)
    assert report.to_dict() == {"g": "1", "h": "g", "n": 1, "dimZ": report.dim_z, "dimB": 1, "dimH": 1}
    space = skew_primitives(H, H.one(), H.generator("g"))
    assert skew_primitive_agreement(H, spec, space.dimension)


def test_memory_budget_is_enforced(gf3: FieldCtx) -> None:
    H = truncated_line(gf3)
    with pytest.raises(BudgetExceeded) as excinfo:
        cohomology_dims(H, spec_from(H, "1", "1"), 2, budget=10)
    assert excinfo.value.required == 27


def test_coefficients_must_be_group_like(gf3: FieldCtx) -> None:
    H = truncated_line(gf3)
    with pytest.raises(CoalgebraError):
        spec_from(H, "1 + x", "1")
    with pytest.raises(CoalgebraError):
        cohomology_dims(H, spec_from(H, "x", "1"), 1)


def test_subcoalgebra_must_be_closed(gf3: FieldCtx) -> None:
    C = Coalgebra.from_presentation(truncated_line(gf3))
    one, x, x2 = C.basis
    assert C.subcoalgebra([one, x]).dimension == 2
    with pytest.raises(CoalgebraError):
        C.subcoalgebra([x])


def test_taft_second_cohomology_lives_at_the_trivial_character(gf4: FieldCtx) -> None:
    H = taft_algebra(gf4, 3)
    dims = {h: cohomology_dims(H, spec_from(H, "1", h), 2).dim_h for h in ("1", "g", "g^2")}
    assert dims == {"1": 1, "g": 0, "g^2": 0}
