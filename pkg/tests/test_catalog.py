from typing import Callable, Tuple

import pytest

from hopfforge.catalog import (
    CatalogError,
    ConstraintViolation,
    Primes,
    admissible,
    available_cases,
    available_yd_rows,
    build_instance,
    constraint_report,
    describe_case,
    enumerate_yd,
    expected_dimension,
    parameter_grid,
    pretty,
    smallest_primes,
    twist,
)
from hopfforge.hopf import HopfPresentation, antipode_order, coradical_filtration, skew_primitives

CaseFactory = Callable[..., HopfPresentation]


def test_cases_are_grouped_by_dimension_class() -> None:
    assert available_cases("pq") == ["CA1", "CA2", "CA3a", "CA3b"]
    assert "AD" in available_cases("pq2")
    assert "BA1" in available_cases("pqr")
    assert set(available_cases()) >= set(available_cases("p2q"))
    with pytest.raises(CatalogError):
        available_cases("p3")


def test_primes_validation() -> None:
    assert Primes.of({"p": 2, "q": 3}) == Primes(2, 3)
    assert Primes.of([2, 3, 5]).label() == "p=2, q=3, r=5"
    with pytest.raises(CatalogError):
        Primes.of([2])
    with pytest.raises(CatalogError):
        expected_dimension("A1", (3, 3))
    with pytest.raises(CatalogError):
        expected_dimension("A1", (4, 3))
    with pytest.raises(CatalogError):
        expected_dimension("BA1", (2, 3))


@pytest.mark.parametrize(
    "case, primes, dimension",
    [("A1", (2, 3), 12), ("AD", (2, 3), 18), ("BA1", (2, 3, 5), 30), ("CA1", (2, 3), 6)],
)
def test_expected_dimension(case: str, primes: Tuple[int, ...], dimension: int) -> None:
    assert expected_dimension(case, primes) == dimension


def test_twist_and_smallest_primes() -> None:
    assert twist(7, 3) == 2
    assert twist(3, 2) == 2
    assert smallest_primes("CA3a") == Primes(3, 2)
    assert smallest_primes("CA3b") == Primes(2, 3)
    assert admissible("CA3a", (3, 2))
    assert not admissible("CA3a", (2, 3))


def test_instance_reaches_expected_dimension() -> None:
    instance = build_instance("A1", (2, 3), {"lambda": 1})
    H = instance.presentation
    assert H.name == "A1[p=2, q=3]"
    assert instance.params == {"lambda": "1"}
    assert instance.warnings == []
    assert H.confluence().confluent
    assert H.dimension == instance.expected_dimension == 12
    assert H.grouplikes == {"g": 6}


def test_twisted_case_is_consistent_when_q_divides_p_minus_one() -> None:
    instance = build_instance("A2", (3, 2), {"lambda": 1})
    assert instance.violations == []
    assert instance.presentation.confluence().confluent
    assert instance.presentation.dimension == 18


def test_defaulted_parameters_are_reported() -> None:
    instance = build_instance("A1", (2, 3))
    assert instance.warnings == ["lambda not set; defaulting to 0"]
    with pytest.raises(CatalogError):
        build_instance("A1", (2, 3), {"mu": 1})
    with pytest.raises(CatalogError):
        build_instance("A1", (2, 3), {"lambda": 2})


@pytest.mark.parametrize("value", [2, "2", -1, "w"])
def test_binary_parameters_are_read_before_reduction(value: object) -> None:
    with pytest.raises(CatalogError, match="ranges over"):
        build_instance("A1", (2, 3), {"lambda": value})
    assert build_instance("A1", (2, 3), {"lambda": " 1 "}).params == {"lambda": "1"}


def test_violated_ambiguity_condition_is_rejected_unless_permissive() -> None:
    with pytest.raises(ConstraintViolation) as excinfo:
        build_instance("A2", (2, 3), {"lambda": 1})
    assert excinfo.value.constraint.statement == "λ = 0"
    instance = build_instance("A2", (2, 3), {"lambda": 1}, strict=False)
    assert len(instance.violations) == 1
    assert instance.warnings[0].startswith("parameters violate λ = 0")
    report = instance.presentation.confluence()
    assert not report.confluent


def test_order_conditions_only_warn() -> None:
    instance = build_instance("CA3b", (2, 3), {"lambda1": 1, "lambda2": 0})
    assert [c.kind for c in instance.violations] == ["order"]
    assert any(text.startswith("parameters violate") for text in instance.warnings)


def test_constraint_report_honours_guards() -> None:
    assert len(constraint_report("CA2")) == 1
    assert len(constraint_report("CA2", (2, 3))) == 1
    assert constraint_report("CA2", (3, 2)) == []


def test_parameter_grid_marks_violations() -> None:
    points = parameter_grid("CA2", (2, 3))
    assert [point.params for point in points] == [{"lambda": 0}, {"lambda": 1}]
    assert [point.admissible for point in points] == [True, False]


def test_describe_case() -> None:
    payload = describe_case("CA3a")
    assert payload["class"] == "pq"
    assert payload["dimension"] == "p*q"
    assert payload["admissible"] == "(p - 1) % q == 0"
    assert payload["constraints"][0]["statement"] == "λ₁ = 0"


def test_pretty_printing() -> None:
    assert pretty("lambda2*lambda3 - lambda3^{{p}}") == "λ₂λ₃ − λ₃^p"
    assert pretty("lambda") == "λ"


@pytest.mark.parametrize(
    "row, primes, count",
    [
        ("A", (2, 3), 6),
        ("B1", (3, 2), 2),
        ("B2", (2, 3), 1),
        ("C", (2, 3), 11),
        ("D", (2, 3), 3),
        ("AA", (2, 3), 2),
        ("AB1", (2, 3), 5),
        ("AB2", (2, 3), 6),
        ("AC", (2, 3), 1),
        ("AD", (2, 3), 1),
        ("BA", (2, 3, 5), 7),
        ("BB", (5, 3, 2), 2),
    ],
)
def test_yetter_drinfeld_counts_match_the_classification(row: str, primes: Tuple[int, ...], count: int) -> None:
    enumeration = enumerate_yd(row, primes)
    assert enumeration.count == enumeration.expected == count


def test_yetter_drinfeld_rows() -> None:
    assert available_yd_rows()[:3] == ["A", "B1", "B2"]
    with pytest.raises(CatalogError):
        enumerate_yd("Z", (2, 3))
    with pytest.raises(CatalogError):
        enumerate_yd("B1", (2, 3))


def test_skew_primitives_of_a_nontrivial_lifting(case_factory: CaseFactory) -> None:
    H = case_factory("A3", (2, 3), {"lambda1": 1, "lambda2": 0})
    assert H.dimension == 12
    space = skew_primitives(H, H.one(), H.generator("g"))
    assert space.dimension == 2
    assert space.contains(H.generator("x"))
    assert space.contains(H.one() - H.generator("g"))
    assert antipode_order(H) == 4


def test_lifting_with_lambda1_set_does_not_resolve(case_factory: CaseFactory) -> None:
    with pytest.raises(ConstraintViolation):
        case_factory("A4b", (2, 3), {"lambda1": 1, "lambda2": 0})
    H = case_factory("A4b", (2, 3), {"lambda1": 1, "lambda2": 0}, strict=False)
    assert not H.confluence().confluent
    assert case_factory("A4b", (2, 3), {"lambda1": 0, "lambda2": 1}).dimension == 12


def test_y_sits_in_filtration_level_p(case_factory: CaseFactory) -> None:
    H = case_factory("D1b", (3, 2), {"lambda1": 0, "lambda2": 0, "lambda3": 0})
    assert H.dimension == 18
    report = coradical_filtration(H)
    assert report.generator_levels == {"g": 0, "x": 1, "y": 3}
    assert report.reaches_top
