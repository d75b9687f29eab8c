"""Instantiate catalog entries at concrete primes and parameters.

Entries live in :mod:`hopfforge.catalog_data` as templates; this module renders
them with Jinja2, parses the result with the expression grammar and hands the
relations and coproducts to :func:`hopfforge.hopf.present`.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import galois
from jinja2 import Environment, StrictUndefined
from jinja2.exceptions import TemplateError, UndefinedError
from loguru import logger

from .bosonization import GroupData, YDGenerator, YDRealization, compatibility_problems
from .catalog_data import (
    DIMENSIONS,
    PRIME_ROLES,
    CaseData,
    ConstraintData,
    GroupTemplate,
    ParamData,
    TailData,
    YDRowData,
    available_yd_rows,
    get_case,
    get_group,
    get_yd_row,
)
from .catalog_data import available_cases as _all_cases
from .expressions import ExpressionError, parse_poly, parse_scalar, parse_tensor
from .field import FieldCtx, Fq, divided_binomial, divided_xi_binomial, make_field
from .freealg import GenSet, NcPoly, TensorPoly
from .hopf import HopfPresentation, TailKind, coproduct_tail, present
from .presentation import dump_presentation
from .rewrite import ReductionOrder

ParamValue = Union[int, str, Fq]

_ENV = Environment(autoescape=False, undefined=StrictUndefined)

_GREEK = {
    "lambda": "λ",
    "alpha": "α",
    "beta": "β",
    "gamma": "γ",
    "mu": "μ",
    "nu": "ν",
    "xi": "ξ",
    "zeta": "ζ",
    "theta": "θ",
    "eta": "η",
}
_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
_NAME = re.compile(r"\b([A-Za-z]+)(\d*)\b")
_EXPONENT = re.compile(r"\^\{\{([^}]*)\}\}")
_PRIMES_BOUND = 60


class CatalogError(Exception):
    """Raised for unknown cases, inadmissible primes and out-of-domain parameters."""


class ConstraintViolation(CatalogError):
    """Raised by strict instantiation when a parameter point violates a stated condition."""

    def __init__(self, case: str, constraint: "Constraint") -> None:
        super().__init__(f"{case}: parameters violate {constraint.statement} ({constraint.anchor!r})")
        self.case = case
        self.constraint = constraint


@dataclass(frozen=True, slots=True)
class Primes:
    p: int
    q: int
    r: Optional[int] = None

    def as_dict(self) -> Dict[str, int]:
        values = {"p": self.p, "q": self.q}
        if self.r is not None:
            values["r"] = self.r
        return values

    def label(self) -> str:
        return ", ".join(f"{name}={value}" for name, value in self.as_dict().items())

    @classmethod
    def of(cls, values: Union["Primes", Sequence[int], Mapping[str, int]]) -> "Primes":
        if isinstance(values, Primes):
            return values
        if isinstance(values, Mapping):
            return cls(int(values["p"]), int(values["q"]), values.get("r"))
        items = [int(value) for value in values]
        if len(items) not in (2, 3):
            raise CatalogError(f"expected two or three primes, got {items}")
        return cls(*items)


@dataclass(frozen=True, slots=True)
class Constraint:
    """One parameter condition with the sentence it comes from."""

    expr: str
    statement: str
    anchor: str
    kind: str
    when: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"statement": self.statement, "kind": self.kind, "anchor": self.anchor}
        if self.when:
            payload["when"] = self.when
        return payload


@dataclass(slots=True)
class Instance:
    """A case rendered at concrete primes and parameters."""

    case: str
    primes: Primes
    params: Dict[str, str]
    presentation: HopfPresentation
    expected_dimension: int
    warnings: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    violations: List[Constraint] = field(default_factory=list)


@dataclass(slots=True)
class GridPoint:
    params: Dict[str, int]
    violations: List[str] = field(default_factory=list)

    @property
    def admissible(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict[str, Any]:
        return {"params": dict(self.params), "violations": list(self.violations)}


@dataclass(slots=True)
class YDEnumeration:
    row: str
    primes: Primes
    ctx: FieldCtx
    realizations: List[YDRealization]
    expected: int

    @property
    def count(self) -> int:
        return len(self.realizations)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "row": self.row,
            "primes": self.primes.as_dict(),
            "count": self.count,
            "expected": self.expected,
            "realizations": [yd.describe() for yd in self.realizations],
        }


# -- template helpers -----------------------------------------------------------------


def _render(text: str, context: Mapping[str, Any]) -> str:
    try:
        return _ENV.from_string(text).render(**context)
    except TemplateError as exc:
        raise CatalogError(f"cannot render {text!r}: {exc}") from exc


def _evaluate(text: str, context: Mapping[str, Any]) -> Any:
    try:
        return _ENV.compile_expression(text, undefined_to_none=False)(**context)
    except UndefinedError:
        raise
    except TemplateError as exc:
        raise CatalogError(f"cannot evaluate {text!r}: {exc}") from exc


def _holds(text: Optional[str], context: Mapping[str, Any]) -> Optional[bool]:
    """Truth of an optional condition; ``None`` when it mentions unknown names."""

    if not text:
        return True
    try:
        return bool(_evaluate(text, context))
    except UndefinedError:
        return None


def pretty(expr: str) -> str:
    """``lambda2*lambda3 - lambda3^{{p}}`` -> ``λ₂λ₃ - λ₃^p``."""

    def exponent(match: "re.Match[str]") -> str:
        inner = match.group(1).strip()
        return f"^{inner}" if inner.isalnum() else f"^({inner})"

    text = _EXPONENT.sub(exponent, expr)
    text = text.replace("{{", "").replace("}}", "").replace(" ", "")

    def name(match: "re.Match[str]") -> str:
        word, index = match.group(1), match.group(2)
        head = _GREEK.get(word, word)
        return head + index.translate(_SUBSCRIPTS) if head != word else word + index

    text = _NAME.sub(name, text)
    text = re.sub(r"(?<=[^\d(])\*|\*(?=[^\d])", "", text)
    text = re.sub(r"(?<=[\w₀-₉)])([+-])(?=\S)", r" \1 ", text)
    return text.replace("-", "−")


def _statement(data: ConstraintData, context: Optional[Mapping[str, Any]]) -> str:
    expr = data["expr"]
    if context is not None:
        try:
            expr = _render(expr, context)
        except CatalogError:
            pass
    return f"{pretty(expr)} = 0"


def _constraint(data: ConstraintData, context: Optional[Mapping[str, Any]] = None) -> Constraint:
    return Constraint(
        expr=data["expr"],
        statement=_statement(data, context),
        anchor=data.get("anchor", ""),
        kind=data.get("kind", "ambiguity"),
        when=data.get("when"),
    )


# -- primes ---------------------------------------------------------------------------


def _entry(case_id: str) -> CaseData:
    entry = get_case(case_id)
    if entry is None:
        raise CatalogError(f"unknown case '{case_id}'")
    return entry


def _group(entry: CaseData) -> GroupTemplate:
    group = get_group(entry["group"])
    if group is None:
        raise CatalogError(f"unknown group '{entry['group']}'")
    return group


def twist(modulus: int, order: int) -> int:
    """Least t >= 2 whose multiplicative order modulo ``modulus`` is exactly ``order``."""

    for t in range(2, modulus):
        power, k = t % modulus, 1
        while power != 1:
            power = power * t % modulus
            k += 1
        if k == order:
            return t
    raise CatalogError(f"no element of order {order} modulo {modulus}")


def _check_primes(dim: str, primes: Primes) -> None:
    roles = PRIME_ROLES[dim]
    values = primes.as_dict()
    missing = [role for role in roles if role not in values]
    extra = [role for role in values if role not in roles]
    if missing or extra:
        raise CatalogError(f"this class takes the primes {', '.join(roles)}; got {primes.label()}")
    for role, value in values.items():
        if value < 2 or not galois.is_prime(value):
            raise CatalogError(f"{role}={value} is not prime")
    if len(set(values.values())) != len(values):
        raise CatalogError(f"primes must be distinct; got {primes.label()}")


def _base_context(entry: CaseData, primes: Primes) -> Dict[str, Any]:
    _check_primes(entry["dim"], primes)
    context: Dict[str, Any] = dict(primes.as_dict())
    group = _group(entry)
    admissible = group.get("admissible")
    if admissible and not _holds(admissible, context):
        raise CatalogError(f"group {group['title']} needs {admissible}; got {primes.label()}")
    twist_data = group.get("twist")
    if twist_data:
        context["t"] = twist(int(_evaluate(twist_data["modulus"], context)), int(_evaluate(twist_data["order"], context)))
    return context


def _int_values(data: ParamData, context: Mapping[str, Any]) -> List[int]:
    return [int(value) for value in _evaluate(data.get("values", "[0]"), context)]


def _admissible(entry: CaseData, context: Mapping[str, Any]) -> bool:
    return bool(_holds(entry.get("admissible"), context))


def _int_choices(entry: CaseData, context: Mapping[str, Any]) -> Iterator[Dict[str, int]]:
    int_params = [data for data in entry.get("params", []) if data["domain"] == "int"]
    ranges = [_int_values(data, context) for data in int_params]
    for values in itertools.product(*ranges):
        choice = {data["name"]: value for data, value in zip(int_params, values)}
        if _admissible(entry, {**context, **choice}):
            yield choice


def _candidate_pairs() -> Iterator[Tuple[int, ...]]:
    primes = list(galois.primes(_PRIMES_BOUND))
    for j, larger in enumerate(primes):
        for smaller in primes[:j]:
            yield (smaller, larger)
            yield (larger, smaller)


def _candidate_triples() -> Iterator[Tuple[int, ...]]:
    primes = list(galois.primes(_PRIMES_BOUND // 4))
    triples = [t for t in itertools.permutations(primes, 3)]
    triples.sort(key=lambda t: (t[0] * t[1] * t[2], t))
    yield from triples


def _primes_admissible(entry: CaseData, primes: Primes) -> bool:
    try:
        context = _base_context(entry, primes)
    except CatalogError:
        return False
    return next(_int_choices(entry, context), None) is not None


def smallest_primes(case_id: str) -> Primes:
    """First admissible prime tuple in the fixed scan order."""

    entry = _entry(case_id)
    candidates = _candidate_triples() if entry["dim"] == "pqr" else _candidate_pairs()
    for values in candidates:
        primes = Primes(*values)
        if _primes_admissible(entry, primes):
            return primes
    raise CatalogError(f"{case_id}: no admissible primes below {_PRIMES_BOUND}")


def admissible(case_id: str, primes: Union[Primes, Sequence[int]]) -> bool:
    return _primes_admissible(_entry(case_id), Primes.of(primes))


def expected_dimension(case_id: str, primes: Union[Primes, Sequence[int]]) -> int:
    entry = _entry(case_id)
    primes = Primes.of(primes)
    _check_primes(entry["dim"], primes)
    return int(_evaluate(DIMENSIONS[entry["dim"]], primes.as_dict()))


# -- settling parameters --------------------------------------------------------------


@dataclass(slots=True)
class _Setting:
    case: str
    entry: CaseData
    primes: Primes
    context: Dict[str, Any]
    ctx: FieldCtx
    scalars: Dict[str, Fq]
    values: Dict[str, Union[int, Fq]]
    warnings: List[str]
    notes: List[str]


def _field_for(primes: Primes, roots: Mapping[str, str], context: Mapping[str, Any]) -> Tuple[FieldCtx, Dict[str, Fq]]:
    orders = {name: int(_evaluate(order, context)) for name, order in roots.items()}
    ctx = make_field(primes.p, orders.values())
    scalars = {name: ctx.root(order) for name, order in orders.items()}
    scalars["w"] = ctx.primitive
    return ctx, scalars


def _z2_value(name: str, raw: ParamValue, ctx: FieldCtx) -> Fq:
    """Read a {0, 1} parameter from its literal; 2 is rejected even where it vanishes mod p."""

    if isinstance(raw, Fq):
        if raw.value in (0, 1):
            return ctx(raw)
    elif str(raw).strip() in ("0", "1"):
        return ctx(int(str(raw).strip()))
    raise CatalogError(f"{name} ranges over {{0, 1}}; got {raw!r}")


def _settle(case_id: str, primes: Primes, params: Optional[Mapping[str, ParamValue]]) -> _Setting:
    entry = _entry(case_id)
    context = _base_context(entry, primes)
    given = dict(params or {})
    declared = {data["name"]: data for data in entry.get("params", [])}
    unknown = sorted(name for name in given if name not in declared)
    if unknown:
        raise CatalogError(f"{case_id} has no parameter {', '.join(unknown)}; known: {', '.join(declared) or 'none'}")

    warnings: List[str] = []
    notes: List[str] = []
    values: Dict[str, Union[int, Fq]] = {}
    for name, data in declared.items():
        if data["domain"] != "int":
            continue
        allowed = _int_values(data, context)
        if name in given:
            try:
                value = int(str(given[name]))
            except ValueError as exc:
                raise CatalogError(f"{name} must be an integer, got {given[name]!r}") from exc
            if value not in allowed:
                raise CatalogError(f"{name}={value} is outside {data.get('values')} for {primes.label()}")
        else:
            options = [v for v in allowed if _admissible(entry, {**context, **values, name: v})]
            if not options:
                raise CatalogError(f"{case_id}: no admissible value of {name} for {primes.label()}")
            value = options[0]
            warnings.append(f"{name} not set; using {value}")
        values[name] = value
    context.update(values)
    if not _admissible(entry, context):
        chosen = ", ".join(f"{name}={value}" for name, value in values.items())
        raise CatalogError(f"{case_id} needs {entry.get('admissible')}; got {', '.join(filter(None, [primes.label(), chosen]))}")

    ctx, scalars = _field_for(primes, entry.get("roots", {}), context)
    derived: List[ParamData] = []
    for name, data in declared.items():
        if data["domain"] == "int":
            continue
        if name not in given:
            if "derived" in data:
                derived.append(data)
                continue
            warnings.append(f"{name} not set; defaulting to 0")
            scalars[name] = ctx.zero
            values[name] = ctx.zero
            continue
        raw = given[name]
        if data["domain"] == "Z2":
            value = _z2_value(name, raw, ctx)
        else:
            try:
                value = ctx(raw if isinstance(raw, Fq) else parse_scalar(str(raw), ctx, scalars))
            except ExpressionError as exc:
                raise CatalogError(f"cannot read {name}={raw!r}: {exc}") from exc
        scalars[name] = value
        values[name] = value
    for data in derived:
        value = parse_scalar(_render(data["derived"], context), ctx, scalars)
        notes.append(f"{data['name']} not set; using its forced value {value}")
        scalars[data["name"]] = value
        values[data["name"]] = value
    return _Setting(case_id, entry, primes, context, ctx, scalars, values, warnings, notes)


def _violations(setting: _Setting) -> List[Constraint]:
    found: List[Constraint] = []
    for data in setting.entry.get("constraints", []):
        if not _holds(data.get("when"), setting.context):
            continue
        value = parse_scalar(_render(data["expr"], setting.context), setting.ctx, setting.scalars)
        if value:
            found.append(_constraint(data, setting.context))
    return found


# -- presentation assembly ------------------------------------------------------------


def _group_data(group: GroupTemplate, context: Mapping[str, Any]) -> GroupData:
    generators = tuple((name, int(_evaluate(order, context))) for name, order in group["generators"])
    relations = tuple(_render(text, context) for text in group.get("relations", []))
    affine = tuple((name, int(_evaluate(a, context)), 0) for name, a in group.get("affine", {}).items())
    return GroupData(generators, relations, int(_evaluate(group["order"], context)), affine)


def _tail(data: TailData, setting: _Setting, gens: GenSet) -> TensorPoly:
    kind = TailKind(data["kind"])
    q = int(_evaluate(data["length"], setting.context)) if "length" in data else None
    xi = setting.scalars[data["root"]] if "root" in data else None
    return coproduct_tail(kind, setting.ctx, gens, x="x", g=data.get("group"), theta=data.get("theta", 0), q=q, xi=xi)


def _assemble(setting: _Setting) -> HopfPresentation:
    entry, context, ctx, scalars = setting.entry, setting.context, setting.ctx, setting.scalars
    group = _group_data(_group(entry), context)
    v_data = entry["generators"]
    v_names = tuple(data["name"] for data in v_data)
    weights = {data["name"]: int(_evaluate(data.get("weight", "1"), context)) for data in v_data}
    gens = GenSet.create(
        v_names + group.names,
        precedence=v_names + tuple(reversed(group.names)),
        weights=weights,
    )

    def poly(text: str) -> NcPoly:
        rendered = _render(text, context)
        try:
            return parse_poly(rendered, ctx, gens, scalars)
        except ExpressionError as exc:
            raise CatalogError(f"{setting.case}: {exc}") from exc

    relations = [NcPoly.generator(ctx, gens, name) ** order - 1 for name, order in group.generators]
    relations += [poly(text) for text in group.relations]
    relations += [poly(text) for text in entry["relations"]]

    coproduct: Dict[str, TensorPoly] = {}
    for name in group.names:
        g = NcPoly.generator(ctx, gens, name)
        coproduct[name] = TensorPoly.tensor(g, g)
    for data in v_data:
        image = parse_tensor(_render(data["coproduct"], context), ctx, gens, scalars)
        if "tail" in data:
            image = image + _tail(data["tail"], setting, gens)
        coproduct[data["name"]] = image
    counit = {name: 1 for name in group.names}
    counit.update({name: 0 for name in v_names})
    order = (
        ReductionOrder.affine(gens, {name: (a, b) for name, a, b in group.affine})
        if group.affine
        else ReductionOrder.wll(gens)
    )
    name = f"{setting.case}[{setting.primes.label()}]"
    logger.debug("{}: {} relations over {}", name, len(relations), ctx)
    return present(
        name,
        ctx,
        gens,
        relations,
        coproduct,
        counit,
        group.orders(),
        order=order,
        group_order=group.order,
        scalars=scalars,
    )


def _format_values(setting: _Setting) -> Dict[str, str]:
    return {name: str(value) for name, value in setting.values.items()}


def build_instance(
    case_id: str,
    primes: Union[Primes, Sequence[int]],
    params: Optional[Mapping[str, ParamValue]] = None,
    strict: bool = True,
) -> Instance:
    """Render ``case_id``; strict mode rejects violated ambiguity and derived conditions.

    Conditions of kind ``order`` and all conditions in permissive mode are
    reported as warnings instead.
    """

    primes = Primes.of(primes)
    setting = _settle(case_id, primes, params)
    violations = _violations(setting)
    warnings = list(setting.warnings)
    for constraint in violations:
        if strict and constraint.kind != "order":
            raise ConstraintViolation(case_id, constraint)
        warnings.append(f"parameters violate {constraint.statement} ({constraint.anchor})")
    caveat = setting.entry.get("caveat")
    notes = list(setting.notes)
    if caveat:
        notes.append(f"caveat: {caveat}")
    H = _assemble(setting)
    return Instance(
        case=case_id,
        primes=primes,
        params=_format_values(setting),
        presentation=H,
        expected_dimension=expected_dimension(case_id, primes),
        warnings=warnings,
        notes=notes,
        violations=violations,
    )


def instantiate(
    case_id: str,
    primes: Union[Primes, Sequence[int]],
    params: Optional[Mapping[str, ParamValue]] = None,
    strict: bool = True,
) -> HopfPresentation:
    return build_instance(case_id, primes, params, strict).presentation


def constraint_report(case_id: str, primes: Union[Primes, Sequence[int], None] = None) -> List[Constraint]:
    """Conditions of ``case_id``; with primes, only those whose guard can hold."""

    entry = _entry(case_id)
    if primes is None:
        return [_constraint(data) for data in entry.get("constraints", [])]
    context = _base_context(entry, Primes.of(primes))
    return [
        _constraint(data, context)
        for data in entry.get("constraints", [])
        if _holds(data.get("when"), context) is not False
    ]


def parameter_grid(case_id: str, primes: Union[Primes, Sequence[int]]) -> List[GridPoint]:
    """Every point of the {0,1} grid, with integer parameters over their ranges."""

    primes = Primes.of(primes)
    entry = _entry(case_id)
    context = _base_context(entry, primes)
    field_params = [data["name"] for data in entry.get("params", []) if data["domain"] != "int"]
    points: List[GridPoint] = []
    for choice in _int_choices(entry, context):
        for bits in itertools.product((0, 1), repeat=len(field_params)):
            params: Dict[str, int] = {**choice, **dict(zip(field_params, bits))}
            setting = _settle(case_id, primes, params)
            points.append(GridPoint(params, [c.statement for c in _violations(setting)]))
    return points


def available_cases(dim: Optional[str] = None) -> List[str]:
    if dim is None:
        return _all_cases()
    if dim not in DIMENSIONS:
        raise CatalogError(f"unknown dimension class '{dim}'; choose from {', '.join(DIMENSIONS)}")
    return [case for case in _all_cases() if _entry(case)["dim"] == dim]


def describe_case(case_id: str) -> Dict[str, Any]:
    entry = _entry(case_id)
    group = _group(entry)
    payload: Dict[str, Any] = {
        "case": case_id,
        "title": entry["title"],
        "row": entry["row"],
        "class": entry["dim"],
        "dimension": DIMENSIONS[entry["dim"]],
        "group": group["title"],
        "params": {data["name"]: data.get("values", data["domain"]) for data in entry.get("params", [])},
        "constraints": [c.to_dict() for c in constraint_report(case_id)],
    }
    if entry.get("admissible"):
        payload["admissible"] = entry["admissible"]
    if entry.get("caveat"):
        payload["caveat"] = entry["caveat"]
    if entry.get("notes"):
        payload["notes"] = list(entry["notes"])
    return payload


def export_presentation(
    case_id: str,
    primes: Union[Primes, Sequence[int]],
    params: Optional[Mapping[str, ParamValue]] = None,
    strict: bool = True,
) -> Dict[str, Any]:
    """Presentation-file payload of an instantiated case."""

    return dump_presentation(instantiate(case_id, primes, params, strict))


# -- Yetter-Drinfeld enumeration ------------------------------------------------------


def _degree_word(text: str, orders: Mapping[str, int]) -> Tuple[str, ...]:
    text = text.strip()
    if text == "1":
        return ()
    name, _, power = text.partition("^")
    if name not in orders:
        raise CatalogError(f"degree {text!r} names no group generator")
    return (name,) * (int(power or 1) % orders[name])


def tail_expression(data: TailData, ctx: FieldCtx, context: Mapping[str, Any], scalars: Mapping[str, Fq]) -> str:
    """The coproduct tail as a tensor expression; θ_q coefficients print in terms of ``w``."""

    kind = TailKind(data["kind"])
    g = data.get("group", "g")
    pieces: List[str] = []
    if kind is TailKind.THETA_Q:
        q = int(_evaluate(data["length"], context))
        xi = scalars[data["root"]]
        for i in range(1, q):
            coeff = divided_xi_binomial(q, i, xi)
            if coeff:
                pieces.append(f"{coeff}*x^{i}*{g}^{q - i} (#) x^{q - i}")
    else:
        p = ctx.p
        shift = data.get("theta", 0) if kind is TailKind.OMEGA_THETA else 0
        for i in range(1, p):
            coeff = divided_binomial(p, i)
            if coeff:
                left = f"x^{i}*{g}^{shift * (p - i)}" if shift else f"x^{i}"
                pieces.append(f"{coeff}*{left} (#) x^{p - i}")
    return " + ".join(pieces) or "0"


def _yd_generator(data: Mapping[str, Any], ctx: FieldCtx, context: Mapping[str, Any], scalars: Mapping[str, Fq], orders: Mapping[str, int]) -> YDGenerator:
    character = {
        name: parse_scalar(_render(value, context), ctx, scalars) for name, value in data["character"].items()
    }
    nilpotency = int(_evaluate(data["nilpotency"], context)) if "nilpotency" in data else None
    tail = tail_expression(data["tail"], ctx, context, scalars) if "tail" in data else None
    return YDGenerator(
        name=data["name"],
        degree=_degree_word(_render(data["degree"], context), orders),
        character=character,
        weight=int(_evaluate(data.get("weight", "1"), context)),
        nilpotency=nilpotency,
        tail=tail,
    )


def _row(row: str) -> YDRowData:
    data = get_yd_row(row)
    if data is None:
        raise CatalogError(f"unknown realization row '{row}'; choose from {', '.join(available_yd_rows())}")
    return data


def enumerate_yd(row: str, primes: Union[Primes, Sequence[int]]) -> YDEnumeration:
    """All Yetter-Drinfeld realizations listed for a row, with the expected count."""

    data = _row(row)
    primes = Primes.of(primes)
    _check_primes(data["dim"], primes)
    context: Dict[str, Any] = dict(primes.as_dict())
    template = get_group(data["group"])
    assert template is not None
    if template.get("admissible") and not _holds(template["admissible"], context):
        raise CatalogError(f"row {row} needs {template['admissible']}; got {primes.label()}")
    if template.get("twist"):
        twist_data = template["twist"]
        context["t"] = twist(int(_evaluate(twist_data["modulus"], context)), int(_evaluate(twist_data["order"], context)))
    group = _group_data(template, context)
    ctx, scalars = _field_for(primes, data.get("roots", {}), context)
    orders = group.orders()
    realizations: List[YDRealization] = []
    for item in data["items"]:
        ranges = item.get("ranges", {})
        names = sorted(ranges)
        for values in itertools.product(*(list(_evaluate(ranges[name], context)) for name in names)):
            local = {**context, **dict(zip(names, values))}
            generators = tuple(_yd_generator(gen, ctx, local, scalars, orders) for gen in item["generators"])
            label = item["label"] + (" " + ", ".join(f"{n}={v}" for n, v in zip(names, values)) if names else "")
            yd = YDRealization(group, generators, label=label, extra={"row": row})
            problems = compatibility_problems(ctx, yd, ctx.p)
            if problems:
                raise CatalogError(f"row {row}, {label}: {'; '.join(problems)}")
            realizations.append(yd)
    expected = int(_evaluate(data["count"], context))
    logger.debug("row {} at {}: {} realizations (table count {})", row, primes.label(), len(realizations), expected)
    return YDEnumeration(row, primes, ctx, realizations, expected)


__all__ = [
    "CatalogError",
    "ConstraintViolation",
    "Primes",
    "Constraint",
    "Instance",
    "GridPoint",
    "YDEnumeration",
    "available_cases",
    "available_yd_rows",
    "describe_case",
    "twist",
    "pretty",
    "smallest_primes",
    "admissible",
    "expected_dimension",
    "build_instance",
    "instantiate",
    "constraint_report",
    "parameter_grid",
    "export_presentation",
    "tail_expression",
    "enumerate_yd",
]
