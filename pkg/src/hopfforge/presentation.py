"""Presentation files: a JSON description of a Hopf algebra by generators and relations.

Example::

    {
      "name": "Taft(3)",
      "field": {"p": 2, "orders": [3]},
      "generators": [
        {"name": "x", "weight": 1},
        {"name": "g", "grouplike": true, "order": 3}
      ],
      "relations": ["g^3 - 1", "x^3", "g*x - xi*x*g"],
      "coproduct": {"x": "x(#)1 + g(#)x"},
      "counit": {"x": "0"}
    }

Group-like generators get ``g(#)g`` and counit 1 unless the file says
otherwise.  The names ``xi``, ``zeta``, ``theta`` and ``eta`` denote the
registered roots of the first four entries of ``field.orders``; ``w`` is the
fixed primitive element.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Union

from pydantic import BaseModel, Field, ValidationError, root_validator, validator

from .expressions import ExpressionError, parse_poly, parse_scalar, parse_tensor
from .field import FieldCtx, FieldError, Fq, make_field
from .freealg import FreeAlgebraError, GenSet, NcPoly, TensorPoly
from .hopf import HopfError, HopfPresentation, present
from .rewrite import OrderKind, OrientationError, ReductionOrder

ROOT_NAMES = ("xi", "zeta", "theta", "eta")


class PresentationError(Exception):
    """Raised when a presentation file cannot be read or does not describe a presentation."""


class FieldSpec(BaseModel):
    p: int
    orders: List[int] = Field(default_factory=list)
    degree: Optional[int] = None
    constants: Dict[str, int] = Field(default_factory=dict)

    @validator("orders", each_item=True)
    def _positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("root orders must be positive")
        return value


class GeneratorSpec(BaseModel):
    name: str
    weight: int = 1
    grouplike: bool = False
    order: Optional[int] = None

    @root_validator(pre=True)
    def _grouplike_defaults(cls, values: Dict[str, Any]) -> Dict[str, Any]:
        if values.get("grouplike"):
            if not values.get("order"):
                raise ValueError(f"group-like generator {values.get('name')!r} needs an order")
            values = {**values, "weight": values.get("weight", 0)}
        return values


class PresentationFile(BaseModel):
    """Schema of a presentation file."""

    name: str = "presentation"
    field: FieldSpec
    generators: List[GeneratorSpec]
    precedence: Optional[List[str]] = None
    interpretation: Dict[str, List[int]] = Field(default_factory=dict)
    relations: List[str] = Field(default_factory=list)
    coproduct: Dict[str, str] = Field(default_factory=dict)
    counit: Dict[str, Union[int, str]] = Field(default_factory=dict)
    group_order: Optional[int] = None

    @validator("generators")
    def _distinct(cls, value: List[GeneratorSpec]) -> List[GeneratorSpec]:
        names = [gen.name for gen in value]
        if len(set(names)) != len(names):
            raise ValueError(f"generator names must be distinct: {names}")
        if not names:
            raise ValueError("at least one generator is required")
        return value

    @validator("interpretation")
    def _pairs(cls, value: Dict[str, List[int]]) -> Dict[str, List[int]]:
        for name, pair in value.items():
            if len(pair) != 2:
                raise ValueError(f"interpretation of {name!r} must be a pair [a, b] meaning n -> a*n + b")
        return value

    @root_validator
    def _known_names(cls, values: Dict[str, Any]) -> Dict[str, Any]:
        names = {gen.name for gen in values.get("generators") or []}
        for key in ("coproduct", "counit", "interpretation"):
            unknown = sorted(set(values.get(key) or {}) - names)
            if unknown:
                raise ValueError(f"{key} mentions unknown generators {unknown}")
        return values


def field_constants(ctx: FieldCtx, spec: FieldSpec) -> Dict[str, Fq]:
    orders = [n for n in spec.orders if n != 1]
    constants: Dict[str, Fq] = {name: ctx.root(n) for name, n in zip(ROOT_NAMES, orders)}
    constants.update({name: ctx.root(n) for name, n in spec.constants.items()})
    constants["w"] = ctx.primitive
    return constants


def build_presentation(data: PresentationFile) -> HopfPresentation:
    spec = data.field
    names = [gen.name for gen in data.generators]
    grouplike = [gen.name for gen in data.generators if gen.grouplike]
    precedence = data.precedence or [n for n in names if n not in grouplike] + list(reversed(grouplike))
    try:
        ctx = make_field(spec.p, list(spec.orders) + list(spec.constants.values()), degree=spec.degree)
        scalars = field_constants(ctx, spec)
        gens = GenSet.create(names, precedence=precedence, weights={gen.name: gen.weight for gen in data.generators})
    except (FieldError, FreeAlgebraError) as exc:
        raise PresentationError(str(exc)) from exc
    try:
        relations = [parse_poly(text, ctx, gens, scalars) for text in data.relations]
        coproduct: Dict[str, TensorPoly] = {}
        counit: Dict[str, Fq] = {}
        for gen in data.generators:
            if gen.name in data.coproduct:
                coproduct[gen.name] = parse_tensor(data.coproduct[gen.name], ctx, gens, scalars)
            elif gen.grouplike:
                g = NcPoly.generator(ctx, gens, gen.name)
                coproduct[gen.name] = TensorPoly.tensor(g, g)
            if gen.name in data.counit:
                counit[gen.name] = parse_scalar(str(data.counit[gen.name]), ctx, scalars)
            elif gen.grouplike:
                counit[gen.name] = ctx.one
    except ExpressionError as exc:
        raise PresentationError(str(exc)) from exc
    try:
        order = (
            ReductionOrder.affine(gens, {name: (pair[0], pair[1]) for name, pair in data.interpretation.items()})
            if data.interpretation
            else ReductionOrder.wll(gens)
        )
    except OrientationError as exc:
        raise PresentationError(str(exc)) from exc
    orders = {gen.name: int(gen.order) for gen in data.generators if gen.grouplike and gen.order}
    group_order = data.group_order
    if group_order is None:
        group_order = 1
        for value in orders.values():
            group_order *= value
    try:
        return present(
            data.name, ctx, gens, relations, coproduct, counit, orders,
            order=order, group_order=group_order, scalars=scalars,
        )
    except (HopfError, OrientationError) as exc:
        raise PresentationError(str(exc)) from exc


def parse_presentation(payload: Mapping[str, Any]) -> HopfPresentation:
    try:
        data = PresentationFile.parse_obj(payload)
    except ValidationError as exc:
        raise PresentationError(f"Invalid presentation: {exc}") from exc
    return build_presentation(data)


def load_presentation(path: Path) -> HopfPresentation:
    try:
        payload = json.loads(path.read_text())
    except FileNotFoundError as exc:
        raise PresentationError(f"Presentation file not found: {path}") from exc
    except json.JSONDecodeError as exc:
        raise PresentationError(f"Failed to parse JSON: {exc}") from exc
    return parse_presentation(payload)


def dump_presentation(H: HopfPresentation) -> Dict[str, Any]:
    """File payload for ``H``; coefficients outside the prime field print as powers of ``w``."""

    ctx = H.ctx
    generators: List[Dict[str, Any]] = []
    for name, weight in zip(H.gens.names, H.gens.weights):
        if name in H.grouplikes:
            generators.append({"name": name, "weight": weight, "grouplike": True, "order": H.grouplikes[name]})
        else:
            generators.append({"name": name, "weight": weight})
    payload: Dict[str, Any] = {
        "name": H.name,
        "field": {"p": ctx.p, "orders": sorted(n for n in ctx.roots if n != 1), "degree": ctx.k},
        "generators": generators,
        "precedence": list(H.gens.precedence),
    }
    if H.group_order is not None:
        payload["group_order"] = H.group_order
    if H.sys.order.kind is OrderKind.AFFINE:
        payload["interpretation"] = {
            name: list(pair) for name, pair in zip(H.gens.names, H.sys.order.interpretation)
        }
    payload["relations"] = [str(relation) for relation in H.relations]
    payload["coproduct"] = {name: str(H.coproduct[name]) for name in H.gens.names}
    payload["counit"] = {name: ctx.format(H.counit[name]) for name in H.gens.names}
    return payload


def save_presentation(H: HopfPresentation, path: Path) -> None:
    path.write_text(json.dumps(dump_presentation(H), indent=2, ensure_ascii=False) + "\n")


__all__ = [
    "ROOT_NAMES",
    "PresentationError",
    "FieldSpec",
    "GeneratorSpec",
    "PresentationFile",
    "field_constants",
    "build_presentation",
    "parse_presentation",
    "load_presentation",
    "dump_presentation",
    "save_presentation",
]
