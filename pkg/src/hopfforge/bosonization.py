"""Bosonization R#kG for Yetter-Drinfeld data given by characters and central degrees."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from loguru import logger

from .expressions import parse_poly, parse_tensor
from .field import FieldCtx, Fq
from .freealg import GenSet, NcPoly, TensorPoly
from .hopf import HopfPresentation, present
from .rewrite import ReductionOrder, orient


class YDCompatibilityError(Exception):
    """Raised when Yetter-Drinfeld data is not a valid diagonal realization."""

    def __init__(self, problems: Sequence[str]) -> None:
        super().__init__("; ".join(problems))
        self.problems = list(problems)


@dataclass(frozen=True, slots=True)
class GroupData:
    """A finite group given by generators of known order and extra relations.

    ``relations`` are expressions in the generator names, e.g. ``"g*h - h^2*g"``.
    ``affine`` switches orientation to the affine interpretation order.
    """

    generators: Tuple[Tuple[str, int], ...]
    relations: Tuple[str, ...] = ()
    order: int = 0
    affine: Tuple[Tuple[str, int, int], ...] = ()

    @classmethod
    def cyclic(cls, n: int, name: str = "g") -> "GroupData":
        return cls(((name, n),), (), n)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.generators)

    def orders(self) -> Dict[str, int]:
        return dict(self.generators)


def group_word(name: str, exponent: int) -> Tuple[str, ...]:
    return (name,) * exponent


@dataclass(frozen=True, slots=True)
class YDGenerator:
    """One basis vector of V (or a higher generator of R) with its coaction degree and action character.

    ``tail`` is a tensor expression added to ``x⊗1 + deg⊗x``.
    """

    name: str
    degree: Tuple[str, ...]
    character: Mapping[str, Fq]
    weight: int = 1
    nilpotency: Optional[int] = None
    tail: Optional[str] = None


@dataclass(frozen=True, slots=True)
class YDRealization:
    group: GroupData
    generators: Tuple[YDGenerator, ...]
    label: str = ""
    extra: Mapping[str, object] = field(default_factory=dict)

    def chi(self, target: YDGenerator, word: Sequence[str]) -> Fq:
        """Character of ``target`` evaluated on a group word."""

        values = [target.character[name] for name in word]
        result = next(iter(target.character.values())).ctx.one
        for value in values:
            result = result * value
        return result

    def braiding(self, i: int, j: int) -> Fq:
        """q_ij = χ_j(deg x_i), the scalar in c(x_i⊗x_j) = q_ij x_j⊗x_i."""

        return self.chi(self.generators[j], self.generators[i].degree)

    def describe(self) -> Dict[str, object]:
        return {
            "label": self.label,
            "generators": [
                {
                    "name": gen.name,
                    "degree": "*".join(gen.degree) or "1",
                    "character": {name: str(value) for name, value in gen.character.items()},
                }
                for gen in self.generators
            ],
            **{key: value for key, value in self.extra.items()},
        }


def _group_gens(group: GroupData) -> GenSet:
    return GenSet.create(group.names, precedence=tuple(reversed(group.names)))


def _group_order(group: GroupData, gens: GenSet) -> ReductionOrder:
    if group.affine:
        return ReductionOrder.affine(gens, {name: (a, b) for name, a, b in group.affine})
    return ReductionOrder.wll(gens)


def compatibility_problems(ctx: FieldCtx, yd: YDRealization, p: Optional[int] = None) -> List[str]:
    """Everything that keeps ``yd`` from being a diagonal realization of a quantum linear space."""

    problems: List[str] = []
    group = yd.group
    gens = _group_gens(group)
    group_relations = [
        NcPoly.generator(ctx, gens, name) ** order - 1 for name, order in group.generators
    ] + [parse_poly(text, ctx, gens) for text in group.relations]
    sys = orient(group_relations, gens, _group_order(group, gens), ctx)
    for gen in yd.generators:
        missing = [name for name in group.names if name not in gen.character]
        if missing:
            problems.append(f"character of {gen.name} misses {', '.join(missing)}")
            continue
        for relation in group_relations:
            total = ctx.zero
            for word, coeff in relation.terms.items():
                total = total + yd.chi(gen, [gens.names[letter] for letter in word]) * Fq(ctx, coeff)
            if total:
                problems.append(f"character of {gen.name} does not respect {relation}")
        degree = NcPoly.monomial(ctx, gens, gens.word(*gen.degree))
        for name in group.names:
            g = NcPoly.generator(ctx, gens, name)
            if sys.reduce(g * degree - degree * g):
                problems.append(f"degree of {gen.name} is not central")
                break
    primitive = [i for i, gen in enumerate(yd.generators) if gen.tail is None]
    for i in primitive:
        for j in primitive:
            if i < j and yd.braiding(i, j) * yd.braiding(j, i) != 1:
                problems.append(
                    f"braiding of {yd.generators[i].name} and {yd.generators[j].name} is not symmetric"
                )
    for i in primitive:
        gen = yd.generators[i]
        q_ii = yd.braiding(i, i)
        expected = p if q_ii == 1 else q_ii.order()
        if gen.nilpotency is not None and expected is not None and gen.nilpotency != expected:
            problems.append(f"{gen.name}^{gen.nilpotency} = 0 needs braiding of order {gen.nilpotency}")
    return problems


def bosonize(
    ctx: FieldCtx,
    yd: YDRealization,
    name: str = "bosonization",
    relations: Sequence[str] = (),
    scalars: Optional[Mapping[str, Fq]] = None,
) -> HopfPresentation:
    """R#kG for R a quantum linear space on the primitive generators of ``yd``.

    Relations emitted: the group presentation, gX = χ_X(g) X g, X^N = 0 with N
    the order of the self-braiding (p when it is trivial), X_i X_j = q_ij X_j X_i.
    ``relations`` replaces the nilpotency and commutation relations of R when given.
    """

    problems = compatibility_problems(ctx, yd, ctx.p)
    if problems:
        raise YDCompatibilityError(problems)
    group = yd.group
    v_names = tuple(gen.name for gen in yd.generators)
    names = v_names + group.names
    precedence = tuple(reversed(v_names)) + tuple(reversed(group.names))
    weights = {gen.name: gen.weight for gen in yd.generators}
    gens = GenSet.create(names, precedence=precedence, weights=weights)
    scalars = dict(scalars or {})

    def poly(text: str) -> NcPoly:
        return parse_poly(text, ctx, gens, scalars)

    def monomial(*letters: str) -> NcPoly:
        return NcPoly.monomial(ctx, gens, gens.word(*letters))

    rels: List[NcPoly] = [monomial(g) ** order - 1 for g, order in group.generators]
    rels += [poly(text) for text in group.relations]
    for gen in yd.generators:
        for g in group.names:
            rels.append(monomial(g, gen.name) - monomial(gen.name, g).scale(gen.character[g]))
    if relations:
        rels += [poly(text) for text in relations]
    else:
        for i, gen in enumerate(yd.generators):
            q_ii = yd.braiding(i, i)
            power = gen.nilpotency or (ctx.p if q_ii == 1 else q_ii.order())
            rels.append(monomial(*(gen.name,) * power))
        for i, first in enumerate(yd.generators):
            for j in range(i + 1, len(yd.generators)):
                second = yd.generators[j]
                rels.append(monomial(first.name, second.name) - monomial(second.name, first.name).scale(yd.braiding(i, j)))

    coproduct: Dict[str, TensorPoly] = {}
    for g in group.names:
        coproduct[g] = TensorPoly.tensor(monomial(g), monomial(g))
    for gen in yd.generators:
        image = TensorPoly.tensor(monomial(gen.name), monomial()) + TensorPoly.tensor(
            monomial(*gen.degree), monomial(gen.name)
        )
        if gen.tail:
            image = image + parse_tensor(gen.tail, ctx, gens, scalars)
        coproduct[gen.name] = image
    counit = {g: 1 for g in group.names}
    counit.update({gen.name: 0 for gen in yd.generators})
    order = (
        ReductionOrder.affine(gens, {g: (a, b) for g, a, b in group.affine}) if group.affine else ReductionOrder.wll(gens)
    )
    logger.debug("bosonizing {} over a group of order {}", ", ".join(v_names), group.order)
    return present(
        name,
        ctx,
        gens,
        rels,
        coproduct,
        counit,
        group.orders(),
        order=order,
        group_order=group.order or None,
        scalars=scalars,
    )


__all__ = [
    "YDCompatibilityError",
    "GroupData",
    "group_word",
    "YDGenerator",
    "YDRealization",
    "compatibility_problems",
    "bosonize",
]
