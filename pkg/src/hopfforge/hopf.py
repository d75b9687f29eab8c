"""Hopf structure on a confluent presentation: coproducts, axioms, antipode and coradical data.

Axioms are verified on generators and defining relations.  Because the
coproduct, counit and antipode are extended multiplicatively (the antipode
anti-multiplicatively) from generator assignments, a presentation passing
these checks satisfies the axioms on every element.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from loguru import logger

from .expressions import parse_poly, parse_tensor
from .field import FieldCtx, Fq, divided_binomial, divided_xi_binomial
from .freealg import GenSet, NcPoly, TensorPoly, Word, format_word, substitute
from .linalg import SparseEchelon, Vector, kernel
from .models import CheckResult
from .rewrite import (
    ConfluenceReport,
    NormalBasis,
    ReductionOrder,
    RewriteSystem,
    check_confluence,
    normal_words,
    orient,
)


class HopfError(Exception):
    """Raised when a presentation cannot carry the requested Hopf structure."""


@dataclass(slots=True, eq=False)
class HopfPresentation:
    """Generators, relations and structure maps of a finite-dimensional Hopf algebra.

    ``grouplikes`` maps each group-like generator to its multiplicative order.
    ``counit`` values and ``coproduct`` images are given on generators only.
    """

    name: str
    ctx: FieldCtx
    gens: GenSet
    relations: List[NcPoly]
    sys: RewriteSystem
    grouplikes: Dict[str, int]
    coproduct: Dict[str, TensorPoly]
    counit: Dict[str, int]
    antipode: Optional[Dict[str, NcPoly]] = None
    group_order: Optional[int] = None
    scalars: Dict[str, Fq] = field(default_factory=dict)
    _basis: Optional[NormalBasis] = None
    _delta: Dict[Word, TensorPoly] = field(default_factory=dict)

    # -- elements -----------------------------------------------------------------
    def generator(self, name: str) -> NcPoly:
        return NcPoly.generator(self.ctx, self.gens, name)

    def monomial(self, word: Word) -> NcPoly:
        return NcPoly.monomial(self.ctx, self.gens, word)

    def one(self) -> NcPoly:
        return NcPoly.constant(self.ctx, self.gens, 1)

    def parse(self, text: str) -> NcPoly:
        return self.reduce(parse_poly(text, self.ctx, self.gens, self.scalars))

    def parse_tensor(self, text: str, rank: int = 2) -> TensorPoly:
        return self.reduce(parse_tensor(text, self.ctx, self.gens, self.scalars, rank))

    def reduce(self, poly):  # type: ignore[no-untyped-def]
        return self.sys.reduce(poly)

    def tensor(self, *factors: NcPoly) -> TensorPoly:
        return TensorPoly.tensor(*factors)

    # -- basis --------------------------------------------------------------------
    def confluence(self) -> ConfluenceReport:
        return check_confluence(self.sys)

    @property
    def normal_basis(self) -> NormalBasis:
        if self._basis is None:
            self._basis = normal_words(self.sys)
        return self._basis

    @property
    def basis(self) -> List[Word]:
        basis = self.normal_basis
        if basis.infinite:
            raise HopfError(f"{self.name}: infinitely many irreducible words")
        return basis.words

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def group_letters(self) -> Tuple[int, ...]:
        return tuple(self.gens.index(name) for name in self.grouplikes)

    def group_inverse(self, word: Word) -> NcPoly:
        letters = set(self.group_letters())
        inverse = self.one()
        for letter in word:
            if letter not in letters:
                raise HopfError(f"{format_word(self.gens, word)} is not a group word")
            name = self.gens.names[letter]
            power = self.monomial((letter,) * (self.grouplikes[name] - 1))
            inverse = power * inverse
        return self.reduce(inverse)

    # -- structure maps -----------------------------------------------------------
    def delta_word(self, word: Word) -> TensorPoly:
        cached = self._delta.get(word)
        if cached is not None:
            return cached
        missing = [word[:length] for length in range(len(word) + 1) if word[:length] not in self._delta]
        for prefix in missing:
            if not prefix:
                self._delta[prefix] = TensorPoly.unit_of(self.ctx, self.gens, 2)
                continue
            name = self.gens.names[prefix[-1]]
            image = self._delta[prefix[:-1]] * self.coproduct[name]
            self._delta[prefix] = self.reduce(image)
        return self._delta[word]

    def delta(self, poly: NcPoly) -> TensorPoly:
        out = TensorPoly.zero(self.ctx, self.gens, 2)
        for word, coeff in poly.terms.items():
            out = out + self.delta_word(word).scale_encoded(coeff)
        return out

    def epsilon_word(self, word: Word) -> int:
        ctx = self.ctx
        value = 1
        for letter in word:
            value = ctx.mul(value, self.counit[self.gens.names[letter]])
            if not value:
                return 0
        return value

    def epsilon(self, poly: NcPoly) -> Fq:
        ctx = self.ctx
        total = 0
        for word, coeff in poly.terms.items():
            total = ctx.add(total, ctx.mul(coeff, self.epsilon_word(word)))
        return Fq(ctx, total)

    def apply_antipode(self, poly: NcPoly, antipode: Optional[Mapping[str, NcPoly]] = None) -> NcPoly:
        images = antipode if antipode is not None else self.antipode
        if images is None:
            raise HopfError(f"{self.name}: antipode not derived")
        if poly.is_constant():
            return poly
        return self.reduce(substitute(poly, dict(images), antihom=True, reducer=self.reduce))


def present(
    name: str,
    ctx: FieldCtx,
    gens: GenSet,
    relations: Sequence[NcPoly],
    coproduct: Mapping[str, TensorPoly],
    counit: Mapping[str, Union[int, Fq]],
    grouplikes: Mapping[str, int],
    order: Optional[ReductionOrder] = None,
    group_order: Optional[int] = None,
    scalars: Optional[Mapping[str, Fq]] = None,
) -> HopfPresentation:
    """Orient the relations and assemble a presentation; no axiom is checked here."""

    missing = [gen for gen in gens.names if gen not in coproduct or gen not in counit]
    if missing:
        raise HopfError(f"{name}: coproduct or counit missing for {', '.join(missing)}")
    sys = orient(list(relations), gens, order, ctx)
    return HopfPresentation(
        name=name,
        ctx=ctx,
        gens=gens,
        relations=list(relations),
        sys=sys,
        grouplikes=dict(grouplikes),
        coproduct=dict(coproduct),
        counit={gen: ctx.element(value) for gen, value in counit.items()},
        group_order=group_order,
        scalars=dict(scalars or {}),
    )


def extend_coproduct(poly: NcPoly, H: HopfPresentation) -> TensorPoly:
    return H.delta(poly)


def _tensor_with(left: Optional[NcPoly], tensor: TensorPoly, right: Optional[NcPoly]) -> TensorPoly:
    """left ⊗ tensor or tensor ⊗ right."""

    ctx = tensor.ctx
    terms: Dict = {}
    outer = left if left is not None else right
    assert outer is not None
    for key, coeff in tensor.terms.items():
        for word, c in outer.terms.items():
            new_key = (word,) + key if left is not None else key + (word,)
            value = ctx.mul(coeff, c)
            previous = terms.get(new_key)
            terms[new_key] = value if previous is None else ctx.add(previous, value)
    return TensorPoly(ctx, tensor.gens, tensor.rank + 1, {k: c for k, c in terms.items() if c})


def check_bialgebra(H: HopfPresentation) -> CheckResult:
    result = CheckResult("bialgebra")
    for name, order in H.grouplikes.items():
        gen = H.generator(name)
        if H.reduce(H.coproduct[name]) != H.tensor(gen, gen):
            result.fail(f"group-like {name} has coproduct {H.coproduct[name]}")
        if H.counit[name] != 1:
            result.fail(f"group-like {name} has counit {H.ctx.format(H.counit[name])}")
        if H.reduce(gen ** order) != H.one():
            result.fail(f"{name}^{order} does not reduce to 1")
    for relation in H.relations:
        residue = H.delta(relation)
        if residue:
            result.fail(f"coproduct does not respect {relation}: residue {residue}")
        if H.epsilon(relation):
            result.fail(f"counit does not respect {relation}")
    for name in H.gens.names:
        image = H.delta_word((H.gens.index(name),))
        left = H.reduce(image.apply_factor(0, H.delta_word))
        right = H.reduce(image.apply_factor(1, H.delta_word))
        if left != right:
            result.fail(f"coassociativity fails on {name}: residue {left - right}")
        gen = H.generator(name)
        for position in (0, 1):
            contracted = image.contract(position, H.epsilon_word)
            if contracted != H.reduce(gen):
                side = "(ε⊗id)" if position == 0 else "(id⊗ε)"
                result.fail(f"counit axiom {side}Δ({name}) = {contracted}")
    logger.debug("{} bialgebra check: {} errors", H.name, len(result.errors))
    return result


def _convolve(H: HopfPresentation, tensor: TensorPoly, antipode: Mapping[str, NcPoly], side: int) -> NcPoly:
    """m(S⊗id) (side 0) or m(id⊗S) (side 1) applied to a rank-2 tensor."""

    total = NcPoly.zero(H.ctx, H.gens)
    for (u, v), coeff in tensor.terms.items():
        if side == 0:
            piece = H.apply_antipode(H.monomial(u), antipode) * H.monomial(v)
        else:
            piece = H.monomial(u) * H.apply_antipode(H.monomial(v), antipode)
        total = total + piece.scale_encoded(coeff)
    return H.reduce(total)


def derive_antipode(H: HopfPresentation) -> Dict[str, NcPoly]:
    """Solve m(S⊗id)Δ = ηε generator by generator, up the coradical filtration.

    A generator is solved once every other left tensor factor of its coproduct
    only involves solved generators.
    """

    antipode: Dict[str, NcPoly] = {}
    for name, order in H.grouplikes.items():
        antipode[name] = H.reduce(H.generator(name) ** (order - 1))
    pending = [name for name in H.gens.names if name not in antipode]
    group = set(H.group_letters())
    while pending:
        progress = False
        for name in list(pending):
            index = H.gens.index(name)
            image = H.delta_word((index,))
            pivot = None
            for (u, v), coeff in sorted(image.terms.items()):
                if u == (index,) and all(letter in group for letter in v):
                    pivot = (v, coeff)
                    break
            if pivot is None:
                raise HopfError(f"{H.name}: Δ({name}) has no term {name}⊗(group-like)")
            rest_terms = {key: c for key, c in image.terms.items() if key != ((index,), pivot[0])}
            needed = {H.gens.names[letter] for (u, _), _ in rest_terms.items() for letter in u}
            if not needed <= set(antipode):
                continue
            rest = TensorPoly(H.ctx, H.gens, 2, rest_terms)
            value = H.one().scale_encoded(H.counit[name]) - _convolve(H, rest, antipode, 0)
            value = H.reduce(value * H.group_inverse(pivot[0])).scale_encoded(H.ctx.inv(pivot[1]))
            antipode[name] = value
            pending.remove(name)
            progress = True
            logger.debug("{}: S({}) = {}", H.name, name, value)
        if not progress:
            raise HopfError(f"{H.name}: antipode equations for {', '.join(pending)} cannot be solved")
    return antipode


def check_antipode(H: HopfPresentation, antipode: Mapping[str, NcPoly]) -> CheckResult:
    result = CheckResult("antipode")
    for name in H.gens.names:
        image = H.delta_word((H.gens.index(name),))
        unit = H.one().scale_encoded(H.counit[name])
        for side in (0, 1):
            residue = _convolve(H, image, antipode, side) - unit
            if residue:
                label = "m(S⊗id)Δ" if side == 0 else "m(id⊗S)Δ"
                result.fail(f"{label}({name}) - ε({name}) = {residue}")
    for relation in H.relations:
        residue = H.apply_antipode(relation, antipode)
        if residue:
            result.fail(f"antipode is not anti-multiplicative on {relation}: {residue}")
    result.data["antipode"] = {name: str(value) for name, value in antipode.items()}
    return result


def antipode_order(H: HopfPresentation, antipode: Optional[Mapping[str, NcPoly]] = None, bound: int = 4096) -> int:
    """Least m >= 1 with S^m = id on the normal basis."""

    images = antipode if antipode is not None else H.antipode
    if images is None:
        images = derive_antipode(H)
    matrix = {word: H.apply_antipode(H.monomial(word), images) for word in H.basis}
    current = {word: H.monomial(word) for word in H.basis}
    for m in range(1, bound + 1):
        advanced = {}
        for word, value in current.items():
            total = NcPoly.zero(H.ctx, H.gens)
            for w, c in value.terms.items():
                total = total + matrix[w].scale_encoded(c)
            advanced[word] = total
        current = advanced
        if all(value == H.monomial(word) for word, value in current.items()):
            return m
    raise HopfError(f"{H.name}: antipode order exceeds {bound}")


def _projection(echelon: SparseEchelon, cache: Dict[Word, Vector], word: Word) -> Vector:
    cached = cache.get(word)
    if cached is None:
        cached, _ = echelon.reduce({word: 1})
        cache[word] = cached
    return cached


def _wedge(H: HopfPresentation, low: SparseEchelon, high: SparseEchelon) -> List[Vector]:
    """Kernel of (π_low ⊗ π_high)∘Δ on the basis: the wedge low ∧ high."""

    ctx = H.ctx
    low_cache: Dict[Word, Vector] = {}
    high_cache: Dict[Word, Vector] = {}
    images = []
    for word in H.basis:
        image: Vector = {}
        for (u, v), coeff in H.delta_word(word).terms.items():
            left = _projection(low, low_cache, u)
            if not left:
                continue
            right = _projection(high, high_cache, v)
            for a, ca in left.items():
                for b, cb in right.items():
                    value = ctx.mul(coeff, ctx.mul(ca, cb))
                    total = ctx.add(image.get((a, b), 0), value)
                    if total:
                        image[(a, b)] = total
                    else:
                        image.pop((a, b), None)
        images.append((word, image))
    return kernel(ctx, images)


@dataclass(slots=True)
class FiltrationReport:
    dims: List[int]
    level_of: Dict[str, int]
    generator_levels: Dict[str, int]
    reaches_top: bool
    taft_wilson: Optional[bool] = None

    def to_dict(self) -> Dict[str, object]:
        payload: Dict[str, object] = {
            "dims": list(self.dims),
            "generator_levels": dict(self.generator_levels),
            "reaches_top": self.reaches_top,
        }
        if self.taft_wilson is not None:
            payload["taft_wilson"] = self.taft_wilson
        return payload


def _grouplike_candidates(H: HopfPresentation) -> List[Word]:
    group = set(H.group_letters())
    found = []
    for word in H.basis:
        if not all(letter in group for letter in word):
            continue
        monomial = H.monomial(word)
        if H.delta_word(word) == H.tensor(monomial, monomial) and H.epsilon_word(word) == 1:
            found.append(word)
    return found


def coradical_filtration(
    H: HopfPresentation,
    coradical: Optional[Sequence[Word]] = None,
    taft_wilson: bool = False,
) -> FiltrationReport:
    """C_{n+1} = C_n ∧ C_0 starting from the span of the group-like words."""

    ctx = H.ctx
    seeds = list(coradical) if coradical is not None else _grouplike_candidates(H)
    c0 = SparseEchelon(ctx)
    for word in seeds:
        c0.add({word: 1})
    levels = [c0]
    dims = [c0.rank]
    top = H.dimension
    while dims[-1] < top:
        nxt = SparseEchelon(ctx)
        for vector in _wedge(H, c0, levels[-1]):
            nxt.add(vector)
        if nxt.rank <= dims[-1]:
            break
        levels.append(nxt)
        dims.append(nxt.rank)

    def level(vector: Vector) -> int:
        for n, echelon in enumerate(levels):
            if echelon.contains(vector):
                return n
        return -1

    level_of = {format_word(H.gens, word): level({word: 1}) for word in H.basis}
    generator_levels = {}
    for name in H.gens.names:
        reduced = H.reduce(H.generator(name))
        generator_levels[name] = level(dict(reduced.terms)) if reduced else 0
    report = FiltrationReport(dims, level_of, generator_levels, dims[-1] == top)
    if taft_wilson and len(dims) > 1:
        expected = dims[1] - dims[0]
        total = 0
        for g in seeds:
            for h in seeds:
                space = skew_primitives(H, H.monomial(g), H.monomial(h))
                total += space.dimension - (1 if g != h else 0)
        report.taft_wilson = total == expected
    return report


@dataclass(slots=True)
class GroupLikeReport:
    elements: List[Word]
    certified: bool

    def format(self, gens: GenSet) -> List[str]:
        return [format_word(gens, word) for word in self.elements]

    def __len__(self) -> int:
        return len(self.elements)


def group_likes(H: HopfPresentation) -> GroupLikeReport:
    """Group-like basis words; certified complete when their span's wedge powers exhaust H.

    A subcoalgebra whose wedge filtration reaches the whole coalgebra contains
    the coradical, so no other group-like element can exist.
    """

    elements = _grouplike_candidates(H)
    filtration = coradical_filtration(H, elements)
    return GroupLikeReport(elements, filtration.reaches_top)


@dataclass(slots=True)
class SkewPrimitiveSpace:
    g: NcPoly
    h: NcPoly
    basis: List[NcPoly]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def contains(self, element: NcPoly) -> bool:
        echelon = SparseEchelon(element.ctx)
        for vector in self.basis:
            echelon.add(dict(vector.terms))
        return echelon.contains(dict(element.terms))

    def to_dict(self) -> Dict[str, object]:
        return {
            "g": str(self.g),
            "h": str(self.h),
            "dim": self.dimension,
            "basis": [str(vector) for vector in self.basis],
        }


def skew_primitives(H: HopfPresentation, g: NcPoly, h: NcPoly) -> SkewPrimitiveSpace:
    """P_{g,h} = {v : Δ(v) = v⊗g + h⊗v}."""

    ctx = H.ctx
    images = []
    for word in H.basis:
        monomial = H.monomial(word)
        residue = H.delta_word(word) - H.tensor(monomial, g) - H.tensor(h, monomial)
        images.append((word, dict(residue.terms)))
    basis = []
    for vector in kernel(ctx, images):
        lead = max(vector, key=H.gens.key)
        scale = ctx.inv(vector[lead])
        basis.append(NcPoly(ctx, H.gens, {w: ctx.mul(c, scale) for w, c in vector.items()}))
    return SkewPrimitiveSpace(g, h, basis)


class TailKind(str, Enum):
    OMEGA0 = "omega0"
    OMEGA_THETA = "omega_theta"
    THETA_Q = "theta_q"


def coproduct_tail(
    kind: TailKind,
    ctx: FieldCtx,
    gens: GenSet,
    x: str = "x",
    g: Optional[str] = None,
    theta: int = 0,
    q: Optional[int] = None,
    xi: Optional[Fq] = None,
    sys: Optional[RewriteSystem] = None,
) -> TensorPoly:
    """The non-primitive part of Δ(y).

    omega0:      Σ (p-1)!/(i!(p-i)!) x^i ⊗ x^(p-i)
    omega_theta: Σ (p-1)!/(i!(p-i)!) x^i g^(θ(p-i)) ⊗ x^(p-i)
    theta_q:     Σ (q-1)_ξ!/((i)_ξ!(q-i)_ξ!) x^i g^(q-i) ⊗ x^(q-i)
    """

    p = ctx.p
    xl = gens.index(x)
    gl = gens.index(g) if g is not None else None
    terms: Dict = {}
    if kind is TailKind.THETA_Q:
        if q is None or xi is None or gl is None:
            raise HopfError("theta_q tail needs q, xi and a group-like generator")
        for i in range(1, q):
            coeff = divided_xi_binomial(q, i, xi).value
            if coeff:
                terms[((xl,) * i + (gl,) * (q - i), (xl,) * (q - i))] = coeff
    else:
        shift = theta if kind is TailKind.OMEGA_THETA else 0
        if shift and gl is None:
            raise HopfError("omega_theta tail needs a group-like generator")
        for i in range(1, p):
            coeff = divided_binomial(p, i)
            if coeff:
                left = (xl,) * i + ((gl,) * (shift * (p - i)) if shift else ())
                terms[(left, (xl,) * (p - i))] = coeff
    tail = TensorPoly(ctx, gens, 2, terms)
    return sys.reduce(tail) if sys is not None else tail  # type: ignore[return-value]


def cocycle_residue(omega: TensorPoly, H: HopfPresentation, g: NcPoly, h: NcPoly) -> TensorPoly:
    """d_{g,h}(ω) = h⊗ω - (Δ⊗id)ω + (id⊗Δ)ω - ω⊗g in H⊗H⊗H."""

    first = _tensor_with(h, omega, None)
    middle = omega.apply_factor(0, H.delta_word)
    last = omega.apply_factor(1, H.delta_word)
    closing = _tensor_with(None, omega, g)
    return H.reduce(first - middle + last - closing)


__all__ = [
    "HopfError",
    "HopfPresentation",
    "present",
    "extend_coproduct",
    "check_bialgebra",
    "derive_antipode",
    "check_antipode",
    "antipode_order",
    "FiltrationReport",
    "coradical_filtration",
    "GroupLikeReport",
    "group_likes",
    "SkewPrimitiveSpace",
    "skew_primitives",
    "TailKind",
    "coproduct_tail",
    "cocycle_residue",
]
