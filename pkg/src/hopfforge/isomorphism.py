"""Hopf isomorphisms between presentations and the two deformed families of dimension pq."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Mapping, Optional, Tuple

from loguru import logger

from .expressions import parse_poly
from .field import FieldCtx, FieldError, Fq, embedding, extend_field
from .freealg import GenSet, NcPoly, TensorPoly, Word, substitute
from .hopf import HopfError, HopfPresentation, present
from .linalg import SparseEchelon
from .models import CheckResult


class Family(str, Enum):
    A = "A"
    B = "B"


def _pq_presentation(ctx: FieldCtx, name: str, relations: List[str], lam: Fq, order: int) -> HopfPresentation:
    gens = GenSet.create(("g", "x"), precedence=("x", "g"), weights={"x": 1})
    scalars = {"lambda": lam}
    rels = [parse_poly(text, ctx, gens, scalars) for text in relations]
    g = NcPoly.generator(ctx, gens, "g")
    x = NcPoly.generator(ctx, gens, "x")
    one = g.one()
    coproduct = {
        "g": TensorPoly.tensor(g, g),
        "x": TensorPoly.tensor(x, one) + TensorPoly.tensor(g, x),
    }
    return present(name, ctx, gens, rels, coproduct, {"g": 1, "x": 0}, {"g": order}, group_order=order, scalars=scalars)


def pq_family_A(ctx: FieldCtx, lam: Fq, q: int, order: Optional[int] = None) -> HopfPresentation:
    """K<g,x>/(g^n - 1, gx - xg - g + g^2, x^p - x - λ(1 - g^p)) with x ∈ P_(1,g).

    Conjugation by g shifts x by 1 - g, so g^n = 1 forces n(1 - g) = 0: with
    n = q prime to p the algebra collapses to g = 1.  The default n = pq is the
    smallest order keeping the family nondegenerate.
    """

    p = ctx.p
    n = order if order is not None else p * q
    relations = [f"g^{n} - 1", "g*x - x*g - g + g^2", f"x^{p} - x - lambda*(1 - g^{p % n})"]
    return _pq_presentation(ctx, f"A({lam})", relations, lam, n)


def pq_family_B(ctx: FieldCtx, lam: Fq, q: int) -> HopfPresentation:
    """K[g,x]/(g^q - 1, x^p - x - λ(1 - g^p)) with x ∈ P_(1,g); needs q | p - 1."""

    p = ctx.p
    if (p - 1) % q:
        raise HopfError(f"family B needs q | p - 1, got p={p}, q={q}")
    relations = [f"g^{q} - 1", "g*x - x*g", f"x^{p} - x - lambda*(1 - g^{p % q})"]
    return _pq_presentation(ctx, f"B({lam})", relations, lam, q)


def _image_table(H1: HopfPresentation, H2: HopfPresentation, phi: Mapping[str, NcPoly]):  # type: ignore[no-untyped-def]
    cache: Dict[Word, NcPoly] = {}

    def image(word: Word) -> NcPoly:
        cached = cache.get(word)
        if cached is None:
            cached = H2.reduce(substitute(H1.monomial(word), dict(phi), reducer=H2.reduce))
            cache[word] = cached
        return cached

    return image


def iso_check(H1: HopfPresentation, H2: HopfPresentation, phi: Mapping[str, NcPoly]) -> CheckResult:
    """Does the generator assignment ``phi`` extend to a Hopf isomorphism H1 -> H2?

    Relations of H1 must map to zero, coproducts and counits must be
    intertwined, and the images of the normal basis of H1 must span H2.
    """

    result = CheckResult("isomorphism")
    missing = [name for name in H1.gens.names if name not in phi]
    if missing:
        result.fail(f"no image for {', '.join(missing)}")
        return result
    image = _image_table(H1, H2, phi)
    for relation in H1.relations:
        mapped = H2.reduce(substitute(relation, dict(phi), reducer=H2.reduce))
        if mapped:
            result.fail(f"relation {relation} maps to {mapped}")
            return result
    for name in H1.gens.names:
        target = H2.reduce(phi[name])
        source = H1.delta_word((H1.gens.index(name),))
        pushed = source.apply_factor(0, image).apply_factor(1, image)
        if H2.reduce(pushed) != H2.delta(target):
            result.fail(f"coproduct of {name} is not intertwined")
            return result
        if H2.epsilon(target).value != H1.counit[name]:
            result.fail(f"counit of {name} is not preserved")
            return result
    if H1.dimension != H2.dimension:
        result.fail(f"dimensions differ: {H1.dimension} vs {H2.dimension}")
        return result
    echelon = SparseEchelon(H2.ctx)
    for word in H1.basis:
        echelon.add(dict(image(word).terms))
    result.data["rank"] = echelon.rank
    if echelon.rank != H2.dimension:
        result.fail(f"images span {echelon.rank} of {H2.dimension} dimensions")
    return result


@dataclass(frozen=True, slots=True)
class IsoWitness:
    family: Family
    ctx: FieldCtx
    a: Fq
    b: Fq
    check: CheckResult

    def to_dict(self) -> Dict[str, object]:
        return {
            "family": self.family.value,
            "field": f"GF({self.ctx.p}^{self.ctx.k})",
            "a": str(self.a),
            "b": str(self.b),
            "verified": self.check.passed,
        }


def _scan(family: Family, ctx: FieldCtx, lam: Fq, gamma: Fq) -> Optional[Tuple[Fq, Fq]]:
    p = ctx.p
    if family is Family.A:
        scales = [ctx.one]
    else:
        scales = [b for b in ctx.elements() if b and b**p == b]
    for b in scales:
        for a in ctx.elements():
            if a**p - a + (b**p) * gamma - lam == 0:
                return a, b
    return None


def _lift(value: Fq, target: FieldCtx) -> Fq:
    if value.ctx.k == target.k:
        return target(value.value)
    return target(embedding(value.ctx, target)[value.value])


def find_pq_iso(
    family: Family,
    lam: Fq,
    gamma: Fq,
    q: int,
    max_degree: int = 8,
    order: Optional[int] = None,
) -> Optional[IsoWitness]:
    """Search for φ: g -> g', x -> a(1 - g') + b x' between two members of a family.

    The scan runs over GF(p^k); when no witness exists there, the field is
    extended through multiples of k up to ``max_degree``.  Returns ``None``
    when the bound is reached.
    """

    base = lam.ctx
    if not base.same_field(gamma.ctx):
        raise FieldError("lambda and gamma live in different fields")
    degree = base.k
    while degree <= max_degree:
        ctx = base if degree == base.k else extend_field(base, degree)
        lam_k, gamma_k = _lift(lam, ctx), _lift(gamma, ctx)
        found = _scan(family, ctx, lam_k, gamma_k)
        if found is not None:
            a, b = found
            if family is Family.A:
                H1 = pq_family_A(ctx, lam_k, q, order)
                H2 = pq_family_A(ctx, gamma_k, q, order)
            else:
                H1 = pq_family_B(ctx, lam_k, q)
                H2 = pq_family_B(ctx, gamma_k, q)
            g2, x2 = H2.generator("g"), H2.generator("x")
            phi = {"g": g2, "x": (g2.one() - g2).scale(a) + x2.scale(b)}
            check = iso_check(H1, H2, phi)
            logger.debug("family {}: witness a={}, b={} over GF({}^{})", family.value, a, b, ctx.p, degree)
            return IsoWitness(family, ctx, a, b, check)
        logger.debug("no witness over GF({}^{}); extending", base.p, degree)
        degree += base.k
    return None


__all__ = [
    "Family",
    "pq_family_A",
    "pq_family_B",
    "iso_check",
    "IsoWitness",
    "find_pq_iso",
]
