"""Characteristic-p adjoint identities, checked by exact reduction in their hypothesis algebras.

Each identity comes with the algebra its statement lives in: a list of
relations in a few generators, parametrised by field scalars (``lambda1``,
``lambda2``, ``lambda3``) and small integers (group order ``n``, ``mu``,
``theta``, ``q``).  The relations are oriented and completed before any claim
is evaluated, so a residue that reduces to zero is zero in the algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from loguru import logger

from .expressions import parse_poly
from .field import FieldCtx, Fq, make_field
from .freealg import (
    GenSet,
    NcPoly,
    TensorPoly,
    ad_L_power,
    ad_R_power,
    commutator,
    jacobson_s,
    power,
    substitute,
    two_letter_algebra,
)
from .hopf import HopfError, HopfPresentation, TailKind, coproduct_tail
from .models import CheckResult, warning
from .rewrite import CompletionError, RewriteSystem, complete, orient


class Identity(str, Enum):
    GROUP_ADJOINT = "group-adjoint"
    SKEW_PRIMITIVE_POWER = "skew-primitive-power"
    TWISTED_ADJOINT = "twisted-adjoint"
    CENTRAL_ADJOINT = "central-adjoint"
    TAIL_ADJOINT = "tail-adjoint"


@dataclass(frozen=True, slots=True)
class Hypothesis:
    """Generators and relation templates of the algebra an identity is stated in.

    Templates are ``str.format`` strings over the integer parameters; the field
    parameters stay symbolic and are bound as scalars when parsing.
    """

    generators: Tuple[str, ...]
    precedence: Tuple[str, ...]
    weights: Mapping[str, int]
    relations: Tuple[str, ...]
    defaults: Mapping[str, int]


_HYPOTHESES: Dict[Identity, Hypothesis] = {
    Identity.GROUP_ADJOINT: Hypothesis(
        ("g", "x"),
        ("x", "g"),
        {"x": 1},
        ("g^{n} - 1", "g*x - x*g - g + g^2"),
        {"n": 0},
    ),
    Identity.SKEW_PRIMITIVE_POWER: Hypothesis(
        ("g", "x"),
        ("x", "g"),
        {"x": 1},
        ("g^{n} - 1", "g*x - x*g - g + g^2"),
        {"n": 0},
    ),
    Identity.TWISTED_ADJOINT: Hypothesis(
        ("g", "x", "y"),
        ("x", "y", "g"),
        {"x": 1, "y": 1},
        (
            "g^{n} - 1",
            "g*x - x*g - lambda1*(g - g^2)",
            "g*y - y*g - lambda2*(g - g^2)",
            "x*y - y*x + lambda1*y - lambda2*x - lambda3*(1 - g^2)",
        ),
        {"n": 0, "lambda1": 1, "lambda2": 1, "lambda3": 1},
    ),
    Identity.CENTRAL_ADJOINT: Hypothesis(
        ("g", "x", "y"),
        ("x", "y", "g"),
        {"x": 1, "y": 1},
        (
            "g^{n} - 1",
            "g*x - x*g - lambda1*(g - g^2)",
            "g*y - y*g",
            "x*y - y*x + lambda1*{mu}*y - lambda3*(1 - g^{mu_shift})",
        ),
        {"n": 0, "mu": 1, "lambda1": 1, "lambda3": 1},
    ),
    Identity.TAIL_ADJOINT: Hypothesis(
        ("g", "x", "y"),
        ("x", "y", "g"),
        {"x": 1, "y": 1},
        (
            "g^{q} - 1",
            "g*x - x*g",
            "g*y - y*g",
            "x*y - y*x - lambda2*x - lambda3*(1 - g^{tail_shift})",
        ),
        {"theta": 1, "q": 5, "lambda2": 0, "lambda3": 1},
    ),
}

_SCALARS = ("lambda1", "lambda2", "lambda3")


def hypothesis(identity: Identity) -> Hypothesis:
    return _HYPOTHESES[identity]


@dataclass(slots=True)
class LemmaAlgebra:
    """A completed hypothesis algebra ready for exact evaluation."""

    ctx: FieldCtx
    gens: GenSet
    relations: List[NcPoly]
    reducer: Callable
    scalars: Dict[str, Fq] = field(default_factory=dict)
    integers: Dict[str, int] = field(default_factory=dict)
    completion_rules: List[str] = field(default_factory=list)
    collapsed: bool = False

    def el(self, name: str) -> NcPoly:
        return NcPoly.generator(self.ctx, self.gens, name)

    def parse(self, text: str) -> NcPoly:
        return self.reducer(parse_poly(text, self.ctx, self.gens, self.scalars))

    def reduce(self, poly):  # type: ignore[no-untyped-def]
        if self.collapsed:
            return poly.like({})
        return self.reducer(poly)


def _resolve_params(identity: Identity, p: int, params: Optional[Mapping[str, int]]) -> Dict[str, int]:
    merged = dict(_HYPOTHESES[identity].defaults)
    merged.update(params or {})
    if "n" in merged and not merged["n"]:
        merged["n"] = p
    if identity is Identity.CENTRAL_ADJOINT:
        merged["mu_shift"] = (merged["mu"] + 1) % merged["n"]
    if identity is Identity.TAIL_ADJOINT:
        merged["tail_shift"] = (merged["theta"] * (p + 1)) % merged["q"]
    return merged


def _tail_coproduct_defined(p: int, values: Mapping[str, int]) -> bool:
    # [Δx, Δy] - Δ(λ2 x + λ3(1 - g^s)) = λ2 (g^s - g^θ)⊗x
    return values["lambda2"] % p == 0 or (values["theta"] * p) % values["q"] == 0


def _render(hyp: Hypothesis, values: Mapping[str, int]) -> List[str]:
    return [template.format(**values) for template in hyp.relations]


def build_algebra(identity: Identity, p: int, params: Optional[Mapping[str, int]] = None) -> LemmaAlgebra:
    """Orient and complete the hypothesis algebra of ``identity`` over GF(p)."""

    hyp = _HYPOTHESES[identity]
    values = _resolve_params(identity, p, params)
    if identity is Identity.TAIL_ADJOINT and not _tail_coproduct_defined(p, values):
        raise HopfError(
            f"{identity.value}: the coproduct does not respect x*y - y*x unless lambda2 = 0 "
            f"or g^(theta p) = 1; got lambda2={values['lambda2']}, theta={values['theta']}, q={values['q']}"
        )
    ctx = make_field(p)
    gens = GenSet.create(hyp.generators, precedence=hyp.precedence, weights=hyp.weights)
    scalars = {name: ctx(values[name]) for name in _SCALARS if name in values}
    relations = [parse_poly(text, ctx, gens, scalars) for text in _render(hyp, values)]
    relations = [relation for relation in relations if relation]
    sys = orient(relations, gens, ctx=ctx)
    try:
        completion = complete(sys)
    except CompletionError as exc:
        raise HopfError(f"{identity.value}: hypothesis algebra does not complete: {exc}") from exc
    integers = {name: value for name, value in values.items() if name not in _SCALARS}
    algebra = LemmaAlgebra(
        ctx,
        gens,
        relations,
        completion.system.reduce,
        scalars,
        integers,
        [rule.format() for rule in completion.added],
        completion.collapsed,
    )
    if algebra.completion_rules:
        logger.debug("{} at p={}: completion added {}", identity.value, p, algebra.completion_rules)
    return algebra


def algebra_from_presentation(
    identity: Identity, H: HopfPresentation, params: Optional[Mapping[str, int]] = None
) -> LemmaAlgebra:
    """Evaluate inside ``H`` after confirming that it satisfies the hypothesis relations."""

    hyp = _HYPOTHESES[identity]
    values = _resolve_params(identity, H.ctx.p, params)
    missing = [name for name in hyp.generators if name not in H.gens.names]
    if missing:
        raise HopfError(f"{H.name} lacks generators {', '.join(missing)} needed by {identity.value}")
    scalars = dict(H.scalars)
    for name in _SCALARS:
        if name in values and name not in scalars:
            scalars[name] = H.ctx(values[name])
    for text in _render(hyp, values):
        relation = parse_poly(text, H.ctx, H.gens, scalars)
        if H.reduce(relation):
            raise HopfError(f"{H.name} does not satisfy the hypothesis relation {text}")
    integers = {name: value for name, value in values.items() if name not in _SCALARS}
    return LemmaAlgebra(H.ctx, H.gens, list(H.relations), H.reduce, scalars, integers)


# -- claims -------------------------------------------------------------------------
Claims = List[Tuple[str, object]]


def _group_adjoint_claims(A: LemmaAlgebra, p: int) -> Claims:
    g, x = A.el("g"), A.el("x")
    r = A.reduce
    g_p = r(power(g, p, r))
    n = A.integers["n"]
    claims: Claims = [
        ("(g)(ad_R x)^(p-1) = g - g^p", ad_R_power(g, x, p - 1, r) - (g - g_p)),
        ("(g)(ad_R x)^p = [g,x]", ad_R_power(g, x, p, r) - commutator(g, x, r)),
        ("(ad_L x)^(p-1)(g) = g - g^p", ad_L_power(x, g, p - 1, r) - (g - g_p)),
        ("(ad_L x)^p(g) = [x,g]", ad_L_power(x, g, p, r) - commutator(x, g, r)),
        ("[x^p,g] = [x,g]", commutator(r(power(x, p, r)), g, r) - commutator(x, g, r)),
    ]
    for i in range(1, n + 1):
        g_i = r(power(g, i, r))
        g_next = r(g_i * g)
        expected = x * g_i + g_i.scale(i) - g_next.scale(i)
        claims.append((f"g^{i} x = x g^{i} + {i} g^{i} - {i} g^{i + 1}", g_i * x - expected))
    return claims


def _skew_primitive_claims(A: LemmaAlgebra, p: int) -> Claims:
    g, x = A.el("g"), A.el("x")
    one = g.one()
    r = A.reduce
    delta_x = TensorPoly.tensor(x, one) + TensorPoly.tensor(g, x)
    z = r(power(x, p, r) - x)
    g_p = r(power(g, p, r))
    image = r(power(delta_x, p, r) - delta_x)
    residue = image - TensorPoly.tensor(z, one) - TensorPoly.tensor(g_p, z)
    return [("x^p - x in P_(1,g^p)", r(residue))]


def _adjoint_sum(A: LemmaAlgebra, base: NcPoly, step: Callable[[NcPoly, int], NcPoly], c: Fq, n: int) -> NcPoly:
    """Σ_{i=0}^{n-2} c^i step(base, n-1-i)."""

    total = base.like({})
    for i in range(n - 1):
        total = total + step(base, n - 1 - i).scale(c**i)
    return total


def _twisted_claims(A: LemmaAlgebra, p: int, depth: int) -> Claims:
    g, x, y = A.el("g"), A.el("x"), A.el("y")
    r = A.reduce
    lambda1, lambda2, lambda3 = (A.scalars[name] for name in _SCALARS)
    g2 = r(g * g)
    right_once = ad_R_power(x, y, 1, r)
    left_once = ad_L_power(x, y, 1, r)
    claims: Claims = [
        ("(x)(ad_R y)^p = lambda2^(p-1) (x)(ad_R y)", ad_R_power(x, y, p, r) - right_once.scale(lambda2 ** (p - 1))),
        ("(ad_L x)^p(y) = (-lambda1)^(p-1) (ad_L x)(y)", ad_L_power(x, y, p, r) - left_once.scale((-lambda1) ** (p - 1))),
    ]
    for n in range(2, depth + 1):
        right_sum = _adjoint_sum(A, g2, lambda a, k: ad_R_power(a, y, k, r), lambda2, n)
        expected = right_once.scale(lambda2 ** (n - 1)) - right_sum.scale(lambda3)
        claims.append((f"(x)(ad_R y)^{n} expansion", ad_R_power(x, y, n, r) - expected))
        left_sum = _adjoint_sum(A, g2, lambda a, k: ad_L_power(x, a, k, r), -lambda1, n)
        expected = left_once.scale((-lambda1) ** (n - 1)) - left_sum.scale(lambda3)
        claims.append((f"(ad_L x)^{n}(y) expansion", ad_L_power(x, y, n, r) - expected))
    return claims


def _central_claims(A: LemmaAlgebra, p: int, depth: int, result: CheckResult) -> Claims:
    g, x, y = A.el("g"), A.el("x"), A.el("y")
    r = A.reduce
    lambda1, lambda3 = A.scalars["lambda1"], A.scalars["lambda3"]
    mu = A.integers["mu"]
    c = -(lambda1 * mu)
    shifted = r(power(g, A.integers["mu_shift"], r))
    left_once = ad_L_power(x, y, 1, r)
    claims: Claims = []
    for n in range(2, depth + 1):
        claims.append((f"(x)(ad_R y)^{n} = 0", ad_R_power(x, y, n, r)))
        left_sum = _adjoint_sum(A, shifted, lambda a, k: ad_L_power(x, a, k, r), c, n)
        expected = left_once.scale(c ** (n - 1)) - left_sum.scale(lambda3)
        claims.append((f"(ad_L x)^{n}(y) expansion", ad_L_power(x, y, n, r) - expected))
    truncated = ad_L_power(x, y, p, r) - left_once.scale(c ** (p - 1))
    label = "(ad_L x)^p(y) = (-lambda1*mu)^(p-1) (ad_L x)(y)"
    if mu % p == 0 and lambda1 and lambda3 and truncated:
        # the p-th power form drops the sum, which survives when the twist vanishes
        result.extend([warning(f"{label} needs mu != 0 mod p when lambda1*lambda3 != 0; residue {truncated}")])
        result.data.setdefault("side_conditions", {})[label] = str(truncated)
    else:
        claims.append((label, truncated))
    return claims


def _tail_claims(A: LemmaAlgebra, p: int) -> Claims:
    g, x, y = A.el("g"), A.el("x"), A.el("y")
    r = A.reduce
    theta, q = A.integers["theta"], A.integers["q"]
    one = g.one()

    def g_power(exponent: int) -> NcPoly:
        return r(power(g, exponent % q, r))

    omega = coproduct_tail(TailKind.OMEGA_THETA, A.ctx, A.gens, x="x", g="g", theta=theta)
    omega = r(omega)
    shift = TensorPoly.tensor(y, one) + TensorPoly.tensor(g_power(theta * p), y)
    images = {
        "g": TensorPoly.tensor(g, g),
        "x": TensorPoly.tensor(x, one) + TensorPoly.tensor(g_power(theta), x),
        "y": shift + omega,
    }

    def delta(poly: NcPoly) -> TensorPoly:
        return r(substitute(poly, images, reducer=r))

    def minus_d1(z: NcPoly, exponent: int) -> TensorPoly:
        return delta(z) - TensorPoly.tensor(g_power(exponent), z) - TensorPoly.tensor(z, one)

    bracket = commutator(x, y, r)
    seed = r(bracket * power(x, p - 1, r))
    first = ad_R_power(omega, shift, 1, r) - minus_d1(seed, 2 * theta * p)
    z = ad_R_power(seed, y, p - 2, r)
    full = ad_R_power(omega, shift, p - 1, r) - minus_d1(z, theta * p * p)
    return [
        ("(omega)(ad_R Y) = -d1_(1,g^(2 theta p))([x,y] x^(p-1))", r(first)),
        ("(omega)(ad_R Y)^(p-1) = -d1_(1,g^(theta p^2))(([x,y] x^(p-1))(ad_R y)^(p-2))", r(full)),
    ]


def verify_identity(
    identity: Identity,
    p: int,
    params: Optional[Mapping[str, int]] = None,
    algebra: Optional[HopfPresentation] = None,
    depth: Optional[int] = None,
) -> CheckResult:
    """Evaluate every claim of ``identity``; each residue must reduce to zero.

    ``depth`` bounds the general-n expansions (default ``p + 1``).  Passing
    ``algebra`` evaluates inside an existing presentation instead of the free
    hypothesis algebra; it must satisfy the hypothesis relations.
    """

    if algebra is not None:
        A = algebra_from_presentation(identity, algebra, params)
        p = algebra.ctx.p
    else:
        A = build_algebra(identity, p, params)
    result = CheckResult(identity.value)
    shown: Dict[str, object] = {k: v for k, v in A.integers.items() if not k.endswith("_shift")}
    shown.update({k: str(v) for k, v in A.scalars.items() if k in _SCALARS})
    result.data.update({"p": p, "params": shown})
    if A.completion_rules:
        result.data["completion"] = list(A.completion_rules)
    if A.collapsed:
        result.extend([warning("hypothesis relations collapse the algebra to zero")])
    depth = depth if depth is not None else p + 1
    if identity is Identity.GROUP_ADJOINT:
        claims = _group_adjoint_claims(A, p)
    elif identity is Identity.SKEW_PRIMITIVE_POWER:
        claims = _skew_primitive_claims(A, p)
    elif identity is Identity.TWISTED_ADJOINT:
        claims = _twisted_claims(A, p, depth)
    elif identity is Identity.CENTRAL_ADJOINT:
        claims = _central_claims(A, p, depth, result)
    else:
        claims = _tail_claims(A, p)
    outcome: Dict[str, str] = {}
    for label, residue in claims:
        residue = A.reduce(residue)
        outcome[label] = "0" if not residue else str(residue)
        if residue:
            result.fail(f"{label}: residue {residue}")
    result.data["claims"] = outcome
    logger.debug("{} at p={}: {} claims, {} failed", identity.value, p, len(claims), len(result.errors))
    return result


def verify_jacobson(p: int) -> CheckResult:
    """The Jacobson expansion of (a+b)^p and the adjoint-power sums in the free algebra on a, b."""

    ctx, gens = two_letter_algebra(p)
    a = NcPoly.generator(ctx, gens, "a")
    b = NcPoly.generator(ctx, gens, "b")
    s = jacobson_s(p)
    expansion = power(a + b, p) - power(a, p) - power(b, p)
    for s_i in s:
        expansion = expansion - s_i
    left_sum = a.like({})
    right_sum = a.like({})
    for i in range(p):
        left_sum = left_sum + power(a, i) * b * power(a, p - 1 - i)
        right_sum = right_sum + power(b, p - 1 - i) * a * power(b, i)
    claims = [
        ("(a+b)^p = a^p + b^p + sum s_i(a,b)", expansion),
        ("(ad_L a)^p(b) = [a^p,b]", ad_L_power(a, b, p) - commutator(power(a, p), b)),
        ("(ad_L a)^(p-1)(b) = sum a^i b a^(p-1-i)", ad_L_power(a, b, p - 1) - left_sum),
        ("(a)(ad_R b)^p = [a,b^p]", ad_R_power(a, b, p) - commutator(a, power(b, p))),
        ("(a)(ad_R b)^(p-1) = sum b^(p-1-i) a b^i", ad_R_power(a, b, p - 1) - right_sum),
    ]
    result = CheckResult("jacobson")
    result.data["p"] = p
    result.data["s"] = [str(s_i) for s_i in s]
    outcome = {}
    for label, residue in claims:
        outcome[label] = "0" if not residue else str(residue)
        if residue:
            result.fail(f"{label}: residue {residue}")
    result.data["claims"] = outcome
    return result


def identity_grid(identity: Identity, p: int) -> List[Dict[str, int]]:
    """Parameter points the ``lemmas`` command sweeps: scalars over {0,1}, ``mu`` over 0..p-1.

    The tail-adjoint grid also runs ``theta`` over 1 and ``q``, keeping only the
    points on which the hypothesis coproduct is well defined.
    """

    hyp = _HYPOTHESES[identity]
    if identity is Identity.TAIL_ADJOINT:
        q = hyp.defaults["q"]
        points = [
            {"theta": theta, "lambda2": lambda2, "lambda3": lambda3}
            for theta in (1, q)
            for lambda2 in (0, 1)
            for lambda3 in (0, 1)
        ]
        return [point for point in points if _tail_coproduct_defined(p, {**hyp.defaults, **point})]
    points: List[Dict[str, int]] = [{}]
    for name in hyp.defaults:
        if name in _SCALARS:
            values: Sequence[int] = (0, 1)
        elif name == "mu":
            values = tuple(range(p))
        else:
            continue
        points = [{**point, name: value} for point in points for value in values]
    return points


__all__ = [
    "Identity",
    "Hypothesis",
    "hypothesis",
    "LemmaAlgebra",
    "build_algebra",
    "algebra_from_presentation",
    "verify_identity",
    "verify_jacobson",
    "identity_grid",
]
