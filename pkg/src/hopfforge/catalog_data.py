"""Dataset of the classified pointed Hopf algebras of dimension p²q, pq², pqr and pq.

Every template string is a Jinja2 expression rendered with the primes
(``p``, ``q``, ``r``), the semidirect twist ``t`` and the integer parameters of
the case (``mu``, ``nu``); the result is parsed with the expression grammar,
field parameters (``lambda1``, ``alpha2``, ...) and roots of unity (``xi``,
``zeta``, ``theta``, ``eta``) being bound as scalar names.

Constraint kinds:

``ambiguity``
    a condition stated with the case; strict instantiation rejects violations.
``derived``
    an overlap condition the case's own list misses; handled like ``ambiguity``.
``order``
    a parameter killed because a group-like of order prime to p acts by a
    unipotent shift; reported and excluded from sweeps, but instantiation only
    warns so the stated presentation stays reachable.
"""

from __future__ import annotations

from copy import deepcopy
from typing import Dict, List, Optional, Tuple, TypedDict


class GroupTemplate(TypedDict, total=False):
    """Presentation of the coradical group."""

    title: str
    generators: List[Tuple[str, str]]
    relations: List[str]
    order: str
    twist: Dict[str, str]
    affine: Dict[str, str]
    admissible: str


class TailData(TypedDict, total=False):
    kind: str
    group: str
    theta: int
    length: str
    root: str


class GeneratorData(TypedDict, total=False):
    name: str
    weight: str
    coproduct: str
    tail: TailData


class ParamData(TypedDict, total=False):
    name: str
    domain: str
    values: str
    derived: str


class ConstraintData(TypedDict, total=False):
    expr: str
    when: str
    kind: str
    anchor: str


class CaseData(TypedDict, total=False):
    title: str
    row: str
    dim: str
    group: str
    roots: Dict[str, str]
    generators: List[GeneratorData]
    relations: List[str]
    params: List[ParamData]
    constraints: List[ConstraintData]
    admissible: str
    notes: List[str]
    caveat: str


class YDGeneratorData(TypedDict, total=False):
    name: str
    degree: str
    character: Dict[str, str]
    weight: str
    nilpotency: str
    tail: TailData


class YDItemData(TypedDict, total=False):
    label: str
    generators: List[YDGeneratorData]
    ranges: Dict[str, str]


class YDRowData(TypedDict, total=False):
    title: str
    dim: str
    group: str
    roots: Dict[str, str]
    items: List[YDItemData]
    count: str
    cases: List[str]


DIMENSIONS: Dict[str, str] = {
    "p2q": "p*p*q",
    "pq2": "p*q*q",
    "pqr": "p*q*r",
    "pq": "p*q",
}

PRIME_ROLES: Dict[str, Tuple[str, ...]] = {
    "p2q": ("p", "q"),
    "pq2": ("p", "q"),
    "pqr": ("p", "q", "r"),
    "pq": ("p", "q"),
}


_GROUPS: Dict[str, GroupTemplate] = {
    "C_pq": {"title": "C_pq", "generators": [("g", "p*q")], "order": "p*q"},
    "C_q": {"title": "C_q", "generators": [("g", "q")], "order": "q"},
    "C_q2": {"title": "C_q²", "generators": [("g", "q*q")], "order": "q*q"},
    "C_qxC_q": {
        "title": "C_q × C_q",
        "generators": [("g", "q"), ("h", "q")],
        "relations": ["g*h - h*g"],
        "order": "q*q",
    },
    "C_qr": {"title": "C_qr", "generators": [("g", "q*r")], "order": "q*r"},
    "Z_p:Z_q": {
        "title": "Z_p ⋊ Z_q",
        "generators": [("g", "q"), ("h", "p")],
        "relations": ["g*h - h^{{t}}*g"],
        "order": "p*q",
        "twist": {"modulus": "p", "order": "q"},
        "affine": {"g": "t + 1"},
        "admissible": "(p - 1) % q == 0",
    },
    "Z_q:Z_p": {
        "title": "Z_q ⋊ Z_p",
        "generators": [("g", "p"), ("h", "q")],
        "relations": ["g*h - h^{{t}}*g"],
        "order": "p*q",
        "twist": {"modulus": "q", "order": "p"},
        "affine": {"g": "t + 1"},
        "admissible": "(q - 1) % p == 0",
    },
    "Z_q:Z_r": {
        "title": "Z_q ⋊ Z_r",
        "generators": [("g", "r"), ("h", "q")],
        "relations": ["g*h - h^{{t}}*g"],
        "order": "q*r",
        "twist": {"modulus": "q", "order": "r"},
        "affine": {"g": "t + 1"},
        "admissible": "(q - 1) % r == 0",
    },
}


def _prim(name: str = "x") -> GeneratorData:
    return {"name": name, "coproduct": f"{name} (#) 1 + 1 (#) {name}"}


def _skew(name: str, degree: str) -> GeneratorData:
    return {"name": name, "coproduct": f"{name} (#) 1 + {degree} (#) {name}"}


def _z2(*names: str) -> List[ParamData]:
    return [{"name": name, "domain": "Z2"} for name in names]


def _k(*names: str) -> List[ParamData]:
    return [{"name": name, "domain": "K"} for name in names]


def _order(name: str, element: str = "g") -> ConstraintData:
    return {
        "expr": name,
        "kind": "order",
        "anchor": (
            f"conjugation by {element} shifts the skew-primitive by a multiple of {name}, "
            f"and the order of {element} is prime to p"
        ),
    }


_Q_DIVIDES = "(p - 1) % q == 0"
_Q_NOT_DIVIDES = "(p - 1) % q != 0"


# -- p²q ---------------------------------------------------------------------------

_A_CASES: Dict[str, CaseData] = {
    "A1": {
        "title": "x ∈ V_1^ε",
        "relations": ["g*x - x*g", "x^{{p}} - lambda*x"],
        "generators": [_prim()],
        "params": _z2("lambda"),
    },
    "A2": {
        "title": "x ∈ V_1^χ",
        "relations": ["g*x - xi*x*g", "x^{{p}} - lambda*x"],
        "generators": [_prim()],
        "params": _z2("lambda"),
        "constraints": [
            {
                "expr": "lambda",
                "when": _Q_NOT_DIVIDES,
                "kind": "ambiguity",
                "anchor": "λ(ξ−ξ^p)=0 which imposes the condition: if q∤p−1, then λ=0",
            }
        ],
    },
    "A3": {
        "title": "x ∈ V_g^ε",
        "relations": ["g*x - x*g - lambda1*(g - g^2)", "x^{{p}} - lambda1*x - lambda2*(1 - g^{{p}})"],
        "generators": [_skew("x", "g")],
        "params": _z2("lambda1") + _k("lambda2"),
        "notes": [
            "λ₁ ∈ {0,1} by rescaling x; with λ₁=1 the members A3(λ₂) are the pq-family A tensored up to C_pq.",
        ],
    },
    "A4a": {
        "title": "x ∈ V_{g^p}^ε, q | p−1",
        "relations": [
            "g*x - x*g - lambda1*(g - g^{{p+1}})",
            "x^{{p}} - lambda2*x - lambda3*(1 - g^{{p}})",
        ],
        "generators": [_skew("x", "g^{{p}}")],
        "params": _z2("lambda1") + _k("lambda2", "lambda3"),
        "admissible": _Q_DIVIDES,
        "constraints": [
            {
                "expr": "(lambda2 - lambda1^{{p-1}})*lambda1",
                "kind": "ambiguity",
                "anchor": "[g,x^p]=(g)(ad_R x)^p which amounts to (λ₂−λ₁^{p−1})λ₁=0",
            }
        ],
        "notes": [
            "A4a(1,λ₃) ≅ A4a(1,γ₃) whenever a^p−a+γ₃−λ₃=0 has a root; A4a(0,λ₃) likewise with b^p=b≠0.",
            "A4a with λ₁=0 reduces to A3-type data over the subgroup generated by g^p.",
        ],
    },
    "A4b": {
        "title": "x ∈ V_{g^p}^ε, q ∤ p−1",
        "relations": ["g*x - x*g - lambda1*(g - g^{{p+1}})", "x^{{p}} - lambda2*(1 - g^{{p*p}})"],
        "generators": [_skew("x", "g^{{p}}")],
        "params": _z2("lambda1") + _k("lambda2"),
        "admissible": _Q_NOT_DIVIDES,
        "constraints": [
            {
                "expr": "lambda1",
                "kind": "ambiguity",
                "anchor": "[g,x^p]=(g)(ad_R x)^p which amounts to λ₁=0",
            }
        ],
    },
    "A5": {
        "title": "x ∈ V_{g^q}^ε",
        "relations": ["g*x - x*g - lambda1*(g - g^{{q+1}})", "x^{{p}} - ({{q}}*lambda1)^{{p-1}}*x"],
        "generators": [_skew("x", "g^{{q}}")],
        "params": _z2("lambda1"),
    },
    "A6": {
        "title": "x ∈ V_{g^q}^χ",
        "relations": ["g*x - xi*x*g - lambda1*(g - g^{{q+1}})", "x^{{p}}"],
        "generators": [_skew("x", "g^{{q}}")],
        "params": _z2("lambda1"),
    },
}

_B1_CASES: Dict[str, CaseData] = {
    "B1a": {
        "title": "x ∈ V_1^ε over Z_p ⋊ Z_q",
        "group": "Z_p:Z_q",
        "relations": ["g*x - x*g", "h*x - x*h", "x^{{p}} - lambda*x"],
        "params": _z2("lambda"),
        "notes": [
            "The lifting display writes g^p=1, h^q=1; the group Z_p ⋊ Z_q needs g of order q acting on h of order p.",
        ],
    },
    "B1b": {
        "title": "x ∈ V_1^χ over Z_p ⋊ Z_q",
        "group": "Z_p:Z_q",
        "relations": ["g*x - xi*x*g", "h*x - x*h", "x^{{p}} - lambda*x"],
        "params": _z2("lambda"),
        "notes": ["ξ^p=ξ because q | p−1, so λ ∈ {0,1} after rescaling x."],
    },
}

_B2_CASES: Dict[str, CaseData] = {
    "B2a": {
        "title": "x ∈ V_1^ε over Z_q ⋊ Z_p",
        "group": "Z_q:Z_p",
        "relations": ["g*x - x*g", "h*x - x*h", "x^{{p}} - lambda*x"],
        "params": _z2("lambda"),
    },
}

_C_PRIMITIVE = ["g*x - x*g", "g*y - y*g"]

_C1_CASES: Dict[str, CaseData] = {
    "C1a": {
        "title": "x, y ∈ V_1^ε, graded",
        "relations": _C_PRIMITIVE + ["x^{{p}}", "y^{{p}}", "x*y - y*x"],
    },
    "C1b": {
        "title": "x, y ∈ V_1^ε, x^p = x",
        "relations": _C_PRIMITIVE + ["x^{{p}} - x", "y^{{p}}", "x*y - y*x"],
    },
    "C1c": {
        "title": "x, y ∈ V_1^ε, x^p = y",
        "relations": _C_PRIMITIVE + ["x^{{p}} - y", "y^{{p}}", "x*y - y*x"],
    },
    "C1d": {
        "title": "x, y ∈ V_1^ε, x^p = x, y^p = y",
        "relations": _C_PRIMITIVE + ["x^{{p}} - x", "y^{{p}} - y", "x*y - y*x"],
    },
    "C1e": {
        "title": "x, y ∈ V_1^ε, [x, y] = y",
        "relations": _C_PRIMITIVE + ["x^{{p}} - x", "y^{{p}}", "x*y - y*x - y"],
        "notes": ["The five C1 classes are the restricted Lie algebras of dimension two up to isomorphism."],
    },
}

_LIE_RELATIONS = [
    "x^{{p}} - alpha1*x - alpha2*y",
    "y^{{p}} - beta1*x - beta2*y",
    "x*y - y*x - gamma1*x - gamma2*y",
]
_LIE_PARAMS = _k("alpha1", "alpha2", "beta1", "beta2", "gamma1", "gamma2")

_C2_CONSTRAINTS: List[ConstraintData] = [
    {"expr": "alpha2", "kind": "ambiguity", "anchor": "which gives the ambiguity conditions α₂=0=β₁"},
    {"expr": "beta1", "kind": "ambiguity", "anchor": "which gives the ambiguity conditions α₂=0=β₁"},
    {"expr": "gamma1", "kind": "ambiguity", "anchor": "(ξ^ν−1)γ₁=0 which gives the ambiguity condition γ₁=0"},
    {
        "expr": "alpha1*gamma2 - gamma2^{{p}}",
        "kind": "ambiguity",
        "anchor": "imposes the conditions α₁γ₂−γ₂^p=0, β₂γ₂=0",
    },
    {"expr": "beta2*gamma2", "kind": "ambiguity", "anchor": "imposes the conditions α₁γ₂−γ₂^p=0, β₂γ₂=0"},
    {
        "expr": "beta2",
        "when": _Q_NOT_DIVIDES,
        "kind": "ambiguity",
        "anchor": "if q∤p−1 then ξ^{pν}≠ξ^ν whence β₂=0",
    },
]

_C2_CASES: Dict[str, CaseData] = {
    name: {
        "title": f"x ∈ V_1^ε, y ∈ V_1^(χ^μ), {cond}",
        "relations": ["g*x - x*g", "g*y - xi^{{mu}}*y*g"] + _LIE_RELATIONS,
        "params": [{"name": "mu", "domain": "int", "values": "range(1, q)"}] + _LIE_PARAMS,
        "admissible": admissible,
        "constraints": _C2_CONSTRAINTS,
        "notes": ["The case text writes Γ₂ once for γ₂."],
    }
    for name, cond, admissible in (("C2a", "q ∤ p−1", _Q_NOT_DIVIDES), ("C2b", "q | p−1", _Q_DIVIDES))
}

_C3_CONSTRAINTS: List[ConstraintData] = [
    {"expr": "alpha1", "when": "(p - 1) % q != 0", "kind": "ambiguity", "anchor": "α₁(ξ−ξ^p)=0"},
    {"expr": "alpha2", "when": "(p - mu) % q != 0", "kind": "ambiguity", "anchor": "α₂(ξ^μ−ξ^p)=0"},
    {"expr": "beta1", "when": "(p*mu - 1) % q != 0", "kind": "ambiguity", "anchor": "β₁(ξ−ξ^{pμ})=0"},
    {"expr": "beta2", "when": "((p - 1)*mu) % q != 0", "kind": "ambiguity", "anchor": "β₂(ξ^μ−ξ^{pμ})=0"},
    {"expr": "gamma2", "kind": "ambiguity", "anchor": "γ₂(ξ^μ−ξ^{μ+1})=0 which imposes the ambiguity condition γ₂=0"},
    {"expr": "gamma1", "when": "mu != 0", "kind": "ambiguity", "anchor": "γ₁(ξ−ξ^{μ+1})=0"},
    {"expr": "alpha1*gamma1", "kind": "ambiguity", "anchor": "amounts to α₁γ₁=0 and β₂γ₁−γ₁^p=0"},
    {"expr": "beta2*gamma1 - gamma1^{{p}}", "kind": "ambiguity", "anchor": "amounts to α₁γ₁=0 and β₂γ₁−γ₁^p=0"},
]


def _c3(title: str, mu: str, admissible: str, notes: Optional[List[str]] = None) -> CaseData:
    entry: CaseData = {
        "title": f"x ∈ V_1^χ, y ∈ V_1^(χ^μ), {title}",
        "relations": ["g*x - xi*x*g", "g*y - xi^{{mu}}*y*g"] + _LIE_RELATIONS,
        "params": [{"name": "mu", "domain": "int", "values": mu}] + _LIE_PARAMS,
        "admissible": admissible,
        "constraints": _C3_CONSTRAINTS,
    }
    if notes:
        entry["notes"] = notes
    return entry


_C3_CASES: Dict[str, CaseData] = {
    "C3a1": _c3("μ = 0, q | p−1", "[0]", _Q_DIVIDES),
    "C3a2": _c3("μ = 0, q ∤ p−1", "[0]", _Q_NOT_DIVIDES),
    "C3b": _c3(
        "μ = 1, q | p−1",
        "[1]",
        _Q_DIVIDES,
        ["The normalization β₂=1 is an isomorphism-class statement; the entry keeps β₂ free."],
    ),
    "C3c1": _c3("μ ∉ {0,1}, q | p−1", "range(2, q)", _Q_DIVIDES),
    "C3c2": _c3("μ ∉ {0,1}, q | p−μ", "range(2, q)", "(p - mu) % q == 0"),
    "C3c3": _c3(
        "μ ∉ {0,1}, q | pμ−1",
        "range(2, q)",
        "(p*mu - 1) % q == 0 and (p - mu) % q != 0",
        ["When q | p−μ and q | pμ−1 both hold (μ ≡ −1) the entry falls under C3c2."],
    ),
    "C3c4": _c3(
        "μ ∉ {0,1}, otherwise",
        "range(2, q)",
        "(p - 1) % q != 0 and (p - mu) % q != 0 and (p*mu - 1) % q != 0",
    ),
}

_C4_CASES: Dict[str, CaseData] = {
    "C4a1": {
        "title": "x ∈ V_g^ε, y ∈ V_1^ε, q | p−1",
        "generators": [_prim("y"), _skew("x", "g")],
        "relations": [
            "g*x - x*g - lambda1*(g - g^2)",
            "g*y - y*g",
            "x^{{p}} - lambda3*x - lambda4*(1 - g^{{p}})",
            "y^{{p}} - lambda5*y",
            "x*y - y*x - lambda6*x - lambda7*(1 - g)",
        ],
        "params": _z2("lambda1") + _k("lambda3", "lambda4", "lambda5", "lambda6", "lambda7"),
        "admissible": _Q_DIVIDES,
        "constraints": [
            {"expr": "lambda1", "kind": "ambiguity", "anchor": "g^p=g, [g^p,x]=pg^{p−1}[g,x]=0 ... it follows that λ₁=0"},
            {"expr": "lambda3*lambda6", "kind": "ambiguity", "anchor": "λ₃λ₆=0, λ₃λ₇=0"},
            {"expr": "lambda3*lambda7", "kind": "ambiguity", "anchor": "λ₃λ₆=0, λ₃λ₇=0"},
            {"expr": "(lambda5 - lambda6^{{p-1}})*lambda6", "kind": "ambiguity", "anchor": "(λ₅−λ₆^{p−1})λ₆=0"},
            {"expr": "(lambda5 - lambda6^{{p-1}})*lambda7", "kind": "ambiguity", "anchor": "(λ₅−λ₆^{p−1})λ₇=0"},
        ],
        "notes": ["The case concludes λ₁=0 yet keeps λ₁ in its relation list; the entry keeps it with the constraint."],
    },
    "C4a2": {
        "title": "x ∈ V_g^ε, y ∈ V_1^ε, q ∤ p−1",
        "generators": [_prim("y"), _skew("x", "g")],
        "relations": [
            "g*x - x*g - lambda1*(g - g^2)",
            "g*y - y*g",
            "x^{{p}} - lambda1^{{p-1}}*x - lambda3*(1 - g^{{p}})",
            "y^{{p}} - lambda4*y",
            "x*y - y*x - lambda5*x - lambda6*(1 - g)",
        ],
        "params": _z2("lambda1") + _k("lambda3", "lambda4", "lambda5", "lambda6"),
        "admissible": _Q_NOT_DIVIDES,
        "constraints": [
            {"expr": "lambda1*lambda5", "kind": "ambiguity", "anchor": "amounts to λ₁λ₅=0"},
            {"expr": "lambda6", "kind": "ambiguity", "anchor": "amounts to λ₆=0"},
            {"expr": "lambda5^{{p}} - lambda5*lambda4", "kind": "ambiguity", "anchor": "λ₅^p−λ₅λ₄=0"},
            _order("lambda1"),
        ],
    },
    "C4b1": {
        "title": "x ∈ V_g^ε, y ∈ V_g^ε, q | p−1",
        "generators": [_skew("y", "g"), _skew("x", "g")],
        "relations": [
            "g*x - x*g - lambda1*(g - g^2)",
            "g*y - y*g - lambda2*(g - g^2)",
            "x^{{p}} - lambda3*x - lambda4*y - lambda5*(1 - g^{{p}})",
            "y^{{p}} - lambda6*x - lambda7*y - lambda8*(1 - g^{{p}})",
            "x*y - y*x + lambda1*y - lambda2*x - lambda9*(1 - g^2)",
        ],
        "params": _z2("lambda1", "lambda2") + _k(*(f"lambda{i}" for i in range(3, 10))),
        "admissible": _Q_DIVIDES,
        "constraints": [
            {"expr": "lambda1", "kind": "ambiguity", "anchor": "it follows that λ₁=0=λ₂"},
            {"expr": "lambda2", "kind": "ambiguity", "anchor": "it follows that λ₁=0=λ₂"},
            {"expr": "lambda3*lambda9", "kind": "ambiguity", "anchor": "amounts to λ₃λ₉=0, λ₇λ₉=0"},
            {"expr": "lambda7*lambda9", "kind": "ambiguity", "anchor": "amounts to λ₃λ₉=0, λ₇λ₉=0"},
            {
                "expr": "lambda4*lambda9",
                "when": "q > 2",
                "kind": "derived",
                "anchor": "overlap x·x^p = x^p·x leaves λ₄λ₉(1−g²)",
            },
            {
                "expr": "lambda6*lambda9",
                "when": "q > 2",
                "kind": "derived",
                "anchor": "overlap y·y^p = y^p·y leaves λ₆λ₉(1−g²)",
            },
        ],
    },
    "C4b2": {
        "title": "x ∈ V_g^ε, y ∈ V_g^ε, q ∤ p−1",
        "generators": [_skew("y", "g"), _skew("x", "g")],
        "relations": [
            "g*x - x*g - lambda1*(g - g^2)",
            "g*y - y*g - lambda2*(g - g^2)",
            "x^{{p}} - lambda1^{{p-1}}*x - lambda3*(1 - g^{{p}})",
            "y^{{p}} - lambda2^{{p-1}}*y - lambda4*(1 - g^{{p}})",
            "x*y - y*x + lambda1*y - lambda2*x - lambda5*(1 - g^2)",
        ],
        "params": _z2("lambda1", "lambda2") + _k("lambda3", "lambda4", "lambda5"),
        "admissible": _Q_NOT_DIVIDES,
        "constraints": [_order("lambda1"), _order("lambda2")],
        "notes": ["The y^p relation is printed with λ₂^{p−1}x; the skew-primitive computation gives λ₂^{p−1}y."],
    },
    "C4c1": {
        "title": "x ∈ V_g^ε, y ∈ V_{g^μ}^ε, μ ∉ {0,1}, q | p−1",
        "generators": [_skew("y", "g^{{mu}}"), _skew("x", "g")],
        "relations": [
            "g*x - x*g - lambda1*(g - g^2)",
            "g*y - y*g - lambda2*(g - g^{{mu+1}})",
            "x*y - y*x + {{mu}}*lambda1*y - lambda2*x - lambda3*(1 - g^{{mu+1}})",
            "y^{{p}} - lambda4*y - lambda5*(1 - g^{{mu}})",
            "x^{{p}} - lambda6*x - lambda7*(1 - g^{{p}})",
        ],
        "params": [{"name": "mu", "domain": "int", "values": "range(2, q)"}]
        + _z2("lambda1", "lambda2")
        + _k("lambda3", "lambda4", "lambda5", "lambda6", "lambda7"),
        "admissible": _Q_DIVIDES,
        "constraints": [
            {"expr": "lambda1", "kind": "ambiguity", "anchor": "it follows that λ₁=0=λ₂"},
            {"expr": "lambda2", "kind": "ambiguity", "anchor": "it follows that λ₁=0=λ₂"},
            {"expr": "lambda3*lambda6", "kind": "ambiguity", "anchor": "amounts to λ₃λ₆=0, λ₃λ₄=0"},
            {"expr": "lambda3*lambda4", "kind": "ambiguity", "anchor": "amounts to λ₃λ₆=0, λ₃λ₄=0"},
        ],
    },
    "C4c2": {
        "title": "x ∈ V_g^ε, y ∈ V_{g^μ}^ε, μ ∉ {0,1}, q ∤ p−1",
        "generators": [_skew("y", "g^{{mu}}"), _skew("x", "g")],
        "relations": [
            "g*x - x*g - lambda1*(g - g^2)",
            "g*y - y*g - lambda2*(g - g^{{mu+1}})",
            "x*y - y*x + {{mu}}*lambda1*y - lambda2*x - lambda3*(1 - g^{{mu+1}})",
            "y^{{p}} - ({{mu}}*lambda2)^{{p-1}}*y - lambda4*(1 - g^{{p*mu}})",
            "x^{{p}} - lambda1^{{p-1}}*x - lambda5*(1 - g^{{p}})",
        ],
        "params": [{"name": "mu", "domain": "int", "values": "range(2, q)"}]
        + _z2("lambda1", "lambda2")
        + _k("lambda3", "lambda4", "lambda5"),
        "admissible": _Q_NOT_DIVIDES,
        "constraints": [
            {"expr": "lambda2", "kind": "ambiguity", "anchor": "amounts to λ₂=0 which implies that gy=yg"},
            {"expr": "(lambda1 - 1)*lambda1", "kind": "ambiguity", "anchor": "(λ₁−1)λ₁=0"},
            {"expr": "(lambda1 - 1)*lambda3", "kind": "ambiguity", "anchor": "(λ₁−1)λ₃=0"},
            _order("lambda1"),
        ],
    },
}

_C5_BASE = [
    "g*x - x*g",
    "g*y - y*g - lambda1*(g - g^{{nu+1}})",
    "x^{{p}} - lambda2*x",
    "x*y - y*x - lambda3*y - lambda4*(1 - g^{{nu}})",
]
_NU = [{"name": "nu", "domain": "int", "values": "range(1, q)"}]

_C5_CASES: Dict[str, CaseData] = {
    "C5a": {
        "title": "x ∈ V_1^ε, y ∈ V_{g^ν}^ε, q | p−1",
        "generators": [_skew("y", "g^{{nu}}"), _prim("x")],
        "relations": _C5_BASE + ["y^{{p}} - lambda5*y - lambda6*(1 - g^{{p*nu}})"],
        "params": _NU + _z2("lambda1", "lambda2") + _k("lambda3", "lambda4", "lambda5", "lambda6"),
        "admissible": _Q_DIVIDES,
        "constraints": [
            {"expr": "lambda1", "kind": "ambiguity", "anchor": "[g^ν,y]=[g^{pν},y]=0 which implies that λ₁=0"},
            {"expr": "(lambda2 - 1)*lambda3", "kind": "ambiguity", "anchor": "(λ₂−1)λ₃=0=(λ₂−1)λ₄"},
            {
                "expr": "(lambda2 - lambda3^{{p-1}})*lambda4",
                "kind": "derived",
                "anchor": "[x^p,y]=λ₂[x,y] against (ad_L x)^p(y)=λ₃^{p−1}[x,y]",
            },
            {"expr": "lambda5*lambda3", "kind": "ambiguity", "anchor": "λ₅λ₃=0=λ₅λ₄"},
            {"expr": "lambda5*lambda4", "kind": "ambiguity", "anchor": "λ₅λ₃=0=λ₅λ₄"},
        ],
        "notes": [
            "The stated (λ₂−1)λ₄=0 admits λ₂=1, λ₃=0, λ₄≠0 where [x^p,y]=λ₄(1−g^ν)≠0=(ad_L x)^p(y); "
            "the entry uses (λ₂−λ₃^{p−1})λ₄=0 as in the q∤p−1 subcase.",
            "The parameter domain is printed as \"λ₁,λ₂ ∈ \\Z₂\".",
        ],
    },
    "C5b": {
        "title": "x ∈ V_1^ε, y ∈ V_{g^ν}^ε, q ∤ p−1",
        "generators": [_skew("y", "g^{{nu}}"), _prim("x")],
        "relations": _C5_BASE + ["y^{{p}} - ({{nu}}*lambda1)^{{p-1}}*y - lambda7*(1 - g^{{p*nu}})"],
        "params": _NU + _z2("lambda1", "lambda2") + _k("lambda3", "lambda4", "lambda7"),
        "admissible": _Q_NOT_DIVIDES,
        "constraints": [
            {"expr": "lambda1*lambda3", "kind": "ambiguity", "anchor": "g(xy)=(gx)y gives the condition λ₁λ₃=0"},
            {"expr": "lambda2*lambda3 - lambda3^{{p}}", "kind": "ambiguity", "anchor": "λ₂λ₃−λ₃^p=0"},
            {"expr": "lambda2*lambda4 - lambda3^{{p-1}}*lambda4", "kind": "ambiguity", "anchor": "λ₂λ₄−λ₃^{p−1}λ₄=0"},
            {"expr": "lambda1*lambda4", "kind": "ambiguity", "anchor": "λ₁λ₄=0=λ₁λ₃"},
            _order("lambda1"),
        ],
        "notes": [
            "The λ₁=1 member is described as a tensor product with a pq-dimensional Hopf subalgebra on g, y; "
            "with g of order q that subalgebra collapses, so λ₁ is forced to 0.",
        ],
    },
}

_OMEGA0: TailData = {"kind": "omega0"}
_OMEGA1: TailData = {"kind": "omega_theta", "group": "g", "theta": 1}

_D12 = [
    "x^{{p}} - lambda1*x",
    "y^{{p}} - lambda1*y - lambda3*x",
    "x*y - y*x - lambda2*x",
]


def _d_generators(y_degree: str, tail: TailData) -> List[GeneratorData]:
    x = _prim("x") if y_degree == "1" else _skew("x", "g")
    y: GeneratorData = {"name": "y", "weight": "p", "tail": tail, **_skew("y", y_degree)}  # type: ignore[misc]
    if y_degree == "1":
        y["coproduct"] = "y (#) 1 + 1 (#) y"
    return [x, y]


_D_CASES: Dict[str, CaseData] = {
    "D1a": {
        "title": "x ∈ V_1^ε, y ∈ R(p), p = 2",
        "generators": _d_generators("1", _OMEGA0),
        "relations": ["g*x - x*g", "g*y - y*g"] + _D12,
        "params": _z2("lambda1", "lambda2") + _k("lambda3"),
        "admissible": "p == 2",
        "constraints": [{"expr": "lambda2", "kind": "ambiguity", "anchor": "the verification amounts to λ₂=0"}],
    },
    "D1b": {
        "title": "x ∈ V_1^ε, y ∈ R(p), p > 2",
        "generators": _d_generators("1", _OMEGA0),
        "relations": ["g*x - x*g", "g*y - y*g"] + _D12,
        "params": _z2("lambda1", "lambda2") + _k("lambda3"),
        "admissible": "p > 2",
        "constraints": [
            {"expr": "lambda2", "kind": "ambiguity", "anchor": "λ₁λ₂=0=(λ₁−1)λ₂ which gives the ambiguity condition λ₂=0"}
        ],
    },
    "D2a": {
        "title": "x ∈ V_1^χ, y ∈ R(p), p = 2",
        "generators": _d_generators("1", _OMEGA0),
        "relations": ["g*x - xi*x*g", "g*y - xi^{{p}}*y*g"] + _D12,
        "params": _z2("lambda1", "lambda2") + _k("lambda3"),
        "admissible": "p == 2",
        "constraints": [
            {"expr": "lambda1", "kind": "ambiguity", "anchor": "amounts to λ₁=0=λ₃"},
            {
                "expr": "lambda3",
                "when": "(p*p - 1) % q != 0",
                "kind": "ambiguity",
                "anchor": "amounts to λ₁=0=λ₃",
            },
            {"expr": "lambda2", "kind": "ambiguity", "anchor": "amounts to λ₂=0"},
        ],
        "notes": ["λ₃=0 comes from λ₃(ξ^{p²}−ξ)=0, which leaves λ₃ free at q=3."],
    },
    "D2b": {
        "title": "x ∈ V_1^χ, y ∈ R(p), p > 2",
        "generators": _d_generators("1", _OMEGA0),
        "relations": ["g*x - xi*x*g", "g*y - xi^{{p}}*y*g"] + _D12,
        "params": _z2("lambda1", "lambda2") + _k("lambda3"),
        "admissible": "p > 2",
        "constraints": [
            {
                "expr": "lambda1",
                "when": _Q_NOT_DIVIDES,
                "kind": "ambiguity",
                "anchor": "which implies that λ₁=0 since ξ^{p²}≠ξ^p",
            },
            {
                "expr": "lambda2",
                "kind": "ambiguity",
                "anchor": "λ₂(ξ^{p+1}−ξ)=0 which gives the ambiguity condition λ₂=0 since ξ^p≠1",
            },
            {"expr": "lambda3", "when": "(p*p - 1) % q != 0", "kind": "ambiguity", "anchor": "λ₃(ξ^{p²}−ξ)=0"},
        ],
        "notes": ["ξ^{p²}≠ξ^p holds only when q ∤ p−1; the λ₁ condition is guarded accordingly."],
    },
    "D3a1": {
        "title": "x ∈ V_g^ε, y ∈ R(p), p = 2, q = 3",
        "generators": _d_generators("g^{{p}}", _OMEGA1),
        "relations": [
            "g*x - x*g - lambda1*(g - g^2)",
            "x^2 - lambda1*x - lambda2*(1 - g^2)",
            "g*y - y*g - lambda1*(x*g^2 + x*g + g^2 + g) - lambda3*(g - g^3)",
            "x*y - y*x - (lambda1 + lambda3)*x - lambda1*lambda2*g^2 - lambda1*lambda2*g^3",
            "y^2 - lambda1*y - lambda2*(g + g^2) - lambda6*x - lambda7*(1 - g)",
        ],
        "params": _z2("lambda1")
        + _k("lambda2")
        + [
            {"name": "lambda3", "domain": "K", "derived": "0"},
            {"name": "lambda6", "domain": "K", "derived": "lambda1"},
            {"name": "lambda7", "domain": "K", "derived": "0"},
        ],
        "admissible": "p == 2 and q == 3",
        "constraints": [
            {"expr": "lambda3", "kind": "ambiguity", "anchor": "If λ₁=0, then the verification amounts to λ₃=0"},
            {"expr": "lambda1*(lambda6 - 1)", "kind": "ambiguity", "anchor": "If λ₁=1, then ... amounts to λ₃=0,λ₆=1"},
            {"expr": "lambda1*lambda7", "kind": "ambiguity", "anchor": "verification amounts to λ₇=0"},
            _order("lambda1"),
        ],
        "notes": ["Unset λ₃, λ₆, λ₇ take their forced values λ₃=0, λ₆=λ₁, λ₇=0."],
    },
    "D3a2": {
        "title": "x ∈ V_g^ε, y ∈ R(p), p = 2, q > 3",
        "generators": _d_generators("g^{{p}}", _OMEGA1),
        "relations": [
            "g*x - x*g - lambda1*(g - g^2)",
            "x^2 - lambda1*x - lambda2*(1 - g^2)",
            "g*y - y*g - lambda1*(x*g^2 + x*g + g^2 + g) - lambda3*(g - g^3)",
            "x*y - y*x - (lambda1 + lambda3)*x - lambda1*lambda2*g^2 - lambda1*lambda2*g^3 - lambda5*(1 - g^3)",
            "y^2 - lambda1*y - (lambda1*lambda2 + lambda5)*(x*g^3 + x) - lambda2*(g^2 + g^4) - lambda8*(1 - g^4)",
        ],
        "params": _z2("lambda1") + _k("lambda2", "lambda3", "lambda5", "lambda8"),
        "admissible": "p == 2 and q > 3",
        "constraints": [
            {"expr": "lambda3", "kind": "ambiguity", "anchor": "amounts to λ₃=0 and λ₁λ₂=0"},
            {"expr": "lambda1*lambda2", "kind": "ambiguity", "anchor": "amounts to λ₃=0 and λ₁λ₂=0"},
            {"expr": "lambda1", "kind": "ambiguity", "anchor": "The verification amounts to λ₁=0"},
            {
                "expr": "lambda5",
                "kind": "derived",
                "anchor": "overlap y·y² = y²·y leaves λ₅²(1−g⁶)",
            },
        ],
        "notes": [
            "The relation list drops the λ₅(1−g³) term of xy−yx that the coproduct computation produces; the entry keeps it.",
        ],
    },
    "D3b1": {
        "title": "x ∈ V_g^ε, y ∈ R(p), p > 2, q | p+1",
        "generators": _d_generators("g^{{p}}", _OMEGA1),
        "relations": ["g*x - x*g", "x^{{p}}", "g*y - y*g", "x*y - y*x", "y^{{p}} - nu1*x - nu2*(1 - g)"],
        "params": _z2("nu1") + _k("nu2"),
        "admissible": "p > 2 and (p + 1) % q == 0",
        "caveat": "only the subcases with gx=xg, gy=yg and x^p=0 are classified",
    },
    "D3b2": {
        "title": "x ∈ V_g^ε, y ∈ R(p), p > 2, q | p−1",
        "generators": _d_generators("g^{{p}}", _OMEGA1),
        "relations": [
            "g*x - x*g",
            "x^{{p}}",
            "g*y - y*g",
            "x*y - y*x - lambda3*(1 - g^{{p+1}})",
            "y^{{p}} + lambda3^{{p-1}}*(1 - g^{{p+1}})^{{p-1}}*x - nu1*x - nu2*(1 - g)",
        ],
        "params": _z2("lambda3") + _k("nu1", "nu2"),
        "admissible": "p > 2 and (p - 1) % q == 0",
        "constraints": [
            {
                "expr": "lambda3*(1 - nu1)",
                "when": "(p + 1) % q != 0",
                "kind": "derived",
                "anchor": "overlap y·y^p = y^p·y leaves λ₃(1−ν₁)(1−g^{p+1})",
            }
        ],
        "caveat": "only the subcases with gx=xg, gy=yg and x^p=0 are classified",
        "notes": ["(p−1)! = −1 mod p is substituted in the y^p relation."],
    },
    "D3b3": {
        "title": "x ∈ V_g^ε, y ∈ R(p), p > 2, otherwise",
        "generators": _d_generators("g^{{p}}", _OMEGA1),
        "relations": [
            "g*x - x*g",
            "x^{{p}}",
            "g*y - y*g",
            "x*y - y*x - lambda3*(1 - g^{{p+1}})",
            "y^{{p}} + lambda3^{{p-1}}*(1 - g^{{p+1}})^{{p-1}}*x - nu*(1 - g^{{p*p}})",
        ],
        "params": _z2("lambda3") + _k("nu"),
        "admissible": "p > 2 and (p + 1) % q != 0 and (p - 1) % q != 0",
        "constraints": [
            {
                "expr": "lambda3",
                "kind": "derived",
                "anchor": "overlap y·y^p = y^p·y leaves λ₃(1−g^{p(p+1)}), nonzero unless q | p+1",
            }
        ],
        "caveat": "only the subcases with gx=xg, gy=yg and x^p=0 are classified",
    },
}


# -- pq² ---------------------------------------------------------------------------

_AA_CASES: Dict[str, CaseData] = {
    "AA1": {
        "title": "x ∈ V_g^χ",
        "generators": [_skew("x", "g")],
        "relations": ["g*x - xi*x*g", "x^{{q}} - lambda*(1 - g^{{q}})"],
        "params": _z2("lambda"),
    },
    "AA2": {
        "title": "x ∈ V_{g^p}^χ",
        "generators": [_skew("x", "g^{{p}}")],
        "relations": ["g*x - xi^{{p}}*x*g", "x^{{q}}"],
        "notes": ["The relation uses the character χ^p (gx=ξ^p xg), as printed; χ itself gives an equivalent realization."],
    },
}

_AB1_CASES: Dict[str, CaseData] = {
    "AB1a": {
        "title": "x ∈ V_1^ε over C_q²",
        "relations": ["g*x - x*g", "x^{{p}} - lambda*x"],
        "params": _z2("lambda"),
    },
    "AB1b": {
        "title": "x ∈ V_g^ε over C_q²",
        "generators": [_skew("x", "g")],
        "relations": ["g*x - x*g - lambda1*(g - g^2)", "x^{{p}} - lambda1*x - lambda2*(1 - g^{{p}})"],
        "params": _z2("lambda1") + _k("lambda2"),
        "constraints": [_order("lambda1")],
    },
    "AB1c1": {
        "title": "x ∈ V_{g^q}^ε over C_q², q | p−1",
        "generators": [_skew("x", "g^{{q}}")],
        "relations": [
            "g*x - x*g - lambda1*(g - g^{{q+1}})",
            "x^{{p}} - lambda2*x - lambda3*(1 - g^{{p*q}})",
        ],
        "params": _z2("lambda1") + _k("lambda2", "lambda3"),
        "admissible": _Q_DIVIDES,
        "constraints": [{"expr": "lambda1", "kind": "ambiguity", "anchor": "g^{pq}=g^q forces λ₁=0"}],
    },
    "AB1c2": {
        "title": "x ∈ V_{g^q}^ε over C_q², q ∤ p−1",
        "generators": [_skew("x", "g^{{q}}")],
        "relations": [
            "g*x - x*g - lambda1*(g - g^{{q+1}})",
            "x^{{p}} - ({{q}}*lambda1)^{{p-1}}*x - lambda2*(1 - g^{{p*q}})",
        ],
        "params": _z2("lambda1") + _k("lambda2"),
        "admissible": _Q_NOT_DIVIDES,
        "constraints": [_order("lambda1")],
    },
    "AB1d": {
        "title": "x ∈ V_1^χ over C_q²",
        "relations": ["g*x - zeta*x*g", "x^{{p}} - lambda1*x"],
        "params": _z2("lambda1"),
        "constraints": [
            {
                "expr": "lambda1",
                "when": "(p - 1) % (q*q) != 0",
                "kind": "ambiguity",
                "anchor": "λ₁=0 if q²∤p−1 and i=1",
            }
        ],
    },
    "AB1e": {
        "title": "x ∈ V_1^(χ^q) over C_q²",
        "relations": ["g*x - zeta^{{q}}*x*g", "x^{{p}} - lambda1*x"],
        "params": _z2("lambda1"),
        "constraints": [
            {"expr": "lambda1", "when": _Q_NOT_DIVIDES, "kind": "ambiguity", "anchor": "λ₁=0 if q∤p−1 and i=q"}
        ],
    },
}


def _ab2(title: str, i: int, j: int) -> CaseData:
    g_rel = "g*x - x*g" if i == 0 else "g*x - xi*x*g"
    h_rel = "h*x - x*h" if j == 0 else "h*x - xi*x*h"
    entry: CaseData = {
        "title": f"x ∈ V_1^({title}) over C_q × C_q",
        "group": "C_qxC_q",
        "relations": [g_rel, h_rel, "x^{{p}} - lambda1*x"],
        "params": _z2("lambda1"),
    }
    if (i, j) != (0, 0):
        entry["constraints"] = [
            {
                "expr": "lambda1",
                "when": _Q_NOT_DIVIDES,
                "kind": "ambiguity",
                "anchor": "λ₁=0 if q∤p−1 and (i,j)≠(0,0)",
            }
        ]
    return entry


_AB2_HX = {0: "h*x - x*h - lambda2*(h - h*g)", 1: "h*x - xi*x*h - lambda2*(h - h*g)"}

_AB2_CASES: Dict[str, CaseData] = {
    "AB2a": _ab2("ε×ε", 0, 0),
    "AB2b": _ab2("ε×χ", 0, 1),
    "AB2c": _ab2("χ×ε", 1, 0),
    "AB2d": _ab2("χ×χ", 1, 1),
    "AB2e1": {
        "title": "x ∈ V_g^(ε×ε) over C_q × C_q, q | p−1",
        "group": "C_qxC_q",
        "generators": [_skew("x", "g")],
        "relations": [
            "g*x - x*g - lambda1*(g - g^2)",
            _AB2_HX[0],
            "x^{{p}} - lambda3*x - lambda4*(1 - g^{{p}})",
        ],
        "params": _z2("lambda1", "lambda2") + _k("lambda3", "lambda4"),
        "admissible": _Q_DIVIDES,
        "constraints": [
            {"expr": "lambda1", "kind": "ambiguity", "anchor": "g^p=g forces λ₁=0"},
            {"expr": "lambda2", "kind": "ambiguity", "anchor": "overlap (hx)x^{p−1}=h(x^p) gives λ₂=0"},
        ],
    },
    "AB2e2": {
        "title": "x ∈ V_g^(ε×ε) over C_q × C_q, q ∤ p−1",
        "group": "C_qxC_q",
        "generators": [_skew("x", "g")],
        "relations": [
            "g*x - x*g - lambda1*(g - g^2)",
            _AB2_HX[0],
            "x^{{p}} - lambda1^{{p-1}}*x - lambda3*(1 - g^{{p}})",
        ],
        "params": _z2("lambda1", "lambda2") + _k("lambda3"),
        "admissible": _Q_NOT_DIVIDES,
        "constraints": [
            {
                "expr": "(lambda1 - 1)*lambda2",
                "kind": "ambiguity",
                "anchor": "(hx)x^{p−1}=h(x^p) gives the ambiguity condition (λ₁−1)λ₂=0",
            },
            _order("lambda1"),
            _order("lambda2", "h"),
        ],
    },
    "AB2f1": {
        "title": "x ∈ V_g^(ε×χ) over C_q × C_q, q | p−1",
        "group": "C_qxC_q",
        "generators": [_skew("x", "g")],
        "relations": [
            "g*x - x*g - lambda1*(g - g^2)",
            _AB2_HX[1],
            "x^{{p}} - lambda3*x - lambda4*(1 - g^{{p}})",
        ],
        "params": _z2("lambda1", "lambda2") + _k("lambda3", "lambda4"),
        "admissible": _Q_DIVIDES,
        "constraints": [
            {"expr": "lambda1", "kind": "ambiguity", "anchor": "g^p=g forces λ₁=0"},
            {
                "expr": "lambda2*lambda3 + lambda4 - lambda4*xi - lambda2^{{p}}",
                "kind": "ambiguity",
                "anchor": "overlap (hx)x^{p−1}=h(x^p) gives λ₂λ₃+λ₄=λ₄ξ+λ₂",
            },
        ],
    },
    "AB2f2": {
        "title": "x ∈ V_g^(ε×χ) over C_q × C_q, q ∤ p−1",
        "group": "C_qxC_q",
        "generators": [_skew("x", "g")],
        "relations": [
            "g*x - x*g - lambda1*(g - g^2)",
            _AB2_HX[1],
            "x^{{p}} - lambda1^{{p-1}}*x - lambda3*(1 - g^{{p}})",
        ],
        "params": _z2("lambda1", "lambda2") + _k("lambda3"),
        "admissible": _Q_NOT_DIVIDES,
        "constraints": [
            {"expr": "lambda1", "kind": "ambiguity", "anchor": "the ambiguity conditions amount to λ₁=λ₂=λ₃=0"},
            {"expr": "lambda2", "kind": "ambiguity", "anchor": "the ambiguity conditions amount to λ₁=λ₂=λ₃=0"},
            {"expr": "lambda3", "kind": "ambiguity", "anchor": "the ambiguity conditions amount to λ₁=λ₂=λ₃=0"},
        ],
    },
}

_THETA_Q: TailData = {"kind": "theta_q", "group": "g", "length": "q", "root": "xi"}

_PQ2_REST: Dict[str, CaseData] = {
    "AC1": {
        "title": "x ∈ V_g^χ, y ∈ V_1^ε",
        "generators": [_prim("y"), _skew("x", "g")],
        "relations": [
            "g*x - xi*x*g",
            "g*y - y*g",
            "x^{{q}}",
            "y^{{p}} - lambda1*y",
            "x*y - y*x - lambda2*x - lambda3*(1 - g)",
        ],
        "params": _z2("lambda1") + _k("lambda2", "lambda3"),
        "constraints": [
            {"expr": "lambda3", "kind": "ambiguity", "anchor": "the overlaps give λ₃=0"},
            {"expr": "lambda2^{{p}} - lambda1*lambda2", "kind": "ambiguity", "anchor": "λ₂^p−λ₁λ₂=0"},
        ],
    },
    "AD": {
        "title": "x ∈ V_g^χ, y ∈ R(q) with a θ tail",
        "generators": [
            _skew("x", "g"),
            {"name": "y", "weight": "q", "coproduct": "y (#) 1 + 1 (#) y", "tail": _THETA_Q},
        ],
        "relations": [
            "g*x - xi*x*g",
            "g*y - y*g",
            "x*y - y*x - lambda1*x",
            "x^{{q}}",
            "y^{{p}} - lambda1^{{p-1}}*y",
        ],
        "params": _z2("lambda1"),
        "notes": ["With [x,y]=λ₁x the primitive element is y^p−λ₁^{p−1}y, since q^{p−1}=1 in K."],
    },
}


# -- pqr ---------------------------------------------------------------------------

_BA_CASES: Dict[str, CaseData] = {
    "BA1": {
        "title": "x ∈ V_1^ε over C_qr",
        "relations": ["g*x - x*g", "x^{{p}} - lambda*x"],
        "params": _z2("lambda"),
    },
    "BA2": {
        "title": "x ∈ V_1^χ over C_qr",
        "relations": ["g*x - theta*x*g", "x^{{p}} - lambda*x"],
        "params": _z2("lambda"),
        "constraints": [
            {"expr": "lambda", "when": "(p - 1) % (q*r) != 0", "kind": "ambiguity", "anchor": "λ=0 if qr∤p−1"}
        ],
    },
    "BA3": {
        "title": "x ∈ V_1^(χ^q) over C_qr",
        "relations": ["g*x - theta^{{q}}*x*g", "x^{{p}} - lambda*x"],
        "params": _z2("lambda"),
        "constraints": [
            {"expr": "lambda", "when": "(p - 1) % r != 0", "kind": "ambiguity", "anchor": "λ=0 if r∤p−1"}
        ],
    },
    "BA4": {
        "title": "x ∈ V_1^(χ^r) over C_qr",
        "relations": ["g*x - theta^{{r}}*x*g", "x^{{p}} - lambda*x"],
        "params": _z2("lambda"),
        "constraints": [
            {"expr": "lambda", "when": "(p - 1) % q != 0", "kind": "ambiguity", "anchor": "λ=0 if q∤p−1"}
        ],
    },
    "BA5a": {
        "title": "x ∈ V_g^ε over C_qr, qr | p−1",
        "generators": [_skew("x", "g")],
        "relations": ["g*x - x*g - lambda1*(g - g^2)", "x^{{p}} - lambda2*x - lambda3*(1 - g)"],
        "params": _z2("lambda1") + _k("lambda2", "lambda3"),
        "admissible": "(p - 1) % (q*r) == 0",
        "constraints": [{"expr": "lambda1", "kind": "ambiguity", "anchor": "g^p=g forces λ₁=0"}],
    },
    "BA5b": {
        "title": "x ∈ V_g^ε over C_qr, qr ∤ p−1",
        "generators": [_skew("x", "g")],
        "relations": ["g*x - x*g - lambda1*(g - g^2)", "x^{{p}} - lambda1^{{p-1}}*x - lambda2*(1 - g^{{p}})"],
        "params": _z2("lambda1") + _k("lambda2"),
        "admissible": "(p - 1) % (q*r) != 0",
        "constraints": [_order("lambda1")],
    },
    "BA6a": {
        "title": "x ∈ V_{g^q}^ε over C_qr, r | p−1",
        "generators": [_skew("x", "g^{{q}}")],
        "relations": ["g*x - x*g - lambda1*(g - g^{{q+1}})", "x^{{p}} - lambda2*x - lambda3*(1 - g^{{p*q}})"],
        "params": _z2("lambda1") + _k("lambda2", "lambda3"),
        "admissible": "(p - 1) % r == 0",
        "constraints": [{"expr": "lambda1", "kind": "ambiguity", "anchor": "g^{pq}=g^q forces λ₁=0"}],
    },
    "BA6b": {
        "title": "x ∈ V_{g^q}^ε over C_qr, r ∤ p−1",
        "generators": [_skew("x", "g^{{q}}")],
        "relations": [
            "g*x - x*g - lambda1*(g - g^{{q+1}})",
            "x^{{p}} - ({{q}}*lambda1)^{{p-1}}*x - lambda2*(1 - g^{{p*q}})",
        ],
        "params": _z2("lambda1") + _k("lambda2"),
        "admissible": "(p - 1) % r != 0",
        "constraints": [_order("lambda1")],
    },
    "BA7a": {
        "title": "x ∈ V_{g^r}^ε over C_qr, q | p−1",
        "generators": [_skew("x", "g^{{r}}")],
        "relations": ["g*x - x*g - lambda1*(g - g^{{r+1}})", "x^{{p}} - lambda2*x - lambda3*(1 - g^{{p*r}})"],
        "params": _z2("lambda1") + _k("lambda2", "lambda3"),
        "admissible": _Q_DIVIDES,
        "constraints": [{"expr": "lambda1", "kind": "ambiguity", "anchor": "g^{pr}=g^r forces λ₁=0"}],
        "notes": ["The subcase heading reads g^{pq}=g^q; for x ∈ V_{g^r} the relevant identity is g^{pr}=g^r."],
    },
    "BA7b": {
        "title": "x ∈ V_{g^r}^ε over C_qr, q ∤ p−1",
        "generators": [_skew("x", "g^{{r}}")],
        "relations": [
            "g*x - x*g - lambda1*(g - g^{{r+1}})",
            "x^{{p}} - ({{r}}*lambda1)^{{p-1}}*x - lambda2*(1 - g^{{p*r}})",
        ],
        "params": _z2("lambda1") + _k("lambda2"),
        "admissible": _Q_NOT_DIVIDES,
        "constraints": [_order("lambda1")],
        "notes": ["The x^p coefficient is printed as (qλ₁)^{p−1}; the skew-primitive computation gives (rλ₁)^{p−1}."],
    },
}

_BB_CASES: Dict[str, CaseData] = {
    "BB1": {
        "title": "x ∈ V_1^ε over Z_q ⋊ Z_r",
        "group": "Z_q:Z_r",
        "relations": ["g*x - x*g", "h*x - x*h", "x^{{p}} - lambda*x"],
        "params": _z2("lambda"),
    },
    "BB2": {
        "title": "x ∈ V_1^χ over Z_q ⋊ Z_r",
        "group": "Z_q:Z_r",
        "relations": ["g*x - eta*x*g", "h*x - x*h", "x^{{p}} - lambda*x"],
        "params": _z2("lambda"),
        "constraints": [
            {
                "expr": "lambda",
                "when": "(p - 1) % r != 0",
                "kind": "derived",
                "anchor": "g(x^p)=(gx)x^{p−1} gives λ(η^p−η)=0",
            }
        ],
        "notes": ["χ(g) is a root of order r: characters of Z_q ⋊ Z_r factor through Z_r."],
    },
}


# -- pq ----------------------------------------------------------------------------

_CA_CASES: Dict[str, CaseData] = {
    "CA1": {
        "title": "x ∈ V_1^ε over C_q",
        "relations": ["g*x - x*g", "x^{{p}} - lambda*x"],
        "params": _z2("lambda"),
    },
    "CA2": {
        "title": "x ∈ V_1^χ over C_q",
        "relations": ["g*x - xi*x*g", "x^{{p}} - lambda*x"],
        "params": _z2("lambda"),
        "constraints": [
            {"expr": "lambda", "when": _Q_NOT_DIVIDES, "kind": "ambiguity", "anchor": "λ=0 if q∤p−1"}
        ],
    },
    "CA3a": {
        "title": "x ∈ V_g^ε over C_q, q | p−1",
        "generators": [_skew("x", "g")],
        "relations": ["g*x - x*g - lambda1*(g - g^2)", "x^{{p}} - lambda2*x - lambda3*(1 - g)"],
        "params": _z2("lambda1") + _k("lambda2", "lambda3"),
        "admissible": _Q_DIVIDES,
        "constraints": [{"expr": "lambda1", "kind": "ambiguity", "anchor": "g^p=g forces λ₁=0"}],
        "notes": ["With λ₁=0 and λ₂=1 this is the pq-family B(λ₃)."],
    },
    "CA3b": {
        "title": "x ∈ V_g^ε over C_q, q ∤ p−1",
        "generators": [_skew("x", "g")],
        "relations": ["g*x - x*g - lambda1*(g - g^2)", "x^{{p}} - lambda1^{{p-1}}*x - lambda2*(1 - g^{{p}})"],
        "params": _z2("lambda1") + _k("lambda2"),
        "admissible": _Q_NOT_DIVIDES,
        "constraints": [_order("lambda1")],
        "notes": ["The λ₁=1 deformation needs g of order pq; that is the pq-family A, not a quotient of C_q."],
    },
}


def _family(
    cases: Dict[str, CaseData],
    row: str,
    dim: str,
    group: str,
    roots: Dict[str, str],
) -> Dict[str, CaseData]:
    out: Dict[str, CaseData] = {}
    for name, entry in cases.items():
        filled: CaseData = {
            "row": row,
            "dim": dim,
            "group": group,
            "roots": dict(roots),
            "generators": [_prim()],
            "params": [],
            "constraints": [],
            "notes": [],
        }
        filled.update(entry)  # type: ignore[typeddict-item]
        out[name] = filled
    return out


_XI_Q = {"xi": "q"}
_TWO_PRIMITIVE = [_prim("y"), _prim("x")]


def _primitive_pair(cases: Dict[str, CaseData]) -> Dict[str, CaseData]:
    return {name: {**entry, "generators": _TWO_PRIMITIVE} for name, entry in cases.items()}  # type: ignore[misc]


_CASES: Dict[str, CaseData] = {
    **_family(_A_CASES, "A", "p2q", "C_pq", _XI_Q),
    **_family(_B1_CASES, "B1", "p2q", "Z_p:Z_q", _XI_Q),
    **_family(_B2_CASES, "B2", "p2q", "Z_q:Z_p", {}),
    **_family(_primitive_pair({**_C1_CASES, **_C2_CASES, **_C3_CASES}), "C", "p2q", "C_q", _XI_Q),
    **_family(_C4_CASES, "C", "p2q", "C_q", _XI_Q),
    **_family(_C5_CASES, "C", "p2q", "C_q", _XI_Q),
    **_family(_D_CASES, "D", "p2q", "C_q", _XI_Q),
    **_family(_AA_CASES, "AA", "pq2", "C_pq", _XI_Q),
    **_family(_AB1_CASES, "AB1", "pq2", "C_q2", {"zeta": "q*q"}),
    **_family(_AB2_CASES, "AB2", "pq2", "C_qxC_q", _XI_Q),
    **_family({"AC1": _PQ2_REST["AC1"]}, "AC", "pq2", "C_q", _XI_Q),
    **_family({"AD": _PQ2_REST["AD"]}, "AD", "pq2", "C_q", _XI_Q),
    **_family(_BA_CASES, "BA", "pqr", "C_qr", {"theta": "q*r"}),
    **_family(_BB_CASES, "BB", "pqr", "Z_q:Z_r", {"eta": "r"}),
    **_family(_CA_CASES, "CA", "pq", "C_q", _XI_Q),
}


# -- Yetter-Drinfeld realizations ---------------------------------------------------


def _v(degree: str, character: str = "1", name: str = "x", nilpotency: str = "p") -> YDGeneratorData:
    return {"name": name, "degree": degree, "character": {"g": character}, "nilpotency": nilpotency}


def _one(label: str, *generators: YDGeneratorData, ranges: Optional[Dict[str, str]] = None) -> YDItemData:
    item: YDItemData = {"label": label, "generators": list(generators)}
    if ranges:
        item["ranges"] = ranges
    return item


_D_Y: Dict[str, YDGeneratorData] = {
    "D1": {"name": "y", "degree": "1", "character": {"g": "1"}, "weight": "p", "tail": _OMEGA0},
    "D2": {"name": "y", "degree": "1", "character": {"g": "xi^{{p}}"}, "weight": "p", "tail": _OMEGA0},
    "D3": {"name": "y", "degree": "g^{{p}}", "character": {"g": "1"}, "weight": "p", "tail": _OMEGA1},
}

_YD_ROWS: Dict[str, YDRowData] = {
    "A": {
        "title": "G = C_pq, dim R = p",
        "dim": "p2q",
        "group": "C_pq",
        "roots": _XI_Q,
        "items": [
            _one("V_1^ε", _v("1")),
            _one("V_1^χ", _v("1", "xi")),
            _one("V_g^ε", _v("g")),
            _one("V_{g^p}^ε", _v("g^{{p}}")),
            _one("V_{g^q}^ε", _v("g^{{q}}")),
            _one("V_{g^q}^χ", _v("g^{{q}}", "xi")),
        ],
        "count": "6",
        "cases": ["A1", "A2", "A3", "A4a", "A4b", "A5", "A6"],
    },
    "B1": {
        "title": "G = Z_p ⋊ Z_q, dim R = p",
        "dim": "p2q",
        "group": "Z_p:Z_q",
        "roots": _XI_Q,
        "items": [
            _one("V_1^ε", {"name": "x", "degree": "1", "character": {"g": "1", "h": "1"}, "nilpotency": "p"}),
            _one("V_1^χ", {"name": "x", "degree": "1", "character": {"g": "xi", "h": "1"}, "nilpotency": "p"}),
        ],
        "count": "2",
        "cases": ["B1a", "B1b"],
    },
    "B2": {
        "title": "G = Z_q ⋊ Z_p, dim R = p",
        "dim": "p2q",
        "group": "Z_q:Z_p",
        "roots": {},
        "items": [
            _one("V_1^ε", {"name": "x", "degree": "1", "character": {"g": "1", "h": "1"}, "nilpotency": "p"}),
        ],
        "count": "1",
        "cases": ["B2a"],
    },
    "C": {
        "title": "G = C_q, dim R = p², V two-dimensional",
        "dim": "p2q",
        "group": "C_q",
        "roots": _XI_Q,
        "items": [
            _one("x, y ∈ V_1^ε", _v("1"), _v("1", name="y")),
            _one("x ∈ V_1^ε, y ∈ V_1^(χ^ν)", _v("1"), _v("1", "xi^{{nu}}", "y"), ranges={"nu": "range(1, q)"}),
            _one("x ∈ V_1^χ, y ∈ V_1^(χ^μ)", _v("1", "xi"), _v("1", "xi^{{mu}}", "y"), ranges={"mu": "range(0, q)"}),
            _one("x ∈ V_g^ε, y ∈ V_{g^μ}^ε", _v("g"), _v("g^{{mu}}", name="y"), ranges={"mu": "range(0, q)"}),
            _one("x ∈ V_1^ε, y ∈ V_{g^ν}^ε", _v("1"), _v("g^{{nu}}", name="y"), ranges={"nu": "range(1, q)"}),
        ],
        "count": "4*q - 1",
        "cases": sorted(set(_C1_CASES) | set(_C2_CASES) | set(_C3_CASES) | set(_C4_CASES) | set(_C5_CASES)),
    },
    "D": {
        "title": "G = C_q, x ∈ R(1), y ∈ R(p)",
        "dim": "p2q",
        "group": "C_q",
        "roots": _XI_Q,
        "items": [
            _one("x ∈ V_1^ε", _v("1"), _D_Y["D1"]),
            _one("x ∈ V_1^χ", _v("1", "xi"), _D_Y["D2"]),
            _one("x ∈ V_g^ε", _v("g"), _D_Y["D3"]),
        ],
        "count": "3",
        "cases": sorted(_D_CASES),
    },
    "AA": {
        "title": "G = C_pq, dim R = q",
        "dim": "pq2",
        "group": "C_pq",
        "roots": _XI_Q,
        "items": [
            _one("V_g^χ", _v("g", "xi", nilpotency="q")),
            _one("V_{g^p}^χ", _v("g^{{p}}", "xi", nilpotency="q")),
        ],
        "count": "2",
        "cases": ["AA1", "AA2"],
    },
    "AB1": {
        "title": "G = C_q², dim R = p",
        "dim": "pq2",
        "group": "C_q2",
        "roots": {"zeta": "q*q"},
        "items": [
            _one("V_1^ε", _v("1")),
            _one("V_g^ε", _v("g")),
            _one("V_{g^q}^ε", _v("g^{{q}}")),
            _one("V_1^χ", _v("1", "zeta")),
            _one("V_1^(χ^q)", _v("1", "zeta^{{q}}")),
        ],
        "count": "5",
        "cases": sorted(_AB1_CASES),
    },
    "AB2": {
        "title": "G = C_q × C_q, dim R = p",
        "dim": "pq2",
        "group": "C_qxC_q",
        "roots": _XI_Q,
        "items": [
            _one(f"V_{deg}^({a}×{b})", {
                "name": "x",
                "degree": "1" if deg == "1" else "g",
                "character": {"g": "1" if a == "ε" else "xi", "h": "1" if b == "ε" else "xi"},
                "nilpotency": "p",
            })
            for deg, a, b in (
                ("1", "ε", "ε"),
                ("1", "ε", "χ"),
                ("1", "χ", "ε"),
                ("1", "χ", "χ"),
                ("g", "ε", "ε"),
                ("g", "ε", "χ"),
            )
        ],
        "count": "6",
        "cases": sorted(_AB2_CASES),
    },
    "AC": {
        "title": "G = C_q, x ∈ V_g^χ, y ∈ V_1^ε",
        "dim": "pq2",
        "group": "C_q",
        "roots": _XI_Q,
        "items": [_one("x ∈ V_g^χ, y ∈ V_1^ε", _v("g", "xi", nilpotency="q"), _v("1", name="y"))],
        "count": "1",
        "cases": ["AC1"],
    },
    "AD": {
        "title": "G = C_q, x ∈ R(1), y ∈ R(q)",
        "dim": "pq2",
        "group": "C_q",
        "roots": _XI_Q,
        "items": [
            _one(
                "x ∈ V_g^χ, y ∈ R(q)",
                _v("g", "xi", nilpotency="q"),
                {"name": "y", "degree": "1", "character": {"g": "1"}, "weight": "q", "tail": _THETA_Q},
            )
        ],
        "count": "1",
        "cases": ["AD"],
    },
    "BA": {
        "title": "G = C_qr, dim R = p",
        "dim": "pqr",
        "group": "C_qr",
        "roots": {"theta": "q*r"},
        "items": [
            _one("V_1^ε", _v("1")),
            _one("V_1^χ", _v("1", "theta")),
            _one("V_1^(χ^q)", _v("1", "theta^{{q}}")),
            _one("V_1^(χ^r)", _v("1", "theta^{{r}}")),
            _one("V_g^ε", _v("g")),
            _one("V_{g^q}^ε", _v("g^{{q}}")),
            _one("V_{g^r}^ε", _v("g^{{r}}")),
        ],
        "count": "7",
        "cases": sorted(_BA_CASES),
    },
    "BB": {
        "title": "G = Z_q ⋊ Z_r, dim R = p",
        "dim": "pqr",
        "group": "Z_q:Z_r",
        "roots": {"eta": "r"},
        "items": [
            _one("V_1^ε", {"name": "x", "degree": "1", "character": {"g": "1", "h": "1"}, "nilpotency": "p"}),
            _one("V_1^χ", {"name": "x", "degree": "1", "character": {"g": "eta", "h": "1"}, "nilpotency": "p"}),
        ],
        "count": "2",
        "cases": ["BB1", "BB2"],
    },
}


def available_cases() -> List[str]:
    """Case identifiers in catalog order."""

    return list(_CASES)


def get_case(case_id: str) -> Optional[CaseData]:
    entry = _CASES.get(case_id)
    return deepcopy(entry) if entry is not None else None


def get_group(name: str) -> Optional[GroupTemplate]:
    group = _GROUPS.get(name)
    return deepcopy(group) if group is not None else None


def available_yd_rows() -> List[str]:
    return list(_YD_ROWS)


def get_yd_row(row: str) -> Optional[YDRowData]:
    data = _YD_ROWS.get(row)
    return deepcopy(data) if data is not None else None


__all__ = [
    "GroupTemplate",
    "TailData",
    "GeneratorData",
    "ParamData",
    "ConstraintData",
    "CaseData",
    "YDGeneratorData",
    "YDItemData",
    "YDRowData",
    "DIMENSIONS",
    "PRIME_ROLES",
    "available_cases",
    "get_case",
    "get_group",
    "available_yd_rows",
    "get_yd_row",
]
