"""Hochschild cohomology of finite-dimensional coalgebras with coefficients in ^gK^h.

The complex is built on tensor powers of the normal basis: C^0 = K and

    d^n_{g,h}(x) = h⊗x + Σ_{i=0}^{n-1} (-1)^{i+1} (I_i⊗Δ⊗I_{n-i-1})(x) + (-1)^{n+1} x⊗g

with d^0(1) = g - h.  Dimensions come from sparse elimination over GF(p^k).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from loguru import logger

from .bosonization import GroupData, YDGenerator, YDRealization, bosonize
from .field import FieldCtx
from .freealg import GenSet, NcPoly, TensorPoly, Word, format_word
from .hopf import HopfPresentation, present
from .linalg import SparseEchelon, Vector

MAX_DEGREE = 3

Tensor = Tuple[Word, ...]


class BudgetExceeded(Exception):
    """Raised when a cochain space would index more basis tensors than allowed."""

    def __init__(self, required: int, budget: int) -> None:
        super().__init__(f"complex needs {required} basis tensors, budget is {budget}")
        self.required = required
        self.budget = budget


class CoalgebraError(Exception):
    """Raised for coefficients that are not group-like or subsets that are not subcoalgebras."""


@dataclass(slots=True)
class Coalgebra:
    """A coalgebra given by a finite basis of words and its structure maps on that basis."""

    ctx: FieldCtx
    gens: GenSet
    basis: List[Word]
    coproduct: Callable[[Word], Dict[Tuple[Word, Word], int]]
    counit: Callable[[Word], int]
    name: str = ""

    @classmethod
    def from_presentation(cls, H: HopfPresentation) -> "Coalgebra":
        return cls(H.ctx, H.gens, list(H.basis), lambda word: H.delta_word(word).terms, H.epsilon_word, H.name)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def label(self, word: Word) -> str:
        return format_word(self.gens, word)

    def weight(self, word: Word) -> int:
        return self.gens.weight(word)

    def is_grouplike(self, word: Word) -> bool:
        return self.coproduct(word) == {(word, word): 1} and self.counit(word) == 1

    def grouplikes(self) -> List[Word]:
        return [word for word in self.basis if self.is_grouplike(word)]

    def subcoalgebra(self, words: Iterable[Word], name: str = "") -> "Coalgebra":
        wanted = set(words)
        chosen = [word for word in self.basis if word in wanted]
        allowed = set(chosen)
        for word in chosen:
            for (u, v) in self.coproduct(word):
                if u not in allowed or v not in allowed:
                    raise CoalgebraError(
                        f"Δ({self.label(word)}) has the term {self.label(u)}⊗{self.label(v)} outside the subset"
                    )
        return Coalgebra(self.ctx, self.gens, chosen, self.coproduct, self.counit, name or f"sub({self.name})")

    def is_graded(self) -> bool:
        return all(
            self.weight(u) + self.weight(v) == self.weight(word)
            for word in self.basis
            for (u, v) in self.coproduct(word)
        )


@dataclass(frozen=True, slots=True)
class BicomoduleSpec:
    """Coefficients ^gK^h: right coaction through g, left coaction through h."""

    g: Word
    h: Word

    def validate(self, C: Coalgebra) -> None:
        for word in (self.g, self.h):
            if word not in C.basis or not C.is_grouplike(word):
                raise CoalgebraError(f"{C.label(word)} is not a group-like basis element of {C.name}")

    def labels(self, C: Coalgebra) -> Tuple[str, str]:
        return C.label(self.g), C.label(self.h)


def spec_from(H: HopfPresentation, g: str, h: str) -> BicomoduleSpec:
    """Parse two group-like elements of ``H`` into a bicomodule spec."""

    words = []
    for text in (g, h):
        value = H.parse(text)
        if len(value.terms) != 1 or next(iter(value.terms.values())) != 1:
            raise CoalgebraError(f"{text} does not reduce to a single basis word")
        words.append(next(iter(value.terms)))
    return BicomoduleSpec(words[0], words[1])


def _tensor_weight(C: Coalgebra, tensor: Tensor) -> int:
    return sum(C.weight(word) for word in tensor)


@dataclass(slots=True)
class CochainComplex:
    """The complex (C^⊗n, d^n_{g,h}) for n up to ``top``; matrices are built on demand."""

    C: Coalgebra
    spec: BicomoduleSpec
    top: int = 2
    budget: int = 200_000
    _matrices: Dict[int, Dict[Tensor, Vector]] = field(default_factory=dict)
    _ranks: Dict[Tuple[int, Optional[int]], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not 0 <= self.top <= MAX_DEGREE:
            raise CoalgebraError(f"cochain degree must lie in 0..{MAX_DEGREE}")
        self.spec.validate(self.C)
        required = self.C.dimension ** (self.top + 1)
        if required > self.budget:
            raise BudgetExceeded(required, self.budget)

    def cochains(self, n: int) -> List[Tensor]:
        tensors: List[Tensor] = [()]
        for _ in range(n):
            tensors = [tensor + (word,) for tensor in tensors for word in self.C.basis]
        return tensors

    def _image(self, tensor: Tensor) -> Vector:
        ctx = self.C.ctx
        n = len(tensor)
        g, h = self.spec.g, self.spec.h
        image: Vector = {}

        def add(key: Tensor, value: int) -> None:
            total = ctx.add(image.get(key, 0), value)
            if total:
                image[key] = total
            else:
                image.pop(key, None)

        if n == 0:
            add((g,), 1)
            add((h,), ctx.neg(1))
            return image
        add((h,) + tensor, 1)
        for i in range(n):
            sign = 1 if i % 2 else ctx.neg(1)
            for (u, v), coeff in self.C.coproduct(tensor[i]).items():
                add(tensor[:i] + (u, v) + tensor[i + 1:], ctx.mul(sign, coeff))
        add(tensor + (g,), 1 if n % 2 else ctx.neg(1))
        return image

    def matrix(self, n: int) -> Dict[Tensor, Vector]:
        """Images of the basis tensors of C^⊗n under d^n."""

        if n > self.top:
            raise CoalgebraError(f"d^{n} lies beyond the built range 0..{self.top}")
        cached = self._matrices.get(n)
        if cached is None:
            cached = {tensor: self._image(tensor) for tensor in self.cochains(n)}
            self._matrices[n] = cached
            logger.debug("{}: d^{} has {} columns", self.C.name, n, len(cached))
        return cached

    def apply(self, n: int, vector: Vector) -> Vector:
        ctx = self.C.ctx
        matrix = self.matrix(n)
        out: Vector = {}
        for key, coeff in vector.items():
            for target, value in matrix[key].items():
                total = ctx.add(out.get(target, 0), ctx.mul(coeff, value))
                if total:
                    out[target] = total
                else:
                    out.pop(target, None)
        return out

    def is_complex(self) -> bool:
        """d^{n+1}∘d^n = 0 for every n < top."""

        return all(
            not self.apply(n + 1, image)
            for n in range(self.top)
            for image in self.matrix(n).values()
        )

    def rank(self, n: int, weight: Optional[int] = None) -> int:
        if n < 0:
            return 0
        key = (n, weight)
        if key not in self._ranks:
            echelon = SparseEchelon(self.C.ctx)
            for tensor, image in self.matrix(n).items():
                if weight is None or _tensor_weight(self.C, tensor) == weight:
                    echelon.add(image)
            self._ranks[key] = echelon.rank
        return self._ranks[key]

    def cochain_count(self, n: int, weight: Optional[int] = None) -> int:
        if weight is None:
            return self.C.dimension**n
        return sum(1 for tensor in self.cochains(n) if _tensor_weight(self.C, tensor) == weight)


@dataclass(slots=True)
class CohomologyReport:
    n: int
    g: str
    h: str
    dim_z: int
    dim_b: int
    adams: Optional[Dict[int, int]] = None

    @property
    def dim_h(self) -> int:
        return self.dim_z - self.dim_b

    def to_dict(self) -> Dict[str, object]:
        payload: Dict[str, object] = {
            "g": self.g,
            "h": self.h,
            "n": self.n,
            "dimZ": self.dim_z,
            "dimB": self.dim_b,
            "dimH": self.dim_h,
        }
        if self.adams is not None:
            payload["adams"] = {str(j): dim for j, dim in sorted(self.adams.items())}
        return payload


def _as_coalgebra(C: "Coalgebra | HopfPresentation") -> Coalgebra:
    return C if isinstance(C, Coalgebra) else Coalgebra.from_presentation(C)


def differential_matrix(
    C: "Coalgebra | HopfPresentation", spec: BicomoduleSpec, n: int, budget: int = 200_000
) -> Dict[Tensor, Vector]:
    return CochainComplex(_as_coalgebra(C), spec, max(n, 0), budget).matrix(n)


def cohomology_dims(
    C: "Coalgebra | HopfPresentation", spec: BicomoduleSpec, n: int, budget: int = 200_000
) -> CohomologyReport:
    """dim Z^n, dim B^n and dim H^n = dim Z^n - dim B^n."""

    coalgebra = _as_coalgebra(C)
    complex_ = CochainComplex(coalgebra, spec, n, budget)
    dim_z = complex_.cochain_count(n) - complex_.rank(n)
    dim_b = complex_.rank(n - 1)
    g, h = spec.labels(coalgebra)
    report = CohomologyReport(n, g, h, dim_z, dim_b)
    logger.debug("{}: H^{}(^{}K^{}) has dimension {}", coalgebra.name, n, g, h, report.dim_h)
    return report


def graded_cohomology_dims(
    C: "Coalgebra | HopfPresentation", spec: BicomoduleSpec, n: int, budget: int = 200_000
) -> CohomologyReport:
    """Split H^n by Adams degree, the total weight of a basis tensor."""

    coalgebra = _as_coalgebra(C)
    if not coalgebra.is_graded():
        raise CoalgebraError(f"{coalgebra.name}: coproduct does not preserve the weight grading")
    report = cohomology_dims(coalgebra, spec, n, budget)
    complex_ = CochainComplex(coalgebra, spec, n, budget)
    top = max(coalgebra.weight(word) for word in coalgebra.basis) * max(n, 1)
    adams: Dict[int, int] = {}
    for j in range(top + 1):
        dim_z = complex_.cochain_count(n, j) - complex_.rank(n, j)
        dim_b = complex_.rank(n - 1, j)
        if dim_z - dim_b:
            adams[j] = dim_z - dim_b
    report.adams = adams
    return report


def cobar_dims(C: "Coalgebra | HopfPresentation", n: int, g: Optional[Word] = None) -> CohomologyReport:
    """Cohomology of the reduced cobar complex on C^+ = ker ε, for C with coradical Kg.

    In the coordinates of C^+ given by the basis words other than g, the reduced
    coproduct Δ^+(c) = Δ(c) - c⊗g - g⊗c is the part of Δ avoiding g.
    """

    coalgebra = _as_coalgebra(C)
    ctx = coalgebra.ctx
    grouplikes = coalgebra.grouplikes()
    if g is None:
        g = grouplikes[0] if len(grouplikes) == 1 else ()
    if grouplikes != [g]:
        raise CoalgebraError(f"{coalgebra.name}: the reduced complex needs a single group-like element")
    reduced = [word for word in coalgebra.basis if word != g]

    def chains(k: int) -> List[Tensor]:
        tensors: List[Tensor] = [()]
        for _ in range(k):
            tensors = [tensor + (word,) for tensor in tensors for word in reduced]
        return tensors

    def rank(k: int) -> int:
        if k < 1:
            return 0
        echelon = SparseEchelon(ctx)
        for tensor in chains(k):
            image: Vector = {}
            for i, word in enumerate(tensor):
                sign = 1 if i % 2 else ctx.neg(1)
                for (u, v), coeff in coalgebra.coproduct(word).items():
                    if u == g or v == g:
                        continue
                    key = tensor[:i] + (u, v) + tensor[i + 1:]
                    total = ctx.add(image.get(key, 0), ctx.mul(sign, coeff))
                    if total:
                        image[key] = total
                    else:
                        image.pop(key, None)
            echelon.add(image)
        return echelon.rank

    dim_z = (len(reduced) ** n if n else 1) - rank(n)
    dim_b = rank(n - 1)
    label = coalgebra.label(g)
    return CohomologyReport(n, label, label, dim_z, dim_b)


@dataclass(slots=True)
class ClassWitness:
    candidate: str
    cocycle: str
    nonzero: bool

    def to_dict(self) -> Dict[str, object]:
        return {"candidate": self.candidate, "cocycle": self.cocycle, "nonzero": self.nonzero}


def nonprimitive_generator_witness(
    C: "Coalgebra | HopfPresentation",
    D: Sequence[Word],
    spec: BicomoduleSpec,
    candidates: Optional[Sequence[Word]] = None,
) -> Optional[ClassWitness]:
    """A basis element y outside D with d^1_{g,h}(y) ∈ D⊗D, and whether that cocycle is a nonzero H^2 class of D.

    Candidates default to the basis words of C outside D, in basis order.
    Returns ``None`` when no candidate has its differential inside D⊗D.
    """

    coalgebra = _as_coalgebra(C)
    sub = coalgebra.subcoalgebra(D, name=f"D⊂{coalgebra.name}")
    spec.validate(sub)
    inside = set(sub.basis)
    full = CochainComplex(coalgebra, spec, 1, budget=max(coalgebra.dimension**2, 1))
    boundaries = SparseEchelon(coalgebra.ctx)
    for word in sub.basis:
        boundaries.add(full.matrix(1)[(word,)])
    pool = list(candidates) if candidates is not None else [w for w in coalgebra.basis if w not in inside]
    for word in pool:
        cocycle = full.matrix(1)[(word,)]
        if all(u in inside and v in inside for (u, v) in cocycle):
            nonzero = not boundaries.contains(cocycle)
            text = TensorPoly(coalgebra.ctx, coalgebra.gens, 2, dict(cocycle))
            return ClassWitness(coalgebra.label(word), str(text), nonzero)
    return None


def skew_primitive_agreement(H: HopfPresentation, spec: BicomoduleSpec, dim_p: int, budget: int = 200_000) -> bool:
    """dim P_{g,h} equals dim H^1 (plus one when g != h, for K(g-h))."""

    report = cohomology_dims(H, spec, 1, budget)
    return dim_p - (1 if spec.g != spec.h else 0) == report.dim_h


def truncated_line(ctx: FieldCtx, n: Optional[int] = None) -> HopfPresentation:
    """K[x]/(x^n) with x primitive; n defaults to p."""

    n = n or ctx.p
    gens = GenSet.create(("x",), weights={"x": 1})
    x = NcPoly.generator(ctx, gens, "x")
    one = x.one()
    coproduct = {"x": TensorPoly.tensor(x, one) + TensorPoly.tensor(one, x)}
    return present(f"K[x]/(x^{n})", ctx, gens, [x**n], coproduct, {"x": 0}, {})


def taft_algebra(ctx: FieldCtx, q: int) -> HopfPresentation:
    """K<g,x>/(g^q - 1, x^q, gx - ξxg) with x ∈ P_(1,g); ``ctx`` must hold a root of order q."""

    xi = ctx.root(q)
    yd = YDRealization(
        GroupData.cyclic(q),
        (YDGenerator("x", ("g",), {"g": xi}),),
        label=f"Taft({q})",
    )
    return bosonize(ctx, yd, name=f"Taft({q})")


__all__ = [
    "MAX_DEGREE",
    "BudgetExceeded",
    "CoalgebraError",
    "Coalgebra",
    "BicomoduleSpec",
    "spec_from",
    "CochainComplex",
    "CohomologyReport",
    "differential_matrix",
    "cohomology_dims",
    "graded_cohomology_dims",
    "cobar_dims",
    "ClassWitness",
    "nonprimitive_generator_witness",
    "skew_primitive_agreement",
    "truncated_line",
    "taft_algebra",
]
