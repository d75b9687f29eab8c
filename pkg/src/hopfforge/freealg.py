"""Noncommutative polynomials, tensor powers and adjoint operators over GF(p^k)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, TypeVar, Union

from .field import FieldCtx, Fq, make_field

Word = Tuple[int, ...]
TensorWord = Tuple[Word, ...]
Scalar = Union[int, Fq]


class FreeAlgebraError(Exception):
    """Raised when operands live over different generator sets, fields or ranks."""


class UnassignedGeneratorError(FreeAlgebraError):
    """Raised when a substitution meets a generator without an image."""


@dataclass(frozen=True, slots=True)
class GenSet:
    """Ordered generators with a precedence order and a weight grading.

    ``precedence`` lists the generator names from smallest to largest.
    """

    names: Tuple[str, ...]
    precedence: Tuple[str, ...]
    weights: Tuple[int, ...]

    @classmethod
    def create(
        cls,
        names: Sequence[str],
        precedence: Optional[Sequence[str]] = None,
        weights: Optional[Mapping[str, int]] = None,
    ) -> "GenSet":
        names = tuple(names)
        if len(set(names)) != len(names):
            raise FreeAlgebraError(f"generator names must be distinct: {names}")
        order = tuple(precedence) if precedence is not None else names
        if sorted(order) != sorted(names):
            raise FreeAlgebraError(f"precedence {order} is not a total order on {names}")
        weights = weights or {}
        for name, weight in weights.items():
            if name not in names:
                raise FreeAlgebraError(f"weight given for unknown generator '{name}'")
            if weight < 0:
                raise FreeAlgebraError(f"weight of '{name}' must be non-negative")
        return cls(names, order, tuple(int(weights.get(name, 0)) for name in names))

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError as exc:
            raise FreeAlgebraError(f"unknown generator '{name}'") from exc

    @property
    def ranks(self) -> Tuple[int, ...]:
        return tuple(self.precedence.index(name) for name in self.names)

    def word(self, *names: str) -> Word:
        return tuple(self.index(name) for name in names)

    def weight(self, word: Word) -> int:
        return sum(self.weights[letter] for letter in word)

    def key(self, word: Word) -> Tuple[int, int, Tuple[int, ...]]:
        """Weight, then length, then precedence-lex."""

        ranks = self.ranks
        return (self.weight(word), len(word), tuple(ranks[letter] for letter in word))

    def describe(self) -> Dict[str, object]:
        return {
            "names": list(self.names),
            "precedence": list(self.precedence),
            "weights": dict(zip(self.names, self.weights)),
        }


def format_word(gens: GenSet, word: Word) -> str:
    if not word:
        return "1"
    parts: List[str] = []
    run_letter, run_length = word[0], 0
    for letter in word + (-1,):
        if letter == run_letter:
            run_length += 1
            continue
        name = gens.names[run_letter]
        parts.append(name if run_length == 1 else f"{name}^{run_length}")
        run_letter, run_length = letter, 1
    return "*".join(parts)


def _format_term(ctx: FieldCtx, coeff: int, body: str, first: bool) -> str:
    sign = ""
    if ctx.p > 2 and coeff == ctx.p - 1:
        sign, text = "-", ""
    elif coeff == 1:
        text = ""
    else:
        text = ctx.format(coeff)
    if body == "1":
        core = text or "1"
    else:
        core = f"{text}*{body}" if text else body
    if first:
        return f"{sign}{core}"
    return f" - {core}" if sign else f" + {core}"


def _check_same(a: "NcPoly | TensorPoly", b: "NcPoly | TensorPoly") -> None:
    if a.gens != b.gens or not a.ctx.same_field(b.ctx):
        raise FreeAlgebraError("operands live over different generators or fields")


class NcPoly:
    """Sparse noncommutative polynomial: a map from words to nonzero coefficients.

    Coefficients are stored as encoded field integers of ``ctx``.
    """

    __slots__ = ("ctx", "gens", "terms")

    def __init__(self, ctx: FieldCtx, gens: GenSet, terms: Optional[Dict[Word, int]] = None) -> None:
        self.ctx = ctx
        self.gens = gens
        self.terms: Dict[Word, int] = terms if terms is not None else {}

    # -- constructors -------------------------------------------------------------
    @classmethod
    def from_terms(cls, ctx: FieldCtx, gens: GenSet, items: Iterable[Tuple[Word, Scalar]]) -> "NcPoly":
        terms: Dict[Word, int] = {}
        for word, coeff in items:
            value = ctx.element(coeff)
            if word in terms:
                value = ctx.add(terms[word], value)
            terms[word] = value
        return cls(ctx, gens, {w: c for w, c in terms.items() if c})

    @classmethod
    def zero(cls, ctx: FieldCtx, gens: GenSet) -> "NcPoly":
        return cls(ctx, gens, {})

    @classmethod
    def constant(cls, ctx: FieldCtx, gens: GenSet, value: Scalar = 1) -> "NcPoly":
        encoded = ctx.element(value)
        return cls(ctx, gens, {(): encoded} if encoded else {})

    @classmethod
    def generator(cls, ctx: FieldCtx, gens: GenSet, name: str) -> "NcPoly":
        return cls(ctx, gens, {(gens.index(name),): 1})

    @classmethod
    def monomial(cls, ctx: FieldCtx, gens: GenSet, word: Word, coeff: Scalar = 1) -> "NcPoly":
        encoded = ctx.element(coeff)
        return cls(ctx, gens, {tuple(word): encoded} if encoded else {})

    def like(self, terms: Dict[Word, int]) -> "NcPoly":
        return NcPoly(self.ctx, self.gens, terms)

    def one(self) -> "NcPoly":
        return self.like({(): 1})

    unit = one

    # -- inspection ---------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def is_constant(self) -> bool:
        return all(not word for word in self.terms)

    def constant_value(self) -> Fq:
        return Fq(self.ctx, self.terms.get((), 0))

    def coefficient(self, word: Word) -> Fq:
        return Fq(self.ctx, self.terms.get(tuple(word), 0))

    def sorted_items(self, descending: bool = True) -> List[Tuple[Word, int]]:
        return sorted(self.terms.items(), key=lambda item: self.gens.key(item[0]), reverse=descending)

    def leading_word(self) -> Word:
        if not self.terms:
            raise FreeAlgebraError("zero polynomial has no leading word")
        return max(self.terms, key=self.gens.key)

    def max_weight(self) -> int:
        return max((self.gens.weight(word) for word in self.terms), default=0)

    def homogeneous_part(self, weight: int) -> "NcPoly":
        return self.like({w: c for w, c in self.terms.items() if self.gens.weight(w) == weight})

    # -- arithmetic ---------------------------------------------------------------
    def _coerce(self, other: "NcPoly | Scalar") -> "NcPoly":
        if isinstance(other, NcPoly):
            _check_same(self, other)
            return other
        return NcPoly.constant(self.ctx, self.gens, other)

    def __add__(self, other: "NcPoly | Scalar") -> "NcPoly":
        other = self._coerce(other)
        return self.like(_add_terms(self.ctx, self.terms, other.terms, 1))

    __radd__ = __add__

    def __sub__(self, other: "NcPoly | Scalar") -> "NcPoly":
        other = self._coerce(other)
        return self.like(_add_terms(self.ctx, self.terms, other.terms, self.ctx.neg(1)))

    def __rsub__(self, other: Scalar) -> "NcPoly":
        return self._coerce(other) - self

    def __neg__(self) -> "NcPoly":
        neg = self.ctx.neg
        return self.like({w: neg(c) for w, c in self.terms.items()})

    def scale(self, factor: Scalar) -> "NcPoly":
        return self.scale_encoded(self.ctx.element(factor))

    def scale_encoded(self, value: int) -> "NcPoly":
        """Multiply by a coefficient already in the encoded form stored in ``terms``."""

        if value == 0:
            return self.like({})
        mul = self.ctx.mul
        return self.like({w: mul(c, value) for w, c in self.terms.items()})

    def __mul__(self, other: "NcPoly | Scalar") -> "NcPoly":
        if not isinstance(other, NcPoly):
            return self.scale(other)
        _check_same(self, other)
        return self.like(_mul_terms(self.ctx, self.terms, other.terms))

    def __rmul__(self, other: Scalar) -> "NcPoly":
        return self.scale(other)

    def __pow__(self, n: int) -> "NcPoly":
        return power(self, n)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, NcPoly):
            return self.gens == other.gens and self.ctx.same_field(other.ctx) and self.terms == other.terms
        if isinstance(other, (int, Fq)):
            return self == NcPoly.constant(self.ctx, self.gens, other)
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = [
            _format_term(self.ctx, coeff, format_word(self.gens, word), index == 0)
            for index, (word, coeff) in enumerate(self.sorted_items())
        ]
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"NcPoly({self})"


class TensorPoly:
    """Element of the n-th tensor power of the free algebra.

    Multiplication is componentwise: (a⊗b)(c⊗d) = ac⊗bd.
    """

    __slots__ = ("ctx", "gens", "rank", "terms")

    def __init__(
        self, ctx: FieldCtx, gens: GenSet, rank: int, terms: Optional[Dict[TensorWord, int]] = None
    ) -> None:
        if rank < 1:
            raise FreeAlgebraError("tensor rank must be at least 1")
        self.ctx = ctx
        self.gens = gens
        self.rank = rank
        self.terms: Dict[TensorWord, int] = terms if terms is not None else {}

    @classmethod
    def zero(cls, ctx: FieldCtx, gens: GenSet, rank: int) -> "TensorPoly":
        return cls(ctx, gens, rank, {})

    @classmethod
    def unit_of(cls, ctx: FieldCtx, gens: GenSet, rank: int) -> "TensorPoly":
        return cls(ctx, gens, rank, {((),) * rank: 1})

    @classmethod
    def tensor(cls, *factors: NcPoly) -> "TensorPoly":
        """a ⊗ b ⊗ ... of ordinary polynomials."""

        if not factors:
            raise FreeAlgebraError("tensor product of no factors")
        head = factors[0]
        for factor in factors[1:]:
            _check_same(head, factor)
        ctx = head.ctx
        terms: Dict[TensorWord, int] = {((),): 1}
        for factor in factors:
            grown: Dict[TensorWord, int] = {}
            for key, coeff in terms.items():
                for word, c in factor.terms.items():
                    grown[key + (word,)] = ctx.mul(coeff, c)
            terms = grown
        return cls(ctx, head.gens, len(factors), {k[1:]: c for k, c in terms.items() if c})

    def like(self, terms: Dict[TensorWord, int]) -> "TensorPoly":
        return TensorPoly(self.ctx, self.gens, self.rank, terms)

    def unit(self) -> "TensorPoly":
        return self.like({((),) * self.rank: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, key: Sequence[Word]) -> Fq:
        return Fq(self.ctx, self.terms.get(tuple(tuple(w) for w in key), 0))

    def _coerce(self, other: "TensorPoly | Scalar") -> "TensorPoly":
        if isinstance(other, TensorPoly):
            _check_same(self, other)
            if other.rank != self.rank:
                raise FreeAlgebraError(f"tensor ranks differ: {self.rank} vs {other.rank}")
            return other
        value = self.ctx.element(other)
        return self.like({((),) * self.rank: value} if value else {})

    def __add__(self, other: "TensorPoly | Scalar") -> "TensorPoly":
        other = self._coerce(other)
        return self.like(_add_terms(self.ctx, self.terms, other.terms, 1))

    __radd__ = __add__

    def __sub__(self, other: "TensorPoly | Scalar") -> "TensorPoly":
        other = self._coerce(other)
        return self.like(_add_terms(self.ctx, self.terms, other.terms, self.ctx.neg(1)))

    def __rsub__(self, other: Scalar) -> "TensorPoly":
        return self._coerce(other) - self

    def __neg__(self) -> "TensorPoly":
        neg = self.ctx.neg
        return self.like({k: neg(c) for k, c in self.terms.items()})

    def scale(self, factor: Scalar) -> "TensorPoly":
        return self.scale_encoded(self.ctx.element(factor))

    def scale_encoded(self, value: int) -> "TensorPoly":
        if value == 0:
            return self.like({})
        mul = self.ctx.mul
        return self.like({k: mul(c, value) for k, c in self.terms.items()})

    def __mul__(self, other: "TensorPoly | Scalar") -> "TensorPoly":
        if not isinstance(other, TensorPoly):
            return self.scale(other)
        other = self._coerce(other)
        ctx = self.ctx
        add, mul = ctx.add, ctx.mul
        out: Dict[TensorWord, int] = {}
        for left, a in self.terms.items():
            for right, b in other.terms.items():
                key = tuple(u + v for u, v in zip(left, right))
                c = mul(a, b)
                previous = out.get(key)
                out[key] = c if previous is None else add(previous, c)
        return self.like({k: c for k, c in out.items() if c})

    def __rmul__(self, other: Scalar) -> "TensorPoly":
        return self.scale(other)

    def __pow__(self, n: int) -> "TensorPoly":
        return power(self, n)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TensorPoly):
            return (
                self.rank == other.rank
                and self.gens == other.gens
                and self.ctx.same_field(other.ctx)
                and self.terms == other.terms
            )
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def apply_factor(self, position: int, fn: Callable[[Word], "NcPoly | TensorPoly"]) -> "TensorPoly":
        """Apply a linear map, given on words, to one tensor slot.

        ``fn`` returns an ``NcPoly`` (the slot stays one factor) or a rank-m
        ``TensorPoly`` (the slot splits into m factors).
        """

        ctx = self.ctx
        add, mul = ctx.add, ctx.mul
        out: Dict[TensorWord, int] = {}
        new_rank = None
        cache: Dict[Word, Dict[TensorWord, int]] = {}
        for key, coeff in self.terms.items():
            word = key[position]
            image = cache.get(word)
            if image is None:
                value = fn(word)
                if isinstance(value, TensorPoly):
                    image = dict(value.terms)
                    width = value.rank
                else:
                    image = {(w,): c for w, c in value.terms.items()}
                    width = 1
                if new_rank is None:
                    new_rank = self.rank - 1 + width
                cache[word] = image
            for part, c in image.items():
                new_key = key[:position] + part + key[position + 1 :]
                value_c = mul(coeff, c)
                previous = out.get(new_key)
                out[new_key] = value_c if previous is None else add(previous, value_c)
        if new_rank is None:
            probe = fn(())
            new_rank = self.rank - 1 + (probe.rank if isinstance(probe, TensorPoly) else 1)
        return TensorPoly(ctx, self.gens, new_rank, {k: c for k, c in out.items() if c})

    def contract(self, position: int, fn: Callable[[Word], int]) -> "TensorPoly | NcPoly":
        """Apply a scalar-valued functional to one slot, dropping it."""

        ctx = self.ctx
        add, mul = ctx.add, ctx.mul
        out: Dict[TensorWord, int] = {}
        for key, coeff in self.terms.items():
            scalar = fn(key[position])
            if not scalar:
                continue
            new_key = key[:position] + key[position + 1 :]
            value = mul(coeff, scalar)
            previous = out.get(new_key)
            out[new_key] = value if previous is None else add(previous, value)
        terms = {k: c for k, c in out.items() if c}
        if self.rank == 2:
            return NcPoly(ctx, self.gens, {k[0]: c for k, c in terms.items()})
        return TensorPoly(ctx, self.gens, self.rank - 1, terms)

    def multiply_out(self) -> NcPoly:
        """The multiplication map m: a⊗b⊗... ↦ ab..."""

        flat: Dict[Word, int] = {}
        ctx = self.ctx
        for key, coeff in self.terms.items():
            word = tuple(letter for part in key for letter in part)
            previous = flat.get(word)
            flat[word] = coeff if previous is None else ctx.add(previous, coeff)
        return NcPoly(ctx, self.gens, {w: c for w, c in flat.items() if c})

    def swap(self) -> "TensorPoly":
        if self.rank != 2:
            raise FreeAlgebraError("swap is defined on rank-2 tensors")
        return self.like({(b, a): c for (a, b), c in self.terms.items()})

    def sorted_items(self, descending: bool = True) -> List[Tuple[TensorWord, int]]:
        key = self.gens.key
        return sorted(self.terms.items(), key=lambda item: tuple(key(w) for w in item[0]), reverse=descending)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for index, (key, coeff) in enumerate(self.sorted_items()):
            body = "(#)".join(format_word(self.gens, word) for word in key)
            pieces.append(_format_term(self.ctx, coeff, body, index == 0))
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"TensorPoly({self})"


class LambdaPoly:
    """Polynomial in one central indeterminate with NcPoly coefficients."""

    __slots__ = ("ctx", "gens", "coeffs")

    def __init__(self, ctx: FieldCtx, gens: GenSet, coeffs: Optional[Dict[int, NcPoly]] = None) -> None:
        self.ctx = ctx
        self.gens = gens
        self.coeffs: Dict[int, NcPoly] = {d: c for d, c in (coeffs or {}).items() if c}

    @classmethod
    def from_polys(cls, *coeffs: NcPoly) -> "LambdaPoly":
        head = coeffs[0]
        return cls(head.ctx, head.gens, dict(enumerate(coeffs)))

    def coefficient(self, degree: int) -> NcPoly:
        return self.coeffs.get(degree, NcPoly.zero(self.ctx, self.gens))

    def __add__(self, other: "LambdaPoly") -> "LambdaPoly":
        merged = dict(self.coeffs)
        for degree, poly in other.coeffs.items():
            merged[degree] = merged[degree] + poly if degree in merged else poly
        return LambdaPoly(self.ctx, self.gens, merged)

    def __neg__(self) -> "LambdaPoly":
        return LambdaPoly(self.ctx, self.gens, {d: -c for d, c in self.coeffs.items()})

    def __sub__(self, other: "LambdaPoly") -> "LambdaPoly":
        return self + (-other)

    def __mul__(self, other: "LambdaPoly") -> "LambdaPoly":
        out: Dict[int, NcPoly] = {}
        for d1, a in self.coeffs.items():
            for d2, b in other.coeffs.items():
                product = a * b
                degree = d1 + d2
                out[degree] = out[degree] + product if degree in out else product
        return LambdaPoly(self.ctx, self.gens, out)

    def degree(self) -> int:
        return max(self.coeffs, default=-1)


def _add_terms(ctx: FieldCtx, a: Dict, b: Dict, factor: int) -> Dict:
    out = dict(a)
    add, mul = ctx.add, ctx.mul
    for key, coeff in b.items():
        value = coeff if factor == 1 else mul(coeff, factor)
        previous = out.get(key)
        if previous is None:
            out[key] = value
        else:
            total = add(previous, value)
            if total:
                out[key] = total
            else:
                del out[key]
    return out


def _mul_terms(ctx: FieldCtx, a: Dict[Word, int], b: Dict[Word, int]) -> Dict[Word, int]:
    out: Dict[Word, int] = {}
    add, mul = ctx.add, ctx.mul
    for u, cu in a.items():
        for v, cv in b.items():
            word = u + v
            c = mul(cu, cv)
            previous = out.get(word)
            out[word] = c if previous is None else add(previous, c)
    return {w: c for w, c in out.items() if c}


P = TypeVar("P", NcPoly, TensorPoly)
Reducer = Optional[Callable[[P], P]]


def power(base: P, n: int, reducer: Reducer = None) -> P:
    if n < 0:
        raise FreeAlgebraError("negative powers are not defined")
    result = base.unit()
    for _ in range(n):
        result = result * base
        if reducer is not None:
            result = reducer(result)
    return result


def commutator(a: P, b: P, reducer: Reducer = None) -> P:
    value = a * b - b * a
    return reducer(value) if reducer is not None else value


def ad_R_power(a: P, b: P, n: int, reducer: Reducer = None) -> P:
    """(a)(ad_R b)^n: n-fold right commutator [[a, b], ..., b]."""

    if n < 0:
        raise FreeAlgebraError("adjoint powers need n >= 0")
    result = reducer(a) if reducer is not None else a
    for _ in range(n):
        result = commutator(result, b, reducer)
    return result


def ad_L_power(a: P, b: P, n: int, reducer: Reducer = None) -> P:
    """(ad_L a)^n(b): n-fold left commutator [a, [a, ..., b]]."""

    if n < 0:
        raise FreeAlgebraError("adjoint powers need n >= 0")
    result = reducer(b) if reducer is not None else b
    for _ in range(n):
        result = commutator(a, result, reducer)
    return result


def two_letter_algebra(p: int) -> Tuple[FieldCtx, GenSet]:
    ctx = make_field(p)
    return ctx, GenSet.create(("a", "b"), precedence=("b", "a"))


def jacobson_s(p: int) -> List[NcPoly]:
    """The Jacobson polynomials s_1, ..., s_{p-1} in letters a, b over GF(p).

    i*s_i is the coefficient of lambda^(i-1) in (a)(ad_R(lambda*a + b))^(p-1).
    """

    ctx, gens = two_letter_algebra(p)
    a = NcPoly.generator(ctx, gens, "a")
    b = NcPoly.generator(ctx, gens, "b")
    current = LambdaPoly.from_polys(a)
    shift = LambdaPoly.from_polys(b, a)
    for _ in range(p - 1):
        current = current * shift - shift * current
    return [current.coefficient(i - 1).scale(ctx.inv(i % p)) for i in range(1, p)]


def substitute(
    target: NcPoly,
    assignment: Mapping[Union[str, int], P],
    antihom: bool = False,
    reducer: Reducer = None,
) -> P:
    """Extend a generator assignment to an algebra (anti)homomorphism and evaluate.

    Keys of ``assignment`` may be generator names or indices of ``target.gens``.
    """

    images: Dict[int, P] = {}
    for key, value in assignment.items():
        index = key if isinstance(key, int) else target.gens.index(key)
        images[index] = value
    if not images:
        raise UnassignedGeneratorError("substitution needs at least one assigned generator")
    sample = next(iter(images.values()))
    unit = sample.unit()
    cache: Dict[Word, P] = {(): unit}

    def image_of(word: Word) -> P:
        cached = cache.get(word)
        if cached is not None:
            return cached
        head, last = word[:-1], word[-1]
        if last not in images:
            raise UnassignedGeneratorError(f"generator '{target.gens.names[last]}' has no image")
        value = images[last] * image_of(head) if antihom else image_of(head) * images[last]
        if reducer is not None:
            value = reducer(value)
        cache[word] = value
        return value

    result = unit.like({})
    for word, coeff in target.terms.items():
        result = result + image_of(word).scale_encoded(coeff)
    return result


__all__ = [
    "Word",
    "TensorWord",
    "FreeAlgebraError",
    "UnassignedGeneratorError",
    "GenSet",
    "NcPoly",
    "TensorPoly",
    "LambdaPoly",
    "format_word",
    "power",
    "commutator",
    "ad_R_power",
    "ad_L_power",
    "jacobson_s",
    "two_letter_algebra",
    "substitute",
]
