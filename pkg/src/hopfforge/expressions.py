"""Expression grammar for relations, coproducts and scalar parameters.

Grammar (loosest binding first)::

    sum     := tensor (("+" | "-") tensor)*
    tensor  := product ("(#)" product)*
    product := unary ("*" unary)*
    unary   := "-" unary | power
    power   := atom ("^" ["-"] INT)?
    atom    := INT | NAME | "(" sum ")"

Juxtaposition is not multiplication: ``gx`` is a single (unknown) name.
Names resolve to generators first, then to scalars (field constants such as
``xi`` and named parameters such as ``lambda1``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, List, Mapping, Optional, Union

from .field import FieldCtx, Fq
from .freealg import GenSet, NcPoly, TensorPoly

Value = Union[Fq, NcPoly, TensorPoly]

_TOKEN = re.compile(
    r"\s*(?:(?P<tensor>\(#\))|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()]))"
)


class ExpressionError(Exception):
    """Raised for malformed expressions; ``column`` is 0-based."""

    def __init__(self, message: str, text: str = "", column: int = 0) -> None:
        super().__init__(f"{message} at column {column} in {text!r}" if text else message)
        self.text = text
        self.column = column


@dataclass(frozen=True, slots=True)
class Token:
    kind: str
    text: str
    column: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    position = 0
    stripped_end = len(text.rstrip())
    while position < stripped_end:
        match = _TOKEN.match(text, position)
        if match is None or match.end() == position:
            raise ExpressionError("unexpected character", text, position)
        kind = match.lastgroup or "op"
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(
        self,
        text: str,
        ctx: FieldCtx,
        gens: Optional[GenSet],
        scalars: Mapping[str, Fq],
    ) -> None:
        self.text = text
        self.ctx = ctx
        self.gens = gens
        self.scalars = scalars
        self.tokens = tokenize(text)
        self.index = 0

    # -- token helpers ------------------------------------------------------------
    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def accept(self, text: str) -> bool:
        token = self.current
        if token.kind in ("op", "tensor") and token.text == text:
            self.index += 1
            return True
        return False

    def fail(self, message: str, token: Optional[Token] = None) -> ExpressionError:
        token = token or self.current
        return ExpressionError(message, self.text, token.column)

    # -- grammar ------------------------------------------------------------------
    def parse(self) -> Value:
        value = self.sum()
        if self.current.kind != "end":
            raise self.fail(f"unexpected token {self.current.text!r}")
        return value

    def sum(self) -> Value:
        value = self.tensor()
        while True:
            token = self.current
            if self.accept("+"):
                value = self.combine(value, self.tensor(), "+", token)
            elif self.accept("-"):
                value = self.combine(value, self.tensor(), "-", token)
            else:
                return value

    def tensor(self) -> Value:
        value = self.product()
        while True:
            token = self.current
            if not self.accept("(#)"):
                return value
            value = self.tensor_pair(value, self.product(), token)

    def product(self) -> Value:
        value = self.unary()
        while True:
            token = self.current
            if not self.accept("*"):
                return value
            value = self.combine(value, self.unary(), "*", token)

    def unary(self) -> Value:
        if self.accept("-"):
            return -self.unary()
        return self.power()

    def power(self) -> Value:
        base = self.atom()
        token = self.current
        if not self.accept("^"):
            return base
        negative = self.accept("-")
        exponent_token = self.advance()
        if exponent_token.kind != "int":
            raise self.fail("exponent must be an integer literal", exponent_token)
        exponent = int(exponent_token.text)
        if negative:
            if not isinstance(base, Fq):
                raise self.fail("negative exponents apply to scalars only", token)
            if not base:
                raise self.fail("zero has no negative powers", token)
            return base.inverse() ** exponent
        return base**exponent

    def atom(self) -> Value:
        token = self.advance()
        if token.kind == "int":
            return self.ctx(int(token.text))
        if token.kind == "name":
            return self.resolve(token)
        if token.kind == "op" and token.text == "(":
            value = self.sum()
            if not self.accept(")"):
                raise self.fail("missing closing parenthesis")
            return value
        raise self.fail(f"unexpected token {token.text!r}", token)

    def resolve(self, token: Token) -> Value:
        name = token.text
        if self.gens is not None and name in self.gens.names:
            return NcPoly.generator(self.ctx, self.gens, name)
        if name in self.scalars:
            return self.ctx(self.scalars[name])
        raise self.fail(f"unknown name {name!r}", token)

    # -- value algebra ------------------------------------------------------------
    def lift(self, value: Value) -> Union[NcPoly, TensorPoly]:
        if isinstance(value, Fq):
            if self.gens is None:
                raise ExpressionError("scalar context cannot hold polynomials", self.text)
            return NcPoly.constant(self.ctx, self.gens, value)
        return value

    def combine(self, left: Value, right: Value, op: str, token: Token) -> Value:
        if isinstance(left, Fq) and isinstance(right, Fq):
            return left + right if op == "+" else left - right if op == "-" else left * right
        if op == "*" and isinstance(left, Fq):
            return right.scale(left)  # type: ignore[union-attr]
        if op == "*" and isinstance(right, Fq):
            return left.scale(right)  # type: ignore[union-attr]
        left_poly, right_poly = self.lift(left), self.lift(right)
        if isinstance(left_poly, TensorPoly) and isinstance(right_poly, NcPoly):
            right_poly = self.promote(right_poly, left_poly.rank, token)
        elif isinstance(left_poly, NcPoly) and isinstance(right_poly, TensorPoly):
            left_poly = self.promote(left_poly, right_poly.rank, token)
        if op == "+":
            return left_poly + right_poly  # type: ignore[operator]
        if op == "-":
            return left_poly - right_poly  # type: ignore[operator]
        return left_poly * right_poly  # type: ignore[operator]

    def promote(self, poly: NcPoly, rank: int, token: Token) -> TensorPoly:
        if not poly.is_constant():
            raise self.fail("cannot mix tensors and plain polynomials", token)
        return TensorPoly.unit_of(self.ctx, poly.gens, rank).scale(poly.constant_value())

    def tensor_pair(self, left: Value, right: Value, token: Token) -> TensorPoly:
        left_poly, right_poly = self.lift(left), self.lift(right)
        if isinstance(right_poly, TensorPoly):
            raise self.fail("tensor factors must be plain polynomials", token)
        if isinstance(left_poly, NcPoly):
            return TensorPoly.tensor(left_poly, right_poly)
        extended = TensorPoly.zero(self.ctx, left_poly.gens, left_poly.rank + 1)
        add, mul = self.ctx.add, self.ctx.mul
        terms = dict(extended.terms)
        for key, coeff in left_poly.terms.items():
            for word, c in right_poly.terms.items():
                new_key = key + (word,)
                value = mul(coeff, c)
                previous = terms.get(new_key)
                terms[new_key] = value if previous is None else add(previous, value)
        return extended.like({k: c for k, c in terms.items() if c})


def _scalar_table(ctx: FieldCtx, scalars: Optional[Mapping[str, Union[int, Fq]]]) -> dict:
    return {name: ctx(value) for name, value in (scalars or {}).items()}


def parse_poly(
    text: str,
    ctx: FieldCtx,
    gens: GenSet,
    scalars: Optional[Mapping[str, Union[int, Fq]]] = None,
) -> NcPoly:
    value = _Parser(text, ctx, gens, _scalar_table(ctx, scalars)).parse()
    if isinstance(value, TensorPoly):
        raise ExpressionError("expected a polynomial, found a tensor", text)
    if isinstance(value, Fq):
        return NcPoly.constant(ctx, gens, value)
    return value


def parse_tensor(
    text: str,
    ctx: FieldCtx,
    gens: GenSet,
    scalars: Optional[Mapping[str, Union[int, Fq]]] = None,
    rank: int = 2,
) -> TensorPoly:
    value = _Parser(text, ctx, gens, _scalar_table(ctx, scalars)).parse()
    if isinstance(value, Fq):
        return TensorPoly.unit_of(ctx, gens, rank).scale(value)
    if isinstance(value, NcPoly):
        if not value.is_constant():
            raise ExpressionError(f"expected a rank-{rank} tensor, found a polynomial", text)
        return TensorPoly.unit_of(ctx, gens, rank).scale(value.constant_value())
    if value.rank != rank:
        raise ExpressionError(f"expected a rank-{rank} tensor, found rank {value.rank}", text)
    return value


def parse_scalar(
    text: str,
    ctx: FieldCtx,
    scalars: Optional[Mapping[str, Union[int, Fq]]] = None,
) -> Fq:
    value = _Parser(text, ctx, None, _scalar_table(ctx, scalars)).parse()
    assert isinstance(value, Fq)
    return value


def names_in(text: str) -> Iterator[str]:
    """Identifier tokens of ``text`` in order of appearance."""

    for token in tokenize(text):
        if token.kind == "name":
            yield token.text


__all__ = [
    "ExpressionError",
    "Token",
    "tokenize",
    "parse_poly",
    "parse_tensor",
    "parse_scalar",
    "names_in",
]
