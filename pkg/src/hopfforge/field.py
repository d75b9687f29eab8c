"""Exact arithmetic in GF(p^k) with distinguished roots of unity.

Elements are encoded as integers ``0 <= v < p**k`` whose base-``p`` digits are
the little-endian coefficient vector of the residue class modulo the field's
modulus (the same encoding ``galois`` uses).  Multiplication goes through
discrete log tables and addition through Zech logarithms, so every operation is
a couple of list lookups.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple

import galois
from loguru import logger


class FieldError(Exception):
    """Raised for invalid field construction or arithmetic."""


class FieldCtx:
    """A finite field GF(p^k) together with registered roots of unity.

    Instances are immutable once built by :func:`make_field`.
    """

    __slots__ = (
        "p",
        "k",
        "order",
        "modulus",
        "roots",
        "_exp",
        "_log",
        "_zech",
        "_neg_one_log",
    )

    def __init__(
        self,
        p: int,
        k: int,
        modulus: Tuple[int, ...],
        exp_table: List[int],
        roots: Mapping[int, int],
    ) -> None:
        self.p = p
        self.k = k
        self.order = p**k
        self.modulus = modulus
        self._exp = exp_table
        log = [0] * self.order
        for index, value in enumerate(exp_table):
            log[value] = index
        self._log = log
        group = self.order - 1
        # Zech table: 1 + w^n = w^zech[n], -1 marks 1 + w^n = 0
        zech = [-1] * group
        for n in range(group):
            value = exp_table[n]
            low = value % p
            bumped = value - low + (low + 1) % p
            zech[n] = -1 if bumped == 0 else log[bumped]
        self._zech = zech
        self._neg_one_log = 0 if p == 2 else group // 2
        self.roots: Dict[int, int] = dict(roots)

    # -- identity -----------------------------------------------------------------
    def same_field(self, other: "FieldCtx") -> bool:
        return self is other or (self.p == other.p and self.modulus == other.modulus)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return self.same_field(other) and self.roots == other.roots

    def __hash__(self) -> int:
        return hash((self.p, self.modulus, tuple(sorted(self.roots.items()))))

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, k={self.k}, orders={sorted(self.roots)})"

    # -- raw arithmetic on encoded integers ---------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if a == 0:
            return b
        if b == 0:
            return a
        group = self.order - 1
        la = self._log[a]
        z = self._zech[(self._log[b] - la) % group]
        if z < 0:
            return 0
        return self._exp[(la + z) % group]

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        if a == 0 or self.p == 2:
            return a
        return self._exp[(self._log[a] + self._neg_one_log) % (self.order - 1)]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("division by zero in GF({}^{})".format(self.p, self.k))
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(-self._log[a]) % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if n == 0:
            return 1
        if a == 0:
            if n < 0:
                raise FieldError("zero has no negative powers")
            return 0
        return self._exp[(self._log[a] * n) % (self.order - 1)]

    def element(self, value: "int | Fq") -> int:
        """Coerce an integer residue or an ``Fq`` to an encoded value.

        A bare int is always read as an integer of the prime field and reduced
        mod p; it is never taken as an encoded GF(p^k) value.  Coefficients
        pulled out of ``terms`` are encoded, so wrap them as ``Fq(ctx, value)``
        or use the ``scale_encoded`` helpers of the polynomial classes.
        """

        if isinstance(value, Fq):
            if not self.same_field(value.ctx):
                raise FieldError("element belongs to a different field")
            return value.value
        return value % self.p

    def log(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no discrete logarithm")
        return self._log[a]

    def multiplicative_order(self, a: int) -> int:
        group = self.order - 1
        return group // math.gcd(self.log(a), group)

    def in_prime_field(self, a: int) -> bool:
        return a < self.p

    # -- user-facing values -------------------------------------------------------
    def __call__(self, value: "int | Fq") -> "Fq":
        return Fq(self, self.element(value))

    @property
    def zero(self) -> "Fq":
        return Fq(self, 0)

    @property
    def one(self) -> "Fq":
        return Fq(self, 1)

    @property
    def primitive(self) -> "Fq":
        """The fixed generator ``w`` of the multiplicative group."""

        return Fq(self, self._exp[1 % (self.order - 1)])

    def root(self, n: int) -> "Fq":
        try:
            return Fq(self, self.roots[n])
        except KeyError as exc:
            raise FieldError(f"no root of order {n} registered in {self!r}") from exc

    def elements(self) -> Iterator["Fq"]:
        """All field elements in the fixed enumeration order (encoded value ascending)."""

        for value in range(self.order):
            yield Fq(self, value)

    def from_coeffs(self, coeffs: Sequence[int]) -> "Fq":
        if len(coeffs) > self.k:
            raise FieldError(f"expected at most {self.k} coefficients")
        value = 0
        for coeff in reversed(list(coeffs)):
            value = value * self.p + coeff % self.p
        return Fq(self, value)

    def coeffs(self, a: int) -> Tuple[int, ...]:
        digits = []
        for _ in range(self.k):
            a, digit = divmod(a, self.p)
            digits.append(digit)
        return tuple(digits)

    def format(self, a: int) -> str:
        if a < self.p:
            return str(a)
        exponent = self._log[a]
        return "w" if exponent == 1 else f"w^{exponent}"

    def describe(self) -> Dict[str, object]:
        return {
            "p": self.p,
            "k": self.k,
            "modulus": list(self.modulus),
            "orders": sorted(self.roots),
        }


@dataclass(frozen=True, slots=True)
class Fq:
    """A single element of a :class:`FieldCtx`."""

    ctx: FieldCtx
    value: int

    def _other(self, other: "Fq | int") -> int:
        return self.ctx.element(other)

    def __add__(self, other: "Fq | int") -> "Fq":
        return Fq(self.ctx, self.ctx.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other: "Fq | int") -> "Fq":
        return Fq(self.ctx, self.ctx.sub(self.value, self._other(other)))

    def __rsub__(self, other: "Fq | int") -> "Fq":
        return Fq(self.ctx, self.ctx.sub(self._other(other), self.value))

    def __neg__(self) -> "Fq":
        return Fq(self.ctx, self.ctx.neg(self.value))

    def __mul__(self, other: "Fq | int") -> "Fq":
        return Fq(self.ctx, self.ctx.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other: "Fq | int") -> "Fq":
        return Fq(self.ctx, self.ctx.div(self.value, self._other(other)))

    def __rtruediv__(self, other: "Fq | int") -> "Fq":
        return Fq(self.ctx, self.ctx.div(self._other(other), self.value))

    def __pow__(self, n: int) -> "Fq":
        return Fq(self.ctx, self.ctx.pow(self.value, n))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Fq):
            return self.ctx.same_field(other.ctx) and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.ctx.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ctx.p, self.ctx.modulus, self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def inverse(self) -> "Fq":
        return Fq(self.ctx, self.ctx.inv(self.value))

    def order(self) -> int:
        return self.ctx.multiplicative_order(self.value)

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self.ctx.coeffs(self.value)

    def __str__(self) -> str:
        return self.ctx.format(self.value)

    def __repr__(self) -> str:
        return f"Fq({self})"


def _min_degree(p: int, orders: Iterable[int]) -> int:
    modulus = 1
    for n in orders:
        modulus = modulus * n // math.gcd(modulus, n)
    k = 1
    while (p**k - 1) % modulus:
        k += 1
    return k


@lru_cache(maxsize=64)
def _build(p: int, orders: frozenset[int], k: int) -> FieldCtx:
    if k == 1:
        modulus: Tuple[int, ...] = (0, 1)
        gf = galois.GF(p)
    else:
        poly = galois.irreducible_poly(p, k, method="min")
        modulus = tuple(int(c) for c in reversed(poly.coeffs))
        gf = galois.GF(p**k, irreducible_poly=poly)
    alpha = gf.primitive_element
    exp_table: List[int] = []
    acc = gf(1)
    for _ in range(p**k - 1):
        exp_table.append(int(acc))
        acc = acc * alpha
    skeleton = FieldCtx(p, k, modulus, exp_table, {})
    roots: Dict[int, int] = {}
    for n in sorted(orders):
        for value in range(1, skeleton.order):
            if skeleton.multiplicative_order(value) == n:
                roots[n] = value
                break
    logger.debug("built GF({}^{}) with modulus {} and roots {}", p, k, modulus, roots)
    return FieldCtx(p, k, modulus, exp_table, roots)


def make_field(p: int, orders: Iterable[int] = (), *, degree: int | None = None) -> FieldCtx:
    """Smallest GF(p^k) holding a root of unity of every requested order.

    ``degree`` forces a specific extension degree; it must still contain all
    requested roots.
    """

    if p < 2 or not galois.is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    wanted = frozenset(int(n) for n in orders) | {1}
    for n in wanted:
        if n < 1:
            raise FieldError(f"root order {n} must be positive")
        if n % p == 0:
            raise FieldError(f"no root of unity of order {n} exists in characteristic {p}")
    k = _min_degree(p, wanted)
    if degree is not None:
        if degree < 1 or degree % k:
            raise FieldError(
                f"GF({p}^{degree}) does not contain roots of orders {sorted(wanted)}"
            )
        k = degree
    return _build(p, wanted, k)


def extend_field(ctx: FieldCtx, degree: int) -> FieldCtx:
    """GF(p^degree) with the same registered orders; ``degree`` must be a multiple of ``ctx.k``."""

    if degree % ctx.k:
        raise FieldError(f"GF({ctx.p}^{ctx.k}) does not embed in GF({ctx.p}^{degree})")
    return make_field(ctx.p, ctx.roots, degree=degree)


def embedding(source: FieldCtx, target: FieldCtx) -> List[int]:
    """Table sending every encoded element of ``source`` to its image in ``target``.

    The generator of ``source`` goes to the least root of its modulus in ``target``.
    """

    if source.p != target.p or target.k % source.k:
        raise FieldError(f"{source!r} does not embed in {target!r}")
    if source.k == 1:
        return list(range(source.order))
    image = None
    for candidate in range(target.order):
        acc = 0
        for coeff in reversed(source.modulus):
            acc = target.add(target.mul(acc, candidate), coeff)
        if acc == 0:
            image = candidate
            break
    if image is None:  # pragma: no cover - guaranteed by field theory
        raise FieldError("modulus has no root in the target field")
    table = []
    for value in range(source.order):
        acc = 0
        for coeff in reversed(source.coeffs(value)):
            acc = target.add(target.mul(acc, image), coeff)
        table.append(acc)
    return table


def xi_integer(n: int, xi: Fq) -> Fq:
    """(n)_xi = 1 + xi + ... + xi^(n-1)."""

    if n < 0:
        raise FieldError("xi-integers are defined for n >= 0")
    ctx = xi.ctx
    total, power = 0, 1
    for _ in range(n):
        total = ctx.add(total, power)
        power = ctx.mul(power, xi.value)
    return Fq(ctx, total)


def xi_factorial(n: int, xi: Fq) -> Fq:
    ctx = xi.ctx
    result = 1
    for m in range(1, n + 1):
        result = ctx.mul(result, xi_integer(m, xi).value)
    return Fq(ctx, result)


def _pascal_rows(n: int, xi: Fq) -> List[List[int]]:
    ctx = xi.ctx
    powers = [ctx.pow(xi.value, i) for i in range(n + 1)]
    rows = [[1]]
    for m in range(1, n + 1):
        previous = rows[-1]
        row = [1] * (m + 1)
        for i in range(1, m):
            row[i] = ctx.add(previous[i - 1], ctx.mul(powers[i], previous[i]))
        rows.append(row)
    return rows


def xi_binomial(n: int, i: int, xi: Fq) -> Fq:
    """Gaussian binomial by the Pascal recurrence C(n,i) = C(n-1,i-1) + xi^i C(n-1,i)."""

    if not 0 <= i <= n:
        raise FieldError(f"binomial index {i} outside 0..{n}")
    return Fq(xi.ctx, _pascal_rows(n, xi)[n][i])


def divided_xi_binomial(n: int, i: int, xi: Fq) -> Fq:
    """(n-1)_xi! / ((i)_xi! (n-i)_xi!) for 0 <= i < n, as C(n-1, i)_xi / (n-i)_xi."""

    if not 0 <= i < n:
        raise FieldError(f"divided binomial index {i} outside 0..{n - 1}")
    denominator = xi_integer(n - i, xi)
    if not denominator:
        raise FieldError(f"({n - i})_xi vanishes; divided binomial undefined")
    return xi_binomial(n - 1, i, xi) / denominator


def divided_binomial(p: int, i: int) -> int:
    """(p-1)!/(i!(p-i)!) reduced mod p, the coefficients of the omega tails."""

    if not 0 < i < p:
        raise FieldError(f"divided binomial index {i} outside 1..{p - 1}")
    return (math.comb(p, i) // p) % p


__all__ = [
    "FieldError",
    "FieldCtx",
    "Fq",
    "make_field",
    "extend_field",
    "embedding",
    "xi_integer",
    "xi_factorial",
    "xi_binomial",
    "divided_xi_binomial",
    "divided_binomial",
]
