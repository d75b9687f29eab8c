"""Diamond-lemma machinery: oriented rules, normal forms, ambiguities and completion."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from loguru import logger

from .automaton import FactorAutomaton
from .field import FieldCtx
from .freealg import GenSet, NcPoly, TensorPoly, Word, format_word


class OrientationError(Exception):
    """Raised when a relation has no strictly dominating monomial."""

    def __init__(self, message: str, tied: Sequence[str] = ()) -> None:
        super().__init__(message if not tied else f"{message}: {', '.join(tied)}")
        self.tied = list(tied)


class CompletionError(Exception):
    """Raised when bounded completion exceeds its rule budget or meets an unorientable obstruction."""


class OrderKind(str, Enum):
    WLL = "wll"
    AFFINE = "affine"


@dataclass(frozen=True, slots=True)
class ReductionOrder:
    """Monomial order used to orient relations.

    ``WLL`` compares weight, then length, then precedence-lex.  ``AFFINE``
    interprets each generator as ``n -> a*n + b`` (a >= 1) and a word as the
    composition of its letters; a word is larger when its interpretation is
    pointwise at least as large on n >= 1 and differs, with equal
    interpretations falling back to WLL.
    """

    kind: OrderKind
    gens: GenSet
    interpretation: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def wll(cls, gens: GenSet) -> "ReductionOrder":
        return cls(OrderKind.WLL, gens)

    @classmethod
    def affine(cls, gens: GenSet, maps: Mapping[str, Tuple[int, int]]) -> "ReductionOrder":
        table = []
        for name in gens.names:
            a, b = maps.get(name, (1, 1))
            if a < 1 or b < 0 or (a == 1 and b == 0):
                raise OrientationError(f"interpretation of '{name}' must be n -> a*n + b with a >= 1, not the identity")
            table.append((int(a), int(b)))
        return cls(OrderKind.AFFINE, gens, tuple(table))

    def interpret(self, word: Word) -> Tuple[int, int]:
        a, b = 1, 0
        for letter in reversed(word):
            la, lb = self.interpretation[letter]
            a, b = la * a, la * b + lb
        return a, b

    def compare(self, u: Word, v: Word) -> Optional[int]:
        """1 if u > v, -1 if u < v, 0 if equal, None if incomparable."""

        if u == v:
            return 0
        if self.kind is OrderKind.AFFINE:
            fu, fv = self.interpret(u), self.interpret(v)
            if fu != fv:
                at_one_u, at_one_v = fu[0] + fu[1], fv[0] + fv[1]
                if fu[0] >= fv[0] and at_one_u >= at_one_v:
                    return 1
                if fv[0] >= fu[0] and at_one_v >= at_one_u:
                    return -1
                return None
        ku, kv = self.gens.key(u), self.gens.key(v)
        return 1 if ku > kv else -1

    def witness(self, lhs: Word, rhs_words: Sequence[Word]) -> str:
        if self.kind is OrderKind.WLL:
            return f"wll {self.gens.key(lhs)} > " + ", ".join(str(self.gens.key(w)) for w in rhs_words)
        return f"affine {self.interpret(lhs)} > " + ", ".join(str(self.interpret(w)) for w in rhs_words)

    def describe(self) -> Dict[str, object]:
        payload: Dict[str, object] = {"kind": self.kind.value}
        if self.kind is OrderKind.AFFINE:
            payload["interpretation"] = {
                name: list(pair) for name, pair in zip(self.gens.names, self.interpretation)
            }
        return payload


@dataclass(frozen=True, slots=True)
class Rule:
    lhs: Word
    rhs: NcPoly
    witness: str = ""

    def format(self) -> str:
        return f"{format_word(self.rhs.gens, self.lhs)} -> {self.rhs}"


def leading_word(poly: NcPoly, order: ReductionOrder) -> Word:
    """The monomial strictly above every other monomial of ``poly``."""

    words = list(poly.terms)
    if not words:
        raise OrientationError("cannot orient the zero relation")
    candidate = words[0]
    for word in words[1:]:
        if order.compare(word, candidate) == 1:
            candidate = word
    rivals = [w for w in words if w != candidate and order.compare(candidate, w) != 1]
    if rivals:
        tied = [format_word(poly.gens, w) for w in [candidate, *rivals]]
        raise OrientationError(f"relation {poly} has no strict leading monomial", tied)
    return candidate


def orient_one(poly: NcPoly, order: ReductionOrder) -> Rule:
    lhs = leading_word(poly, order)
    ctx = poly.ctx
    factor = ctx.neg(ctx.inv(poly.terms[lhs]))
    rest = {w: ctx.mul(c, factor) for w, c in poly.terms.items() if w != lhs}
    rhs = NcPoly(ctx, poly.gens, rest)
    return Rule(lhs, rhs, order.witness(lhs, list(rest)))


class RewriteSystem:
    """Ordered list of rules; earlier rules win when several apply."""

    def __init__(self, ctx: FieldCtx, gens: GenSet, order: ReductionOrder, rules: Sequence[Rule]) -> None:
        if len(gens.names) > 255:
            raise OrientationError("at most 255 generators are supported")
        self.ctx = ctx
        self.gens = gens
        self.order = order
        self.rules: Tuple[Rule, ...] = tuple(rules)
        self._patterns = [bytes(rule.lhs) for rule in self.rules]
        self._cache: Dict[Word, Dict[Word, int]] = {}

    def __len__(self) -> int:
        return len(self.rules)

    def with_rules(self, rules: Sequence[Rule]) -> "RewriteSystem":
        return RewriteSystem(self.ctx, self.gens, self.order, rules)

    # -- single steps -------------------------------------------------------------
    def find(self, word: Word) -> Optional[Tuple[int, int]]:
        """(rule index, position) of the leftmost match of the earliest matching rule."""

        if not word:
            return None
        data = bytes(word)
        for index, pattern in enumerate(self._patterns):
            position = data.find(pattern)
            if position >= 0:
                return index, position
        return None

    def is_irreducible(self, word: Word) -> bool:
        return self.find(word) is None

    def _rewrite(self, word: Word, index: int, position: int) -> Dict[Word, int]:
        rule = self.rules[index]
        head, tail = word[:position], word[position + len(rule.lhs) :]
        return {head + w + tail: c for w, c in rule.rhs.terms.items()}

    # -- normal forms -------------------------------------------------------------
    def word_normal_form(self, word: Word) -> Dict[Word, int]:
        cache = self._cache
        cached = cache.get(word)
        if cached is not None:
            return cached
        ctx = self.ctx
        stack = [word]
        while stack:
            current = stack[-1]
            if current in cache:
                stack.pop()
                continue
            site = self.find(current)
            if site is None:
                cache[current] = {current: 1}
                stack.pop()
                continue
            children = self._rewrite(current, *site)
            missing = [child for child in children if child not in cache]
            if missing:
                stack.extend(missing)
                continue
            total: Dict[Word, int] = {}
            for child, coeff in children.items():
                for w, c in cache[child].items():
                    value = ctx.mul(coeff, c)
                    previous = total.get(w)
                    total[w] = value if previous is None else ctx.add(previous, value)
            cache[current] = {w: c for w, c in total.items() if c}
            stack.pop()
        return cache[word]

    def reduce(self, poly: Union[NcPoly, TensorPoly]) -> Union[NcPoly, TensorPoly]:
        """Normal form; tensors are reduced factor by factor."""

        ctx = self.ctx
        add, mul = ctx.add, ctx.mul
        if isinstance(poly, TensorPoly):
            out: Dict = {}
            for key, coeff in poly.terms.items():
                partial: Dict[Tuple[Word, ...], int] = {(): coeff}
                for word in key:
                    forms = self.word_normal_form(word)
                    partial = {
                        prefix + (w,): mul(a, c) for prefix, a in partial.items() for w, c in forms.items()
                    }
                for k, c in partial.items():
                    previous = out.get(k)
                    out[k] = c if previous is None else add(previous, c)
            return poly.like({k: c for k, c in out.items() if c})
        flat: Dict[Word, int] = {}
        for word, coeff in poly.terms.items():
            for w, c in self.word_normal_form(word).items():
                value = mul(coeff, c)
                previous = flat.get(w)
                flat[w] = value if previous is None else add(previous, value)
        return poly.like({w: c for w, c in flat.items() if c})

    def reduce_randomized(self, poly: NcPoly, rng: random.Random) -> NcPoly:
        """Reduce with a random rule and a random occurrence at every step."""

        ctx = self.ctx
        terms = dict(poly.terms)
        while True:
            reducible = sorted(w for w in terms if self.find(w) is not None)
            if not reducible:
                return poly.like(terms)
            word = rng.choice(reducible)
            data = bytes(word)
            sites = []
            for index, pattern in enumerate(self._patterns):
                start = data.find(pattern)
                while start >= 0:
                    sites.append((index, start))
                    start = data.find(pattern, start + 1)
            index, position = rng.choice(sites)
            coeff = terms.pop(word)
            for w, c in self._rewrite(word, index, position).items():
                value = ctx.mul(coeff, c)
                total = ctx.add(terms.get(w, 0), value)
                if total:
                    terms[w] = total
                else:
                    terms.pop(w, None)

    def describe(self) -> Dict[str, object]:
        return {
            "order": self.order.describe(),
            "rules": [rule.format() for rule in self.rules],
        }


def orient(
    relations: Sequence[NcPoly],
    gens: GenSet,
    order: Optional[ReductionOrder] = None,
    ctx: Optional[FieldCtx] = None,
) -> RewriteSystem:
    """Orient relations into rules and inter-reduce the right-hand sides."""

    if not relations and ctx is None:
        raise OrientationError("an empty relation list needs an explicit field")
    ctx = ctx or relations[0].ctx
    order = order or ReductionOrder.wll(gens)
    raw = [orient_one(relation, order) for relation in relations]
    draft = RewriteSystem(ctx, gens, order, raw)
    rules = [Rule(rule.lhs, draft.reduce(rule.rhs), rule.witness) for rule in raw]  # type: ignore[arg-type]
    logger.debug("oriented {} rules under {}", len(rules), order.kind.value)
    return RewriteSystem(ctx, gens, order, rules)


@dataclass(slots=True)
class Ambiguity:
    kind: str
    word: Word
    rules: Tuple[int, int]
    positions: Tuple[int, int]
    resolvable: Optional[bool] = None
    obstruction: Optional[NcPoly] = None

    def to_dict(self, gens: GenSet) -> Dict[str, object]:
        return {
            "kind": self.kind,
            "word": format_word(gens, self.word),
            "rules": list(self.rules),
            "resolvable": self.resolvable,
            "obstruction": None if self.obstruction is None else str(self.obstruction),
        }


def ambiguities(sys: RewriteSystem) -> List[Ambiguity]:
    """Every minimal overlap (self-overlaps included) and every inclusion."""

    found: List[Ambiguity] = []
    lhss = [rule.lhs for rule in sys.rules]
    for i, first in enumerate(lhss):
        for j, second in enumerate(lhss):
            for k in range(1, min(len(first), len(second))):
                if first[-k:] == second[:k]:
                    found.append(Ambiguity("overlap", first + second[k:], (i, j), (0, len(first) - k)))
            if i != j and len(second) <= len(first):
                data, pattern = bytes(first), bytes(second)
                start = data.find(pattern)
                while start >= 0:
                    if not (first == second and j < i):
                        found.append(Ambiguity("inclusion", first, (i, j), (0, start)))
                    start = data.find(pattern, start + 1)
    return found


@dataclass(slots=True)
class ConfluenceReport:
    ambiguities: List[Ambiguity] = field(default_factory=list)

    @property
    def confluent(self) -> bool:
        return all(item.resolvable for item in self.ambiguities)

    @property
    def failures(self) -> List[Ambiguity]:
        return [item for item in self.ambiguities if not item.resolvable]

    def to_dict(self, gens: GenSet) -> Dict[str, object]:
        return {
            "confluent": self.confluent,
            "checked": len(self.ambiguities),
            "unresolved": [item.to_dict(gens) for item in self.failures],
        }


def _branch(sys: RewriteSystem, word: Word, rule_index: int, position: int) -> NcPoly:
    terms = sys._rewrite(word, rule_index, position)
    return NcPoly(sys.ctx, sys.gens, {w: c for w, c in terms.items() if c})


def check_confluence(sys: RewriteSystem) -> ConfluenceReport:
    report = ConfluenceReport()
    for item in ambiguities(sys):
        left = sys.reduce(_branch(sys, item.word, item.rules[0], item.positions[0]))
        right = sys.reduce(_branch(sys, item.word, item.rules[1], item.positions[1]))
        difference = left - right
        item.resolvable = difference.is_zero()
        item.obstruction = None if item.resolvable else difference
        report.ambiguities.append(item)
    if not report.confluent:
        logger.debug("{} of {} ambiguities unresolved", len(report.failures), len(report.ambiguities))
    return report


@dataclass(slots=True)
class NormalBasis:
    words: List[Word]
    count: int
    infinite: bool = False
    cycle: Optional[Word] = None

    def format(self, gens: GenSet) -> List[str]:
        return [format_word(gens, word) for word in self.words]


def normal_words(sys: RewriteSystem, limit: Optional[int] = None) -> NormalBasis:
    automaton = FactorAutomaton(len(sys.gens.names), [rule.lhs for rule in sys.rules])
    cycle = automaton.find_cycle()
    if cycle is not None:
        return NormalBasis([], 0, True, cycle)
    words = automaton.words(limit)
    words.sort(key=sys.gens.key)
    return NormalBasis(words, len(words))


@dataclass(slots=True)
class CompletionResult:
    system: RewriteSystem
    added: List[Rule]
    collapsed: bool = False

    @property
    def dimension(self) -> Optional[int]:
        if self.collapsed:
            return 0
        basis = normal_words(self.system)
        return None if basis.infinite else basis.count


def complete(sys: RewriteSystem, max_rules: int = 64) -> CompletionResult:
    """Bounded Knuth-Bendix completion.

    Each unresolved obstruction is oriented and admitted; rules whose left side
    contains the new one are re-oriented from their relation.  A nonzero
    constant obstruction collapses the algebra to zero.
    """

    rules = list(sys.rules)
    added: List[Rule] = []
    current = sys
    while True:
        report = check_confluence(current)
        if report.confluent:
            return CompletionResult(current, added)
        obstruction = report.failures[0].obstruction
        assert obstruction is not None
        if obstruction.is_constant():
            logger.debug("completion reached a nonzero constant; algebra collapses")
            return CompletionResult(current, added, collapsed=True)
        if len(added) >= max_rules:
            raise CompletionError(f"completion exceeded {max_rules} added rules")
        try:
            new_rule = orient_one(obstruction, current.order)
        except OrientationError as exc:
            raise CompletionError(f"obstruction {obstruction} cannot be oriented") from exc
        added.append(new_rule)
        logger.debug("completion admits {}", new_rule.format())
        pending: List[NcPoly] = []
        kept: List[Rule] = []
        needle = bytes(new_rule.lhs)
        for rule in rules:
            if bytes(rule.lhs).find(needle) >= 0:
                pending.append(NcPoly.monomial(sys.ctx, sys.gens, rule.lhs) - rule.rhs)
            else:
                kept.append(rule)
        kept.append(new_rule)
        staged = current.with_rules(kept)
        for relation in pending:
            residue = staged.reduce(relation)
            if residue.is_zero():
                continue
            if residue.is_constant():
                return CompletionResult(staged, added, collapsed=True)
            try:
                kept.append(orient_one(residue, current.order))  # type: ignore[arg-type]
            except OrientationError as exc:
                raise CompletionError(f"residue {residue} cannot be oriented") from exc
            staged = current.with_rules(kept)
        rules = [Rule(rule.lhs, staged.reduce(rule.rhs), rule.witness) for rule in kept]  # type: ignore[arg-type]
        current = current.with_rules(rules)


__all__ = [
    "OrientationError",
    "CompletionError",
    "OrderKind",
    "ReductionOrder",
    "Rule",
    "leading_word",
    "orient_one",
    "RewriteSystem",
    "orient",
    "Ambiguity",
    "ambiguities",
    "ConfluenceReport",
    "check_confluence",
    "NormalBasis",
    "normal_words",
    "CompletionResult",
    "complete",
]
