"""Forbidden-factor automaton: the regular language of words avoiding a pattern set."""

from __future__ import annotations

from collections import deque
from typing import Dict, List, Optional, Sequence

from .freealg import Word


class FactorAutomaton:
    """Aho-Corasick automaton over ``range(alphabet)`` rejecting any word with a pattern factor.

    State 0 is the empty prefix. ``goto[s][a]`` is total; ``dead[s]`` marks states
    whose prefix ends with a forbidden factor.
    """

    def __init__(self, alphabet: int, patterns: Sequence[Word]) -> None:
        self.alphabet = alphabet
        children: List[Dict[int, int]] = [{}]
        terminal = [False]
        for pattern in patterns:
            state = 0
            for letter in pattern:
                nxt = children[state].get(letter)
                if nxt is None:
                    nxt = len(children)
                    children[state][letter] = nxt
                    children.append({})
                    terminal.append(False)
                state = nxt
            terminal[state] = True

        size = len(children)
        fail = [0] * size
        goto = [[0] * alphabet for _ in range(size)]
        dead = list(terminal)
        queue: deque[int] = deque()
        for letter in range(alphabet):
            nxt = children[0].get(letter)
            if nxt is None:
                goto[0][letter] = 0
            else:
                goto[0][letter] = nxt
                queue.append(nxt)
        while queue:
            state = queue.popleft()
            dead[state] = dead[state] or dead[fail[state]]
            for letter in range(alphabet):
                nxt = children[state].get(letter)
                if nxt is None:
                    goto[state][letter] = goto[fail[state]][letter]
                else:
                    fail[nxt] = goto[fail[state]][letter]
                    goto[state][letter] = nxt
                    queue.append(nxt)
        self.goto = goto
        self.dead = dead

    @property
    def size(self) -> int:
        return len(self.goto)

    def accepts(self, word: Word) -> bool:
        state = 0
        if self.dead[state]:
            return False
        for letter in word:
            state = self.goto[state][letter]
            if self.dead[state]:
                return False
        return True

    def find_cycle(self) -> Optional[Word]:
        """A word ``u v`` such that every ``u v^n`` avoids all patterns, or ``None``."""

        if self.dead[0]:
            return None
        white, grey, black = 0, 1, 2
        colour = [white] * self.size
        colour[0] = grey
        path_states = [0]
        path_letters: List[int] = []
        iterators = [iter(range(self.alphabet))]
        while iterators:
            state = path_states[-1]
            letter = next(iterators[-1], None)
            if letter is None:
                colour[state] = black
                iterators.pop()
                path_states.pop()
                if path_letters:
                    path_letters.pop()
                continue
            nxt = self.goto[state][letter]
            if self.dead[nxt]:
                continue
            if colour[nxt] == grey:
                return tuple(path_letters) + (letter,)
            if colour[nxt] == white:
                colour[nxt] = grey
                path_states.append(nxt)
                path_letters.append(letter)
                iterators.append(iter(range(self.alphabet)))
        return None

    def words(self, limit: Optional[int] = None) -> List[Word]:
        """All accepted words of a finite language, shortest first.

        Raises ``OverflowError`` when more than ``limit`` words exist.
        """

        if self.dead[0]:
            return []
        found: List[Word] = [()]
        frontier: List[tuple[int, Word]] = [(0, ())]
        while frontier:
            grown: List[tuple[int, Word]] = []
            for state, word in frontier:
                for letter in range(self.alphabet):
                    nxt = self.goto[state][letter]
                    if self.dead[nxt]:
                        continue
                    extended = word + (letter,)
                    grown.append((nxt, extended))
                    found.append(extended)
            if limit is not None and len(found) > limit:
                raise OverflowError(f"more than {limit} irreducible words")
            frontier = grown
        return found

    def count(self) -> int:
        """Number of accepted words; call only when :meth:`find_cycle` is ``None``."""

        if self.dead[0]:
            return 0
        memo: Dict[int, int] = {}
        order: List[int] = []
        seen = {0}
        stack = [0]
        while stack:
            state = stack.pop()
            order.append(state)
            for letter in range(self.alphabet):
                nxt = self.goto[state][letter]
                if not self.dead[nxt] and nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        # acyclic: settle states once all successors are known
        pending = list(order)
        while pending:
            remaining = []
            for state in pending:
                successors = [
                    self.goto[state][letter]
                    for letter in range(self.alphabet)
                    if not self.dead[self.goto[state][letter]]
                ]
                if all(s in memo for s in successors):
                    memo[state] = 1 + sum(memo[s] for s in successors)
                else:
                    remaining.append(state)
            pending = remaining
        return memo[0]


__all__ = ["FactorAutomaton"]
