"""Group models with exact canonical forms.

A GroupModel owns an alphabet and operates on opaque immutable elements
(nested int tuples throughout this package).  Canonical forms make equality
structural: two elements are equal in the group iff they compare equal, iff
their canonical keys coincide.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Any, Iterator

from ..arith import DEFAULT_DIGIT_BUDGET, RepresentabilityError
from ..words import Alphabet, Word

Element = Any

# bits allowed per integer component before power() refuses to continue;
# log2(10) * digit budget, rounded up a little
def _bit_budget(digit_budget: int) -> int:
    return int(digit_budget * 3.33) + 64


class GroupModel(ABC):
    group_id: str
    alphabet: Alphabet

    @abstractmethod
    def identity(self) -> Element: ...

    @abstractmethod
    def generator(self, name: str) -> Element: ...

    @abstractmethod
    def multiply(self, g: Element, h: Element) -> Element: ...

    @abstractmethod
    def invert(self, g: Element) -> Element: ...

    @abstractmethod
    def canonical_key(self, g: Element) -> str: ...

    def equal(self, g: Element, h: Element) -> bool:
        return g == h

    def is_identity(self, g: Element) -> bool:
        return g == self.identity()

    def relators(self) -> tuple[Word, ...]:
        return ()

    def element_bits(self, g: Element) -> int:
        """Rough size of the largest integer component, for growth guards."""
        return 64

    def a_power(self, g: Element) -> int | None:
        """n with g = a^n for the distinguished first generator, if the model
        can decide that by inspection; None means not such a power (models
        that cannot decide do not override this and inherit NotImplemented
        semantics via is_power_of's fallback walk)."""
        raise NotImplementedError

    def generator_moves(self) -> list[tuple[str, int, Element]]:
        """BFS expansion order: generators in alphabet order, then inverses."""
        gens = [(name, 1, self.generator(name)) for name in self.alphabet]
        invs = [(name, -1, self.invert(g)) for name, _, g in gens]
        return gens + invs

    def evaluate(self, w: Word) -> Element:
        if w.alphabet.names != self.alphabet.names:
            raise ValueError(
                f"word over alphabet {w.alphabet.names} fed to group {self.group_id}"
            )
        acc = self.identity()
        for gen, exp in w.syllables:
            acc = self.multiply(acc, self.power(self.generator(self.alphabet.names[gen]), exp))
        return acc

    def evaluate_text(self, text: str) -> Element:
        return self.evaluate(Word.parse(text, self.alphabet))

    def power(self, g: Element, n: int, digit_budget: int = DEFAULT_DIGIT_BUDGET) -> Element:
        """g**n by repeated squaring on canonical elements."""
        if n == 0:
            return self.identity()
        if n < 0:
            g, n = self.invert(g), -n
        budget = _bit_budget(digit_budget)
        acc = None
        base = g
        while True:
            if n & 1:
                acc = base if acc is None else self.multiply(acc, base)
            n >>= 1
            if not n:
                return acc
            base = self.multiply(base, base)
            if self.element_bits(base) > budget:
                raise RepresentabilityError(
                    f"power intermediate exceeds {digit_budget} decimal digits in {self.group_id}"
                )


def is_power_of(G: GroupModel, g: Element, h: Element, bound: int) -> int | None:
    """Some i with |i| <= bound and g^i = h, else None."""
    if bound < 0:
        raise ValueError("bound must be >= 0")
    a_name = G.alphabet.names[0]
    if type(G).a_power is not GroupModel.a_power and g == G.generator(a_name):
        n = G.a_power(h)
        return n if n is not None and abs(n) <= bound else None
    fwd = bwd = G.identity()
    g_inv = G.invert(g)
    for i in range(bound + 1):
        if fwd == h:
            return i
        if bwd == h:
            return -i
        if i < bound:
            fwd = G.multiply(fwd, g)
            bwd = G.multiply(bwd, g_inv)
    return None


def check_relators(G: GroupModel) -> None:
    for r in G.relators():
        if not G.is_identity(G.evaluate(r)):
            raise AssertionError(f"relator {r.text()!r} not trivial in {G.group_id}")


def iter_ball_words(alphabet_size: int, max_len: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """All freely reduced letter sequences of length <= max_len, shortest first.

    Yields tuples of (generator index, +1/-1) letters in deterministic order:
    generators in alphabet order, then their inverses.
    """
    moves = [(g, 1) for g in range(alphabet_size)] + [(g, -1) for g in range(alphabet_size)]
    frontier: list[tuple[tuple[int, int], ...]] = [()]
    yield ()
    for _ in range(max_len):
        nxt = []
        for word in frontier:
            for move in moves:
                if word and word[-1] == (move[0], -move[1]):
                    continue
                grown = word + (move,)
                nxt.append(grown)
                yield grown
        frontier = nxt
