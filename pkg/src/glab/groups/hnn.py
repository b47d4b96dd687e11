"""HNN extensions with canonical normal forms.

An HnnGroup wraps a base GroupModel, a stable letter t and an edge
describing the associated cyclic subgroups A = <a_gen> and B = <b_gen>
with the isomorphism phi(a_gen^m) = b_gen^m, so that t^-1 (a_gen^m) t =
b_gen^m in the extension.

Elements are pairs (head, tail) where head is a base element and tail is a
tuple of (eps, rep) with eps in {+1, -1}.  The stored form is Britton
reduced and every rep is the canonical transversal representative of its
left coset (A*g when preceded by t^-1, B*g when preceded by t), with
subgroup parts pushed left into the head.  By the normal form theorem this
makes equality structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..words import Alphabet, Word
from .base import Element, GroupModel

__all__ = ["HnnEdge", "HnnGroup"]


@dataclass(frozen=True)
class HnnEdge:
    """Oracles for the two associated subgroups of the base group.

    power_of returns m when its argument equals the subgroup generator to
    the m-th power, else None.  coset(g) returns (m, rep) with
    g = gen^m * rep and rep the canonical representative of the left coset
    (the same rep for the whole coset, identity iff g is in the subgroup).
    """

    a_power_of: Callable[[Element], int | None]
    b_power_of: Callable[[Element], int | None]
    a_from_exp: Callable[[int], Element]
    b_from_exp: Callable[[int], Element]
    a_coset: Callable[[Element], tuple[int, Element]]
    b_coset: Callable[[Element], tuple[int, Element]]


class _Machine:
    """Streaming Britton reducer: consume base elements and stable letters,
    keeping the tail pinch-free; canonicalize cosets on finish()."""

    __slots__ = ("group", "head", "tail", "dirty_from")

    def __init__(self, group: "HnnGroup"):
        self.group = group
        self.head = group.base.identity()
        self.tail: list[list] = []  # [eps, value]
        self.dirty_from = 0

    def feed_base(self, b: Element) -> None:
        if self.tail:
            last = self.tail[-1]
            last[1] = self.group.base.multiply(last[1], b)
            self.dirty_from = min(self.dirty_from, len(self.tail) - 1)
        else:
            self.head = self.group.base.multiply(self.head, b)

    def feed_stable(self, eps: int) -> None:
        edge = self.group.edge
        if self.tail and self.tail[-1][0] == -eps:
            value = self.tail[-1][1]
            if eps > 0:
                m = edge.a_power_of(value)  # pattern t^-1 (a^m) t
                folded = edge.b_from_exp(m) if m is not None else None
            else:
                m = edge.b_power_of(value)  # pattern t (b^m) t^-1
                folded = edge.a_from_exp(m) if m is not None else None
            if folded is not None:
                self.tail.pop()
                self.dirty_from = min(self.dirty_from, len(self.tail))
                self.feed_base(folded)
                return
        self.tail.append([eps, self.group.base.identity()])

    def feed_element(self, g: Element) -> None:
        head, tail = g
        self.feed_base(head)
        for eps, rep in tail:
            self.feed_stable(eps)
            self.feed_base(rep)

    def feed_inverse(self, g: Element) -> None:
        base = self.group.base
        head, tail = g
        for eps, rep in reversed(tail):
            self.feed_base(base.invert(rep))
            self.feed_stable(-eps)
        self.feed_base(base.invert(head))

    def finish(self) -> Element:
        # Rewrite factors to coset representatives right to left, pushing
        # subgroup parts across their stable letter.  Coset membership is
        # unchanged, so no new pinches can appear.  Factors left of the
        # modified range are already canonical and are skipped once nothing
        # flows into them.
        edge = self.group.edge
        base = self.group.base
        carry: Element | None = None
        for i in range(len(self.tail) - 1, -1, -1):
            if carry is None and i < self.dirty_from:
                break
            eps, value = self.tail[i]
            if carry is not None:
                value = base.multiply(value, carry)
            if eps < 0:
                m, rep = edge.a_coset(value)
                carry = edge.b_from_exp(m) if m else None
            else:
                m, rep = edge.b_coset(value)
                carry = edge.a_from_exp(m) if m else None
            self.tail[i][1] = rep
        head = self.head if carry is None else base.multiply(self.head, carry)
        return (head, tuple((eps, rep) for eps, rep in self.tail))


class HnnGroup(GroupModel):
    def __init__(
        self,
        base: GroupModel,
        edge: HnnEdge,
        stable: str,
        expose: tuple[str, ...],
        group_id: str,
    ):
        for name in expose:
            base.alphabet.index(name)  # must exist in the base
        self.base = base
        self.edge = edge
        self.stable = stable
        self.alphabet = Alphabet(expose + (stable,))
        self.group_id = group_id
        self._base_names = set(expose)

    def identity(self) -> Element:
        return (self.base.identity(), ())

    def generator(self, name: str) -> Element:
        return self.generator_pow(name, 1)

    def generator_pow(self, name: str, e: int) -> Element:
        if name == self.stable:
            sign = 1 if e > 0 else -1
            return (self.base.identity(), ((sign, self.base.identity()),) * abs(e))
        if name in self._base_names:
            return (self.base.generator_pow(name, e), ())
        raise KeyError(f"unknown generator {name!r}")

    def multiply(self, g: Element, h: Element) -> Element:
        m = _Machine(self)
        m.feed_element(g)
        m.dirty_from = len(m.tail)  # g is already canonical
        m.feed_element(h)
        return m.finish()

    def invert(self, g: Element) -> Element:
        m = _Machine(self)
        m.feed_inverse(g)
        return m.finish()

    def evaluate(self, w: Word) -> Element:
        if w.alphabet.names != self.alphabet.names:
            raise ValueError(f"word over {w.alphabet.names} fed to {self.group_id}")
        m = _Machine(self)
        for gen, exp in w.syllables:
            name = self.alphabet.names[gen]
            if name == self.stable:
                sign = 1 if exp > 0 else -1
                for _ in range(abs(exp)):
                    m.feed_stable(sign)
            else:
                m.feed_base(self.base.generator_pow(name, exp))
        return m.finish()

    def canonical_key(self, g: Element) -> str:
        head, tail = g
        parts = [self.base.canonical_key(head)]
        for eps, rep in tail:
            parts.append(f"|{self.stable}^{'+' if eps > 0 else '-'}|")
            parts.append(self.base.canonical_key(rep))
        return "".join(parts)

    def a_power(self, g: Element) -> int | None:
        head, tail = g
        return self.base.a_power(head) if not tail else None

    def element_bits(self, g: Element) -> int:
        head, tail = g
        bits = self.base.element_bits(head)
        for _, rep in tail:
            bits = max(bits, self.base.element_bits(rep))
        return bits

    def tail_length(self, g: Element) -> int:
        return len(g[1])

    def relators(self) -> tuple[Word, ...]:
        return self._relators

    def set_relators(self, words: tuple[Word, ...]) -> None:
        self._relators = words

    _relators: tuple[Word, ...] = ()
