"""Free products of two groups amalgamated over a shared cyclic subgroup.

Both factors must contain the shared subgroup K = <shared generator>.
Elements are pairs (m, seq): an integer K-exponent followed by a tuple of
(tag, rep) factors with tags alternating between 1 and 2, every rep a
canonical representative of its coset K*rep and never in K itself.  With
fixed transversals this normal form is unique, so equality is structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..words import Alphabet, Word
from .base import Element, GroupModel

__all__ = ["AmalgamEdge", "AmalgamGroup"]


@dataclass(frozen=True)
class AmalgamEdge:
    """Coset oracles for K inside each factor.

    power_of_i returns m when the argument equals shared^m in factor i,
    else None.  coset_i(g) returns (m, rep) with g = shared^m * rep, the
    same rep for the whole coset K*g and rep the identity iff g is in K.
    """

    power_of_1: Callable[[Element], int | None]
    power_of_2: Callable[[Element], int | None]
    from_exp_1: Callable[[int], Element]
    from_exp_2: Callable[[int], Element]
    coset_1: Callable[[Element], tuple[int, Element]]
    coset_2: Callable[[Element], tuple[int, Element]]


class _Machine:
    """Streaming normal-form builder: consume K-exponents and factor
    elements, keeping tags alternating and reps out of K; canonicalize
    cosets on finish()."""

    __slots__ = ("group", "m", "seq", "dirty_from")

    def __init__(self, group: "AmalgamGroup"):
        self.group = group
        self.m = 0
        self.seq: list[list] = []  # [tag, value], value never in K
        self.dirty_from = 0

    def consume_k(self, md: int) -> None:
        if md == 0:
            return
        if self.seq:
            tag, value = self.seq[-1]
            factor = self.group.factor(tag)
            self.seq[-1][1] = factor.multiply(value, self.group.from_exp(tag, md))
            self.dirty_from = min(self.dirty_from, len(self.seq) - 1)
        else:
            self.m += md

    def consume_factor(self, tag: int, f: Element) -> None:
        mf = self.group.power_of(tag, f)
        if mf is not None:
            self.consume_k(mf)
            return
        if self.seq and self.seq[-1][0] == tag:
            factor = self.group.factor(tag)
            merged = factor.multiply(self.seq[-1][1], f)
            mm = self.group.power_of(tag, merged)
            if mm is not None:
                self.seq.pop()
                self.dirty_from = min(self.dirty_from, len(self.seq))
                self.consume_k(mm)
            else:
                self.seq[-1][1] = merged
                self.dirty_from = min(self.dirty_from, len(self.seq) - 1)
        else:
            self.seq.append([tag, f])

    def feed_element(self, g: Element) -> None:
        m, seq = g
        self.consume_k(m)
        for tag, rep in seq:
            self.consume_factor(tag, rep)

    def feed_inverse(self, g: Element) -> None:
        m, seq = g
        for tag, rep in reversed(seq):
            self.consume_factor(tag, self.group.factor(tag).invert(rep))
        self.consume_k(-m)

    def finish(self) -> Element:
        # Rewrite values to coset representatives right to left.  The
        # K-exponent peeled off entry i multiplies into entry i-1 without
        # changing that entry's coset, so structure is stable and the pass
        # can stop once it reaches untouched entries with nothing to push.
        group = self.group
        carry = 0
        for i in range(len(self.seq) - 1, -1, -1):
            if carry == 0 and i < self.dirty_from:
                break
            tag, value = self.seq[i]
            if carry:
                value = group.factor(tag).multiply(value, group.from_exp(tag, carry))
            carry, rep = group.coset(tag, value)
            self.seq[i][1] = rep
        return (self.m + carry, tuple((tag, rep) for tag, rep in self.seq))


class AmalgamGroup(GroupModel):
    def __init__(
        self,
        factor1: GroupModel,
        factor2: GroupModel,
        edge: AmalgamEdge,
        shared: str,
        group_id: str,
    ):
        factor1.alphabet.index(shared)
        factor2.alphabet.index(shared)
        self.factor1 = factor1
        self.factor2 = factor2
        self.edge = edge
        self.shared = shared
        names = (shared,)
        names += tuple(n for n in factor1.alphabet.names if n != shared)
        names += tuple(n for n in factor2.alphabet.names if n != shared)
        self.alphabet = Alphabet(names)
        self.group_id = group_id
        self._factor1_names = set(factor1.alphabet.names) - {shared}

    def factor(self, tag: int) -> GroupModel:
        return self.factor1 if tag == 1 else self.factor2

    def power_of(self, tag: int, g: Element) -> int | None:
        return self.edge.power_of_1(g) if tag == 1 else self.edge.power_of_2(g)

    def from_exp(self, tag: int, m: int) -> Element:
        return self.edge.from_exp_1(m) if tag == 1 else self.edge.from_exp_2(m)

    def coset(self, tag: int, g: Element) -> tuple[int, Element]:
        return self.edge.coset_1(g) if tag == 1 else self.edge.coset_2(g)

    def identity(self) -> Element:
        return (0, ())

    def generator(self, name: str) -> Element:
        return self.generator_pow(name, 1)

    def generator_pow(self, name: str, e: int) -> Element:
        if e == 0:
            return (0, ())
        if name == self.shared:
            return (e, ())
        tag = 1 if name in self._factor1_names else 2
        machine = _Machine(self)
        machine.consume_factor(tag, self.factor(tag).generator_pow(name, e))
        return machine.finish()

    def multiply(self, g: Element, h: Element) -> Element:
        machine = _Machine(self)
        machine.feed_element(g)
        machine.dirty_from = len(machine.seq)  # g is already canonical
        machine.feed_element(h)
        return machine.finish()

    def invert(self, g: Element) -> Element:
        machine = _Machine(self)
        machine.feed_inverse(g)
        return machine.finish()

    def evaluate(self, w: Word) -> Element:
        if w.alphabet.names != self.alphabet.names:
            raise ValueError(f"word over {w.alphabet.names} fed to {self.group_id}")
        machine = _Machine(self)
        for gen, exp in w.syllables:
            name = self.alphabet.names[gen]
            if name == self.shared:
                machine.consume_k(exp)
            else:
                tag = 1 if name in self._factor1_names else 2
                machine.consume_factor(tag, self.factor(tag).generator_pow(name, exp))
        return machine.finish()

    def canonical_key(self, g: Element) -> str:
        m, seq = g
        parts = [f"m={m}"]
        for tag, rep in seq:
            parts.append(f"{{{tag}:{self.factor(tag).canonical_key(rep)}}}")
        return "".join(parts)

    def a_power(self, g: Element) -> int | None:
        m, seq = g
        return m if not seq else None

    def element_bits(self, g: Element) -> int:
        m, seq = g
        bits = m.bit_length()
        for tag, rep in seq:
            bits = max(bits, self.factor(tag).element_bits(rep))
        return bits

    def tail_length(self, g: Element) -> int:
        return len(g[1])

    def relators(self) -> tuple[Word, ...]:
        return self._relators

    def set_relators(self, words: tuple[Word, ...]) -> None:
        self._relators = words

    _relators: tuple[Word, ...] = ()
