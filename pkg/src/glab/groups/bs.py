"""The solvable Baumslag-Solitar group BS(1,p) = <a, x | x^-1 a x = a^p>.

Elements are pairs (q, k) for a^q x^k with q in Z[1/p], stored as int
triples (num, exp, k) with q = num / p**exp canonical.  The multiplication
law under this convention is

    (q1, k1) * (q2, k2) = (q1 + q2 * p^(-k1), k1 + k2).
"""

from __future__ import annotations

from ..arith import padic_add, padic_canonical, padic_is_integer, padic_scale
from ..words import Alphabet, Word
from .base import Element, GroupModel

__all__ = ["BsGroup"]


class BsGroup(GroupModel):
    def __init__(self, p: int, names: tuple[str, str] = ("a", "x"), group_id: str | None = None):
        if p < 2:
            raise ValueError(f"p must be >= 2, got {p}")
        self.p = p
        self.alphabet = Alphabet(names)
        self.a_name, self.x_name = names
        self.group_id = group_id if group_id is not None else f"bs:{p}"

    def identity(self) -> Element:
        return (0, 0, 0)

    def generator(self, name: str) -> Element:
        if name == self.a_name:
            return (1, 0, 0)
        if name == self.x_name:
            return (0, 0, 1)
        raise KeyError(f"unknown generator {name!r}")

    def generator_pow(self, name: str, e: int) -> Element:
        if name == self.a_name:
            return (e, 0, 0)
        if name == self.x_name:
            return (0, 0, e)
        raise KeyError(f"unknown generator {name!r}")

    def multiply(self, g: Element, h: Element) -> Element:
        n1, e1, k1 = g
        n2, e2, k2 = h
        num, exp = padic_add((n1, e1), padic_scale((n2, e2), -k1, self.p), self.p)
        return (num, exp, k1 + k2)

    def invert(self, g: Element) -> Element:
        n, e, k = g
        num, exp = padic_scale((-n, e), k, self.p)
        return (num, exp, -k)

    def evaluate(self, w: Word) -> Element:
        if w.alphabet.names != self.alphabet.names:
            raise ValueError(f"word over {w.alphabet.names} fed to {self.group_id}")
        acc = (0, 0, 0)
        for gen, exp in w.syllables:
            acc = self.multiply(acc, self.generator_pow(self.alphabet.names[gen], exp))
        return acc

    def canonical_key(self, g: Element) -> str:
        n, e, k = g
        return f"q={n}/{self.p}^{e};k={k}"

    def a_power(self, g: Element) -> int | None:
        n, e, k = g
        return n if e == 0 and k == 0 else None

    def x_power(self, g: Element) -> int | None:
        n, e, k = g
        return k if n == 0 else None

    def q_tuple(self, g: Element) -> tuple[int, int]:
        return (g[0], g[1])

    def from_parts(self, num: int, exp: int, k: int) -> Element:
        n, e = padic_canonical(num, exp, self.p)
        return (n, e, k)

    def is_q_integer(self, g: Element) -> bool:
        return padic_is_integer((g[0], g[1]))

    def element_bits(self, g: Element) -> int:
        # num and p**exp are the ints that can grow (exp counts p-digits)
        n, e, k = g
        return max(n.bit_length(), e * self.p.bit_length(), k.bit_length())

    def relators(self) -> tuple[Word, ...]:
        a, x = self.a_name, self.x_name
        return (Word.parse(f"{x}^-1 {a} {x} {a}^-{self.p}", self.alphabet),)
