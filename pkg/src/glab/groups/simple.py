"""Free abelian and free groups, mostly as reference models for the
Cayley-ball and growth tooling."""

from __future__ import annotations

from ..words import Alphabet, Word
from .base import Element, GroupModel

__all__ = ["ZdGroup", "FreeGroup"]


class ZdGroup(GroupModel):
    """Z^d with the standard basis. Elements are int tuples."""

    def __init__(self, d: int, group_id: str | None = None):
        if d < 1:
            raise ValueError("d must be >= 1")
        self.d = d
        self.alphabet = Alphabet(tuple(f"g{i + 1}" for i in range(d)))
        self.group_id = group_id if group_id is not None else f"zd:{d}"

    def identity(self) -> Element:
        return (0,) * self.d

    def generator(self, name: str) -> Element:
        return self.generator_pow(name, 1)

    def generator_pow(self, name: str, e: int) -> Element:
        i = self.alphabet.index(name)
        return tuple(e if j == i else 0 for j in range(self.d))

    def multiply(self, g: Element, h: Element) -> Element:
        return tuple(a + b for a, b in zip(g, h))

    def invert(self, g: Element) -> Element:
        return tuple(-a for a in g)

    def canonical_key(self, g: Element) -> str:
        return ",".join(str(a) for a in g)

    def a_power(self, g: Element) -> int | None:
        if any(g[1:]):
            return None
        return g[0]

    def element_bits(self, g: Element) -> int:
        return max(a.bit_length() for a in g) if self.d else 0

    def relators(self) -> tuple[Word, ...]:
        out = []
        names = self.alphabet.names
        for i in range(self.d):
            for j in range(i + 1, self.d):
                out.append(
                    Word.parse(
                        f"{names[i]} {names[j]} {names[i]}^-1 {names[j]}^-1",
                        self.alphabet,
                    )
                )
        return tuple(out)


class FreeGroup(GroupModel):
    """Free group of rank n. Elements are reduced syllable tuples,
    ((gen_index, exp), ...), the same shape Word uses."""

    def __init__(self, n: int, group_id: str | None = None):
        if n < 1:
            raise ValueError("rank must be >= 1")
        self.n = n
        self.alphabet = Alphabet(tuple(f"f{i + 1}" for i in range(n)))
        self.group_id = group_id if group_id is not None else f"free:{n}"

    def identity(self) -> Element:
        return ()

    def generator(self, name: str) -> Element:
        return self.generator_pow(name, 1)

    def generator_pow(self, name: str, e: int) -> Element:
        if e == 0:
            return ()
        return ((self.alphabet.index(name), e),)

    def multiply(self, g: Element, h: Element) -> Element:
        out = list(g)
        for gen, exp in h:
            if out and out[-1][0] == gen:
                merged = out[-1][1] + exp
                out.pop()
                if merged:
                    out.append((gen, merged))
            else:
                out.append((gen, exp))
        return tuple(out)

    def invert(self, g: Element) -> Element:
        return tuple((gen, -exp) for gen, exp in reversed(g))

    def canonical_key(self, g: Element) -> str:
        if not g:
            return "1"
        names = self.alphabet.names
        return ".".join(
            names[gen] if exp == 1 else f"{names[gen]}^{exp}" for gen, exp in g
        )

    def a_power(self, g: Element) -> int | None:
        if not g:
            return 0
        if len(g) == 1 and g[0][0] == 0:
            return g[0][1]
        return None

    def element_bits(self, g: Element) -> int:
        return max((exp.bit_length() for _, exp in g), default=0)

    def word_length(self, g: Element) -> int:
        return sum(abs(exp) for _, exp in g)
