"""Words over a finite symmetric alphabet, stored as syllable sequences
(generator index, nonzero exponent), plus the index-rewriting bijection
between balanced two-letter words and indexed one-letter words.

Text form: syllables separated by single spaces, "name" or "name^e" with the
"^e" suffix omitted when e == 1, e.g. "t^-1 a t".  Indexed words render the
letter family with a bracketed subscript, e.g. "a[2] a[-2]^2".
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = [
    "Alphabet",
    "IndexedWord",
    "ParseError",
    "Word",
    "contains_index_at_least",
    "psi",
    "psi_inverse",
]


class ParseError(ValueError):
    pass


_NAME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")
_TOKEN_RE = re.compile(r"^([A-Za-z][A-Za-z0-9_]*)(?:\^([+-]?\d+))?$")
_INDEXED_TOKEN_RE = re.compile(r"^([A-Za-z][A-Za-z0-9_]*)\[(-?\d+)\](?:\^([+-]?\d+))?$")


@dataclass(frozen=True, slots=True)
class Alphabet:
    names: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.names:
            raise ValueError("alphabet needs at least one generator")
        seen = set()
        for name in self.names:
            if not _NAME_RE.match(name):
                raise ValueError(f"invalid generator name: {name!r}")
            if name in seen:
                raise ValueError(f"duplicate generator name: {name!r}")
            seen.add(name)

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown generator {name!r} (alphabet: {', '.join(self.names)})") from None


def _check_syllables(syllables: Iterable[tuple[int, int]], size: int) -> tuple[tuple[int, int], ...]:
    out = []
    for gen, exp in syllables:
        if not 0 <= gen < size:
            raise ValueError(f"generator index {gen} out of range")
        if exp == 0:
            raise ValueError("zero exponent in syllable")
        out.append((gen, exp))
    return tuple(out)


def _reduce_syllables(syllables: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    stack: list[tuple[int, int]] = []
    for gen, exp in syllables:
        if stack and stack[-1][0] == gen:
            merged = stack[-1][1] + exp
            stack.pop()
            if merged:
                stack.append((gen, merged))
        else:
            stack.append((gen, exp))
    return tuple(stack)


@dataclass(frozen=True, slots=True)
class Word:
    alphabet: Alphabet
    syllables: tuple[tuple[int, int], ...]

    @classmethod
    def make(cls, alphabet: Alphabet, syllables: Iterable[tuple[int, int]]) -> "Word":
        return cls(alphabet, _check_syllables(syllables, len(alphabet)))

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "Word":
        return cls(alphabet, ())

    @classmethod
    def parse(cls, text: str, alphabet: Alphabet) -> "Word":
        """One syllable per token; mirrors the token sequence, unreduced."""
        syllables = []
        for token in text.split():
            m = _TOKEN_RE.match(token)
            if m is None:
                raise ParseError(f"malformed token {token!r}")
            name, exp_text = m.group(1), m.group(2)
            try:
                gen = alphabet.index(name)
            except KeyError as e:
                raise ParseError(str(e)) from None
            exp = 1 if exp_text is None else int(exp_text)
            if exp == 0:
                raise ParseError(f"zero exponent in token {token!r}")
            syllables.append((gen, exp))
        return cls(alphabet, tuple(syllables))

    def text(self) -> str:
        names = self.alphabet.names
        return " ".join(
            names[g] if e == 1 else f"{names[g]}^{e}" for g, e in self.syllables
        )

    def length(self) -> int:
        return sum(abs(e) for _, e in self.syllables)

    def exponent_sum(self, name: str) -> int:
        gen = self.alphabet.index(name)
        return sum(e for g, e in self.syllables if g == gen)

    def is_reduced(self) -> bool:
        return all(
            self.syllables[i][0] != self.syllables[i + 1][0]
            for i in range(len(self.syllables) - 1)
        )

    def free_reduce(self) -> "Word":
        return Word(self.alphabet, _reduce_syllables(self.syllables))

    def inverse(self) -> "Word":
        return Word(self.alphabet, tuple((g, -e) for g, e in reversed(self.syllables)))

    def concat(self, other: "Word") -> "Word":
        if other.alphabet.names != self.alphabet.names:
            raise ValueError("cannot concatenate words over different alphabets")
        return Word(self.alphabet, self.syllables + other.syllables)

    def __mul__(self, other: "Word") -> "Word":
        return self.concat(other)

    def letters(self) -> Iterator[tuple[int, int]]:
        """Yield (generator, +1/-1) once per letter."""
        for gen, exp in self.syllables:
            step = 1 if exp > 0 else -1
            for _ in range(abs(exp)):
                yield (gen, step)


@dataclass(frozen=True, slots=True)
class IndexedWord:
    """Word in the one-parameter letter family a[i], i in Z."""

    syllables: tuple[tuple[int, int], ...]
    letter: str = "a"

    @classmethod
    def make(cls, syllables: Iterable[tuple[int, int]], letter: str = "a") -> "IndexedWord":
        out = []
        for idx, exp in syllables:
            if exp == 0:
                raise ValueError("zero exponent in indexed syllable")
            out.append((idx, exp))
        return cls(tuple(out), letter)

    @classmethod
    def parse(cls, text: str, letter: str = "a") -> "IndexedWord":
        syllables = []
        for token in text.split():
            m = _INDEXED_TOKEN_RE.match(token)
            if m is None or m.group(1) != letter:
                raise ParseError(f"malformed indexed token {token!r}")
            exp = 1 if m.group(3) is None else int(m.group(3))
            if exp == 0:
                raise ParseError(f"zero exponent in token {token!r}")
            syllables.append((int(m.group(2)), exp))
        return cls(tuple(syllables), letter)

    def text(self) -> str:
        return " ".join(
            f"{self.letter}[{i}]" if e == 1 else f"{self.letter}[{i}]^{e}"
            for i, e in self.syllables
        )

    def length(self) -> int:
        return sum(abs(e) for _, e in self.syllables)

    def is_reduced(self) -> bool:
        return all(
            self.syllables[i][0] != self.syllables[i + 1][0]
            for i in range(len(self.syllables) - 1)
        )

    def free_reduce(self) -> "IndexedWord":
        return IndexedWord(_reduce_syllables(self.syllables), self.letter)

    def inverse(self) -> "IndexedWord":
        return IndexedWord(tuple((i, -e) for i, e in reversed(self.syllables)), self.letter)

    def max_abs_index(self) -> int | None:
        if not self.syllables:
            return None
        return max(abs(i) for i, _ in self.syllables)


def contains_index_at_least(v: IndexedWord, k: int) -> bool:
    return any(i >= k for i, _ in v.syllables)


def psi_inverse(w: Word, a: str = "a", t: str = "t") -> IndexedWord:
    """Rewrite a reduced, t-balanced word over {a, t} as an indexed word.

    Each a-letter picks up the index (#t^-1 minus #t) read before it; the
    t-letters are then dropped.  Requires exponent sum zero in t.
    """
    a_gen = w.alphabet.index(a)
    t_gen = w.alphabet.index(t)
    for g, _ in w.syllables:
        if g not in (a_gen, t_gen):
            raise ValueError(f"word uses generators outside {{{a}, {t}}}")
    if not w.is_reduced():
        raise ValueError("psi_inverse requires a freely reduced word")
    if w.exponent_sum(t) != 0:
        raise ValueError(f"word is not balanced in {t}")
    cur = 0
    out = []
    for g, e in w.syllables:
        if g == t_gen:
            cur -= e
        else:
            out.append((cur, e))
    return IndexedWord(tuple(out), a)


def psi(v: IndexedWord, alphabet: Alphabet, a: str = "a", t: str = "t") -> Word:
    """Substitute a[i] -> t^-i a t^i and freely reduce."""
    if not v.is_reduced():
        raise ValueError("psi requires a freely reduced indexed word")
    a_gen = alphabet.index(a)
    t_gen = alphabet.index(t)
    syllables: list[tuple[int, int]] = []
    for i, e in v.syllables:
        if i:
            syllables.append((t_gen, -i))
        syllables.append((a_gen, e))
        if i:
            syllables.append((t_gen, i))
    return Word(alphabet, _reduce_syllables(syllables))
