"""Syllable words, parsing, free reduction, and the index-rewriting bijection."""

import pytest
from hypothesis import given, strategies as st

from glab.words import (
    Alphabet,
    IndexedWord,
    ParseError,
    Word,
    contains_index_at_least,
    psi,
    psi_inverse,
)

AT = Alphabet(("a", "t"))
ATX = Alphabet(("a", "t", "x"))


class TestAlphabet:
    def test_basic(self):
        assert len(AT) == 2
        assert AT.index("t") == 1
        with pytest.raises(KeyError):
            AT.index("b")

    def test_rejects_bad_names(self):
        with pytest.raises(ValueError):
            Alphabet(("a", "a"))
        with pytest.raises(ValueError):
            Alphabet(("a^2",))
        with pytest.raises(ValueError):
            Alphabet(())


class TestParseEmit:
    def test_syllables_mirror_tokens(self):
        w = Word.parse("t^-1 a t", AT)
        assert w.syllables == ((1, -1), (0, 1), (1, 1))
        assert w.text() == "t^-1 a t"

    def test_unreduced_input_is_kept(self):
        w = Word.parse("a^2 a^-1", AT)
        assert w.syllables == ((0, 2), (0, -1))
        assert w.text() == "a^2 a^-1"
        assert not w.is_reduced()
        assert w.free_reduce().text() == "a"

    def test_empty(self):
        assert Word.parse("", AT).syllables == ()
        assert Word.parse("   ", AT).text() == ""
        assert Word.identity(AT).length() == 0

    def test_length_counts_letters(self):
        assert Word.parse("t^-1 a^3 t", AT).length() == 5
        assert len(list(Word.parse("t^-1 a^3 t", AT).letters())) == 5

    def test_parse_errors(self):
        for bad in ("a^0", "b", "a^", "^2", "a[1]", "a ^2", "a^1.5"):
            with pytest.raises(ParseError):
                Word.parse(bad, AT)

    def test_round_trip_normalizes_whitespace(self):
        w = Word.parse("  a^2   t^-3 ", AT)
        assert Word.parse(w.text(), AT) == w


class TestReduceInverse:
    def test_cascading_cancellation(self):
        w = Word.parse("a t t^-1 a^-1 x", ATX)
        assert w.free_reduce().text() == "x"

    def test_inverse(self):
        w = Word.parse("t^-1 a^3", AT)
        assert w.inverse().text() == "a^-3 t"
        assert w.concat(w.inverse()).free_reduce().syllables == ()

    def test_concat_checks_alphabet(self):
        with pytest.raises(ValueError):
            Word.parse("a", AT).concat(Word.parse("x", ATX))

    def test_mul_is_concat(self):
        w = Word.parse("a", AT) * Word.parse("a^2", AT)
        assert w.syllables == ((0, 1), (0, 2))
        assert w.free_reduce().text() == "a^3"


V_TEXT = "t^-2 a t^4 a^2 t^-3 a^-5 t a"
V_INDEXED = "a[2] a[-2]^2 a[1]^-5 a[0]"


class TestBijection:
    def test_worked_example_forward(self):
        w = Word.parse(V_TEXT, AT)
        assert psi_inverse(w).text() == V_INDEXED

    def test_worked_example_backward(self):
        v = IndexedWord.parse(V_INDEXED)
        assert psi(v, AT).text() == V_TEXT

    def test_round_trip_on_example(self):
        w = Word.parse(V_TEXT, AT)
        assert psi(psi_inverse(w), AT) == w

    def test_index_zero_only(self):
        w = Word.parse("a^4", AT)
        assert psi_inverse(w).text() == "a[0]^4"
        assert psi(IndexedWord.parse("a[0]^4"), AT) == w

    def test_empty_word(self):
        assert psi_inverse(Word.identity(AT)).syllables == ()
        assert psi(IndexedWord.make(()), AT).syllables == ()

    def test_rejects_unbalanced(self):
        with pytest.raises(ValueError):
            psi_inverse(Word.parse("t a", AT))

    def test_rejects_unreduced(self):
        with pytest.raises(ValueError):
            psi_inverse(Word.parse("a a t t^-1", AT))
        with pytest.raises(ValueError):
            psi(IndexedWord.make(((0, 1), (0, 1))), AT)

    def test_rejects_foreign_generators(self):
        with pytest.raises(ValueError):
            psi_inverse(Word.parse("t^-1 x t", ATX))

    def test_contains_index_at_least(self):
        v = IndexedWord.parse(V_INDEXED)
        assert contains_index_at_least(v, 2)
        assert not contains_index_at_least(v, 3)
        assert v.max_abs_index() == 2

    def test_psi_output_is_reduced(self):
        v = IndexedWord.parse("a[1] a[-1] a[1]")
        w = psi(v, AT)
        assert w.is_reduced()
        # t-runs between consecutive letters telescope
        assert w.text() == "t^-1 a t^2 a t^-2 a t"


class TestIndexedWord:
    def test_parse_round_trip(self):
        v = IndexedWord.parse(V_INDEXED)
        assert IndexedWord.parse(v.text()) == v
        assert v.length() == 9

    def test_parse_errors(self):
        for bad in ("a[0]^0", "b[1]", "a[]", "a[1.5]", "a"):
            with pytest.raises(ParseError):
                IndexedWord.parse(bad)

    def test_inverse_and_reduce(self):
        v = IndexedWord.parse("a[1]^2 a[-3]")
        assert v.inverse().text() == "a[-3]^-1 a[1]^-2"
        assert IndexedWord.make(((1, 1), (1, -1))).free_reduce().syllables == ()


indexed_syllables = st.lists(
    st.tuples(st.integers(min_value=-5, max_value=5),
              st.integers(min_value=-4, max_value=4).filter(bool)),
    max_size=12,
)


@given(indexed_syllables)
def test_round_trip_from_indexed_side(syllables):
    v = IndexedWord.make(syllables).free_reduce()
    w = psi(v, AT)
    assert w.is_reduced()
    assert w.exponent_sum("t") == 0
    assert psi_inverse(w) == v


word_letters = st.lists(st.sampled_from([(0, 1), (0, -1), (1, 1), (1, -1)]), max_size=20)


@given(word_letters)
def test_round_trip_from_word_side(letters):
    # force t-balance by mirroring every t letter with its inverse at the end
    t_sum = sum(e for g, e in letters if g == 1)
    if t_sum:
        letters = letters + [(1, -t_sum)]
    w = Word.make(AT, letters).free_reduce()
    assert psi(psi_inverse(w), AT) == w


@given(word_letters)
def test_free_reduce_idempotent_and_exponent_preserving(letters):
    w = Word.make(AT, [s for s in letters])
    r = w.free_reduce()
    assert r.free_reduce() == r
    assert r.is_reduced()
    for name in AT:
        assert r.exponent_sum(name) == w.exponent_sum(name)
