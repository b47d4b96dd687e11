"""The glued group h: both defining relations, the bridge identities that
move letters across the shared subgroup, and normal-form invariants."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from glab.groups import GroupModel, check_relators, group_from_id, h_group
from glab.words import Word


def word_texts(names, max_syll=10):
    syllable = st.tuples(st.sampled_from(names), st.integers(-3, 3).filter(bool))
    return st.lists(syllable, min_size=0, max_size=max_syll).map(
        lambda ls: " ".join(f"{n}^{e}" for n, e in ls)
    )


def test_alphabet_and_relators():
    G = h_group()
    assert G.alphabet.names == ("a", "t", "s", "x")
    check_relators(G)
    assert G.canonical_key(G.evaluate_text("t^-1 a t a^-2")) == "m=0"
    assert G.canonical_key(G.evaluate_text("s^-1 a s a^-2")) == "m=0"
    assert G.canonical_key(G.evaluate_text("x^-1 s x s^-2")) == "m=0"


def test_bridge_identities():
    G = h_group()
    assert G.equal(G.evaluate_text("a t"), G.evaluate_text("t a^2"))
    assert G.equal(G.evaluate_text("t^-1 a t"), G.generator_pow("a", 2))
    assert G.equal(G.evaluate_text("s^-1 a s"), G.generator_pow("a", 2))
    assert G.equal(G.evaluate_text("x^-1 s x"), G.evaluate_text("s^2"))
    assert not G.equal(G.generator("t"), G.generator("s"))


def test_mixed_word_normal_form():
    G = h_group()
    g = G.evaluate_text("t s t^-1 s^-1")
    m, seq = g
    assert m == 0
    assert [tag for tag, _ in seq] == [1, 2, 1, 2]
    assert not G.is_identity(g)


def test_at_power_identity():
    # (a t)^k = t^k a^(2^(k+1) - 2)
    G = h_group()
    at = G.evaluate_text("a t")
    for k in (1, 2, 5, 12, 40):
        rhs = G.evaluate_text(f"t^{k} a^{2 ** (k + 1) - 2}")
        assert G.equal(G.power(at, k), rhs)


def test_s_conjugation_shortcut_identity():
    # a^(2^(k+1) - 2) = s^-(k+1) a s^(k+1) a^-2
    G = h_group()
    for k in (1, 3, 10, 24):
        lhs = G.generator_pow("a", 2 ** (k + 1) - 2)
        rhs = G.evaluate_text(f"s^-{k + 1} a s^{k + 1} a^-2")
        assert G.equal(lhs, rhs)


def _assert_amalgam_canonical(G, g):
    m, seq = g
    prev_tag = None
    for tag, rep in seq:
        assert tag != prev_tag  # tags alternate
        prev_tag = tag
        assert G.power_of(tag, rep) is None  # never a bare power of a
        mi, r = G.coset(tag, rep)
        assert mi == 0 and r == rep  # rep is its own coset representative


@settings(max_examples=60)
@given(w1=word_texts(("a", "t", "s", "x")), w2=word_texts(("a", "t", "s", "x")))
def test_fuzz_h_algebra(w1, w2):
    G = h_group()
    g, h = G.evaluate_text(w1), G.evaluate_text(w2)
    assert G.canonical_key(G.multiply(g, h)) == G.canonical_key(
        G.evaluate_text(f"{w1} {w2}")
    )
    assert G.is_identity(G.multiply(g, G.invert(g)))
    assert G.invert(G.invert(g)) == g
    _assert_amalgam_canonical(G, g)
    _assert_amalgam_canonical(G, G.multiply(g, h))
    _assert_amalgam_canonical(G, G.invert(g))
    word = Word.parse(w1, G.alphabet)
    assert GroupModel.evaluate(G, word) == G.evaluate(word)


def test_a_power_and_identity():
    G = h_group()
    assert G.a_power(G.generator_pow("a", -7)) == -7
    assert G.a_power(G.evaluate_text("t")) is None
    assert G.is_identity(G.evaluate_text("s a^2 s^-1 a^-1"))


def test_registry():
    assert group_from_id("h").group_id == "h"
    assert group_from_id("gp:20").alphabet.names == ("a", "t")
    assert group_from_id("zd:3").d == 3
    assert group_from_id("free:2").n == 2
    for bad in ("bs:1", "gp:1", "zd:x", "nope", "bs:-2"):
        with pytest.raises(ValueError):
            group_from_id(bad)
