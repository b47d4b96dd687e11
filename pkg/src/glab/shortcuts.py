"""Constructors for the short words with outsized values: the recursive
commutator-style words over {a, t} whose values tower, their indexed
preimages, and the binary-expansion shortcuts that reach s^k and
a^(2^(k+1)-2) in logarithmic length."""

from .words import Alphabet, IndexedWord, Word

__all__ = [
    "GP_ALPHABET",
    "H_ALPHABET",
    "build_wk",
    "build_wk_prime",
    "shortcut_sk",
    "shortcut_g1inv_g2",
    "sk_fast_check",
]

GP_ALPHABET = Alphabet(("a", "t"))
H_ALPHABET = Alphabet(("a", "t", "s", "x"))

_A = GP_ALPHABET.index("a")
_T = GP_ALPHABET.index("t")


def _join(*parts: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Concatenate reduced syllable lists, merging at the seams.  Callers
    guarantee the seams never cancel outright, so one merge per seam."""
    out: list[tuple[int, int]] = []
    for part in parts:
        if out and out[-1][0] == part[0][0]:
            gen, exp = part[0][0], out[-1][1] + part[0][1]
            out.pop()
            if exp:
                out.append((gen, exp))
            out.extend(part[1:])
        else:
            out.extend(part)
    return out


def build_wk(k: int) -> Word:
    """w_0 = a and w_{i+1} = t^-1 w_i^-1 t a t^-1 w_i t, freely reduced.

    Only t-syllables of equal sign meet at the seams, so the length obeys
    l(w_k) = 3*2^(k+1) - 5 exactly.  The inverse rides along (same frame
    around a^-1) to keep each doubling step at list-extend speed.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    syl: list[tuple[int, int]] = [(_A, 1)]
    inv: list[tuple[int, int]] = [(_A, -1)]
    for _ in range(k):
        syl, inv = (
            _join([(_T, -1)], inv, [(_T, 1), (_A, 1), (_T, -1)], syl, [(_T, 1)]),
            _join([(_T, -1)], inv, [(_T, 1), (_A, -1), (_T, -1)], syl, [(_T, 1)]),
        )
    return Word(GP_ALPHABET, tuple(syl))


def build_wk_prime(k: int) -> IndexedWord:
    """Indexed preimage of w_k: start from a[0] and, at step i, conjugate
    every a[i-1] letter by a[i].  Length is 2^(k+1) - 1."""
    if k < 0:
        raise ValueError("k must be >= 0")
    syl: list[tuple[int, int]] = [(0, 1)]
    for i in range(1, k + 1):
        out: list[tuple[int, int]] = []
        for idx, e in syl:
            if idx == i - 1:
                out.extend(((i, -1), (idx, e), (i, 1)))
            else:
                out.append((idx, e))
        syl = out
    return IndexedWord.make(syl)


_HA = H_ALPHABET.index("a")
_S = H_ALPHABET.index("s")
_X = H_ALPHABET.index("x")


def shortcut_sk(k: int) -> Word:
    """Word over {s, x} evaluating to s^k: with k = k_m ... k_0 in binary,
    (prod_{i=0}^{m-1} s^(k_i) x^-1) s x^m.  Each x^-1 doubles everything to
    its left, so the word spells out Horner's rule; its length is
    popcount(k) + 2*floor(log2 k) <= 3*floor(log2 k) + 1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    m = k.bit_length() - 1
    syl: list[tuple[int, int]] = []
    for i in range(m):
        if (k >> i) & 1:
            syl.append((_S, 1))
        syl.append((_X, -1))
    syl.append((_S, 1))
    if m:
        syl.append((_X, m))
    return Word.make(H_ALPHABET, syl).free_reduce()


def shortcut_g1inv_g2(k: int) -> Word:
    """Word evaluating to a^(2^(k+1)-2), spelled s^-(k+1) a s^(k+1) a^-2
    with both s-powers expanded through shortcut_sk.  Length is at most
    6*floor(log2(k+1)) + 5."""
    if k < 1:
        raise ValueError("k must be >= 1")
    sk = shortcut_sk(k + 1)
    a = Word.make(H_ALPHABET, [(_HA, 1)])
    a_minus2 = Word.make(H_ALPHABET, [(_HA, -2)])
    return (sk.inverse() * a * sk * a_minus2).free_reduce()


def sk_fast_check(k_max: int) -> int | None:
    """Replay shortcut_sk(k)'s letters for every k = 1..k_max through the
    affine model of <s, x | x^-1 s x = s^2>: state (q, e) with s^b at climb
    level e adding b*2^-e to q.  The level never goes above 0, so the whole
    sweep is plain integer shifts.  Returns the first k whose word does not
    land on s^k, or None when all pass."""
    for k in range(1, k_max + 1):
        m = k.bit_length() - 1
        q = 0
        e = 0
        kk = k
        for _ in range(m):
            if kk & 1:
                q += 1 << -e
            kk >>= 1
            e -= 1
        q += 1 << -e
        e += m
        if q != k or e != 0:
            return k
    return None
