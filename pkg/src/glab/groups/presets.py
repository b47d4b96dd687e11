"""Preconfigured groups.

bs:P    <a, x | x^-1 a x = a^P>, solvable, elements Z[1/P] x Z.
gp:P    <a, t | t^-1 a t = x> over bs:P, i.e. a single defining relation
        t^-1 a^-1 t a t^-1 a t = a^P once x is eliminated.
h1      bs:2 on letters (a, t).
h2      <a, s, x | s^-1 a s = a^2, x^-1 s x = s^2>, an HNN over bs:2
        with stable letter x conjugating <s> onto <s^2>.
h       h1 and h2 glued along <a>.
zd:N    free abelian of rank N.
free:N  free of rank N.
"""

from __future__ import annotations

import re

from ..arith import padic_floor, padic_frac, padic_scale, padic_valuation
from ..words import Word
from .amalgam import AmalgamEdge, AmalgamGroup
from .base import GroupModel
from .bs import BsGroup
from .hnn import HnnEdge, HnnGroup
from .simple import FreeGroup, ZdGroup

__all__ = [
    "bs_group",
    "gp_group",
    "h1_group",
    "h2_group",
    "h_group",
    "zd_group",
    "free_group",
    "group_from_id",
]


def bs_group(p: int) -> BsGroup:
    return BsGroup(p)


def gp_group(p: int) -> HnnGroup:
    """Ascending HNN extension of bs:P identifying <a> with <x>."""
    base = BsGroup(p, ("a", "x"))

    def a_coset(g):
        n, e, k = g
        fn, fe = padic_frac((n, e), p)
        return padic_floor((n, e), p), (fn, fe, k)

    def b_coset(g):
        # representative with q of p-valuation 0: strips the p-power from
        # q instead of scaling q by p**k, which keeps numbers small
        n, e, k = g
        if n == 0:
            return k, (0, 0, 0)
        v = padic_valuation((n, e), p)
        num, exp = padic_scale((n, e), -v, p)
        return -v, (num, exp, k + v)

    edge = HnnEdge(
        a_power_of=base.a_power,
        b_power_of=base.x_power,
        a_from_exp=lambda m: (m, 0, 0),
        b_from_exp=lambda m: (0, 0, m),
        a_coset=a_coset,
        b_coset=b_coset,
    )
    G = HnnGroup(base, edge, stable="t", expose=("a",), group_id=f"gp:{p}")
    G.set_relators((Word.parse(f"t^-1 a^-1 t a t^-1 a t a^-{p}", G.alphabet),))
    return G


def h1_group() -> BsGroup:
    return BsGroup(2, ("a", "t"), group_id="h1")


def h2_group() -> HnnGroup:
    """HNN over bs:2 on letters (a, s): x^-1 s x = s^2."""
    base = BsGroup(2, ("a", "s"))

    def b_power_of(g):
        n, e, k = g
        return k // 2 if n == 0 and k % 2 == 0 else None

    def a_coset(g):
        # valuation-0 representative, as in gp_group
        n, e, k = g
        if n == 0:
            return k, (0, 0, 0)
        v = padic_valuation((n, e), 2)
        num, exp = padic_scale((n, e), -v, 2)
        return -v, (num, exp, k + v)

    def b_coset(g):
        # <s^2> moves the valuation by 2; land it in {0, 1}
        n, e, k = g
        if n == 0:
            return k // 2, (0, 0, k % 2)
        v = padic_valuation((n, e), 2)
        r = v % 2
        num, exp = padic_scale((n, e), r - v, 2)
        return (r - v) // 2, (num, exp, k + v - r)

    edge = HnnEdge(
        a_power_of=base.x_power,
        b_power_of=b_power_of,
        a_from_exp=lambda m: (0, 0, m),
        b_from_exp=lambda m: (0, 0, 2 * m),
        a_coset=a_coset,
        b_coset=b_coset,
    )
    G = HnnGroup(base, edge, stable="x", expose=("a", "s"), group_id="h2")
    G.set_relators(
        (
            Word.parse("s^-1 a s a^-2", G.alphabet),
            Word.parse("x^-1 s x s^-2", G.alphabet),
        )
    )
    return G


def h_group() -> AmalgamGroup:
    """h1 and h2 amalgamated over the shared letter a."""
    f1 = h1_group()
    f2 = h2_group()

    def coset_1(g):
        n, e, k = g
        fn, fe = padic_frac((n, e), 2)
        return padic_floor((n, e), 2), (fn, fe, k)

    def coset_2(g):
        head, tail = g
        n, e, k = head
        fn, fe = padic_frac((n, e), 2)
        return padic_floor((n, e), 2), ((fn, fe, k), tail)

    edge = AmalgamEdge(
        power_of_1=f1.a_power,
        power_of_2=f2.a_power,
        from_exp_1=lambda m: (m, 0, 0),
        from_exp_2=lambda m: ((m, 0, 0), ()),
        coset_1=coset_1,
        coset_2=coset_2,
    )
    G = AmalgamGroup(f1, f2, edge, shared="a", group_id="h")
    G.set_relators(
        (
            Word.parse("t^-1 a t a^-2", G.alphabet),
            Word.parse("s^-1 a s a^-2", G.alphabet),
            Word.parse("x^-1 s x s^-2", G.alphabet),
        )
    )
    return G


def zd_group(d: int) -> ZdGroup:
    return ZdGroup(d)


def free_group(n: int) -> FreeGroup:
    return FreeGroup(n)


_ID_RE = re.compile(r"^(zd|free|bs|gp):(\d+)$")


def group_from_id(group_id: str) -> GroupModel:
    """Instantiate a group from its id string (see module docstring)."""
    if group_id == "h":
        return h_group()
    if group_id == "h1":
        return h1_group()
    if group_id == "h2":
        return h2_group()
    m = _ID_RE.match(group_id)
    if not m:
        raise ValueError(f"unknown group id {group_id!r}")
    kind, arg = m.group(1), int(m.group(2))
    if kind == "zd":
        return zd_group(arg)
    if kind == "free":
        return free_group(arg)
    if arg < 2:
        raise ValueError(f"{kind}:{arg}: p must be >= 2")
    return bs_group(arg) if kind == "bs" else gp_group(arg)
