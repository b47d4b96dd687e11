"""Instance-level verifiers: each check pins one computational identity on
a named finite instance and reports pass/fail/skipped with the measured
values, so a full run doubles as a regression report for the whole stack."""

from __future__ import annotations

import json
import math
import os
import random
import re
import tempfile
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .boundary import antipodal_lower_bound, estimate_s, growth, t_min
from .cayley import (
    ENUMERATION_GUARD,
    Ball,
    ball,
    distance,
    exhaustive_min_word,
    load_ball,
    save_ball,
)
from .groups import FreeGroup, GroupModel, ZdGroup, iter_ball_words, presets
from .shortcuts import (
    GP_ALPHABET,
    build_wk,
    build_wk_prime,
    shortcut_g1inv_g2,
    shortcut_sk,
    sk_fast_check,
)
from .words import Word, contains_index_at_least, psi, psi_inverse

__all__ = [
    "CheckConfig",
    "CheckReport",
    "CheckResult",
    "check_ball_determinism",
    "check_estimator_sanity",
    "check_far_powers_stay_far",
    "check_growth_tables",
    "check_log_shortcut_a",
    "check_log_shortcut_s",
    "check_power_vs_word",
    "check_psi_round_trip",
    "check_ray_pair_lower_bound",
    "check_relator_invariance",
    "check_short_words_small_exponents",
    "check_stable_letter_distance",
    "check_t_min_reference",
    "check_tower_word_geodesic",
    "check_tower_word_lengths",
    "run_all",
]


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    anchor: str
    params: dict
    status: str  # pass | fail | skipped
    measured: dict
    runtime_s: float

    def line(self) -> str:
        return f"[{self.status.upper():7s}] {self.check_id} ({self.runtime_s:.2f}s)"


@dataclass(frozen=True)
class CheckReport:
    results: tuple[CheckResult, ...]
    seed: int
    config: dict

    def passed(self) -> bool:
        return all(r.status != "fail" for r in self.results)

    def human_lines(self) -> list[str]:
        lines = [r.line() for r in self.results]
        n_fail = sum(r.status == "fail" for r in self.results)
        n_skip = sum(r.status == "skipped" for r in self.results)
        lines.append(
            f"{len(self.results)} checks: "
            f"{len(self.results) - n_fail - n_skip} passed, {n_fail} failed, {n_skip} skipped"
        )
        return lines

    def to_json_dict(self) -> dict:
        return {
            "schema": "glab-check-report/v1",
            "seed": self.seed,
            "config": self.config,
            "passed": self.passed(),
            "results": [asdict(r) for r in self.results],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)


@dataclass
class CheckConfig:
    """Resource knobs for run_all; every check stays under desk scale with
    the defaults and degrades to skipped when a precondition fails."""

    p: int = 20
    seed: int = 20260814
    relator_insertions: int = 10_000
    h_radius: int = 6
    gp_small_radius: int = 7
    gp_far_radius: int = 13
    gp_far_fallback_radius: int = 11
    gp_far_cap: int = 2 * 10**7
    ray_radius: int = 7
    ray_k_max: int = 1000
    sk_k_max: int = 2**20
    sk_machine_max: int = 4096
    g1g2_k_max: int = 1000
    wk_k_max: int = 20
    small_exponent_instances: tuple[tuple[int, int], ...] = ((1, 8), (2, 6))
    psi_samples: int = 10_000
    workers: int = 1


def _result(check_id: str, anchor: str, params: dict, status: str,
            measured: dict, t0: float) -> CheckResult:
    return CheckResult(check_id, anchor, params, status, measured,
                       round(time.perf_counter() - t0, 3))


def _random_reduced_word(rng: random.Random, G: GroupModel, max_syllables: int) -> Word:
    n = rng.randint(0, max_syllables)
    syl: list[tuple[int, int]] = []
    last = -1
    for _ in range(n):
        g = rng.randrange(len(G.alphabet))
        if g == last and len(G.alphabet) > 1:
            g = (g + 1) % len(G.alphabet)
        syl.append((g, rng.choice((-3, -2, -1, 1, 2, 3))))
        last = g
    return Word.make(G.alphabet, syl)


def check_relator_invariance(
    p: int = 20,
    insertions: int = 10_000,
    seed: int = 0,
    groups: tuple[GroupModel, ...] | None = None,
) -> CheckResult:
    """Inserting a conjugated defining relation anywhere in a product must
    not move the canonical form.  `groups` is injectable so a deliberately
    broken model shows up as a fail with a counterexample."""
    t0 = time.perf_counter()
    if groups is None:
        groups = (
            presets.bs_group(p),
            presets.gp_group(p),
            presets.h2_group(),
            presets.h_group(),
        )
    rng = random.Random(seed)
    tried = 0
    failures: list[dict] = []
    for G in groups:
        relators = [G.evaluate(r) for r in G.relators()]
        if not relators:
            continue
        for _ in range(insertions):
            u = G.evaluate(_random_reduced_word(rng, G, 6))
            v = G.evaluate(_random_reduced_word(rng, G, 6))
            c = G.evaluate(_random_reduced_word(rng, G, 3))
            r = rng.choice(relators)
            if rng.random() < 0.5:
                r = G.invert(r)
            ins = G.multiply(G.multiply(c, r), G.invert(c))
            lhs = G.multiply(G.multiply(u, ins), v)
            rhs = G.multiply(u, v)
            tried += 1
            if G.canonical_key(lhs) != G.canonical_key(rhs):
                failures.append({
                    "group": G.group_id,
                    "lhs_key": G.canonical_key(lhs),
                    "rhs_key": G.canonical_key(rhs),
                })
                if len(failures) >= 3:
                    break
    return _result(
        "relator-invariance",
        "inserted defining relations never change canonical forms",
        {"p": p, "insertions_per_group": insertions, "seed": seed,
         "groups": [G.group_id for G in groups]},
        "fail" if failures else "pass",
        {"insertions_tried": tried, "failures": failures},
        t0,
    )


def check_stable_letter_distance(b: Ball | None = None, radius: int = 6) -> CheckResult:
    """In the amalgam the t-ray is undistorted: d(1, t^k) = k."""
    t0 = time.perf_counter()
    G = presets.h_group()
    if b is None:
        b = ball(G, radius, store_parents=False)
    got = {}
    bad = {}
    for k in range(1, b.radius + 1):
        res = distance(b, G, G.generator_pow("t", k))
        got[k] = res.distance
        if res.distance != k:
            bad[k] = res.distance
    return _result(
        "stable-letter-distance",
        "d(1, t^k) = k in the amalgam for every k the ball certifies",
        {"radius": b.radius},
        "fail" if bad else "pass",
        {"distances": got, "mismatches": bad},
        t0,
    )


def check_power_vs_word(k_max: int = 40) -> CheckResult:
    """(a t)^k = t^k a^(2^(k+1)-2), exact integers all the way up."""
    t0 = time.perf_counter()
    G = presets.h_group()
    at = G.evaluate_text("a t")
    bad: list[int] = []
    for k in range(1, k_max + 1):
        lhs = G.power(at, k)
        rhs = G.evaluate_text(f"t^{k} a^{2 ** (k + 1) - 2}")
        if G.canonical_key(lhs) != G.canonical_key(rhs):
            bad.append(k)
    return _result(
        "power-vs-word",
        "(a t)^k spells out to t^k a^(2^(k+1)-2)",
        {"k_max": k_max},
        "fail" if bad else "pass",
        {"checked": k_max, "mismatches": bad},
        t0,
    )


def check_log_shortcut_a(k_max: int = 1000) -> CheckResult:
    """shortcut_g1inv_g2(k) reaches a^(2^(k+1)-2) in <= 6 log2(k+1) + 5 letters."""
    t0 = time.perf_counter()
    G = presets.h_group()
    bad: list[dict] = []
    for k in range(1, k_max + 1):
        w = shortcut_g1inv_g2(k)
        value = G.a_power(G.evaluate(w))
        bound = 6 * ((k + 1).bit_length() - 1) + 5
        if value != 2 ** (k + 1) - 2 or w.length() > bound:
            bad.append({"k": k, "length": w.length(), "bound": bound})
    return _result(
        "log-shortcut-a",
        "a^(2^(k+1)-2) is reachable in 6 log2(k+1) + 5 letters",
        {"k_max": k_max},
        "fail" if bad else "pass",
        {"checked": k_max, "failures": bad},
        t0,
    )


def check_log_shortcut_s(
    k_max: int = 2**20, machine_max: int = 4096, samples: int = 64, seed: int = 0
) -> CheckResult:
    """shortcut_sk(k) reaches s^k in <= 3 log2 k + 1 letters.  The full range
    runs through the affine replay of the same letter sequence (the machine
    route costs ~0.4 ms per word, which would blow the budget at 2^20);
    the group machine itself confirms an exhaustive prefix plus a random
    sample of large k."""
    t0 = time.perf_counter()
    G = presets.h_group()
    first_bad = sk_fast_check(k_max)
    bad: list[int] = [] if first_bad is None else [first_bad]
    rng = random.Random(seed)
    ks = list(range(1, machine_max + 1))
    ks += [rng.randrange(machine_max + 1, k_max + 1) for _ in range(samples)]
    for k in ks:
        w = shortcut_sk(k)
        ok_value = G.canonical_key(G.evaluate(w)) == G.canonical_key(G.generator_pow("s", k))
        if not ok_value or w.length() > 3 * (k.bit_length() - 1) + 1:
            bad.append(k)
    return _result(
        "log-shortcut-s",
        "s^k is reachable in 3 log2 k + 1 letters",
        {"k_max": k_max, "machine_max": machine_max, "samples": samples, "seed": seed},
        "fail" if bad else "pass",
        {"affine_first_failure": first_bad, "machine_checked": len(ks),
         "failures": bad[:10]},
        t0,
    )


def check_tower_word_lengths(k_max: int = 20) -> CheckResult:
    """l(w_k) = 3*2^(k+1) - 5, and the first two values are a^p and a^(p^p)."""
    t0 = time.perf_counter()
    G = presets.gp_group(20)
    bad: list[dict] = []
    for k in range(k_max + 1):
        w = build_wk(k)
        if w.length() != 3 * 2 ** (k + 1) - 5:
            bad.append({"k": k, "length": w.length()})
    values_ok = (
        G.a_power(G.evaluate(build_wk(1))) == 20
        and G.a_power(G.evaluate(build_wk(2))) == 20**20
    )
    if not values_ok:
        bad.append({"k": "value", "length": -1})
    return _result(
        "tower-word-lengths",
        "recursive words have length 3*2^(k+1) - 5 and tower values",
        {"k_max": k_max},
        "fail" if bad else "pass",
        {"checked": k_max + 1, "failures": bad, "value_checked_through": 2},
        t0,
    )


def check_tower_word_geodesic(p: int = 20, b: Ball | None = None) -> CheckResult:
    """No word of length < 7 reaches a^20; the 7-letter recursion word does."""
    t0 = time.perf_counter()
    G = presets.gp_group(p)
    a20 = G.generator_pow("a", p)
    found = exhaustive_min_word(G, a20, 7)
    if b is None:
        b = ball(G, 7, store_parents=False)
    d = distance(b, G, a20)
    ok = found is not None and found[1] == 7 and d.distance == 7
    return _result(
        "tower-word-geodesic",
        "no word shorter than 7 letters reaches a^p",
        {"p": p},
        "pass" if ok else "fail",
        {
            "min_word": None if found is None else found[0].text(),
            "min_length": None if found is None else found[1],
            "ball_distance": str(d),
        },
        t0,
    )


_A_POWER_KEY = re.compile(r"^q=(-?\d+)/(\d+)\^0;k=0$")


def _a_power_distances(G: GroupModel, b: Ball, p: int) -> dict[int, int]:
    """All n with a^n inside the ball, read off the canonical keys."""
    out: dict[int, int] = {}
    for key, d in b.dists.items():
        m = _A_POWER_KEY.match(key)
        if m and int(m.group(2)) == p:
            out[int(m.group(1))] = d
    return out


def check_far_powers_stay_far(
    p: int = 20,
    radius: int = 13,
    fallback_radius: int = 11,
    memory_cap: int = 2 * 10**7,
    workers: int = 1,
    b: Ball | None = None,
) -> CheckResult:
    """Around the reachable a^p: d(1, a^(p-n)) >= 7 + min(d_n, 1) for every n
    whose own distance is < 7, and d(1, a^n) = |n| out to the radius.  A
    complete ball certifies the inequality for absent keys too."""
    t0 = time.perf_counter()
    G = presets.gp_group(p)
    params = {"p": p, "radius": radius, "fallback_radius": fallback_radius,
              "memory_cap": memory_cap}
    if b is None:
        b = ball(G, radius, memory_cap=memory_cap, workers=workers, store_parents=False)
        if not b.complete and fallback_radius < radius:
            b = ball(G, fallback_radius, memory_cap=memory_cap, workers=workers,
                     store_parents=False)
    if not b.complete:
        return _result(
            "far-powers-stay-far",
            "a^(p-n) stays outside radius 7 + min(d_n, 1)",
            params, "skipped",
            {"reason": f"ball truncated below radius {fallback_radius}"},
            t0,
        )
    powers = _a_power_distances(G, b, p)
    candidates = sorted(n for n, d in powers.items() if d < 7)
    failures: list[dict] = []
    undecided: list[int] = []
    for n in candidates:
        need = 7 + min(powers[n], 1)
        d = powers.get(p - n)  # absent from a complete ball means > radius
        if d is not None:
            if d < need:
                failures.append({"n": n, "d": d, "need": need})
        elif b.radius + 1 < need:
            undecided.append(n)  # absence only certifies d > radius here
    id_range = min(13, b.radius)
    for n in range(-id_range, id_range + 1):
        if powers.get(n, b.radius + 1) != abs(n):
            failures.append({"n": n, "d": powers.get(n), "need": abs(n)})
    status = "fail" if failures else ("skipped" if undecided else "pass")
    return _result(
        "far-powers-stay-far",
        "a^(p-n) stays outside radius 7 + min(d_n, 1)",
        params,
        status,
        {"radius_used": b.radius, "entries": len(b), "candidates": candidates,
         "undecided": undecided, "identity_range": id_range, "failures": failures},
        t0,
    )


def check_short_words_small_exponents(G: GroupModel, k: int, L: int) -> CheckResult:
    """Exhaustive sweep: every t-balanced word shorter than L*2^(k-1) whose
    indexed rewriting stays below index k and that equals a power a^n has
    |n| below the k-fold exponential of L."""
    t0 = time.perf_counter()
    p = getattr(G.base, "p", None) if hasattr(G, "base") else None
    if p is None:
        raise ValueError("needs a tower-type group with a base exponent")
    max_len = L * 2 ** (k - 1) - 1
    if 4 * 3**max_len > ENUMERATION_GUARD:
        raise ValueError(f"enumeration of words up to length {max_len} exceeds the guard")
    bound = L
    for _ in range(k - 1):
        bound = p**bound
    t_gen = G.alphabet.index("t")
    scanned = balanced = qualifying = 0
    max_abs_n = 0
    failures: list[dict] = []
    for letters in iter_ball_words(len(G.alphabet), max_len):
        scanned += 1
        if not letters:
            continue
        if sum(e for g, e in letters if g == t_gen) != 0:
            continue
        balanced += 1
        w = Word.make(G.alphabet, letters).free_reduce()
        v = psi_inverse(w)
        if contains_index_at_least(v, k):
            continue
        n = G.a_power(G.evaluate(w))
        if n is None:
            continue
        qualifying += 1
        max_abs_n = max(max_abs_n, abs(n))
        if abs(n) >= bound:
            failures.append({"word": w.text(), "n": n})
    return _result(
        "short-words-small-exponents",
        "low-index words shorter than L*2^(k-1) only reach a^n with |n| "
        "below the (k-1)-fold exponential of L",
        {"group": G.group_id, "k": k, "L": L, "max_len": max_len},
        "fail" if failures else "pass",
        {"bound": bound, "scanned": scanned, "balanced": balanced,
         "a_powers_found": qualifying, "max_abs_n": max_abs_n,
         "failures": failures[:5]},
        t0,
    )


def check_ray_pair_lower_bound(
    k_max: int = 1000, b: Ball | None = None, radius: int = 7, pair_max: int = 4
) -> CheckResult:
    """(i) the log shortcut reaches a^(2^(k+1)-2) within its bound for
    k <= k_max; (ii) d(1, t^l a^-(2^(l'+1)-2) t^-l') >= (l-1) + (l'-1) for
    every pair the ball can measure."""
    t0 = time.perf_counter()
    G = presets.h_group()
    bad_i: list[int] = []
    for k in range(1, k_max + 1):
        w = shortcut_g1inv_g2(k)
        if (G.a_power(G.evaluate(w)) != 2 ** (k + 1) - 2
                or w.length() > 6 * ((k + 1).bit_length() - 1) + 5):
            bad_i.append(k)
    if b is None:
        b = ball(G, radius, store_parents=False)
    measured: dict[str, str] = {}
    undecided: list[str] = []
    bad_ii: list[dict] = []
    for l in range(1, pair_max + 1):
        for lp in range(1, pair_max + 1):
            g = G.evaluate_text(f"t^{l} a^-{2 ** (lp + 1) - 2} t^-{lp}")
            res = distance(b, G, g)
            label = f"{l},{lp}"
            need = (l - 1) + (lp - 1)
            if res.distance is None:
                # absence certifies d > radius, enough when radius >= need
                if b.radius >= need:
                    measured[label] = str(res)
                else:
                    undecided.append(label)
                continue
            measured[label] = str(res)
            if res.distance < need:
                bad_ii.append({"pair": label, "d": res.distance})
    return _result(
        "ray-pair-lower-bound",
        "d(1, t^l a^-(2^(l'+1)-2) t^-l') >= (l-1) + (l'-1)",
        {"k_max": k_max, "radius": b.radius, "pair_max": pair_max},
        "fail" if (bad_i or bad_ii) else "pass",
        {"shortcut_failures": bad_i[:10], "pair_distances": measured,
         "undecided_pairs": undecided, "pair_failures": bad_ii},
        t0,
    )


def check_growth_tables(
    h_ball: Ball | None = None, gp_ball: Ball | None = None
) -> CheckResult:
    """Element growth: near-superadditive (the k translated copies share the
    identity) and capped by the ball size; the a-row in the p = 20 tower
    group reaches 17 at radius 7."""
    t0 = time.perf_counter()
    cases: list[tuple[GroupModel, str, Ball]] = []
    for G, text in ((ZdGroup(1), "g1"), (ZdGroup(2), "g1"), (FreeGroup(2), "f1")):
        cases.append((G, text, ball(G, 6, store_parents=False)))
    Gh = presets.h_group()
    cases.append((Gh, "t", h_ball if h_ball is not None else ball(Gh, 6, store_parents=False)))
    Gp = presets.gp_group(20)
    gp_b = gp_ball if gp_ball is not None else ball(Gp, 7, store_parents=False)
    cases.append((Gp, "a", gp_b))

    failures: list[dict] = []
    for G, text, b in cases:
        table = growth(G, G.evaluate_text(text), b)
        sizes = b.sphere_sizes()
        cum = 0
        ball_sizes = []
        for s in sizes:
            cum += s
            ball_sizes.append(cum)
        for n in range(b.radius + 1):
            if table.w(n) > ball_sizes[n]:
                failures.append({"group": G.group_id, "n": n, "w": table.w(n),
                                 "cap": ball_sizes[n]})
            for k in range(2, b.radius + 1):
                if k * n <= b.radius and table.w(k * n) < k * table.w(n) - (k - 1):
                    failures.append({"group": G.group_id, "n": n, "k": k,
                                     "w_kn": table.w(k * n), "w_n": table.w(n)})
    gp_table = growth(Gp, Gp.evaluate_text("a"), gp_b)
    pinned = gp_b.radius >= 7
    if pinned and gp_table.w(7) != 17:
        failures.append({"group": "gp:20", "n": 7, "w": gp_table.w(7), "cap": 17})
    return _result(
        "growth-tables",
        "element growth near-superadditive and capped by ball size",
        {"groups": [G.group_id for G, _, _ in cases]},
        "fail" if failures else "pass",
        {"gp20_a_row": list(gp_table.rows), "reference_value_pinned": pinned,
         "failures": failures},
        t0,
    )


def check_t_min_reference() -> CheckResult:
    """The separation floor at (d, gamma, delta) = (2, 4, 2) is
    sqrt(ln 2 / ln 12); domain and monotonicity behave."""
    t0 = time.perf_counter()
    ref = math.sqrt(math.log(2) / math.log(12))
    got = t_min(2, 4.0, 2.0)
    ok = abs(got - ref) <= 1e-12
    for args in ((0, 4.0, 2.0), (2, 2.0, 2.0), (2, 4.0, 1.0)):
        try:
            t_min(*args)
            ok = False
        except ValueError:
            pass
    for d in (1, 2, 3):
        for g in (3.0, 4.0, 6.0):
            vals = [t_min(d, g, dl) for dl in (1.2, 1.5, 2.0, 2.5) if dl < g]
            if not all(a > b_ for a, b_ in zip(vals, vals[1:])):
                ok = False
    return _result(
        "t-min-reference",
        "separation floor sqrt(log(gamma/delta)/log((2d-1)gamma))",
        {},
        "pass" if ok else "fail",
        {"value": got, "reference": ref},
        t0,
    )


def check_estimator_sanity(h_ball: Ball | None = None) -> CheckResult:
    """Self-estimate is zero; the two ends of a line are antipodal at scale
    one; the t-ray and the (a t)-ray of the amalgam fail to separate."""
    t0 = time.perf_counter()
    Z = ZdGroup(1)
    zb = ball(Z, 20, store_parents=False)
    g1 = Z.evaluate_text("g1")
    self_est = estimate_s(Z, g1, g1, zb, I=8, c_grid=(0, 1, 2))
    anti = antipodal_lower_bound(Z, g1, zb, I=12, c_grid=(0, 1, 2))
    H = presets.h_group()
    hb = h_ball if h_ball is not None else ball(H, 6, store_parents=False)
    pair = estimate_s(H, H.evaluate_text("t"), H.evaluate_text("a t"), hb,
                      I=12, c_grid=(0, 1, 2, 3, 4, 5, 6))
    ok = (self_est.lower_bound_s == 0
          and anti.t_scale is not None and anti.t_scale >= 0.9
          and pair.lower_bound_s <= Fraction(35, 100))
    return _result(
        "estimator-sanity",
        "self-estimate zero, line antipodes separate, commensurate rays do not",
        {"z_radius": zb.radius, "h_radius": hb.radius, "I": 12},
        "pass" if ok else "fail",
        {"self": str(self_est.lower_bound_s), "antipodal_t": anti.t_scale,
         "ray_pair_lower_bound": str(pair.lower_bound_s),
         "ray_pair_alpha_hat": {str(c): str(v) for c, v in pair.alpha_hat.items()}},
        t0,
    )


def check_ball_determinism(p: int = 20, radius: int = 5) -> CheckResult:
    """Distances never depend on the worker count, files round-trip
    bit-exact, and a corrupted checksum is rejected."""
    t0 = time.perf_counter()
    G = presets.gp_group(p)
    b1 = ball(G, radius, workers=1)
    b4 = ball(G, radius, workers=4)
    same = b1.dists == b4.dists and b1.parents == b4.parents
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "ball.tsv")
        save_ball(b1, path)
        with open(path, "rb") as fh:
            blob = fh.read()
        loaded = load_ball(path)
        round_trip = loaded.dists == b1.dists and loaded.complete == b1.complete
        save_ball(loaded, path)
        with open(path, "rb") as fh:
            blob2 = fh.read()
        bit_exact = blob == blob2
        corrupted = blob.replace(b"checksum=", b"checksum=0", 1)
        with open(path, "wb") as fh:
            fh.write(corrupted)
        try:
            load_ball(path)
            rejects = False
        except ValueError:
            rejects = True
    ok = same and round_trip and bit_exact and rejects
    return _result(
        "ball-determinism",
        "worker count never changes distances; files round-trip bit-exact",
        {"p": p, "radius": radius},
        "pass" if ok else "fail",
        {"entries": len(b1), "workers_agree": same, "round_trip": round_trip,
         "bit_exact": bit_exact, "corruption_rejected": rejects},
        t0,
    )


def check_psi_round_trip(samples: int = 10_000, seed: int = 0) -> CheckResult:
    """Indexed rewriting is a bijection on balanced reduced words, and it
    carries the recursion words to their indexed forms."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    t_gen = GP_ALPHABET.index("t")
    failures: list[str] = []
    tested = 0
    while tested < samples:
        syl: list[tuple[int, int]] = []
        last = -1
        for _ in range(rng.randint(1, 10)):
            g = rng.randrange(2)
            if g == last:
                g = 1 - g
            syl.append((g, rng.choice((-3, -2, -1, 1, 2, 3))))
            last = g
        w = Word.make(GP_ALPHABET, syl)
        bal = w.exponent_sum("t")
        if bal:
            syl2 = list(w.syllables)
            if syl2 and syl2[-1][0] == t_gen:
                syl2[-1] = (t_gen, syl2[-1][1] - bal)
                if syl2[-1][1] == 0:
                    syl2.pop()
            else:
                syl2.append((t_gen, -bal))
            w = Word.make(GP_ALPHABET, syl2)
        w = w.free_reduce()
        if w.length() > 30 or not w.syllables:
            continue
        tested += 1
        back = psi(psi_inverse(w), GP_ALPHABET)
        if back.syllables != w.syllables:
            failures.append(w.text())
    pinned = all(
        psi_inverse(build_wk(k)).syllables == build_wk_prime(k).syllables
        and psi(build_wk_prime(k), GP_ALPHABET).syllables == build_wk(k).syllables
        for k in range(11)
    )
    return _result(
        "psi-round-trip",
        "indexed rewriting is a bijection on balanced words",
        {"samples": samples, "seed": seed},
        "fail" if (failures or not pinned) else "pass",
        {"tested": tested, "failures": failures[:5],
         "recursion_words_pinned": pinned},
        t0,
    )


def run_all(config: CheckConfig | None = None) -> CheckReport:
    """Every check in catalog order, sharing the expensive balls.  Failures
    and skips are report entries, never exceptions."""
    cfg = config or CheckConfig()
    results: list[CheckResult] = []

    def run(fn, *args, **kwargs):
        check_id = fn.__name__.removeprefix("check_").replace("_", "-")
        t0 = time.perf_counter()
        try:
            results.append(fn(*args, **kwargs))
        except Exception as e:  # precondition violations become skips
            results.append(CheckResult(
                check_id, "", {}, "skipped",
                {"reason": f"{type(e).__name__}: {e}"},
                round(time.perf_counter() - t0, 3),
            ))

    Gh = presets.h_group()
    h_ball = ball(Gh, cfg.h_radius, workers=cfg.workers, store_parents=False)
    Gp = presets.gp_group(cfg.p)
    gp_small = ball(Gp, cfg.gp_small_radius, workers=cfg.workers, store_parents=False)

    run(check_relator_invariance, cfg.p, cfg.relator_insertions, cfg.seed)
    run(check_stable_letter_distance, h_ball)
    run(check_power_vs_word)
    run(check_log_shortcut_a, cfg.g1g2_k_max)
    run(check_log_shortcut_s, cfg.sk_k_max, cfg.sk_machine_max, seed=cfg.seed)
    run(check_tower_word_lengths, cfg.wk_k_max)
    run(check_tower_word_geodesic, cfg.p,
        gp_small if cfg.p == 20 else None)
    run(check_far_powers_stay_far, cfg.p, cfg.gp_far_radius,
        cfg.gp_far_fallback_radius, cfg.gp_far_cap, cfg.workers)
    for k, L in cfg.small_exponent_instances:
        run(check_short_words_small_exponents, presets.gp_group(cfg.p), k, L)
    run(check_growth_tables, h_ball, gp_small if cfg.p == 20 else None)
    run(check_t_min_reference)
    run(check_estimator_sanity, h_ball)
    run(check_ball_determinism, cfg.p)
    run(check_psi_round_trip, cfg.psi_samples, cfg.seed)
    ray_ball = ball(Gh, cfg.ray_radius, workers=cfg.workers, store_parents=False)
    run(check_ray_pair_lower_bound, cfg.ray_k_max, ray_ball)

    return CheckReport(tuple(results), cfg.seed, asdict(cfg))
