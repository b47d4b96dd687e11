import json

import pytest

from glab.cayley import ball
from glab.checks import (
    CheckConfig,
    check_ball_determinism,
    check_estimator_sanity,
    check_far_powers_stay_far,
    check_growth_tables,
    check_log_shortcut_a,
    check_log_shortcut_s,
    check_power_vs_word,
    check_psi_round_trip,
    check_ray_pair_lower_bound,
    check_relator_invariance,
    check_short_words_small_exponents,
    check_stable_letter_distance,
    check_t_min_reference,
    check_tower_word_geodesic,
    check_tower_word_lengths,
    run_all,
)
from glab.groups import ZdGroup, presets
from glab.words import Word


@pytest.fixture(scope="module")
def h_ball4():
    return ball(presets.h_group(), 4, store_parents=False)


@pytest.fixture(scope="module")
def gp_ball7():
    return ball(presets.gp_group(20), 7, store_parents=False)


def test_relator_invariance_passes():
    r = check_relator_invariance(insertions=150, seed=7)
    assert r.status == "pass"
    assert r.measured["insertions_tried"] == 4 * 150
    assert r.measured["failures"] == []


def test_relator_invariance_catches_wrong_relation():
    G = presets.gp_group(20)
    G.set_relators((Word.parse("t^-1 a^-1 t a t^-1 a t a^-21", G.alphabet),))
    r = check_relator_invariance(insertions=100, seed=0, groups=(G,))
    assert r.status == "fail"
    bad = r.measured["failures"][0]
    assert bad["group"] == "gp:20"
    assert bad["lhs_key"] != bad["rhs_key"]


def test_stable_letter_distance(h_ball4):
    r = check_stable_letter_distance(h_ball4)
    assert r.status == "pass"
    assert r.measured["distances"] == {1: 1, 2: 2, 3: 3, 4: 4}


def test_power_vs_word():
    r = check_power_vs_word(k_max=40)
    assert r.status == "pass"
    assert r.measured["checked"] == 40


def test_log_shortcut_a():
    r = check_log_shortcut_a(k_max=60)
    assert r.status == "pass"


def test_log_shortcut_s():
    r = check_log_shortcut_s(k_max=4096, machine_max=64, samples=8, seed=3)
    assert r.status == "pass"
    assert r.measured["affine_first_failure"] is None
    assert r.measured["machine_checked"] == 72


def test_tower_word_lengths():
    r = check_tower_word_lengths(k_max=10)
    assert r.status == "pass"
    assert r.measured["checked"] == 11


def test_tower_word_geodesic(gp_ball7):
    r = check_tower_word_geodesic(20, gp_ball7)
    assert r.status == "pass"
    assert r.measured["min_length"] == 7
    assert r.measured["ball_distance"] == "7"


def test_far_powers_pass_at_radius_8():
    r = check_far_powers_stay_far(radius=8, fallback_radius=8)
    assert r.status == "pass"
    assert r.measured["candidates"] == list(range(-6, 7))
    assert r.measured["undecided"] == []
    # identity row a^n at |n| <= 8 all present with d = |n|
    assert r.measured["identity_range"] == 8


def test_far_powers_undecided_at_radius_6():
    # a radius-6 ball certifies d > 6 for absent keys, short of the needed 8
    r = check_far_powers_stay_far(radius=6, fallback_radius=6)
    assert r.status == "skipped"
    assert 0 not in r.measured["undecided"]  # need 7 there, certified
    assert set(r.measured["undecided"]) == set(range(-6, 7)) - {0}


def test_short_words_small_exponents_k1():
    r = check_short_words_small_exponents(presets.gp_group(20), 1, 8)
    assert r.status == "pass"
    assert r.measured["scanned"] == 4373
    assert r.measured["balanced"] == 650
    assert r.measured["a_powers_found"] == 14
    assert r.measured["max_abs_n"] == 7
    assert r.measured["bound"] == 8


def test_short_words_guard_trips():
    with pytest.raises(ValueError, match="guard"):
        check_short_words_small_exponents(presets.gp_group(20), 3, 8)


def test_short_words_needs_tower_group():
    with pytest.raises(ValueError, match="tower"):
        check_short_words_small_exponents(ZdGroup(2), 1, 4)


def test_ray_pair_lower_bound(h_ball4):
    r = check_ray_pair_lower_bound(k_max=20, b=h_ball4, pair_max=4)
    assert r.status == "pass"
    d = r.measured["pair_distances"]
    assert d["1,1"] == "1" and d["2,1"] == "2" and d["2,2"] == "4"
    assert d["3,2"] == ">4"  # absent, certified by the complete ball
    assert "4,4" in r.measured["undecided_pairs"]  # needs 6, radius only 4


def test_growth_tables(h_ball4, gp_ball7):
    r = check_growth_tables(h_ball4, gp_ball7)
    assert r.status == "pass"
    assert r.measured["reference_value_pinned"] is True
    assert r.measured["gp20_a_row"][-1] == (7, 17)


def test_t_min_reference():
    r = check_t_min_reference()
    assert r.status == "pass"
    assert abs(r.measured["value"] - r.measured["reference"]) <= 1e-12


def test_estimator_sanity(h_ball4):
    r = check_estimator_sanity(h_ball4)
    assert r.status == "pass"
    assert r.measured["self"] == "0"
    assert r.measured["antipodal_t"] == 1.0


def test_ball_determinism():
    r = check_ball_determinism(radius=4)
    assert r.status == "pass"
    m = r.measured
    assert m["workers_agree"] and m["round_trip"] and m["bit_exact"]
    assert m["corruption_rejected"]


def test_psi_round_trip():
    r = check_psi_round_trip(samples=400, seed=11)
    assert r.status == "pass"
    assert r.measured["recursion_words_pinned"] is True


LIGHT = dict(
    relator_insertions=100,
    h_radius=4,
    gp_small_radius=7,
    gp_far_radius=8,
    gp_far_fallback_radius=8,
    ray_radius=4,
    ray_k_max=20,
    sk_k_max=2**10,
    sk_machine_max=64,
    g1g2_k_max=30,
    wk_k_max=10,
    psi_samples=300,
)


def test_run_all_light_config():
    rep = run_all(CheckConfig(**LIGHT))
    assert rep.passed()
    assert [r.status for r in rep.results] == ["pass"] * 16
    ids = [r.check_id for r in rep.results]
    assert ids.count("short-words-small-exponents") == 2
    assert ids[0] == "relator-invariance"
    assert ids[-1] == "ray-pair-lower-bound"
    lines = rep.human_lines()
    assert lines[-1] == "16 checks: 16 passed, 0 failed, 0 skipped"
    assert lines[0].startswith("[PASS   ] relator-invariance")


def test_run_all_report_json_round_trip():
    rep = run_all(CheckConfig(**LIGHT))
    d = json.loads(rep.to_json())
    assert d["schema"] == "glab-check-report/v1"
    assert d["passed"] is True
    assert d["seed"] == 20260814
    assert d["config"]["gp_small_radius"] == 7
    assert len(d["results"]) == 16
    for entry in d["results"]:
        assert entry["status"] in ("pass", "fail", "skipped")
        assert entry["runtime_s"] >= 0


def test_run_all_skips_are_not_failures():
    cfg = CheckConfig(**{**LIGHT, "gp_far_radius": 6, "gp_far_fallback_radius": 6,
                         "small_exponent_instances": ((1, 8), (3, 8))})
    rep = run_all(cfg)
    by_id = {}
    for r in rep.results:
        by_id.setdefault(r.check_id, []).append(r)
    assert by_id["far-powers-stay-far"][0].status == "skipped"
    statuses = [r.status for r in by_id["short-words-small-exponents"]]
    assert statuses == ["pass", "skipped"]
    reason = by_id["short-words-small-exponents"][1].measured["reason"]
    assert "guard" in reason
    assert rep.passed()  # skips never count as failures
    assert "skipped" in rep.human_lines()[-1]
