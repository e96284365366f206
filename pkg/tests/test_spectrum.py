"""Exhaustive decision search, provable windows, and spectrum sweeps."""

from __future__ import annotations

import random
from itertools import permutations

import pytest

from antimagic.errors import BadParameters, BudgetExceeded, NoSddsFound
from antimagic.families import complete, cp3, path, petersen, star
from antimagic.graph import build_graph
from antimagic.labeling import (
    EdgeLabeling,
    is_sdds,
    is_strongly_antimagic,
    verify_shifted,
)
from antimagic.spectrum import (
    ALL_SHIFTS,
    AllShifts,
    closed_form_spectrum,
    decide,
    finite_window,
    search_sdds,
    search_strong,
    spectrum,
)
from conftest import random_graph


def brute_force(g, k):
    pool = range(k + 1, k + g.m + 1)
    for labels in permutations(pool):
        if verify_shifted(EdgeLabeling(g, labels), k):
            return labels
    return None


# --- decide ------------------------------------------------------------------


def test_decide_finds_labeling_with_base():
    f = decide(path(4), -1)
    assert f is not None
    assert f.base == -1
    assert verify_shifted(f, -1)


def test_decide_exhausts_infeasible_shifts():
    assert decide(path(4), -2) is None
    assert decide(path(5), -2) is None
    assert decide(path(5), -3) is None


def test_decide_single_edge_never_feasible():
    for k in range(-4, 4):
        assert decide(path(2), k) is None


def test_decide_tolerates_isolated_vertices():
    g = build_graph(4, [(0, 1), (1, 2)])
    f = decide(g, 0)
    assert f is not None and verify_shifted(f, 0)
    # pool {0, 1} puts a zero label on some pendant edge, and that
    # endpoint then collides with the isolated vertex's zero sum
    assert decide(g, -1) is None


def test_decide_budget():
    with pytest.raises(BudgetExceeded):
        decide(complete(5), 0, budget=5)


def test_decide_agrees_with_unpruned_enumeration():
    rng = random.Random(314)
    for _ in range(12):
        n = rng.randint(2, 6)
        m = rng.randint(1, min(5, n * (n - 1) // 2))
        g = random_graph(rng, n, m)
        for k in range(-6, 4):
            fast = decide(g, k)
            slow = brute_force(g, k)
            assert (fast is None) == (slow is None), (g, k)
            if fast is not None:
                assert verify_shifted(fast, k)


def test_search_sdds_and_strong():
    f = search_strong(path(4))
    assert f is not None and is_strongly_antimagic(f)
    f = search_sdds(path(4))
    assert f is not None and is_sdds(f)
    assert search_sdds(path(2)) is None


# --- finite_window -------------------------------------------------------------


def test_window_path6_is_strong():
    w = finite_window(path(6))
    assert (w.lo, w.hi, w.method) == (-5, -1, "strong")
    assert is_strongly_antimagic(w.certificate)


def test_window_star4_is_strong():
    w = finite_window(star(4))
    assert (w.lo, w.hi, w.method) == (-4, -1, "strong")
    assert is_strongly_antimagic(w.certificate)


def test_window_petersen_uses_odd_degree_certificate():
    w = finite_window(petersen())
    assert w.method == "sdds"
    assert (w.lo, w.hi) == (-44, 28)
    assert is_sdds(w.certificate)


def test_window_rejects_hopeless_graphs():
    with pytest.raises(NoSddsFound):
        finite_window(path(2))
    with pytest.raises(NoSddsFound):
        finite_window(build_graph(5, [(0, 1), (1, 2)]))
    with pytest.raises(NoSddsFound):
        finite_window(build_graph(3, []))


# --- spectrum ------------------------------------------------------------------


def test_spectrum_path5():
    rep = spectrum(path(5))
    assert rep.excluded == (-3, -2)
    assert (rep.sweep_lo, rep.sweep_hi) == (-4, -1)
    assert rep.entry(-1).status == "feasible"
    assert rep.entry(-2).status == "infeasible"
    for row in rep.entries:
        if row.certificate is not None:
            assert verify_shifted(row.certificate, row.k), row.k


def test_spectrum_override_window_adds_lemma_entries():
    rep = spectrum(path(4), window=(-10, 5))
    assert rep.excluded == (-2,)
    assert len(rep.entries) == 16
    above = rep.entry(3)
    assert above.status == "lemma" and above.via == "strong-shift"
    below = rep.entry(-9)
    assert below.status == "lemma" and below.via == "negation-symmetry"
    for row in rep.entries:
        if row.certificate is not None:
            assert verify_shifted(row.certificate, row.k), row.k


def test_spectrum_mirrors_across_the_negation_axis():
    rep = spectrum(cp3(2))
    assert rep.excluded == (-5, -4, -3, -2, -1, 0)
    mirrored = [row for row in rep.entries if row.via == "mirror"]
    assert mirrored and all(row.k < -(4 + 1) / 2 for row in mirrored)
    for row in rep.entries:
        if row.certificate is not None:
            assert verify_shifted(row.certificate, row.k), row.k


def test_spectrum_reraises_without_override():
    with pytest.raises(NoSddsFound):
        spectrum(path(2))


def test_spectrum_override_sweeps_windowless_graphs():
    rep = spectrum(path(2), window=(-3, 1))
    assert rep.window is None
    assert rep.excluded == (-3, -2, -1, 0, 1)
    doc = rep.to_dict()
    assert doc["outside_above"] == "unknown"
    assert doc["outside_below"] == "unknown"


def test_spectrum_rejects_empty_override():
    with pytest.raises(BadParameters):
        spectrum(path(4), window=(2, 1))


def test_spectrum_report_dict_shape():
    doc = spectrum(path(5)).to_dict()
    assert doc["n"] == 5 and doc["m"] == 4
    assert doc["window"] == {"lo": -4, "hi": -1, "method": "strong"}
    assert doc["sweep"] == {"lo": -4, "hi": -1}
    assert doc["outside_above"] == "strong-shift"
    assert doc["outside_below"] == "negation-symmetry"
    assert doc["excluded"] == [-3, -2]
    ks = [row["k"] for row in doc["shifts"]]
    assert ks == sorted(ks)
    for row in doc["shifts"]:
        assert row["status"] in {"feasible", "infeasible", "lemma"}
        assert (row["labels"] is None) == (row["status"] == "infeasible")


# --- closed forms --------------------------------------------------------------


def test_closed_form_paths():
    assert closed_form_spectrum("path", n=2) is ALL_SHIFTS
    assert closed_form_spectrum("path", n=3) == frozenset({-2, -1})
    assert closed_form_spectrum("path", n=4) == frozenset({-2})
    assert closed_form_spectrum("path", n=5) == frozenset({-3, -2})
    assert closed_form_spectrum("path", n=9) == frozenset()


def test_closed_form_stars():
    assert closed_form_spectrum("star", n=1) is ALL_SHIFTS
    assert closed_form_spectrum("star", n=4) == frozenset({-3, -2})
    assert closed_form_spectrum("star", n=5) == frozenset({-3})
    assert closed_form_spectrum("star", n=6) == frozenset({-4, -3})


def test_closed_form_double_stars():
    assert closed_form_spectrum("double_star", a=2, b=2) == frozenset()
    assert closed_form_spectrum("double_star", a=1, b=1) == frozenset({-2})
    assert closed_form_spectrum("double_star", a=2, b=1) == frozenset({-3, -2})
    assert closed_form_spectrum("double_star", a=3, b=1) == frozenset({-3})
    assert closed_form_spectrum("double_star", a=4, b=1) == frozenset()


def test_closed_form_unions_and_sporadics():
    assert closed_form_spectrum("cp3", c=3) == frozenset(range(-7, 1))
    assert closed_form_spectrum("cp3", c=4) == frozenset(range(-10, 2))
    assert closed_form_spectrum("two_p4") == frozenset({-5, -2})
    assert closed_form_spectrum("two_s3") == frozenset({-5, -2})
    assert closed_form_spectrum("p5prime") == frozenset({-3})


def test_closed_form_rejects_unknown():
    with pytest.raises(BadParameters):
        closed_form_spectrum("wheel", n=5)
    with pytest.raises(BadParameters):
        closed_form_spectrum("path")


def test_all_shifts_contains_everything():
    assert 0 in ALL_SHIFTS
    assert -(10**9) in ALL_SHIFTS
    assert ALL_SHIFTS == AllShifts()
    assert -5 not in frozenset() and -5 in ALL_SHIFTS
