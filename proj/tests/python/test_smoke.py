import math

import pytest

import spectra


def test_constants_render_known_decimals():
    c = spectra.constants(2, digits=10)
    assert c["cf_period_1"] == "0.6180339887"
    assert c["alpha_plus"] == "0.7320508076"
    assert c["alpha_minus"] == "0.3660254038"
    # alphabet {1..4}: the all-fours word has height 2*sqrt(5)
    assert spectra.constants(4)["height_period_k"].startswith("4.472135955")


def test_weights_are_sorted_and_bracketed():
    w = spectra.compute(2, 50)
    assert w == sorted(w)
    assert abs(w[0] - math.sqrt(5)) < 1 / 50 + 1e-9
    assert abs(w[-1] - math.sqrt(12)) < 1 / 50 + 1e-9

    m = spectra.compute(2, 50, kind="markov")
    assert set(w) <= set(m)

    dec = spectra.compute_decimals(2, 50, digits=6)
    assert len(dec) == len(w)
    assert dec[0].startswith("2.23")


def test_plot_intervals_are_disjoint_and_ordered():
    iv = spectra.plot_intervals(2, 40)
    assert iv
    for lo, hi in iv:
        assert lo < hi
    for (_, hi), (lo, _) in zip(iv, iv[1:]):
        assert hi < lo


def test_verify_against_periodic_heights():
    rep = spectra.verify(2, 100, maxlen=4)
    assert rep["ok"]
    assert rep["violations"] == []
    assert 0 < rep["worst_gap"] <= 1 / 100 + 1e-9


def test_periodic_heights_cover_the_short_periods():
    net = spectra.periodic_heights(2, 2)
    assert len(net) == 3
    assert net[0] == pytest.approx(math.sqrt(5))
    assert net[-1] == pytest.approx(math.sqrt(12))


def test_graph_stats_and_counts():
    s = spectra.graph_stats(2, 3)
    assert s["leaf_count"] == 2
    assert s["vertex_count"] == 12
    assert s["shift_edges"] == 8
    assert s["prolongation_edges"] == 8
    assert spectra.cylinder_count(2, 100) > spectra.cylinder_count(2, 20)


def test_two_resolutions_stay_close():
    assert spectra.hausdorff(2, 50, 500) <= 1 / 50 + 1 / 500 + 1e-9


def test_bad_arguments_raise():
    with pytest.raises(ValueError):
        spectra.compute(2, 50, kind="upper")
    with pytest.raises(ValueError):
        spectra.cylinder_count(2, 1)
