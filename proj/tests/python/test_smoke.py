import math

import pytest

import startail


def test_phi_and_psi():
    assert startail.phi(1.0) == pytest.approx(2 * math.log(2) - 1, rel=1e-15)
    assert startail.psi(2, 0.5) == pytest.approx(0.5, rel=1e-15)


def test_params_validation():
    s = startail.StarParams(2, 10, 0.3)
    assert s.N == 9
    assert s.mu == pytest.approx(10 * 36 * 0.09)
    with pytest.raises(ValueError):
        startail.StarParams(2, 10, 1.5)


def test_variational():
    cons = startail.critical_constants(1.0, 2)
    assert cons.c_crit == pytest.approx(2.9333439167618858, rel=1e-10)
    below = startail.solve(0.5 * cons.c_crit, 1.0, 2)
    assert below.minimizers == [0.0]
    assert below.value == startail.phi(1.0)
    above = startail.solve(2 * cons.c_crit, 1.0, 2)
    assert above.value < startail.phi(1.0)
    assert len(above.minimizers) == 1 and above.minimizers[0] > 0


def test_reports_are_dicts():
    s = startail.StarParams(2, 100, 0.3)
    assert startail.classify_regime(s)["name"] == "Dense"
    rep = startail.rate_report(s, 1.0)
    assert rep["selected"] == pytest.approx(1083.5755, rel=1e-6)


def test_exact_and_simulation():
    exact = math.exp(startail.exact_gnp_star_tail(6, 0.3, 2, 0.5))
    est = startail.naive_tail(startail.StarParams(2, 6, 0.3), 0.5, 100000, 1)
    assert abs(est.estimate - exact) < 4 * est.std_error
    again = startail.naive_tail(startail.StarParams(2, 6, 0.3), 0.5, 100000, 1, workers=2)
    assert again.estimate == est.estimate
    assert startail.count_graphs_with_degrees([1, 1, 1, 1]) == 3
    assert startail.convex_sum_min(2, 3, 5, 10) == 4
    t = startail.tilted_tail(10, 9, 0.2, 2, 1.0, 20000, 3)
    assert t.estimator == "Tilted"
    assert t.estimate > 0


def test_guard_error():
    with pytest.raises(ValueError):
        startail.exact_gnp_star_tail(12, 0.3, 2, 0.5)


def test_suite():
    results = startail.run_suite("enumeration")
    assert results and all(passed for _, passed, _ in results)
