"""Smoke tests for the _slopecert extension module."""

import pytest

import _slopecert as sc


def test_slope_normalization():
    s = sc.Slope(-3, -1)
    assert (s.p, s.q) == (3, 1)
    with pytest.raises(sc.NonPrimitiveError):
        sc.Slope(2, 4)
    with pytest.raises(sc.ZeroSlopeError):
        sc.Slope(0, 0)


def test_distance():
    assert sc.slope_distance(sc.Slope(-4, 1), sc.Slope(4, 1)) == 8


def test_length_and_area():
    shape = sc.CuspShape("1", "0", "0", "4")
    length = sc.slope_length(shape, sc.Slope(1, 1))
    assert abs(float(length) - 17 ** 0.5) < 1e-9
    area = sc.cusp_area(shape)
    assert area.is_exact and area.lo == "4"


def test_degenerate_lattice():
    with pytest.raises(sc.DegenerateLatticeError):
        sc.cusp_area(sc.CuspShape("1", "0", "2", "0"))


def test_figure_eight_demo():
    report, narrative = sc.figure8_demo()
    assert report.count == 9
    assert report.max_pairwise_distance == 8
    assert not report.satisfies_min_slope
    assert report.satisfies_min_area
    assert "distance(-4/1, 4/1) = 8" in narrative
    ns = [n for n, _ in report.integral_short_slopes]
    assert ns == list(range(-4, 5))


def test_enumeration():
    shape = sc.figure_eight_shape()
    reports = sc.enumerate_short_slopes(shape, sc.Scalar("6"))
    assert len(reports) == 10
    assert (reports[0].slope.p, reports[0].slope.q) == (1, 0)


def test_certification():
    cert = sc.certify_theorem()
    assert cert["delta_max"] == 8
    assert cert["max_integral_candidates"] == 9
    enclosure, floor = sc.quartic_bound()
    assert floor == 8
    assert 8.9094 < float(enclosure) < 8.9095
    verdicts = {r.delta: r.verdict for r in cert["reports"]}
    assert all(verdicts[d] == "WitnessFound" for d in range(1, 9))
    assert all(verdicts[d] == "Infeasible" for d in range(9, 13))


def test_witness():
    w = sc.find_witness(8)
    assert w is not None
    assert float(w.a) <= 6 and float(w.b) <= 6
    assert sc.find_witness(9) is None


def test_sampler_and_verify():
    shapes = sc.sample_constrained_shapes(seed=7, count=20)
    assert len(shapes) == 20
    for shape in shapes:
        report = sc.verify_shape(shape)
        assert report.satisfies_min_slope and report.satisfies_min_area
        assert report.bound_holds
