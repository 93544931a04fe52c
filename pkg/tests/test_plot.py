import math
import statistics
import xml.etree.ElementTree as ET

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ordinal_gate.plot import (
    HistogramSpec,
    PlotOutputError,
    build_bundle,
    build_curve,
    build_histogram,
    emit_plot,
    figure_source,
    kant_curve,
    kant_slope,
    linspace,
    render_svg,
    series_csvs,
    tangent_line,
)
from ordinal_gate.simulate import SampleSet

SLOPE_AT_2 = (math.pi / 4) * (math.sqrt(2) / 2)


def test_curve_landmarks():
    assert kant_curve(1) == 0.0
    assert kant_curve(3) == 1.0
    assert abs(kant_curve(5)) <= 1e-15


def test_slopes():
    assert kant_slope(3) == pytest.approx(0.0, abs=1e-15)
    assert kant_slope(2) == pytest.approx(0.55536, abs=1e-5)
    assert kant_slope(2) == pytest.approx(SLOPE_AT_2, abs=1e-15)
    assert kant_slope(4) == pytest.approx(-0.55536, abs=1e-5)


def test_tangent_at_peak_is_flat():
    m, b = tangent_line(3)
    assert m == pytest.approx(0, abs=1e-15)
    assert b == pytest.approx(1, abs=1e-15)


@pytest.mark.parametrize("x0", [2.0, 3.0, 4.0])
def test_tangent_touches_and_stays_close(x0):
    m, b = tangent_line(x0)
    assert abs(m * x0 + b - kant_curve(x0)) <= 1e-12
    bound = (math.pi / 4) ** 2 / 2
    for x in linspace(1, 5, 1000):
        assert abs(kant_curve(x) - (m * x + b)) <= bound * (x - x0) ** 2 + 1e-12


def central_difference(f, x, h):
    # divide by the step actually taken; x + h is itself rounded
    xp, xm = x + h, x - h
    return (f(xp) - f(xm)) / (xp - xm)


def test_finite_difference_derivative():
    h = 1e-4
    tol = h**2 * (math.pi / 4) ** 3 / 6 + 1e-12
    for x in linspace(1, 5, 100):
        assert abs(central_difference(kant_curve, x, h) - kant_slope(x)) <= tol


def test_curve_nonnegative_on_domain():
    c = build_curve()
    assert len(c.xs) == 1000 and c.xs[0] == 1.0 and c.xs[-1] == 5.0
    assert all(y >= -1e-15 for y in c.ys)


def test_linspace_matches_numpy():
    assert linspace(1.0, 5.0, 1000) == np.linspace(1, 5, 1000).tolist()
    assert linspace(3.04, 5.16, 51) == np.linspace(3.04, 5.16, 51).tolist()


# -- histogram ---------------------------------------------------------------


def test_histogram_matches_numpy_on_figure_source():
    src = figure_source()
    h = build_histogram(HistogramSpec(src, 50, True))
    ref_h, ref_e = np.histogram(np.array(src.values), bins=50, density=True)
    assert list(h.edges) == ref_e.tolist()
    assert list(h.heights) == pytest.approx(ref_h.tolist(), rel=1e-12)
    assert sum(h.counts) == 10000


@settings(max_examples=200)
@given(st.lists(st.floats(-50, 50), min_size=1, max_size=200), st.integers(1, 60))
def test_histogram_counts_match_numpy(xs, bins):
    h = build_histogram(HistogramSpec(SampleSet("x", xs), bins, False))
    ref, _ = np.histogram(np.array(xs), bins=bins)
    assert list(h.counts) == ref.tolist()


@settings(max_examples=200)
@given(st.lists(st.floats(1, 5), min_size=1, max_size=300), st.integers(1, 80))
def test_histogram_mass_is_one(xs, bins):
    h = build_histogram(HistogramSpec(SampleSet("x", xs), bins, True))
    assert abs(h.mass() - 1) <= 1e-9


def test_constant_sample_single_bin():
    h = build_histogram(HistogramSpec(SampleSet("c", [4.0] * 20), 50, True))
    assert sum(1 for c in h.counts if c) == 1
    assert abs(h.mass() - 1) <= 1e-9


def test_empty_histogram_rejected():
    with pytest.raises(ValueError):
        build_histogram(HistogramSpec(SampleSet("e", []), 50))
    with pytest.raises(ValueError):
        HistogramSpec(SampleSet("e", [1.0]), 0)


def test_modal_bin_near_center():
    src = figure_source()
    h = build_histogram(HistogramSpec(src, 50, True))
    mode = max(range(50), key=lambda i: h.heights[i])
    width = h.edges[1] - h.edges[0]
    assert abs(h.centers[mode] - statistics.median(src.values)) <= 2 * width
    assert abs(h.centers[mode] - 4.1) <= 2 * width


def test_figure_source_is_unclipped():
    src = figure_source()
    assert max(src.values) > 5.0
    np.random.seed(42)
    assert list(src.values) == np.random.normal(4.1, 0.27, 10000).tolist()


# -- output ------------------------------------------------------------------


@pytest.fixture(scope="module")
def bundle():
    return build_bundle(figure_source())


def test_svg_well_formed(bundle):
    root = ET.fromstring(render_svg(bundle).encode())
    assert root.get("viewBox") == "0 0 900 540"
    ns = {"s": "http://www.w3.org/2000/svg"}
    assert len(root.findall(".//s:g[@class='histogram']/s:rect", ns)) == 50
    tangents = root.findall(".//s:path[@class='tangent']", ns)
    assert [t.get("data-x0") for t in tangents] == ["2", "3", "4"]
    assert all(t.get("stroke-dasharray") for t in tangents)
    texts = {t.text for t in root.iter("{http://www.w3.org/2000/svg}text")}
    assert {"Monte Carlo Distribution", "Tangent at x=2", "Tangent at x=3", "Tangent at x=4"} <= texts


def test_csv_series(bundle):
    csvs = series_csvs(bundle)
    assert set(csvs) == {"histogram", "curve", "tangent_x2", "tangent_x3", "tangent_x4"}
    curve = csvs["curve"].splitlines()
    assert curve[0] == "x,y" and len(curve) == 1001
    assert len(csvs["histogram"].splitlines()) == 51


def test_emit_is_byte_identical(tmp_path):
    (tmp_path / "a").mkdir()
    (tmp_path / "b").mkdir()
    a = emit_plot(build_bundle(figure_source()), tmp_path / "a" / "fig.svg")
    b = emit_plot(build_bundle(figure_source()), tmp_path / "b" / "fig.svg")
    assert [p.name for p in a] == [p.name for p in b]
    assert len(a) == 6
    for pa, pb in zip(a, b):
        assert pa.read_bytes() == pb.read_bytes()


def test_emit_reports_path(tmp_path, bundle):
    target = tmp_path / "missing" / "fig.svg"
    with pytest.raises(PlotOutputError, match="missing"):
        emit_plot(bundle, target)


def test_curve_accuracy_against_mpmath():
    mpmath = pytest.importorskip("mpmath")
    mpmath.mp.dps = 40
    for x in linspace(1, 5, 1000):
        phase = mpmath.pi * (mpmath.mpf(x) - 1) / 4
        assert abs(kant_curve(x) - float(mpmath.sin(phase))) <= 2.3e-16
        assert abs(kant_slope(x) - float(mpmath.pi / 4 * mpmath.cos(phase))) <= 2.3e-16
