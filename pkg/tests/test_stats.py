import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ordinal_gate.simulate import DEFAULT_THEMES, SampleSet, ThemeSpec
from ordinal_gate.stats import ThemeSummary, composite_score, inverse_variance_weights, summarize

from conftest import HEAD_ROWS

SIGMAS = (0.2709, 0.0910, 0.2160)


def oracle_weights(sigmas):
    prec = 1.0 / np.asarray(sigmas, dtype=float) ** 2
    return prec / prec.sum()


def test_theme1_full_mean(default_samples):
    s = summarize(default_samples[0])
    assert abs(s.mean - 4.1169) <= 4 * 0.2709 / math.sqrt(10000)
    assert s.n == 10000


def test_summary_matches_numpy(default_samples):
    for sample in default_samples:
        s = summarize(sample)
        arr = np.array(sample.values)
        assert s.mean == pytest.approx(arr.mean(), rel=1e-12)
        assert s.std == pytest.approx(arr.std(ddof=1), rel=1e-12)
        assert (s.min, s.max) == (arr.min(), arr.max())


def test_constant_sample():
    s = summarize(SampleSet("c", [4, 4, 4]))
    assert (s.std, s.min, s.max) == (0.0, 4.0, 4.0)


def test_table_extrema():
    s = summarize(SampleSet("t1", HEAD_ROWS["Ease of Use & Learnability"]))
    assert (s.max, s.min) == (4.5447, 3.9897)
    assert s.min <= s.mean <= s.max


def test_empty_sample():
    with pytest.raises(ValueError):
        summarize(SampleSet("e", []))


def test_default_weights():
    w = inverse_variance_weights(SIGMAS)
    assert w == pytest.approx(oracle_weights(SIGMAS).tolist(), abs=1e-9)
    assert w == pytest.approx([0.0875, 0.7750, 0.1376], abs=5e-5)
    assert abs(math.fsum(w) - 1) <= 1e-12


def test_equal_sigmas():
    assert inverse_variance_weights([0.3, 0.3, 0.3]) == pytest.approx([1 / 3] * 3, abs=1e-15)


def test_composite_on_exact_means():
    summaries = [ThemeSummary(t.name, t.mean, t.std, 1.0, 5.0, 10000) for t in DEFAULT_THEMES]
    score, weights = composite_score(summaries, DEFAULT_THEMES)
    expected = float(oracle_weights(SIGMAS) @ np.array([4.1169, 4.1240, 3.7100]))
    assert score == pytest.approx(expected, abs=1e-12)
    assert round(score, 4) == 4.0664
    assert weights.themes == tuple(t.name for t in DEFAULT_THEMES)


def test_sample_weighting(default_samples):
    summaries = [summarize(s) for s in default_samples]
    _, w = composite_score(summaries, weighting="sample")
    assert w.weights == pytest.approx(oracle_weights([s.std for s in summaries]).tolist(), abs=1e-12)


def test_zero_sigma_rejected():
    with pytest.raises(ValueError):
        inverse_variance_weights([0.2, 0.0])
    flat = [ThemeSummary("c", 4.0, 0.0, 4.0, 4.0, 3)]
    with pytest.raises(ValueError):
        composite_score(flat, weighting="sample")
    with pytest.raises(ValueError):
        composite_score(flat, [ThemeSpec("c", 4.0, 0.0)])


def test_unknown_theme_or_mode():
    s = [ThemeSummary("nope", 4.0, 0.1, 4.0, 4.0, 3)]
    with pytest.raises(ValueError):
        composite_score(s, DEFAULT_THEMES)
    with pytest.raises(ValueError):
        composite_score(s, DEFAULT_THEMES, weighting="bogus")


sigma_lists = st.lists(st.floats(0.01, 10), min_size=1, max_size=8)


@settings(max_examples=300)
@given(sigma_lists, st.floats(0.01, 100))
def test_weights_scale_invariant(sigmas, k):
    w = inverse_variance_weights(sigmas)
    assert abs(math.fsum(w) - 1) <= 1e-12
    assert all(x > 0 for x in w)
    assert inverse_variance_weights([k * s for s in sigmas]) == pytest.approx(w, rel=1e-9, abs=1e-15)


@settings(max_examples=300)
@given(st.lists(st.floats(0.01, 10), min_size=2, max_size=8), st.data())
def test_weight_monotone_in_sigma(sigmas, data):
    i = data.draw(st.integers(0, len(sigmas) - 1))
    shrink = data.draw(st.floats(0.1, 0.9))
    before = inverse_variance_weights(sigmas)[i]
    smaller = list(sigmas)
    smaller[i] *= shrink
    assert inverse_variance_weights(smaller)[i] > before
