"""Per-theme summaries and the inverse-variance composite score."""

from __future__ import annotations

import statistics
from dataclasses import dataclass
from typing import Sequence

from .simulate import SampleSet, ThemeSpec


@dataclass(frozen=True)
class ThemeSummary:
    theme: str
    mean: float
    std: float
    min: float
    max: float
    n: int

    def to_json(self):
        return {
            "theme": self.theme,
            "n": self.n,
            "mean": self.mean,
            "std": self.std,
            "min": self.min,
            "max": self.max,
        }


def summarize(sample: SampleSet) -> ThemeSummary:
    """Mean, sample std (n - 1 denominator; 0.0 when n == 1) and extrema."""
    xs = sample.values
    if not xs:
        raise ValueError(f"theme {sample.theme!r}: empty sample")
    std = statistics.stdev(xs) if len(xs) > 1 else 0.0
    return ThemeSummary(sample.theme, statistics.fmean(xs), std, min(xs), max(xs), len(xs))


@dataclass(frozen=True)
class CompositeWeights:
    themes: tuple[str, ...]
    weights: tuple[float, ...]

    def to_json(self):
        return dict(zip(self.themes, self.weights))


def inverse_variance_weights(sigmas: Sequence[float]) -> list[float]:
    if not sigmas:
        raise ValueError("need at least one sigma")
    for s in sigmas:
        if not s > 0:
            raise ValueError(f"inverse-variance weighting needs every sigma > 0, got {s}")
    precisions = [1.0 / (s * s) for s in sigmas]
    total = sum(precisions)
    return [p / total for p in precisions]


def composite_score(
    summaries: Sequence[ThemeSummary],
    specs: Sequence[ThemeSpec] | None = None,
    weighting: str = "spec",
) -> tuple[float, CompositeWeights]:
    """Precision-weighted mean of the theme means.

    ``weighting="spec"`` takes sigma from the generating ``ThemeSpec`` (matched
    by theme name), so the weights do not depend on the draw.
    ``weighting="sample"`` uses each summary's realized std instead.
    """
    if not summaries:
        raise ValueError("need at least one theme summary")
    if weighting == "spec":
        if specs is None:
            raise ValueError("spec weighting needs the ThemeSpecs")
        by_name = {s.name: s for s in specs}
        missing = [t.theme for t in summaries if t.theme not in by_name]
        if missing:
            raise ValueError(f"no ThemeSpec for theme(s): {', '.join(missing)}")
        sigmas = [by_name[t.theme].std for t in summaries]
    elif weighting == "sample":
        sigmas = [t.std for t in summaries]
    else:
        raise ValueError(f"unknown weighting {weighting!r}; use 'spec' or 'sample'")
    weights = inverse_variance_weights(sigmas)
    score = sum(w * t.mean for w, t in zip(weights, summaries))
    return score, CompositeWeights(tuple(t.theme for t in summaries), tuple(weights))
