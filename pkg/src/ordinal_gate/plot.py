"""Histogram vs. sine continuity proxy, with tangent lines.

The sine proxy maps the Likert range [1, 5] onto [0, pi]:
``f(x) = sin(pi (x - 1) / 4)`` with derivative ``(pi / 4) cos(pi (x - 1) / 4)``.
Output is plain CSV plus a hand-written SVG so the bytes are reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence
from xml.sax.saxutils import escape

from . import rng
from .simulate import SampleSet

TANGENT_POINTS = (2.0, 3.0, 4.0)
TANGENT_COLORS = ("darkgreen", "darkorange", "purple")

# Figure source as coded for the plot: unclipped N(4.1, 0.27), seed 42
FIGURE_MEAN = 4.1
FIGURE_STD = 0.27
FIGURE_N = 10000
FIGURE_SEED = 42


def kant_curve(x: float) -> float:
    # sin(pi (x-1)/4) == sin(pi (5-x)/4); reflect so the argument stays in
    # [0, pi/2] on the plotted range, where sin keeps full accuracy near 0
    if x > 3:
        return math.sin(math.pi * (5 - x) / 4)
    return math.sin(math.pi * (x - 1) / 4)


def kant_slope(x: float) -> float:
    # (pi/4) cos(pi (x-1)/4) written as a sine so the zero at x = 3 is exact
    return (math.pi / 4) * math.sin(math.pi * (3 - x) / 4)


def tangent_line(x0: float) -> tuple[float, float]:
    """(slope, intercept) of the tangent to ``kant_curve`` at ``x0``."""
    slope = kant_slope(x0)
    return slope, kant_curve(x0) - slope * x0


def linspace(start: float, stop: float, num: int) -> list[float]:
    """Same values as ``numpy.linspace`` for num >= 2 (last point pinned to stop)."""
    if num < 2:
        return [float(start)][:num]
    step = (stop - start) / (num - 1)
    xs = [start + i * step for i in range(num)]
    xs[-1] = float(stop)
    return xs


@dataclass(frozen=True)
class HistogramSpec:
    source: SampleSet
    bins: int = 50
    density_normalized: bool = True

    def __post_init__(self):
        if self.bins < 1:
            raise ValueError(f"bins must be >= 1, got {self.bins}")


@dataclass(frozen=True)
class Histogram:
    edges: tuple[float, ...]
    counts: tuple[int, ...]
    heights: tuple[float, ...]

    @property
    def widths(self) -> list[float]:
        return [b - a for a, b in zip(self.edges, self.edges[1:])]

    @property
    def centers(self) -> list[float]:
        return [(a + b) / 2 for a, b in zip(self.edges, self.edges[1:])]

    def mass(self) -> float:
        return math.fsum(h * w for h, w in zip(self.heights, self.widths))


def build_histogram(spec: HistogramSpec) -> Histogram:
    """Equal-width bins over [min, max]; binning matches ``numpy.histogram``.

    The last bin is closed on the right. A constant sample gets the range
    (v - 0.5, v + 0.5) as numpy does.
    """
    xs = spec.source.values
    if not xs:
        raise ValueError(f"cannot build a histogram of empty sample {spec.source.theme!r}")
    lo, hi = min(xs), max(xs)
    if lo == hi:
        lo, hi = lo - 0.5, hi + 0.5
    nb = spec.bins
    edges = linspace(lo, hi, nb + 1)
    span = hi - lo
    counts = [0] * nb
    for x in xs:
        i = int((x - lo) / span * nb)
        if i == nb:
            i -= 1
        # floating-point index can land one bin off; settle against the edges
        if x < edges[i]:
            i -= 1
        elif i != nb - 1 and x >= edges[i + 1]:
            i += 1
        counts[i] += 1
    if spec.density_normalized:
        n = len(xs)
        heights = [c / n / (b - a) for c, a, b in zip(counts, edges, edges[1:])]
    else:
        heights = [float(c) for c in counts]
    return Histogram(tuple(edges), tuple(counts), tuple(heights))


@dataclass(frozen=True)
class CurveSeries:
    xs: tuple[float, ...]
    ys: tuple[float, ...]
    tangents: tuple[tuple[float, float, float], ...]  # (x0, slope, intercept)

    def tangent_values(self, x0: float) -> list[float]:
        for t, m, b in self.tangents:
            if t == x0:
                return [m * x + b for x in self.xs]
        raise KeyError(x0)


def build_curve(num: int = 1000, points: Sequence[float] = TANGENT_POINTS) -> CurveSeries:
    xs = linspace(1.0, 5.0, num)
    tangents = tuple((x0, *tangent_line(x0)) for x0 in points)
    return CurveSeries(tuple(xs), tuple(kant_curve(x) for x in xs), tangents)


def figure_source(seed: int = FIGURE_SEED, n: int = FIGURE_N) -> SampleSet:
    state = rng.seed_scalar(seed)
    return SampleSet("figure3", rng.normals(state, FIGURE_MEAN, FIGURE_STD, n))


@dataclass(frozen=True)
class PlotBundle:
    histogram: Histogram
    curve: CurveSeries
    source_name: str = "figure3"
    title: str = "Monte Carlo vs. Kantian Continuity"
    x_label: str = "Simulated Success Score (Likert 1-5)"
    y_label: str = "Density / Value"


def build_bundle(source: SampleSet, bins: int = 50) -> PlotBundle:
    hist = build_histogram(HistogramSpec(source, bins, True))
    return PlotBundle(hist, build_curve(), source.theme)


# -- output ------------------------------------------------------------------

WIDTH, HEIGHT = 900, 540
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 70, 20, 50, 60


class PlotOutputError(OSError):
    pass


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _ticks(lo: float, hi: float, step: float) -> list[float]:
    start = math.ceil(lo / step - 1e-9)
    stop = math.floor(hi / step + 1e-9)
    return [k * step for k in range(start, stop + 1)]


def render_svg(bundle: PlotBundle) -> str:
    hist, curve = bundle.histogram, bundle.curve
    tangent_series = [(x0, curve.tangent_values(x0)) for x0, _, _ in curve.tangents]

    x_lo = min(curve.xs[0], hist.edges[0])
    x_hi = max(curve.xs[-1], hist.edges[-1])
    y_all = [0.0, *hist.heights, *curve.ys]
    for _, ys in tangent_series:
        y_all.extend(ys)
    y_lo, y_hi = min(y_all), max(y_all)
    # 5% padding, like matplotlib's autoscale margins
    xpad, ypad = 0.05 * (x_hi - x_lo), 0.05 * (y_hi - y_lo)
    x_lo, x_hi, y_lo, y_hi = x_lo - xpad, x_hi + xpad, y_lo - ypad, y_hi + ypad

    pw = WIDTH - MARGIN_L - MARGIN_R
    ph = HEIGHT - MARGIN_T - MARGIN_B

    def px(x):
        return MARGIN_L + (x - x_lo) / (x_hi - x_lo) * pw

    def py(y):
        return MARGIN_T + ph - (y - y_lo) / (y_hi - y_lo) * ph

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<defs><clipPath id="plot-area"><rect x="{MARGIN_L}" y="{MARGIN_T}" width="{pw}" height="{ph}"/></clipPath></defs>',
    ]

    out.append('<g class="grid" stroke="#dddddd" stroke-width="1">')
    for t in _ticks(x_lo, x_hi, 0.5):
        out.append(f'<line x1="{_fmt(px(t))}" y1="{MARGIN_T}" x2="{_fmt(px(t))}" y2="{MARGIN_T + ph}"/>')
    for t in _ticks(y_lo, y_hi, 0.5):
        out.append(f'<line x1="{MARGIN_L}" y1="{_fmt(py(t))}" x2="{MARGIN_L + pw}" y2="{_fmt(py(t))}"/>')
    out.append("</g>")

    out.append('<g class="histogram" fill="skyblue" fill-opacity="0.6" clip-path="url(#plot-area)">')
    base = py(0.0)
    for (a, b), h in zip(zip(hist.edges, hist.edges[1:]), hist.heights):
        top = py(h)
        out.append(
            f'<rect x="{_fmt(px(a))}" y="{_fmt(top)}" width="{_fmt(px(b) - px(a))}" height="{_fmt(base - top)}"/>'
        )
    out.append("</g>")

    def path(xs, ys):
        pts = " ".join(f"{_fmt(px(x))},{_fmt(py(y))}" for x, y in zip(xs, ys))
        return f"M {pts}" if pts else ""

    out.append(
        f'<path class="curve" d="{path(curve.xs, curve.ys)}" fill="none" stroke="darkred" '
        f'stroke-width="2.2" clip-path="url(#plot-area)"/>'
    )
    for (x0, ys), color in zip(tangent_series, TANGENT_COLORS):
        out.append(
            f'<path class="tangent" data-x0="{x0:g}" d="{path(curve.xs, ys)}" fill="none" stroke="{color}" '
            f'stroke-width="1.5" stroke-dasharray="6,4" clip-path="url(#plot-area)"/>'
        )

    out.append(
        f'<rect x="{MARGIN_L}" y="{MARGIN_T}" width="{pw}" height="{ph}" fill="none" stroke="black"/>'
    )
    for t in _ticks(x_lo, x_hi, 0.5):
        out.append(
            f'<text x="{_fmt(px(t))}" y="{MARGIN_T + ph + 18}" font-size="11" text-anchor="middle">{t:g}</text>'
        )
    for t in _ticks(y_lo, y_hi, 0.5):
        out.append(
            f'<text x="{MARGIN_L - 6}" y="{_fmt(py(t) + 4)}" font-size="11" text-anchor="end">{t:g}</text>'
        )
    out.append(
        f'<text x="{WIDTH / 2:g}" y="30" font-size="16" text-anchor="middle">{escape(bundle.title)}</text>'
    )
    out.append(
        f'<text x="{MARGIN_L + pw / 2:g}" y="{HEIGHT - 15}" font-size="13" text-anchor="middle">'
        f"{escape(bundle.x_label)}</text>"
    )
    out.append(
        f'<text x="18" y="{MARGIN_T + ph / 2:g}" font-size="13" text-anchor="middle" '
        f'transform="rotate(-90 18 {MARGIN_T + ph / 2:g})">{escape(bundle.y_label)}</text>'
    )

    entries = [
        ("rect", "skyblue", "Monte Carlo Distribution"),
        ("line", "darkred", "Kantian Curve: f(x)=sin(π(x−1)/4)"),
    ] + [("dash", c, f"Tangent at x={x0:g}") for (x0, _, _), c in zip(curve.tangents, TANGENT_COLORS)]
    lx, ly = MARGIN_L + pw // 2 - 125, MARGIN_T + 10
    out.append(
        f'<rect class="legend" x="{lx}" y="{ly}" width="250" height="{18 * len(entries) + 8}" '
        f'fill="white" fill-opacity="0.8" stroke="#bbbbbb"/>'
    )
    for i, (shape, color, label) in enumerate(entries):
        y = ly + 16 + 18 * i
        if shape == "rect":
            out.append(f'<rect x="{lx + 8}" y="{y - 8}" width="22" height="10" fill="{color}" fill-opacity="0.6"/>')
        else:
            dash = ' stroke-dasharray="6,4"' if shape == "dash" else ""
            out.append(f'<line x1="{lx + 8}" y1="{y - 3}" x2="{lx + 30}" y2="{y - 3}" stroke="{color}" stroke-width="2"{dash}/>')
        out.append(f'<text x="{lx + 38}" y="{y + 1}" font-size="12">{escape(label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _xy_csv(xs: Sequence[float], ys: Sequence[float]) -> str:
    return "x,y\n" + "".join(f"{x!r},{y!r}\n" for x, y in zip(xs, ys))


def series_csvs(bundle: PlotBundle) -> dict[str, str]:
    """CSV text per series, keyed by file suffix."""
    curve = bundle.curve
    out = {
        "histogram": _xy_csv(bundle.histogram.centers, bundle.histogram.heights),
        "curve": _xy_csv(curve.xs, curve.ys),
    }
    for x0, _, _ in curve.tangents:
        out[f"tangent_x{x0:g}"] = _xy_csv(curve.xs, curve.tangent_values(x0))
    return out


def _write(path: Path, text: str) -> None:
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as e:
        raise PlotOutputError(f"cannot write {path}: {e.strerror or e}") from e


def emit_plot(bundle: PlotBundle, out: str | Path) -> list[Path]:
    """Write ``out`` (SVG) and ``<stem>_<series>.csv`` next to it; return all paths."""
    out = Path(out)
    if out.suffix.lower() != ".svg":
        out = out.with_suffix(".svg")
    written = [out]
    _write(out, render_svg(bundle))
    for name, text in series_csvs(bundle).items():
        p = out.with_name(f"{out.stem}_{name}.csv")
        _write(p, text)
        written.append(p)
    return written
