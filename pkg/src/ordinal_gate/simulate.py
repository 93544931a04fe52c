"""Theme-level Likert score generation and the CSV dataset format."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from . import rng


@dataclass(frozen=True)
class ThemeSpec:
    name: str
    mean: float
    std: float

    def __post_init__(self):
        if not math.isfinite(self.mean):
            raise ValueError(f"theme {self.name!r}: mean must be finite")
        if not (math.isfinite(self.std) and self.std >= 0):
            raise ValueError(f"theme {self.name!r}: std must be finite and >= 0")


DEFAULT_THEMES = (
    ThemeSpec("Ease of Use & Learnability", 4.1169, 0.2709),
    ThemeSpec("System Efficiency & Learning Burden", 4.1240, 0.0910),
    ThemeSpec("Perceived Complexity & Integration", 3.7100, 0.2160),
)


@dataclass(frozen=True)
class SimulationConfig:
    themes: tuple[ThemeSpec, ...] = DEFAULT_THEMES
    n: int = 10000
    seed: int = 42
    lo: float = 1.0
    hi: float = 5.0
    decimals: int = 4

    def __post_init__(self):
        object.__setattr__(self, "themes", tuple(self.themes))
        if not self.themes:
            raise ValueError("at least one theme is required")
        if len({t.name for t in self.themes}) != len(self.themes):
            raise ValueError("theme names must be unique")
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if not 0 <= self.seed <= rng.MASK_32:
            raise ValueError(f"seed must be a 32-bit unsigned integer, got {self.seed}")
        if not self.lo < self.hi:
            raise ValueError(f"need lo < hi, got [{self.lo}, {self.hi}]")
        if self.decimals < 0:
            raise ValueError(f"decimals must be >= 0, got {self.decimals}")


@dataclass(frozen=True)
class SampleSet:
    """Scores for one theme, kept in generation order."""

    theme: str
    values: tuple[float, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


def clip(x: float, lo: float, hi: float) -> float:
    return min(hi, max(lo, x))


def round_half_even(x: float, decimals: int) -> float:
    """Round the way numpy's ``ndarray.round`` does.

    The scaled value ``x * 10**decimals`` is rounded to the nearest integer
    with ties to even, then divided back. This works on the binary double,
    not on its decimal expansion.
    """
    if decimals < 0:
        raise ValueError(f"decimals must be >= 0, got {decimals}")
    scale = 10.0**decimals
    return round(x * scale) / scale


def run_simulation(config: SimulationConfig = SimulationConfig()) -> list[SampleSet]:
    state = rng.seed_scalar(config.seed)
    samples = []
    # theme-major: every draw for one theme precedes the next theme's
    for theme in config.themes:
        raw = rng.normals(state, theme.mean, theme.std, config.n)
        values = [round_half_even(clip(x, config.lo, config.hi), config.decimals) for x in raw]
        samples.append(SampleSet(theme.name, values))
    return samples


class DatasetError(ValueError):
    """Malformed dataset CSV; the message names the offending row/column."""


def format_dataset(samples: Sequence[SampleSet], decimals: int = 4) -> str:
    if not samples:
        raise ValueError("no samples to write")
    n = len(samples[0])
    if any(len(s) != n for s in samples):
        raise ValueError("all samples must have the same length")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["ID", *(s.theme for s in samples)])
    for i in range(n):
        writer.writerow([i, *(f"{s.values[i]:.{decimals}f}" for s in samples)])
    return buf.getvalue()


def write_dataset(path: str | Path, samples: Sequence[SampleSet], decimals: int = 4) -> None:
    Path(path).write_text(format_dataset(samples, decimals), encoding="utf-8")


def parse_dataset(lines: Iterable[str]) -> list[SampleSet]:
    reader = csv.reader(lines)
    header = next(reader, None)
    if not header:
        raise DatasetError("row 0: missing header")
    if header[0] != "ID":
        raise DatasetError(f"row 0, column 1: expected 'ID', found {header[0]!r}")
    themes = header[1:]
    if not themes:
        raise DatasetError("row 0: no theme columns")
    columns: list[list[float]] = [[] for _ in themes]
    for rownum, row in enumerate(reader, start=1):
        if not row:
            continue
        if len(row) != len(header):
            raise DatasetError(f"row {rownum}: expected {len(header)} fields, found {len(row)}")
        for j, cell in enumerate(row[1:]):
            try:
                v = float(cell)
            except ValueError:
                raise DatasetError(
                    f"row {rownum}, column {themes[j]!r}: not a number: {cell!r}"
                ) from None
            if not math.isfinite(v):
                raise DatasetError(f"row {rownum}, column {themes[j]!r}: non-finite value {cell!r}")
            columns[j].append(v)
    if not columns[0]:
        raise DatasetError("dataset has no data rows")
    return [SampleSet(t, c) for t, c in zip(themes, columns)]


def read_dataset(path: str | Path) -> list[SampleSet]:
    with open(path, newline="", encoding="utf-8") as fh:
        return parse_dataset(fh)


def format_head(samples: Sequence[SampleSet], rows: int = 10, decimals: int = 4) -> str:
    """Fixed-width preview of the first rows, one line per student."""
    widths = [max(len(s.theme), decimals + 3) for s in samples]
    idw = max(2, len(str(max(rows - 1, 0))))
    lines = ["ID".rjust(idw) + "  " + "  ".join(s.theme.rjust(w) for s, w in zip(samples, widths))]
    for i in range(min(rows, len(samples[0]))):
        cells = (f"{s.values[i]:.{decimals}f}".rjust(w) for s, w in zip(samples, widths))
        lines.append(str(i).rjust(idw) + "  " + "  ".join(cells))
    return "\n".join(lines)
