"""Column features along the head-line, segmentation weightage and cut strips.

Each of the six features scores a word column in [0, 1], where 1 means "this
column looks like bare head-line between two characters":

1. little ink in the body rows (r2 and r3 minus the head-line band)
2. little ink above the head-line in r1
3. few stroke crossings through the body
4. head-line thickness close to the word's typical thickness
5. a single clean run inside the head-line band
6. every ink pixel of the column sits inside the head-line band
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import BoundsError, ParameterError
from .raster import BinaryImage, erase
from .word import HeadlineBand, RegionBands

__all__ = [
    "FEATURE_NAMES",
    "FeatureMatrix",
    "WeightProfile",
    "CutStrip",
    "compute_features",
    "weightage",
    "find_cut_strips",
    "apply_cuts",
    "interior_strips",
    "strip_cut_positions",
    "normalize_alphas",
]

FEATURE_NAMES = (
    "body_density",
    "ascender_density",
    "body_crossings",
    "headline_thickness",
    "headline_runs",
    "headline_only",
)

UNIFORM_ALPHAS = (1 / 6,) * 6


@dataclass(frozen=True, eq=False)
class FeatureMatrix:
    """``values[c, i]`` is feature ``i + 1`` at word column ``c``."""

    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=np.float64)
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def n_columns(self) -> int:
        return self.values.shape[0]

    def feature(self, i: int) -> np.ndarray:
        """Feature ``i`` numbered from 1."""
        return self.values[:, i - 1]


@dataclass(frozen=True, eq=False)
class WeightProfile:
    weights: np.ndarray
    alphas: tuple[float, ...]

    def __post_init__(self):
        weights = np.array(self.weights, dtype=np.float64)
        weights.setflags(write=False)
        object.__setattr__(self, "weights", weights)

    def __len__(self):
        return len(self.weights)


@dataclass(frozen=True)
class CutStrip:
    left: int
    right: int
    peak_col: int
    peak_weight: float

    @property
    def col_range(self) -> tuple[int, int]:
        return (self.left, self.right)

    @property
    def width(self) -> int:
        return self.right - self.left + 1

    @property
    def center(self) -> int:
        return (self.left + self.right) // 2


def _longest_true_run(mask: np.ndarray) -> np.ndarray:
    """Longest run of True down each column of a 2-D mask."""
    run = np.zeros(mask.shape[1], dtype=np.int64)
    best = np.zeros(mask.shape[1], dtype=np.int64)
    for row in mask:
        run = np.where(row, run + 1, 0)
        np.maximum(best, run, out=best)
    return best


def _run_count(mask: np.ndarray) -> np.ndarray:
    """Number of maximal True runs down each column of a 2-D mask."""
    if mask.shape[0] == 0:
        return np.zeros(mask.shape[1], dtype=np.int64)
    starts = mask[0].astype(np.int64) + (mask[1:] & ~mask[:-1]).sum(axis=0)
    return starts


def compute_features(word_img: BinaryImage, regions: RegionBands, headline: HeadlineBand) -> FeatureMatrix:
    """Per-column values of the six head-line cut features."""
    ink = word_img.ink
    height, width = ink.shape
    rows = np.arange(height)
    in_band = (rows >= headline.top) & (rows <= headline.bottom)
    body = (rows >= regions.r2[0]) & (rows <= regions.r3[1]) & ~in_band
    above = (rows >= regions.r1[0]) & (rows <= regions.r1[1]) & ~in_band

    body_ink = ink[body]
    body_count = body_ink.sum(axis=0)
    f1 = 1.0 - np.minimum(1.0, body_count / max(1, int(body.sum())))

    above_count = ink[above].sum(axis=0)
    f2 = 1.0 - np.minimum(1.0, above_count / max(1, int(above.sum())))

    crossings = _run_count(body_ink)
    f3 = np.where(crossings == 0, 1.0, 1.0 / (1.0 + crossings))

    band_ink = ink[in_band]
    thickness = _longest_true_run(band_ink)
    inked = thickness[thickness > 0]
    typical = float(np.median(inked)) if inked.size else 0.0
    f4 = 1.0 - np.minimum(1.0, np.abs(thickness - typical) / max(1.0, typical))

    band_runs = _run_count(band_ink)
    f5 = np.where(band_runs == 0, 0.0, 1.0 / np.maximum(band_runs, 1))

    total = ink.sum(axis=0)
    f6 = ((total > 0) & (band_ink.sum(axis=0) == total)).astype(np.float64)

    return FeatureMatrix(np.column_stack((f1, f2, f3, f4, f5, f6)))


def normalize_alphas(alphas) -> tuple[float, ...]:
    a = np.asarray(alphas, dtype=np.float64).ravel()
    if a.size != 6:
        raise ParameterError(f"expected six feature weights, got {a.size}")
    if not np.all(np.isfinite(a)) or np.any(a < 0):
        raise ParameterError("feature weights must be finite and non-negative")
    total = a.sum()
    if total <= 0:
        raise ParameterError("feature weights must not all be zero")
    return tuple(float(v) for v in a / total)


def weightage(features: FeatureMatrix, alphas=UNIFORM_ALPHAS) -> WeightProfile:
    """Convex mix of the six features per column."""
    alphas = normalize_alphas(alphas)
    weights = features.values @ np.asarray(alphas)
    return WeightProfile(np.clip(weights, 0.0, 1.0), alphas)


def find_cut_strips(weights, delta: float = 0.85, min_strip: int = 2) -> list[CutStrip]:
    """Maximal column runs with weight strictly above ``delta``.

    Runs narrower than ``min_strip`` are dropped.  The peak is the leftmost
    column of maximal weight.
    """
    if not 0.0 <= delta <= 1.0:
        raise ParameterError(f"delta must lie in [0, 1], got {delta}")
    if isinstance(min_strip, bool) or int(min_strip) != min_strip or min_strip < 1:
        raise ParameterError(f"min_strip must be an integer >= 1, got {min_strip!r}")
    w = np.asarray(getattr(weights, "weights", weights), dtype=np.float64)
    above = np.concatenate(([False], w > delta, [False]))
    edges = np.flatnonzero(above[1:] != above[:-1])
    strips = []
    for start, stop in zip(edges[::2], edges[1::2]):
        if stop - start < min_strip:
            continue
        peak = int(start + np.argmax(w[start:stop]))
        strips.append(CutStrip(int(start), int(stop - 1), peak, float(w[peak])))
    return strips


def interior_strips(word_img: BinaryImage, strips: list[CutStrip]) -> list[CutStrip]:
    """Strips with ink on both sides; a strip at the word's edge separates nothing."""
    cols = np.flatnonzero(word_img.ink.any(axis=0))
    if cols.size == 0:
        return []
    first, last = cols[0], cols[-1]
    return [s for s in strips if s.left > first and s.right < last]


def strip_cut_positions(strips: list[CutStrip]) -> list[int]:
    return [s.center for s in strips]


def apply_cuts(word_img: BinaryImage, strips: list[CutStrip], headline: HeadlineBand) -> BinaryImage:
    """Erase the head-line band inside every strip; nothing else changes."""
    if not strips:
        return word_img
    for s in strips:
        if not 0 <= s.left <= s.right < word_img.width:
            raise BoundsError(f"strip {s.col_range} outside word of width {word_img.width}")
    if not 0 <= headline.top <= headline.bottom < word_img.height:
        raise BoundsError(f"head-line rows {headline.rows} outside word of height {word_img.height}")
    region = np.zeros(word_img.shape, dtype=bool)
    for s in strips:
        region[headline.top : headline.bottom + 1, s.left : s.right + 1] = True
    return erase(word_img, region)
