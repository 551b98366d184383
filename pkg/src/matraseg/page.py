"""Line and word dissection of a binarized page from its projection profiles."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.ndimage import maximum_filter1d

from .exceptions import ParameterError
from .raster import BinaryImage, Rect, _runs, horizontal_profile, vertical_profile

__all__ = [
    "LineBand",
    "WordBox",
    "PageParams",
    "PageSegmentation",
    "default_k1",
    "default_min_gap",
    "segment_lines",
    "segment_words",
    "segment_page",
]


@dataclass(frozen=True)
class LineBand:
    top: int
    bottom: int

    @property
    def row_range(self) -> tuple[int, int]:
        return (self.top, self.bottom)

    @property
    def height(self) -> int:
        return self.bottom - self.top + 1


@dataclass(frozen=True)
class WordBox:
    """A word's inclusive box in page coordinates, tightened to its ink."""

    line_index: int
    left: int
    right: int
    top: int
    bottom: int

    @property
    def col_range(self) -> tuple[int, int]:
        return (self.left, self.right)

    @property
    def row_range(self) -> tuple[int, int]:
        return (self.top, self.bottom)

    @property
    def rect(self) -> Rect:
        return Rect(self.left, self.top, self.right, self.bottom)

    @property
    def width(self) -> int:
        return self.right - self.left + 1

    @property
    def height(self) -> int:
        return self.bottom - self.top + 1


@dataclass(frozen=True)
class PageParams:
    """Thresholds for line/word dissection; ``None`` selects the size-derived default."""

    k1: int | None = None
    k2: int = 1
    min_gap: int | None = None
    smoothing: int = 1


@dataclass(frozen=True)
class PageSegmentation:
    lines: list[LineBand]
    words: list[WordBox]
    params: PageParams = field(default_factory=PageParams)

    def words_in_line(self, index: int) -> list[WordBox]:
        return [w for w in self.words if w.line_index == index]


def default_k1(page_width: int) -> int:
    return max(1, math.ceil(0.01 * page_width))


def default_min_gap(line_height: int) -> int:
    return max(3, math.ceil(0.25 * line_height))


def _check_int(name: str, value, low: int = 1) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < low:
        raise ParameterError(f"{name} must be an integer >= {low}, got {value!r}")
    return int(value)


def segment_lines(page: BinaryImage, k1: int | None = None, smoothing: int = 1) -> list[LineBand]:
    """Maximal row runs whose (optionally moving-max smoothed) ink count is >= ``k1``."""
    k1 = default_k1(page.width) if k1 is None else _check_int("k1", k1)
    smoothing = _check_int("smoothing", smoothing)
    if page.height == 0 or page.width == 0:
        return []
    counts = horizontal_profile(page).counts
    if smoothing > 1:
        counts = maximum_filter1d(counts, size=smoothing, mode="constant", cval=0)
    return [LineBand(s, s + n - 1) for s, n in _runs(counts >= k1)]


def segment_words(
    page: BinaryImage,
    line: LineBand,
    k2: int = 1,
    min_gap: int | None = None,
    line_index: int = 0,
) -> list[WordBox]:
    """Split one line band into words along columns whose count falls below ``k2``.

    Below-threshold gaps narrower than ``min_gap`` are bridged, so only wide
    gaps separate words.  Each box is then tightened to its ink rows.
    """
    k2 = _check_int("k2", k2)
    min_gap = default_min_gap(line.height) if min_gap is None else _check_int("min_gap", min_gap)
    band = Rect(0, line.top, page.width - 1, line.bottom)
    counts = vertical_profile(page, band).counts
    runs = _runs(counts >= k2)
    merged: list[list[int]] = []
    for start, length in runs:
        stop = start + length - 1
        if merged and start - merged[-1][1] - 1 < min_gap:
            merged[-1][1] = stop
        else:
            merged.append([start, stop])
    words = []
    for left, right in merged:
        window = page.ink[line.top : line.bottom + 1, left : right + 1]
        rows = np.flatnonzero(window.any(axis=1))
        if rows.size == 0:
            continue
        words.append(WordBox(line_index, left, right, line.top + int(rows[0]), line.top + int(rows[-1])))
    return words


def segment_page(page: BinaryImage, params: PageParams | None = None) -> PageSegmentation:
    """Lines by row profile, then words per line by column profile."""
    params = params or PageParams()
    lines = segment_lines(page, params.k1, params.smoothing)
    words = []
    for i, line in enumerate(lines):
        words.extend(segment_words(page, line, params.k2, params.min_gap, line_index=i))
    return PageSegmentation(lines, words, params)
