"""Four-band format analysis of a word and head-line (matra) estimation."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import HeadlineNotFoundError, ParameterError
from .raster import BinaryImage

__all__ = ["RegionBands", "HeadlineBand", "format_regions", "estimate_headline"]

# rows whose count is within this of w * MAX still qualify (0.7 * 20 is not exactly 14.0)
_EPS = 1e-9


@dataclass(frozen=True)
class RegionBands:
    """Four inclusive row ranges, top to bottom, in word coordinates.

    ``r1`` holds ascendants, ``r2``/``r3`` the character body, ``r4``
    descendants.
    """

    r1: tuple[int, int]
    r2: tuple[int, int]
    r3: tuple[int, int]
    r4: tuple[int, int]

    @property
    def bands(self) -> tuple[tuple[int, int], ...]:
        return (self.r1, self.r2, self.r3, self.r4)

    @property
    def heights(self) -> list[int]:
        return [b - t + 1 for t, b in self.bands]

    @property
    def height(self) -> int:
        return self.r4[1] + 1


@dataclass(frozen=True)
class HeadlineBand:
    top: int
    bottom: int
    max_row: int
    max_count: int
    w: float

    @property
    def rows(self) -> tuple[int, int]:
        return (self.top, self.bottom)

    @property
    def thickness(self) -> int:
        return self.bottom - self.top + 1

    def __contains__(self, row) -> bool:
        return self.top <= row <= self.bottom


def format_regions(word) -> RegionBands:
    """Split a word's rows into four near-equal horizontal bands.

    ``word`` may be a height, a :class:`BinaryImage`, or anything with a
    ``height`` attribute.  Remainder rows go to the topmost bands.  Words
    shorter than four rows cannot have four disjoint non-empty bands, so
    band ``i`` then collapses to the row holding the bottom of quartile
    ``i``: heights 2 and 3 give rows ``0,0,1,1`` and ``0,1,2,2``.
    """
    height = word if isinstance(word, (int, np.integer)) else word.height
    height = int(height)
    if height < 1:
        raise ParameterError(f"word height must be positive, got {height}")
    if height < 4:
        rows = [-(-(i + 1) * height // 4) - 1 for i in range(4)]
        return RegionBands(*((r, r) for r in rows))
    base, extra = divmod(height, 4)
    bands, top = [], 0
    for i in range(4):
        h = base + (1 if i < extra else 0)
        bands.append((top, top + h - 1))
        top += h
    return RegionBands(*bands)


def estimate_headline(word_img: BinaryImage, regions: RegionBands | None = None, w: float = 0.7) -> HeadlineBand:
    """Locate the head-line band of a word.

    The densest row of the upper half (``r1`` and ``r2``) is the peak, with
    ties going to the lowest such row.  The band then grows up and down
    through rows holding at least ``w`` times the peak count.  It may not
    leave the upper half except by a single row into ``r3``, and that row
    must not outweigh the peak.
    """
    if not 0.0 <= w <= 1.0:
        raise ParameterError(f"w must lie in [0, 1], got {w}")
    regions = regions or format_regions(word_img)
    counts = word_img.ink.sum(axis=1)
    upper_end = regions.r2[1]
    upper = counts[: upper_end + 1]
    max_count = int(upper.max()) if upper.size else 0
    if max_count == 0:
        raise HeadlineNotFoundError("no ink in the upper two format regions")
    max_row = int(np.flatnonzero(upper == max_count)[-1])
    floor = w * max_count - _EPS
    lo_limit = regions.r1[0]
    hi_limit = max(upper_end, min(regions.r3[0], word_img.height - 1))
    top = max_row
    while top - 1 >= lo_limit and counts[top - 1] >= floor:
        top -= 1
    bottom = max_row
    # the r3 row is measured against a MAX it did not take part in; it may not exceed it
    while bottom + 1 <= hi_limit and floor <= counts[bottom + 1] <= max_count:
        bottom += 1
    return HeadlineBand(top, bottom, max_row, max_count, float(w))
