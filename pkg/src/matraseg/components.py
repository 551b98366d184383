"""Isolation of preliminary segments and their geometric classification."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, replace

import numpy as np

from .exceptions import HeadlineNotFoundError, ParameterError
from .headline import (
    UNIFORM_ALPHAS,
    CutStrip,
    FeatureMatrix,
    WeightProfile,
    apply_cuts,
    compute_features,
    find_cut_strips,
    interior_strips,
    normalize_alphas,
    weightage,
)
from .raster import BinaryImage, Component, Rect, connected_components
from .word import HeadlineBand, RegionBands, estimate_headline, format_regions

__all__ = [
    "SegmentClass",
    "Segment",
    "WordParams",
    "WordAnalysis",
    "default_noise_area",
    "label_segments",
    "classify_segment",
    "reunify",
    "analyze_word",
    "segment_word",
]

HEADLINE_FRAGMENT_SHARE = 0.9


class SegmentClass(str, enum.Enum):
    MAIN_BODY = "main_body"
    ASCENDANT = "ascendant"
    DESCENDANT = "descendant"
    HEADLINE_FRAGMENT = "headline_fragment"
    NOISE = "noise"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Segment:
    component: Component
    cls: SegmentClass
    attached_to: int | None = None

    @property
    def bbox(self) -> Rect:
        return self.component.bbox

    @property
    def col_span(self) -> tuple[int, int]:
        return (self.component.bbox.x0, self.component.bbox.x1)


@dataclass(frozen=True)
class WordParams:
    """Tuning knobs for the per-word stages.  ``noise_area=None`` scales with word size."""

    w: float = 0.7
    delta: float = 0.85
    alphas: tuple[float, ...] = UNIFORM_ALPHAS
    min_strip: int = 2
    noise_area: int | None = None
    overlap_frac: float = 0.5

    def __post_init__(self):
        if not 0.0 <= self.w <= 1.0:
            raise ParameterError(f"w must lie in [0, 1], got {self.w}")
        if not 0.0 <= self.delta <= 1.0:
            raise ParameterError(f"delta must lie in [0, 1], got {self.delta}")
        if not 0.0 <= self.overlap_frac <= 1.0:
            raise ParameterError(f"overlap_frac must lie in [0, 1], got {self.overlap_frac}")
        if self.min_strip < 1:
            raise ParameterError(f"min_strip must be >= 1, got {self.min_strip}")
        if self.noise_area is not None and self.noise_area < 0:
            raise ParameterError(f"noise_area must be >= 0, got {self.noise_area}")
        object.__setattr__(self, "alphas", normalize_alphas(self.alphas))


def default_noise_area(word_width: int, word_height: int) -> int:
    return max(4, math.ceil(0.0005 * word_width * word_height))


def label_segments(cut_img: BinaryImage) -> list[Component]:
    return connected_components(cut_img, "eight")


def _region_counts(ys: np.ndarray, regions: RegionBands) -> tuple[int, int, int]:
    # bands of words under four rows overlap; a pixel counts once, top band first
    ascender = ys <= regions.r1[1]
    descender = (ys >= regions.r4[0]) & ~ascender
    n_asc, n_desc = int(ascender.sum()), int(descender.sum())
    return n_asc, len(ys) - n_asc - n_desc, n_desc


def classify_segment(
    comp: Component,
    regions: RegionBands,
    headline: HeadlineBand | None,
    noise_area: int = 4,
) -> SegmentClass:
    """Class of a segment from where its pixels fall among the format bands.

    Pixels inside the head-line band are left out of the plurality vote, and
    a piece touching the band is never a descendant.  Ties go to main_body,
    then ascendant.
    """
    if comp.area < noise_area:
        return SegmentClass.NOISE
    ys = comp.ys
    hangs = False
    if headline is not None:
        in_band = (ys >= headline.top) & (ys <= headline.bottom)
        n_band = int(np.count_nonzero(in_band))
        if n_band >= HEADLINE_FRAGMENT_SHARE * comp.area:
            return SegmentClass.HEADLINE_FRAGMENT
        # every character carries a slice of head-line; it says nothing about the class
        ys = ys[~in_band]
        hangs = n_band > 0
    ascender, body, descender = _region_counts(ys, regions)
    if body >= ascender and body >= descender:
        return SegmentClass.MAIN_BODY
    if ascender >= descender:
        return SegmentClass.ASCENDANT
    # a descendant sits below its character, so it cannot hang from the head-line
    return SegmentClass.MAIN_BODY if hangs else SegmentClass.DESCENDANT


def _overlap(a: tuple[int, int], b: tuple[int, int]) -> int:
    return max(0, min(a[1], b[1]) - max(a[0], b[0]) + 1)


def reunify(segments: list[Segment], overlap_frac: float = 0.5) -> list[Segment]:
    """Attach each non-main, non-noise segment to the main segment it sits over.

    A candidate must share at least ``overlap_frac`` of the segment's own
    column width (and at least one column).  Largest overlap wins; ties go
    to the leftmost main segment.  Pixels are never merged.
    """
    if not 0.0 <= overlap_frac <= 1.0:
        raise ParameterError(f"overlap_frac must lie in [0, 1], got {overlap_frac}")
    mains = [
        (i, s.col_span) for i, s in enumerate(segments) if s.cls is SegmentClass.MAIN_BODY
    ]
    mains.sort(key=lambda m: (m[1][0], m[0]))
    out = []
    for seg in segments:
        if seg.cls in (SegmentClass.MAIN_BODY, SegmentClass.NOISE):
            out.append(replace(seg, attached_to=None))
            continue
        span = seg.col_span
        need = overlap_frac * (span[1] - span[0] + 1)
        best, best_overlap = None, 0
        for idx, main_span in mains:
            ov = _overlap(span, main_span)
            if ov > 0 and ov >= need and ov > best_overlap:
                best, best_overlap = idx, ov
        out.append(replace(seg, attached_to=best))
    return out


@dataclass(frozen=True, eq=False)
class WordAnalysis:
    """Every intermediate product of segmenting one word image."""

    image: BinaryImage
    regions: RegionBands
    headline: HeadlineBand | None
    features: FeatureMatrix | None = None
    weights: WeightProfile | None = None
    strips: list[CutStrip] = field(default_factory=list)
    cuts: list[CutStrip] = field(default_factory=list)
    cut_image: BinaryImage | None = None
    segments: list[Segment] = field(default_factory=list)

    @property
    def cut_positions(self) -> list[int]:
        return [s.center for s in self.cuts]


def _sort_key(comp: Component):
    return (comp.bbox.x0, comp.bbox.y0, comp.label)


def analyze_word(word_img: BinaryImage, params: WordParams | None = None) -> WordAnalysis:
    """Run the full per-word pipeline and keep every intermediate.

    Features, weightage and strips are computed over all columns; only
    strips with ink on both sides are applied as cuts.  A word without a
    detectable head-line comes back as one main_body segment.
    """
    params = params or WordParams()
    regions = format_regions(word_img)
    if word_img.count() == 0:
        return WordAnalysis(word_img, regions, None, cut_image=word_img)
    try:
        headline = estimate_headline(word_img, regions, params.w)
    except HeadlineNotFoundError:
        ys, xs = np.nonzero(word_img.ink)
        whole = Component(1, Rect(int(xs.min()), int(ys.min()), int(xs.max()), int(ys.max())),
                          np.column_stack((xs, ys)))
        return WordAnalysis(word_img, regions, None, cut_image=word_img,
                            segments=[Segment(whole, SegmentClass.MAIN_BODY)])

    features = compute_features(word_img, regions, headline)
    weights = weightage(features, params.alphas)
    strips = find_cut_strips(weights, params.delta, params.min_strip)
    cuts = interior_strips(word_img, strips)
    cut_img = apply_cuts(word_img, cuts, headline)

    noise_area = params.noise_area
    if noise_area is None:
        noise_area = default_noise_area(word_img.width, word_img.height)
    comps = sorted(label_segments(cut_img), key=_sort_key)
    segments = [Segment(c, classify_segment(c, regions, headline, noise_area)) for c in comps]
    segments = reunify(segments, params.overlap_frac)
    return WordAnalysis(word_img, regions, headline, features, weights, strips, cuts, cut_img, segments)


def segment_word(word_img: BinaryImage, params: WordParams | None = None) -> list[Segment]:
    """Segments of one word, sorted by left edge."""
    return analyze_word(word_img, params).segments
