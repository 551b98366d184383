"""Deterministic synthetic handwriting with exact segmentation ground truth.

A word is a straight head-line bar with glyphs (stroke groups) hanging
from it.  Glyphs are separated by junction gaps, which are column stretches
where only the head-line has ink; the ideal cut is the centre of each gap.
Some glyphs get a loop above the head-line (an ascendant in region 1) or a
hook below the body (a descendant in region 4), always attached to the glyph
and within its columns.

Strokes are drawn with a square nib of ``pen`` pixels.  Every inked row of a
stroke therefore holds at least ``pen`` pixels, so a line's row profile never
dips below ``pen`` between its top and bottom.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..exceptions import ParameterError
from ..raster import BinaryImage, GrayImage
from .annotations import Annotations, CutAnnotation, HeadlineRecord, LineRecord, WordRecord

__all__ = ["SynthParams", "SynthWord", "SynthPage", "synth_word", "synth_page", "synth_corpus"]

GLYPH_KINDS = ("hook", "loop", "bowl", "slant")


@dataclass(frozen=True)
class SynthParams:
    """Generator settings.  Ranges are inclusive ``(low, high)`` integer pairs."""

    seed: int = 0
    count: int = 1
    glyphs_per_word: tuple[int, int] = (2, 5)
    pen_width: tuple[int, int] = (3, 4)
    headline_thickness: tuple[int, int] = (3, 5)
    body_height: tuple[int, int] = (22, 30)
    glyph_width: tuple[int, int] = (11, 18)
    junction_gap: tuple[int, int] = (3, 7)
    overhang: tuple[int, int] = (0, 3)
    ascender_prob: float = 0.25
    descender_prob: float = 0.2
    ascender_height: tuple[int, int] = (6, 10)
    descender_height: tuple[int, int] = (6, 10)
    page_width: int = 300
    lines_per_page: tuple[int, int] = (3, 5)
    line_gap: tuple[int, int] = (6, 14)
    margin: int = 8
    ink_level: tuple[int, int] = (0, 45)
    paper_level: tuple[int, int] = (215, 255)

    def __post_init__(self):
        for name in (
            "glyphs_per_word", "pen_width", "headline_thickness", "body_height", "glyph_width",
            "junction_gap", "overhang", "ascender_height", "descender_height",
            "lines_per_page", "line_gap", "ink_level", "paper_level",
        ):
            lo, hi = getattr(self, name)
            if lo > hi or lo < 0:
                raise ParameterError(f"{name} must be a non-empty non-negative range, got {(lo, hi)}")
        positive = ("glyphs_per_word", "pen_width", "headline_thickness", "body_height",
                    "glyph_width", "junction_gap", "lines_per_page")
        for name in positive:
            if getattr(self, name)[0] < 1:
                raise ParameterError(f"{name} must be positive")
        if not 0 <= self.ascender_prob <= 1 or not 0 <= self.descender_prob <= 1:
            raise ParameterError("ascender/descender probabilities must lie in [0, 1]")
        if self.glyph_width[0] < 2 * self.pen_width[1] + 3:
            raise ParameterError("glyph_width too small for the pen width")
        if self.ink_level[1] >= self.paper_level[0]:
            raise ParameterError("ink and paper luminance ranges must not overlap")
        if self.count < 0:
            raise ParameterError("count must be >= 0")


@dataclass(frozen=True, eq=False)
class SynthWord:
    """A tight-cropped word image and its ground truth in word coordinates."""

    image: BinaryImage
    cuts: list[int]
    headline: tuple[int, int]
    glyph_spans: list[tuple[int, int]] = field(default_factory=list)
    gaps: list[tuple[int, int]] = field(default_factory=list)

    def annotations(self, word_id: str) -> list[CutAnnotation]:
        return [CutAnnotation(word_id, x) for x in self.cuts]


@dataclass(frozen=True, eq=False)
class SynthPage:
    page_id: str
    gray: GrayImage
    binary: BinaryImage
    truth: Annotations


def _rint(rng: np.random.Generator, bounds: tuple[int, int]) -> int:
    return int(rng.integers(bounds[0], bounds[1] + 1))


class _Pen:
    def __init__(self, mask: np.ndarray, width: int):
        self.mask = mask
        self.p = width
        self.lead = width // 2

    def dot(self, x: float, y: float):
        x0 = int(round(x)) - self.lead
        y0 = int(round(y)) - self.lead
        self.mask[y0 : y0 + self.p, x0 : x0 + self.p] = True

    def path(self, xs, ys):
        for x, y in zip(xs, ys):
            self.dot(x, y)

    def line(self, x0, y0, x1, y1):
        n = int(4 * math.hypot(x1 - x0, y1 - y0)) + 2
        t = np.linspace(0.0, 1.0, n)
        self.path(x0 + (x1 - x0) * t, y0 + (y1 - y0) * t)

    def curve(self, fx, fy, n=200):
        t = np.linspace(0.0, 1.0, n)
        self.path(fx(t), fy(t))


def _draw_glyph(rng, kind, pen: _Pen, gw, top, bottom):
    """Draw one glyph whose ink spans columns ``0..gw-1`` of ``pen.mask``.

    ``top`` is the nib-centre row touching the head-line, ``bottom`` the
    nib-centre row of the baseline.
    """
    p = pen.p
    xl, xr = p // 2, gw - 1 - (p - 1 - p // 2)
    span = xr - xl
    height = bottom - top
    if kind == "hook":
        pen.line(xr, top, xr, bottom)
        rise = height * rng.uniform(0.3, 0.55)
        pen.curve(lambda t: xr - span * t, lambda t: bottom - rise * t ** 2)
    elif kind == "loop":
        pen.line(xr, top, xr, bottom)
        ry = height * rng.uniform(0.25, 0.35)
        cx, cy, rx = xl + span / 2, bottom - ry, span / 2
        pen.curve(lambda t: cx + rx * np.cos(2 * np.pi * t), lambda t: cy + ry * np.sin(2 * np.pi * t), n=400)
    elif kind == "bowl":
        r = span / 2
        ry = min(height * 0.45, r * rng.uniform(1.0, 1.6))
        pen.line(xl, top, xl, bottom - ry)
        pen.line(xr, top, xr, bottom)
        cx = xl + r
        pen.curve(lambda t: cx - r * np.cos(np.pi * t), lambda t: bottom - ry + ry * np.sin(np.pi * t))
    elif kind == "slant":
        pen.line(xr, top, xr, bottom)
        mid = top + height * rng.uniform(0.45, 0.7)
        pen.line(xl, top, xr, mid)
        foot = bottom - height * rng.uniform(0.0, 0.2)
        pen.line(xl, mid - height * 0.1, xr, foot)
    else:  # pragma: no cover - guarded by GLYPH_KINDS
        raise ValueError(kind)
    return xl, xr


def synth_word(params: SynthParams, rng: np.random.Generator) -> SynthWord:
    """Draw one word with known head-line rows and cut columns."""
    p = _rint(rng, params.pen_width)
    t = _rint(rng, params.headline_thickness)
    body = _rint(rng, params.body_height)
    n_glyphs = _rint(rng, params.glyphs_per_word)
    widths = [_rint(rng, params.glyph_width) for _ in range(n_glyphs)]
    gaps = [_rint(rng, params.junction_gap) for _ in range(n_glyphs - 1)]
    left_over, right_over = _rint(rng, params.overhang), _rint(rng, params.overhang)
    asc_room = params.ascender_height[1] + p + 2
    desc_room = params.descender_height[1] + p + 2
    m0 = asc_room
    width = left_over + sum(widths) + sum(gaps) + right_over
    height = asc_room + t + body + desc_room
    ink = np.zeros((height, width), dtype=bool)
    ink[m0 : m0 + t, :] = True

    stem_top = m0 + p // 2
    baseline = m0 + t + body - 1
    stem_bottom = baseline - (p - 1 - p // 2)
    x, spans, gap_cols = left_over, [], []
    for i, gw in enumerate(widths):
        glyph = np.zeros((height, gw), dtype=bool)
        pen = _Pen(glyph, p)
        kind = GLYPH_KINDS[int(rng.integers(len(GLYPH_KINDS)))]
        xl, xr = _draw_glyph(rng, kind, pen, gw, stem_top, stem_bottom)
        if rng.random() < params.ascender_prob and xr - xl >= 4:
            a0 = xl + int(rng.integers(0, (xr - xl) // 3 + 1))
            a1 = xr - int(rng.integers(0, (xr - xl) // 3 + 1))
            foot = m0 - (p - 1 - p // 2)
            rise = _rint(rng, params.ascender_height)
            pen.curve(lambda s: a0 + (a1 - a0) * (1 - np.cos(np.pi * s)) / 2,
                      lambda s: foot - rise * np.sin(np.pi * s))
        if rng.random() < params.descender_prob:
            anchor = int(np.flatnonzero(glyph[baseline])[-1]) - (p - 1 - p // 2)
            drop = _rint(rng, params.descender_height)
            reach = max(0.0, min((anchor - xl) * rng.uniform(0.4, 0.9), float(anchor - xl)))
            pen.curve(lambda s: anchor - reach * s ** 2, lambda s: stem_bottom + drop * np.sin(np.pi * s / 2))
        ink[:, x : x + gw] |= glyph
        spans.append((x, x + gw - 1))
        x += gw
        if i < len(gaps):
            gap_cols.append((x, x + gaps[i] - 1))
            x += gaps[i]

    ys, xs = np.nonzero(ink)
    y0, y1, x0, x1 = ys.min(), ys.max(), xs.min(), xs.max()
    ink = ink[y0 : y1 + 1, x0 : x1 + 1]
    spans = [(a - x0, b - x0) for a, b in spans]
    gap_cols = [(a - x0, b - x0) for a, b in gap_cols]
    cuts = [(a + b) // 2 for a, b in gap_cols]
    headline = (int(m0 - y0), int(m0 + t - 1 - y0))
    return SynthWord(BinaryImage(ink), cuts, headline, spans, gap_cols)


def synth_page(params: SynthParams, rng: np.random.Generator, page_id: str = "page000") -> SynthPage:
    """Lay out lines of synthetic words on a page and render it in grayscale.

    Words in a line share their head-line row.  Word gaps exceed a quarter
    of the line height so the default word dissection splits exactly there.
    """
    usable = params.page_width - 2 * params.margin
    n_lines = _rint(rng, params.lines_per_page)
    placed_lines = []
    y = params.margin
    for _ in range(n_lines):
        words = []
        while True:
            w = synth_word(params, rng)
            if w.image.width > usable:
                continue
            words.append(w)
            if len(words) >= 6:
                break
            if rng.random() < 0.35 and len(words) >= 2:
                break
        above = max(w.headline[0] for w in words)
        below = max(w.image.height - w.headline[0] for w in words)
        line_h = above + below
        min_gap = max(3, math.ceil(0.25 * line_h))
        row, x = [], params.margin
        for w in words:
            if row:
                x += min_gap + int(rng.integers(2, 11))
            if x + w.image.width > params.page_width - params.margin:
                break
            row.append((x, y + above - w.headline[0], w))
            x += w.image.width
        placed_lines.append(row)
        y += line_h
        if len(placed_lines) < n_lines:
            y += _rint(rng, params.line_gap)
    height = y + params.margin

    ink = np.zeros((height, params.page_width), dtype=bool)
    truth = Annotations()
    for li, row in enumerate(placed_lines):
        tops, bottoms = [], []
        for wi, (x, top, w) in enumerate(row):
            ink[top : top + w.image.height, x : x + w.image.width] |= w.image.ink
            wid = f"{page_id}-l{li}-w{wi}"
            truth.words.append(WordRecord(wid, li, x, top, x + w.image.width - 1, top + w.image.height - 1))
            truth.headlines.append(HeadlineRecord(wid, top + w.headline[0], top + w.headline[1]))
            truth.cuts.extend(w.annotations(wid))
            tops.append(top)
            bottoms.append(top + w.image.height - 1)
        truth.lines.append(LineRecord(page_id, li, min(tops), max(bottoms)))

    paper = rng.integers(params.paper_level[0], params.paper_level[1] + 1, size=ink.shape)
    dark = rng.integers(params.ink_level[0], params.ink_level[1] + 1, size=ink.shape)
    gray = GrayImage(np.where(ink, dark, paper).astype(np.uint8))
    return SynthPage(page_id, gray, BinaryImage(ink), truth)


def synth_corpus(params: SynthParams) -> list[SynthPage]:
    """``params.count`` pages from one seeded stream."""
    rng = np.random.default_rng(params.seed)
    return [synth_page(params, rng, f"page{i:03d}") for i in range(params.count)]
