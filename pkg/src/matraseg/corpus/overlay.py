"""RGB debug overlays of a segmented page."""

from __future__ import annotations

import numpy as np

from ..pipeline import PageResult

__all__ = ["HEADLINE_TINT", "CUT_TINT", "BOX_COLOR", "render_overlay"]

HEADLINE_TINT = np.array([0, 0, 255], dtype=np.uint16)
CUT_TINT = np.array([255, 0, 0], dtype=np.uint16)
BOX_COLOR = np.array([0, 160, 0], dtype=np.uint8)


def _tint(rgb: np.ndarray, ys: slice, xs: slice, color: np.ndarray):
    block = rgb[ys, xs].astype(np.uint16)
    rgb[ys, xs] = ((block + color) // 2).astype(np.uint8)


def render_overlay(result: PageResult) -> np.ndarray:
    """Ink black on white; head-line bands blue, applied cuts red, segment boxes green."""
    ink = result.image.ink
    rgb = np.where(ink[..., None], 0, 255).astype(np.uint8).repeat(3, axis=2)
    for word in result.words:
        box, a = word.box, word.analysis
        if a.headline is None:
            continue
        rows = slice(box.top + a.headline.top, box.top + a.headline.bottom + 1)
        _tint(rgb, rows, slice(box.left, box.right + 1), HEADLINE_TINT)
        for s in a.cuts:
            _tint(rgb, rows, slice(box.left + s.left, box.left + s.right + 1), CUT_TINT)
    for word in result.words:
        box = word.box
        for seg in word.analysis.segments:
            x0, y0, x1, y1 = seg.bbox
            x0, x1, y0, y1 = x0 + box.left, x1 + box.left, y0 + box.top, y1 + box.top
            rgb[y0, x0 : x1 + 1] = BOX_COLOR
            rgb[y1, x0 : x1 + 1] = BOX_COLOR
            rgb[y0 : y1 + 1, x0] = BOX_COLOR
            rgb[y0 : y1 + 1, x1] = BOX_COLOR
    return rgb
