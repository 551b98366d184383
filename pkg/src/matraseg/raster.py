"""Binary raster primitives: binarization, projection profiles, runs and labeling.

Coordinates follow image convention: ``x`` is the column, ``y`` the row, and
arrays are indexed ``[y, x]``.  All ranges and bounding boxes are inclusive.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal, NamedTuple

import numpy as np
from scipy import ndimage

from .exceptions import BoundsError, DimensionError, ParameterError

__all__ = [
    "GrayImage",
    "BinaryImage",
    "Rect",
    "ProjectionProfile",
    "Component",
    "otsu_threshold",
    "binarize",
    "horizontal_profile",
    "vertical_profile",
    "column_runs",
    "connected_components",
    "erase",
]


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, copy=True)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class GrayImage:
    """8-bit luminance raster, row-major."""

    samples: np.ndarray

    def __post_init__(self):
        samples = np.asarray(self.samples)
        if samples.ndim != 2 or samples.shape[0] == 0 or samples.shape[1] == 0:
            raise DimensionError(f"gray image must be a non-empty 2-D array, got shape {samples.shape}")
        if samples.dtype != np.uint8:
            if samples.size and (samples.min() < 0 or samples.max() > 255):
                raise ParameterError("luminance samples must lie in [0, 255]")
            samples = samples.astype(np.uint8)
        object.__setattr__(self, "samples", _frozen(samples))

    @classmethod
    def from_flat(cls, width: int, height: int, samples) -> "GrayImage":
        flat = np.asarray(samples)
        if width <= 0 or height <= 0 or flat.size != width * height:
            raise DimensionError(f"expected {width}x{height} samples, got {flat.size}")
        return cls(flat.reshape(height, width))

    @property
    def width(self) -> int:
        return self.samples.shape[1]

    @property
    def height(self) -> int:
        return self.samples.shape[0]

    def __eq__(self, other):
        if not isinstance(other, GrayImage):
            return NotImplemented
        return np.array_equal(self.samples, other.samples)

    def __hash__(self):
        return hash((self.samples.shape, self.samples.tobytes()))


@dataclass(frozen=True, eq=False)
class BinaryImage:
    """Immutable 1-bit raster; ``ink[y, x]`` is True for foreground."""

    ink: np.ndarray

    def __post_init__(self):
        ink = np.asarray(self.ink)
        if ink.ndim != 2:
            raise DimensionError(f"binary image must be 2-D, got shape {ink.shape}")
        object.__setattr__(self, "ink", _frozen(ink.astype(bool)))

    @classmethod
    def blank(cls, width: int, height: int) -> "BinaryImage":
        return cls(np.zeros((height, width), dtype=bool))

    @property
    def width(self) -> int:
        return self.ink.shape[1]

    @property
    def height(self) -> int:
        return self.ink.shape[0]

    @property
    def shape(self) -> tuple[int, int]:
        return self.ink.shape

    def count(self) -> int:
        return int(self.ink.sum())

    def crop(self, rect: "Rect") -> "BinaryImage":
        rect = _check_rect(self, rect)
        return BinaryImage(self.ink[rect.y0 : rect.y1 + 1, rect.x0 : rect.x1 + 1])

    def pad(self, amount: int) -> "BinaryImage":
        return BinaryImage(np.pad(self.ink, amount, constant_values=False))

    def ink_bbox(self) -> "Rect | None":
        ys, xs = np.nonzero(self.ink)
        if ys.size == 0:
            return None
        return Rect(int(xs.min()), int(ys.min()), int(xs.max()), int(ys.max()))

    def __eq__(self, other):
        if not isinstance(other, BinaryImage):
            return NotImplemented
        return np.array_equal(self.ink, other.ink)

    def __hash__(self):
        return hash((self.ink.shape, np.packbits(self.ink).tobytes()))


class Rect(NamedTuple):
    """Inclusive pixel rectangle."""

    x0: int
    y0: int
    x1: int
    y1: int

    @property
    def width(self) -> int:
        return self.x1 - self.x0 + 1

    @property
    def height(self) -> int:
        return self.y1 - self.y0 + 1


def _check_rect(img: BinaryImage, rect) -> Rect:
    if rect is None:
        return Rect(0, 0, img.width - 1, img.height - 1)
    rect = Rect(*(int(v) for v in rect))
    if not (0 <= rect.x0 <= rect.x1 < img.width and 0 <= rect.y0 <= rect.y1 < img.height):
        raise BoundsError(f"rectangle {tuple(rect)} outside {img.width}x{img.height} image")
    return rect


@dataclass(frozen=True, eq=False)
class ProjectionProfile:
    """Ink counts per row (``axis="row"``) or per column of a rectangle."""

    axis: Literal["row", "column"]
    counts: np.ndarray
    origin: int = 0

    def __post_init__(self):
        if self.axis not in ("row", "column"):
            raise ParameterError(f"unknown profile axis {self.axis!r}")
        object.__setattr__(self, "counts", _frozen(np.asarray(self.counts, dtype=np.int64)))

    def __len__(self):
        return len(self.counts)

    def __getitem__(self, i):
        return self.counts[i]

    def total(self) -> int:
        return int(self.counts.sum())

    def at(self, index: int) -> int:
        """Count for absolute row/column ``index`` in source-image coordinates."""
        return int(self.counts[index - self.origin])


@dataclass(frozen=True, eq=False)
class Component:
    """One connected set of ink pixels.

    ``coords`` holds ``(x, y)`` pairs in raster order; ``bbox`` is
    ``(x0, y0, x1, y1)`` inclusive.
    """

    label: int
    bbox: Rect
    coords: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "coords", _frozen(np.asarray(self.coords, dtype=np.int64).reshape(-1, 2)))
        object.__setattr__(self, "bbox", Rect(*self.bbox))

    @property
    def area(self) -> int:
        return len(self.coords)

    @property
    def pixels(self) -> frozenset[tuple[int, int]]:
        return frozenset(map(tuple, self.coords.tolist()))

    @property
    def xs(self) -> np.ndarray:
        return self.coords[:, 0]

    @property
    def ys(self) -> np.ndarray:
        return self.coords[:, 1]

    def mask(self, width: int, height: int) -> np.ndarray:
        out = np.zeros((height, width), dtype=bool)
        out[self.ys, self.xs] = True
        return out

    def __eq__(self, other):
        if not isinstance(other, Component):
            return NotImplemented
        return (
            self.label == other.label
            and self.bbox == other.bbox
            and np.array_equal(self.coords, other.coords)
        )

    def __hash__(self):
        return hash((self.label, self.bbox, self.coords.tobytes()))


def otsu_threshold(img: GrayImage) -> int:
    """Threshold ``t`` maximizing between-class variance of ``{v < t}`` vs ``{v >= t}``.

    Ties resolve to the smallest maximizing ``t``.  A constant image has no
    split; it becomes all ink if its value is dark (< 128), else all paper.
    """
    hist = np.bincount(img.samples.ravel(), minlength=256).astype(np.float64)
    total = hist.sum()
    levels = np.arange(256, dtype=np.float64)
    # candidate t in 1..255: class0 = levels < t
    w0 = np.cumsum(hist)[:-1]
    s0 = np.cumsum(hist * levels)[:-1]
    w1 = total - w0
    s1 = s0[-1] + hist[-1] * 255.0 - s0
    valid = (w0 > 0) & (w1 > 0)
    if not valid.any():
        value = int(img.samples.flat[0])
        return 256 if value < 128 else 0
    with np.errstate(divide="ignore", invalid="ignore"):
        between = np.where(valid, w0 * w1 * (s0 / w0 - s1 / w1) ** 2, -1.0)
    best = between.max()
    # relative tolerance keeps plateaus from splitting on rounding noise
    t = int(np.flatnonzero(between >= best * (1 - 1e-12))[0]) + 1
    return t


def binarize(img: GrayImage, method: str | int = "otsu") -> BinaryImage:
    """Dark-on-light binarization: a pixel is ink iff its luminance < threshold.

    ``method`` is ``"otsu"``, ``"fixed:N"``, or an integer threshold.
    """
    if not isinstance(img, GrayImage):
        img = GrayImage(np.asarray(img))
    if isinstance(method, str) and method.startswith("fixed:"):
        method = int(method.split(":", 1)[1])
    if method == "otsu":
        threshold = otsu_threshold(img)
    elif isinstance(method, (int, np.integer)) and not isinstance(method, bool):
        if not 0 <= method <= 255:
            raise ParameterError(f"fixed threshold must be in [0, 255], got {method}")
        threshold = int(method)
    else:
        raise ParameterError(f"unknown binarization method {method!r}")
    return BinaryImage(img.samples < threshold)


def horizontal_profile(img: BinaryImage, rect=None) -> ProjectionProfile:
    """Ink count of every row of ``rect`` (whole image by default)."""
    rect = _check_rect(img, rect)
    window = img.ink[rect.y0 : rect.y1 + 1, rect.x0 : rect.x1 + 1]
    return ProjectionProfile("row", window.sum(axis=1), rect.y0)


def vertical_profile(img: BinaryImage, rect=None) -> ProjectionProfile:
    """Ink count of every column of ``rect`` (whole image by default)."""
    rect = _check_rect(img, rect)
    window = img.ink[rect.y0 : rect.y1 + 1, rect.x0 : rect.x1 + 1]
    return ProjectionProfile("column", window.sum(axis=0), rect.x0)


def _runs(mask: np.ndarray) -> list[tuple[int, int]]:
    """Maximal True runs of a 1-D mask as ``(start, length)``."""
    padded = np.concatenate(([False], np.asarray(mask, dtype=bool), [False]))
    edges = np.flatnonzero(padded[1:] != padded[:-1])
    starts, stops = edges[::2], edges[1::2]
    return [(int(a), int(b - a)) for a, b in zip(starts, stops)]


def column_runs(img: BinaryImage, x: int, rows=None) -> list[tuple[int, int]]:
    """Vertical ink runs of column ``x`` within inclusive ``rows = (top, bottom)``.

    Returns ``(start_row, length)`` pairs in image coordinates.
    """
    if not 0 <= x < img.width:
        raise BoundsError(f"column {x} outside image of width {img.width}")
    top, bottom = (0, img.height - 1) if rows is None else rows
    if not 0 <= top <= bottom < img.height:
        raise BoundsError(f"rows {(top, bottom)} outside image of height {img.height}")
    return [(top + s, n) for s, n in _runs(img.ink[top : bottom + 1, x])]


_STRUCTURES = {
    "four": ndimage.generate_binary_structure(2, 1),
    "eight": ndimage.generate_binary_structure(2, 2),
}


def label_array(ink: np.ndarray, connectivity: str = "eight") -> tuple[np.ndarray, int]:
    """Label image whose labels follow raster order of each component's first pixel."""
    try:
        structure = _STRUCTURES[connectivity]
    except KeyError:
        raise ParameterError(f"connectivity must be 'four' or 'eight', got {connectivity!r}") from None
    labels, n = ndimage.label(ink, structure=structure)
    if n == 0:
        return labels, 0
    flat = labels.ravel()
    ink_idx = np.flatnonzero(flat)
    _, first = np.unique(flat[ink_idx], return_index=True)
    order = np.argsort(ink_idx[first], kind="stable")
    remap = np.zeros(n + 1, dtype=labels.dtype)
    remap[order + 1] = np.arange(1, n + 1)
    return remap[labels], n


def connected_components(img: BinaryImage, connectivity: str = "eight") -> list[Component]:
    """Partition the ink into maximal connected sets.

    Labels are 1-based and assigned in raster order of each component's
    first (top-most, then left-most) pixel, so output is reproducible.
    """
    labels, n = label_array(img.ink, connectivity)
    if n == 0:
        return []
    ys, xs = np.nonzero(labels)
    lab = labels[ys, xs]
    order = np.argsort(lab, kind="stable")
    ys, xs, lab = ys[order], xs[order], lab[order]
    bounds = np.searchsorted(lab, np.arange(1, n + 2))
    out = []
    for i in range(n):
        cy, cx = ys[bounds[i] : bounds[i + 1]], xs[bounds[i] : bounds[i + 1]]
        bbox = Rect(int(cx.min()), int(cy.min()), int(cx.max()), int(cy.max()))
        out.append(Component(i + 1, bbox, np.column_stack((cx, cy))))
    return out


def erase(img: BinaryImage, region: Iterable[tuple[int, int]] | np.ndarray) -> BinaryImage:
    """Copy of ``img`` with ink cleared at every ``(x, y)`` in ``region``.

    ``region`` may also be a boolean mask of the image's shape.
    """
    if isinstance(region, np.ndarray) and region.dtype == bool and region.shape == img.shape:
        return BinaryImage(img.ink & ~region)
    coords = np.asarray(list(region) if not isinstance(region, np.ndarray) else region, dtype=np.int64)
    if coords.size == 0:
        return img
    coords = coords.reshape(-1, 2)
    xs, ys = coords[:, 0], coords[:, 1]
    if xs.min() < 0 or ys.min() < 0 or xs.max() >= img.width or ys.max() >= img.height:
        raise BoundsError(f"erase region outside {img.width}x{img.height} image")
    ink = np.array(img.ink)
    ink[ys, xs] = False
    return BinaryImage(ink)
