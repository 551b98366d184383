"""Input coercion and parameter checks for the estimator front end."""

from __future__ import annotations

import numbers
from typing import Sequence

import numpy as np

from .exceptions import DimensionError, ParameterError
from .raster import BinaryImage, GrayImage, binarize

__all__ = [
    "check_image",
    "check_images",
    "check_unit_interval",
    "check_positive_int",
    "check_binarization",
]


def check_binarization(method) -> str | int:
    if method == "otsu":
        return method
    if isinstance(method, str) and method.startswith("fixed:"):
        try:
            value = int(method.split(":", 1)[1])
        except ValueError:
            raise ParameterError(f"bad fixed threshold in {method!r}") from None
        method = value
    if isinstance(method, numbers.Integral) and not isinstance(method, bool) and 0 <= method <= 255:
        return int(method)
    raise ParameterError(f"binarization must be 'otsu', 'fixed:N' or an int in [0, 255], got {method!r}")


def check_image(X, binarization="otsu") -> BinaryImage:
    """Coerce one page or word to a :class:`BinaryImage`.

    Boolean arrays are taken as ink masks; other numeric 2-D arrays and
    :class:`GrayImage` values are binarized as dark-on-light luminance.
    """
    if isinstance(X, BinaryImage):
        return X
    if isinstance(X, GrayImage):
        return binarize(X, check_binarization(binarization))
    arr = np.asarray(X)
    if arr.ndim != 2:
        raise DimensionError(f"expected a 2-D image, got array of shape {arr.shape}")
    if arr.dtype == bool:
        return BinaryImage(arr)
    if not np.issubdtype(arr.dtype, np.number):
        raise ParameterError(f"image array must be boolean or numeric, got {arr.dtype}")
    return binarize(GrayImage(arr), check_binarization(binarization))


def _is_single_image(X) -> bool:
    if isinstance(X, (BinaryImage, GrayImage)):
        return True
    return isinstance(X, np.ndarray) and X.ndim == 2


def check_images(X, binarization="otsu") -> list[BinaryImage]:
    """A single image or a sequence of images, as a list of binary images."""
    if _is_single_image(X):
        return [check_image(X, binarization)]
    if isinstance(X, np.ndarray) and X.ndim == 3:
        return [check_image(x, binarization) for x in X]
    if not isinstance(X, Sequence):
        raise ParameterError(f"expected an image or a sequence of images, got {type(X).__name__}")
    return [check_image(x, binarization) for x in X]


def check_unit_interval(name: str, value) -> float:
    if not isinstance(value, numbers.Real) or isinstance(value, bool) or not 0.0 <= value <= 1.0:
        raise ParameterError(f"{name} must be a number in [0, 1], got {value!r}")
    return float(value)


def check_positive_int(name: str, value, allow_none: bool = False, minimum: int = 1) -> int | None:
    if value is None and allow_none:
        return None
    if not isinstance(value, numbers.Integral) or isinstance(value, bool) or value < minimum:
        raise ParameterError(f"{name} must be an integer >= {minimum}, got {value!r}")
    return int(value)
