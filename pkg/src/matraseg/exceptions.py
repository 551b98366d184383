"""Exception hierarchy shared by every stage of the segmenter."""


class SegmentationError(Exception):
    """Base class for all errors raised by matraseg."""


class DimensionError(SegmentationError, ValueError):
    """An image has zero width or height, or inconsistent sample count."""


class BoundsError(SegmentationError, IndexError):
    """A rectangle, column, row or pixel lies outside the image."""


class ParameterError(SegmentationError, ValueError):
    """A tuning parameter is outside its admissible range."""


class HeadlineNotFoundError(SegmentationError):
    """The upper half of a word carries no ink, so no head-line can be estimated."""
