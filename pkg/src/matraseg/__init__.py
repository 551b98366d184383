"""Head-line driven segmentation of handwritten Bengali-style script.

Pages are dissected into lines and words by projection profiles.  Each word
is split into four horizontal bands and its head-line (matra) is located.
The head-line is cut where per-column features say it joins two
characters, and the resulting connected pieces are classified.
"""

from .components import (
    Segment,
    SegmentClass,
    WordAnalysis,
    WordParams,
    analyze_word,
    classify_segment,
    label_segments,
    reunify,
    segment_word,
)
from .estimators import PageSegmenter, WordSegmenter
from .exceptions import (
    BoundsError,
    DimensionError,
    HeadlineNotFoundError,
    ParameterError,
    SegmentationError,
)
from .headline import (
    CutStrip,
    FeatureMatrix,
    WeightProfile,
    apply_cuts,
    compute_features,
    find_cut_strips,
    weightage,
)
from .page import LineBand, PageParams, PageSegmentation, WordBox, segment_lines, segment_page, segment_words
from .pipeline import PageResult, WordResult, process_page
from .raster import (
    BinaryImage,
    Component,
    GrayImage,
    ProjectionProfile,
    Rect,
    binarize,
    column_runs,
    connected_components,
    erase,
    horizontal_profile,
    vertical_profile,
)
from .word import HeadlineBand, RegionBands, estimate_headline, format_regions

__all__ = [
    "analyze_word",
    "apply_cuts",
    "binarize",
    "BinaryImage",
    "BoundsError",
    "classify_segment",
    "column_runs",
    "Component",
    "compute_features",
    "connected_components",
    "CutStrip",
    "DimensionError",
    "erase",
    "estimate_headline",
    "FeatureMatrix",
    "find_cut_strips",
    "format_regions",
    "GrayImage",
    "HeadlineBand",
    "HeadlineNotFoundError",
    "horizontal_profile",
    "label_segments",
    "LineBand",
    "PageParams",
    "PageResult",
    "PageSegmentation",
    "PageSegmenter",
    "ParameterError",
    "process_page",
    "ProjectionProfile",
    "Rect",
    "RegionBands",
    "reunify",
    "Segment",
    "segment_lines",
    "segment_page",
    "segment_word",
    "segment_words",
    "SegmentationError",
    "SegmentClass",
    "vertical_profile",
    "weightage",
    "WeightProfile",
    "WordAnalysis",
    "WordBox",
    "WordParams",
    "WordResult",
    "WordSegmenter",
]

__version__ = "0.1.0"
