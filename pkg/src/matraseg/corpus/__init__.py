"""File formats, synthetic data, evaluation and overlays."""

from .annotations import (
    AnnotationError,
    Annotations,
    CutAnnotation,
    HeadlineRecord,
    LineRecord,
    WordRecord,
    format_annotations,
    load_annotations,
    parse_annotations,
)
from .evaluation import EvalReport, evaluate_cuts, match_cuts
from .pnm import (
    PNMError,
    PNMHeaderError,
    PNMMaxvalError,
    PNMTruncatedError,
    encode_pgm,
    encode_ppm,
    load_pgm,
    parse_pgm,
    save_pgm,
    save_ppm,
)
from .synth import SynthPage, SynthParams, SynthWord, synth_corpus, synth_page, synth_word

__all__ = [
    "AnnotationError",
    "Annotations",
    "CutAnnotation",
    "encode_pgm",
    "encode_ppm",
    "EvalReport",
    "evaluate_cuts",
    "format_annotations",
    "HeadlineRecord",
    "LineRecord",
    "load_annotations",
    "load_pgm",
    "match_cuts",
    "parse_annotations",
    "parse_pgm",
    "PNMError",
    "PNMHeaderError",
    "PNMMaxvalError",
    "PNMTruncatedError",
    "save_pgm",
    "save_ppm",
    "synth_corpus",
    "synth_page",
    "synth_word",
    "SynthPage",
    "SynthParams",
    "SynthWord",
    "WordRecord",
]
