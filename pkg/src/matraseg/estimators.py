"""scikit-learn style front end.

The segmenters are stateless: ``fit`` only validates hyper-parameters, so
they drop into pipelines, ``clone`` and parameter searches like any other
transformer.  ``score`` returns cut-point success rate, which makes
``GridSearchCV`` over ``delta`` or ``alphas`` work against ground truth.
"""

from __future__ import annotations


from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .components import WordAnalysis, WordParams, analyze_word
from .corpus.annotations import Annotations
from .corpus.evaluation import EvalReport, evaluate_cuts
from .headline import UNIFORM_ALPHAS, normalize_alphas
from .page import PageParams
from .pipeline import PageResult, process_page
from .validation import (
    check_binarization,
    check_images,
    check_positive_int,
    check_unit_interval,
)

__all__ = ["WordSegmenter", "PageSegmenter"]


class _WordParamsMixin:
    def _word_params(self) -> WordParams:
        return WordParams(
            w=check_unit_interval("w", self.w),
            delta=check_unit_interval("delta", self.delta),
            alphas=normalize_alphas(UNIFORM_ALPHAS if self.alphas is None else self.alphas),
            min_strip=check_positive_int("min_strip", self.min_strip),
            noise_area=check_positive_int("noise_area", self.noise_area, allow_none=True, minimum=0),
            overlap_frac=check_unit_interval("overlap_frac", self.overlap_frac),
        )


class WordSegmenter(_WordParamsMixin, TransformerMixin, BaseEstimator):
    """Head-line cut segmentation of isolated word images.

    ``transform`` returns one :class:`WordAnalysis` per word; ``predict``
    returns the cut columns of each word.
    """

    def __init__(
        self,
        w=0.7,
        delta=0.85,
        alphas=None,
        min_strip=2,
        noise_area=None,
        overlap_frac=0.5,
        binarization="otsu",
    ):
        self.w = w
        self.delta = delta
        self.alphas = alphas
        self.min_strip = min_strip
        self.noise_area = noise_area
        self.overlap_frac = overlap_frac
        self.binarization = binarization

    def fit(self, X=None, y=None):
        self.params_ = self._word_params()
        self.binarization_ = check_binarization(self.binarization)
        return self

    def transform(self, X) -> list[WordAnalysis]:
        check_is_fitted(self, "params_")
        return [analyze_word(img, self.params_) for img in check_images(X, self.binarization_)]

    def predict(self, X) -> list[list[int]]:
        return [a.cut_positions for a in self.transform(X)]

    def evaluate(self, X, y, tolerance: int = 3) -> EvalReport:
        pred = {str(i): cuts for i, cuts in enumerate(self.predict(X))}
        gt = {str(i): list(cuts) for i, cuts in enumerate(y)}
        return evaluate_cuts(pred, gt, tolerance)

    def score(self, X, y, tolerance: int = 3) -> float:
        """Cut success rate of ``predict(X)`` against per-word cut lists ``y``."""
        return self.evaluate(X, y, tolerance).success_rate


class PageSegmenter(_WordParamsMixin, TransformerMixin, BaseEstimator):
    """Full page pipeline: lines, words, head-line cuts and segment labels.

    ``k1`` and ``min_gap`` default to sizes derived from the page and line.
    """

    def __init__(
        self,
        k1=None,
        k2=1,
        min_gap=None,
        smoothing=1,
        w=0.7,
        delta=0.85,
        alphas=None,
        min_strip=2,
        noise_area=None,
        overlap_frac=0.5,
        binarization="otsu",
    ):
        self.k1 = k1
        self.k2 = k2
        self.min_gap = min_gap
        self.smoothing = smoothing
        self.w = w
        self.delta = delta
        self.alphas = alphas
        self.min_strip = min_strip
        self.noise_area = noise_area
        self.overlap_frac = overlap_frac
        self.binarization = binarization

    def fit(self, X=None, y=None):
        self.page_params_ = PageParams(
            k1=check_positive_int("k1", self.k1, allow_none=True),
            k2=check_positive_int("k2", self.k2),
            min_gap=check_positive_int("min_gap", self.min_gap, allow_none=True),
            smoothing=check_positive_int("smoothing", self.smoothing),
        )
        self.word_params_ = self._word_params()
        self.binarization_ = check_binarization(self.binarization)
        return self

    def transform(self, X, page_ids=None) -> list[PageResult]:
        check_is_fitted(self, ["page_params_", "word_params_"])
        pages = check_images(X, self.binarization_)
        if page_ids is None:
            page_ids = [f"page{i:03d}" for i in range(len(pages))]
        return [
            process_page(img, self.page_params_, self.word_params_, pid)
            for img, pid in zip(pages, page_ids, strict=True)
        ]

    def predict(self, X, page_ids=None) -> list[dict[str, list[int]]]:
        return [r.cuts() for r in self.transform(X, page_ids)]

    def evaluate(self, X, y, tolerance: int = 3, page_ids=None) -> EvalReport:
        pred: dict[str, list[int]] = {}
        for cuts in self.predict(X, page_ids):
            pred.update(cuts)
        gt: dict[str, list[int]] = {}
        for truth in y:
            gt.update(truth.cuts_by_word() if isinstance(truth, Annotations) else dict(truth))
        return evaluate_cuts(pred, gt, tolerance)

    def score(self, X, y, tolerance: int = 3, page_ids=None) -> float:
        """Cut success rate against per-page ground truth (``Annotations`` or word-id maps)."""
        return self.evaluate(X, y, tolerance, page_ids).success_rate
