"""Page-level composition: binarize, dissect into words, segment every word."""

from __future__ import annotations

from dataclasses import dataclass

from .components import WordAnalysis, WordParams, analyze_word
from .page import PageParams, PageSegmentation, WordBox, segment_page
from .raster import BinaryImage, GrayImage, binarize

__all__ = ["WordResult", "PageResult", "word_id", "process_page"]


def word_id(page_id: str, line_index: int, word_index: int) -> str:
    return f"{page_id}-l{line_index}-w{word_index}"


@dataclass(frozen=True, eq=False)
class WordResult:
    word_id: str
    box: WordBox
    analysis: WordAnalysis

    @property
    def cut_positions(self) -> list[int]:
        return self.analysis.cut_positions


@dataclass(frozen=True, eq=False)
class PageResult:
    page_id: str
    image: BinaryImage
    layout: PageSegmentation
    words: list[WordResult]

    def cuts(self) -> dict[str, list[int]]:
        return {w.word_id: w.cut_positions for w in self.words}


def process_page(
    page: BinaryImage | GrayImage,
    page_params: PageParams | None = None,
    word_params: WordParams | None = None,
    page_id: str = "page",
    binarization: str | int = "otsu",
) -> PageResult:
    if isinstance(page, GrayImage):
        page = binarize(page, binarization)
    layout = segment_page(page, page_params)
    words = []
    counters: dict[int, int] = {}
    for box in layout.words:
        j = counters.get(box.line_index, 0)
        counters[box.line_index] = j + 1
        analysis = analyze_word(page.crop(box.rect), word_params)
        words.append(WordResult(word_id(page_id, box.line_index, j), box, analysis))
    return PageResult(page_id, page, layout, words)
