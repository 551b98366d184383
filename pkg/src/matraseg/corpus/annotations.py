"""Line-oriented plain-text annotation records.

One record per line, fields separated by whitespace, ``#`` starts a comment::

    cut      <word_id> <x>
    line     <page_id> <index> <top> <bottom>
    word     <word_id> <line_index> <left> <top> <right> <bottom>
    headline <word_id> <top> <bottom>

``cut`` x positions are in word coordinates (column 0 is the word box's
left edge); all other coordinates are page coordinates, inclusive.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

__all__ = [
    "AnnotationError",
    "CutAnnotation",
    "LineRecord",
    "WordRecord",
    "HeadlineRecord",
    "Annotations",
    "parse_annotations",
    "load_annotations",
    "format_annotations",
]


class AnnotationError(ValueError):
    def __init__(self, message: str, lineno: int):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True, order=True)
class CutAnnotation:
    word_id: str
    cut_x: int

    def to_line(self) -> str:
        return f"cut {self.word_id} {self.cut_x}"


@dataclass(frozen=True)
class LineRecord:
    page_id: str
    index: int
    top: int
    bottom: int

    def to_line(self) -> str:
        return f"line {self.page_id} {self.index} {self.top} {self.bottom}"


@dataclass(frozen=True)
class WordRecord:
    word_id: str
    line_index: int
    left: int
    top: int
    right: int
    bottom: int

    def to_line(self) -> str:
        return f"word {self.word_id} {self.line_index} {self.left} {self.top} {self.right} {self.bottom}"


@dataclass(frozen=True)
class HeadlineRecord:
    word_id: str
    top: int
    bottom: int

    def to_line(self) -> str:
        return f"headline {self.word_id} {self.top} {self.bottom}"


_SCHEMA = {
    "cut": (CutAnnotation, 1),
    "line": (LineRecord, 3),
    "word": (WordRecord, 5),
    "headline": (HeadlineRecord, 2),
}


@dataclass
class Annotations:
    cuts: list[CutAnnotation] = field(default_factory=list)
    lines: list[LineRecord] = field(default_factory=list)
    words: list[WordRecord] = field(default_factory=list)
    headlines: list[HeadlineRecord] = field(default_factory=list)

    def extend(self, other: "Annotations") -> "Annotations":
        self.cuts += other.cuts
        self.lines += other.lines
        self.words += other.words
        self.headlines += other.headlines
        return self

    def records(self):
        yield from self.lines
        yield from self.words
        yield from self.headlines
        yield from self.cuts

    def cuts_by_word(self) -> dict[str, list[int]]:
        out: dict[str, list[int]] = {}
        for c in self.cuts:
            out.setdefault(c.word_id, []).append(c.cut_x)
        return out


def parse_annotations(text: str) -> Annotations:
    ann = Annotations()
    buckets = {"cut": ann.cuts, "line": ann.lines, "word": ann.words, "headline": ann.headlines}
    for lineno, raw in enumerate(text.splitlines(), 1):
        fields = raw.split("#", 1)[0].split()
        if not fields:
            continue
        kind, *rest = fields
        if kind not in _SCHEMA:
            raise AnnotationError(f"unknown record type {kind!r}", lineno)
        cls, n_ints = _SCHEMA[kind]
        if len(rest) != n_ints + 1:
            raise AnnotationError(f"{kind} record needs {n_ints + 1} fields, got {len(rest)}", lineno)
        try:
            ints = [int(v) for v in rest[1:]]
        except ValueError:
            raise AnnotationError(f"non-integer coordinate in {kind} record", lineno) from None
        if any(v < 0 for v in ints):
            raise AnnotationError(f"negative coordinate in {kind} record", lineno)
        buckets[kind].append(cls(rest[0], *ints))
    return ann


def load_annotations(paths) -> Annotations:
    if isinstance(paths, (str, Path)):
        paths = [paths]
    ann = Annotations()
    for p in paths:
        ann.extend(parse_annotations(Path(p).read_text(encoding="utf-8")))
    return ann


def format_annotations(records: Iterable, header: str | None = None) -> str:
    out = [f"# {line}" for line in header.splitlines()] if header else []
    out.extend(r.to_line() for r in records)
    return "\n".join(out) + "\n"
