"""Cut-point accuracy against ideal segmentation points."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from ..exceptions import ParameterError
from .annotations import CutAnnotation

__all__ = ["EvalReport", "evaluate_cuts", "match_cuts"]


@dataclass(frozen=True)
class EvalReport:
    total_gt: int
    matched: int
    spurious: int
    tolerance: int

    @property
    def total_pred(self) -> int:
        return self.matched + self.spurious

    @property
    def missed(self) -> int:
        return self.total_gt - self.matched

    @property
    def success_rate(self) -> float:
        return self.matched / self.total_gt if self.total_gt else 1.0

    @property
    def precision(self) -> float:
        return self.matched / self.total_pred if self.total_pred else 1.0

    def format(self) -> str:
        return (
            f"total_gt {self.total_gt}\n"
            f"matched {self.matched}\n"
            f"missed {self.missed}\n"
            f"spurious {self.spurious}\n"
            f"success_rate {self.success_rate:.4f}\n"
            f"precision {self.precision:.4f}\n"
            f"tolerance {self.tolerance}\n"
        )


def _group(cuts) -> dict[str, list[int]]:
    if isinstance(cuts, Mapping):
        return {k: sorted(int(x) for x in v) for k, v in cuts.items()}
    out: dict[str, list[int]] = {}
    for c in cuts:
        out.setdefault(c.word_id, []).append(int(c.cut_x))
    return {k: sorted(v) for k, v in out.items()}


def match_cuts(predicted: list[int], truth: list[int], tolerance: int) -> list[tuple[int, int]]:
    """Greedy nearest matching of one word's cuts.

    Candidate pairs within ``tolerance`` are taken in order of distance,
    then ground-truth x, then predicted x; each cut is used at most once.
    Returns ``(truth_index, predicted_index)`` pairs.
    """
    pairs = sorted(
        (abs(p - t), t, p, i, j)
        for i, t in enumerate(truth)
        for j, p in enumerate(predicted)
        if abs(p - t) <= tolerance
    )
    used_t, used_p, out = set(), set(), []
    for _, _, _, i, j in pairs:
        if i in used_t or j in used_p:
            continue
        used_t.add(i)
        used_p.add(j)
        out.append((i, j))
    return out


def evaluate_cuts(
    predicted: Mapping[str, Iterable[int]] | Iterable[CutAnnotation],
    ground_truth: Mapping[str, Iterable[int]] | Iterable[CutAnnotation],
    tolerance: int = 3,
) -> EvalReport:
    """Score predicted cut columns against ground truth, word by word."""
    if tolerance < 0:
        raise ParameterError(f"tolerance must be >= 0, got {tolerance}")
    pred, gt = _group(predicted), _group(ground_truth)
    total_gt = sum(len(v) for v in gt.values())
    total_pred = sum(len(v) for v in pred.values())
    matched = sum(len(match_cuts(pred.get(w, []), xs, tolerance)) for w, xs in gt.items())
    return EvalReport(total_gt, matched, total_pred - matched, int(tolerance))
