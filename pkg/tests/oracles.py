"""Slow, obviously-correct reference implementations used as test oracles.

Nothing here imports the package's algorithms; inputs are plain numpy
arrays or lists.
"""

from __future__ import annotations

from collections import deque

import numpy as np

FOUR = ((1, 0), (-1, 0), (0, 1), (0, -1))
EIGHT = FOUR + ((1, 1), (1, -1), (-1, 1), (-1, -1))


def flood_fill_components(ink: np.ndarray, connectivity: str = "eight") -> list[list[tuple[int, int]]]:
    """BFS labeling in raster order of first pixel; each component as sorted (x, y)."""
    steps = EIGHT if connectivity == "eight" else FOUR
    h, w = ink.shape
    seen = np.zeros_like(ink, dtype=bool)
    comps = []
    for y in range(h):
        for x in range(w):
            if not ink[y, x] or seen[y, x]:
                continue
            seen[y, x] = True
            queue, pixels = deque([(x, y)]), []
            while queue:
                cx, cy = queue.popleft()
                pixels.append((cx, cy))
                for dx, dy in steps:
                    nx, ny = cx + dx, cy + dy
                    if 0 <= nx < w and 0 <= ny < h and ink[ny, nx] and not seen[ny, nx]:
                        seen[ny, nx] = True
                        queue.append((nx, ny))
            comps.append(sorted(pixels, key=lambda p: (p[1], p[0])))
    return comps


def row_counts(ink: np.ndarray) -> list[int]:
    out = []
    for y in range(ink.shape[0]):
        n = 0
        for x in range(ink.shape[1]):
            n += bool(ink[y, x])
        out.append(n)
    return out


def column_counts(ink: np.ndarray) -> list[int]:
    out = []
    for x in range(ink.shape[1]):
        n = 0
        for y in range(ink.shape[0]):
            n += bool(ink[y, x])
        out.append(n)
    return out


def scan_runs(values) -> list[tuple[int, int]]:
    """Maximal True runs as (start, length) by a linear scan."""
    runs, start = [], None
    for i, v in enumerate(values):
        if v and start is None:
            start = i
        elif not v and start is not None:
            runs.append((start, i - start))
            start = None
    if start is not None:
        runs.append((start, len(values) - start))
    return runs


def otsu_brute_force(samples: np.ndarray) -> int | None:
    """Smallest t in 1..255 maximizing between-class variance of {v < t} vs {v >= t}."""
    values = [int(v) for v in samples.ravel()]
    n = len(values)
    best_t, best = None, -1.0
    for t in range(1, 256):
        low = [v for v in values if v < t]
        high = [v for v in values if v >= t]
        if not low or not high:
            continue
        w0, w1 = len(low) / n, len(high) / n
        m0, m1 = sum(low) / len(low), sum(high) / len(high)
        between = w0 * w1 * (m0 - m1) ** 2
        if between > best * (1 + 1e-12):
            best_t, best = t, between
    return best_t


def greedy_match_count(pred: list[int], truth: list[int], tol: int) -> int:
    """Repeatedly take the closest unused pair (ties: smaller truth x, then predicted x)."""
    pred, truth = list(pred), list(truth)
    used_p, used_t = [False] * len(pred), [False] * len(truth)
    matched = 0
    while True:
        best = None
        for i, t in enumerate(truth):
            if used_t[i]:
                continue
            for j, p in enumerate(pred):
                if used_p[j] or abs(p - t) > tol:
                    continue
                key = (abs(p - t), t, p)
                if best is None or key < best[0]:
                    best = (key, i, j)
        if best is None:
            return matched
        used_t[best[1]] = used_p[best[2]] = True
        matched += 1


def features_by_definition(ink: np.ndarray, regions, band: tuple[int, int]) -> np.ndarray:
    """The six cut features, column by column, straight from their definitions."""
    h, w = ink.shape
    top, bottom = band
    band_rows = list(range(top, bottom + 1))
    body_rows = [y for y in range(regions.r2[0], regions.r3[1] + 1) if not top <= y <= bottom]
    above_rows = [y for y in range(regions.r1[0], regions.r1[1] + 1) if not top <= y <= bottom]
    thickness = []
    for x in range(w):
        runs = scan_runs([ink[y, x] for y in band_rows])
        thickness.append(max((n for _, n in runs), default=0))
    positive = [t for t in thickness if t > 0]
    typical = float(np.median(positive)) if positive else 0.0
    out = np.zeros((w, 6))
    for x in range(w):
        d_body = sum(bool(ink[y, x]) for y in body_rows)
        d_above = sum(bool(ink[y, x]) for y in above_rows)
        crossings = len(scan_runs([ink[y, x] for y in body_rows]))
        band_runs = len(scan_runs([ink[y, x] for y in band_rows]))
        total = sum(bool(ink[y, x]) for y in range(h))
        in_band = sum(bool(ink[y, x]) for y in band_rows)
        out[x, 0] = 1 - min(1.0, d_body / len(body_rows)) if body_rows else 1.0
        out[x, 1] = 1 - min(1.0, d_above / max(1, len(above_rows)))
        out[x, 2] = 1.0 if crossings == 0 else 1 / (1 + crossings)
        out[x, 3] = 1 - min(1.0, abs(thickness[x] - typical) / max(1.0, typical))
        out[x, 4] = 0.0 if band_runs == 0 else 1 / band_runs
        out[x, 5] = 1.0 if total > 0 and in_band == total else 0.0
    return out


def strips_by_scan(weights, delta: float, min_strip: int) -> list[tuple[int, int, int]]:
    """(left, right, peak) of every run with weight > delta of at least min_strip columns."""
    out = []
    for start, n in scan_runs([v > delta for v in weights]):
        if n < min_strip:
            continue
        seg = list(weights[start : start + n])
        out.append((start, start + n - 1, start + seg.index(max(seg))))
    return out


def classify_by_recount(ys, regions, band, noise_area: int) -> str:
    """Class from a per-pixel region tally (head-line pixels set aside)."""
    ys = [int(y) for y in ys]
    if len(ys) < noise_area:
        return "noise"
    top, bottom = band
    inside = [y for y in ys if top <= y <= bottom]
    if len(inside) >= 0.9 * len(ys):
        return "headline_fragment"
    rest = [y for y in ys if not top <= y <= bottom]
    asc = sum(1 for y in rest if y <= regions.r1[1])
    desc = sum(1 for y in rest if y > regions.r1[1] and y >= regions.r4[0])
    body = len(rest) - asc - desc
    if body >= asc and body >= desc:
        return "main_body"
    if asc >= desc:
        return "ascendant"
    return "main_body" if inside else "descendant"


def best_overlap_attachment(spans, classes, overlap_frac: float) -> list[int | None]:
    """Exhaustive pairwise overlap: attachment target for each segment."""
    out = []
    for i, (a0, a1) in enumerate(spans):
        if classes[i] in ("main_body", "noise"):
            out.append(None)
            continue
        best, best_ov = None, 0
        for j, (b0, b1) in enumerate(spans):
            if classes[j] != "main_body":
                continue
            ov = max(0, min(a1, b1) - max(a0, b0) + 1)
            if ov == 0 or ov < overlap_frac * (a1 - a0 + 1):
                continue
            better = ov > best_ov or (ov == best_ov and b0 < spans[best][0])
            if best is None or better:
                best, best_ov = j, ov
        out.append(best)
    return out
