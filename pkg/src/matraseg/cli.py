"""Command line entry point: ``matraseg segment|evaluate|synth|inspect``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .components import WordParams, analyze_word
from .corpus.annotations import AnnotationError, CutAnnotation, format_annotations, load_annotations
from .corpus.evaluation import evaluate_cuts
from .corpus.overlay import render_overlay
from .corpus.pnm import PNMError, atomic_write, load_pgm, save_pgm, save_ppm
from .corpus.synth import SynthParams, synth_corpus
from .exceptions import SegmentationError
from .headline import FEATURE_NAMES
from .page import PageParams
from .pipeline import PageResult, process_page
from .raster import binarize, horizontal_profile, vertical_profile
from .validation import check_binarization

log = logging.getLogger("matraseg")


def _alphas(text: str) -> tuple[float, ...]:
    try:
        values = tuple(float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"alphas must be six comma-separated numbers, got {text!r}")
    if len(values) != 6:
        raise argparse.ArgumentTypeError(f"alphas needs six values, got {len(values)}")
    return values


def _add_word_flags(p: argparse.ArgumentParser):
    p.add_argument("--w", type=float, default=0.7, help="head-line neighbour factor (default 0.7)")
    p.add_argument("--delta", type=float, default=0.85, help="cut weightage threshold (default 0.85)")
    p.add_argument("--alphas", type=_alphas, default=None, help="six feature weights, comma separated")
    p.add_argument("--min-strip", type=int, default=2, help="narrowest cut strip in columns (default 2)")
    p.add_argument("--noise-area", type=int, default=None, help="segments below this area are noise")
    p.add_argument("--overlap-frac", type=float, default=0.5, help="column overlap needed to attach")
    p.add_argument("--binarize", default="otsu", help="otsu or fixed:N (default otsu)")


def _word_params(args) -> WordParams:
    kwargs = dict(w=args.w, delta=args.delta, min_strip=args.min_strip,
                  noise_area=args.noise_area, overlap_frac=args.overlap_frac)
    if args.alphas is not None:
        kwargs["alphas"] = args.alphas
    return WordParams(**kwargs)


def _fmt_rows(rows) -> str:
    return f"{rows[0]} {rows[1]}"


def format_listing(result: PageResult, page_params: PageParams, word_params: WordParams) -> str:
    """Per-word segment listing.  Word-level coordinates are word-relative."""
    alphas = ",".join(f"{a:.6g}" for a in word_params.alphas)
    out = [
        "# matraseg segment listing",
        f"# k1={page_params.k1 or 'auto'} k2={page_params.k2} min_gap={page_params.min_gap or 'auto'}"
        f" smoothing={page_params.smoothing}",
        f"# w={word_params.w:g} delta={word_params.delta:g} alphas={alphas} min_strip={word_params.min_strip}"
        f" noise_area={word_params.noise_area if word_params.noise_area is not None else 'auto'}"
        f" overlap_frac={word_params.overlap_frac:g}",
        f"page {result.page_id} {result.image.width} {result.image.height}",
    ]
    for i, line in enumerate(result.layout.lines):
        out.append(f"line {result.page_id} {i} {line.top} {line.bottom}")
    for word in result.words:
        b, a = word.box, word.analysis
        out.append(f"word {word.word_id} {b.line_index} {b.left} {b.top} {b.right} {b.bottom}")
        out.append(f"headline {word.word_id} " + (_fmt_rows(a.headline.rows) if a.headline else "none"))
        for s in a.cuts:
            out.append(f"strip {word.word_id} {s.left} {s.right} {s.peak_col} {s.peak_weight:.6f}")
        for k, seg in enumerate(a.segments):
            x0, y0, x1, y1 = seg.bbox
            attached = "-" if seg.attached_to is None else str(seg.attached_to)
            out.append(
                f"segment {word.word_id} {k} {seg.cls.value} {x0} {y0} {x1} {y1} {seg.component.area} {attached}"
            )
    return "\n".join(out) + "\n"


def cmd_segment(args) -> int:
    page_params = PageParams(args.k1, args.k2, args.min_gap, args.smoothing)
    word_params = _word_params(args)
    method = check_binarization(args.binarize)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    all_cuts: list[CutAnnotation] = []
    for path in args.input:
        path = Path(path)
        page = binarize(load_pgm(path), method)
        result = process_page(page, page_params, word_params, page_id=path.stem)
        cuts = [CutAnnotation(w.word_id, x) for w in result.words for x in w.cut_positions]
        all_cuts.extend(cuts)
        atomic_write(out / f"{path.stem}.segments.txt", format_listing(result, page_params, word_params))
        atomic_write(out / f"{path.stem}.cuts.txt", format_annotations(cuts, header=f"cuts for {path.stem}"))
        if args.overlay:
            save_ppm(out / f"{path.stem}.overlay.ppm", render_overlay(result))
        log.info("%s: %d lines, %d words, %d cuts", path.name, len(result.layout.lines),
                 len(result.words), len(cuts))
        print(f"{path.stem}: {len(result.layout.lines)} lines, {len(result.words)} words, {len(cuts)} cuts")
    atomic_write(out / "cuts.txt", format_annotations(all_cuts, header="predicted cut points"))
    return 0


def cmd_evaluate(args) -> int:
    pred = load_annotations(args.pred)
    gt = load_annotations(args.gt)
    report = evaluate_cuts(pred.cuts, gt.cuts, args.tolerance)
    sys.stdout.write(report.format())
    if args.fail_under is not None and report.success_rate < args.fail_under:
        return 2
    return 0


def cmd_synth(args) -> int:
    params = SynthParams(seed=args.seed, count=args.count, page_width=args.page_width)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    combined = []
    for page in synth_corpus(params):
        save_pgm(out / f"{page.page_id}.pgm", page.gray)
        records = list(page.truth.records())
        combined.extend(records)
        atomic_write(out / f"{page.page_id}.gt.txt", format_annotations(records, header=f"ground truth for {page.page_id}"))
    atomic_write(out / "ground_truth.txt",
                 format_annotations(combined, header=f"synthetic corpus seed={args.seed} count={args.count}"))
    n_cuts = sum(1 for r in combined if isinstance(r, CutAnnotation))
    print(f"wrote {args.count} pages with {n_cuts} ground-truth cuts to {out}")
    return 0


def _row(values, fmt="{:d}") -> str:
    return " ".join(fmt.format(v) for v in values)


def cmd_inspect(args) -> int:
    img = binarize(load_pgm(args.input), check_binarization(args.binarize))
    bbox = img.ink_bbox()
    if bbox is None:
        print("blank image: no ink")
        return 0
    word = img.crop(bbox)
    a = analyze_word(word, _word_params(args))
    print(f"word {word.width}x{word.height} at x={bbox.x0} y={bbox.y0} ink={word.count()}")
    print("row_profile", _row(horizontal_profile(word).counts))
    print("column_profile", _row(vertical_profile(word).counts))
    for i, band in enumerate(a.regions.bands, 1):
        print(f"region{i} {band[0]} {band[1]}")
    if a.headline is None:
        print("headline none")
        return 0
    h = a.headline
    print(f"headline {h.top} {h.bottom} max_row={h.max_row} max_count={h.max_count} w={h.w:g}")
    print("column " + " ".join(FEATURE_NAMES) + " weight")
    for c in range(word.width):
        print(f"{c} " + _row(a.features.values[c], "{:.3f}") + f" {a.weights.weights[c]:.3f}")
    for s in a.strips:
        kind = "cut" if s in a.cuts else "edge"
        print(f"strip {s.left} {s.right} peak={s.peak_col} weight={s.peak_weight:.3f} {kind}")
    for k, seg in enumerate(a.segments):
        print(f"segment {k} {seg.cls.value} bbox={tuple(seg.bbox)} area={seg.component.area}"
              f" attached={'-' if seg.attached_to is None else seg.attached_to}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="matraseg", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("segment", help="segment PGM pages into lines, words and character segments")
    p.add_argument("--input", nargs="+", required=True, help="PGM page(s)")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--k1", type=int, default=None, help="line threshold (default 1%% of page width)")
    p.add_argument("--k2", type=int, default=1, help="word column threshold (default 1)")
    p.add_argument("--min-gap", type=int, default=None, help="narrowest word gap (default quarter line height)")
    p.add_argument("--smoothing", type=int, default=1, help="row profile moving-max window")
    _add_word_flags(p)
    p.add_argument("--overlay", action="store_true", help="also write PPM overlays")
    p.set_defaults(func=cmd_segment)

    p = sub.add_parser("evaluate", help="score predicted cuts against ground truth")
    p.add_argument("--pred", nargs="+", required=True)
    p.add_argument("--gt", nargs="+", required=True)
    p.add_argument("--tolerance", type=int, default=3)
    p.add_argument("--fail-under", type=float, default=None, help="exit 2 if success rate is below this")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("synth", help="generate a synthetic page corpus with ground truth")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--page-width", type=int, default=300)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("inspect", help="dump every intermediate for one word image")
    p.add_argument("--input", required=True)
    _add_word_flags(p)
    p.set_defaults(func=cmd_inspect)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except (OSError, PNMError, AnnotationError, SegmentationError, ValueError) as exc:
        print(f"matraseg: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
