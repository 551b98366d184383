import hashlib

import numpy as np
import pytest

from matraseg import GrayImage
from matraseg.cli import main
from matraseg.corpus import load_annotations, parse_annotations
from matraseg.corpus.overlay import BOX_COLOR
from matraseg.corpus.pnm import encode_pgm, parse_pgm, save_pgm


def tree_digest(root):
    return {str(p.relative_to(root)): hashlib.sha256(p.read_bytes()).hexdigest()
            for p in sorted(root.rglob("*")) if p.is_file()}


@pytest.fixture(scope="module")
def corpus(tmp_path_factory):
    out = tmp_path_factory.mktemp("corpus")
    assert main(["synth", "--seed", "7", "--count", "3", "--out", str(out)]) == 0
    return out


def test_synth_layout(corpus):
    names = sorted(p.name for p in corpus.iterdir())
    assert names == ["ground_truth.txt", "page000.gt.txt", "page000.pgm", "page001.gt.txt",
                     "page001.pgm", "page002.gt.txt", "page002.pgm"]
    truth = load_annotations(corpus / "ground_truth.txt")
    assert truth.cuts and truth.words and truth.lines and truth.headlines


def test_synth_is_deterministic(corpus, tmp_path):
    assert main(["synth", "--seed", "7", "--count", "3", "--out", str(tmp_path)]) == 0
    assert tree_digest(tmp_path) == tree_digest(corpus)


def test_round_trip(corpus, tmp_path, capsys):
    pages = sorted(str(p) for p in corpus.glob("*.pgm"))
    assert main(["segment", "--input", *pages, "--out", str(tmp_path), "--overlay"]) == 0
    for stem in ("page000", "page001", "page002"):
        for suffix in (".segments.txt", ".cuts.txt", ".overlay.ppm"):
            assert (tmp_path / f"{stem}{suffix}").exists()
    capsys.readouterr()
    code = main(["evaluate", "--pred", str(tmp_path / "cuts.txt"), "--gt", str(corpus / "ground_truth.txt"),
                 "--fail-under", "0.95"])
    report = dict(line.split() for line in capsys.readouterr().out.splitlines())
    assert code == 0 and float(report["success_rate"]) >= 0.95


def test_listing_contents(corpus, tmp_path):
    main(["segment", "--input", str(corpus / "page000.pgm"), "--out", str(tmp_path)])
    text = (tmp_path / "page000.segments.txt").read_text()
    kinds = {line.split()[0] for line in text.splitlines() if not line.startswith("#")}
    assert kinds == {"page", "line", "word", "headline", "strip", "segment"}
    truth = load_annotations(corpus / "page000.gt.txt")
    words = [line.split() for line in text.splitlines() if line.startswith("word ")]
    assert [(w[1], *map(int, w[2:])) for w in words] == [
        (r.word_id, r.line_index, r.left, r.top, r.right, r.bottom) for r in truth.words
    ]
    # the segment listing carries the word records in the annotation grammar
    assert parse_annotations("\n".join(" ".join(w) for w in words)).words == truth.words


def test_segment_is_deterministic(corpus, tmp_path):
    pages = sorted(str(p) for p in corpus.glob("*.pgm"))
    for run in ("a", "b"):
        main(["segment", "--input", *pages, "--out", str(tmp_path / run), "--overlay", "--delta", "0.8"])
    assert tree_digest(tmp_path / "a") == tree_digest(tmp_path / "b")


def test_overlay_colors(corpus, tmp_path):
    main(["segment", "--input", str(corpus / "page000.pgm"), "--out", str(tmp_path), "--overlay"])
    data = (tmp_path / "page000.overlay.ppm").read_bytes()
    assert data.startswith(b"P6\n")
    w, h = (int(v) for v in data.split(b"\n")[1].split())
    rgb = np.frombuffer(data[-w * h * 3 :], np.uint8).reshape(h, w, 3)
    colors = {tuple(c) for c in rgb.reshape(-1, 3)}
    assert tuple(BOX_COLOR) in colors
    assert (0, 0, 127) in colors  # ink under the head-line tint
    assert any(r > 0 and g == 0 and b < r for r, g, b in colors)  # cut tint


def test_blank_page(tmp_path, capsys):
    save_pgm(tmp_path / "blank.pgm", GrayImage(np.full((40, 60), 255, np.uint8)))
    assert main(["segment", "--input", str(tmp_path / "blank.pgm"), "--out", str(tmp_path / "o")]) == 0
    assert "0 words" in capsys.readouterr().out


def test_fail_under_exit(tmp_path):
    (tmp_path / "p.txt").write_text("cut w 1\n")
    (tmp_path / "g.txt").write_text("cut w 1\ncut w 20\n")
    args = ["evaluate", "--pred", str(tmp_path / "p.txt"), "--gt", str(tmp_path / "g.txt")]
    assert main(args) == 0
    assert main(args + ["--fail-under", "0.9"]) == 2


def test_errors_exit_one(tmp_path, capsys):
    assert main(["segment", "--input", str(tmp_path / "missing.pgm"), "--out", str(tmp_path)]) == 1
    (tmp_path / "bad.pgm").write_bytes(b"P5\n2 2\n999\n")
    assert main(["segment", "--input", str(tmp_path / "bad.pgm"), "--out", str(tmp_path)]) == 1
    (tmp_path / "bad.txt").write_text("cut w\n")
    assert main(["evaluate", "--pred", str(tmp_path / "bad.txt"), "--gt", str(tmp_path / "bad.txt")]) == 1
    err = capsys.readouterr().err
    assert err.count("matraseg: error:") == 3 and "at byte" in err and "line 1" in err


def test_bad_flag_values(tmp_path):
    with pytest.raises(SystemExit):
        main(["segment", "--input", "x.pgm", "--out", str(tmp_path), "--alphas", "1,2"])
    save_pgm(tmp_path / "p.pgm", GrayImage(np.zeros((4, 4), np.uint8)))
    assert main(["segment", "--input", str(tmp_path / "p.pgm"), "--out", str(tmp_path), "--delta", "3"]) == 1
    assert main(["segment", "--input", str(tmp_path / "p.pgm"), "--out", str(tmp_path), "--binarize", "x"]) == 1


def test_inspect(tmp_path, capsys):
    ink = np.zeros((20, 30), bool)
    ink[5:8, 2:28] = True
    ink[5:18, 6:9] = True
    ink[5:18, 20:23] = True
    gray = GrayImage(np.where(ink, 0, 255).astype(np.uint8))
    (tmp_path / "w.pgm").write_bytes(encode_pgm(gray))
    assert main(["inspect", "--input", str(tmp_path / "w.pgm")]) == 0
    out = capsys.readouterr().out
    for key in ("row_profile", "column_profile", "region1", "region4", "headline 0 2", "column body_density",
                "strip", "segment 0 main_body"):
        assert key in out
    assert parse_pgm((tmp_path / "w.pgm").read_bytes()) == gray


def test_inspect_blank(tmp_path, capsys):
    save_pgm(tmp_path / "b.pgm", GrayImage(np.full((5, 5), 255, np.uint8)))
    assert main(["inspect", "--input", str(tmp_path / "b.pgm")]) == 0
    assert "no ink" in capsys.readouterr().out
