import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from matraseg import BinaryImage, DimensionError, GrayImage, PageSegmenter, ParameterError, WordSegmenter
from matraseg.corpus import SynthParams, synth_corpus, synth_word
from matraseg.validation import check_binarization, check_image, check_images


@pytest.fixture(scope="module")
def words():
    rng = np.random.default_rng(17)
    return [synth_word(SynthParams(), rng) for _ in range(30)]


def test_params_round_trip():
    est = WordSegmenter(delta=0.9, alphas=(1, 1, 1, 1, 1, 1))
    params = est.get_params()
    assert params["delta"] == 0.9 and params["binarization"] == "otsu"
    twin = clone(est)
    assert twin.get_params() == params and twin is not est
    assert est.set_params(w=0.5).w == 0.5


def test_page_params_listed():
    assert {"k1", "k2", "min_gap", "smoothing", "w", "delta"} <= set(PageSegmenter().get_params())


def test_not_fitted():
    with pytest.raises(NotFittedError):
        WordSegmenter().transform([BinaryImage.blank(3, 3)])


@pytest.mark.parametrize(
    "kwargs",
    [{"w": 2.0}, {"delta": -0.1}, {"min_strip": 0}, {"alphas": (0,) * 6}, {"binarization": "mean"},
     {"noise_area": -1}, {"overlap_frac": True}],
)
def test_fit_validates(kwargs):
    with pytest.raises(ParameterError):
        WordSegmenter(**kwargs).fit()


@pytest.mark.parametrize("kwargs", [{"k1": 0}, {"k2": 1.5}, {"min_gap": 0}, {"smoothing": None}])
def test_page_fit_validates(kwargs):
    with pytest.raises(ParameterError):
        PageSegmenter(**kwargs).fit()


def test_word_predict_and_score(words):
    est = WordSegmenter().fit()
    X = [w.image for w in words]
    y = [w.cuts for w in words]
    assert len(est.predict(X)) == len(words)
    assert est.score(X, y) >= 0.95
    assert est.evaluate(X, y).total_gt == sum(map(len, y))


def test_word_transform_accepts_arrays(words):
    est = WordSegmenter().fit()
    img = words[0].image
    gray = np.where(img.ink, 0, 255).astype(np.uint8)
    a = est.transform(img)[0]
    assert est.transform(gray)[0].cut_positions == a.cut_positions
    assert est.transform(img.ink)[0].cut_positions == a.cut_positions
    assert est.transform(np.stack([img.ink, img.ink]))[1].cut_positions == a.cut_positions


def test_page_segmenter_scores_synthetic_pages():
    pages = synth_corpus(SynthParams(seed=2, count=3))
    est = PageSegmenter().fit()
    X = [p.gray for p in pages]
    ids = [p.page_id for p in pages]
    assert est.score(X, [p.truth for p in pages], page_ids=ids) >= 0.95
    results = est.transform(X, page_ids=ids)
    assert [r.page_id for r in results] == ids
    assert set(est.predict(X, ids)[0]) == {w.word_id for w in pages[0].truth.words}


def test_fit_transform(words):
    out = WordSegmenter().fit_transform([w.image for w in words[:2]])
    assert len(out) == 2


def test_validation_helpers():
    assert check_binarization("fixed:40") == 40 and check_binarization(7) == 7
    with pytest.raises(ParameterError):
        check_binarization("fixed:x")
    assert check_image(GrayImage(np.zeros((2, 2), np.uint8))).count() == 4
    with pytest.raises(ParameterError):
        check_image(np.array([["a"]]))
    with pytest.raises(ParameterError):
        check_images(42)
    with pytest.raises(DimensionError):
        check_image(np.zeros(3))
