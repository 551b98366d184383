import pytest
from hypothesis import given
from hypothesis import strategies as st

from matraseg import ParameterError
from matraseg.corpus import CutAnnotation, EvalReport, evaluate_cuts, match_cuts

from oracles import greedy_match_count

cut_lists = st.lists(st.integers(0, 60), max_size=8)
word_maps = st.dictionaries(st.sampled_from("abcd"), cut_lists, max_size=4)


def test_exact():
    r = evaluate_cuts({"w": [3, 9]}, {"w": [3, 9]}, 3)
    assert (r.success_rate, r.precision, r.spurious, r.missed) == (1.0, 1.0, 0, 0)


def test_reported_protocol_arithmetic():
    truth = {f"w{i}": [10, 30] for i in range(109)}
    pred = {k: list(v) for k, v in truth.items()}
    for i in range(5):
        pred[f"w{i}"] = [10]
    r = evaluate_cuts(pred, truth, 3)
    assert (r.total_gt, r.matched, r.missed) == (218, 213, 5)
    assert round(r.success_rate, 3) == 0.977
    assert round(0.977 * 218) == 213


def test_greedy_prefers_nearest():
    # truth 10 takes prediction 11, leaving 13 for truth 14
    assert sorted(match_cuts([11, 13], [10, 14], 3)) == [(0, 0), (1, 1)]
    r = evaluate_cuts({"w": [12]}, {"w": [10, 13]}, 3)
    assert (r.matched, r.spurious, r.missed) == (1, 0, 1)


def test_predictions_for_unknown_words_are_spurious():
    r = evaluate_cuts({"w": [1], "x": [5]}, {"w": [1]}, 0)
    assert (r.matched, r.spurious, r.precision) == (1, 1, 0.5)


def test_accepts_annotations():
    gt = [CutAnnotation("w", 4), CutAnnotation("w", 20)]
    assert evaluate_cuts([CutAnnotation("w", 5)], gt, 1).matched == 1


def test_empty_sets():
    r = evaluate_cuts({}, {}, 3)
    assert r.success_rate == 1.0 and r.precision == 1.0


def test_negative_tolerance():
    with pytest.raises(ParameterError):
        evaluate_cuts({}, {}, -1)


def test_format():
    text = EvalReport(218, 213, 2, 3).format()
    assert "success_rate 0.9771" in text and "missed 5" in text and "precision 0.9907" in text


@given(word_maps, word_maps, st.integers(0, 10))
def test_against_greedy_oracle(pred, truth, tol):
    r = evaluate_cuts(pred, truth, tol)
    want = sum(greedy_match_count(pred.get(w, []), xs, tol) for w, xs in truth.items())
    assert r.matched == want
    assert r.total_gt == sum(map(len, truth.values()))
    assert r.total_pred == sum(map(len, pred.values()))
    assert 0 <= r.success_rate <= 1 and 0 <= r.precision <= 1 and r.matched <= r.total_gt


@given(word_maps, st.integers(0, 10))
def test_self_evaluation_is_perfect(cuts, tol):
    r = evaluate_cuts(cuts, cuts, tol)
    assert r.success_rate == 1.0 and r.precision == 1.0


@given(word_maps, word_maps, st.integers(0, 10), st.integers(0, 10))
def test_tolerance_monotone(pred, truth, a, b):
    lo, hi = sorted((a, b))
    assert evaluate_cuts(pred, truth, lo).matched <= evaluate_cuts(pred, truth, hi).matched
