"""Smoke tests for the python bindings."""

import math

import pytest

import oddkit


@pytest.fixture(scope="module")
def demo_data():
    return oddkit.generate_data(n_train=200, n_test=100, n_features=2, seed=42)


def test_generate_shapes(demo_data):
    X_train, y_train, X_test, y_test = demo_data
    assert len(X_train) == 200 and len(X_train[0]) == 2
    assert len(X_test) == 100 and len(X_test[0]) == 2
    assert sum(y_train) == 20
    assert sum(y_test) == 10


def test_generate_determinism():
    a = oddkit.generate_data(n_train=30, n_test=10, seed=7)
    b = oddkit.generate_data(n_train=30, n_test=10, seed=7)
    assert a == b


def test_detector_contract(demo_data):
    X_train, y_train, X_test, y_test = demo_data
    det = oddkit.Detector("knn", k=5).fit(X_train)
    assert det.fitted
    assert det.algo == "knn"
    assert len(det.decision_scores_) == 200
    assert sum(det.labels_) == 20  # contamination 0.1 on 200 train rows

    scores = det.decision_function(X_test)
    labels = det.predict(X_test)
    probs = det.predict_proba(X_test, method="unify")
    assert len(scores) == len(labels) == len(probs) == 100
    assert all(p == 0 or 0 < p <= 1 for p in probs)
    assert all(l == (1 if s > det.threshold_ else 0) for s, l in zip(scores, labels))

    assert oddkit.roc_auc(y_test, scores) > 0.8


def test_every_algorithm_runs(demo_data):
    X_train, _, X_test, _ = demo_data
    for algo in oddkit.algo_names():
        det = oddkit.Detector(algo, k=5, trees=20, psi=32, rounds=3).fit(X_train)
        scores = det.decision_function(X_test)
        assert len(scores) == 100
        assert all(math.isfinite(s) for s in scores)


def test_model_round_trip(tmp_path, demo_data):
    X_train, _, X_test, _ = demo_data
    det = oddkit.Detector("iforest", trees=20, psi=32, seed=5).fit(X_train)
    path = str(tmp_path / "m.json")
    det.save(path)
    loaded = oddkit.load_model(path)
    assert loaded.decision_function(X_test) == det.decision_function(X_test)


def test_evaluate_format():
    y = [0, 0, 1, 1]
    s = [0.1, 0.2, 0.3, 0.4]
    assert oddkit.evaluate_format("ABOD", y, s) == (
        "ABOD Performance; ROC: 1.000; Precision at n: 1.000"
    )


def test_combiners():
    s = [[1.0, 3.0], [2.0, 4.0]]
    assert oddkit.combine_average(s) == [2.0, 3.0]
    assert oddkit.combine_max(s) == [3.0, 4.0]
    assert oddkit.combine_aom(s, 2, seed=1) == oddkit.combine_average(s)
    assert oddkit.combine_moa(s, 1, seed=1) == oddkit.combine_average(s)
    z = oddkit.zscore_standardize([[1.0], [2.0], [3.0]])
    assert z[1][0] == 0.0


def test_threshold_ops():
    scores = [float(i) for i in range(1, 11)]
    threshold = oddkit.threshold_from_scores(scores, 0.2)
    assert abs(threshold - 8.2) < 1e-12
    assert oddkit.labels_from_scores(scores, threshold) == [0] * 8 + [1, 1]


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        oddkit.Detector("nosuch")
    with pytest.raises(ValueError):
        oddkit.roc_auc([0, 0], [0.1, 0.2])
