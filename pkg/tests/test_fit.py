import json
import math
from pathlib import Path

import numpy as np
import pytest

from realdiag.errors import DivergenceError, ShapeError
from realdiag.fit import (
    FitConfig, FitModel, fit_lowrank, loss_and_gradient, predict, sign_accuracy,
)

from conftest import gradient_mismatch, random_fit_instance, random_complex

RUNS = json.loads((Path(__file__).parent / "fixtures" / "fit_runs.json").read_text())
MIXED_DIAG_Y = [[-1, -1], [1, 1]]


def predict_oracle(E, w):
    n, m = E.shape
    P = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            P[i, j] = sum(w[c] * E[i, c] * np.conj(E[j, c]) for c in range(m)).real
    return P


def test_config_validation():
    for bad in (dict(m=0), dict(m=1, epochs=0), dict(m=1, learning_rate=0.0),
                dict(m=1, l2=-1.0), dict(m=1, loss="hinge"), dict(m=1, init_scale=0.0)):
        with pytest.raises(ValueError):
            FitConfig(**bad)


def test_predict_examples():
    assert np.array_equal(predict(FitModel(np.eye(2, dtype=complex), np.array([1 + 1j, 1 + 1j]))), np.eye(2))
    assert np.array_equal(predict(FitModel(np.eye(2, dtype=complex), np.array([1j, 1j]))), np.zeros((2, 2)))
    E, w = np.array([[1.0], [1j]]), np.array([1.0 + 0j])
    assert np.allclose(predict_oracle(E, w), np.eye(2))
    assert np.allclose(predict(FitModel(E, w)), np.eye(2))


def test_predict_matches_oracle(rng):
    E, w = random_complex(rng, (4, 3)), random_complex(rng, 3)
    assert np.allclose(predict(FitModel(E, w)), predict_oracle(E, w), atol=1e-13)


def test_perfect_squared_fit_has_zero_loss_and_gradient(rng):
    model = FitModel(random_complex(rng, (3, 2)), random_complex(rng, 2))
    loss, g = loss_and_gradient(model, predict(model), FitConfig(m=2))
    assert loss == 0.0
    assert np.all(g.E == 0) and np.all(g.w == 0)


def test_logistic_loss_at_zero_scores():
    n = 3
    model = FitModel(np.zeros((n, 1), dtype=complex), np.zeros(1, dtype=complex))
    Y = np.where(np.arange(9).reshape(3, 3) % 2, 1, -1)
    loss, _ = loss_and_gradient(model, Y, FitConfig(m=1, loss="logistic"))
    assert loss == pytest.approx(n * n * math.log(2), rel=1e-15)


def test_shape_mismatch():
    model = FitModel(np.ones((3, 1), dtype=complex), np.ones(1, dtype=complex))
    with pytest.raises(ShapeError):
        loss_and_gradient(model, np.eye(2), FitConfig(m=1))


@pytest.mark.parametrize("loss", ["squared", "logistic"])
def test_gradients_match_finite_differences(rng, loss):
    for _ in range(10):
        assert gradient_mismatch(*random_fit_instance(rng, loss)) <= 1e-5


def test_identity_fit_converges():
    assert all(r["final_trace_loss"] <= 1e-4 for r in RUNS["identity4_squared_m4"].values())
    for seed in (0, 1, 2):
        model, trace = fit_lowrank(np.eye(4), FitConfig(m=4, seed=seed))
        assert trace.shape == (2000,)
        assert trace[-1] <= 1e-4
        final, _ = loss_and_gradient(model, np.eye(4), FitConfig(m=4))
        assert final <= 1e-4


def test_rank_one_cannot_realise_mixed_diagonal():
    for seed in (0, 1, 2):
        model, _ = fit_lowrank(MIXED_DIAG_Y, FitConfig(m=1, loss="logistic", seed=seed))
        assert sign_accuracy(model, MIXED_DIAG_Y) < 1.0
        diag = np.diag(predict(model))
        assert diag[0] * diag[1] >= 0


def test_rank_two_realises_pattern_on_most_seeds():
    hits = 0
    for seed in (0, 1, 2):
        model, _ = fit_lowrank(MIXED_DIAG_Y, FitConfig(m=2, loss="logistic", seed=seed))
        acc = sign_accuracy(model, MIXED_DIAG_Y)
        assert acc == RUNS["mixed_diag_logistic_m2"][str(seed)]["sign_accuracy"]
        hits += acc == 1.0
    assert hits >= 2


def test_fit_is_deterministic():
    cfg = FitConfig(m=2, seed=11, epochs=200)
    (m1, t1), (m2, t2) = fit_lowrank(np.eye(3), cfg), fit_lowrank(np.eye(3), cfg)
    assert np.array_equal(t1, t2)
    assert np.array_equal(m1.E, m2.E) and np.array_equal(m1.w, m2.w)


def test_fit_escapes_symmetry():
    model, trace = fit_lowrank([[0.0, 1.0], [0.0, 0.0]], FitConfig(m=2, seed=0))
    P = predict(model)
    assert P[0, 1] - P[1, 0] > 0.5
    assert np.all(np.isfinite(trace))


def test_divergence_is_reported():
    with pytest.raises(DivergenceError) as info:
        fit_lowrank(np.eye(3) * 100, FitConfig(m=3, learning_rate=10.0, init_scale=1.0, epochs=500))
    assert 0 <= info.value.epoch < 500
