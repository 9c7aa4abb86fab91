"""
Relaxed low-rank real-part factorisation trained by gradient descent.

The model scores entry ``(i, j)`` as ``Re(sum_c w_c E[i, c] conj(E[j, c]))``,
i.e. ``Re(E diag(w) E*)`` with the unitarity of ``E`` dropped. Each row of
``E`` is one embedding used on both the row and the column side, yet the
scores need not be symmetric.

Gradients are taken with respect to the real and imaginary parts of each
parameter as independent reals and packed back as ``d/dRe + i d/dIm``
(twice the conjugate Wirtinger derivative).
"""

from dataclasses import dataclass

import numpy as np
from scipy.special import expit

from .densecore import as_real_matrix, require_square
from .errors import DivergenceError, ShapeError
from .signrank import as_sign_matrix

LOSSES = ("squared", "logistic")


@dataclass
class FitConfig:
    m: int
    loss: str = "squared"
    learning_rate: float = 0.05
    epochs: int = 2000
    l2: float = 0.0
    seed: int = 0
    init_scale: float = 0.1

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("rank m must be at least 1")
        if self.epochs < 1:
            raise ValueError("epochs must be at least 1")
        if not self.learning_rate > 0:
            raise ValueError("learning_rate must be positive")
        if self.l2 < 0:
            raise ValueError("l2 must be non-negative")
        if not self.init_scale > 0:
            raise ValueError("init_scale must be positive")
        if self.loss not in LOSSES:
            raise ValueError(f"loss must be one of {LOSSES}, got {self.loss!r}")


@dataclass
class FitModel:
    E: np.ndarray   # (n, m) complex row embeddings
    w: np.ndarray   # (m,) complex diagonal weights

    @property
    def n(self):
        return self.E.shape[0]

    @property
    def m(self):
        return self.E.shape[1]


def predict(model):
    """Real score matrix ``Re(E diag(w) E*)``."""
    E = np.asarray(model.E, dtype=np.complex128)
    w = np.asarray(model.w, dtype=np.complex128)
    return np.ascontiguousarray(((E * w) @ E.conj().T).real)


def _prepare_target(target, loss):
    if loss == "logistic":
        Y = as_sign_matrix(target).astype(np.float64)
    else:
        Y = as_real_matrix(target)
    require_square(Y, "target")
    return Y


def loss_and_gradient(model, target, config):
    """Objective value and its gradient as a FitModel-shaped record.

    squared:  sum_ij (P_ij - A_ij)^2 + l2 (||E||^2 + ||w||^2)
    logistic: sum_ij log(1 + exp(-Y_ij P_ij)) + l2 (||E||^2 + ||w||^2)
    with ``P = predict(model)``.
    """
    T = _prepare_target(target, config.loss)
    E = np.asarray(model.E, dtype=np.complex128)
    w = np.asarray(model.w, dtype=np.complex128)
    if T.shape[0] != E.shape[0]:
        raise ShapeError(f"target is {T.shape[0]}x{T.shape[1]} but model has {E.shape[0]} rows")
    if w.shape != (E.shape[1],):
        raise ShapeError(f"weights have shape {w.shape}, expected ({E.shape[1]},)")

    P = predict(FitModel(E, w))
    if config.loss == "squared":
        diff = P - T
        data = float(np.sum(diff * diff))
        G = 2.0 * diff
    else:
        margins = T * P
        data = float(np.sum(np.logaddexp(0.0, -margins)))
        G = -T * expit(-margins)

    reg = config.l2 * float(np.sum(np.abs(E) ** 2) + np.sum(np.abs(w) ** 2))
    # dP_ij = Re(w_c (dE_ic conj(E_jc) + E_ic conj(dE_jc)) + dw_c E_ic conj(E_jc))
    gE = G @ E * w.conj() + G.T @ E * w + 2.0 * config.l2 * E
    gw = np.einsum("ic,ij,jc->c", E.conj(), G, E) + 2.0 * config.l2 * w
    return data + reg, FitModel(gE, gw)


def init_model(n, config):
    rng = np.random.default_rng(config.seed)
    s = config.init_scale
    E = s * (rng.standard_normal((n, config.m)) + 1j * rng.standard_normal((n, config.m)))
    w = s * (rng.standard_normal(config.m) + 1j * rng.standard_normal(config.m))
    return FitModel(E, w)


def fit_lowrank(target, config):
    """Full-batch gradient descent from a seeded Gaussian start.

    Returns ``(model, trace)`` where ``trace[t]`` is the objective evaluated
    before update ``t``. Raises DivergenceError if the objective stops being
    finite.
    """
    T = _prepare_target(target, config.loss)
    model = init_model(T.shape[0], config)
    lr = config.learning_rate
    trace = []
    for epoch in range(config.epochs):
        with np.errstate(over="ignore", invalid="ignore"):
            loss, grad = loss_and_gradient(model, T, config)
        if not np.isfinite(loss):
            raise DivergenceError(epoch, loss)
        trace.append(loss)
        model = FitModel(model.E - lr * grad.E, model.w - lr * grad.w)
    if not (np.all(np.isfinite(model.E)) and np.all(np.isfinite(model.w))):
        raise DivergenceError(config.epochs, float("nan"))
    return model, np.array(trace)


def sign_accuracy(model, Y):
    """Fraction of entries with ``Y_ij * P_ij > 0``; zero scores count as wrong."""
    Y = as_sign_matrix(Y)
    return float(np.mean(Y * predict(model) > 0))
