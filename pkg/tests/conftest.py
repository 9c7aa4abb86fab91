import numpy as np
import pytest

from realdiag.fit import FitConfig, FitModel, loss_and_gradient


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


def random_complex(rng, shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_hermitian(rng, n):
    M = random_complex(rng, (n, n))
    return 0.5 * (M + M.conj().T)


def brute_matmul(A, B):
    """Triple-loop product, summing left to right."""
    C = np.zeros((A.shape[0], B.shape[1]), dtype=complex)
    for i in range(A.shape[0]):
        for j in range(B.shape[1]):
            acc = 0j
            for k in range(A.shape[1]):
                acc += complex(A[i, k]) * complex(B[k, j])
            C[i, j] = acc
    return C


def random_low_rank(rng, n, k):
    return rng.standard_normal((n, k)) @ rng.standard_normal((k, n))


def fd_gradient(model, target, config, h=1e-6):
    """Central differences over the real and imaginary part of every parameter."""
    flat = np.concatenate([model.E.ravel(), model.w])
    n, m = model.E.shape

    def f(p):
        return loss_and_gradient(FitModel(p[:n * m].reshape(n, m), p[n * m:]), target, config)[0]

    grad = np.zeros(flat.size, dtype=complex)
    for k in range(flat.size):
        for unit in (1.0, 1j):
            up, dn = flat.copy(), flat.copy()
            up[k] += h * unit
            dn[k] -= h * unit
            grad[k] += unit * (f(up) - f(dn)) / (2 * h)
    return grad


def random_fit_instance(rng, loss):
    n, m = int(rng.integers(2, 6)), int(rng.integers(1, 4))
    model = FitModel(random_complex(rng, (n, m)), random_complex(rng, m))
    target = rng.choice([-1, 1], (n, n)) if loss == "logistic" else rng.standard_normal((n, n))
    return model, target, FitConfig(m=m, loss=loss, l2=float(rng.uniform(0, 0.5)))


def gradient_mismatch(model, target, config):
    _, g = loss_and_gradient(model, target, config)
    analytic = np.concatenate([g.E.ravel(), g.w])
    numeric = fd_gradient(model, target, config)
    worst = 0.0
    for a, f in zip(np.concatenate([analytic.real, analytic.imag]), np.concatenate([numeric.real, numeric.imag])):
        if abs(f) > 1e-8:
            worst = max(worst, abs(a - f) / abs(f))
    return worst


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
