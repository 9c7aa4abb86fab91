import math

import numpy as np
import pytest

from realdiag.densecore import conj_transpose, frobenius_norm
from realdiag.eig import eig_normal_lift, eigh, hermitian_from_lift
from realdiag.errors import ConvergenceError, PreconditionError
from realdiag.lift import lift_real

from conftest import random_hermitian

R2 = math.sqrt(2.0)
E45 = complex(math.sqrt(0.5), math.sqrt(0.5))  # e^{i pi/4}


def sorted_by_line(lam):
    """Order eigenvalues by their signed coordinate along the e^{i pi/4} line."""
    return np.array(sorted(lam, key=lambda z: (z / E45).real))


def test_hermitian_from_lift_examples():
    assert np.allclose(hermitian_from_lift((1 + 1j) * np.eye(2)), R2 * np.eye(2), atol=1e-15)
    H = hermitian_from_lift([[0, 1], [1j, 0]])
    expected = np.array([[0, (1 - 1j) / R2], [(1 + 1j) / R2, 0]])
    assert np.allclose(H, expected, atol=1e-15)
    K = np.array([[0, 1], [-1, 0]])
    H = hermitian_from_lift((1 - 1j) * K)
    assert np.allclose(H, [[0, -R2 * 1j], [R2 * 1j, 0]], atol=1e-15)
    assert np.array_equal(H, conj_transpose(H))


def test_hermitian_from_lift_is_exactly_hermitian_for_lifts(rng):
    for n in (3, 10, 25):
        H = hermitian_from_lift(lift_real(rng.standard_normal((n, n))))
        assert np.array_equal(H, conj_transpose(H))


def test_hermitian_from_lift_rejects_non_lifts():
    with pytest.raises(PreconditionError, match="quarter-turn"):
        hermitian_from_lift(np.eye(2))


def test_eigh_diagonal_input():
    res = eigh(np.diag([3.0, 1.0]))
    assert np.array_equal(res.d, [1.0, 3.0])
    assert np.array_equal(np.abs(res.U), [[0, 1], [1, 0]])


def test_eigh_2x2_against_characteristic_polynomial():
    H = np.array([[0, (1 - 1j) / R2], [(1 + 1j) / R2, 0]])
    # lambda^2 - tr(H) lambda + det(H) = 0
    oracle = np.sort(np.roots([1, -np.trace(H), np.linalg.det(H)]).real)
    assert np.allclose(oracle, [-1, 1], atol=1e-14)
    assert np.allclose(eigh(H).d, [-1.0, 1.0], atol=1e-14)


def test_eigh_scalar_matrix():
    res = eigh(R2 * np.eye(3))
    assert np.allclose(res.d, [R2] * 3, rtol=1e-15)
    assert frobenius_norm(conj_transpose(res.U) @ res.U - np.eye(3)) <= 1e-14


def test_eigh_rejects_non_hermitian_and_bad_sweeps():
    with pytest.raises(PreconditionError):
        eigh([[0, 1], [0, 0]])
    with pytest.raises(PreconditionError):
        eigh(np.eye(2), max_sweeps=0)


def test_eigh_reports_non_convergence(rng):
    H = random_hermitian(rng, 20)
    with pytest.raises(ConvergenceError) as info:
        eigh(H, max_sweeps=1)
    assert info.value.residual > 1e-12 * frobenius_norm(H)
    assert info.value.sweeps == 1


@pytest.mark.parametrize("n", [1, 2, 7, 30, 100])
def test_eigh_invariants(rng, n):
    H = random_hermitian(rng, n)
    res = eigh(H)
    normH = frobenius_norm(H)
    assert np.all(np.diff(res.d) >= 0)
    assert frobenius_norm(H @ res.U - res.U * res.d) <= 1e-9 * max(1.0, normH)
    assert frobenius_norm(conj_transpose(res.U) @ res.U - np.eye(n)) <= 1e-10 * n
    assert frobenius_norm(H - (res.U * res.d) @ conj_transpose(res.U)) <= 1e-10 * max(1.0, normH)
    tr = np.trace(H).real
    assert abs(res.d.sum() - tr) <= 1e-9 * max(1.0, abs(tr))
    assert abs(np.sum(res.d ** 2) - normH ** 2) <= 1e-9 * normH ** 2
    assert np.allclose(res.d, np.linalg.eigvalsh(H), atol=1e-10 * normH)


def test_off_diagonal_norm_never_increases(rng):
    for n in (5, 20, 60):
        hist = eigh(random_hermitian(rng, n)).off_history
        assert len(hist) >= 2
        assert all(b <= a for a, b in zip(hist, hist[1:]))


def test_eig_normal_lift_nilpotent_example():
    X = np.array([[0, 1], [1j, 0]])
    # characteristic polynomial lambda^2 = i
    oracle = sorted_by_line(np.roots([1, 0, -1j]))
    assert np.allclose(oracle, [-E45, E45], atol=1e-15)
    D = eig_normal_lift(X)
    assert np.allclose(D.lam, oracle, atol=1e-14)
    assert frobenius_norm(X - (D.S * D.lam) @ conj_transpose(D.S)) <= 1e-14


def test_eig_normal_lift_scalar():
    D = eig_normal_lift((1 + 1j) * np.eye(2))
    assert np.allclose(D.lam, [1 + 1j, 1 + 1j], atol=1e-15)


def test_eig_normal_lift_symmetric_input():
    A = np.array([[1.0, 2.0], [2.0, 3.0]])
    mu = np.sort(np.roots([1, -np.trace(A), np.linalg.det(A)]).real)
    assert np.allclose(mu, [2 - math.sqrt(5), 2 + math.sqrt(5)], atol=1e-14)
    D = eig_normal_lift(lift_real(A))
    assert np.allclose(D.lam, (1 + 1j) * mu, atol=1e-13)


def test_eig_normal_lift_spectrum_on_quarter_turn_line(rng):
    for n in (3, 12, 40):
        D = eig_normal_lift(lift_real(rng.uniform(-1, 1, (n, n))))
        turned = D.lam * E45.conjugate()
        assert np.all(np.abs(turned.imag) <= 1e-9 * np.maximum(1.0, np.abs(D.lam)))
        X = lift_real(rng.uniform(-1, 1, (n, n)))
        D = eig_normal_lift(X)
        assert frobenius_norm(X - (D.S * D.lam) @ conj_transpose(D.S)) <= 1e-9 * max(1.0, frobenius_norm(X))
