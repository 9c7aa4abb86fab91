"""
Dense real and complex matrix primitives.

Matrices are plain numpy arrays: ``float64`` for real matrices and
``complex128`` (a packed pair of float64 components) for complex ones.
The ``as_*`` helpers validate and normalise inputs; every other function
in the package funnels its arguments through them.
"""

import numpy as np

from .errors import ShapeError


def _as_2d(M, dtype, what):
    arr = np.array(M, dtype=dtype, copy=True)
    if arr.ndim != 2:
        raise ShapeError(f"{what} must be two-dimensional, got shape {arr.shape}")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ShapeError(f"{what} must have positive dimensions, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{what} contains NaN or Inf")
    return arr


def as_real_matrix(M):
    """Copy ``M`` into a finite float64 matrix."""
    if np.iscomplexobj(M):
        raise TypeError("expected a real matrix, got complex entries")
    return _as_2d(M, np.float64, "real matrix")


def as_complex_matrix(M):
    """Copy ``M`` into a finite complex128 matrix."""
    return _as_2d(M, np.complex128, "complex matrix")


def require_square(M, what="matrix"):
    if M.shape[0] != M.shape[1]:
        raise ShapeError(f"{what} must be square, got {M.shape[0]}x{M.shape[1]}")


def conj_transpose(M):
    """Return ``M*``, the conjugate transpose."""
    return np.ascontiguousarray(np.conj(np.asarray(M)).T)


def matmul(A, B):
    """Matrix product with a fixed summation order.

    Entry ``(i, j)`` is accumulated as
    ``((A[i,0]B[0,j] + A[i,1]B[1,j]) + A[i,2]B[2,j]) + ...``, so results are
    bit-reproducible on a given platform regardless of the BLAS in use.
    Real inputs give a real result; anything complex gives complex128.
    """
    A = np.asarray(A)
    B = np.asarray(B)
    if A.ndim != 2 or B.ndim != 2:
        raise ShapeError("matmul expects two-dimensional operands")
    if A.shape[1] != B.shape[0]:
        raise ShapeError(
            f"cannot multiply {A.shape[0]}x{A.shape[1]} by {B.shape[0]}x{B.shape[1]}"
        )
    if not (np.iscomplexobj(A) or np.iscomplexobj(B)):
        A = A.astype(np.float64, copy=False)
        B = B.astype(np.float64, copy=False)
        C = np.zeros((A.shape[0], B.shape[1]))
        for k in range(A.shape[1]):
            C += A[:, k:k + 1] * B[k:k + 1, :]
        return C
    # explicit (re, im) arithmetic: numpy's complex multiply kernel may fuse
    # operations and round differently from the textbook formula
    ar, ai = np.real(A).astype(np.float64), np.imag(A).astype(np.float64)
    br, bi = np.real(B).astype(np.float64), np.imag(B).astype(np.float64)
    cr = np.zeros((A.shape[0], B.shape[1]))
    ci = np.zeros_like(cr)
    for k in range(A.shape[1]):
        xr, xi = ar[:, k:k + 1], ai[:, k:k + 1]
        yr, yi = br[k:k + 1, :], bi[k:k + 1, :]
        cr += xr * yr - xi * yi
        ci += xr * yi + xi * yr
    return cr + 1j * ci


def frobenius_norm(M):
    M = np.asarray(M)
    if M.size == 0:
        return 0.0
    # scale first so huge or tiny entries neither overflow nor underflow
    scale = float(np.max(np.abs(M)))
    if scale == 0.0:
        return 0.0
    Ms = M / scale
    return scale * float(np.sqrt(np.sum(Ms.real ** 2 + Ms.imag ** 2)))


def singular_values(M):
    """Singular values of ``M`` in descending order, via the Jacobi solver.

    The eigenvalues of the Hermitian dilation ``[[0, M], [M*, 0]]`` are
    ``+-sigma_i`` padded with zeros, so the ``min(rows, cols)`` largest of
    them are the singular values. Going through the dilation keeps absolute
    accuracy near ``eps * sigma_max``; squaring into ``M*M`` would smear the
    zero singular values up to ``sqrt(eps) * sigma_max``.
    """
    from .eig import eigh

    M = as_complex_matrix(M)
    m, n = M.shape
    K = np.zeros((m + n, m + n), dtype=np.complex128)
    K[:m, m:] = M
    K[m:, :m] = conj_transpose(M)
    d = eigh(K).d[::-1]
    return np.maximum(d[:min(m, n)], 0.0)


def numerical_rank(M, tol=1e-10):
    """Count singular values above ``tol * max(rows, cols) * sigma_max``."""
    if not tol > 0:
        raise ValueError("tol must be positive")
    M = as_complex_matrix(M)
    sigma = singular_values(M)
    if sigma.size == 0 or sigma[0] == 0.0:
        return 0
    gate = tol * max(M.shape) * sigma[0]
    return int(np.count_nonzero(sigma > gate))
