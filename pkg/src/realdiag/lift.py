"""Normal lifts of real square matrices.

For real square ``A`` the matrix ``X = A + iA^T`` satisfies ``X* = -iX``,
hence ``XX* = -iX^2 = X*X``: every real square matrix is the real part of
a normal matrix. ``A^T + iA`` is the companion lift whose imaginary part
is ``A``.
"""

import numpy as np

from .densecore import (
    as_complex_matrix, as_real_matrix, conj_transpose, frobenius_norm,
    matmul, require_square,
)


def lift_real(A):
    """Return ``A + iA^T``. Real part is ``A``, imaginary part ``A^T``, exactly."""
    A = as_real_matrix(A)
    require_square(A, "lift input")
    X = np.empty(A.shape, dtype=np.complex128)
    X.real = A
    X.imag = A.T
    return X


def lift_imag(A):
    """Return ``A^T + iA``, the normal matrix with imaginary part ``A``."""
    A = as_real_matrix(A)
    require_square(A, "lift input")
    X = np.empty(A.shape, dtype=np.complex128)
    X.real = A.T
    X.imag = A
    return X


def is_normal(X, tol=1e-12):
    """True iff ``||XX* - X*X||_F <= tol * max(1, ||X||_F^2)``."""
    X = as_complex_matrix(X)
    require_square(X)
    Xh = conj_transpose(X)
    gap = frobenius_norm(matmul(X, Xh) - matmul(Xh, X))
    return gap <= tol * max(1.0, frobenius_norm(X) ** 2)


def quarter_turn_defect(X):
    """Frobenius norm of ``X* + iX``; zero exactly for lifts of real matrices."""
    X = as_complex_matrix(X)
    require_square(X)
    return frobenius_norm(conj_transpose(X) + 1j * X)


def check_quarter_turn(X, tol=1e-12):
    """True iff ``X* = -iX`` up to ``tol * max(1, ||X||_F)``."""
    return quarter_turn_defect(X) <= tol * max(1.0, frobenius_norm(X))
