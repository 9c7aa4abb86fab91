"""Real-part unitary diagonalisation of real square matrices.

Every real square ``A`` equals ``Re(S diag(lam) S*)`` for some unitary
``S``; here ``S`` and ``lam`` are the eigenpairs of the lift
``A + iA^T``. The imaginary part of the same product reproduces ``A^T``.
If ``rank(A) = k`` the lift has rank at most ``2k``, so ``2k`` columns
of ``S`` already reconstruct ``A`` exactly.
"""

import numpy as np

from .densecore import as_real_matrix, conj_transpose, frobenius_norm, matmul, require_square
from .eig import UnitaryDiag, eig_normal_lift
from .lift import lift_real

__all__ = [
    "UnitaryDiag", "unitary_diagonalize", "reconstruct", "reconstruct_real",
    "reconstruct_imag", "truncate", "truncate_by_tol", "diagonalize_rank_bounded", "residual",
]


def unitary_diagonalize(A, max_sweeps=30, tol=1e-12):
    A = as_real_matrix(A)
    require_square(A, "input")
    return eig_normal_lift(lift_real(A), max_sweeps=max_sweeps, tol=tol)


def reconstruct(D):
    """The full complex product ``S diag(lam) S*`` (n x n)."""
    return matmul(D.S * D.lam, conj_transpose(D.S))


def reconstruct_real(D):
    return np.ascontiguousarray(reconstruct(D).real)


def reconstruct_imag(D):
    return np.ascontiguousarray(reconstruct(D).imag)


def residual(A, D):
    """Relative error ``||A - Re(S diag(lam) S*)||_F / max(1, ||A||_F)``."""
    A = np.asarray(A, dtype=np.float64)
    return frobenius_norm(A - reconstruct_real(D)) / max(1.0, frobenius_norm(A))


def truncate(D, r_keep):
    """Keep the ``r_keep`` eigenpairs of largest ``|lam|``.

    Ties go to the lower original index. Retained pairs stay in their
    original order. Because the lift's discarded part ``E`` again satisfies
    ``E* = -iE``, the real-part error equals
    ``sqrt(sum of dropped |lam|^2 / 2)`` and shrinks as ``r_keep`` grows.
    """
    if not 1 <= r_keep <= D.r:
        raise ValueError(f"r_keep must lie in [1, {D.r}], got {r_keep}")
    order = np.argsort(-np.abs(D.lam), kind="stable")
    keep = np.sort(order[:r_keep])
    return UnitaryDiag(S=D.S[:, keep].copy(), lam=D.lam[keep].copy())


def truncate_by_tol(D, tol):
    """Keep the eigenpairs with ``|lam| > tol * max|lam|``, in original order."""
    mags = np.abs(D.lam)
    if mags.size == 0 or mags.max() == 0.0:
        return UnitaryDiag(S=D.S[:, :0].copy(), lam=D.lam[:0].copy())
    keep = np.flatnonzero(mags > tol * mags.max())
    return UnitaryDiag(S=D.S[:, keep].copy(), lam=D.lam[keep].copy())


def diagonalize_rank_bounded(A, tol=1e-10, max_sweeps=30, eig_tol=1e-12):
    """Decompose ``A`` keeping only eigenvalues with ``|lam| > tol * max|lam|``.

    For ``rank(A) = k`` this keeps at most ``2k`` columns. The zero matrix
    yields an empty (``n x 0``) decomposition.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    return truncate_by_tol(unitary_diagonalize(A, max_sweeps=max_sweeps, tol=eig_tol), tol)
