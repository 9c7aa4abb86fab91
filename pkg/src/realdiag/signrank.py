"""Sign patterns realised as ``sign(Re(S diag(lam) S*))``.

Sign-rank is never computed here. Callers supply a low-rank real witness
``A`` with the desired sign pattern; decomposing it with at most twice its
rank in columns reproduces the pattern.
"""

import numpy as np

from .decomp import diagonalize_rank_bounded, reconstruct_real
from .densecore import as_real_matrix, frobenius_norm, require_square
from .errors import DegenerateSignError, ReconstructionAmbiguityError, ShapeError


def as_sign_matrix(Y):
    """Validate ``Y`` as a matrix over {-1, +1}; returns an int8 copy."""
    arr = np.array(Y)
    if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ShapeError(f"sign matrix must be a non-empty 2-D array, got shape {arr.shape}")
    if not np.all((arr == 1) | (arr == -1)):
        raise ValueError("sign matrix entries must be exactly -1 or +1")
    return arr.astype(np.int8)


def sign_of(A, zero_tol=0.0, mode="strict"):
    """Entrywise sign of a real matrix.

    Entries with ``|a_ij| <= zero_tol`` raise DegenerateSignError in
    ``"strict"`` mode and map to +1 in ``"lenient"`` mode.
    """
    if mode not in ("strict", "lenient"):
        raise ValueError(f"mode must be 'strict' or 'lenient', got {mode!r}")
    if zero_tol < 0:
        raise ValueError("zero_tol must be non-negative")
    A = as_real_matrix(A)
    small = np.abs(A) <= zero_tol
    if mode == "strict" and small.any():
        i, j = np.argwhere(small)[0]
        raise DegenerateSignError(int(i), int(j), float(A[i, j]))
    return np.where((A < 0) & ~small, -1, 1).astype(np.int8)


def reconstruct_sign(witness, tol=1e-10):
    """Decompose a sign witness and read the pattern back off the real part.

    Returns ``(Y, D)`` where ``D`` keeps at most ``2 * rank(witness)``
    columns and ``Y = sign(Re(S diag(lam) S*))``. Any entry of the witness
    or its reconstruction within 10x the absolute reconstruction residual
    raises ReconstructionAmbiguityError instead of being signed.
    """
    A = as_real_matrix(witness)
    require_square(A, "witness")
    expected = sign_of(A)
    D = diagonalize_rank_bounded(A, tol=tol)
    R = reconstruct_real(D)
    res = frobenius_norm(A - R)
    guard = 10.0 * res
    for M in (A, R):
        close = np.abs(M) <= guard
        if close.any():
            i, j = np.argwhere(close)[0]
            raise ReconstructionAmbiguityError(int(i), int(j), float(M[i, j]), res)
    Y = sign_of(R)
    if not np.array_equal(Y, expected):
        i, j = np.argwhere(Y != expected)[0]
        raise ReconstructionAmbiguityError(int(i), int(j), float(R[i, j]), res)
    return Y, D


def diagonal_census(Y):
    """Counts of +1 and -1 on the diagonal of a square sign matrix."""
    Y = as_sign_matrix(Y)
    require_square(Y, "sign matrix")
    diag = np.diag(Y)
    return int(np.count_nonzero(diag == 1)), int(np.count_nonzero(diag == -1))


def rank1_sign_feasible(Y):
    """Necessary condition for ``Y = sign(Re(lam * s s*))`` with a single term.

    ``Re(x_ii) = Re(lam) |s_i|^2``, so every diagonal entry carries the sign
    of ``Re(lam)``: the diagonal of ``Y`` must be constant. Off-diagonal
    entries are not examined, so ``True`` does not certify realisability.
    """
    plus, minus = diagonal_census(Y)
    return plus == 0 or minus == 0
