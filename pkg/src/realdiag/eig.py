"""
Eigendecomposition of normal lifts through a complex Jacobi solver.

A lift ``X`` obeys ``X* = -iX``. Multiplying by ``e^{-i pi/4}`` turns it
into a Hermitian matrix ``H``, since ``H* = e^{i pi/4} X* = e^{-i pi/4} X``.
``H`` is diagonalised by cyclic Jacobi rotations, and the eigenvalues of
``X`` are recovered as ``e^{i pi/4} d`` -- all of them sit on the line
through the origin at 45 degrees.
"""

import math
from dataclasses import dataclass, field

import numba
import numpy as np

from .densecore import as_complex_matrix, conj_transpose, frobenius_norm, require_square
from .errors import ConvergenceError, PreconditionError
from .lift import check_quarter_turn, quarter_turn_defect

# cos(pi/4) and sin(pi/4) round to different doubles; one shared constant
# keeps H exactly Hermitian when X is an exact lift.
_C45 = math.sqrt(0.5)
ROT_MINUS = complex(_C45, -_C45)   # e^{-i pi/4}
ROT_PLUS = complex(_C45, _C45)     # e^{+i pi/4}


@dataclass(frozen=True)
class HermitianEig:
    """Eigenpairs of a Hermitian matrix, ``H = U diag(d) U*``.

    ``d`` is ascending. ``off_history`` holds the off-diagonal Frobenius
    norm at the start of each sweep plus the final value.
    """
    U: np.ndarray
    d: np.ndarray
    sweeps: int = 0
    off_history: tuple = field(default=(), repr=False)


@dataclass(frozen=True)
class UnitaryDiag:
    """``S diag(lam) S*`` with ``S`` an ``n x r`` matrix of orthonormal columns."""
    S: np.ndarray
    lam: np.ndarray

    @property
    def n(self):
        return self.S.shape[0]

    @property
    def r(self):
        return self.S.shape[1]


def hermitian_from_lift(X, tol=1e-10):
    """Rotate a quarter-turn matrix into the Hermitian ``e^{-i pi/4} X``.

    Raises PreconditionError when ``X* = -iX`` fails at relative ``tol``.
    The result is averaged with its conjugate transpose, which is a no-op
    for exact lifts and removes rounding noise otherwise.
    """
    X = as_complex_matrix(X)
    require_square(X)
    if not check_quarter_turn(X, tol):
        raise PreconditionError(
            "input violates the quarter-turn identity X* = -iX "
            f"(||X* + iX||_F = {quarter_turn_defect(X):.3e})"
        )
    # c(1 - i)(a + ib) = c(a + b) + ic(b - a): conjugate-symmetric bit for bit
    re = _C45 * (X.real + X.imag)
    im = _C45 * (X.imag - X.real)
    H = re + 1j * im
    return 0.5 * (H + conj_transpose(H))


def _off_norm(A):
    return frobenius_norm(A - np.diag(np.diag(A)))


def eigh(H, max_sweeps=30, tol=1e-12):
    """Diagonalise a Hermitian matrix by cyclic-by-row complex Jacobi rotations.

    Parameters
    ----------
    H : (n, n) array_like
        Hermitian matrix; rejected if ``||H - H*||_F > tol * max(1, ||H||_F)``.
    max_sweeps : int
        Upper bound on full passes over the strict upper triangle.
    tol : float
        Stop once the off-diagonal Frobenius norm drops to ``tol * ||H||_F``.

    Returns
    -------
    HermitianEig
        ``U`` unitary with eigenvectors as columns, ``d`` ascending.

    Raises
    ------
    PreconditionError
        If ``H`` is not Hermitian or ``max_sweeps < 1``.
    ConvergenceError
        If the off-diagonal norm is still above target after ``max_sweeps``.
    """
    A = as_complex_matrix(H)
    require_square(A)
    if max_sweeps < 1:
        raise PreconditionError("max_sweeps must be at least 1")
    norm = frobenius_norm(A)
    skew = frobenius_norm(A - conj_transpose(A))
    if skew > tol * max(1.0, norm):
        raise PreconditionError(f"matrix is not Hermitian (||H - H*||_F = {skew:.3e})")

    n = A.shape[0]
    A = 0.5 * (A + conj_transpose(A))
    U = np.eye(n, dtype=np.complex128)
    target = tol * norm
    # rotations on entries this small cannot move the off-norm measurably
    skip = 1e-2 * target / max(n, 1)

    history = []
    sweeps = 0
    off = _off_norm(A)
    while True:
        history.append(off)
        if off <= target:
            break
        if sweeps == max_sweeps:
            raise ConvergenceError(off, sweeps)
        sweeps += 1
        _sweep(A, U, skip)
        off = _off_norm(A)

    d = A.diagonal().real.copy()
    order = np.argsort(d, kind="stable")
    return HermitianEig(U=U[:, order], d=d[order], sweeps=sweeps, off_history=tuple(history))


@numba.njit(cache=True)
def _sweep(A, U, skip):
    """One cyclic-by-row pass over the strict upper triangle, in place."""
    n = A.shape[0]
    for p in range(n - 1):
        for q in range(p + 1, n):
            apq = A[p, q]
            mag = abs(apq)
            if mag <= skip:
                continue
            # Phase D = diag(1, e^{-i phi}) makes the (p, q) entry real and
            # positive; a real symmetric Schur rotation R then zeroes it. The
            # applied unitary is G = D R D* = [[c, s e^{i phi}], [-s e^{-i phi}, c]].
            app = A[p, p].real
            aqq = A[q, q].real
            tau = (aqq - app) / (2.0 * mag)
            t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
            c = 1.0 / math.hypot(1.0, t)
            s = t * c
            ph = apq / mag
            s_ph = s * ph
            s_phc = s * ph.conjugate()

            # A <- G* A G. Columns first; the result is Hermitian, so rows p
            # and q are conjugates of the new columns. Diagonal block last.
            for i in range(n):
                xp = A[i, p]
                xq = A[i, q]
                A[i, p] = c * xp - s_phc * xq
                A[i, q] = s_ph * xp + c * xq
            for j in range(n):
                A[p, j] = A[j, p].conjugate()
                A[q, j] = A[j, q].conjugate()
            A[p, q] = 0.0
            A[q, p] = 0.0
            A[p, p] = app - t * mag
            A[q, q] = aqq + t * mag

            for i in range(n):
                up = U[i, p]
                uq = U[i, q]
                U[i, p] = c * up - s_phc * uq
                U[i, q] = s_ph * up + c * uq


def eig_normal_lift(X, max_sweeps=30, tol=1e-12):
    """Unitary diagonalisation ``X = S diag(lam) S*`` of a quarter-turn matrix.

    The eigenvalues come back ordered by their signed position along the
    ``e^{i pi/4}`` line, lowest first.
    """
    H = hermitian_from_lift(X)
    res = eigh(H, max_sweeps=max_sweeps, tol=tol)
    lam = ROT_PLUS * res.d.astype(np.complex128)
    return UnitaryDiag(S=res.U, lam=lam)
