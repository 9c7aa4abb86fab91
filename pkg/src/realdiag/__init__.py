"""Any real square matrix as the real part of a unitary diagonalisation.

    >>> import numpy as np, realdiag
    >>> A = np.array([[0.0, 1.0], [0.0, 0.0]])
    >>> D = realdiag.unitary_diagonalize(A)
    >>> np.allclose(realdiag.reconstruct_real(D), A)
    True
"""

from .decomp import (
    UnitaryDiag, diagonalize_rank_bounded, reconstruct, reconstruct_imag, reconstruct_real,
    residual, truncate, truncate_by_tol, unitary_diagonalize,
)
from .densecore import conj_transpose, frobenius_norm, matmul, numerical_rank, singular_values
from .eig import HermitianEig, eig_normal_lift, eigh, hermitian_from_lift
from .errors import (
    ConvergenceError, DegenerateSignError, DivergenceError, PreconditionError,
    ReconstructionAmbiguityError, ShapeError,
)
from .fit import FitConfig, FitModel, fit_lowrank, loss_and_gradient, predict, sign_accuracy
from .lift import check_quarter_turn, is_normal, lift_imag, lift_real
from .signrank import rank1_sign_feasible, reconstruct_sign, sign_of

__version__ = "0.1.0"
