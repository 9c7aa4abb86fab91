"""Exception types raised across the package."""


class ShapeError(ValueError):
    """Matrix dimensions are incompatible with the requested operation."""


class PreconditionError(ValueError):
    """An input violates a structural requirement (Hermitian, quarter-turn, ...)."""


class ConvergenceError(RuntimeError):
    def __init__(self, residual, sweeps):
        self.residual = residual
        self.sweeps = sweeps
        super().__init__(
            f"Jacobi iteration did not converge after {sweeps} sweeps "
            f"(off-diagonal norm {residual:.3e})"
        )


class DegenerateSignError(ValueError):
    def __init__(self, i, j, value):
        self.i, self.j, self.value = i, j, value
        super().__init__(f"entry ({i}, {j}) = {value!r} has no well-defined sign")


class ReconstructionAmbiguityError(ValueError):
    def __init__(self, i, j, value, residual):
        self.i, self.j, self.value, self.residual = i, j, value, residual
        super().__init__(
            f"entry ({i}, {j}) = {value!r} lies within 10x the reconstruction "
            f"residual {residual:.3e}; its sign is not trustworthy"
        )


class DivergenceError(RuntimeError):
    def __init__(self, epoch, loss):
        self.epoch, self.loss = epoch, loss
        super().__init__(f"loss became non-finite ({loss}) at epoch {epoch}")
