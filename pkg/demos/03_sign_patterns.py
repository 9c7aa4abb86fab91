# Sign patterns from low-rank witnesses, and why rank 1 is not enough.

import numpy as np

from realdiag import rank1_sign_feasible, reconstruct_sign

Y = np.array([[-1, -1],
              [ 1,  1]])

# Y is its own rank-1 witness. Its decomposition uses two columns.
signs, D = reconstruct_sign(Y.astype(float))
print("reconstructed signs:\n", signs)
print("columns used:", D.r)

# A single term lam * s s* has Re(x_ii) = Re(lam) |s_i|^2, so all diagonal
# entries share a sign. Y has one negative and one positive on its diagonal.
print("rank-1 feasible?", rank1_sign_feasible(Y))

# Brute force agrees: no random rank-1 model produces a mixed diagonal.
rng = np.random.default_rng(0)
lam = rng.standard_normal(100_000) + 1j * rng.standard_normal(100_000)
s = rng.standard_normal((100_000, 2)) + 1j * rng.standard_normal((100_000, 2))
d0 = (lam * np.abs(s[:, 0]) ** 2).real
d1 = (lam * np.abs(s[:, 1]) ** 2).real
print("random rank-1 models with a mixed diagonal:", int(np.sum(d0 * d1 < 0)))

# The same obstruction for any n when the first row is all -1.
Z = np.ones((5, 5), dtype=int)
Z[0] = -1
print("5x5 first-row-negative rank-1 feasible?", rank1_sign_feasible(Z))
