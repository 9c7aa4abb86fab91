# Learning Re(E diag(w) E*) by gradient descent.
#
# One embedding per index, used for both rows and columns, yet the scores
# can be asymmetric. On the 2x2 sign pattern a rank-1 model is stuck at
# 3/4 accuracy while rank 2 usually gets everything right.

import numpy as np

from realdiag import FitConfig, fit_lowrank, predict, sign_accuracy

Y = [[-1, -1], [1, 1]]
for m in (1, 2):
    for seed in (0, 1, 2):
        model, trace = fit_lowrank(Y, FitConfig(m=m, loss="logistic", seed=seed))
        print(f"rank {m} seed {seed}: loss {trace[-1]:.4f}  sign accuracy {sign_accuracy(model, Y):.2f}")

# asymmetric target with a single set of embeddings; plain gradient descent
# is not immune to bad starts (seed 0 stalls near a saddle)
A = np.array([[0.0, 1.0], [0.0, 0.0]])
for seed in (0, 1):
    model, trace = fit_lowrank(A, FitConfig(m=2, epochs=5000, seed=seed))
    print(f"\nfit to [[0, 1], [0, 0]], seed {seed}, loss {trace[-1]:.2e}:")
    print(np.round(predict(model), 3))
