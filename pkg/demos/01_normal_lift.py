# Any real square matrix is the real part of a normal matrix.
#
# The lift X = A + iA^T satisfies X* = -iX, and from that XX* = X*X.
# We check it on a matrix that is as far from normal as it gets: a
# nilpotent Jordan block.

import numpy as np

from realdiag import check_quarter_turn, is_normal, lift_imag, lift_real

A = np.array([[0.0, 1.0],
              [0.0, 0.0]])
print("A is normal?          ", is_normal(A))

X = lift_real(A)
print("X = A + iA^T =\n", X)
print("Re(X) == A:           ", np.array_equal(X.real, A))
print("X* == -iX:            ", check_quarter_turn(X))
print("X is normal?          ", is_normal(X))

# the companion lift keeps A in the imaginary part instead
Y = lift_imag(A)
print("Im(A^T + iA) == A:    ", np.array_equal(Y.imag, A))

# the same holds for random matrices of any size
rng = np.random.default_rng(0)
for n in (3, 10, 40):
    B = rng.standard_normal((n, n))
    print(f"random {n}x{n}: lift normal = {is_normal(lift_real(B))}")
