# A = Re(S diag(lam) S*) with S unitary, for an arbitrary real A.
#
# Multiplying the lift by e^{-i pi/4} makes it Hermitian, so a Jacobi
# eigensolver does the work. Every eigenvalue lands on the 45-degree line.

import numpy as np

from realdiag import (
    diagonalize_rank_bounded, frobenius_norm, numerical_rank, reconstruct_imag,
    reconstruct_real, truncate, unitary_diagonalize,
)

rng = np.random.default_rng(1)
A = rng.uniform(-1, 1, (6, 6))
D = unitary_diagonalize(A)

print("eigenvalues of the lift:")
for z in D.lam:
    print(f"  {z.real:+.4f} {z.imag:+.4f}i   arg = {np.degrees(np.angle(z)):+.1f} deg")

print("||S*S - I||         =", frobenius_norm(D.S.conj().T @ D.S - np.eye(6)))
print("||Re(SLS*) - A||    =", frobenius_norm(reconstruct_real(D) - A))
print("||Im(SLS*) - A^T||  =", frobenius_norm(reconstruct_imag(D) - A.T))

# rank-k inputs need at most 2k columns
k = 2
B = rng.standard_normal((8, k)) @ rng.standard_normal((k, 8))
Dk = diagonalize_rank_bounded(B)
print(f"\nrank {numerical_rank(B)} input of size 8: kept r = {Dk.r} columns, "
      f"error {frobenius_norm(reconstruct_real(Dk) - B):.2e}")

# symmetric inputs only need k
C = rng.standard_normal((8, k))
Ds = diagonalize_rank_bounded(C @ C.T)
print(f"symmetric rank {k}: kept r = {Ds.r}")

# keeping the largest |lam| trades columns for accuracy
print("\nr_keep  error")
for r in range(1, D.r + 1):
    print(f"{r:>6}  {frobenius_norm(reconstruct_real(truncate(D, r)) - A):.4f}")
