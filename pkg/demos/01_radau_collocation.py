# Radau IIa collocation and the LU-trick sweep weights
# =====================================================
#
# The time discretization rests on three matrices built from the Radau IIa
# nodes on the reference step [0, 1]: the node-to-node spectral quadrature S,
# its cumulative form Q, and the lower-triangular Shat obtained by factoring
# the transpose of Q's collocation block without pivoting.  This script
# prints them for m = 3 and checks the properties the sweeps rely on.

import numpy as np

from sdcardio import make_scheme, radau_iia_nodes

np.set_printoptions(precision=10, suppress=True)

# The nodes exclude the step start and include the end point, which is what
# makes the collocation solution L-stable and of order 2m - 1.
for m in (1, 2, 3):
    print(f"m = {m}: nodes = {radau_iia_nodes(m)}")

scheme = make_scheme(3)
print("\nS (column 0 belongs to tau_0 and is identically zero):")
print(scheme.s)
print("\nQ = cumulative rows of S:")
print(scheme.q)
print("\nShat from the LU trick (row i uses nodes j <= i + 1):")
print(scheme.s_hat)

# Row sums of S reproduce the node gaps: the rule integrates constants
# exactly, and in fact every polynomial up to degree m - 1.
gaps = np.diff(np.concatenate([[0.0], scheme.nodes]))
print("\nrow sums of S  :", scheme.s.sum(axis=1))
print("node gaps      :", gaps)

# The sweep replaces S by Shat on the left-hand side; the iteration matrix
# on the Dahlquist problem z' = lambda z shows how strongly that contracts,
# including the stiff limit.
q_block = scheme.q[:, 1:]
q_hat = np.cumsum(scheme.s_hat[:, 1:], axis=0)
print("\ncontraction of the sweep iteration on z' = lambda z:")
for hl in (-1.0, -10.0, -1e3, -1e6):
    g = np.eye(3) - np.linalg.solve(np.eye(3) - hl * q_hat, np.eye(3) - hl * q_block)
    rho = max(abs(np.linalg.eigvals(g)))
    print(f"  T lambda = {hl:>9.0e}: spectral radius {rho:.4f}")

# And the fixed point itself is the Radau IIa collocation solution: at
# T lambda = -1 its one-step amplification is the (2,3) Pade value of e^{-1}.
z = np.linalg.solve(np.eye(3) + q_block, np.ones(3))
print(f"\nR(-1) = {z[-1]:.10f} vs exp(-1) = {np.exp(-1):.10f}")
z = np.linalg.solve(np.eye(3) + 1e6 * q_block, np.ones(3))
print(f"|R(-1e6)| = {abs(z[-1]):.2e}  (L-stability)")
