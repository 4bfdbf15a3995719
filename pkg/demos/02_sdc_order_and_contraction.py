# SDC sweeps: contraction history and convergence order
# ======================================================
#
# A sweep is a stationary iteration whose fixed point is the collocation
# solution of one time step.  Two experiments:
#
# 1. on a stiff linear reaction-diffusion system the correction norms decay
#    geometrically (that decay rate is the contraction estimate rho used by
#    the termination test and the theoretical drop tolerance);
# 2. on the logistic equation the converged method shows the Radau IIa
#    order 2m - 1 = 5 under step halving.

import numpy as np
import scipy.sparse as sp

from sdcardio import ModelOperators, linear_operators, make_scheme
from sdcardio.adaptivity import ReducedSystem
from sdcardio.sdc import SolverSettings, SweepWorkspace, check_termination, make_state, sdc_sweep

rng = np.random.default_rng(1)

# --- contraction on a stiff linear system ---------------------------------
n = 40
stiff = sp.diags([-np.ones(n - 1), 2 * np.ones(n), -np.ones(n - 1)], [-1, 0, 1]).tocsr() * 900.0
mass = sp.diags(rng.uniform(0.8, 1.2, n)).tocsr()
ops = linear_operators(mass, stiff)
scheme = make_scheme(3)
state = make_state(rng.standard_normal(n), np.zeros(n), 0.1, 3)
workspace = SweepWorkspace(ops, state)
reduced = ReducedSystem.full(ops)
solver = SolverSettings(reduction_target=1e-12)

print("sweep   sum_i ||du_i||_A   ratio")
prev = None
for k in range(10):
    sdc_sweep(state, ops, scheme, solver=solver, reduced=reduced, workspace=workspace)
    norm = np.sqrt(state.correction_norm_history[-1])
    print(f"{k + 1:>5}   {norm:16.6e}   {'' if prev is None else f'{norm / prev:.3f}'}")
    prev = norm
print(f"running contraction estimate rho = {state.rho_estimate:.3f}")

# --- order study on the logistic equation ----------------------------------
lam = 3.0
one = sp.csr_matrix(np.array([[1.0]]))
zero = sp.csr_matrix(np.array([[0.0]]))


def logistic_reaction(u, w, idx=None):
    if idx is not None:
        u = u[idx]
    return -lam * u * (1.0 - u), -lam * (1.0 - 2.0 * u)


logistic = ModelOperators(mass=one, stiffness=zero, n_dofs=1, reaction=logistic_reaction)
t_end = 2.0
exact = 1.0 / (1.0 + 9.0 * np.exp(-lam * t_end))
print("\n  T        error       observed order")
errors, steps = [], [0.5, 0.25, 0.125, 0.0625]
tight = SolverSettings(reduction_target=1e-15, max_iter=100)
for t_step in steps:
    z = np.array([0.1])
    for _ in range(int(round(t_end / t_step))):
        st = make_state(z, np.zeros(1), t_step, 3)
        ws = SweepWorkspace(logistic, st)
        red = ReducedSystem.full(logistic)
        for _ in range(40):
            rep = sdc_sweep(st, logistic, scheme, solver=tight, reduced=red, workspace=ws)
            if check_termination(rep.correction_norms, st.rho_estimate, 1e-14):
                break
        z = st.u_nodes[-1].copy()
    errors.append(abs(z[0] - exact))
    order = "" if len(errors) < 2 else f"{np.log2(errors[-2] / errors[-1]):.2f}"
    print(f"{t_step:6.4f}   {errors[-1]:.3e}   {order}")
