# %% [markdown]
# # Sparse approximation with orthogonal least squares
#
# With a single signal as the target, greedy selection picks at each step the
# atom that leaves the smallest residual after re-projection. The weights
# come from a least-squares solve on the chosen atoms.

# %%
import numpy as np

from gcss import ExternalTarget, build_target, greedy_select, solve_coefficients

rng = np.random.default_rng(1)
m, n = 50, 120
D = rng.standard_normal((m, n))
D /= np.linalg.norm(D, axis=0)

support = [7, 31, 64, 100]
weights = np.array([2.0, -1.5, 1.0, 0.5])
y = D[:, support] @ weights

# %%
report = greedy_select(D, build_target(D, ExternalTarget(y)), 4)
print("recovered support:", sorted(report.selected))
print("true support:     ", support)

T = solve_coefficients(D, report.selected, y[:, None])
for atom, w in sorted(zip(report.selected, T.ravel())):
    print(f"  atom {atom:3d}  weight {w:+.6f}")
print(f"residual {report.final_objective:.2e}")

# %% [markdown]
# Several signals sharing one support: simultaneous sparse approximation.

# %%
Y = D[:, support] @ rng.standard_normal((4, 6))
report = greedy_select(D, Y, 4)
print("shared support:", sorted(report.selected))
