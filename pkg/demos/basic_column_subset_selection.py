# %% [markdown]
# # Column subset selection
#
# Pick a handful of columns from a data matrix so that projecting the whole
# matrix onto their span loses as little as possible. The target is the data
# matrix itself.

# %%
import numpy as np

from gcss import SelfTarget, build_target, criterion, exhaustive_best, greedy_select, top_k_svd

rng = np.random.default_rng(0)
m, n, rank = 60, 40, 5
A = rng.standard_normal((m, rank)) @ rng.standard_normal((rank, n)) + 0.05 * rng.standard_normal((m, n))

# %%
B = build_target(A, SelfTarget())
report = greedy_select(A, B, 5)
print("selected columns:", report.selected)
for rec in report.iterations:
    print(f"  column {rec.index:2d}  gain {rec.gain:10.4f}  error left {rec.objective_after:10.4f}")

# %% [markdown]
# The best any rank-5 approximation can do is the tail energy of the SVD.
# Column selection cannot beat it, but gets close on nearly low-rank data.

# %%
_, sigma = top_k_svd(A, min(m, n))
print(f"greedy error  {report.final_objective:.4f}")
print(f"SVD bound     {np.sum(sigma[5:] ** 2):.4f}")
print(f"direct check  {criterion(A, report.selected, A):.4f}")

# %% [markdown]
# On a small problem the optimum is reachable by enumeration.

# %%
small = A[:, :12]
S, best = exhaustive_best(small, small, 3)
greedy = greedy_select(small, small, 3)
print("exhaustive", S, f"{best:.4f}")
print("greedy    ", greedy.selected, f"{greedy.final_objective:.4f}")
