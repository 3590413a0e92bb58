# %% [markdown]
# # Batch runs from the command line
#
# ``gcss`` reads a CSV or MatrixMarket file, builds the target and writes a
# JSON report. This script drives it through ``gcss.cli.main`` in a
# temporary directory; the shell equivalent is shown in each comment.

# %%
import json
import tempfile
from pathlib import Path

import numpy as np

from gcss.cli import main
from gcss.io import load_matrix, write_matrix_csv

work = Path(tempfile.mkdtemp())
rng = np.random.default_rng(3)
write_matrix_csv(work / "data.csv", rng.standard_normal((30, 50)))

# %%
# gcss data.csv -l 4 --target svd:4 -o report.json --emit-coefficients
code = main([str(work / "data.csv"), "-l", "4", "--target", "svd:4",
             "-o", str(work / "report.json"), "--emit-coefficients"])
report = json.loads((work / "report.json").read_text())
print("exit code", code)
print("selected", report["selected"])
print("objective", report["initial_objective"], "->", report["final_objective"])
print("coefficients", load_matrix(work / "report.coefficients.csv").shape)

# %%
# A rank-2 source cannot support more than two columns: the run stops early.
write_matrix_csv(work / "low.csv", rng.standard_normal((10, 2)) @ rng.standard_normal((2, 6)))
main([str(work / "low.csv"), "-l", "5", "-o", str(work / "low.json")])
low = json.loads((work / "low.json").read_text())
print(low["selected"], low["stop_reason"], low["advisories"])
