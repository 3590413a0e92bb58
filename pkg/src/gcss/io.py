"""Reading and writing matrices as CSV or MatrixMarket files."""
import csv
import math
from pathlib import Path

import numpy as np
import scipy.io

from .exceptions import MatrixFormatError
from .matrix import as_dense

__all__ = ["detect_format", "load_matrix", "write_matrix_csv"]

_EXTENSIONS = {".csv": "csv", ".txt": "csv", ".mtx": "matrix-market", ".mm": "matrix-market"}
FORMATS = ("csv", "matrix-market")


def detect_format(path):
    fmt = _EXTENSIONS.get(Path(path).suffix.lower())
    if fmt is None:
        raise MatrixFormatError(f"cannot infer format from extension of {path}; pass it explicitly")
    return fmt


def _load_csv(path, skip_header):
    rows = []
    width = None
    with open(path, newline="") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            if skip_header and lineno == 1:
                continue
            if not row or all(not tok.strip() for tok in row):
                continue
            values = []
            for tok in row:
                try:
                    v = float(tok)
                except ValueError:
                    raise MatrixFormatError(f"{path}:{lineno}: non-numeric token {tok.strip()!r}") from None
                if not math.isfinite(v):
                    raise MatrixFormatError(f"{path}:{lineno}: non-finite value {tok.strip()!r}")
                values.append(v)
            if width is None:
                width = len(values)
            elif len(values) != width:
                raise MatrixFormatError(f"{path}:{lineno}: expected {width} columns, found {len(values)}")
            rows.append(values)
    if not rows:
        raise MatrixFormatError(f"{path}: no data rows")
    return np.array(rows, dtype=np.float64)


def _load_mm(path):
    try:
        _, _, _, layout, field, symmetry = scipy.io.mminfo(path)
    except (ValueError, IndexError) as exc:
        raise MatrixFormatError(f"{path}: bad MatrixMarket header: {exc}") from exc
    if field not in ("real", "integer", "double"):
        raise MatrixFormatError(f"{path}: unsupported MatrixMarket field {field!r}")
    try:
        data = scipy.io.mmread(path)
    except (ValueError, IndexError) as exc:
        raise MatrixFormatError(f"{path}: malformed MatrixMarket body: {exc}") from exc
    if layout == "coordinate":
        data = data.toarray()
    return np.asarray(data, dtype=np.float64)


def load_matrix(path, format=None, skip_header=False):
    """Load a dense matrix from ``path``.

    Parameters
    ----------
    path : str or Path
    format : {"csv", "matrix-market"}, optional
        Inferred from the extension (``.csv``/``.txt``, ``.mtx``/``.mm``) when
        omitted.
    skip_header : bool
        Ignore the first line of a CSV file.

    Coordinate MatrixMarket files are densified. Complex and pattern
    matrices are rejected.
    """
    fmt = format or detect_format(path)
    if fmt == "csv":
        data = _load_csv(path, skip_header)
    elif fmt == "matrix-market":
        data = _load_mm(path)
    else:
        raise MatrixFormatError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    try:
        return as_dense(data, str(path))
    except ValueError as exc:
        raise MatrixFormatError(str(exc)) from exc


def write_matrix_csv(path, X):
    """Write ``X`` as CSV with 17 significant digits (exact float64 round trip)."""
    X = np.asarray(X, dtype=np.float64)
    if X.ndim == 1:
        X = X[:, None]
    with open(path, "w", newline="") as fh:
        for row in X:
            fh.write(",".join(format(v, ".17g") for v in row) + "\n")
