"""Input checks shared by the estimator: binary matrices and minterm indices."""
from __future__ import annotations

import numpy as np
from sklearn.utils.validation import check_array, check_X_y

from .errors import GuardRefusal


def check_binary_X(X, max_vars: int | None = None) -> np.ndarray:
    """Validate a 2-D 0/1 matrix; one row per assignment, column 0 = variable A."""
    X = check_array(X, dtype=None, ensure_min_features=1)
    if X.dtype == bool:
        X = X.astype(np.int64)
    if not np.isin(X, (0, 1)).all():
        raise ValueError("X must contain only 0/1 values")
    if max_vars is not None and X.shape[1] > max_vars:
        raise GuardRefusal(f"{X.shape[1]} variables exceeds max_vars={max_vars}")
    return X.astype(np.int64, copy=False)


def check_binary_X_y(X, y, max_vars: int | None = None) -> tuple[np.ndarray, np.ndarray]:
    X, y = check_X_y(X, y, dtype=None, y_numeric=False)
    X = check_binary_X(X, max_vars)
    if y.dtype == bool:
        y = y.astype(np.int64)
    if not np.isin(y, (0, 1)).all():
        raise ValueError("y must contain only 0/1 labels")
    return X, y.astype(np.int64, copy=False)


def rows_to_indices(X: np.ndarray) -> np.ndarray:
    """Minterm index of each row, leftmost column most significant."""
    n = X.shape[1]
    if n > 62:
        raise GuardRefusal(f"{n} variables do not fit a 64-bit index")
    weights = np.left_shift(np.int64(1), np.arange(n - 1, -1, -1, dtype=np.int64))
    return X @ weights


def indices_to_rows(indices, n: int) -> np.ndarray:
    indices = np.asarray(indices, dtype=np.int64)
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    return (indices[:, None] >> shifts) & 1
