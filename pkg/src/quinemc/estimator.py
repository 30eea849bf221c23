"""scikit-learn style wrapper around :func:`quinemc.minimize`.

Fitting learns the minimum sum-of-products cover of the labelled rows;
``predict`` evaluates that cover and ``transform`` exposes one column per
product term.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .cover import minimize
from .cube import ProblemSpec
from .formats import VariableNaming, emit_expression
from .validation import check_binary_X, check_binary_X_y, rows_to_indices


class QuineMcCluskeyClassifier(ClassifierMixin, TransformerMixin, BaseEstimator):
    """Exact two-level logic minimizer as a binary classifier.

    Parameters
    ----------
    unseen : {"dontcare", "offset"}, default="dontcare"
        How to treat assignments absent from the training rows. With
        ``"dontcare"`` they are free to be either value, which usually gives
        the smallest expression.
    naming : {"letters", "indexed"}, default="letters"
        Variable names used for ``expression_``.
    max_vars : int, default=20
        Refuse inputs wider than this.
    """

    def __init__(self, unseen="dontcare", naming="letters", max_vars=20):
        self.unseen = unseen
        self.naming = naming
        self.max_vars = max_vars

    def fit(self, X, y):
        if self.unseen not in ("dontcare", "offset"):
            raise ValueError(f"unseen must be 'dontcare' or 'offset', got {self.unseen!r}")
        X, y = check_binary_X_y(X, y, self.max_vars)
        n = X.shape[1]
        idx = rows_to_indices(X)
        on = set(idx[y == 1].tolist())
        off = set(idx[y == 0].tolist())
        clash = on & off
        if clash:
            raise ValueError(f"conflicting labels for assignments {sorted(clash)[:5]}")
        dontcare = ()
        if self.unseen == "dontcare":
            dontcare = sorted(set(range(1 << n)) - on - off)
        return self._fit_problem(ProblemSpec.from_sets(n, on, dontcare))

    def fit_problem(self, problem: ProblemSpec):
        """Fit directly from an onset/don't-care description."""
        return self._fit_problem(problem)

    def _fit_problem(self, problem):
        self.problem_ = problem
        self.report_ = minimize(problem)
        self.cover_ = self.report_.cover
        self.n_features_in_ = problem.n
        self.classes_ = np.array([0, 1])
        self.expression_ = emit_expression(self.cover_, VariableNaming(self.naming))
        self._values = np.array([i.value for i in self.cover_], dtype=np.int64)
        self._keep = np.array([~i.dashes & ((1 << problem.n) - 1) for i in self.cover_], dtype=np.int64)
        return self

    def _check_X(self, X):
        check_is_fitted(self, "cover_")
        X = check_binary_X(X)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"X has {X.shape[1]} features, expected {self.n_features_in_}")
        return X

    def transform(self, X):
        """Term activations: entry (i, k) is 1 when row i satisfies term k."""
        X = self._check_X(X)
        idx = rows_to_indices(X)
        if not len(self._values):
            return np.zeros((X.shape[0], 0), dtype=np.int64)
        return ((idx[:, None] & self._keep[None, :]) == self._values[None, :]).astype(np.int64)

    def predict(self, X):
        return self.transform(X).any(axis=1).astype(np.int64)
