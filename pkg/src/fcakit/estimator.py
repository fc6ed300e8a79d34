"""scikit-learn compatible front end.

``FormalConceptAnalysis`` fits a concept lattice on a binary
samples x features matrix; ``transform`` encodes rows as concept memberships
(row ``s`` belongs to concept ``c`` when it has every attribute of ``c``'s
intent), which makes the lattice usable as a feature map inside pipelines.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted, validate_data

from .context import FormalContext
from .implications import stem_base
from .lattice import build_lattice


def check_incidence(X) -> np.ndarray:
    """Validate a binary 2-D array and return it as bool.

    Accepts bool arrays and numeric arrays whose entries are all 0 or 1.
    """
    arr = np.asarray(X)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-D incidence matrix, got {arr.ndim} dimension(s)")
    if arr.dtype == bool:
        return arr
    if not np.issubdtype(arr.dtype, np.number):
        raise ValueError(f"incidence matrix must be boolean or numeric, got dtype {arr.dtype}")
    if not np.isin(arr, (0, 1)).all():
        raise ValueError("incidence matrix must contain only 0/1 values")
    return arr.astype(bool)


class FormalConceptAnalysis(TransformerMixin, BaseEstimator):
    """Concept lattice of a binary matrix.

    Parameters
    ----------
    compute_implications : bool, default=False
        Also compute the canonical implication basis into ``implications_``.
        Exponential in the number of features in the worst case.

    Attributes
    ----------
    context_ : FormalContext
    lattice_ : ConceptLattice
    intents_ : ndarray of shape (n_concepts, n_features_in_), bool
    extents_ : ndarray of shape (n_concepts, n_training_samples), bool
    implications_ : list of Implication or None
    n_features_in_, feature_names_in_ : as in scikit-learn
    """

    def __init__(self, compute_implications: bool = False):
        self.compute_implications = compute_implications

    def fit(self, X, y=None):
        object_names = None
        if hasattr(X, "index") and hasattr(X, "columns"):
            object_names = [str(i) for i in X.index]
        X = validate_data(self, X, dtype=None, ensure_min_samples=0, ensure_min_features=0)
        inc = check_incidence(X)
        n_obj, n_att = inc.shape
        if object_names is None:
            object_names = [str(i) for i in range(n_obj)]
        if hasattr(self, "feature_names_in_"):
            attribute_names = [str(n) for n in self.feature_names_in_]
        else:
            attribute_names = [f"x{j}" for j in range(n_att)]

        self.context_ = FormalContext(object_names, attribute_names, inc)
        self.lattice_ = build_lattice(self.context_)
        self.intents_ = np.array(
            [[m in c.intent for m in range(n_att)] for c in self.lattice_], dtype=bool
        ).reshape(len(self.lattice_), n_att)
        self.extents_ = np.array(
            [[g in c.extent for g in range(n_obj)] for c in self.lattice_], dtype=bool
        ).reshape(len(self.lattice_), n_obj)
        self.implications_ = stem_base(self.context_) if self.compute_implications else None
        return self

    @property
    def n_concepts_(self) -> int:
        check_is_fitted(self, "lattice_")
        return len(self.lattice_)

    def transform(self, X):
        """Concept membership matrix of shape (n_samples, n_concepts), dtype uint8."""
        check_is_fitted(self, "lattice_")
        X = validate_data(self, X, dtype=None, reset=False, ensure_min_samples=0,
                          ensure_min_features=0)
        inc = check_incidence(X)
        missing = (~inc).astype(np.int64) @ self.intents_.T.astype(np.int64)
        return (missing == 0).astype(np.uint8)

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "lattice_")
        return np.array([f"concept{i}" for i in range(len(self.lattice_))], dtype=object)
