"""Scikit-learn compatible wrappers around the corner-classification core.

CoordinateEncoder turns integer-valued columns into symbol-mask features;
CornerClassifier trains one hidden unit per sample and predicts by radius
generalization.  Both play well with Pipeline, clone, and get_params.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.exceptions import NotFittedError

from .encoding import encode, get_scheme
from .network import TrainingSample, predict_batch, train
from .quaternion import mask_from_symbol, symbol_from_mask

__all__ = ["CoordinateEncoder", "CornerClassifier"]


def _as_int_matrix(X, name="X"):
    arr = np.asarray(X)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2-dimensional, got shape {arr.shape}")
    if arr.size and not np.issubdtype(arr.dtype, np.integer):
        rounded = np.rint(arr)
        if not np.array_equal(rounded, arr):
            raise ValueError(f"{name} must contain integers")
        arr = rounded
    return arr.astype(np.int64)


class CoordinateEncoder(TransformerMixin, BaseEstimator):
    """Encode integer columns as symbol masks via a ladder scheme.

    Each input column holds values in [1, n_values]; each is replaced by
    the mask form of its codeword, so a (n_samples, k) matrix becomes a
    (n_samples, k * codeword_length) mask matrix ready for
    CornerClassifier.  Stateless: fit only records the input width.
    """

    def __init__(self, scheme: str = "quaternion", n_values: int = 16):
        self.scheme = scheme
        self.n_values = n_values

    def fit(self, X, y=None):
        X = _as_int_matrix(X)
        self.n_features_in_ = X.shape[1]
        return self

    def transform(self, X):
        X = _as_int_matrix(X)
        scheme = get_scheme(self.scheme)
        codes = {}
        for value in range(1, self.n_values + 1):
            codes[value] = tuple(mask_from_symbol(s)
                                 for s in encode(value, self.n_values, scheme))
        out_of_range = (X < 1) | (X > self.n_values)
        if out_of_range.any():
            bad = X[out_of_range].flat[0]
            raise ValueError(f"coordinate {bad} outside [1, {self.n_values}]")
        rows = [sum((codes[value] for value in row), ()) for row in X.tolist()]
        return np.asarray(rows, dtype=np.int64)

    def get_feature_names_out(self, input_features=None):
        scheme = get_scheme(self.scheme)
        width = len(encode(1, self.n_values, scheme))
        n_cols = getattr(self, "n_features_in_", None)
        if n_cols is None:
            raise NotFittedError("CoordinateEncoder is not fitted yet")
        if input_features is None:
            input_features = [f"x{idx}" for idx in range(n_cols)]
        return np.asarray([f"{name}_sym{pos}"
                           for name in input_features for pos in range(width)])


class CornerClassifier(ClassifierMixin, BaseEstimator):
    """Instantaneously trained corner-classification network.

    Parameters
    ----------
    radius : generalization radius; an input activates a memorized sample's
        unit when their summed channel Hamming distance is within it.
    dim : channel count of the alphabet (1 real, 2 complex, 4 quaternion);
        features must be symbol masks below 2 ** dim.
    """

    def __init__(self, radius: int = 2, dim: int = 4):
        self.radius = radius
        self.dim = dim

    def fit(self, X, y):
        X = _as_int_matrix(X)
        y = np.asarray(y)
        self._y_was_1d = y.ndim == 1
        if self._y_was_1d:
            y = y.reshape(-1, 1)
        if y.ndim != 2 or y.shape[0] != X.shape[0]:
            raise ValueError("y must have one row of bits per sample")
        if y.size and not np.isin(y, (0, 1)).all():
            raise ValueError("y must contain only 0/1 labels")
        if X.shape[0] == 0:
            raise ValueError("cannot fit on an empty training set")
        if X.size and ((X < 0) | (X >= (1 << self.dim))).any():
            raise ValueError(f"feature masks must lie in [0, {(1 << self.dim) - 1}]")
        samples = (
            TrainingSample((symbol_from_mask(m) for m in row), bits)
            for row, bits in zip(X.tolist(), y.astype(int).tolist())
        )
        self.network_ = train(samples, radius=self.radius, dim=self.dim)
        self.n_features_in_ = X.shape[1]
        self.classes_ = np.array([0, 1])
        return self

    def predict(self, X):
        if not hasattr(self, "network_"):
            raise NotFittedError("CornerClassifier is not fitted yet")
        X = _as_int_matrix(X)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"X has {X.shape[1]} features, expected {self.n_features_in_}")
        bits = predict_batch(self.network_, X)
        return bits[:, 0] if self._y_was_1d else bits
