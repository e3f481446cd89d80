"""scikit-learn style wrapper: parametrizations in, integer invariant table out."""

from __future__ import annotations

import warnings

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .defects import defect_report
from .errors import NotImmersionWarning
from .jets import SamplingConfig, profile
from .report import MAX_ORDER_CEILING
from .validation import check_mode, check_order, check_parametrizations

FEATURES = ("d", "delta", "Delta", "o", "h")


class OsculatingProfiler(TransformerMixin, BaseEstimator):
    """Map each parametrization to ``(d_t, delta_t, Delta_t, o_t, h_t)`` for ``t = 1..max_order``.

    There is nothing to learn; ``fit`` only validates the hyperparameters and
    fixes the output layout.
    """

    def __init__(self, max_order=3, mode="sampled", seed=0, samples=5, coord_bound=100):
        self.max_order = max_order
        self.mode = mode
        self.seed = seed
        self.samples = samples
        self.coord_bound = coord_bound

    def _config(self):
        return SamplingConfig(seed=self.seed, samples=self.samples, bound=self.coord_bound)

    def fit(self, X, y=None):
        check_order(self.max_order, "max_order", 1, MAX_ORDER_CEILING)
        check_mode(self.mode)
        self._config()
        check_parametrizations(X)
        self.feature_names_out_ = np.array(
            [f"{f}_{t}" for t in range(1, self.max_order + 1) for f in FEATURES], dtype=object)
        self.n_features_out_ = len(self.feature_names_out_)
        return self

    def _row(self, p, config):
        prof = profile(p, self.max_order, self.mode, config)
        row = []
        for t in range(1, self.max_order + 1):
            rep = defect_report(p, t, self.mode, config)
            o = prof[t]
            row.extend([o.d, o.delta, o.Delta, rep.o, rep.h])
        return row

    def transform(self, X):
        check_is_fitted(self, "feature_names_out_")
        ps = check_parametrizations(X)
        config = self._config()
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", NotImmersionWarning)
            rows = [self._row(p, config) for p in ps]
        return np.asarray(rows, dtype=np.int64)

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "feature_names_out_")
        return self.feature_names_out_.copy()
