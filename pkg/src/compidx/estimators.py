"""scikit-learn style wrappers around the digraph analyses.

Inputs are square 0/1 adjacency arrays (``X[i, j] = 1`` for the arc
``i -> j``).  :class:`CompetitionAnalyzer` is fitted on one digraph and
exposes its sink sequence, competition profile and primitivity as fitted
attributes; :class:`MStepCompetitionGraph` maps an adjacency matrix to the
adjacency matrix of its m-step competition graph.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .competition import competition_profile, m_step_competition_graph
from .core import Digraph, SimpleGraph, build_digraph, primitivity
from .errors import DimensionMismatchError
from .sinks import sink_sequence


def check_adjacency(X, partition=None, require_multipartite=False) -> Digraph:
    """Validate a square 0/1 adjacency array and build the digraph."""
    X = check_array(X, dtype=None, ensure_min_samples=1, ensure_min_features=1)
    n, m = X.shape
    if n != m:
        raise DimensionMismatchError(f"adjacency matrix must be square, got {X.shape}")
    if not np.isin(X, (0, 1)).all():
        raise ValueError("adjacency entries must be 0 or 1")
    rows, cols = np.nonzero(X)
    arcs = zip(rows.tolist(), cols.tolist())
    return build_digraph(n, arcs, partition, require_multipartite=require_multipartite)


def graph_to_array(g: SimpleGraph) -> np.ndarray:
    out = np.zeros((g.n, g.n), dtype=np.int8)
    for u, v in g.edges:
        out[u, v] = out[v, u] = 1
    return out


class CompetitionAnalyzer(BaseEstimator):
    """Competition index/period, sink sequence and primitivity of a digraph.

    Parameters
    ----------
    partition : sequence of int, default=None
        Part id of each vertex; when given the digraph is validated as a
        multipartite tournament with these parts.
    require_multipartite : bool, default=False
        Infer and validate a multipartite partition when none is given.

    Attributes
    ----------
    digraph_ : Digraph
    sink_sequence_ : SinkSequence
    profile_ : CompetitionProfile
    primitivity_ : PrimitivityReport
    zeta_, cindex_, cperiod_ : int
    n_features_in_ : int
    """

    def __init__(self, partition=None, require_multipartite=False):
        self.partition = partition
        self.require_multipartite = require_multipartite

    def fit(self, X, y=None):
        d = check_adjacency(X, self.partition, self.require_multipartite)
        self.digraph_ = d
        self.n_features_in_ = d.n
        self.sink_sequence_ = sink_sequence(d)
        self.profile_ = competition_profile(d)
        self.primitivity_ = primitivity(d)
        self.zeta_ = self.sink_sequence_.zeta
        self.cindex_ = self.profile_.cindex
        self.cperiod_ = self.profile_.cperiod_literal
        return self

    def competition_graph(self, m: int) -> np.ndarray:
        """Adjacency array of ``C^m`` for the fitted digraph."""
        check_is_fitted(self, "profile_")
        return graph_to_array(self.profile_.graph(m))


class MStepCompetitionGraph(TransformerMixin, BaseEstimator):
    """Transform an adjacency matrix into that of its m-step competition graph.

    Stateless: ``fit`` only validates ``X`` and records its size.
    """

    def __init__(self, m: int = 1):
        self.m = m

    def fit(self, X, y=None):
        d = check_adjacency(X)
        self.n_features_in_ = d.n
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_in_")
        if not isinstance(self.m, (int, np.integer)) or self.m < 1:
            raise ValueError(f"m must be a positive integer, got {self.m!r}")
        d = check_adjacency(X)
        if d.n != self.n_features_in_:
            raise DimensionMismatchError(f"fitted on {self.n_features_in_} vertices, got {d.n}")
        return graph_to_array(m_step_competition_graph(d, int(self.m)))
