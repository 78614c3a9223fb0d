"""Hat-matrix projection onto the intersection of blocking hyperplanes.

For blocker normals stacked as the columns of ``A`` (shape ``m x k``), the
Hat matrix ``H = A (A^T A)^{-1} A^T`` projects onto ``span(A)``, so
``g - H g`` is the component of ``g`` lying in every blocking hyperplane.
"""
import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

from .numkit import (
    arithmetic_of, default_tol, gauss_jordan_inverse, independent_columns,
    infer_arithmetic, inner, matmul, matvec,
)
from .validation import check_is_fitted, check_matrix, check_vector


class HatProjector(TransformerMixin, BaseEstimator):
    """Project vectors onto the subspace orthogonal to a set of normals.

    Parameters
    ----------
    tol : float, optional
        Pivot tolerance used to discard linearly dependent normals in float
        mode. Rational input is always reduced exactly.

    Attributes
    ----------
    A_ : ndarray of shape (m, k)
        Independent blocker normals kept, as columns.
    B_inv_ : ndarray of shape (k, k)
        ``(A_^T A_)^{-1}``.
    H_ : ndarray of shape (m, m)
        The Hat matrix.
    sigma_ : list of int
        Facet indices of the kept normals.
    dropped_ : list of int
        Facet indices discarded as linearly dependent.
    fully_blocked_ : bool
        True when the kept normals span ``R^m`` (``H_`` is the identity).
    """

    def __init__(self, tol=None):
        self.tol = tol

    def fit(self, X, y=None, sigma=None):
        """Build the projector from normals given as the rows of ``X``.

        ``sigma`` optionally labels the rows with facet indices; rows are
        numbered from 1 otherwise.
        """
        normals = check_matrix(X, name="normals")
        k, m = normals.shape
        labels = list(range(1, k + 1)) if sigma is None else list(sigma)
        if len(labels) != k:
            raise ValueError(f"sigma has {len(labels)} labels for {k} normals")
        tol = self.tol
        if tol is None:
            tol = default_tol(arithmetic_of(normals))
        A = normals.T
        keep = independent_columns(A, tol)
        if not keep:
            raise ValueError("all blocker normals are zero")
        self.A_ = A[:, keep]
        self.B_inv_ = gauss_jordan_inverse(matmul(self.A_.T, self.A_))
        self.H_ = matmul(matmul(self.A_, self.B_inv_), self.A_.T)
        self.sigma_ = [labels[i] for i in keep]
        self.dropped_ = [labels[i] for i in range(k) if i not in set(keep)]
        self.fully_blocked_ = len(keep) == m
        self.n_features_in_ = m
        return self

    def transform(self, X):
        """Return ``x - H x`` for a vector, or for every row of a matrix."""
        check_is_fitted(self, "H_")
        X = np.asarray(X)
        if X.ndim == 1:
            g = check_vector(X, arithmetic_of(self.H_),
                             length=self.n_features_in_, name="g")
            return g - matvec(self.H_, g)
        G = check_matrix(X, arithmetic_of(self.H_), name="X")
        if G.shape[1] != self.n_features_in_:
            raise ValueError(f"X has {G.shape[1]} features, "
                             f"expected {self.n_features_in_}")
        return G - matmul(G, self.H_.T)

    def component(self, g):
        """``H g``: the part of ``g`` spanned by the normals."""
        check_is_fitted(self, "H_")
        return matvec(self.H_, check_vector(g, arithmetic_of(self.H_)))


def build_hat(normals, tol=None, sigma=None):
    """Fit a :class:`HatProjector` on a list of normal vectors."""
    normals = list(normals)
    if not normals:
        raise ValueError("at least one normal is required")
    return HatProjector(tol=tol).fit(np.array(normals), sigma=sigma)


def project(hp, g):
    """``g - H g``: the projection of ``g`` onto the blockers' intersection."""
    return hp.transform(g)


def project_single(tau, g):
    """Single-hyperplane projection ``g - tau (g, tau) / (tau, tau)``."""
    arithmetic = infer_arithmetic(tau, g)
    tau = check_vector(tau, arithmetic, name="tau")
    g = check_vector(g, arithmetic, length=tau.shape[0], name="g")
    tt = inner(tau, tau)
    if tt == 0:
        raise ValueError("tau must be nonzero")
    return g - tau * (inner(g, tau) / tt)
