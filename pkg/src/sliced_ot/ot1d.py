"""Exact one-dimensional Wasserstein distance and its support-location gradient.

Discrete inputs admit exact evaluation: sort both supports, sweep the merged
CDF breakpoints, and integrate the piecewise-constant quantile difference.
Sorting is stable (by value, then original index) so gradients are
deterministic under ties.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .measures import Measure1D

SEGMENT_MASS_TOL = 1e-12


def cumulative_weights(w: np.ndarray) -> np.ndarray:
    """Cumulative weights along the last axis, closed exactly at 1."""
    c = np.cumsum(w, axis=-1)
    c[..., -1] = 1.0
    return c


@dataclass(frozen=True)
class SortedMatching:
    """Monotone matching between two sorted 1-D supports.

    For equal-size equal-weight inputs the matching is the pair of sort
    permutations (``sigma``, ``tau``).  Otherwise it is the merged-CDF
    segment list: each segment carries its probability mass and the quantile
    value of each measure on it.
    """

    sigma: np.ndarray | None = None
    tau: np.ndarray | None = None
    masses: np.ndarray | None = None
    left_quantiles: np.ndarray | None = None
    right_quantiles: np.ndarray | None = None

    def __post_init__(self):
        if self.masses is not None:
            if np.any(self.masses <= 0):
                raise ValueError("segment masses must be positive")
            if abs(self.masses.sum() - 1.0) > SEGMENT_MASS_TOL:
                raise ValueError("segment masses must sum to 1")

    @property
    def is_permutation(self) -> bool:
        return self.sigma is not None


def sorted_matching(mu: Measure1D, nu: Measure1D) -> SortedMatching:
    """Build the monotone matching realizing the 1-D optimal coupling."""
    if mu.n == nu.n and mu.is_uniform() and nu.is_uniform():
        sigma = np.argsort(mu.values, kind="stable")
        tau = np.argsort(nu.values, kind="stable")
        return SortedMatching(sigma=sigma, tau=tau)
    xv, xw = _sorted_support(mu)
    yv, yw = _sorted_support(nu)
    masses, xidx, yidx = _kernels._numpy._merged_segments(
        cumulative_weights(xw)[None, :], cumulative_weights(yw)[None, :]
    )
    keep = masses[0] > 0
    return SortedMatching(
        masses=masses[0][keep],
        left_quantiles=xv[xidx[0][keep]],
        right_quantiles=yv[yidx[0][keep]],
    )


def _sorted_support(m: Measure1D):
    order = np.argsort(m.values, kind="stable")
    return m.values[order], m.weights[order]


def wasserstein_1d(mu: Measure1D, nu: Measure1D, p: float = 2.0) -> float:
    """Exact W_p between two discrete 1-D measures (the p-th root)."""
    if p < 1:
        raise ValueError("p must be >= 1")
    return float(
        batch_pp(mu.values[None, :], nu.values[None, :], p,
                 xw=None if mu.is_uniform() else mu.weights,
                 yw=None if nu.is_uniform() else nu.weights)[0]
    ) ** (1.0 / p)


def batch_pp(xproj: np.ndarray, yproj: np.ndarray, p: float,
             xw: np.ndarray | None = None, yw: np.ndarray | None = None) -> np.ndarray:
    """W_p^p for a batch of projected instances sharing weight vectors.

    ``xproj`` (L, n) and ``yproj`` (L, m) hold one 1-D instance per row
    (unsorted).  ``xw``/``yw`` are the common weights; ``None`` means uniform.

    Returns the (L,) array of p-th-power distances.
    """
    xproj = np.ascontiguousarray(np.atleast_2d(xproj), dtype=np.float64)
    yproj = np.ascontiguousarray(np.atleast_2d(yproj), dtype=np.float64)
    n, m = xproj.shape[1], yproj.shape[1]
    if xw is None and yw is None and n == m:
        return _kernels.pp_equal(np.sort(xproj, axis=1), np.sort(yproj, axis=1), p)
    xv, xcw = _sorted_with_cums(xproj, xw)
    yv, ycw = _sorted_with_cums(yproj, yw)
    return _kernels.pp_general(xv, xcw, yv, ycw, p)


def _sorted_with_cums(proj: np.ndarray, w: np.ndarray | None):
    L, n = proj.shape
    if w is None:
        v = np.ascontiguousarray(np.sort(proj, axis=1))
        cw = np.broadcast_to(cumulative_weights(np.full(n, 1.0 / n)), (L, n))
        return v, np.ascontiguousarray(cw)
    order = np.argsort(proj, axis=1, kind="stable")
    v = np.ascontiguousarray(np.take_along_axis(proj, order, axis=1))
    cw = np.ascontiguousarray(cumulative_weights(np.broadcast_to(w, (L, n))[np.arange(L)[:, None], order]))
    return v, cw


def batch_pp_grad(xproj: np.ndarray, yproj: np.ndarray, p: float,
                  yw: np.ndarray | None = None):
    """Gradient of W_p^p with respect to the (equal-weight) x projections.

    Returns (grad, tied): grad (L, n) aligned with the unsorted ``xproj``
    columns, and a per-row flag for zero-gap segments of positive mass.
    Ties use the subgradient convention sign(0) = 0.
    """
    xproj = np.atleast_2d(np.asarray(xproj, dtype=np.float64))
    yproj = np.atleast_2d(np.asarray(yproj, dtype=np.float64))
    L, n = xproj.shape
    order = np.argsort(xproj, axis=1, kind="stable")
    xv = np.take_along_axis(xproj, order, axis=1)
    xcw = np.broadcast_to(cumulative_weights(np.full(n, 1.0 / n)), (L, n)).copy()
    yv, ycw = _sorted_with_cums(yproj, yw)
    gx_sorted, _, tied = _kernels.grad_general(xv, xcw, yv, ycw, p)
    grad = np.empty_like(gx_sorted)
    np.put_along_axis(grad, order, gx_sorted, axis=1)
    return grad, tied


def batch_pp_grad_both(xproj: np.ndarray, yproj: np.ndarray, p: float,
                       xw: np.ndarray | None = None, yw: np.ndarray | None = None):
    """Gradients of W_p^p with respect to both sides' unsorted projections."""
    xproj = np.atleast_2d(np.asarray(xproj, dtype=np.float64))
    yproj = np.atleast_2d(np.asarray(yproj, dtype=np.float64))
    xorder = np.argsort(xproj, axis=1, kind="stable")
    yorder = np.argsort(yproj, axis=1, kind="stable")
    xv = np.take_along_axis(xproj, xorder, axis=1)
    yv = np.take_along_axis(yproj, yorder, axis=1)
    xcw = _cums_for(xproj.shape, xw, xorder)
    ycw = _cums_for(yproj.shape, yw, yorder)
    gx_s, gy_s, tied = _kernels.grad_general(xv, xcw, yv, ycw, p)
    gx = np.empty_like(gx_s)
    gy = np.empty_like(gy_s)
    np.put_along_axis(gx, xorder, gx_s, axis=1)
    np.put_along_axis(gy, yorder, gy_s, axis=1)
    return gx, gy, tied


def _cums_for(shape, w, order):
    L, n = shape
    if w is None:
        return np.broadcast_to(cumulative_weights(np.full(n, 1.0 / n)), (L, n)).copy()
    return cumulative_weights(np.broadcast_to(w, (L, n))[np.arange(L)[:, None], order])


def wasserstein_1d_pp_grad(mu_values, nu: Measure1D, p: float = 2.0):
    """Gradient of W_p^p with respect to equal-weight support locations.

    ``mu_values`` is the (n,) support of a uniform-weight measure (the
    particle case of a gradient flow).  Returns (grad, degenerate): the (n,)
    gradient and a flag set when p <= 1 meets a zero gap, where the value is
    a subgradient under the sign(0) = 0 convention.
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    x = np.asarray(mu_values, dtype=np.float64).ravel()
    grad, tied = batch_pp_grad(x[None, :], nu.values[None, :], p,
                               yw=None if nu.is_uniform() else nu.weights)
    degenerate = bool(tied[0]) and p <= 1
    return grad[0], degenerate
