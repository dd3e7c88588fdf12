"""Pure-numpy sweep kernels (fallback backend).

All kernels take batches of pre-sorted projected values, one instance per
row.  Cumulative-weight arrays must close exactly at 1.0 in the last column;
callers are responsible for that (see :func:`sliced_ot.ot1d.cumulative_weights`).
"""

from __future__ import annotations

import numpy as np


def _abs_pow(diff: np.ndarray, p: float) -> np.ndarray:
    if p == 2.0:
        return diff * diff
    if p == 1.0:
        return np.abs(diff)
    return np.abs(diff) ** p


def pp_equal(xs: np.ndarray, ys: np.ndarray, p: float) -> np.ndarray:
    """W_p^p per row for equal-count uniform-weight instances.

    ``xs`` and ``ys`` are (L, n) with each row sorted ascending.
    """
    return _abs_pow(xs - ys, p).mean(axis=1)


def _merged_segments(xcw: np.ndarray, ycw: np.ndarray):
    """Merged-CDF segmentation shared by the general value and gradient kernels.

    Returns (masses, xidx, yidx): for each inter-breakpoint segment, its
    probability mass and the covering atom index on each side.
    """
    L, n = xcw.shape
    m = ycw.shape[1]
    levels = np.concatenate([xcw, ycw], axis=1)
    order = np.argsort(levels, axis=1, kind="stable")
    slev = np.take_along_axis(levels, order, axis=1)
    is_x = order < n
    # atoms whose CDF level lies strictly below a segment are closed; the
    # covering atom is the count of closed levels on that side
    cum_x = np.cumsum(is_x, axis=1)
    xidx = np.minimum(cum_x - is_x, n - 1)
    yidx = np.minimum((np.arange(1, n + m + 1) - cum_x) - (~is_x), m - 1)
    masses = np.diff(slev, axis=1, prepend=0.0)
    return masses, xidx, yidx


def pp_general(xv: np.ndarray, xcw: np.ndarray, yv: np.ndarray, ycw: np.ndarray,
               p: float) -> np.ndarray:
    """W_p^p per row via exact piecewise-constant quantile integration.

    ``xv``/``yv`` are (L, n) and (L, m) sorted rows; ``xcw``/``ycw`` the
    matching cumulative weights with last column exactly 1.
    """
    masses, xidx, yidx = _merged_segments(xcw, ycw)
    xq = np.take_along_axis(xv, xidx, axis=1)
    yq = np.take_along_axis(yv, yidx, axis=1)
    return np.einsum("ij,ij->i", masses, _abs_pow(xq - yq, p))


def grad_general(xv: np.ndarray, xcw: np.ndarray, yv: np.ndarray, ycw: np.ndarray,
                 p: float):
    """Gradient of W_p^p with respect to sorted support values, both sides.

    Returns (gx, gy, tied) with gx (L, n), gy (L, m), and tied a boolean row
    flag marking zero-gap segments of positive mass (where the p <= 1
    gradient is a subgradient choice).
    """
    L = xv.shape[0]
    n = xv.shape[1]
    m = yv.shape[1]
    masses, xidx, yidx = _merged_segments(xcw, ycw)
    xq = np.take_along_axis(xv, xidx, axis=1)
    yq = np.take_along_axis(yv, yidx, axis=1)
    diff = xq - yq
    if p == 2.0:
        contrib = masses * (2.0 * diff)
    elif p == 1.0:
        contrib = masses * np.sign(diff)
    else:
        contrib = masses * (p * np.abs(diff) ** (p - 1.0) * np.sign(diff))
    rows = np.broadcast_to(np.arange(L)[:, None], xidx.shape)
    gx = np.zeros((L, n))
    gy = np.zeros((L, m))
    np.add.at(gx, (rows, xidx), contrib)
    np.subtract.at(gy, (rows, yidx), contrib)
    tied = np.any((masses > 0) & (diff == 0), axis=1)
    return gx, gy, tied
