"""Similarity and conservation metrics: Pearson correlation, DTW, energy, power."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    BadRateError,
    EmptyInputError,
    LengthMismatchError,
    ZeroVarianceError,
)

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    njit = None


def _dp_matrix_loops(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    # Accumulated-cost DP; local cost is the squared sample difference.
    n = x.shape[0]
    m = y.shape[0]
    acc = np.empty((n, m))
    d = x[0] - y[0]
    acc[0, 0] = d * d
    for j in range(1, m):
        d = x[0] - y[j]
        acc[0, j] = acc[0, j - 1] + d * d
    for i in range(1, n):
        d = x[i] - y[0]
        acc[i, 0] = acc[i - 1, 0] + d * d
        for j in range(1, m):
            best = acc[i - 1, j - 1]
            if acc[i - 1, j] < best:
                best = acc[i - 1, j]
            if acc[i, j - 1] < best:
                best = acc[i, j - 1]
            d = x[i] - y[j]
            acc[i, j] = best + d * d
    return acc


def _dp_matrix_diagonals(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    # Vectorised fallback: cells on one anti-diagonal only depend on the two
    # previous anti-diagonals, so each diagonal updates in one shot.
    acc = np.square(x[:, None] - y[None, :])
    n, m = acc.shape
    np.cumsum(acc[0, :], out=acc[0, :])
    np.cumsum(acc[:, 0], out=acc[:, 0])
    for k in range(2, n + m - 1):
        lo = max(1, k - m + 1)
        hi = min(n - 1, k - 1)
        if lo > hi:
            continue
        i = np.arange(lo, hi + 1)
        j = k - i
        best = np.minimum(acc[i - 1, j - 1], np.minimum(acc[i - 1, j], acc[i, j - 1]))
        acc[i, j] += best
    return acc


def _backtrack_loops(acc: np.ndarray) -> np.ndarray:
    n = acc.shape[0]
    m = acc.shape[1]
    path = np.empty((n + m - 1, 2), dtype=np.int64)
    i = n - 1
    j = m - 1
    k = n + m - 2
    path[k, 0] = i
    path[k, 1] = j
    while i > 0 or j > 0:
        if i == 0:
            j -= 1
        elif j == 0:
            i -= 1
        else:
            diag = acc[i - 1, j - 1]
            vert = acc[i - 1, j]
            horiz = acc[i, j - 1]
            # ties prefer the diagonal, then the step that advances x
            if diag <= vert and diag <= horiz:
                i -= 1
                j -= 1
            elif vert <= horiz:
                i -= 1
            else:
                j -= 1
        k -= 1
        path[k, 0] = i
        path[k, 1] = j
    return path[k:].copy()


if njit is not None:
    _dp_matrix = njit(cache=True)(_dp_matrix_loops)
    _backtrack = njit(cache=True)(_backtrack_loops)
else:  # pragma: no cover
    _dp_matrix = _dp_matrix_diagonals
    _backtrack = _backtrack_loops


@dataclass(frozen=True)
class DtwResult:
    """Outcome of a dynamic time warping alignment.

    cost_matrix holds the accumulated costs (shape n x m); path is the optimal
    warping path as an array of (i, j) index pairs from (0, 0) to
    (n-1, m-1); distance is the square root of the accumulated cost at the far
    corner; normalized_distance rescales distance into [0, 1] against a
    worst-case constant reference (see dtw).
    """

    cost_matrix: np.ndarray
    path: np.ndarray
    distance: float
    normalized_distance: float

    @property
    def similarity(self) -> float:
        return 1.0 - self.normalized_distance


def _worst_case_corner(x: np.ndarray, m: int) -> float:
    """Accumulated DTW cost between x and its worse constant range extreme.

    Against a constant c the local cost of every cell in row i is
    (x[i] - c)**2, so the optimal path costs sum((x - c)**2) plus, when the
    constant sequence is longer, (m - n) repeats of the cheapest row.
    """
    n = len(x)
    worst = 0.0
    for c in (float(x.min()), float(x.max())):
        w = np.square(x - c)
        corner = float(w.sum())
        if m > n:
            corner += (m - n) * float(w.min())
        worst = max(worst, corner)
    return worst


def dtw(x, y) -> DtwResult:
    """Align two sequences by dynamic time warping.

    Local cost is the squared sample difference; allowed steps are the three
    unit moves. distance is the square root of the accumulated cost between
    the sequence ends. normalized_distance divides that by the distance from
    x to a constant signal of y's length held at whichever extreme of x's
    range is farther (the costlier of the two), clamped to [0, 1];
    1 - normalized_distance is the similarity used in reports and sweeps.
    """
    xa = _metric_input(x)
    ya = _metric_input(y)
    acc = _dp_matrix(xa, ya)
    distance = math.sqrt(acc[-1, -1])
    path = _backtrack(acc)
    worst = math.sqrt(_worst_case_corner(xa, len(ya)))
    if worst == 0.0:
        normalized = 0.0 if distance == 0.0 else 1.0
    else:
        normalized = min(1.0, distance / worst)
    acc.flags.writeable = False
    path.flags.writeable = False
    return DtwResult(cost_matrix=acc, path=path, distance=distance,
                     normalized_distance=normalized)


def _metric_input(x) -> np.ndarray:
    xa = np.asarray(x, dtype=np.float64)
    if xa.ndim != 1:
        raise ValueError(f"input must be one-dimensional, got shape {xa.shape}")
    if len(xa) == 0:
        raise EmptyInputError("input sequence is empty")
    return xa


def pearson(x, y) -> float:
    """Pearson product-moment correlation of two equal-length sequences."""
    xa = np.asarray(x, dtype=np.float64)
    ya = np.asarray(y, dtype=np.float64)
    if xa.ndim != 1 or ya.ndim != 1 or xa.shape != ya.shape or len(xa) < 2:
        raise LengthMismatchError(
            f"need two equal-length sequences of >= 2 samples, got {xa.shape} and {ya.shape}"
        )
    dx = xa - xa.mean()
    dy = ya - ya.mean()
    sx = float(np.dot(dx, dx))
    sy = float(np.dot(dy, dy))
    if sx == 0.0 or sy == 0.0:
        raise ZeroVarianceError("correlation is undefined for a constant sequence")
    r = float(np.dot(dx, dy)) / math.sqrt(sx * sy)
    return max(-1.0, min(1.0, r))


def energy(x) -> float:
    """Sum of squared samples: the discrete signal energy."""
    xa = _metric_input(x)
    return float(np.dot(xa, xa))


def power(x, f_samp: float) -> float:
    """Energy divided by the sampling rate, a Riemann sum for the time integral."""
    if not (math.isfinite(f_samp) and f_samp > 0):
        raise BadRateError(f"f_samp must be positive and finite, got {f_samp}")
    return energy(x) / f_samp
