"""Derivative-free 1-D maximization: seed grid + vectorized golden-section."""
from __future__ import annotations

import math

import numpy as np

INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_max(f, lo, hi, xtol: float = 1e-14):
    """Golden-section maximization over many brackets at once.

    ``f`` maps an array of abscissae (one per bracket) to values. Assumes
    each bracket holds a single peak; only comparisons are used, so kinks
    are harmless. Returns ``(x_best, f_best)`` arrays.
    """
    lo = np.array(lo, dtype=float, copy=True)
    hi = np.array(hi, dtype=float, copy=True)
    width = float(np.max(hi - lo, initial=0.0))
    if lo.size == 0:
        return lo, lo.copy()
    n_iter = 0
    if width > xtol:
        n_iter = int(math.ceil(math.log(xtol / width) / math.log(INVPHI)))
    x1 = hi - INVPHI * (hi - lo)
    x2 = lo + INVPHI * (hi - lo)
    f1 = f(x1)
    f2 = f(x2)
    for _ in range(n_iter):
        right = f2 > f1
        lo = np.where(right, x1, lo)
        hi = np.where(right, hi, x2)
        new_x = np.where(right, lo + INVPHI * (hi - lo), hi - INVPHI * (hi - lo))
        new_f = f(new_x)
        x1, f1, x2, f2 = (
            np.where(right, x2, new_x),
            np.where(right, f2, new_f),
            np.where(right, new_x, x1),
            np.where(right, new_f, f1),
        )
    take2 = f2 > f1
    return np.where(take2, x2, x1), np.where(take2, f2, f1)


def local_max_mask(v: np.ndarray, periodic: bool = False, axis: int = -1) -> np.ndarray:
    """Grid points not exceeded by either neighbour (endpoints included)."""
    if periodic:
        left = np.roll(v, 1, axis=axis)
        right = np.roll(v, -1, axis=axis)
    else:
        pad = np.full_like(np.take(v, [0], axis=axis), -np.inf)
        left = np.concatenate([pad, np.delete(v, -1, axis=axis)], axis=axis)
        right = np.concatenate([np.delete(v, 0, axis=axis), pad], axis=axis)
    return (v >= left) & (v >= right)


def grid_max(f, lo: float, hi: float, n: int, xtol: float = 1e-14):
    """Global maximum of a vectorized ``f`` on [lo, hi].

    Every local maximum of an ``n``-point seed grid is refined inside its
    two neighbouring cells. Returns ``(x, f(x))`` with ties going to the
    smallest x.
    """
    x = np.linspace(lo, hi, n)
    v = f(x)
    idx = np.flatnonzero(local_max_mask(v))
    blo = x[np.maximum(idx - 1, 0)]
    bhi = x[np.minimum(idx + 1, n - 1)]
    xr, vr = golden_max(f, blo, bhi, xtol)
    cand_x = np.concatenate([x[idx], xr])
    cand_v = np.concatenate([v[idx], vr])
    best = cand_v.max()
    # lowest abscissa among the exact ties
    k = np.flatnonzero(cand_v == best)
    j = k[np.argmin(cand_x[k])]
    return float(cand_x[j]), float(cand_v[j])
