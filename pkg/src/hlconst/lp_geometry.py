"""The unit sphere of l_p(R^2) and the sup-norm of quadratic forms on it.

Two parametrizations are used and kept independent of each other:

* ``sphere_point`` / ``sup_norm_oracle`` use the graph chart
  (a, +-(1 - a^p)^(1/p)), a in [0, 1].
* ``sup_norm`` walks a closed C^1 loop ``u in [0, 4)`` built from the two
  well-conditioned half charts (where |dy/dx| <= 1), so that no part of the
  sphere is compressed near the corner a = 1 of the graph chart.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._search import golden_max, local_max_mask
from .polynomial import QuadForm

SEED_POINTS = 4096
_CHUNK_ELEMS = 1 << 22


def _check_p(p: float) -> None:
    if not p > 2:
        raise ValueError(f"domain exponent must satisfy p > 2, got {p!r}")


@dataclass(frozen=True)
class SpaceParams:
    p: float
    q: float

    def __post_init__(self):
        _check_p(self.p)
        if not self.q >= 1:
            raise ValueError(f"coefficient exponent must satisfy q >= 1, got {self.q!r}")

    @property
    def dual_diagonal_exponent(self) -> float:
        """p/(p-2): the Hoelder exponent normalizing the diagonal family."""
        return self.p / (self.p - 2)

    @property
    def critical_exponent(self) -> float:
        from .constants import critical_exponent

        return critical_exponent(self.p)


def sphere_point(p: float, a: float, sign_y: int = 1) -> tuple[float, float]:
    """(a, sign_y * (1 - a^p)^(1/p)), a point of the unit l_p sphere."""
    _check_p(p)
    if not 0.0 <= a <= 1.0:
        raise ValueError(f"a must lie in [0, 1], got {a!r}")
    if sign_y not in (1, -1):
        raise ValueError("sign_y must be +1 or -1")
    return float(a), sign_y * (1.0 - a**p) ** (1.0 / p)


def _complement(p, t):
    return (1.0 - t**p) ** (1.0 / p)


def loop_point(p: float, u):
    """Point of the sphere at loop parameter u in [0, 4).

    [0,1]: (b(y), y), y = u*m climbing from (1,0) to the diagonal point
    (m, m), m = 2^(-1/p); [1,2]: (x, b(x)), x falling back to 0; [2,4]: the
    first half rotated by 90 degrees. u is taken mod 4; points u and u + 4
    differ by the sign flip that leaves every quadratic form unchanged.
    """
    u = np.mod(np.asarray(u, dtype=float), 4.0)
    m = 2.0 ** (-1.0 / p)
    half = u >= 2.0
    v = np.where(half, u - 2.0, u)
    first = v <= 1.0
    t = np.where(first, v, 2.0 - v) * m
    s = _complement(p, t)
    x = np.where(first, s, t)
    y = np.where(first, t, s)
    return np.where(half, -y, x), np.where(half, x, y)


@lru_cache(maxsize=16)
def _seed_monomials(p: float, n: int):
    u = np.arange(n) * (4.0 / n)
    x, y = loop_point(p, u)
    mono = np.stack([x * x, x * y, y * y])
    mono.setflags(write=False)
    return u, mono


def sup_norm_many(coeffs, p: float, tol: float = 1e-10, seed_points: int = SEED_POINTS) -> np.ndarray:
    """sup over the unit l_p ball of |P| for every row of an (N, 3) array.

    Each local maximum of |P| on the seed loop is refined by golden-section
    inside its two neighbouring cells, to a bracket width where the
    quadratic error bound of the smooth peak is below ``tol``.
    """
    _check_p(p)
    if not tol > 0:
        raise ValueError("tol must be positive")
    c = np.atleast_2d(np.asarray(coeffs, dtype=float))
    n = int(seed_points)
    u, mono = _seed_monomials(float(p), n)
    h = 4.0 / n
    out = np.empty(len(c))
    rows = max(1, _CHUNK_ELEMS // n)
    for start in range(0, len(c), rows):
        blk = c[start:start + rows]
        vals = np.abs(blk @ mono)
        best = vals.max(axis=1)
        live = best > 0
        mask = local_max_mask(vals, periodic=True, axis=1) & live[:, None]
        r, i = np.nonzero(mask)
        if r.size:
            # |d^2/du^2 P(loop(u))| <= (4p + 4) * sum|c| on the loop
            curv = (4.0 * p + 4.0) * float(np.abs(blk).sum(axis=1).max())
            xtol = min(h, max(math.sqrt(2.0 * tol / curv), 1e-15))
            cr = blk[r]

            def f(uu, cr=cr):
                x, y = loop_point(p, uu)
                return np.abs(cr[:, 0] * x * x + cr[:, 1] * x * y + cr[:, 2] * y * y)

            _, vr = golden_max(f, u[i] - h, u[i] + h, xtol)
            np.maximum.at(best, r, vr)
        out[start:start + rows] = best
    return out


def sup_norm(P: QuadForm, p: float, tol: float = 1e-10) -> float:
    """||P|| = sup of |P(x, y)| over ||(x, y)||_p <= 1, to absolute error tol."""
    return float(sup_norm_many(P.as_array(), p, tol)[0])


@lru_cache(maxsize=8)
def _oracle_monomials(p: float, grid_size: int):
    a = np.linspace(0.0, 1.0, grid_size)
    b = _complement(p, a)
    # both y-signs, plus the mirror (b, a) that densely covers the a -> 1 corner
    x = np.concatenate([a, a, b, b])
    y = np.concatenate([b, -b, a, -a])
    mono = np.stack([x * x, x * y, y * y])
    mono.setflags(write=False)
    return mono


def sup_norm_oracle(P: QuadForm, p: float, grid_size: int = 10**6) -> float:
    """Brute-force lower bound on ||P|| from an equispaced grid in a.

    No refinement; shares no code with ``sup_norm`` beyond the formula for
    the sphere.
    """
    _check_p(p)
    if grid_size < 1000:
        raise ValueError("grid_size must be at least 1000")
    mono = _oracle_monomials(float(p), int(grid_size))
    return float(np.max(np.abs(P.as_array() @ mono)))
