"""The constants C(p, q) = sup |P|_q / ||P|| over 2-homogeneous P on l_p^2.

The supremum is a maximum over the extreme polynomials, so it reduces to
two one-dimensional problems on a in [0, 1], one per extreme family. For
2 < p <= 4 and q >= 2 the answer is 2^(2/p), attained by 2^(2/p) xy.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from ._search import grid_max
from .extremals import ExtremePoly, Family, diagonal_extreme, offdiagonal_extreme
from .lp_geometry import _check_p
from .verdict import Verdict

BRANCH_SEED_POINTS = 8193


class Method(enum.Enum):
    CLOSED_FORM = "ClosedForm"
    NUMERIC_MAX = "NumericMax"


class Mode(enum.Enum):
    AUTO = "Auto"
    FORCE_NUMERIC = "ForceNumeric"


class RootNotBracketed(RuntimeError):
    pass


def _check_pq(p: float, q: float) -> None:
    _check_p(p)
    if not q >= 1:
        raise ValueError(f"coefficient exponent must satisfy q >= 1, got {q!r}")


def critical_exponent(p: float) -> float:
    """Optimal Hardy-Littlewood exponent: p/(p-2) up to p = 4, 4p/(3p-4) beyond."""
    _check_p(p)
    if p <= 4:
        return p / (p - 2.0)
    return 4.0 * p / (3.0 * p - 4.0)


def _qsum(terms, weights, q):
    if math.isinf(q):
        return np.max(np.stack(terms), axis=0)
    return sum(w * t**q for w, t in zip(weights, terms)) ** (1.0 / q)


def diagonal_objective(p: float, q: float, a):
    """|a x^2 + c y^2|_q along the diagonal family, c = (1 - a^r)^(1/r), r = p/(p-2)."""
    a = np.asarray(a, dtype=float)
    r = p / (p - 2.0)
    c = (1.0 - a**r) ** (1.0 / r)
    return _qsum([a, c], [1.0, 1.0], q)


def _offdiag_terms(p: float, a):
    a = np.asarray(a, dtype=float)
    ap = a**p
    b = (1.0 - ap) ** (1.0 / p)
    d = a * a + b * b
    t1 = np.abs(2.0 * ap - 1.0) / d
    t2 = 2.0 * a * b * (a ** (p - 2.0) + b ** (p - 2.0)) / d
    return t1, t2


def offdiag_objective(p: float, q: float, a):
    """(2 |T1|^q + T2^q)^(1/q): the q-norm of the off-diagonal member at a."""
    t1, t2 = _offdiag_terms(p, a)
    return _qsum([t1, t2], [2.0, 1.0], q)


def g_function(p: float, a):
    """Square of the q = 2 off-diagonal objective."""
    t1, t2 = _offdiag_terms(p, a)
    return 2.0 * t1 * t1 + t2 * t2


def g_critical_factor(p: float, a):
    """a^p (1-a^p)^(4/p) + a^(p+4) - a^4, the factor of g' that can vanish."""
    a = np.asarray(a, dtype=float)
    ap = a**p
    return ap * (1.0 - ap) ** (4.0 / p) + a ** (p + 4.0) - a**4


def g_positivity_factor(p: float, a):
    """The second factor of g', strictly positive on (0, 1)."""
    a = np.asarray(a, dtype=float)
    ap = a**p
    return (ap * (1.0 - ap) ** (2.0 / p) * (p - ap * p + 2.0 * ap - 1.0)
            - a * a * (ap - 1.0) * (ap * p - 2.0 * ap + 1.0))


def g_derivative(p: float, a):
    """Closed-form g'(a) on (0, 1)."""
    a = np.asarray(a, dtype=float)
    ap = a**p
    b2 = (1.0 - ap) ** (2.0 / p)
    num = -8.0 * g_critical_factor(p, a) * g_positivity_factor(p, a)
    return num / (a**3 * (b2 + a * a) ** 3 * (ap - 1.0) * b2)


def _scaled_critical_factor(p: float, a):
    # g_critical_factor = a^4 (1-u)^(4/p) * (u^-s - (1-u)^-s), u = a^p,
    # s = (4-p)/p. Dividing by the positive a^4 (1-u)^(4/p) s keeps every sign
    # change for p < 4 and stays informative at p = 4, where the raw factor
    # vanishes identically and its s -> 0 limit is log((1-u)/u).
    u = np.asarray(a, dtype=float) ** p
    s = (4.0 - p) / p
    la = -np.log(u)
    lb = -np.log1p(-u)
    if s == 0.0:
        return la - lb
    return np.exp(s * lb) * np.expm1(s * (la - lb)) / s


def g_derivative_root(p: float, tol: float = 1e-14, max_iter: int = 200) -> float:
    """The interior zero of g' on (0, 1), by bisection on its vanishing factor."""
    if not 2.0 < p <= 4.0:
        raise ValueError(f"g' root search needs 2 < p <= 4, got {p!r}")
    if not tol > 0:
        raise ValueError("tol must be positive")
    lo, hi = 1e-3, 1.0 - 1e-12
    flo = float(_scaled_critical_factor(p, lo))
    fhi = float(_scaled_critical_factor(p, hi))
    if not (flo > 0.0 > fhi):
        raise RootNotBracketed(f"no sign change of the g' factor on [{lo}, {hi}] at p={p}")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        fm = float(_scaled_critical_factor(p, mid))
        if fm == 0.0:
            return mid
        if fm > 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= tol:
            break
    return 0.5 * (lo + hi)


def positivity_776_check(p: float, samples: int = 10**5, max_report: int = 20) -> Verdict:
    """Sample the positive factor of g' at ``samples`` evenly spaced interior points."""
    _check_p(p)
    if samples < 1000:
        raise ValueError("samples must be at least 1000")
    a = np.arange(1, samples + 1) / (samples + 1.0)
    v = g_positivity_factor(p, a)
    bad = np.flatnonzero(~(v > 0))
    worst = float(v.min())
    return Verdict(bad.size == 0, worst, tuple(float(x) for x in a[bad[:max_report]]),
                   note=f"{bad.size} of {samples} samples non-positive" if bad.size else "")


@dataclass(frozen=True)
class ConstantResult:
    p: float
    q: float
    value: float
    argmax_a: float
    witness: ExtremePoly
    method: Method
    family_values: tuple[float, float]

    @property
    def branch(self) -> Family:
        return self.witness.family

    @property
    def exploratory(self) -> bool:
        # no closed form is known beyond p = 4
        return self.p > 4

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "value": self.value,
            "method": self.method.value,
            "argmax_a": self.argmax_a,
            "branch": self.branch.value,
            "family_values": {"diagonal": self.family_values[0],
                              "off_diagonal": self.family_values[1]},
            "witness": self.witness.to_dict(),
            "exploratory": self.exploratory,
        }


def branch_maxima(p: float, q: float, seed_points: int = BRANCH_SEED_POINTS):
    """((a, value) of the diagonal branch, (a, value) of the off-diagonal branch)."""
    _check_pq(p, q)
    diag = grid_max(lambda a: diagonal_objective(p, q, a), 0.0, 1.0, seed_points)
    off = grid_max(lambda a: offdiag_objective(p, q, a), 0.0, 1.0, seed_points)
    return diag, off


def closed_form_applies(p: float, q: float) -> bool:
    return 2.0 < p <= 4.0 and q >= 2.0


def constant(p: float, q: float, mode: Mode = Mode.AUTO) -> ConstantResult:
    """C(p, q), in closed form where it is proved and by maximization otherwise."""
    _check_pq(p, q)
    mode = Mode(mode)
    (a_d, v_d), (a_o, v_o) = branch_maxima(p, q)
    if mode is Mode.AUTO and closed_form_applies(p, q):
        value = 2.0 ** (2.0 / p)
        a1 = 2.0 ** (-1.0 / p)
        return ConstantResult(p, q, value, a1, offdiagonal_extreme(p, a1, 1),
                              Method.CLOSED_FORM, (v_d, value))
    if v_o >= v_d:
        witness = offdiagonal_extreme(p, a_o, 1)
        value, a_star = v_o, a_o
    else:
        witness = diagonal_extreme(p, a_d)
        value, a_star = v_d, a_d
    return ConstantResult(p, q, value, a_star, witness, Method.NUMERIC_MAX, (v_d, v_o))


@dataclass(frozen=True)
class ScanReport:
    """Both branch objectives sampled on [0, 1], plus the refined maximizer."""

    p: float
    q: float
    points: tuple[tuple[float, float, float], ...]
    argmax: tuple[Family, float, float]

    def to_dict(self) -> dict:
        branch, a, v = self.argmax
        return {
            "p": self.p,
            "q": self.q,
            "columns": ["a", "diagonal", "offdiagonal"],
            "points": [list(row) for row in self.points],
            "argmax": {"branch": branch.value, "a": a, "value": v},
        }


def scan_objectives(p: float, q: float, n_points: int = 1001) -> ScanReport:
    """Sample on an n-point uniform grid with the two landmarks
    2^((2-p)/p) and 2^(-1/p) merged in."""
    _check_pq(p, q)
    if n_points < 2:
        raise ValueError("n_points must be at least 2")
    a = np.union1d(np.linspace(0.0, 1.0, n_points),
                   [2.0 ** ((2.0 - p) / p), 2.0 ** (-1.0 / p)])
    d = diagonal_objective(p, q, a)
    o = offdiag_objective(p, q, a)
    (a_d, v_d), (a_o, v_o) = branch_maxima(p, q)
    argmax = (Family.OFF_DIAGONAL, a_o, v_o) if v_o >= v_d else (Family.DIAGONAL, a_d, v_d)
    points = tuple((float(x), float(y), float(z)) for x, y, z in zip(a, d, o))
    return ScanReport(p, q, points, argmax)
