"""Real 2-homogeneous polynomials c20*x^2 + c11*x*y + c02*y^2."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class QuadForm:
    """Coefficients in the monomial basis {x^2, xy, y^2}.

    ``c11`` multiplies the monomial xy directly (no symmetric-bilinear factor 2).
    """

    c20: float
    c11: float
    c02: float

    def __post_init__(self):
        for name in ("c20", "c11", "c02"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite, got {v!r}")
            object.__setattr__(self, name, v)

    @classmethod
    def from_array(cls, coeffs) -> "QuadForm":
        c20, c11, c02 = (float(c) for c in coeffs)
        return cls(c20, c11, c02)

    def as_array(self) -> np.ndarray:
        return np.array([self.c20, self.c11, self.c02])

    def swapped(self) -> "QuadForm":
        """The polynomial P(y, x)."""
        return QuadForm(self.c02, self.c11, self.c20)

    def __mul__(self, t: float) -> "QuadForm":
        return QuadForm(t * self.c20, t * self.c11, t * self.c02)

    __rmul__ = __mul__

    def __add__(self, other: "QuadForm") -> "QuadForm":
        return QuadForm(self.c20 + other.c20, self.c11 + other.c11, self.c02 + other.c02)

    def __call__(self, x, y):
        return evaluate(self, x, y)


def evaluate(P: QuadForm, x, y):
    """P(x, y); broadcasts over numpy arrays."""
    return P.c20 * x * x + P.c11 * x * y + P.c02 * y * y


def _check_q(q: float) -> None:
    if not q >= 1:
        raise ValueError(f"coefficient norm needs q >= 1, got {q!r}")


def coeff_norm_many(coeffs, q: float) -> np.ndarray:
    """Row-wise l_q norm of an (N, 3) coefficient array."""
    _check_q(q)
    c = np.abs(np.asarray(coeffs, dtype=float))
    m = c.max(axis=-1)
    if math.isinf(q):
        return m
    safe = np.where(m > 0, m, 1.0)
    # scale by the max entry so large q cannot overflow
    s = np.sum((c / safe[..., None]) ** q, axis=-1) ** (1.0 / q)
    return np.where(m > 0, m * s, 0.0)


def coeff_norm(P: QuadForm, q: float) -> float:
    """(|c20|^q + |c11|^q + |c02|^q)^(1/q); q = inf gives the max norm."""
    return float(coeff_norm_many(P.as_array(), q))
