"""Extreme points of the unit ball of 2-homogeneous polynomials on l_p^2 (p > 2).

Two families exhaust them:

* diagonal:      a x^2 + c y^2 with a, c > 0 and ||(a, c)||_{p/(p-2)} = 1;
* off-diagonal:  +-( (a^p - b^p)/(a^2 + b^2) (x^2 - y^2)
                     + 2ab (a^(p-2) + b^(p-2))/(a^2 + b^2) xy ),
                 a, b >= 0, ||(a, b)||_p = 1.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .lp_geometry import _check_p, sup_norm
from .polynomial import QuadForm
from .verdict import Verdict

UNIT_NORM_TOL = 1e-8
_FAMILY_TOL = 1e-12


class Family(enum.Enum):
    DIAGONAL = "Diagonal"
    OFF_DIAGONAL = "OffDiagonal"


@dataclass(frozen=True)
class ExtremePoly:
    family: Family
    param_a: float
    sign: int
    poly: QuadForm

    def to_dict(self) -> dict:
        return {
            "family": self.family.value,
            "param_a": self.param_a,
            "sign": self.sign,
            "coefficients": [self.poly.c20, self.poly.c11, self.poly.c02],
        }


def diagonal_extreme(p: float, a: float) -> ExtremePoly:
    _check_p(p)
    if not 0.0 < a < 1.0:
        raise ValueError(f"diagonal family needs a in (0, 1), got {a!r}")
    r = p / (p - 2.0)
    c = (1.0 - a**r) ** (1.0 / r)
    return ExtremePoly(Family.DIAGONAL, float(a), 1, QuadForm(a, 0.0, c))


def offdiagonal_coeffs(p: float, a: float, b: float) -> tuple[float, float, float]:
    """(c20, c11, c02) of the + member for an explicit sphere point (a, b)."""
    d = a * a + b * b
    t1 = (a**p - b**p) / d
    t2 = 2.0 * a * b * (a ** (p - 2.0) + b ** (p - 2.0)) / d
    return t1, t2, -t1


def offdiagonal_extreme(p: float, a: float, sign: int = 1) -> ExtremePoly:
    _check_p(p)
    if not 0.0 <= a <= 1.0:
        raise ValueError(f"off-diagonal family needs a in [0, 1], got {a!r}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    b = (1.0 - a**p) ** (1.0 / p)
    c20, c11, c02 = offdiagonal_coeffs(p, a, b)
    poly = QuadForm(sign * c20, sign * c11, sign * c02)
    return ExtremePoly(Family.OFF_DIAGONAL, float(a), sign, poly)


def _family_ok(E: ExtremePoly, p: float) -> str:
    P = E.poly
    if E.family is Family.DIAGONAL:
        r = p / (p - 2.0)
        if P.c11 != 0.0 or not P.c20 * P.c02 > 0:
            return "diagonal member must be a x^2 + c y^2 with ac > 0"
        dual = (abs(P.c20) ** r + abs(P.c02) ** r) ** (1.0 / r)
        if abs(dual - 1.0) > _FAMILY_TOL:
            return f"||(a, c)||_(p/(p-2)) = {dual!r}, expected 1"
        return ""
    a = E.param_a
    b = (1.0 - a**p) ** (1.0 / p)
    expect = [E.sign * t for t in offdiagonal_coeffs(p, a, b)]
    got = [P.c20, P.c11, P.c02]
    if any(abs(g - e) > _FAMILY_TOL * max(1.0, abs(e)) for g, e in zip(got, expect)):
        return "coefficients do not match the off-diagonal formula at param_a"
    return ""


def validate_extreme(E: ExtremePoly, p: float) -> Verdict:
    """Unit sup-norm (within 1e-8) plus the family's own constraints."""
    norm = sup_norm(E.poly, p, tol=1e-13)
    problem = _family_ok(E, p)
    if abs(norm - 1.0) > UNIT_NORM_TOL:
        problem = problem or f"sup-norm {norm!r} is not 1"
    return Verdict(not problem, norm, note=problem)
