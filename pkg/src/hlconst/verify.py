"""Monte-Carlo check of |P|_q <= C ||P|| and of sharpness of C."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constants import Mode, _check_pq, constant
from .lp_geometry import sup_norm, sup_norm_many
from .polynomial import QuadForm, coeff_norm, coeff_norm_many
from .verdict import Verdict

REL_SLACK = 1e-9
DEGENERATE_NORM = 1e-12
SHARPNESS_TOL = 1e-8
# sup-norm accuracy used inside the trial loop; far below REL_SLACK * C
_TRIAL_TOL = 1e-14


@dataclass(frozen=True)
class VerificationReport:
    p: float
    q: float
    trials: int
    max_ratio: float
    worst_case: QuadForm
    constant_used: float
    passed: bool
    seed: int
    violations: int = 0
    skipped: int = 0
    enriched: int = 0

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "trials": self.trials,
            "seed": self.seed,
            "constant_used": self.constant_used,
            "max_ratio": self.max_ratio,
            "worst_case": [self.worst_case.c20, self.worst_case.c11, self.worst_case.c02],
            "violations": self.violations,
            "skipped": self.skipped,
            "enriched": self.enriched,
            "verdict": self.verdict,
        }


def random_quadform(rng_seed: int, scale: float = 1.0) -> QuadForm:
    """Coefficients uniform in [-scale, scale], reproducible from the seed."""
    if not scale > 0:
        raise ValueError("scale must be positive")
    u = np.random.default_rng(rng_seed).uniform(-1.0, 1.0, 3)
    return QuadForm.from_array(u * scale)


def _draw(rng, trials: int, enrich: float, witness: QuadForm) -> tuple[np.ndarray, int]:
    n_enriched = int(round(trials * enrich))
    box = rng.uniform(-1.0, 1.0, (trials - n_enriched, 3))
    near = witness.as_array() + rng.normal(0.0, 0.01, (n_enriched, 3))
    return np.concatenate([box, near]), n_enriched


def check_hl_inequality(p: float, q: float, trials: int = 10_000, seed: int = 0,
                        enrich: float = 0.1, forced: QuadForm | None = None) -> VerificationReport:
    """Ratios |P|_q / ||P|| over random P, compared to C(p, q).

    A fraction ``enrich`` of the draws are the sharpness witness plus
    N(0, 0.01^2) noise per coefficient; uniform box sampling almost never
    comes near the extremal family otherwise. ``forced`` replaces every
    draw by one fixed polynomial.
    """
    _check_pq(p, q)
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if not 0.0 <= enrich <= 1.0:
        raise ValueError("enrich must lie in [0, 1]")
    best = constant(p, q, Mode.AUTO)
    if forced is not None:
        coeffs, n_enriched = np.tile(forced.as_array(), (trials, 1)), 0
    else:
        coeffs, n_enriched = _draw(np.random.default_rng(seed), trials, enrich, best.witness.poly)
    norms = sup_norm_many(coeffs, p, tol=_TRIAL_TOL)
    keep = norms >= DEGENERATE_NORM
    ratios = np.full(trials, -np.inf)
    ratios[keep] = coeff_norm_many(coeffs[keep], q) / norms[keep]
    k = int(np.argmax(ratios))
    bound = best.value * (1.0 + REL_SLACK)
    violations = int(np.count_nonzero(ratios > bound))
    return VerificationReport(
        p=p, q=q, trials=trials,
        max_ratio=float(ratios[k]),
        worst_case=QuadForm.from_array(coeffs[k]),
        constant_used=best.value,
        passed=violations == 0,
        seed=seed,
        violations=violations,
        skipped=int(np.count_nonzero(~keep)),
        enriched=n_enriched,
    )


def check_sharpness(p: float, q: float, mode: Mode = Mode.AUTO) -> Verdict:
    """Does the reported witness attain the reported constant?"""
    res = constant(p, q, mode)
    P = res.witness.poly
    ratio = coeff_norm(P, q) / sup_norm(P, p, tol=1e-14)
    ok = abs(ratio - res.value) <= SHARPNESS_TOL
    return Verdict(ok, ratio, note=f"constant {res.value!r} ({res.method.value})")
