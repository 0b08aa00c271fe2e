"""Exit criteria. Each test logs one PASS/FAIL line (shown in the pytest summary)."""
import math
import time

import numpy as np
import pytest

from hlconst.constants import (
    Mode,
    branch_maxima,
    constant,
    critical_exponent,
    g_derivative_root,
    g_function,
    positivity_776_check,
)
from hlconst.lp_geometry import sup_norm, sup_norm_many, sup_norm_oracle
from hlconst.polynomial import QuadForm, coeff_norm
from hlconst.verify import check_hl_inequality

P_GRID = [2.1, 2.5, 3, 3.5, 4]
P_FINE = list(np.linspace(2.1, 4.0, 20))


def test_ac01_closed_form_reproduction(record):
    t0 = time.perf_counter()
    worst = 0.0
    for p in P_GRID:
        for q in (2, 3, critical_exponent(p)):
            worst = max(worst, abs(constant(p, q, Mode.FORCE_NUMERIC).value - 2 ** (2 / p)))
    dt = time.perf_counter() - t0
    record("AC1 numeric C(p,q) = 2^(2/p) within 1e-9, < 5 s",
           worst <= 1e-9 and dt < 5, f"max err {worst:.2e}, {dt:.2f} s")


def test_ac02_p4_anchor(record):
    v = constant(4, 2).value
    record("AC2 C(4,2) = sqrt 2 within 1e-10", abs(v - 1.41421356237) <= 1e-10
           and abs(v - math.sqrt(2)) <= 1e-10, f"{v!r}")


def test_ac03_unique_critical_point(record):
    err = max(abs(g_derivative_root(p) - 2 ** (-1 / p)) for p in P_FINE)
    record("AC3 root of g' = 2^(-1/p) within 1e-10 on 20 p in (2,4]", err <= 1e-10, f"max err {err:.2e}")


def test_ac04_g_endpoints_and_peak(record):
    worst = 0.0
    dominates = True
    for p in P_FINE:
        peak = 2 ** (4 / p)
        worst = max(worst, abs(g_function(p, 0) - 2), abs(g_function(p, 1) - 2),
                    abs(g_function(p, 2 ** (-1 / p)) - peak))
        dominates &= peak >= 2
    record("AC4 g(0)=g(1)=2, g(2^(-1/p))=2^(4/p) within 1e-12, 2^(4/p) >= 2",
           worst <= 1e-12 and dominates, f"max err {worst:.2e}")


def test_ac05_positivity(record):
    verdicts = {p: positivity_776_check(p, 10**5) for p in (2.1, 3, 4, 6)}
    record("AC5 positive factor of g' > 0 on 1e5 samples, p in {2.1,3,4,6}",
           all(verdicts.values()), ", ".join(f"p={p}: min {v.value:.2e}" for p, v in verdicts.items()))


def test_ac06_diagonal_dominated(record):
    rng = np.random.default_rng(6)
    excess = -np.inf
    for _ in range(100):
        p = 4.0 - rng.uniform(0, 2.0 - 1e-9)  # in (2, 4]
        q = 1.0 + rng.exponential(3.0)
        (_, v), _ = branch_maxima(p, q)
        excess = max(excess, v - 2 ** (2 / p))
    arg_err = max(abs(branch_maxima(p, 1)[0][0] - 2 ** ((2 - p) / p)) for p in P_FINE)
    record("AC6 diagonal branch <= 2^(2/p) + 1e-9; q=1 argmax within 1e-6",
           excess <= 1e-9 and arg_err <= 1e-6, f"max excess {excess:.2e}, argmax err {arg_err:.2e}")


def test_ac07_sharpness_witness(record):
    ok = True
    notes = []
    for p in (2.5, 3, 4):
        W = QuadForm(0, 2 ** (2 / p), 0)
        oracle = sup_norm_oracle(W, p, 10**6)
        refined = sup_norm(W, p)
        q = critical_exponent(p)
        cn = coeff_norm(W, q)
        ratio = cn / refined
        ok &= abs(oracle - 1) <= 1e-8 and abs(refined - 1) <= 1e-8
        ok &= cn == 2 ** (2 / p)
        ok &= abs(ratio - constant(p, q).value) <= 1e-8
        notes.append(f"p={p}: oracle-1 {oracle - 1:.1e}")
    record("AC7 witness 2^(2/p) xy has norm 1 and ratio = constant", ok, "; ".join(notes))


def test_ac08_oracle_equivalence(record):
    t0 = time.perf_counter()
    rng = np.random.default_rng(8)
    coeffs = rng.uniform(-1, 1, (500, 3))
    ps = np.array([2.5, 3.0, 4.0, 6.0])[np.arange(500) % 4]
    worst = 0.0
    for p in np.unique(ps):
        sel = coeffs[ps == p]
        fast = sup_norm_many(sel, p)
        for row, s in zip(sel, fast):
            worst = max(worst, abs(s - sup_norm_oracle(QuadForm(*row), p, 10**6)))
    dt = time.perf_counter() - t0
    record("AC8 |sup_norm - oracle(1e6)| <= 1e-6 on 500 forms, < 60 s",
           worst <= 1e-6 and dt < 60, f"max diff {worst:.2e}, {dt:.1f} s")


@pytest.mark.parametrize("p,q", [(3, 3), (2.5, 5), (4, 2)])
def test_ac09_inequality_soundness(record, p, q):
    rep = check_hl_inequality(p, q, 10**5, seed=9, enrich=0.1)
    record(f"AC9 no violation in 1e5 trials at (p,q)=({p},{q})",
           rep.passed and rep.violations == 0 and rep.enriched > 0,
           f"max_ratio/C - 1 = {rep.max_ratio / rep.constant_used - 1:.2e}")


def test_ac10_strict_for_q_below_2(record):
    base = 2 ** (2 / 3)
    v15 = constant(3, 1.5, Mode.FORCE_NUMERIC).value
    v1 = constant(3, 1, Mode.FORCE_NUMERIC).value
    record("AC10 C(3,1.5), C(3,1) > 2^(2/3) + 1e-6",
           v15 > base + 1e-6 and v1 > base + 1e-6,
           f"excess q=1.5: {v15 - base:.6f}, q=1: {v1 - base:.6f}")


def test_ac11_monotone_in_q(record):
    vals = [constant(3, q, Mode.FORCE_NUMERIC).value for q in (1, 1.5, 2, 2.5, 3, 4)]
    ok = all(a >= b - 1e-10 for a, b in zip(vals, vals[1:]))
    record("AC11 C(3,q) nonincreasing for q in {1,1.5,2,2.5,3,4}", ok,
           " ".join(f"{v:.10f}" for v in vals))


def test_ac12_sharpness_floor_beyond_p4(record):
    gaps = {p: constant(p, critical_exponent(p), Mode.FORCE_NUMERIC).value - 2 ** (2 / p)
            for p in (4.5, 5, 6, 8)}
    record("AC12 C(p, q*) >= 2^(2/p) - 1e-12 for p in {4.5,5,6,8}",
           all(g >= -1e-12 for g in gaps.values()),
           ", ".join(f"p={p}: +{g:.4f}" for p, g in gaps.items()))
