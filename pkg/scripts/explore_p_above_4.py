"""Numerical C(p, q*) for p > 4, where no closed form is known.

Prints the constant at the critical exponent next to the 2^(2/p) floor, the
maximizing branch and parameter, and confirms the witness attains it.

    python scripts/explore_p_above_4.py --from 4 --to 12 --step 0.5
"""
import argparse

import numpy as np

from hlconst import Mode, check_sharpness, constant, critical_exponent


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--from", dest="start", type=float, default=4.0)
    ap.add_argument("--to", dest="stop", type=float, default=12.0)
    ap.add_argument("--step", type=float, default=0.5)
    args = ap.parse_args()
    print(f"{'p':>6} {'q*':>8} {'C(p,q*)':>14} {'2^(2/p)':>14} {'branch':>12} {'a*':>10}  sharp")
    for p in np.arange(args.start, args.stop + args.step / 2, args.step):
        p = float(p)
        q = critical_exponent(p)
        r = constant(p, q, Mode.FORCE_NUMERIC)
        ok = check_sharpness(p, q, Mode.FORCE_NUMERIC)
        print(f"{p:6.2f} {q:8.4f} {r.value:14.10f} {2 ** (2 / p):14.10f} "
              f"{r.branch.value:>12} {r.argmax_a:10.6f}  {'yes' if ok else 'NO'}")


if __name__ == "__main__":
    main()
