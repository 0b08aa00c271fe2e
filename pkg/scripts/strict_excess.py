"""How far C(p, q) rises above 2^(2/p) when 1 <= q < 2.

    python scripts/strict_excess.py [--p 2.5 3 3.5 4] [--q 1 1.25 1.5 1.75 1.95]
"""
import argparse
import csv
import sys

from hlconst import Mode, constant


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--p", type=float, nargs="+", default=[2.5, 3.0, 3.5, 4.0])
    ap.add_argument("--q", type=float, nargs="+", default=[1.0, 1.25, 1.5, 1.75, 1.95])
    args = ap.parse_args()
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["p", "q", "constant", "excess", "argmax_a"])
    for p in args.p:
        for q in args.q:
            r = constant(p, q, Mode.FORCE_NUMERIC)
            w.writerow([p, q, repr(r.value), repr(r.value - 2 ** (2 / p)), repr(r.argmax_a)])


if __name__ == "__main__":
    main()
