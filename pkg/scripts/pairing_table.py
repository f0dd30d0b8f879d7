"""Tabulate the window-lattice commutator oracle against the closed formula
log |<f,g>| = nu(g) log|f0(0)| - nu(f) log|g0(0)| on a grid of Laurent pairs.

Usage: python scripts/pairing_table.py [--seed N] [--cases N] [--prec BITS]
"""

import argparse
import random

from mpmath import mp

from arithsurf.centext import nu_arch_closed, nu_arch_oracle
from arithsurf.errors import WindowTooSmall
from arithsurf.laurent import parse_laurent
from arithsurf.selftest import random_laurent

FIXED = [
    ("2", "t"),
    ("t", "t"),
    ("t*(3+t)", "5*t^2"),
    ("1/2*t^-1 + t", "3"),
    ("(2+t)*(3+t)", "7*t^-2"),
]


def row(f, g, prec):
    oracle = nu_arch_oracle(f, g, prec=prec)
    closed = nu_arch_closed(f, g, prec=prec)
    return oracle, closed, abs(oracle - closed)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--cases", type=int, default=10)
    ap.add_argument("--prec", type=int, default=128)
    args = ap.parse_args()

    with mp.workprec(args.prec):
        print(f"{'f':<24} {'g':<24} {'oracle':<22} {'closed':<22} diff")
        for fs, gs in FIXED:
            o, c, d = row(parse_laurent(fs), parse_laurent(gs), args.prec)
            print(f"{fs:<24} {gs:<24} {mp.nstr(o, 15):<22} {mp.nstr(c, 15):<22} {mp.nstr(d, 3)}")
        rng = random.Random(args.seed)
        worst = mp.mpf(0)
        for _ in range(args.cases):
            f = random_laurent(rng)
            g = random_laurent(rng)
            try:
                o, c, d = row(f, g, args.prec)
            except WindowTooSmall as exc:
                print(f"{str(f):<24} {str(g):<24} skipped: {exc}")
                continue
            worst = max(worst, d)
            print(f"{str(f):<24} {str(g):<24} {mp.nstr(o, 15):<22} {mp.nstr(c, 15):<22} {mp.nstr(d, 3)}")
        print(f"\nworst |oracle - closed| over the random rows: {mp.nstr(worst, 3)}")


if __name__ == "__main__":
    main()
