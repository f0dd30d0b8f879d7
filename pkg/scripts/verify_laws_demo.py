"""Walk the three reciprocity laws on the worked examples, then a seeded batch.

Usage: python scripts/verify_laws_demo.py [--seed N] [--cases N]
"""

import argparse
import random

from arithsurf.laws import verify_horizontal_law, verify_point_law, verify_vertical_law
from arithsurf.selftest import HORIZONTAL_CURVES, random_pair, random_point
from arithsurf.surface import parse_curve, parse_function, parse_point


def show(report):
    d = report.to_dict()
    head = f"[{d['law']}] {d.get('subject', '')}  f={d['f']}  g={d['g']}"
    print(head)
    for item in d["items"]:
        cells = "  ".join(f"{k}={v}" for k, v in item.items() if v is not None)
        print(f"    {cells}")
    if d.get("numeric_sum") is not None:
        print(f"    numeric_sum = {d['numeric_sum']}")
    print(f"    exact_sum = {d.get('exact_sum')}   verdict = {d['verdict']}")
    print()


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--cases", type=int, default=5)
    args = ap.parse_args()

    F = parse_function
    print("== worked examples ==\n")
    show(verify_point_law(parse_point("2:t+1"), F("1*(t^2+1)^1"), F("1*(t-1)^1")))
    show(verify_vertical_law(5, F("5"), F("1*(t^2+2)^1")))
    show(verify_horizontal_law(parse_curve("H:t"), F("1*(t)^1"), F("2")))
    # ramified: finite +log 2 at p=2 killed by the conjugate pair at theta=+-i
    show(verify_horizontal_law(parse_curve("H:t^2+1"), F("1*(t^2+1)^1"), F("1*(t-1)^1")))

    print(f"== seeded batch (seed={args.seed}, cases={args.cases}) ==\n")
    rng = random.Random(args.seed)
    for i in range(args.cases):
        f, g = random_pair(rng)
        show(verify_point_law(random_point(rng), f, g))
        show(verify_vertical_law((2, 3, 5, 7, 101)[i % 5], f, g))
        show(verify_horizontal_law(parse_curve(HORIZONTAL_CURVES[i % 5]), f, g))


if __name__ == "__main__":
    main()
