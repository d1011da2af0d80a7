"""Exact sat(n, H) for the C4 and K4 cross-checks next to their closed forms."""

import argparse

from wheelsat.detect import parse_target
from wheelsat.search import search_min_saturated

CLOSED_FORMS = {"C4": lambda n: (3 * n - 5) // 2, "K4": lambda n: 2 * n - 3, "W4": lambda n: (5 * n - 10) // 2}
# the W4 formula only holds from n = 6; at n = 5 the answer is 8 (H*)
FIRST_N = {"C4": 5, "K4": 5, "W4": 6}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=8)
    args = parser.parse_args()
    for name, formula in CLOSED_FORMS.items():
        target = parse_target(name)
        for n in range(FIRST_N[name], args.max_n + 1):
            rep = search_min_saturated(n, target)
            mark = "ok" if rep.sat_value == formula(n) else "DIFF"
            print(f"{name} n={n:<2} sat={rep.sat_value:<3} formula={formula(n):<3} classes={len(rep.extremal):<3} {mark} {rep.wall_time:.2f}s")


if __name__ == "__main__":
    main()
