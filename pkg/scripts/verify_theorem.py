"""Run the W4 verification over a range of n and print one table row per n.

    python scripts/verify_theorem.py --from 6 --to 9
"""

import argparse
import json

from wheelsat.verify import verify_n


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--from", dest="n_from", type=int, default=6)
    parser.add_argument("--to", dest="n_to", type=int, default=8)
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--json", help="also write the rows to this file")
    args = parser.parse_args()

    rows = []
    print(f"{'n':>3} {'expected':>8} {'computed':>8} {'classes':>7} {'verdict':>12} {'seconds':>8}")
    for n in range(args.n_from, args.n_to + 1):
        o = verify_n(n, workers=args.threads)
        rows.append(o.to_dict())
        print(f"{n:>3} {o.expected_sat:>8} {o.computed_sat!s:>8} {len(o.search_set):>7} {o.verdict:>12} {o.wall_time:>8.1f}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=1, sort_keys=True)


if __name__ == "__main__":
    main()
