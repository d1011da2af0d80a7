"""Count isomorphism classes per family and n, and check the edge law.

    python scripts/family_table.py --max-n 16
"""

import argparse

from wheelsat.families import FAMILIES, enumerate_family, family_params


def expected_edges(family, n):
    if family == "hstar":
        return 8
    if family.startswith("f"):
        return (3 * n - 5) // 2
    return (5 * n - 10) // 2


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=14)
    args = parser.parse_args()

    print("n    " + " ".join(f"{f:>6}" for f in FAMILIES))
    for n in range(5, args.max_n + 1):
        cells = []
        for family in FAMILIES:
            classes = enumerate_family(family, n)
            bad = sum(g.num_edges != expected_edges(family, n) for _, g in classes)
            cell = f"{len(classes)}/{len(family_params(family, n))}" if classes else "-"
            cells.append(f"{cell + ('!' if bad else ''):>6}")
        print(f"{n:<4} " + " ".join(cells))
    print("cells are classes/parameter tuples; '!' marks an edge-count violation")


if __name__ == "__main__":
    main()
