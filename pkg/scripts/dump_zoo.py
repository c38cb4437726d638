#!/usr/bin/env python3
"""Print the built-in algebra zoo with its computed headline numbers.

One row per algebra: block sizes, degeneracy verdict, cocycle/coboundary
dimensions, and the invariant bivector dimension. Handy as a quick sanity
sweep after touching the cohomology code.
"""

import argparse
import sys

from flatbialg.cohomology import coboundary_space, cocycle_space, invariants
from flatbialg.flatliealg import classify
from flatbialg.zoo import ZOO_PARAMS, get_zoo


def describe(name, g):
    report = classify(g)
    if report.anomaly:
        deg = "anomalous"
    elif report.nondegenerate:
        deg = "nondegenerate"
    else:
        deg = "pairs " + ",".join(f"({i},{j},{e})" for i, j, e in report.pairs)
    zc = cocycle_space(g).dim
    zb = coboundary_space(g).dim
    return {
        "name": name,
        "k0": g.k0, "l0": g.l0, "m": g.m, "dim": g.dim,
        "degeneracy": deg,
        "cocycles": zc, "coboundaries": zb, "h1": zc - zb,
        "invariants": invariants(g, 2).dim,
    }


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("names", nargs="*",
                        help="algebra names (default: the whole zoo)")
    args = parser.parse_args(argv)

    zoo = get_zoo()
    names = args.names or sorted(zoo)
    unknown = [n for n in names if n not in zoo]
    if unknown:
        options = ", ".join(sorted(ZOO_PARAMS))
        print(f"unknown algebra(s): {', '.join(unknown)} "
              f"(choose from {options})", file=sys.stderr)
        return 2

    header = (f"{'name':<14} {'k0':>2} {'l0':>2} {'m':>2} {'dim':>3} "
              f"{'Z1':>3} {'B1':>3} {'H1':>3} {'inv2':>4}  degeneracy")
    print(header)
    print("-" * len(header))
    for name in names:
        row = describe(name, zoo[name])
        print(f"{row['name']:<14} {row['k0']:>2} {row['l0']:>2} "
              f"{row['m']:>2} {row['dim']:>3} {row['cocycles']:>3} "
              f"{row['coboundaries']:>3} {row['h1']:>3} "
              f"{row['invariants']:>4}  {row['degeneracy']}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
