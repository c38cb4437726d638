#!/usr/bin/env python3
"""Census of the nine-parameter sign grid on the dim-4 algebra.

Sweeps all 3^9 parameter points, compares the dual-Jacobi verdict with the
tabulated conditions and with the corrected gate, and prints the counts.
The 3^6 bivector grid is classified against the two candidate triangular
spans as well. Useful when poking at where the tabulated conditions and
the actual verdict part ways.
"""

import argparse
import json
import sys
from fractions import Fraction
from itertools import product

from flatbialg.exteralg import Multivector, basis_keys
from flatbialg.bialgebra import cybe_classify
from flatbialg.verify import _dim4_grid_results, fmt_mv
from flatbialg.zoo import (
    DIM4_PARAM_NAMES,
    dim4_jacobi_predicate,
    dim4_tabulated_predicate,
    get_zoo,
)


def jacobi_census(g):
    grid = _dim4_grid_results(g)
    counts = {"points": len(grid), "bialgebras": 0,
              "tabulated_false_pass": 0, "tabulated_false_fail": 0,
              "corrected_mismatch": 0}
    examples = {}
    for point in sorted(grid):
        params = dict(zip(DIM4_PARAM_NAMES, point))
        actual = grid[point]
        counts["bialgebras"] += actual
        tab = dim4_tabulated_predicate(params)
        if tab and not actual:
            counts["tabulated_false_pass"] += 1
            examples.setdefault("tabulated_false_pass", params)
        elif actual and not tab:
            counts["tabulated_false_fail"] += 1
            examples.setdefault("tabulated_false_fail", params)
        if actual != dim4_jacobi_predicate(params):
            counts["corrected_mismatch"] += 1
            examples.setdefault("corrected_mismatch", params)
    return counts, examples


def triangular_census(g):
    keys2 = basis_keys(4, 2)
    tab_span = {(0, 1), (1, 2), (1, 3)}
    cor_span = tab_span | {(2, 3)}
    counts = {"points": 0, "triangular": 0,
              "tabulated_span_mismatch": 0, "corrected_span_mismatch": 0}
    witness = None
    for point in product((-1, 0, 1), repeat=6):
        counts["points"] += 1
        coords = {k: Fraction(v) for k, v in zip(keys2, point) if v}
        r = Multivector(4, 2, coords)
        tri = cybe_classify(g, r).class_ == "triangular"
        counts["triangular"] += tri
        if tri != all(k in tab_span for k in coords):
            counts["tabulated_span_mismatch"] += 1
            if witness is None or len(coords) < len(witness.coords):
                witness = r
        if tri != all(k in cor_span for k in coords):
            counts["corrected_span_mismatch"] += 1
    return counts, witness


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true",
                        help="emit one JSON document instead of text")
    args = parser.parse_args(argv)

    g = get_zoo()["dim4"]
    jac, examples = jacobi_census(g)
    tri, witness = triangular_census(g)

    if args.json:
        doc = {"jacobi": jac, "triangular": tri,
               "examples": {k: {n: str(v) for n, v in p.items()}
                            for k, p in examples.items()}}
        if witness is not None:
            doc["triangular_witness"] = fmt_mv(g, witness)
        json.dump(doc, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
        return 0

    print(f"jacobi grid: {jac['points']} points, "
          f"{jac['bialgebras']} bialgebras")
    print(f"  tabulated conditions: {jac['tabulated_false_pass']} false "
          f"passes, {jac['tabulated_false_fail']} false fails")
    print(f"  corrected gate mismatches: {jac['corrected_mismatch']}")
    for kind, params in sorted(examples.items()):
        nz = ", ".join(f"{n}={v}" for n, v in params.items() if v)
        print(f"  first {kind}: {nz or 'all zero'}")
    print(f"bivector grid: {tri['points']} points, "
          f"{tri['triangular']} triangular")
    print(f"  tabulated span mismatches: {tri['tabulated_span_mismatch']}"
          + (f" (smallest witness r = {fmt_mv(g, witness)})"
             if witness is not None else ""))
    print(f"  corrected span mismatches: {tri['corrected_span_mismatch']}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
