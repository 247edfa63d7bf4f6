"""Table of Fano-dimension upper bounds, optionally in parallel.

    python scripts/fano_dimension_table.py --nmax 6 --cmax 3 --dmax 5 --jobs 4
    python scripts/fano_dimension_table.py --cy-only
"""

import argparse
from concurrent.futures import ProcessPoolExecutor

from fanohost.ci_invariants import is_calabi_yau
from fanohost.cli import _row_text, bound_row
from fanohost.sweep import SweepConfig


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--nmax", type=int, default=6)
    ap.add_argument("--cmax", type=int, default=3)
    ap.add_argument("--dmax", type=int, default=5)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--cy-only", action="store_true")
    args = ap.parse_args()

    cis = list(SweepConfig(args.nmax, args.cmax, args.dmax).instances())
    if args.cy_only:
        cis = [ci for ci in cis if is_calabi_yau(ci)]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(bound_row, cis, chunksize=8))
    else:
        rows = [bound_row(ci) for ci in cis]

    for row in rows:
        print(_row_text(row))
    gap = [r["bound"] - r["dim"] for r in rows]
    print(f"\n{len(rows)} varieties; bound - dim Y ranges over [{min(gap)}, {max(gap)}]")


if __name__ == "__main__":
    main()
