"""Compare the closed-form inequality against toric curve degrees over a sweep.

    python scripts/sweep_certificates.py --nmax 8 --cmax 4 --dmax 8 --extra-r 3
"""

import argparse
import time

from fanohost import cayley_builder as cb
from fanohost.sweep import SweepConfig


def run(cfg: SweepConfig, extra_r: int):
    cases, disagreements, fano = 0, [], 0
    for ci in cfg.instances():
        for r in range(1, cb.minimal_r(ci) + extra_r + 1):
            host = cb.build_general_host(ci, r)
            cases += 1
            fano += host.fano
            if cb.inequality_test(ci, r) != host.fano:
                disagreements.append((str(ci), r, host.curve_degrees))
    return cases, fano, disagreements


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--nmax", type=int, default=8)
    ap.add_argument("--cmax", type=int, default=4)
    ap.add_argument("--dmax", type=int, default=8)
    ap.add_argument("--extra-r", type=int, default=3)
    args = ap.parse_args()
    cfg = SweepConfig(args.nmax, args.cmax, args.dmax)

    t0 = time.perf_counter()
    cases, fano, bad = run(cfg, args.extra_r)
    dt = time.perf_counter() - t0
    print(f"{len(cfg)} complete intersections, {cases} (Y, r) cases, {fano} Fano hosts")
    print(f"disagreements: {len(bad)}   [{dt:.2f}s]")
    for row in bad[:20]:
        print("  ", row)


if __name__ == "__main__":
    main()
