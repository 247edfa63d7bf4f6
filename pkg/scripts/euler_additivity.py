"""chi_top(X) from the Chow ring vs. the block count of the decomposition.

Prints one line per host where the two sides differ (there should be none),
then a histogram of chi(X) - chi(Y) by block count.
"""

import argparse
from collections import Counter

from fanohost import cayley_builder as cb
from fanohost.errors import UnsupportedConstruction
from fanohost.sod_ledger import euler_consistency, sod_of_host
from fanohost.sweep import SweepConfig


def hosts(cfg, extra_r):
    for ci in cfg.instances():
        for r in range(1, cb.minimal_r(ci) + extra_r + 1):
            yield cb.build_general_host(ci, r)
        try:
            yield cb.build_cy_host(ci)
        except UnsupportedConstruction:
            pass


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--nmax", type=int, default=6)
    ap.add_argument("--cmax", type=int, default=3)
    ap.add_argument("--dmax", type=int, default=6)
    ap.add_argument("--extra-r", type=int, default=3)
    args = ap.parse_args()

    seen, failed = 0, 0
    by_blocks = Counter()
    for host in hosts(SweepConfig(args.nmax, args.cmax, args.dmax), args.extra_r):
        e = euler_consistency(host)
        seen += 1
        if not e.passed:
            failed += 1
            print(f"MISMATCH {host.visitor} {host.kind.value} r={host.r}: {e.lhs} != {e.rhs}")
        by_blocks[sod_of_host(host).exceptional_count] += 1
    print(f"{seen} bundle hosts, {failed} mismatches")
    print("exceptional objects -> number of hosts")
    for k in sorted(by_blocks):
        print(f"  {k:>4}  {by_blocks[k]}")


if __name__ == "__main__":
    main()
