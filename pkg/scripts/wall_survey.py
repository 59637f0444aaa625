#!/usr/bin/env python3
"""Survey wall classes on elliptic K3 Neron-Severi lattices.

Fixes the fiber-degree bound a and sweeps the multisection degree d for a
given polarization degree e, reporting the wall count, the most negative
achievable norm, and whether a degree-(1, d) polarization is suitable.
Plain-text table on stdout.
"""

import argparse

from hkmod.walls import (
    EllipticNS,
    enumerate_wall_classes,
    is_suitable,
    min_negative_norm,
    no_wall_threshold,
)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--e", type=int, default=2, help="even polarization degree q(h)")
    ap.add_argument("--a", type=int, default=12, help="bound on |norm| of wall classes")
    ap.add_argument("--d-max", type=int, default=40, help="largest fiber pairing d")
    args = ap.parse_args()
    if args.e < 2 or args.e % 2:
        ap.error("--e must be a positive even integer")
    if args.a < 1 or args.d_max < 1:
        ap.error("--a and --d-max must be positive")

    threshold = no_wall_threshold(args.e, args.a)
    print(f"e = {args.e}, a = {args.a}: walls vanish for d >= {threshold}")
    print(f"{'d':>5} {'walls':>6} {'min_norm':>9} {'suitable':>9} {'generic':>8}")
    for d in range(1, args.d_max + 1):
        ns = EllipticNS(args.e, d)
        walls = enumerate_wall_classes(ns, args.a)
        rep = is_suitable(ns, args.a)
        print(
            f"{d:>5} {len(walls):>6} {-min_negative_norm(ns):>9} "
            f"{str(rep.suitable):>9} {str(rep.generic):>8}"
        )


if __name__ == "__main__":
    main()
