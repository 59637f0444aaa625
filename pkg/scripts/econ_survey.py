#!/usr/bin/env python3
"""Survey the slope-congruence condition over a grid of ranks and degrees.

For each rank r0 up to --r0-max, lists the polarization degrees e up to
--e-max that pass the degree-type and congruence gates, together with the
twist degree m0 and slope s0 for each sign choice. Plain-text table on
stdout; use --first-only to keep one row per rank.
"""

import argparse

from hkmod.hilb2 import divisibility_type, econ_check, governing_divisibility, m0_s0


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--r0-max", type=int, default=8, help="largest rank to survey")
    ap.add_argument("--e-max", type=int, default=200, help="largest degree to survey")
    ap.add_argument(
        "--first-only",
        action="store_true",
        help="print only the smallest admissible degree per rank",
    )
    args = ap.parse_args()
    if args.r0_max < 1 or args.e_max < 1:
        ap.error("--r0-max and --e-max must be positive")

    print(f"{'r0':>4} {'i':>3} {'e':>6} {'m0+':>8} {'s0+':>6} {'m0-':>8} {'s0-':>6}")
    for r0 in range(1, args.r0_max + 1):
        i = governing_divisibility(r0)
        hits = 0
        for e in range(1, args.e_max + 1):
            if not (divisibility_type(e, i) and econ_check(r0, e)):
                continue
            mp, sp = m0_s0(r0, e, sign="+")
            mm, sm = m0_s0(r0, e, sign="-")
            print(f"{r0:>4} {i:>3} {e:>6} {mp:>8} {sp:>6} {mm:>8} {sm:>6}")
            hits += 1
            if args.first_only:
                break
        if hits == 0:
            print(f"{r0:>4} {i:>3} {'-':>6} {'-':>8} {'-':>6} {'-':>8} {'-':>6}")


if __name__ == "__main__":
    main()
