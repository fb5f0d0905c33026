#!/usr/bin/env python3
"""Time the two splitting routes cell by cell and report the slowest.

Useful when tuning the section solver: the grid budget is dominated by
a handful of large-|d| high-order cells, and this shows where.
"""

from __future__ import annotations

import argparse
import sys
import time

from jetbundles import Side, birkhoff_factorize, build_matrix, splitting_from_h0


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--kmax", type=int, default=6)
    parser.add_argument("--dmin", type=int, default=-6)
    parser.add_argument("--dmax", type=int, default=6)
    parser.add_argument("--top", type=int, default=10, help="slowest cells to list")
    args = parser.parse_args(argv)

    timings: list[tuple[float, float, str]] = []
    total0 = time.monotonic()
    for k in range(1, args.kmax + 1):
        for d in range(args.dmin, args.dmax + 1):
            for side in (Side.LEFT, Side.RIGHT):
                m = build_matrix(k, d, side)
                t0 = time.monotonic()
                profile_split = splitting_from_h0(m)
                t1 = time.monotonic()
                witness = birkhoff_factorize(m)
                t2 = time.monotonic()
                if witness.splitting() != profile_split:
                    raise RuntimeError(f"route disagreement at k={k} d={d} {side}")
                timings.append(
                    (t1 - t0, t2 - t1, f"k={k} d={d:+d} {side.value}")
                )
    total = time.monotonic() - total0

    timings.sort(key=lambda row: row[0] + row[1], reverse=True)
    print(f"{len(timings)} cells in {total:.2f}s "
          f"(profile {sum(a for a, _, _ in timings):.2f}s, "
          f"witness {sum(b for _, b, _ in timings):.2f}s)")
    print(f"{'cell':20s} {'profile':>9s} {'witness':>9s}")
    for prof, wit, label in timings[: args.top]:
        print(f"{label:20s} {prof * 1000:8.1f}ms {wit * 1000:8.1f}ms")
    return 0


if __name__ == "__main__":
    sys.exit(main())
