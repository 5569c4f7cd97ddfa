#!/usr/bin/env python
"""Show how the capacity bracket tightens as the computation size grows."""

import argparse
import pathlib
import time

from ftcs2d import build, capacity_estimate
from ftcs2d.fileformat import parse_system

DEFAULT_SYSTEM = pathlib.Path(__file__).resolve().parent.parent / "data" / "hard_square.txt"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("system", nargs="?", default=str(DEFAULT_SYSTEM))
    ap.add_argument("--min-size", type=int, default=3)
    ap.add_argument("--max-size", type=int, default=9)
    args = ap.parse_args()

    cs = parse_system(pathlib.Path(args.system).read_text())
    g = build(cs)
    print(f"{'size':>4}  {'lower':>10}  {'point':>10}  {'upper':>10}  {'gap':>10}  {'time':>7}")
    for size in range(args.min_size, args.max_size + 1):
        start = time.perf_counter()
        est = capacity_estimate(g, size, size)
        elapsed = time.perf_counter() - start
        print(
            f"{size:>4}  {est.lower:>10.6f}  {est.point:>10.6f}  {est.upper:>10.6f}"
            f"  {est.upper - est.lower:>10.6f}  {elapsed:>6.2f}s"
        )


if __name__ == "__main__":
    main()
