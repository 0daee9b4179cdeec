"""Sweep G over an interval and compare the minima with a published zero list."""

import argparse
import time

from zetalap.zeros import SweepConfig, cross_check, read_zeros_file, sweep


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--from", dest="t_from", type=float, default=0.0)
    ap.add_argument("--to", dest="t_to", type=float, default=100.0)
    ap.add_argument("--workers", type=int, default=4)
    ap.add_argument("--zeros-file", default="tests/data/zeros_100.txt")
    args = ap.parse_args()
    t0 = time.perf_counter()
    res = sweep(SweepConfig(args.t_from, args.t_to, workers=args.workers))
    elapsed = time.perf_counter() - t0
    matches = cross_check(res.minima, read_zeros_file(args.zeros_file))
    worst = max((m.diff for m in matches), default=float("nan"))
    print(f"{len(res.minima)} minima, {len(res.maxima)} maxima, alternating={res.alternates()}")
    print(f"excluded bands: {res.excluded}")
    print(f"worst distance to published ordinates: {worst:.2e}")
    print(f"elapsed {elapsed:.2f}s with {args.workers} workers")


if __name__ == "__main__":
    main()
