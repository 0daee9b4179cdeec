"""Print computed nu(2n), chi(2n) beside the published table values."""

import argparse

from zetalap import verify


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=7)
    args = ap.parse_args()
    print(f"{'check':<16} {'computed':>22} {'published':>22} {'rel_err':>9}  status")
    for r in verify.reproduce_table1(args.n_max):
        status = "PASS" if r.passed else "FAIL"
        print(f"{r.name:<16} {r.computed:>22.15g} {r.reference:>22.15g} {r.rel_err:>9.1e}  {status}")


if __name__ == "__main__":
    main()
