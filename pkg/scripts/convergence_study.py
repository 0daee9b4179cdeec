"""Sup-norm distance of the scaled sequences from their sin^2 and sin(2 pi t) limits."""

import argparse

from zetalap import verify


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-values", default="2,5,10,20,40")
    ap.add_argument("--grid", type=int, default=201)
    args = ap.parse_args()
    ns = [int(x) for x in args.n_values.split(",")]
    print(f"{'n':>4} {'nu_scaled_sup':>14} {'chi_abs_sup':>12} {'chi_signed_sup':>15} {'nu_raw_sup':>11}")
    for row in verify.convergence_rows(ns, args.grid):
        print(f"{row.n:>4} {row.nu_sup:>14.3e} {row.chi_abs_sup:>12.3e} "
              f"{row.chi_signed_sup:>15.3e} {row.nu_raw_sup:>11.3e}")


if __name__ == "__main__":
    main()
