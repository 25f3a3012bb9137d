"""Tabulate the unit-disk radii against the single-bound baseline.

For each modulus bound M and order p the table lists the univalence and
schlicht radii next to the baseline pair and their gaps.  Every gap should
come out positive; the exit status says whether that held.
"""

import argparse
import sys

from polylandau import ModulusAll, modulus_radii, poly_modulus_baseline


def build_rows(ms, orders):
    rows = []
    for m in ms:
        for p in orders:
            res = modulus_radii(ModulusAll((m,) * p))
            rho_b, sigma_b = poly_modulus_baseline(m, p)
            rows.append((m, p, res.rho, res.sigma, rho_b, sigma_b, res.rho - rho_b, res.sigma - sigma_b))
    return rows


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--ms", type=float, nargs="+", default=[1.2, 2.0, 5.0], help="modulus bounds M > 1")
    parser.add_argument("--orders", type=int, nargs="+", default=[2, 3, 5], help="poly-analytic orders p")
    parser.add_argument("--digits", type=int, default=6)
    args = parser.parse_args(argv)

    rows = build_rows(args.ms, args.orders)
    d = args.digits
    header = f"{'M':>8} {'p':>3} {'rho':>{d + 6}} {'sigma':>{d + 6}} {'rho_base':>{d + 6}} {'sigma_base':>{d + 6}} {'drho':>{d + 6}} {'dsigma':>{d + 6}}"
    print(header)
    print("-" * len(header))
    for m, p, rho, sigma, rho_b, sigma_b, drho, dsigma in rows:
        print(
            f"{m:>8.3g} {p:>3d} {rho:>{d + 6}.{d}f} {sigma:>{d + 6}.{d}f}"
            f" {rho_b:>{d + 6}.{d}f} {sigma_b:>{d + 6}.{d}f} {drho:>{d + 6}.{d}f} {dsigma:>{d + 6}.{d}f}"
        )

    improved = all(row[6] > 0.0 and row[7] > 0.0 for row in rows)
    print(f"\nall gaps positive: {improved}")
    return 0 if improved else 1


if __name__ == "__main__":
    sys.exit(main())
