#!/usr/bin/env python3
"""Sample the transition-zone machinery for a chosen width k.

Writes two CSV files: the bridge profile with its derivative on [-10k, 10k]
(junctions included exactly), and the photon-family fan of coordinate speeds
across the zone 0 < lambda <= 2k.
"""

import argparse

import numpy as np

from lightclock import photon_families, transition_profile, transition_profile_prime
from lightclock.cli import emit_plot_data


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=float, default=1e-3)
    ap.add_argument("--n", type=int, default=801)
    ap.add_argument("--c", type=float, default=1.0)
    ap.add_argument("--profile-out", default="bridge_profile.csv")
    ap.add_argument("--photons-out", default="photon_fan.csv")
    args = ap.parse_args()
    k = args.k

    grid = sorted({float(x) for x in np.linspace(-10 * k, 10 * k, args.n)} | {0.0, 2 * k})
    rows = [
        (x, transition_profile(x, k), transition_profile_prime(x, k)) for x in grid
    ]
    emit_plot_data(
        ("x_dimensionless", "H_dimensionless", "H_prime_dimensionless"),
        rows,
        args.profile_out,
    )

    fan = []
    for lam in np.linspace(1e-3 * k, 2 * k, args.n):
        plus, minus = photon_families(float(lam), k, args.c)
        fan.append((float(lam), plus, minus))
    emit_plot_data(
        ("lambda_dimensionless", "speed_plus_m_per_s", "speed_minus_m_per_s"),
        fan,
        args.photons_out,
    )
    print(f"wrote {args.profile_out} and {args.photons_out}")


if __name__ == "__main__":
    main()
