#!/usr/bin/env python3
"""Sweep the Schwarzschild factor for a chosen mass and write plot data.

Emits R, lambda, the coordinate light speed on a radial null ray, and the
clock-rate gamma, from just outside the Schwarzschild radius to far field.
"""

import argparse
import math

from lightclock import GravitySource, null_radial_speed, schwarzschild_lambda
from lightclock.cli import emit_plot_data


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--mass", type=float, default=5.972e24, help="kg (default: Earth)")
    ap.add_argument("--r-max-over-r0", type=float, default=1e6)
    ap.add_argument("--n", type=int, default=400)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    src = GravitySource(mass_M=args.mass)
    r0 = src.schwarzschild_r0
    rows = []
    # log-spaced: the interesting structure is near the surface
    for i in range(args.n):
        R = r0 * math.exp(
            math.log(1.000001) + i * (math.log(args.r_max_over_r0) - math.log(1.000001)) / (args.n - 1)
        )
        lam = schwarzschild_lambda(src, R)
        rows.append((R, lam, null_radial_speed(lam, src.c), math.sqrt(lam)))
    emit_plot_data(
        ("R_m", "lambda_dimensionless", "null_speed_m_per_s", "gamma_dimensionless"),
        rows,
        args.out,
    )


if __name__ == "__main__":
    main()
