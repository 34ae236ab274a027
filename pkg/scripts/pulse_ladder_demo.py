#!/usr/bin/env python3
"""Print a radar pulse ladder and the Einstein measures it implies.

Successive pulses with immediate re-emission produce geometrically growing
counter readings; feeding consecutive pulse pairs through the count-diagram
formulas recovers the recession velocity c·tanh(omega/c) without ever using
medium time directly.
"""

import argparse
import math

from lightclock import (
    LightClockSpec,
    count_trace,
    einstein_from_count_diagram,
    rapidity_from_vE,
)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--v-over-c", type=float, default=1.0 / 7.0)
    ap.add_argument("--t1", type=float, default=1.0)
    ap.add_argument("--pulses", type=int, default=4)
    ap.add_argument("--L", type=float, default=1.0)
    args = ap.parse_args()

    c = 1.0
    spec = LightClockSpec(round_trip_length_L=args.L, light_speed_c=c)
    omega = rapidity_from_vE(args.v_over_c * c, c).omega
    rows = count_trace(spec, omega, args.t1, args.pulses)

    print(f"v_E/c = {args.v_over_c}   omega/c = {omega}")
    print(f"{'pulse':>5} {'tau1':>12} {'tau2':>12} {'tau3':>12}")
    for i, row in enumerate(rows, start=1):
        print(f"{i:>5} {row.tau1:>12.4f} {row.tau2:>12.4f} {row.tau3:>12.4f}")

    print("\nmeasures from consecutive pulse pairs:")
    for i in range(len(rows) - 1):
        a, b = rows[i], rows[i + 1]
        m = einstein_from_count_diagram(
            spec, (a.tau1, a.tau2, a.tau3), (b.tau1, b.tau2, b.tau3)
        )
        print(
            f"  pulses {i + 1},{i + 2}: t_E={m.t_E_counts:.4f} counts, "
            f"r_E={m.r_E_counts:.4f} length-counts, v_E/c={m.K:.10f}"
        )
    print(f"  exact tanh(omega/c) = {math.tanh(omega / c):.10f}")


if __name__ == "__main__":
    main()
