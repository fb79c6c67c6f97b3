#!/usr/bin/env python3
"""Cross-check the closed-form resolvent against the integrated Green function
along a diagonal slice and report the discrepancy profile.

Usage: python scripts/resolvent_profiles.py [mu nu zeta_re zeta_im]
"""

import sys

from halfscatter import ModelParams, SpectralPoint, greens_function_oracle, resolvent_kernel


def main() -> int:
    mu = float(sys.argv[1]) if len(sys.argv) > 1 else 1.0
    nu = float(sys.argv[2]) if len(sys.argv) > 2 else 2.0
    zre = float(sys.argv[3]) if len(sys.argv) > 3 else 1.5
    zim = float(sys.argv[4]) if len(sys.argv) > 4 else 0.5
    p = ModelParams(mu, nu)
    pt = SpectralPoint.interior(complex(zre, zim))
    print(f"(mu,nu)=({mu:g},{nu:g}), zeta={zre:g}{zim:+g}i")
    print(f"{'x':>6} {'y':>6} {'|R| closed':>14} {'rel dev vs oracle':>18}")
    worst = 0.0
    for x in (0.3, 0.8, 1.5, 3.0):
        for y in (x, x + 1.0):
            closed = resolvent_kernel(p, pt, x, y)
            orc = greens_function_oracle(p, pt, x, y)
            dev = abs(closed - orc) / abs(closed)
            worst = max(worst, dev)
            print(f"{x:6.2f} {y:6.2f} {abs(closed):14.6e} {dev:18.3e}")
    print(f"\nworst relative deviation: {worst:.3e}")
    return 0 if worst < 1e-6 else 1


if __name__ == "__main__":
    sys.exit(main())
