#!/usr/bin/env python3
"""Verify the winding index identity over a parameter grid and print a table.

Usage: python scripts/index_sweep.py [mu_max nu_max step]
"""

import sys

import numpy as np

from halfscatter import ModelParams, classify_beta, verify_index


def main() -> int:
    mu_max = float(sys.argv[1]) if len(sys.argv) > 1 else 2.0
    nu_max = float(sys.argv[2]) if len(sys.argv) > 2 else 5.0
    step = float(sys.argv[3]) if len(sys.argv) > 3 else 0.5
    print(f"{'mu':>6} {'nu':>6} {'beta class':>24} {'closed':>8} {'numeric':>12} {'count':>6} ok")
    failures = 0
    for mu in np.arange(0.0, mu_max + 1e-12, step):
        for nu in np.arange(0.0, nu_max + 1e-12, step):
            p = ModelParams(float(mu), float(nu))
            rep = verify_index(p)
            ok = "yes" if rep.passed else "NO"
            failures += not rep.passed
            print(
                f"{mu:6.2f} {nu:6.2f} {str(classify_beta(p)):>24} "
                f"{rep.winding_closed:8.2f} {rep.winding_numeric:12.8f} {rep.bound_count:6d} {ok}"
            )
    print(f"\n{failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
