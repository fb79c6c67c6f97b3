#!/usr/bin/env python3
"""Sweep the scattering phase for a few parameter pairs and write CSV files.

Each output row is k, Re sigma, Im sigma, unwrapped phase; the phase anchor is
the principal argument at the smallest k, so the zero-energy case value
(+1 or -1) is visible at the left edge of each sweep.

Usage: python scripts/sigma_phase_portrait.py [outdir]
"""

import sys
from pathlib import Path

import numpy as np

from halfscatter import ModelParams, sigma_samples


PAIRS = [(0.5, 0.5), (0.0, 3.0), (0.0, 2.5), (1.0, 4.0), (2.0, 0.0), (0.0, 5.0)]


def main() -> int:
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("sigma_sweeps")
    outdir.mkdir(parents=True, exist_ok=True)
    k_grid = np.concatenate([np.geomspace(1e-3, 1.0, 120), np.linspace(1.0, 30.0, 300)[1:]])
    for mu, nu in PAIRS:
        samples = sigma_samples(ModelParams(mu, nu), k_grid)
        path = outdir / f"sigma_mu{mu:g}_nu{nu:g}.csv"
        with path.open("w", encoding="utf-8", newline="") as fh:
            fh.write("k,sigma_re,sigma_im,phase\r\n")
            for s in samples:
                fh.write(f"{s.k:.17g},{s.sigma.real:.17g},{s.sigma.imag:.17g},{s.phase:.17g}\r\n")
        total = samples[-1].phase - samples[0].phase
        print(f"(mu,nu)=({mu:g},{nu:g}): phase change {total:+.4f} rad over the sweep -> {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
