#!/usr/bin/env python3
"""Forward/inverse transform round trips for the box function and
phi(x) = 1/(1+x^2) over a ladder of integration intervals.  Prints the
max reconstruction error per interval and writes the reconstructions."""

import argparse
from pathlib import Path

import numpy as np

from oqf.grid import SampledFunction, UniformGrid
from oqf.io import write_complex_csv
from oqf.transform import forward_transform, inverse_transform


def reconstruct(func, a, b, h, tau, xs):
    grid = UniformGrid(a, b, round((b - a) / h))
    samples = SampledFunction(grid, func(grid.nodes()).astype(complex))
    omega_grid = UniformGrid(a, b, round((b - a) / tau))
    spectrum = forward_transform(samples, omega_grid.nodes())
    return inverse_transform(SampledFunction(omega_grid, spectrum.values), xs)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", default="recon1d")
    parser.add_argument("--h", type=float, default=0.1)
    parser.add_argument("--tau", type=float, default=0.01)
    args = parser.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    functions = {
        "box": lambda x: np.where(np.abs(x) <= 1.0, 1.0, 0.0),
        "phi": lambda x: 1.0 / (1.0 + x * x),
    }
    # multiples of the sample step: off-lattice points next to the box
    # jump would otherwise be dominated by ringing
    xs = np.linspace(-2.0, 2.0, 41)
    for name, func in functions.items():
        for half in (1.0, 5.0, 25.0):
            recon = reconstruct(func, -half, half, args.h, args.tau, xs)
            err = np.abs(recon - func(xs)).max()
            out = outdir / f"{name}_half{half:g}.csv"
            write_complex_csv(out, "x", xs, recon)
            print(f"{name} on [-{half:g}, {half:g}]: max |err| = {err:.4e} -> {out}")


if __name__ == "__main__":
    main()
