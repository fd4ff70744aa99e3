"""Fourier-transform approximation from uniform samples, and error sweeps.

The forward transform uses the weights at the negated frequency (the forward
kernel is e^{-2 pi i omega x}); the inverse swaps the roles of frequency and
evaluation point, so the weight frequency parameter is the output abscissa.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grid import SampledFunction, UniformGrid
from .quadrature import coefficient_matrix, monomial_fourier_integral


@dataclass(frozen=True)
class SpectrumSamples:
    """Approximate Fourier transform values on a set of frequencies."""

    omegas: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        omegas = np.asarray(self.omegas, dtype=float)
        values = np.asarray(self.values, dtype=complex)
        if omegas.shape != values.shape or omegas.ndim != 1:
            raise ValueError("frequency and value arrays must be 1-d and equal length")
        if omegas.size > 1 and not np.all(np.diff(omegas) > 0):
            raise ValueError("frequencies must be strictly increasing")
        object.__setattr__(self, "omegas", omegas)
        object.__setattr__(self, "values", values)


@dataclass(frozen=True)
class QuadratureErrorRecord:
    """Quadrature error for a truncated monomial at one frequency."""

    alpha: int
    omega: float
    a: float
    b: float
    h: float
    error: complex

    @property
    def abs_real_error(self) -> float:
        return abs(self.error.real)

    @property
    def abs_imag_error(self) -> float:
        return abs(self.error.imag)


def forward_transform(samples: SampledFunction, omegas) -> SpectrumSamples:
    """Approximate F(omega) = int e^{-2 pi i omega x} f(x) dx from samples.

    The function is taken to vanish outside the sample interval.
    """
    omegas = np.asarray(omegas, dtype=float)
    weights = coefficient_matrix(samples.grid, -omegas)
    return SpectrumSamples(omegas, weights @ samples.values)


def inverse_transform(spectrum: SampledFunction, xs) -> np.ndarray:
    """Approximate f(x) = int e^{2 pi i omega x} F(omega) d omega from spectrum samples.

    The spectrum lives on a uniform frequency grid; the integral is truncated
    to that grid's interval.  Returns the reconstruction at each x.
    """
    xs = np.asarray(xs, dtype=float)
    weights = coefficient_matrix(spectrum.grid, xs)
    return weights @ spectrum.values


def truncated_monomial_samples(alpha: int, grid: UniformGrid) -> np.ndarray:
    """Samples of x^alpha restricted to the closed interval [-1, 1], zero outside."""
    xs = grid.nodes()
    inside = (xs >= -1.0) & (xs <= 1.0)
    return np.where(inside, xs**alpha, 0.0).astype(complex)


def quadrature_error_monomial(
    alpha: int, omega: float, interval: tuple[float, float], n: int
) -> QuadratureErrorRecord:
    """Quadrature error for the monomial x^alpha truncated to [-1, 1].

    The exact value is the monomial's Fourier integral over [-1, 1]; the
    quadrature runs over the (possibly wider) given interval with the
    truncated integrand sampled at its nodes.
    """
    if alpha not in (0, 1, 2):
        raise ValueError(f"monomial degree must be 0, 1 or 2, got {alpha}")
    a, b = interval
    if a > -1.0 or b < 1.0:
        raise ValueError(f"interval [{a}, {b}] must contain [-1, 1]")
    grid = UniformGrid(a, b, n)
    exact = monomial_fourier_integral(alpha, omega, -1.0, 1.0).value
    weights = coefficient_matrix(grid, [float(omega)])[0]
    approx = np.dot(weights, truncated_monomial_samples(alpha, grid))
    return QuadratureErrorRecord(alpha, float(omega), a, b, grid.h, complex(exact - approx))


def error_sweep(
    alpha: int,
    interval: tuple[float, float],
    n: int,
    omega_min: float,
    omega_max: float,
    omega_count: int,
) -> list[QuadratureErrorRecord]:
    """Quadrature errors on an equispaced frequency lattice (endpoints included)."""
    if omega_count < 2:
        raise ValueError(f"need at least 2 lattice points, got {omega_count}")
    a, b = interval
    if a > -1.0 or b < 1.0:
        raise ValueError(f"interval [{a}, {b}] must contain [-1, 1]")
    grid = UniformGrid(a, b, n)
    omegas = np.linspace(omega_min, omega_max, omega_count)
    samples = truncated_monomial_samples(alpha, grid)
    weights = coefficient_matrix(grid, omegas)
    approx = weights @ samples
    exact = np.array(
        [monomial_fourier_integral(alpha, om, -1.0, 1.0).value for om in omegas]
    )
    errors = exact - approx
    return [
        QuadratureErrorRecord(alpha, float(om), a, b, grid.h, complex(err))
        for om, err in zip(omegas, errors)
    ]
