"""Closed-form optimal quadrature weights for Fourier integrals on uniform grids.

The weights minimize the worst-case error over the unit ball of the Sobolev
seminorm (L2 norm of the first derivative) with nodes fixed.  The kernel is
e^{2 pi i omega x} with omega in cycles per unit.  Everything here is a pure
function of its arguments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .grid import SampledFunction, UniformGrid

TWO_PI = 2.0 * math.pi

# Below this |2 pi omega h| the closed forms are evaluated by truncated
# series; cancellation in the direct expressions (numerators ~ theta^2)
# would otherwise lose about half the significant digits.  The series
# degrees are chosen so truncation stays below 1e-17 at the threshold.
SMALL_THETA = 0.5

# (e^z - 1 - z)/z^2 = sum_k z^k/(k+2)!          (z = i theta)
_LEFT_SERIES = np.array([1.0 / math.factorial(k + 2) for k in range(17)], dtype=complex)
# 2(1 - cos t)/t^2 = sum_m 2(-1)^m t^{2m}/(2m+2)!
_INTERIOR_SERIES = np.array(
    [2.0 * (-1.0) ** m / math.factorial(2 * m + 2) for m in range(10)]
)
# (1 - 2(1 - cos t)/t^2)/t^2 = sum_m 2(-1)^m t^{2m}/(2m+4)!
_NORM_SERIES = np.array(
    [2.0 * (-1.0) ** m / math.factorial(2 * m + 4) for m in range(10)]
)


def _polyval_ascending(coeffs, x):
    result = np.zeros_like(x) * coeffs[0]
    for c in coeffs[::-1]:
        result = result * x + c
    return result


@dataclass(frozen=True)
class OptimalCoefficients:
    """The n+1 complex quadrature weights for a (grid, frequency) pair."""

    grid: UniformGrid
    omega: float
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=complex)
        if vals.shape != (self.grid.n + 1,):
            raise ValueError(
                f"expected {self.grid.n + 1} weights, got shape {vals.shape}"
            )
        object.__setattr__(self, "values", vals)


@dataclass(frozen=True)
class ErrorNormReport:
    """Worst-case error norm of the quadrature over the Sobolev unit ball."""

    omega: float
    h: float
    norm_sq: float

    @property
    def norm(self) -> float:
        return math.sqrt(self.norm_sq)


@dataclass(frozen=True)
class MonomialIntegral:
    """Exact Fourier integral of x^alpha over [a, b]."""

    alpha: int
    omega: float
    a: float
    b: float
    value: complex


def _interior_factor(theta):
    """2(1 - cos theta)/theta^2, stable near theta = 0.  Vectorized."""
    theta = np.asarray(theta, dtype=float)
    small = np.abs(theta) < SMALL_THETA
    series = _polyval_ascending(_INTERIOR_SERIES, theta * theta)
    with np.errstate(divide="ignore", invalid="ignore"):
        direct = 2.0 * (1.0 - np.cos(theta)) / (theta * theta)
    return np.where(small, series, direct)


def _left_factor(theta):
    """(1 + i theta - e^{i theta})/theta^2, stable near theta = 0.  Vectorized.

    Equals (e^z - 1 - z)/z^2 with z = i theta.
    """
    theta = np.asarray(theta, dtype=float)
    small = np.abs(theta) < SMALL_THETA
    series = _polyval_ascending(_LEFT_SERIES, 1j * theta)
    theta_safe = np.where(small, 1.0, theta)
    direct = (1.0 + 1j * theta_safe - np.exp(1j * theta_safe)) / (theta_safe * theta_safe)
    return np.where(small, series, direct)


def _trapezoid_weights(grid: UniformGrid) -> np.ndarray:
    w = np.full(grid.n + 1, grid.h, dtype=complex)
    w[0] = w[-1] = grid.h / 2.0
    return w


def coefficient_matrix(grid: UniformGrid, omegas) -> np.ndarray:
    """Optimal weights for many frequencies at once.

    Returns an array of shape (len(omegas), n+1); row k holds the weights
    for frequency omegas[k] on the given grid.
    """
    omegas = np.atleast_1d(np.asarray(omegas, dtype=float))
    h = grid.h
    theta = TWO_PI * omegas * h

    interior = _interior_factor(theta).astype(complex)
    left = _left_factor(theta)
    right = np.conj(left)

    phases = np.exp(2j * math.pi * np.outer(omegas, grid.nodes()))
    factors = np.empty((omegas.size, grid.n + 1), dtype=complex)
    factors[:, 1:-1] = interior[:, None] if grid.n > 1 else 0.0
    factors[:, 0] = left
    factors[:, -1] = right
    out = h * factors * phases

    # Exact omega == 0 falls back to the trapezoid weights; the series
    # branch above makes the two agree to machine precision nearby.
    zero = omegas == 0.0
    if np.any(zero):
        out[zero, :] = _trapezoid_weights(grid)
    return out


def optimal_coefficients(grid: UniformGrid, omega: float) -> OptimalCoefficients:
    """Weights of the optimal quadrature for int_a^b e^{2 pi i omega x} phi(x) dx."""
    values = coefficient_matrix(grid, [float(omega)])[0]
    return OptimalCoefficients(grid, float(omega), values)


def cosine_coefficients(grid: UniformGrid, omega: float) -> np.ndarray:
    """Real parts of the optimal weights (cosine-kernel quadrature)."""
    return coefficient_matrix(grid, [float(omega)])[0].real.copy()


def sine_coefficients(grid: UniformGrid, omega: float) -> np.ndarray:
    """Imaginary parts of the optimal weights (sine-kernel quadrature)."""
    return coefficient_matrix(grid, [float(omega)])[0].imag.copy()


def error_norm(omega: float, h: float) -> ErrorNormReport:
    """Squared worst-case error of the optimal weights at (omega, h)."""
    if not h > 0:
        raise ValueError(f"step must be positive, got h={h}")
    omega = float(omega)
    if omega == 0.0:
        return ErrorNormReport(omega, h, h * h / 12.0)
    theta = TWO_PI * omega * h
    if abs(theta) < SMALL_THETA:
        norm_sq = h * h * float(_polyval_ascending(_NORM_SERIES, np.float64(theta * theta)))
    else:
        norm_sq = (1.0 - float(_interior_factor(theta))) / (TWO_PI * omega) ** 2
    return ErrorNormReport(omega, h, norm_sq)


def apply_quadrature(coeffs: OptimalCoefficients, samples: SampledFunction) -> complex:
    """Quadrature sum approximating int_a^b e^{2 pi i omega x} phi(x) dx."""
    if coeffs.grid != samples.grid:
        raise ValueError("coefficient grid and sample grid differ")
    return complex(np.dot(coeffs.values, samples.values))


def _monomial_series(alpha: int, z: complex, a: float, length: float) -> complex:
    """g via e^{za} * sum_j binom(alpha,j) a^(alpha-j) int_0^L u^j e^{zu} du.

    int_0^L u^j e^{zu} du = sum_k z^k L^{j+k+1} / (k! (j+k+1)); converges
    rapidly for |zL| <= 0.5.
    """
    zl = z * length
    total = 0.0 + 0.0j
    for j in range(alpha + 1):
        term = 1.0 + 0.0j  # z^k L^k / k!
        inner = 0.0 + 0.0j
        k = 0
        while True:
            contrib = term / (j + k + 1)
            inner += contrib
            if abs(contrib) < 1e-18 * max(1.0, abs(inner)) and k > 2:
                break
            k += 1
            term *= zl / k
        inner *= length ** (j + 1)
        total += math.comb(alpha, j) * a ** (alpha - j) * inner
    return np.exp(z * a) * total


def monomial_fourier_integral(alpha: int, omega: float, a: float, b: float) -> MonomialIntegral:
    """Closed-form int_a^b e^{2 pi i omega x} x^alpha dx."""
    if alpha < 0:
        raise ValueError(f"monomial degree must be nonnegative, got {alpha}")
    if not b > a:
        raise ValueError(f"interval end must exceed start: a={a}, b={b}")
    omega = float(omega)
    if omega == 0.0:
        value = (b ** (alpha + 1) - a ** (alpha + 1)) / (alpha + 1)
        return MonomialIntegral(alpha, omega, a, b, complex(value))

    z = 2j * math.pi * omega
    if abs(z) * (b - a) <= 0.5:
        value = _monomial_series(alpha, z, a, b - a)
        return MonomialIntegral(alpha, omega, a, b, value)

    # S(x) = sum_{k=0}^{alpha} (-1)^k alpha! / ((alpha-k)! z^{k+1}) x^{alpha-k},
    # evaluated by Horner from the innermost (k = alpha - 1) term down to
    # limit cancellation; then g = e^{zb} S(b) - e^{za} S(a).
    coeffs = np.empty(alpha + 1, dtype=complex)  # by descending power of x
    c = 1.0 / z
    for k in range(alpha + 1):
        coeffs[k] = c
        c *= -(alpha - k) / z
    s_b = np.polynomial.polynomial.polyval(b, coeffs[::-1])
    s_a = np.polynomial.polynomial.polyval(a, coeffs[::-1])
    value = np.exp(z * b) * s_b - np.exp(z * a) * s_a
    return MonomialIntegral(alpha, omega, a, b, complex(value))
