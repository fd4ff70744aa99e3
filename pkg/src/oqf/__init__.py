"""Optimal quadrature for Fourier integrals on uniform grids.

Closed-form Sard-optimal weights for int_a^b e^{2 pi i omega x} phi(x) dx
over the Sobolev class with square-integrable first derivative, an
independent dense-solve oracle, Fourier-transform approximation from
samples, and a CT filtered back-projection pipeline built on top.
"""

from .grid import SampledFunction, UniformGrid
from .quadrature import (
    ErrorNormReport,
    MonomialIntegral,
    OptimalCoefficients,
    apply_quadrature,
    coefficient_matrix,
    cosine_coefficients,
    error_norm,
    monomial_fourier_integral,
    optimal_coefficients,
    sine_coefficients,
)
from .transform import (
    QuadratureErrorRecord,
    SpectrumSamples,
    error_sweep,
    forward_transform,
    inverse_transform,
    quadrature_error_monomial,
)

__all__ = [
    "ErrorNormReport",
    "MonomialIntegral",
    "OptimalCoefficients",
    "QuadratureErrorRecord",
    "SampledFunction",
    "SpectrumSamples",
    "UniformGrid",
    "apply_quadrature",
    "coefficient_matrix",
    "cosine_coefficients",
    "error_norm",
    "error_sweep",
    "forward_transform",
    "inverse_transform",
    "monomial_fourier_integral",
    "optimal_coefficients",
    "quadrature_error_monomial",
    "sine_coefficients",
]

__version__ = "0.1.0"
