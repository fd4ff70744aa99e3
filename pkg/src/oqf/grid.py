"""Uniform grids and sampled functions shared by all modules."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class UniformGrid:
    """An interval [a, b] with n+1 equispaced nodes.

    The step h = (b - a)/n is always derived from the triple (a, b, n);
    it is never stored independently.
    """

    a: float
    b: float
    n: int

    def __post_init__(self):
        if not self.b > self.a:
            raise ValueError(f"interval end must exceed start: a={self.a}, b={self.b}")
        if self.n < 1:
            raise ValueError(f"need at least one subinterval, got n={self.n}")

    @property
    def h(self) -> float:
        return (self.b - self.a) / self.n

    def node(self, beta: int) -> float:
        return self.a + self.h * beta

    def nodes(self) -> np.ndarray:
        return self.a + self.h * np.arange(self.n + 1)


@dataclass(frozen=True)
class SampledFunction:
    """Complex values of a function on the nodes of a UniformGrid."""

    grid: UniformGrid
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=complex)
        if vals.shape != (self.grid.n + 1,):
            raise ValueError(
                f"expected {self.grid.n + 1} samples, got shape {vals.shape}"
            )
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_callable(cls, grid: UniformGrid, func) -> "SampledFunction":
        return cls(grid, np.asarray([func(x) for x in grid.nodes()], dtype=complex))
