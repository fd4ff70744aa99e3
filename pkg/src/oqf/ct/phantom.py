"""Analytic ellipse phantoms: rasterization and exact Radon transform.

Both the high-contrast ("modified") and the classic low-contrast head
phantom tables are provided; the modified one is the default everywhere.
Projections are exact chord lengths, never raster sums.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class Ellipse:
    """One additive ellipse: center, semi-axes, rotation (degrees), intensity."""

    center_x: float
    center_y: float
    semi_a: float
    semi_b: float
    rotation_deg: float
    intensity: float


@dataclass(frozen=True)
class EllipsePhantom:
    """A sum of ellipses inside the unit disk, over the square [-1,1]^2."""

    ellipses: tuple[Ellipse, ...]

    def value_at(self, x: float, y: float) -> float:
        total = 0.0
        for e in self.ellipses:
            phi = math.radians(e.rotation_deg)
            dx, dy = x - e.center_x, y - e.center_y
            u = dx * math.cos(phi) + dy * math.sin(phi)
            v = -dx * math.sin(phi) + dy * math.cos(phi)
            if (u / e.semi_a) ** 2 + (v / e.semi_b) ** 2 <= 1.0:
                total += e.intensity
        return total


# Semi-axes / centers / rotations shared by both standard head phantom tables.
_GEOMETRY = [
    # (cx, cy, x_semi_axis, y_semi_axis, rotation_deg counterclockwise)
    (0.0, 0.0, 0.69, 0.92, 0.0),
    (0.0, -0.0184, 0.6624, 0.874, 0.0),
    (0.22, 0.0, 0.11, 0.31, -18.0),
    (-0.22, 0.0, 0.16, 0.41, 18.0),
    (0.0, 0.35, 0.21, 0.25, 0.0),
    (0.0, 0.1, 0.046, 0.046, 0.0),
    (0.0, -0.1, 0.046, 0.046, 0.0),
    (-0.08, -0.605, 0.046, 0.023, 0.0),
    (0.0, -0.605, 0.023, 0.023, 0.0),
    (0.06, -0.605, 0.023, 0.046, 0.0),
]

MODIFIED_INTENSITIES = (1.0, -0.8, -0.2, -0.2, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1)
CLASSIC_INTENSITIES = (2.0, -0.98, -0.02, -0.02, 0.01, 0.01, 0.01, 0.01, 0.01, 0.01)


def _build_phantom(intensities) -> EllipsePhantom:
    return EllipsePhantom(
        tuple(
            Ellipse(cx, cy, sa, sb, rot, inten)
            for (cx, cy, sa, sb, rot), inten in zip(_GEOMETRY, intensities)
        )
    )


def shepp_logan_phantom(variant: str = "modified") -> EllipsePhantom:
    """The ten-ellipse head phantom; variant 'modified' (default) or 'classic'."""
    if variant == "modified":
        return _build_phantom(MODIFIED_INTENSITIES)
    if variant == "classic":
        return _build_phantom(CLASSIC_INTENSITIES)
    raise ValueError(f"unknown phantom variant {variant!r}")


@dataclass(frozen=True)
class ImageGrid:
    """A square raster of real pixel values with physical extent.

    Row-major addressing pixel(i, j); row 0 holds the top of the image
    (largest y).  Extent is (min_x, min_y, max_x, max_y).
    """

    rows: int
    cols: int
    pixels: np.ndarray = field(repr=False)
    extent: tuple[float, float, float, float] = (-1.0, -1.0, 1.0, 1.0)

    def __post_init__(self):
        pix = np.asarray(self.pixels, dtype=float)
        if pix.shape != (self.rows, self.cols):
            raise ValueError(
                f"expected {self.rows}x{self.cols} pixels, got shape {pix.shape}"
            )
        object.__setattr__(self, "pixels", pix)

    def pixel_centers(self) -> tuple[np.ndarray, np.ndarray]:
        """Physical (x, y) coordinates of all pixel centers, as 2-d arrays."""
        min_x, min_y, max_x, max_y = self.extent
        dx = (max_x - min_x) / self.cols
        dy = (max_y - min_y) / self.rows
        xs = min_x + dx * (np.arange(self.cols) + 0.5)
        ys = max_y - dy * (np.arange(self.rows) + 0.5)
        return np.meshgrid(xs, ys)


def rasterize(phantom: EllipsePhantom, size: int) -> ImageGrid:
    """Rasterize the phantom on a size x size grid over [-1, 1]^2.

    Pixel value is the summed intensity of the ellipses containing the
    pixel center.
    """
    if size < 16:
        raise ValueError(f"raster size must be at least 16, got {size}")
    half = 1.0
    step = 2.0 * half / size
    xs = -half + step * (np.arange(size) + 0.5)
    ys = half - step * (np.arange(size) + 0.5)
    gx, gy = np.meshgrid(xs, ys)
    pixels = np.zeros((size, size))
    for e in phantom.ellipses:
        phi = math.radians(e.rotation_deg)
        dx, dy = gx - e.center_x, gy - e.center_y
        u = dx * math.cos(phi) + dy * math.sin(phi)
        v = -dx * math.sin(phi) + dy * math.cos(phi)
        pixels += e.intensity * (
            (u / e.semi_a) ** 2 + (v / e.semi_b) ** 2 <= 1.0
        )
    return ImageGrid(size, size, pixels)


def shepp_logan(size: int, variant: str = "modified") -> ImageGrid:
    """Rasterized head phantom on a size x size grid."""
    return rasterize(shepp_logan_phantom(variant), size)


@dataclass(frozen=True)
class Sinogram:
    """Projection data on an (angle x detector-bin) lattice, angle-major."""

    num_angles: int
    num_bins: int
    theta0: float
    dtheta: float
    t0: float
    dt: float
    data: np.ndarray = field(repr=False)

    def __post_init__(self):
        data = np.asarray(self.data, dtype=float)
        if data.shape != (self.num_angles, self.num_bins):
            raise ValueError(
                f"expected {self.num_angles}x{self.num_bins} data, got {data.shape}"
            )
        object.__setattr__(self, "data", data)

    def angles(self) -> np.ndarray:
        return self.theta0 + self.dtheta * np.arange(self.num_angles)

    def bins(self) -> np.ndarray:
        return self.t0 + self.dt * np.arange(self.num_bins)


def ellipse_projection(e: Ellipse, theta: np.ndarray, t: np.ndarray) -> np.ndarray:
    """Exact line integrals of one ellipse along x cos(theta) + y sin(theta) = t.

    theta and t broadcast against each other.
    """
    phi = math.radians(e.rotation_deg)
    # Offset of the line relative to the ellipse center.
    s = t - e.center_x * np.cos(theta) - e.center_y * np.sin(theta)
    gamma = theta - phi
    width_sq = (e.semi_a * np.cos(gamma)) ** 2 + (e.semi_b * np.sin(gamma)) ** 2
    inside = s * s < width_sq
    chord = np.where(
        inside,
        2.0 * e.intensity * e.semi_a * e.semi_b
        * np.sqrt(np.maximum(width_sq - s * s, 0.0)) / width_sq,
        0.0,
    )
    return chord


def radon_analytic(
    phantom: EllipsePhantom,
    num_angles: int,
    dtheta_deg: float = 0.5,
    num_bins: int = 729,
    t_range: tuple[float, float] = (-1.0, 1.0),
    theta0_deg: float = 0.0,
) -> Sinogram:
    """Exact sinogram of an ellipse phantom (closed-form chord lengths)."""
    if dtheta_deg <= 0:
        raise ValueError(f"angle step must be positive, got {dtheta_deg}")
    if num_angles < 1 or num_bins < 2:
        raise ValueError("need at least one angle and two detector bins")
    t_min, t_max = t_range
    dt = (t_max - t_min) / (num_bins - 1)
    thetas = np.radians(theta0_deg + dtheta_deg * np.arange(num_angles))
    ts = t_min + dt * np.arange(num_bins)
    data = np.zeros((num_angles, num_bins))
    for e in phantom.ellipses:
        data += ellipse_projection(e, thetas[:, None], ts[None, :])
    return Sinogram(
        num_angles=num_angles,
        num_bins=num_bins,
        theta0=math.radians(theta0_deg),
        dtheta=math.radians(dtheta_deg),
        t0=t_min,
        dt=dt,
        data=data,
    )
