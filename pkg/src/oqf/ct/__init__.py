from .fbp import (
    FbpConfig,
    FilteredSinogram,
    backproject,
    default_num_bins,
    fbp_reconstruct,
    filter_projections,
)
from .metrics import QualityReport, image_metrics, inner_region_mask
from .phantom import (
    Ellipse,
    EllipsePhantom,
    ImageGrid,
    Sinogram,
    radon_analytic,
    rasterize,
    shepp_logan,
    shepp_logan_phantom,
)

__all__ = [
    "Ellipse",
    "EllipsePhantom",
    "FbpConfig",
    "FilteredSinogram",
    "ImageGrid",
    "QualityReport",
    "Sinogram",
    "backproject",
    "default_num_bins",
    "fbp_reconstruct",
    "filter_projections",
    "image_metrics",
    "inner_region_mask",
    "radon_analytic",
    "rasterize",
    "shepp_logan",
    "shepp_logan_phantom",
]
