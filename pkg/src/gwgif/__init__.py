"""Gradient-domain weighted guided image filtering for grayscale images.

Provides the classic guided filter (GIF), the weighted guided filter
(WGIF), and the gradient-domain weighted guided filter (GWGIF), together
with detail-enhancement and denoising applications, full-reference
quality metrics, and PNG/PGM file I/O.
"""

from .applications import (
    EnhanceParams,
    NoiseSpec,
    add_gaussian_noise,
    denoise,
    detail_enhance,
)
from .core import (
    as_image,
    box_sum,
    denormalize_8bit,
    global_mean,
    normalize_8bit,
    window_counts,
    window_covariance,
    window_mean,
    window_variance,
)
from .edges import (
    DEFAULT_EPS,
    EdgeFieldSet,
    edge_aware_gamma,
    edge_aware_wgif,
    edge_field_set,
    edge_protect_eta,
    edge_zeta,
    gamma_from_zeta,
    weight_map_mu,
)
from .fileio import load_image, save_image, write_pgm
from .filters import (
    FILTERS,
    FilterParams,
    LinearCoefficients,
    gif,
    gwgif,
    gwgif_coefficients,
    run_filter,
    wgif,
)
from .gradients import GradientField, gradient_4dir, gradient_xy
from .metrics import MetricsReport, average_gradient, evaluate_pair, psnr, ssim

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_EPS",
    "EdgeFieldSet",
    "EnhanceParams",
    "FILTERS",
    "FilterParams",
    "GradientField",
    "LinearCoefficients",
    "MetricsReport",
    "NoiseSpec",
    "add_gaussian_noise",
    "as_image",
    "average_gradient",
    "box_sum",
    "denoise",
    "denormalize_8bit",
    "detail_enhance",
    "edge_aware_gamma",
    "edge_aware_wgif",
    "edge_field_set",
    "edge_protect_eta",
    "edge_zeta",
    "evaluate_pair",
    "gamma_from_zeta",
    "gif",
    "global_mean",
    "gradient_4dir",
    "gradient_xy",
    "gwgif",
    "gwgif_coefficients",
    "load_image",
    "normalize_8bit",
    "psnr",
    "run_filter",
    "save_image",
    "ssim",
    "weight_map_mu",
    "wgif",
    "window_counts",
    "window_covariance",
    "window_mean",
    "window_variance",
    "write_pgm",
]
