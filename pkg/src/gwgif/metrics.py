"""Full-reference quality metrics: PSNR, SSIM, and average gradient.

All metrics operate on [0, 1] images (dynamic range 1). PSNR of identical
images is the +infinity sentinel. SSIM is the single-scale mean over
11x11 Gaussian-weighted windows (sigma 1.5) at fully-interior positions.
Average gradient uses forward differences normalized by sqrt(2), i.e.
mean(sqrt((g_x^2 + g_y^2) / 2)) over pixels that have both neighbors.
"""

import math
from dataclasses import dataclass

import numpy as np

from .core import as_image

SSIM_WINDOW = 11
SSIM_SIGMA = 1.5
SSIM_C1 = 0.01**2
SSIM_C2 = 0.03**2


@dataclass(frozen=True)
class MetricsReport:
    """PSNR / SSIM / average gradient for an (output, reference) pair."""

    psnr: float
    ssim: float
    avg_gradient: float


def _check_pair(a, b):
    a = as_image(a)
    b = as_image(b)
    if a.shape != b.shape:
        raise ValueError(f"image dimensions differ: {a.shape} vs {b.shape}")
    return a, b


def psnr(a, b):
    """Peak signal-to-noise ratio in dB for unit dynamic range."""
    a, b = _check_pair(a, b)
    mse = float(np.mean((a - b) ** 2))
    if mse == 0.0:
        return math.inf
    return -10.0 * math.log10(mse)


def _gaussian_kernel(size=SSIM_WINDOW, sigma=SSIM_SIGMA):
    x = np.arange(size, dtype=np.float64) - (size - 1) / 2
    k = np.exp(-(x * x) / (2.0 * sigma * sigma))
    return k / k.sum()


def _correlate_valid(img, kernel):
    """Separable valid-mode correlation with an odd 1D kernel on both axes."""
    size = kernel.size
    h, w = img.shape
    tmp = np.zeros((h, w - size + 1))
    for i in range(size):
        tmp += kernel[i] * img[:, i : i + w - size + 1]
    out = np.zeros((h - size + 1, tmp.shape[1]))
    for i in range(size):
        out += kernel[i] * tmp[i : i + h - size + 1, :]
    return out


def ssim(a, b):
    """Mean structural similarity over Gaussian-weighted local windows."""
    a, b = _check_pair(a, b)
    if min(a.shape) < SSIM_WINDOW:
        raise ValueError(
            f"images must be at least {SSIM_WINDOW}x{SSIM_WINDOW} for SSIM, got {a.shape}"
        )
    k = _gaussian_kernel()
    mu_a = _correlate_valid(a, k)
    mu_b = _correlate_valid(b, k)
    var_a = _correlate_valid(a * a, k) - mu_a * mu_a
    var_b = _correlate_valid(b * b, k) - mu_b * mu_b
    cov = _correlate_valid(a * b, k) - mu_a * mu_b
    num = (2.0 * mu_a * mu_b + SSIM_C1) * (2.0 * cov + SSIM_C2)
    den = (mu_a * mu_a + mu_b * mu_b + SSIM_C1) * (var_a + var_b + SSIM_C2)
    return float(np.mean(num / den))


def average_gradient(img):
    """Mean forward-difference gradient magnitude, a texture-richness score."""
    img = as_image(img)
    if img.shape[0] < 2 or img.shape[1] < 2:
        return 0.0
    gx = img[:-1, 1:] - img[:-1, :-1]
    gy = img[1:, :-1] - img[:-1, :-1]
    return float(np.mean(np.sqrt((gx * gx + gy * gy) / 2.0)))


def evaluate_pair(output, reference):
    """Bundle the three metrics for a filter output against its reference."""
    return MetricsReport(
        psnr=psnr(output, reference),
        ssim=ssim(output, reference),
        avg_gradient=average_gradient(output),
    )
