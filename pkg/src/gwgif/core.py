"""Grayscale image conventions and O(N) windowed statistics.

An image is a 2D float64 array in [row, col] order with intensities
nominally in [0, 1]. Every windowed statistic uses clamped (truncated)
windows: near the border the window holds only in-bounds pixels and the
divisor is the actual pixel count. All window sums are computed from 2D
cumulative sums, so total work is independent of the window radius.
"""

import numpy as np


def as_image(data):
    """Validate ``data`` as an image and return it as a float64 array.

    Raises ValueError if the array is not 2D, is empty, or contains
    non-finite values.
    """
    img = np.asarray(data, dtype=np.float64)
    if img.ndim != 2:
        raise ValueError(f"expected a 2D grayscale image, got shape {img.shape}")
    if img.size == 0:
        raise ValueError("image must have at least one pixel")
    if not np.all(np.isfinite(img)):
        raise ValueError("image contains NaN or Inf values")
    return img


def _check_radius(radius):
    if int(radius) != radius or radius < 1:
        raise ValueError(f"window radius must be an integer >= 1, got {radius!r}")
    return int(radius)


def normalize_8bit(raw):
    """Convert an 8-bit grayscale buffer to a float image in [0, 1]."""
    arr = np.asarray(raw, dtype=np.float64)
    if arr.ndim != 2 or arr.size == 0:
        raise ValueError(f"expected a non-empty 2D 8-bit buffer, got shape {arr.shape}")
    if arr.min() < 0 or arr.max() > 255:
        raise ValueError("8-bit buffer values must lie in [0, 255]")
    return arr / 255.0


def denormalize_8bit(img):
    """Quantize a [0, 1] image to uint8.

    Clips to [0, 1] first, then rounds half away from zero so that golden
    output files are stable across platforms.
    """
    img = as_image(img)
    return np.floor(np.clip(img, 0.0, 1.0) * 255.0 + 0.5).astype(np.uint8)


def window_counts(height, width, radius):
    """Per-pixel count of in-bounds pixels in the clamped window."""
    radius = _check_radius(radius)
    rows = np.minimum(np.arange(height) + radius + 1, height) - np.maximum(
        np.arange(height) - radius, 0
    )
    cols = np.minimum(np.arange(width) + radius + 1, width) - np.maximum(
        np.arange(width) - radius, 0
    )
    return np.outer(rows, cols).astype(np.float64)


def box_sum(img, radius):
    """Clamped-window sum over (2*radius+1)^2 windows in O(N) total time."""
    img = as_image(img)
    radius = _check_radius(radius)
    h, w = img.shape
    # integral image with a zero top row / left column
    c = np.zeros((h + 1, w + 1))
    c[1:, 1:] = img.cumsum(axis=0).cumsum(axis=1)
    y0 = np.clip(np.arange(h) - radius, 0, h)
    y1 = np.clip(np.arange(h) + radius + 1, 0, h)
    x0 = np.clip(np.arange(w) - radius, 0, w)
    x1 = np.clip(np.arange(w) + radius + 1, 0, w)
    return (
        c[np.ix_(y1, x1)] - c[np.ix_(y0, x1)] - c[np.ix_(y1, x0)] + c[np.ix_(y0, x0)]
    )


def window_mean(img, radius):
    """Per-pixel mean over the clamped window."""
    img = as_image(img)
    counts = window_counts(img.shape[0], img.shape[1], radius)
    return box_sum(img, radius) / counts


def window_variance(img, radius):
    """Per-pixel E[x^2] - E[x]^2 over the clamped window, clamped at 0.

    The clamp absorbs tiny negative values produced by floating-point
    cancellation on near-constant windows.
    """
    img = as_image(img)
    mean = window_mean(img, radius)
    mean_sq = window_mean(img * img, radius)
    return np.maximum(mean_sq - mean * mean, 0.0)


def window_covariance(a, b, radius):
    """Per-pixel E[ab] - E[a]E[b] over the clamped window."""
    a = as_image(a)
    b = as_image(b)
    if a.shape != b.shape:
        raise ValueError(f"image dimensions differ: {a.shape} vs {b.shape}")
    return window_mean(a * b, radius) - window_mean(a, radius) * window_mean(b, radius)


def global_mean(img):
    """Arithmetic mean over all pixels."""
    return float(as_image(img).mean())
