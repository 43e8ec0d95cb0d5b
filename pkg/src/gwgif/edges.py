"""Edge operators: edge-aware multipliers, edge protection, and
aggregation weights.

The edge-aware multipliers rescale the regularization strength per pixel:
values above 1 weaken smoothing (edges), values below 1 strengthen it
(flat areas). The normalization makes the harmonic structure explicit:
gamma(p) = (activity(p) + eps) * mean(1 / (activity + eps)), which is
always positive and averages to 1 in the harmonic sense.
"""

from dataclasses import dataclass

import numpy as np

from .core import as_image, box_sum, global_mean, window_counts, window_variance
from .gradients import gradient_4dir

# (0.0001 * L)^2 for dynamic range L = 1
DEFAULT_EPS = 1e-8


def edge_aware_wgif(guide, eps=DEFAULT_EPS):
    """Edge-aware multiplier built from 3x3 local variance of the guide."""
    guide = as_image(guide)
    if eps <= 0:
        raise ValueError("eps must be positive")
    var3 = window_variance(guide, 1)
    return (var3 + eps) * np.mean(1.0 / (var3 + eps))


def edge_zeta(guide, grad, radius):
    """Per-pixel edge activity: product of two coefficients of variation
    and the gradient magnitude.

    The first coefficient is the 3x3 standard deviation of the gradient
    magnitude, the second the standard deviation of the guide over the
    (2*radius+1)^2 window; each is normalized by the global mean of its
    own deviation map. A zero global mean (exactly constant image) makes
    the corresponding coefficient 0, so constant images stay all-flat.
    """
    guide = as_image(guide)
    sigma3 = np.sqrt(window_variance(grad.magnitude, 1))
    sigma_r = np.sqrt(window_variance(guide, radius))
    mean3 = global_mean(sigma3)
    mean_r = global_mean(sigma_r)
    phi3 = sigma3 / mean3 if mean3 > 0 else np.zeros_like(sigma3)
    phi_r = sigma_r / mean_r if mean_r > 0 else np.zeros_like(sigma_r)
    return phi3 * phi_r * grad.magnitude


def edge_aware_gamma(guide, grad, radius, eps=DEFAULT_EPS):
    """Gradient-domain edge-aware multiplier.

    ``grad`` must be the four-direction gradient field of the same guide.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    zeta = edge_zeta(guide, grad, radius)
    return gamma_from_zeta(zeta, eps)


def gamma_from_zeta(zeta, eps=DEFAULT_EPS):
    """Normalize an activity field into a positive multiplier field."""
    return (zeta + eps) * np.mean(1.0 / (zeta + eps))


def edge_protect_eta(grad, threshold_factor=1.7):
    """Binary edge indicator: 1 where the gradient magnitude exceeds
    ``threshold_factor`` times its global mean, else 0."""
    g = grad.magnitude
    return (g > threshold_factor * g.mean()).astype(np.float64)


def weight_map_mu(img, k, th_svar, thre):
    """Aggregation weights from the flatness of each (2k+1)^2 neighborhood.

    svar(p) is the absolute deviation of the neighborhood sum from a
    perfectly flat window at the center's value, measured on the 8-bit
    (x255) scale so the conventional threshold magnitudes apply. Uniform
    neighborhoods map to weights near 1, non-uniform ones to ``thre``.
    """
    img = as_image(img)
    if th_svar <= 0:
        raise ValueError("th_svar must be positive")
    scaled = img * 255.0
    counts = window_counts(img.shape[0], img.shape[1], k)
    svar = np.abs(box_sum(scaled, k) - counts * scaled)
    return np.where(svar <= th_svar, 1.0 - svar / th_svar, float(thre))


@dataclass(frozen=True)
class EdgeFieldSet:
    """All edge fields for one (input, guide) pair at a given radius."""

    gamma: np.ndarray
    eta: np.ndarray
    mu: np.ndarray
    zeta: np.ndarray


def edge_field_set(
    X, G, radius, threshold_factor=1.7, k=7, th_svar=11.0, thre=0.0, eps=DEFAULT_EPS
):
    """Compute gamma/eta/zeta from the guide and mu from the input."""
    grad = gradient_4dir(G)
    zeta = edge_zeta(G, grad, radius)
    return EdgeFieldSet(
        gamma=gamma_from_zeta(zeta, eps),
        eta=edge_protect_eta(grad, threshold_factor),
        mu=weight_map_mu(X, k, th_svar, thre),
        zeta=zeta,
    )
