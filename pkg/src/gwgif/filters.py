"""The guided-filter family: GIF, WGIF, and GWGIF.

All three share the same local linear model per window (output = a * guide
+ b, fit by ridge regression) and differ in how the ridge strength adapts
to edges and in how overlapping-window coefficients are aggregated:

* ``gif``   — fixed ridge strength, plain mean aggregation.
* ``wgif``  — ridge strength divided by a 3x3-variance edge multiplier.
* ``gwgif`` — gradient-domain edge multiplier, a binary edge-protection
  term that pins a to 1 on confirmed edges, and flatness-weighted
  aggregation of the coefficients.
"""

from dataclasses import dataclass

import numpy as np

from .core import as_image, box_sum, window_counts
from .edges import (
    DEFAULT_EPS,
    edge_aware_gamma,
    edge_aware_wgif,
    edge_protect_eta,
    weight_map_mu,
)
from .gradients import gradient_4dir

# aggregation windows whose total weight falls below this use the
# unweighted mean instead
ZERO_WEIGHT_FLOOR = 1e-12


@dataclass(frozen=True)
class FilterParams:
    """Shared parameter set for all filters.

    radius            window radius of the local linear model
    lam               ridge regularization strength (>= 0)
    threshold_factor  edge-protection threshold on the gradient magnitude,
                      as a multiple of its global mean
    k                 radius of the flatness window for aggregation weights
    th_svar           flatness threshold on the 8-bit scale
    thre              weight assigned to non-uniform neighborhoods
    eps               guard constant for the edge-aware multipliers
    """

    radius: int
    lam: float
    threshold_factor: float = 1.7
    k: int = 7
    th_svar: float = 11.0
    thre: float = 0.0
    eps: float = DEFAULT_EPS

    def __post_init__(self):
        if int(self.radius) != self.radius or self.radius < 1:
            raise ValueError(f"radius must be an integer >= 1, got {self.radius!r}")
        if self.lam < 0:
            raise ValueError(f"lam must be >= 0, got {self.lam!r}")
        if int(self.k) != self.k or self.k < 1:
            raise ValueError(f"k must be an integer >= 1, got {self.k!r}")
        if self.th_svar <= 0:
            raise ValueError(f"th_svar must be positive, got {self.th_svar!r}")
        if self.eps <= 0:
            raise ValueError(f"eps must be positive, got {self.eps!r}")


@dataclass(frozen=True)
class LinearCoefficients:
    """Per-window model coefficients before aggregation."""

    a: np.ndarray
    b: np.ndarray


def _check_pair(X, G):
    X = as_image(X)
    G = as_image(G)
    if X.shape != G.shape:
        raise ValueError(f"input and guide dimensions differ: {X.shape} vs {G.shape}")
    return X, G


def _window_stats(X, G, radius):
    h, w = G.shape
    n = window_counts(h, w, radius)
    mean_g = box_sum(G, radius) / n
    mean_x = box_sum(X, radius) / n
    mean_gg = box_sum(G * G, radius) / n
    mean_gx = box_sum(G * X, radius) / n
    var_g = np.maximum(mean_gg - mean_g * mean_g, 0.0)
    cov_gx = mean_gx - mean_g * mean_x
    return mean_g, mean_x, var_g, cov_gx


def _safe_div(num, den):
    # den is >= 0; a zero denominator is the zero-variance window with no
    # regularization, which degenerates to a = 0 (b then picks up the
    # window mean).
    out = np.zeros_like(num)
    np.divide(num, den, out=out, where=den > 0)
    return out


def _linear_coefficients(X, G, radius, lam_eff, eta=None):
    mean_g, mean_x, var_g, cov_gx = _window_stats(X, G, radius)
    num = cov_gx if eta is None else cov_gx + lam_eff * eta
    a = _safe_div(num, var_g + lam_eff)
    b = mean_x - a * mean_g
    return a, b


def _mean_aggregate(a, b, G, radius):
    n = window_counts(G.shape[0], G.shape[1], radius)
    return (box_sum(a, radius) / n) * G + box_sum(b, radius) / n


def gif(X, G, params):
    """Classic guided filter: fixed ridge strength, mean aggregation."""
    X, G = _check_pair(X, G)
    a, b = _linear_coefficients(X, G, params.radius, float(params.lam))
    return _mean_aggregate(a, b, G, params.radius)


def wgif(X, G, params):
    """Guided filter with the 3x3-variance edge-aware ridge strength."""
    X, G = _check_pair(X, G)
    gamma = edge_aware_wgif(G, params.eps)
    a, b = _linear_coefficients(X, G, params.radius, params.lam / gamma)
    return _mean_aggregate(a, b, G, params.radius)


def gwgif_coefficients(X, G, params):
    """Per-window coefficients of the gradient-domain weighted filter.

    The ridge strength is lam divided by the gradient-domain edge-aware
    multiplier; on pixels flagged by the edge-protection indicator the
    same term is added to the numerator, which pins a to 1 there.
    """
    X, G = _check_pair(X, G)
    grad = gradient_4dir(G)
    gamma = edge_aware_gamma(G, grad, params.radius, params.eps)
    eta = edge_protect_eta(grad, params.threshold_factor)
    a, b = _linear_coefficients(X, G, params.radius, params.lam / gamma, eta)
    return LinearCoefficients(a=a, b=b)


def gwgif(X, G, params):
    """Gradient-domain weighted guided filter.

    Aggregates the per-window coefficients with flatness weights instead
    of the plain mean: three box-filter passes (mu*a, mu*b, mu) produce
    the weighted averages in O(N). Windows whose total weight is below
    ``ZERO_WEIGHT_FLOOR`` fall back to the unweighted mean.
    """
    X, G = _check_pair(X, G)
    coef = gwgif_coefficients(X, G, params)
    mu = weight_map_mu(X, params.k, params.th_svar, params.thre)
    r = params.radius
    num_a = box_sum(mu * coef.a, r)
    num_b = box_sum(mu * coef.b, r)
    den = box_sum(mu, r)
    low = den < ZERO_WEIGHT_FLOOR
    if low.any():
        counts = window_counts(G.shape[0], G.shape[1], r)
        num_a = np.where(low, box_sum(coef.a, r), num_a)
        num_b = np.where(low, box_sum(coef.b, r), num_b)
        den = np.where(low, counts, den)
    return (num_a / den) * G + num_b / den


FILTERS = {"gif": gif, "wgif": wgif, "gwgif": gwgif}


def run_filter(name, X, G, params):
    """Dispatch to one of the filters by name ('gif', 'wgif', 'gwgif')."""
    try:
        fn = FILTERS[name]
    except KeyError:
        raise ValueError(
            f"unknown filter {name!r}; expected one of {', '.join(sorted(FILTERS))}"
        ) from None
    return fn(X, G, params)
