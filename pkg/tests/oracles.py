"""Brute-force reference implementations used to pin expected values.

Everything here works by direct per-window slicing and explicit loops so
the library's cumulative-sum fast paths are checked against an
independent computation path.
"""

import numpy as np


def window(img, y, x, radius):
    h, w = img.shape
    return img[
        max(0, y - radius) : min(h, y + radius + 1),
        max(0, x - radius) : min(w, x + radius + 1),
    ]


def _per_pixel(img, radius, fn):
    h, w = img.shape
    out = np.zeros((h, w))
    for y in range(h):
        for x in range(w):
            out[y, x] = fn(y, x)
    return out


def window_mean_oracle(img, radius):
    return _per_pixel(img, radius, lambda y, x: window(img, y, x, radius).mean())


def window_variance_oracle(img, radius):
    return _per_pixel(img, radius, lambda y, x: window(img, y, x, radius).var())


def window_covariance_oracle(a, b, radius):
    def cov(y, x):
        wa = window(a, y, x, radius)
        wb = window(b, y, x, radius)
        return (wa * wb).mean() - wa.mean() * wb.mean()

    return _per_pixel(a, radius, cov)


def gradient_magnitude_oracle(img):
    h, w = img.shape
    out = np.zeros((h, w))
    for y in range(h):
        for x in range(w):
            diffs = []
            for dy, dx in ((-1, 0), (1, 0), (0, -1), (0, 1)):
                ny, nx = y + dy, x + dx
                diffs.append(img[ny, nx] - img[y, x] if 0 <= ny < h and 0 <= nx < w else 0.0)
            out[y, x] = np.sqrt(sum(d * d for d in diffs))
    return out


def wgif_gamma_oracle(G, eps):
    v = window_variance_oracle(G, 1)
    flat = v.ravel()
    out = np.zeros_like(v)
    for y in range(v.shape[0]):
        for x in range(v.shape[1]):
            out[y, x] = np.mean((v[y, x] + eps) / (flat + eps))
    return out


def zeta_oracle(G, radius):
    g = gradient_magnitude_oracle(G)
    s3 = np.sqrt(window_variance_oracle(g, 1))
    sr = np.sqrt(window_variance_oracle(G, radius))
    phi3 = s3 / s3.mean() if s3.mean() > 0 else np.zeros_like(s3)
    phir = sr / sr.mean() if sr.mean() > 0 else np.zeros_like(sr)
    return phi3 * phir * g


def gamma_oracle(G, radius, eps):
    zeta = zeta_oracle(G, radius)
    flat = zeta.ravel()
    out = np.zeros_like(zeta)
    for y in range(zeta.shape[0]):
        for x in range(zeta.shape[1]):
            out[y, x] = np.mean((zeta[y, x] + eps) / (flat + eps))
    return out


def eta_oracle(G, threshold_factor=1.7):
    g = gradient_magnitude_oracle(G)
    return (g > threshold_factor * g.mean()).astype(np.float64)


def mu_oracle(X, k, th_svar, thre):
    scaled = X * 255.0

    def mu(y, x):
        w = window(scaled, y, x, k)
        svar = abs(w.sum() - w.size * scaled[y, x])
        return 1.0 - svar / th_svar if svar <= th_svar else thre

    return _per_pixel(X, k, mu)


def coefficients_oracle(X, G, radius, lam_eff, eta=None):
    """Per-window ridge coefficients; lam_eff is a scalar or a per-pixel map."""
    h, w = G.shape
    a = np.zeros((h, w))
    b = np.zeros((h, w))
    lam_map = np.broadcast_to(np.asarray(lam_eff, dtype=np.float64), (h, w))
    for y in range(h):
        for x in range(w):
            wg = window(G, y, x, radius)
            wx = window(X, y, x, radius)
            var = wg.var()
            cov = (wg * wx).mean() - wg.mean() * wx.mean()
            num = cov if eta is None else cov + lam_map[y, x] * eta[y, x]
            den = var + lam_map[y, x]
            a[y, x] = num / den if den > 0 else 0.0
            b[y, x] = wx.mean() - a[y, x] * wg.mean()
    return a, b


def mean_aggregate_oracle(a, b, G, radius):
    def z(y, x):
        return window(a, y, x, radius).mean() * G[y, x] + window(b, y, x, radius).mean()

    return _per_pixel(G, radius, z)


def weighted_aggregate_oracle(a, b, mu, G, radius, floor=1e-12):
    def z(y, x):
        wm = window(mu, y, x, radius)
        wa = window(a, y, x, radius)
        wb = window(b, y, x, radius)
        den = wm.sum()
        if den < floor:
            at, bt = wa.mean(), wb.mean()
        else:
            at, bt = (wm * wa).sum() / den, (wm * wb).sum() / den
        return at * G[y, x] + bt

    return _per_pixel(G, radius, z)


def gif_oracle(X, G, radius, lam):
    a, b = coefficients_oracle(X, G, radius, lam)
    return mean_aggregate_oracle(a, b, G, radius)


def wgif_oracle(X, G, radius, lam, eps):
    gamma = wgif_gamma_oracle(G, eps)
    a, b = coefficients_oracle(X, G, radius, lam / gamma)
    return mean_aggregate_oracle(a, b, G, radius)


def gwgif_oracle(X, G, radius, lam, threshold_factor, k, th_svar, thre, eps):
    gamma = gamma_oracle(G, radius, eps)
    eta = eta_oracle(G, threshold_factor)
    a, b = coefficients_oracle(X, G, radius, lam / gamma, eta)
    mu = mu_oracle(X, k, th_svar, thre)
    return weighted_aggregate_oracle(a, b, mu, G, radius)


def psnr_oracle(a, b):
    mse = np.mean((np.asarray(a) - np.asarray(b)) ** 2)
    return float("inf") if mse == 0 else 10.0 * np.log10(1.0 / mse)


def ssim_oracle(a, b, size=11, sigma=1.5, c1=0.01**2, c2=0.03**2):
    half = size // 2
    coords = np.arange(size) - half
    kern = np.exp(-(coords[:, None] ** 2 + coords[None, :] ** 2) / (2 * sigma**2))
    kern /= kern.sum()
    h, w = a.shape
    vals = []
    for y in range(half, h - half):
        for x in range(half, w - half):
            wa = a[y - half : y + half + 1, x - half : x + half + 1]
            wb = b[y - half : y + half + 1, x - half : x + half + 1]
            mu_a = (kern * wa).sum()
            mu_b = (kern * wb).sum()
            va = (kern * wa * wa).sum() - mu_a**2
            vb = (kern * wb * wb).sum() - mu_b**2
            cov = (kern * wa * wb).sum() - mu_a * mu_b
            vals.append(
                ((2 * mu_a * mu_b + c1) * (2 * cov + c2))
                / ((mu_a**2 + mu_b**2 + c1) * (va + vb + c2))
            )
    return float(np.mean(vals))


def average_gradient_oracle(img):
    h, w = img.shape
    if h < 2 or w < 2:
        return 0.0
    vals = []
    for y in range(h - 1):
        for x in range(w - 1):
            gx = img[y, x + 1] - img[y, x]
            gy = img[y + 1, x] - img[y, x]
            vals.append(np.sqrt((gx * gx + gy * gy) / 2.0))
    return float(np.mean(vals))
