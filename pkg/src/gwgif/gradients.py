"""Whole-image difference gradients.

Both operations are shift-and-subtract over full arrays (no per-window
template traversal), so runtime is linear in the pixel count. Differences
whose shifted neighbor falls outside the image are defined as 0, which
keeps constant images exactly gradient-free.
"""

from dataclasses import dataclass

import numpy as np

from .core import as_image


@dataclass(frozen=True)
class GradientField:
    """Four directional forward differences and their combined magnitude.

    ``magnitude`` equals sqrt(up^2 + down^2 + left^2 + right^2) pixelwise.
    """

    magnitude: np.ndarray
    up: np.ndarray
    down: np.ndarray
    left: np.ndarray
    right: np.ndarray


def gradient_xy(img):
    """Forward differences along x (columns) and y (rows).

    g_x(x, y) = f(x+1, y) - f(x, y) and g_y(x, y) = f(x, y+1) - f(x, y);
    the last column of g_x and last row of g_y are 0.
    """
    img = as_image(img)
    gx = np.zeros_like(img)
    gy = np.zeros_like(img)
    gx[:, :-1] = img[:, 1:] - img[:, :-1]
    gy[:-1, :] = img[1:, :] - img[:-1, :]
    return gx, gy


def gradient_4dir(img):
    """Differences toward the upper, lower, left, and right neighbors.

    Combines all four into a per-pixel magnitude; boundary rows/columns
    where a neighbor is missing contribute a 0 difference.
    """
    img = as_image(img)
    up = np.zeros_like(img)
    down = np.zeros_like(img)
    left = np.zeros_like(img)
    right = np.zeros_like(img)
    up[1:, :] = img[:-1, :] - img[1:, :]
    down[:-1, :] = img[1:, :] - img[:-1, :]
    left[:, 1:] = img[:, :-1] - img[:, 1:]
    right[:, :-1] = img[:, 1:] - img[:, :-1]
    magnitude = np.sqrt(up * up + down * down + left * left + right * right)
    return GradientField(magnitude, up, down, left, right)
