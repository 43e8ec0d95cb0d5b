"""Image file I/O: 8-bit grayscale PNG and binary PGM (P5).

Color inputs are reduced to grayscale by averaging the channels. Output
quantization clips to [0, 1] and rounds half away from zero, so repeated
runs produce byte-identical files.
"""

from pathlib import Path

import numpy as np
from PIL import Image

from .core import denormalize_8bit


def load_image(path):
    """Load a PNG or PGM file as a [0, 1] grayscale image."""
    path = Path(path)
    with Image.open(path) as im:
        im.load()
        if im.mode == "L":
            arr = np.asarray(im, dtype=np.float64)
        elif im.mode == "LA":
            arr = np.asarray(im, dtype=np.float64)[..., 0]
        elif im.mode == "1":
            arr = np.asarray(im.convert("L"), dtype=np.float64)
        elif im.mode in ("RGB", "RGBA", "P"):
            arr = np.asarray(im.convert("RGB"), dtype=np.float64).mean(axis=2)
        else:
            raise OSError(
                f"unsupported image mode {im.mode!r} in {path} "
                "(only 8-bit grayscale or color inputs are handled)"
            )
    return arr / 255.0


def save_image(path, img):
    """Write a [0, 1] image as 8-bit PNG or binary PGM, chosen by extension."""
    path = Path(path)
    data = denormalize_8bit(img)
    suffix = path.suffix.lower()
    if suffix == ".png":
        Image.fromarray(data, mode="L").save(path, format="PNG")
    elif suffix in (".pgm", ".pnm"):
        write_pgm(path, data)
    else:
        raise ValueError(f"unsupported output format {suffix!r} (use .png or .pgm)")


def write_pgm(path, data):
    """Write uint8 grayscale data as binary PGM (P5, maxval 255)."""
    data = np.ascontiguousarray(data, dtype=np.uint8)
    h, w = data.shape
    with open(path, "wb") as f:
        f.write(f"P5\n{w} {h}\n255\n".encode("ascii"))
        f.write(data.tobytes())
