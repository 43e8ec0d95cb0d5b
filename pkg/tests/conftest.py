import numpy as np
import pytest


@pytest.fixture(scope="session")
def camera():
    from skimage import data

    return data.camera().astype(np.float64) / 255.0


@pytest.fixture(scope="session")
def brick():
    from skimage import data

    return data.brick().astype(np.float64) / 255.0


@pytest.fixture(scope="session")
def natural_images():
    """Photographic grayscale test images, fixed a priori."""
    from skimage import data

    return {
        name: getattr(data, name)().astype(np.float64) / 255.0
        for name in ("camera", "coins", "moon")
    }
