"""Raster ingestion: every pixel becomes a point described by its colour components."""
import logging
from pathlib import Path

import numpy as np

from proxalg.core.space import DescribedSpace, PointId, make_space
from proxalg.exceptions import ConfigurationError, ParseError

logger = logging.getLogger(__name__)


def space_from_array(pixels: np.ndarray, index_base: int = 0) -> DescribedSpace:
    """Builds a space from an (rows, cols) or (rows, cols, channels) integer array."""
    if pixels.ndim == 2:
        pixels = pixels[:, :, None]
    if pixels.ndim != 3:
        raise ParseError(f"expected a 2-D or 3-D pixel array, got shape {pixels.shape}")
    rows, cols, channels = pixels.shape
    values = pixels.astype(np.int64).tolist()
    entries = [
        (PointId(r + index_base, c + index_base), values[r][c])
        for r in range(rows)
        for c in range(cols)
    ]
    return make_space(rows, cols, channels, entries, index_base)


def load_image(path: str | Path) -> DescribedSpace:
    try:
        from PIL import Image, UnidentifiedImageError
    except ImportError as e:
        raise ConfigurationError("Reading images needs Pillow: install proxalg[images]") from e

    try:
        with Image.open(path) as image:
            pixels = np.asarray(image.convert("RGB"))
    except (IOError, OSError, UnidentifiedImageError) as e:
        raise ParseError(f"cannot read image: {e}", None, str(path)) from e
    logger.info(f"Read {pixels.shape[1]}x{pixels.shape[0]} image from {path}.")
    return space_from_array(pixels)
