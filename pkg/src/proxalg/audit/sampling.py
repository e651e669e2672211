import logging

import numpy as np

from proxalg.core.space import DescribedSpace, PointId, Region, make_space
from proxalg.exceptions import SpaceError

logger = logging.getLogger(__name__)

PRNG_NAME = "numpy.PCG64"


def make_rng(seed: int | None) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_space(rows: int, cols: int, alphabet_size: int, seed: int) -> DescribedSpace:
    """
    A rows x cols, 0-based space whose single probe takes values in [0, alphabet_size).
    The same seed always yields the same space.
    """
    if alphabet_size < 1:
        raise SpaceError(f"alphabet_size must be at least 1, got {alphabet_size}")
    values = make_rng(seed).integers(0, alphabet_size, size=rows * cols).tolist()
    entries = [
        (PointId(index // cols, index % cols), (value,))
        for index, value in enumerate(values)
    ]
    logger.info(f"Drew random {rows}x{cols} space over {alphabet_size} values with seed {seed}.")
    return make_space(rows, cols, 1, entries, index_base=0)


def random_region(space: DescribedSpace, rng: np.random.Generator) -> Region:
    """Each point joins independently with probability 1/2; empty draws are rejected."""
    while True:
        chosen = np.flatnonzero(rng.random(space.size) < 0.5)
        if chosen.size:
            return Region.from_indices(space, chosen.tolist())


def random_subregion(region: Region, rng: np.random.Generator) -> Region:
    members = list(region)
    while True:
        chosen = np.flatnonzero(rng.random(len(members)) < 0.5)
        if chosen.size:
            return Region.of(region.space, (members[i] for i in chosen.tolist()))


def region_from_mask(space: DescribedSpace, mask: int) -> Region:
    return Region.from_indices(space, (i for i in range(space.size) if mask >> i & 1))


def mask_of(region: Region) -> int:
    return sum(1 << i for i in region.indices())
