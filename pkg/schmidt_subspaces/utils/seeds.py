import zlib

import numpy as np

from schmidt_subspaces.utils.exceptions import DomainError


def substream(seed: int, name: str, index: int = 0) -> np.random.Generator:
    """
    Deterministic generator for the unit of work `index` of the named stream.

    Every sample / restart / chunk gets its own generator, so results do not
    depend on the order in which units are executed.
    """
    if seed is None or seed < 0:
        raise DomainError("seed must be a non-negative integer", seed=seed)

    key = (zlib.crc32(name.encode("utf-8")), int(index))
    return np.random.default_rng(np.random.SeedSequence(entropy=int(seed), spawn_key=key))


def draw_coefficients(rng: np.random.Generator, dim: int, box: int):
    """
    Integer coefficient vector with entries in [-box, box], redrawn while all-zero
    """
    coeffs = [0] * dim
    while not any(coeffs):
        coeffs = [int(x) for x in rng.integers(-box, box + 1, size=dim)]
    return coeffs
