import numpy as np
from tqdm import tqdm

from .constants import CHUNK_SIZE


def binary_power(base, exponent, multiply, one):
    """Raises ``base`` to a non-negative integer power by repeated squaring.

    Args:
        base: Object to raise.
        exponent (int): Non-negative power.
        multiply (callable): Associative product ``multiply(a, b)``.
        one: Multiplicative identity.

    Returns:
        ``base ** exponent`` under ``multiply``.
    """
    if exponent < 0:
        raise ValueError(f'exponent must be non-negative, got {exponent}.')
    result = one
    while exponent:
        if exponent & 1:
            result = multiply(result, base)
        exponent >>= 1
        if exponent:
            base = multiply(base, base)
    return result


def chunks(total, size=CHUNK_SIZE, progress=False, desc=None):
    """Yields ``(start, stop)`` bounds covering ``range(total)`` in blocks.

    Args:
        total (int): Number of items.
        size (int, optional): Block length.
        progress (bool, optional): Show a ``tqdm`` progress bar over the blocks.
        desc (str, optional): Progress bar label.
    """
    starts = range(0, total, size)
    if progress:
        starts = tqdm(starts, desc=desc, total=len(starts))
    for start in starts:
        yield start, min(start + size, total)


def base_digits(indices, base, length):
    """Returns the base-``base`` digits of ``indices``, least significant first.

    Args:
        indices (ndarray): Non-negative integers.
        base (int): Radix.
        length (int): Number of digits kept.

    Returns:
        ndarray: Integer array of shape ``indices.shape + (length,)``.
    """
    indices = np.asarray(indices, dtype=np.int64)
    places = base ** np.arange(length, dtype=np.int64)
    return (indices[..., None] // places) % base
