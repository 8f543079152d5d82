import numpy as np
import pytest

from skewtools.utils import base_digits, binary_power, chunks


@pytest.mark.parametrize('exponent', [0, 1, 2, 7, 64])
def test_binary_power(exponent):
    """Tests repeated squaring against Python's modular power."""
    result = binary_power(3, exponent, lambda a, b: a * b % 101, 1)
    assert result == pow(3, exponent, 101)


def test_binary_power_negative():
    """Tests that negative exponents raise ValueError."""
    with pytest.raises(ValueError):
        binary_power(3, -1, lambda a, b: a * b, 1)


@pytest.mark.parametrize('total,size', [(0, 4), (10, 4), (8, 4), (3, 10)])
def test_chunks(total, size):
    """Tests that chunks cover the range exactly once."""
    covered = [i for start, stop in chunks(total, size) for i in range(start, stop)]
    assert covered == list(range(total))
    assert list(chunks(total, size)) == list(chunks(total, size, progress=True))


def test_base_digits():
    """Tests that digits are least significant first."""
    digits = base_digits(np.array([0, 5, 24]), 5, 3)
    assert digits.tolist() == [[0, 0, 0], [0, 1, 0], [4, 4, 0]]
