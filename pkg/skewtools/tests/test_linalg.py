import numpy as np
import pytest

from skewtools.chain_ring import ring_multiply
from skewtools.code_model import inner_product
from skewtools.linalg import (
    chain_echelon,
    element_with_prefix,
    flatten,
    in_row_space,
    log_cardinality,
    orthogonal_complement,
    rank,
    row_basis,
    same_row_space,
    span_words,
    unflatten,
)


def _u_multiples(words):
    """All u^a w for the given words."""
    k = words.shape[-1]
    GF = type(words)
    out = []
    for a in range(k):
        power = GF.Zeros(k)
        power[a] = 1
        out.append(ring_multiply(power, words).view(np.ndarray))
    return GF(np.concatenate(out, axis=0))


def test_flatten_layout(ring):
    """Tests that flattening is layer-major."""
    R = ring(5, 1, 2)
    words = R.GF([[[1, 2], [3, 4], [0, 1]]])
    flat = flatten(words)
    assert flat.tolist() == [[1, 3, 0, 2, 4, 1]]
    assert np.array_equal(unflatten(flat, 2), words)


@pytest.mark.parametrize('p,m,k,count', [(3, 1, 2, 2), (5, 1, 3, 2), (3, 2, 2, 3)])
def test_chain_echelon_cardinality(ring, p, m, k, count):
    """Tests that the standard form counts the R_k-span of the words."""
    R = ring(p, m, k)
    words = R.GF.Random((count, 4, k), seed=count + k)
    words[0] = ring_multiply(R.u.coeffs, words[0])
    pivots = chain_echelon(words)
    span = rank(flatten(_u_multiples(words)))
    assert log_cardinality(pivots, k) == span
    columns = [c for c, _, _ in pivots]
    assert columns == sorted(set(columns))
    for col, v, row in pivots:
        assert row[col].tolist() == [int(i == v) for i in range(k)]


def test_chain_echelon_empty(ring):
    """Tests that the zero module has no pivots."""
    R = ring(5, 1, 2)
    assert chain_echelon(R.GF.Zeros((0, 3, 2))) == []
    assert chain_echelon(R.GF.Zeros((2, 3, 2))) == []


@pytest.mark.parametrize('k', [1, 2, 3])
def test_orthogonal_complement(ring, k):
    """Tests dimensions and orthogonality of the complement."""
    R = ring(7, 1, k)
    n = 4
    words = span_words(_u_multiples(R.GF.Random((2, n, k), seed=k)))
    complement = orthogonal_complement(words, n, k, R.GF)
    assert words.shape[0] + complement.shape[0] == n * k
    for a in words:
        for b in complement:
            assert not inner_product(a, b).view(np.ndarray).any()


def test_row_space_helpers(field):
    """Tests row_basis, in_row_space and same_row_space."""
    GF = field(5).GF
    matrix = GF([[1, 2, 3], [2, 4, 1], [3, 1, 4]])
    basis = row_basis(matrix)
    assert basis.shape[0] == rank(matrix)
    assert in_row_space(basis, matrix[0] + matrix[1])
    assert same_row_space(basis, matrix)
    assert not in_row_space(GF.Zeros((0, 3)), GF([1, 0, 0]))


def test_element_with_prefix(field):
    """Tests that the prefix element vanishes before the window and matches on it."""
    GF = field(7).GF
    rref = row_basis(GF([[1, 2, 0, 3], [0, 0, 1, 5], [0, 1, 1, 1]]))
    target = GF([4, 2])
    element = element_with_prefix(rref, 1, 3, target)
    assert element[0] == 0
    assert element[1:3].tolist() == [4, 2]
    assert in_row_space(rref, element)
    assert element_with_prefix(row_basis(GF([[0, 1, 1, 0]])), 1, 3, GF([1, 0])) is None
