import logging
from collections import namedtuple
from itertools import combinations

import numpy as np
from tqdm import tqdm

from .constants import EXHAUSTIVE_CAP, SUBSET_TEST_CAP
from .checks import certify
from .exceptions import Infeasible, NotFieldCode, ZeroCode
from .linalg import orthogonal_complement, rank, unflatten
from .utils import base_digits, chunks

logger = logging.getLogger(__name__)

METHODS = ['exhaustive', 'column_rank']

CodeParams = namedtuple('CodeParams', ['n', 'k_dim', 'd', 'mds', 'method', 'witness'])
CodeParams.__doc__ = """Parameters ``[n, k, d]`` of a code.

``k_dim`` is the dimension for field codes and the valuation profile (number of
standard-form pivots of each u-adic valuation) for chain-ring codes, where ``mds`` is
``None``. ``witness`` is a codeword of weight ``d``.
"""


def weight(v):
    """Number of nonzero coordinates of a word.

    Args:
        v (FieldArray or SkewPoly): Word of shape ``(..., N, k)``, or ``(N,)`` over a
            field. A ``SkewPoly`` counts its nonzero coefficients.

    Returns:
        int or ndarray: Weight(s) over the leading axes.
    """
    if hasattr(v, 'coeffs'):
        v = v.coeffs
    values = v.view(np.ndarray)
    if values.ndim == 1:
        return int(np.count_nonzero(values))
    counts = values.any(axis=-1).sum(axis=-1)
    return int(counts) if counts.ndim == 0 else counts


def _params(code, d, method, witness):
    n = code.length
    if code.is_field_code():
        k_dim = code.dimension
        mds = d == n - k_dim + 1
    else:
        k_dim = code.profile()
        mds = None
    return CodeParams(n, k_dim, d, mds, method, witness)


def _exhaustive(code, progress=False):
    """Walks every nonzero codeword as an F-combination of the basis."""
    GF = code.ctx.field.GF
    q = code.ctx.field.order
    dim = code.dimension
    n, k = code.length, code.k
    basis = code.basis
    best, witness = n + 1, None
    total = q ** dim
    logger.debug('Exhaustive distance over %d codewords.', total - 1)
    for start, stop in chunks(total - 1, progress=progress, desc='codewords'):
        indices = np.arange(start + 1, stop + 1, dtype=np.int64)
        coefficients = GF(base_digits(indices, q, dim))
        words = coefficients @ basis
        weights = words.view(np.ndarray).reshape(-1, k, n).any(axis=1).sum(axis=1)
        position = int(np.argmin(weights))
        if weights[position] < best:
            best = int(weights[position])
            witness = unflatten(words[position], k)
    return best, witness


def _check_witness(code, witness, d):
    """A distance witness must be a codeword of weight ``d``."""
    certify(weight(witness) == d, f'The witness does not have weight {d}.')
    certify(code.contains(witness), 'The witness is not a codeword.')


def _column_rank(code, subset_cap=SUBSET_TEST_CAP, progress=False):
    """Least ``w`` such that some ``w`` columns of a parity-check matrix are
    dependent, scanning subsets by size and then lexicographically."""
    n = code.length
    GF = code.ctx.field.GF
    dual = orthogonal_complement(code.words, n, 1, GF)
    if dual.shape[0] == 0:
        witness = GF.Zeros((n, 1))
        witness[0, 0] = 1
        return 1, witness
    parity = dual[:, :, 0]
    logger.debug('Column-rank distance with a %d x %d parity check.', *parity.shape)
    tested = 0
    sizes = tqdm(range(1, n + 1), desc='subset size', disable=not progress)
    for w in sizes:
        for cols in combinations(range(n), w):
            tested += 1
            if tested > subset_cap:
                raise Infeasible(
                    f'More than {subset_cap} column subsets would be rank-tested.'
                )
            block = parity[:, list(cols)]
            if rank(block) == w:
                continue
            null = block.null_space()
            witness = GF.Zeros((n, 1))
            witness[list(cols), 0] = null[0]
            _check_witness(code, witness, w)
            return w, witness
    raise Infeasible('No dependent column set was found.')


def min_distance(
    code,
    cap=EXHAUSTIVE_CAP,
    subset_cap=SUBSET_TEST_CAP,
    method=None,
    progress=False,
):
    """Exact minimum Hamming distance of a code.

    Codes with at most ``cap`` codewords are enumerated. Larger field codes use the
    column-rank method on a parity-check matrix built from the dual.

    Args:
        code (LinearCode): The code.
        cap (int, optional): Largest code enumerated word by word.
        subset_cap (int, optional): Largest number of column subsets tested.
        method (str, optional): Force ``'exhaustive'`` or ``'column_rank'``.
        progress (bool, optional): Show ``tqdm`` progress bars.

    Returns:
        CodeParams

    Raises:
        ZeroCode: If the code is zero.
        Infeasible: If no strategy fits within the caps.
    """
    if method is not None and method not in METHODS:
        raise ValueError(f'method must be one of {METHODS}, got {method}.')
    if code.is_zero():
        raise ZeroCode('The zero code has no minimum distance.')
    if method is None:
        if code.cardinality <= cap:
            method = 'exhaustive'
        elif code.is_field_code():
            method = 'column_rank'
        else:
            raise Infeasible(
                f'The code has {code.cardinality} words (cap {cap}) and column rank '
                'only runs on field codes.'
            )
    logger.debug('Minimum distance of %r by %s.', code, method)
    if method == 'exhaustive':
        d, witness = _exhaustive(code, progress=progress)
    else:
        if not code.is_field_code():
            raise NotFieldCode('Column rank only runs on field codes.')
        d, witness = _column_rank(code, subset_cap=subset_cap, progress=progress)
    return _params(code, d, method, witness)


def is_mds(params):
    """Whether ``d = n - k + 1``.

    Raises:
        NotFieldCode: If ``params`` belongs to a chain-ring code.
    """
    if not isinstance(params.k_dim, (int, np.integer)):
        raise NotFieldCode('MDS is only defined here for field codes.')
    return params.d + params.k_dim == params.n + 1


def singleton_defect(params):
    """``n - k + 1 - d``; zero exactly for MDS codes."""
    if not isinstance(params.k_dim, (int, np.integer)):
        raise NotFieldCode('The Singleton defect is only defined for field codes.')
    return params.n - params.k_dim + 1 - params.d
