"""Linear algebra over F_{p^m} and R_k for codes of length N.

Words over R_k are arrays of shape ``(N, k)``. For F-linear algebra they are
flattened layer-major: column ``l N + i`` holds the ``u^l`` part of coordinate ``i``.
"""
import logging

import numpy as np

from .chain_ring import ring_multiply

logger = logging.getLogger(__name__)


def flatten(words):
    """``(..., N, k)`` words to ``(..., k N)`` layer-major rows."""
    words = words.copy()
    n, k = words.shape[-2:]
    moved = np.swapaxes(words.view(np.ndarray), -1, -2).reshape(
        words.shape[:-2] + (k * n,)
    )
    return type(words)(moved)


def unflatten(rows, k):
    """Inverse of ``flatten``."""
    n = rows.shape[-1] // k
    split = rows.view(np.ndarray).reshape(rows.shape[:-1] + (k, n))
    return type(rows)(np.swapaxes(split, -1, -2).copy())


def row_basis(matrix):
    """Reduced row echelon basis of the row space (zero rows dropped)."""
    if matrix.shape[0] == 0:
        return matrix.copy()
    rref = matrix.row_reduce()
    nonzero = rref.view(np.ndarray).any(axis=1)
    return rref[nonzero]


def rank(matrix):
    if matrix.shape[0] == 0:
        return 0
    return int(np.linalg.matrix_rank(matrix))


def pivot_columns(rref):
    """First nonzero column of every row of an echelon matrix."""
    return [int(np.flatnonzero(row)[0]) for row in rref.view(np.ndarray)]


def in_row_space(basis, vector):
    """Whether ``vector`` lies in the row space of ``basis``."""
    if basis.shape[0] == 0:
        return not vector.view(np.ndarray).any()
    stacked = type(basis)(
        np.vstack([basis.view(np.ndarray), vector.view(np.ndarray)])
    )
    return rank(stacked) == rank(basis)


def same_row_space(a, b):
    return np.array_equal(
        row_basis(a).view(np.ndarray), row_basis(b).view(np.ndarray)
    )


def element_with_prefix(rref, start, stop, target):
    """An element of the row space that vanishes on columns ``[0, start)`` and
    equals ``target`` on ``[start, stop)``.

    Args:
        rref (FieldArray): Reduced row echelon basis.
        start, stop (int): Column window.
        target (FieldArray): Values wanted on the window.

    Returns:
        FieldArray or None: The element, or ``None`` when no element matches.
    """
    GF = type(rref)
    out = GF.Zeros(rref.shape[1])
    for row, pivot in zip(rref, pivot_columns(rref)):
        if start <= pivot < stop:
            out = out + target[pivot - start] * row
    if not np.array_equal(out[start:stop].view(np.ndarray), target.view(np.ndarray)):
        return None
    return out


def inner_product_equations(basis_words):
    """The F-linear equations of ``<c, v> = 0`` in ``R_k`` for every basis word
    ``c``, one equation per word and layer.

    The ``u^t`` part of ``<c, v>`` is ``sum_i sum_{b <= t} c_i^{(t-b)} v_i^{(b)}``.
    """
    count, n, k = basis_words.shape
    GF = type(basis_words)
    equations = GF.Zeros((count * k, n * k))
    for t in range(k):
        for b in range(t + 1):
            equations[t::k, b * n : (b + 1) * n] = basis_words[:, :, t - b]
    return equations


def orthogonal_complement(basis_words, n, k, GF):
    """F-basis (as words) of ``{v : <c, v> = 0 for all c}``."""
    if basis_words.shape[0] == 0:
        return unflatten(GF.Identity(n * k), k)
    equations = inner_product_equations(basis_words)
    null = equations.null_space()
    return unflatten(row_basis(null), k)


def chain_echelon(words):
    """Standard form of the R_k-module spanned by ``words``.

    Pivots are chosen column by column with minimal u-adic valuation and
    normalised to ``u^v``; ``u^{k-v}`` times each pivot row goes back into the pool
    since it vanishes on the pivot column.

    Args:
        words (FieldArray): Generators, shape ``(count, N, k)``.

    Returns:
        list of tuple: ``(column, valuation, row)`` for every pivot. The module
        has ``q^{sum (k - v)}`` elements.
    """
    if words.shape[0] == 0:
        return []
    n, k = words.shape[1:]
    GF = type(words)
    pool = [w.copy() for w in words if w.view(np.ndarray).any()]
    pivots = []
    for col in range(n):
        best, best_val = None, k
        for idx, w in enumerate(pool):
            nonzero = np.flatnonzero(w[col].view(np.ndarray))
            if nonzero.size and nonzero[0] < best_val:
                best, best_val = idx, int(nonzero[0])
        if best is None:
            continue
        row = pool.pop(best)
        entry = row[col]
        unit = GF.Zeros(k)
        unit[: k - best_val] = entry[best_val:]
        row = ring_multiply(_unit_inverse(unit), row)
        rest = []
        for w in pool:
            quotient = GF.Zeros(k)
            quotient[: k - best_val] = w[col][best_val:]
            w = w - ring_multiply(quotient, row)
            if w.view(np.ndarray).any():
                rest.append(w)
        shift = GF.Zeros(k)
        if best_val > 0:
            shift[k - best_val] = 1
            wrapped = ring_multiply(shift, row)
            if wrapped.view(np.ndarray).any():
                rest.append(wrapped)
        pool = rest
        pivots.append((col, best_val, row))
    return pivots


def _unit_inverse(coeffs):
    k = coeffs.shape[0]
    inv0 = coeffs[0] ** -1
    step = -(coeffs * inv0)
    step[0] = 0
    term = type(coeffs).Zeros(k)
    term[0] = 1
    total = term.copy()
    for _ in range(1, k):
        term = ring_multiply(term, step)
        total = total + term
    return total * inv0


def log_cardinality(pivots, k):
    """``log_q |C|`` from chain-echelon pivots."""
    return sum(k - v for _, v, _ in pivots)


def span_words(words):
    """F-basis words of the F-span of ``words``."""
    return unflatten(row_basis(flatten(words)), words.shape[-1])
