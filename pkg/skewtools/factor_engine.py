import logging
from collections import namedtuple

import numpy as np

from .chain_ring import ChainRingElement
from .checks import certify, is_field_context, is_skew_poly
from .constants import FIELD_SCAN_CAP, QUADRATIC_SCAN_CAP
from .exceptions import (
    CharacteristicThree,
    FieldTooLarge,
    NoPsRoot,
    NonMonic,
    NotAUnit,
    NotCoprime,
    PreconditionViolated,
)
from .finite_field import (
    cube_root_field,
    frobenius,
    prime_field_generator,
    primitive_cube_root_of_unity,
    primitive_root_of_unity,
    pth_power_root,
    square_roots,
)
from .skew_poly import gcd_r, is_central, right_divmod
from .utils import chunks

logger = logging.getLogger(__name__)

FactorEntry = namedtuple(
    'FactorEntry', ['base', 'multiplicity', 'block', 'irreducible']
)


class CentralFactorization:
    """A factorization ``modulus = f_1^{k_1} ... f_t^{k_t}`` into central, pairwise
    coprime blocks.

    Args:
        modulus (SkewPoly): The central polynomial factored.
        factors (list of FactorEntry): ``base`` is ``f_i``, ``multiplicity`` is
            ``k_i`` and ``block`` is ``f_i^{k_i}``. ``irreducible`` is ``True``,
            ``False`` or ``None`` when undecided.
        case_tag (str): The case of the classification that produced it.
    """

    def __init__(self, modulus, factors, case_tag):
        self.modulus = modulus
        self.factors = list(factors)
        self.case_tag = case_tag

    @property
    def blocks(self):
        return [entry.block for entry in self.factors]

    @property
    def ctx(self):
        return self.modulus.ctx

    def __len__(self):
        return len(self.factors)

    def __repr__(self):
        bases = ', '.join(
            f'({entry.base})^{entry.multiplicity}' for entry in self.factors
        )
        return f'CentralFactorization({self.case_tag}: {bases})'

    def certificate(self):
        """Checks the product, the centrality of every block and pairwise
        coprimality (through ``mu`` when ``k > 1``).

        Returns:
            dict: ``{'product': bool, 'central': [bool, ...], 'coprime': bool}``.
        """
        product = self.ctx.one
        for block in self.blocks:
            product = product * block
        central = [bool(is_central(block)) for block in self.blocks]
        coprime = True
        blocks = self.blocks
        if self.ctx.k > 1:
            blocks = [self.ctx.project(block) for block in blocks]
        for i in range(len(blocks)):
            for j in range(i + 1, len(blocks)):
                if gcd_r(blocks[i], blocks[j]) != 1:
                    coprime = False
        return {
            'product': product == self.modulus,
            'central': central,
            'coprime': coprime,
        }

    def verify(self):
        """Raises unless ``certificate`` passes completely."""
        report = self.certificate()
        if not report['coprime']:
            raise NotCoprime(f'Blocks of {self!r} share a right divisor.')
        if not report['product'] or not all(report['central']):
            raise PreconditionViolated(
                f'{self!r} failed its certificate: {report}.'
            )
        return self


def ps_root_chain_ring(lam, s):
    """Returns the unique ``lam_0`` with ``lam_0^{p^s} = lam`` if it exists.

    In characteristic p, ``(sum a_i u^i)^{p^s} = sum a_i^{p^s} u^{i p^s}``, so a
    root exists exactly when ``lam`` is supported on u-indices divisible by
    ``p^s``.

    Args:
        lam (ChainRingElement): A unit.
        s (int): Exponent.

    Returns:
        ChainRingElement or None

    Raises:
        NotAUnit: If ``lam`` is not a unit.
    """
    if not lam.is_unit():
        raise NotAUnit(f'{lam} is not a unit.')
    ring = lam.ring
    step = ring.field.p ** s
    root = ring.zeros()
    for i in range(ring.k):
        c = lam.coeffs[i]
        if c == 0:
            continue
        if i % step:
            return None
        root[i // step] = pth_power_root(c, s)
    root = ChainRingElement(ring, root)
    certify(root ** step == lam, f'{root} is not a {step}-th root of {lam}.')
    return root


def cube_root_unit(lam0, cap=FIELD_SCAN_CAP):
    """Returns a cube root of a unit of R_k, or ``None``.

    The residue ``delta_1`` is the least-encoded cube root of ``mu(lam0)``; the
    higher coefficients solve ``3 delta_1^2 delta_n = lam_n - (lower products)``.

    Raises:
        CharacteristicThree: If ``p = 3``.
        NotAUnit: If ``lam0`` is not a unit.
    """
    ring = lam0.ring
    if ring.field.p == 3:
        raise CharacteristicThree('Cube roots are not lifted in characteristic 3.')
    if not lam0.is_unit():
        raise NotAUnit(f'{lam0} is not a unit.')
    roots = cube_root_field(lam0.coeffs[0], cap=cap, field=ring.field)
    if roots is None:
        return None
    return _lift_cube_root(lam0, roots[0])


def _lift_cube_root(lam0, residue_root):
    ring = lam0.ring
    delta = ring.element(residue_root)
    GF = ring.GF
    scale = (GF(3) * residue_root * residue_root) ** -1
    for n in range(1, ring.k):
        residual = lam0.coeffs[n] - (delta ** 3).coeffs[n]
        delta.coeffs[n] = residual * scale
    certify(delta ** 3 == lam0, f'{delta} is not a cube root of {lam0}.')
    return delta


def _check_twist_order(ctx, exponent):
    order = ctx.auto.order()
    if exponent % order:
        raise PreconditionViolated(
            f'|Theta| = {order} does not divide {exponent}.'
        )


def _fixed(ctx, poly):
    return all(ctx.auto(c) == c for c in poly.coefficients())


def _entry(base, multiplicity, cap):
    return FactorEntry(
        base, multiplicity, base ** multiplicity, _irreducible_flag(base, cap)
    )


def _irreducible_flag(base, cap):
    if base.degree == 1:
        return True
    try:
        return is_irreducible_small(base, cap=cap)
    except FieldTooLarge:
        return None


def factor_length3(lam, s, ctx, cap=FIELD_SCAN_CAP):
    """Factors ``x^{3p^s} - lam`` into central coprime blocks.

    With ``lam = lam_0^{p^s}`` the split depends on whether ``lam_0`` is a cube:
    three linear bases when it is and ``p = 1 mod 3`` or ``m`` is even, a linear
    and a quadratic base when ``p = 2 mod 3`` and ``m`` is odd, and the single
    base ``x^3 - lam_0`` otherwise. Every base is raised to ``p^s``.

    Args:
        lam (ChainRingElement or int): Unit with ``Theta(lam) = lam``.
        s (int): Exponent of ``p`` in the length.
        ctx (SkewPolyRing): The skew ring.
        cap (int, optional): Field scan cap for cube roots and irreducibility.

    Returns:
        CentralFactorization

    Raises:
        PreconditionViolated: If ``p = 3``, ``lam`` is not a Theta-fixed unit or
            ``|Theta|`` does not divide ``p^s``.
        NoPsRoot: If ``lam`` has no ``p^s``-th root.
    """
    ring, field = ctx.ring, ctx.field
    p, m = field.p, field.m
    lam = ring.element(lam)
    if p == 3:
        raise PreconditionViolated('p = 3 is excluded.')
    if not lam.is_unit():
        raise PreconditionViolated(f'lambda = {lam} is not a unit.')
    if ctx.auto(lam) != lam:
        raise PreconditionViolated(f'Theta moves lambda = {lam}.')
    multiplicity = p ** s
    _check_twist_order(ctx, multiplicity)
    lam0 = ps_root_chain_ring(lam, s)
    if lam0 is None:
        raise NoPsRoot(f'{lam} has no {multiplicity}-th root in R_{ring.k}.')
    x = ctx.x
    delta = _fixed_cube_root(lam0, ctx, cap)
    if delta is None:
        tag = 'non-cube'
        bases = [ctx.binomial(3, lam0)]
    elif p % 3 == 1 or m % 2 == 0:
        tag = 'cube, p=1 mod 3' if p % 3 == 1 else 'cube, p=2 mod 3, m even'
        omega = ring.element(primitive_cube_root_of_unity(field))
        bases = [x - delta, x - omega * delta, x - omega * omega * delta]
    else:
        tag = 'cube, p=2 mod 3, m odd'
        bases = [x - delta, ctx.poly([delta * delta, delta, 1])]
    for base in bases:
        if not _fixed(ctx, base):
            raise PreconditionViolated(f'Theta moves a coefficient of {base}.')
    logger.debug('factor_length3 branch: %s', tag)
    modulus = ctx.binomial(3 * multiplicity, lam)
    entries = [_entry(base, multiplicity, cap) for base in bases]
    return CentralFactorization(modulus, entries, tag).verify()


def _fixed_cube_root(lam0, ctx, cap):
    """The least-encoded Theta-fixed cube root of ``lam0``, or ``None`` if
    ``mu(lam0)`` is not a cube."""
    if lam0.ring.field.p == 3:
        raise CharacteristicThree('Cube roots are not lifted in characteristic 3.')
    roots = cube_root_field(lam0.coeffs[0], cap=cap, field=lam0.ring.field)
    if roots is None:
        return None
    lifted = [_lift_cube_root(lam0, r) for r in roots]
    fixed = [delta for delta in lifted if ctx.auto(delta) == delta]
    if not fixed:
        raise PreconditionViolated(f'Theta moves every cube root of {lam0}.')
    return fixed[0]


def factor_length6(lam, s, ctx, cap=FIELD_SCAN_CAP):
    """Factors ``x^{6p^s} - 1`` or ``x^{6p^s} + 1`` into central coprime blocks.

    Args:
        lam (int or ChainRingElement): ``1`` (cyclic) or ``-1`` (negacyclic).
        s (int): Exponent of ``p`` in the length.
        ctx (SkewPolyRing): The skew ring.
        cap (int, optional): Field scan cap for irreducibility flags.

    Returns:
        CentralFactorization

    Raises:
        PreconditionViolated: If ``p < 5``, ``lam`` is not ``+-1``, ``|Theta|`` does
            not divide ``p^s`` or Theta moves a root of unity the split needs.
    """
    ring, field = ctx.ring, ctx.field
    p, m = field.p, field.m
    lam = ring.element(lam)
    if p < 5:
        raise PreconditionViolated(f'p = {p} is excluded; p >= 5 is required.')
    if lam == 1:
        cyclic = True
    elif lam == -1:
        cyclic = False
    else:
        raise PreconditionViolated(f'lambda must be 1 or -1, got {lam}.')
    multiplicity = p ** s
    _check_twist_order(ctx, multiplicity)
    x = ctx.x

    def const(value):
        return ring.element(value)

    if cyclic and (p % 6 == 1 or m % 2 == 0):
        tag = 'cyclic, p=1 mod 6' if p % 6 == 1 else 'cyclic, m even'
        alpha = const(primitive_root_of_unity(field, 6))
        bases = [x - alpha ** j for j in [0, 3, 2, 4, 1, 5]]
    elif cyclic:
        tag = 'cyclic, p=5 mod 6, m odd'
        bases = [x - 1, x + 1, ctx.poly([1, -1, 1]), ctx.poly([1, 1, 1])]
    elif m % 2 == 0 or p % 12 == 1:
        tag = 'negacyclic, p=1 mod 12' if p % 12 == 1 else 'negacyclic, m even'
        # x -> alpha' x carries the cyclic roots onto those of x^6 + 1.
        shift = const(primitive_root_of_unity(field, 12))
        alpha = shift * shift
        bases = [x - shift * alpha ** j for j in [0, 3, 2, 4, 1, 5]]
    else:
        xi = field.element(prime_field_generator(p))
        if p % 12 == 5:
            tag = 'negacyclic, p=5 mod 12, m odd'
            alpha = const(xi ** ((p - 1) // 4))
            bases = [
                x - alpha,
                x + alpha,
                ctx.poly([-1, alpha, 1]),
                ctx.poly([-1, alpha.inverse(), 1]),
            ]
        elif p % 12 == 7:
            tag = 'negacyclic, p=7 mod 12, m odd'
            alpha = const(xi ** ((p - 1) // 6))
            bases = [
                ctx.poly([1, 0, 1]),
                ctx.poly([-alpha, 0, 1]),
                ctx.poly([-alpha.inverse(), 0, 1]),
            ]
        else:
            tag = 'negacyclic, p=11 mod 12, m odd'
            beta = const(square_roots(field.element(3))[0])
            bases = [
                ctx.poly([1, 0, 1]),
                ctx.poly([1, beta, 1]),
                ctx.poly([1, -beta, 1]),
            ]
    for base in bases:
        if not _fixed(ctx, base):
            raise PreconditionViolated(f'Theta moves a coefficient of {base}.')
    logger.debug('factor_length6 branch: %s', tag)
    modulus = ctx.binomial(6 * multiplicity, lam)
    entries = [_entry(base, multiplicity, cap) for base in bases]
    return CentralFactorization(modulus, entries, tag).verify()


def factor_binomial(n, lam, s, ctx, cap=FIELD_SCAN_CAP):
    """The single-block factorization ``x^{np^s} - lam = (x^n - lam_0)^{p^s}``.

    Raises:
        PreconditionViolated: If the block is not central.
        NoPsRoot: If ``lam`` has no ``p^s``-th root.
    """
    ring = ctx.ring
    lam = ring.element(lam)
    multiplicity = ring.field.p ** s
    lam0 = ps_root_chain_ring(lam, s)
    if lam0 is None:
        raise NoPsRoot(f'{lam} has no {multiplicity}-th root in R_{ring.k}.')
    base = ctx.binomial(n, lam0)
    if not _fixed(ctx, base):
        raise PreconditionViolated(f'Theta moves lambda_0 = {lam0}.')
    _check_twist_order(ctx, n * multiplicity)
    modulus = ctx.binomial(n * multiplicity, lam)
    entry = FactorEntry(base, multiplicity, base ** multiplicity, None)
    return CentralFactorization(modulus, [entry], 'generic').verify()


def _field_coefficients(f):
    return [f.coeffs[i, 0] for i in range(len(f.coeffs))]


def right_root_mask(f, candidates):
    """Vectorised right-root test over field candidates.

    Args:
        f (SkewPoly): Polynomial with field coefficients.
        candidates (FieldArray): 1-D array of field elements.

    Returns:
        ndarray of bool: ``True`` where ``x - a`` right-divides ``f``.
    """
    e = f.ctx.auto.theta.e
    coeffs = _field_coefficients(f)
    GF = type(candidates)
    total = GF.Zeros(candidates.shape)
    norm = GF.Ones(candidates.shape)
    twisted = candidates
    for i, c in enumerate(coeffs):
        if i:
            norm = twisted * norm
            twisted = frobenius(twisted, e)
        total = total + c * norm
    return np.asarray(total.view(np.ndarray) == 0)


def left_root_mask(f, candidates):
    """Vectorised left-root test: ``True`` where ``x - a`` left-divides ``f``."""
    e = f.ctx.auto.theta.e
    coeffs = _field_coefficients(f)
    GF = type(candidates)
    total = GF.Zeros(candidates.shape)
    rho = GF.Ones(candidates.shape)
    for i, c in enumerate(coeffs):
        if i:
            rho = candidates * frobenius(rho, -e)
        total = total + rho * frobenius(c, -e * i)
    return np.asarray(total.view(np.ndarray) == 0)


def _scan_roots(f, mask, cap, first_only, progress):
    field = f.ctx.field
    if field.order > cap:
        raise FieldTooLarge(
            f'Scanning {field.order} field elements exceeds the cap {cap}.'
        )
    logger.debug('Scanning %d field elements for roots.', field.order)
    found = []
    for start, stop in chunks(field.order, progress=progress, desc='roots'):
        chunk = field.elements_in_order(start, stop)
        hits = chunk[mask(f, chunk)]
        found.extend(hits[i] for i in range(hits.size))
        if first_only and found:
            break
    return found


@is_field_context(0)
def linear_right_factors(f, cap=FIELD_SCAN_CAP, progress=False):
    """All ``a`` with ``x - a`` a right divisor of ``f``, in encoding order.

    Args:
        f (SkewPoly): Polynomial with field coefficients (``k = 1``).
        cap (int, optional): Largest field that may be scanned.
        progress (bool, optional): Show a progress bar.

    Returns:
        list of ChainRingElement

    Raises:
        FieldTooLarge: If the field has more than ``cap`` elements.
    """
    ring = f.ctx.ring
    roots = _scan_roots(f, right_root_mask, cap, False, progress)
    return [ring.element(r) for r in roots]


@is_field_context(0)
def linear_left_factors(f, cap=FIELD_SCAN_CAP, progress=False):
    ring = f.ctx.ring
    roots = _scan_roots(f, left_root_mask, cap, False, progress)
    return [ring.element(r) for r in roots]


@is_field_context(0)
def peel_linear_factorization(f, cap=FIELD_SCAN_CAP, progress=False):
    """Splits a monic ``f`` into monic linear factors by peeling right roots.

    At every stage the least-encoded right root ``a`` is extracted and the
    quotient of the right division by ``x - a`` is peeled further.

    Returns:
        list of SkewPoly or None: Factors whose left-to-right product is ``f``,
        or ``None`` if some stage has no right root.

    Raises:
        NonMonic: If ``f`` is not monic.
        FieldTooLarge: If the field has more than ``cap`` elements.
    """
    if not f.is_monic():
        raise NonMonic(f'{f} is not monic.')
    ctx = f.ctx
    factors = []
    current = f
    while current.degree > 0:
        roots = _scan_roots(current, right_root_mask, cap, True, progress)
        if not roots:
            return None
        linear = ctx.x - ctx.ring.element(roots[0])
        quotient, remainder = right_divmod(current, linear)
        certify(remainder.is_zero(), f'{linear} does not right-divide {current}.')
        current = quotient
        factors.insert(0, linear)
    _check_product(factors, f)
    return factors


def _check_product(factors, f):
    product = f.ctx.one
    for factor in factors:
        product = product * factor
    certify(product == f, f'The peeled factors do not multiply back to {f}.')


def _batch_right_remainder(f, tails, e):
    """Right remainders of ``f`` modulo the monic ``x^d + sum h_j x^j`` for a batch
    of tails ``h_j``, each a 1-D field array.

    The remainders of ``x^i`` follow ``R'_0 = -theta(R_{d-1}) h_0`` and
    ``R'_j = theta(R_{j-1}) - theta(R_{d-1}) h_j``.
    """
    coeffs = _field_coefficients(f)
    d = len(tails)
    GF = type(tails[0])
    size = tails[0].shape
    state = [GF.Zeros(size) for _ in range(d)]
    state[0] = GF.Ones(size)
    result = [GF.Zeros(size) for _ in range(d)]
    for i, c in enumerate(coeffs):
        if i:
            twisted = [frobenius(r, e) for r in state]
            top = twisted[-1]
            state = [-top * tails[0]] + [
                twisted[j - 1] - top * tails[j] for j in range(1, d)
            ]
        for j in range(d):
            result[j] = result[j] + c * state[j]
    return result


@is_field_context(0)
def quadratic_right_factors(
    f, cap=QUADRATIC_SCAN_CAP, first_only=False, progress=False
):
    """Monic quadratics ``x^2 + b x + c`` that right-divide ``f``.

    Candidates are visited in the order of ``(c, b)`` encodings.

    Returns:
        list of SkewPoly

    Raises:
        FieldTooLarge: If there are more than ``cap`` candidates.
    """
    ctx = f.ctx
    field = ctx.field
    q = field.order
    total = q * q
    if total > cap:
        raise FieldTooLarge(f'{total} quadratic candidates exceed the cap {cap}.')
    logger.debug('Scanning %d monic quadratics.', total)
    e = ctx.auto.theta.e
    found = []
    for start, stop in chunks(total, progress=progress, desc='quadratics'):
        index = np.arange(start, stop, dtype=np.int64)
        c = field.decode_keys(index // q)
        b = field.decode_keys(index % q)
        r0, r1 = _batch_right_remainder(f, [c, b], e)
        hits = np.flatnonzero(
            (r0.view(np.ndarray) == 0) & (r1.view(np.ndarray) == 0)
        )
        for h in hits:
            found.append(ctx.poly([c[h], b[h], 1]))
        if first_only and found:
            break
    return found


@is_field_context(0)
def peel_quadratic_factorization(f, cap=QUADRATIC_SCAN_CAP, progress=False):
    """Splits a monic ``f`` into monic quadratic factors (with at most one linear
    factor left over) by peeling right divisors.

    Returns:
        list of SkewPoly or None
    """
    if not f.is_monic():
        raise NonMonic(f'{f} is not monic.')
    factors = []
    current = f
    while current.degree > 1:
        candidates = quadratic_right_factors(
            current, cap=cap, first_only=True, progress=progress
        )
        if not candidates:
            return None
        quotient, remainder = right_divmod(current, candidates[0])
        certify(
            remainder.is_zero(), f'{candidates[0]} does not right-divide {current}.'
        )
        current = quotient
        factors.insert(0, candidates[0])
    if current.degree == 1:
        factors.insert(0, current)
    _check_product(factors, f)
    return factors


@is_skew_poly(0)
def is_irreducible_small(f, cap=FIELD_SCAN_CAP):
    """Irreducibility of a polynomial of degree at most 3.

    Over the field, such a polynomial is reducible exactly when it has a linear
    left or right factor. Over R_k the residue polynomial is tested.

    Returns:
        bool or None: ``None`` when the degree exceeds 3.
    """
    ctx = f.ctx
    if ctx.k > 1:
        return is_irreducible_small(ctx.project(f), cap=cap)
    if f.degree > 3:
        return None
    if f.degree < 1:
        return False
    if f.degree == 1:
        return True
    if _scan_roots(f, right_root_mask, cap, True, False):
        return False
    return not _scan_roots(f, left_root_mask, cap, True, False)

