"""The skew polynomial ring R_k[x; Theta] with ``x a = Theta(a) x``."""
import logging

import numpy as np

from .chain_ring import ChainRingElement, RingAutomorphism, ring_multiply
from .checks import certify, is_skew_poly, same_context
from .constants import SKEW_SYMBOL
from .exceptions import (
    MismatchedContext,
    MismatchedRing,
    NonMonic,
    NonUnitLeadingCoeff,
    NonUnitPivot,
    NotReduced,
    ZeroPolynomial,
)
from .utils import binary_power

logger = logging.getLogger(__name__)

# Degree of the zero polynomial.
NEG_INF = float('-inf')


def _trim(coeffs):
    rows = np.flatnonzero(coeffs.view(np.ndarray).any(axis=-1))
    if rows.size == 0:
        return coeffs[:0].copy()
    return coeffs[: rows[-1] + 1].copy()


class SkewPolyRing:
    """The ring R_k[x; Theta].

    Args:
        ring (ChainRingParams): Coefficient ring.
        automorphism (RingAutomorphism, optional): The twist. Defaults to the
            identity, i.e. the commutative polynomial ring.
    """

    def __init__(self, ring, automorphism=None):
        if automorphism is None:
            automorphism = RingAutomorphism(ring)
        if automorphism.ring != ring:
            raise MismatchedRing('The automorphism acts on a different ring.')
        self.ring = ring
        self.auto = automorphism

    @property
    def field(self):
        return self.ring.field

    @property
    def k(self):
        return self.ring.k

    def __eq__(self, other):
        return (
            isinstance(other, SkewPolyRing)
            and self.ring == other.ring
            and self.auto == other.auto
        )

    def __hash__(self):
        return hash((self.ring, self.auto))

    def __repr__(self):
        return f'SkewPolyRing(ring={self.ring!r}, auto={self.auto!r})'

    def poly(self, coeffs):
        """Builds a skew polynomial.

        Args:
            coeffs: A ``SkewPoly`` of this ring, a field array of shape
                ``(n, k)`` (or ``(n,)`` when ``k = 1``), a list of ring-element
                values ``c_0, c_1, ...``, or a single constant.

        Returns:
            SkewPoly
        """
        if isinstance(coeffs, SkewPoly):
            if coeffs.ctx != self:
                raise MismatchedContext(f'{coeffs!r} belongs to another ring.')
            return coeffs
        if isinstance(coeffs, self.field.GF) and coeffs.ndim >= 1:
            if coeffs.ndim == 1:
                if self.k != 1:
                    raise ValueError('A 1-D coefficient array needs k = 1.')
                coeffs = coeffs.reshape(-1, 1)
            return SkewPoly(self, coeffs)
        if not isinstance(coeffs, (list, tuple)):
            coeffs = [coeffs]
        array = self.ring.zeros(len(coeffs))
        for i, c in enumerate(coeffs):
            array[i] = self.ring.element(c).coeffs
        return SkewPoly(self, array)

    @property
    def zero(self):
        return SkewPoly(self, self.ring.zeros(0))

    @property
    def one(self):
        return self.poly([1])

    @property
    def x(self):
        return self.poly([0, 1])

    def monomial(self, c, i):
        """Returns ``c x^i``."""
        coeffs = self.ring.zeros(i + 1)
        coeffs[i] = self.ring.element(c).coeffs
        return SkewPoly(self, coeffs)

    def binomial(self, n, lam):
        """Returns ``x^n - lam``."""
        coeffs = self.ring.zeros(n + 1)
        coeffs[n] = 1
        coeffs[0] = coeffs[0] - self.ring.element(lam).coeffs
        return SkewPoly(self, coeffs)

    def random(self, degree, seed=None, monic=False):
        """Random polynomial of exact degree ``degree``."""
        rng = np.random.default_rng(seed)
        coeffs = self.field.GF.Random((degree + 1, self.k), seed=rng)
        if monic:
            coeffs[degree] = self.ring.one.coeffs
        else:
            coeffs[degree, 0] = self.field.GF.Random(low=1, seed=rng)
        return SkewPoly(self, coeffs)

    def residue(self):
        """The skew ring F_{p^m}[x; theta] reached by ``mu``."""
        return SkewPolyRing(self.ring.residue_ring(), self.auto.residue())

    def project(self, f):
        """Applies ``mu`` to every coefficient of ``f``."""
        return SkewPoly(self.residue(), f.coeffs[:, :1])

    def lift(self, f):
        """Embeds a residue-field polynomial with its coefficients in layer 0."""
        coeffs = self.ring.zeros(len(f.coeffs))
        coeffs[:, 0] = f.coeffs[:, 0]
        return SkewPoly(self, coeffs)


class SkewPoly:
    """A polynomial ``c_0 + c_1 x + ... + c_n x^n`` of R_k[x; Theta].

    ``coeffs`` is a field array of shape ``(n + 1, k)``: row ``i`` holds the
    u-adic coefficients of ``c_i``. Trailing zero rows are trimmed, so the zero
    polynomial has shape ``(0, k)`` and degree ``NEG_INF``.
    """

    def __init__(self, ctx, coeffs):
        self.ctx = ctx
        self.coeffs = _trim(coeffs)

    @property
    def degree(self):
        n = len(self.coeffs)
        return n - 1 if n else NEG_INF

    def is_zero(self):
        return len(self.coeffs) == 0

    def coefficient(self, i):
        if 0 <= i < len(self.coeffs):
            return ChainRingElement(self.ctx.ring, self.coeffs[i].copy())
        return self.ctx.ring.zero

    def coefficients(self):
        return [self.coefficient(i) for i in range(len(self.coeffs))]

    def leading_coefficient(self):
        if self.is_zero():
            raise ZeroPolynomial('The zero polynomial has no leading coefficient.')
        return self.coefficient(self.degree)

    def is_monic(self):
        return not self.is_zero() and self.leading_coefficient() == 1

    def is_constant(self):
        return len(self.coeffs) <= 1

    def vector(self, length):
        """Coefficient rows zero-padded to ``length``."""
        if len(self.coeffs) > length:
            raise NotReduced(f'{self} has degree {self.degree} >= {length}.')
        out = self.ctx.ring.zeros(length)
        out[: len(self.coeffs)] = self.coeffs
        return out

    def layer(self, i):
        """The residue-field polynomial formed by the ``u^i`` parts of the
        coefficients."""
        return SkewPoly(self.ctx.residue(), self.coeffs[:, i : i + 1])

    def scale_left(self, c):
        """Returns ``c f``."""
        c = self.ctx.ring.element(c)
        return SkewPoly(self.ctx, ring_multiply(c.coeffs, self.coeffs))

    def _coerce(self, other):
        if isinstance(other, SkewPoly):
            if other.ctx != self.ctx:
                raise MismatchedContext(
                    f'Polynomials live in different skew rings: {self.ctx!r} and '
                    f'{other.ctx!r}.'
                )
            return other
        return self.ctx.poly(other)

    def _combine(self, other, sign):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a, b = self.vector(n), other.vector(n)
        return SkewPoly(self.ctx, a + b if sign > 0 else a - b)

    def __add__(self, other):
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, -1)

    def __rsub__(self, other):
        return -self + other

    def __neg__(self):
        return SkewPoly(self.ctx, -self.coeffs)

    def __mul__(self, other):
        return sp_mul(self, self._coerce(other))

    def __rmul__(self, other):
        return self.scale_left(other)

    def __pow__(self, exponent):
        return sp_pow(self, exponent)

    def __mod__(self, other):
        return right_divmod(self, self._coerce(other))[1]

    def __eq__(self, other):
        if not isinstance(other, SkewPoly):
            try:
                other = self.ctx.poly(other)
            except (MismatchedRing, MismatchedContext, TypeError, ValueError):
                return False
        return self.ctx == other.ctx and bool(
            np.array_equal(self.coeffs.view(np.ndarray), other.coeffs.view(np.ndarray))
        )

    def __hash__(self):
        return hash((self.ctx, self.coeffs.view(np.ndarray).tobytes()))

    def __repr__(self):
        return f'SkewPoly({self})'

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coefficients()):
            if c.is_zero():
                continue
            text = str(c)
            if i == 0:
                terms.append(text)
                continue
            power = SKEW_SYMBOL if i == 1 else f'{SKEW_SYMBOL}^{i}'
            if text == '1':
                terms.append(power)
            elif ' + ' in text:
                terms.append(f'({text})*{power}')
            else:
                terms.append(f'{text}*{power}')
        return ' + '.join(terms) if terms else '0'


class CentralityReport:
    """Outcome of ``is_central``; truthy exactly when the polynomial is central.

    ``condition`` names the violated requirement: 1 for a coefficient moved by
    Theta, 2 for a coefficient that fails ``a_i r = Theta^i(r) a_i`` on a ring
    generator ``r``, 3 for ``Theta^n`` not being the identity.
    """

    def __init__(self, central, condition=None, witness=None):
        self.central = central
        self.condition = condition
        self.witness = witness

    def __bool__(self):
        return self.central

    def __repr__(self):
        if self.central:
            return 'CentralityReport(central=True)'
        return (
            f'CentralityReport(central=False, condition={self.condition}, '
            f'witness={self.witness!r})'
        )


@same_context([0, 1])
def sp_mul(f, g):
    """Skew product with ``(a x^i)(b x^j) = a Theta^i(b) x^{i+j}``.

    Args:
        f, g (SkewPoly): Factors from the same skew ring.

    Returns:
        SkewPoly: ``f g``.

    Raises:
        MismatchedContext: If the factors live in different skew rings.
    """
    ctx = f.ctx
    if f.is_zero() or g.is_zero():
        return ctx.zero
    n, m = len(f.coeffs), len(g.coeffs)
    out = ctx.ring.zeros(n + m - 1)
    twisted = g.coeffs
    for i in range(n):
        out[i : i + m] = out[i : i + m] + ring_multiply(f.coeffs[i], twisted)
        if i + 1 < n:
            twisted = ctx.auto.apply_array(twisted)
    return SkewPoly(ctx, out)


@is_skew_poly(0)
def sp_pow(f, exponent):
    if exponent < 0:
        raise ValueError(f'exponent must be non-negative, got {exponent}.')
    return binary_power(f, int(exponent), sp_mul, f.ctx.one)


def _checked_divisor(f):
    if f.is_zero():
        raise ZeroPolynomial('Division by the zero polynomial.')
    lc = f.leading_coefficient()
    if not lc.is_unit():
        raise NonUnitLeadingCoeff(f'The leading coefficient {lc} is not a unit.')
    return lc


@same_context([0, 1])
def right_divmod(g, f):
    """Right division ``g = q f + r`` with ``r = 0`` or ``deg r < deg f``.

    Args:
        g (SkewPoly): Dividend.
        f (SkewPoly): Divisor with a unit leading coefficient.

    Returns:
        tuple of SkewPoly: ``(q, r)``.

    Raises:
        NonUnitLeadingCoeff: If the leading coefficient of ``f`` is not a unit.
        ZeroPolynomial: If ``f`` is zero.
    """
    ctx, ring = f.ctx, f.ctx.ring
    _checked_divisor(f)
    df = f.degree
    if g.is_zero() or g.degree < df:
        return ctx.zero, g
    steps = g.degree - df + 1
    twisted = [f.coeffs]
    for _ in range(1, steps):
        twisted.append(ctx.auto.apply_array(twisted[-1]))
    r = g.coeffs.copy()
    q = ring.zeros(steps)
    for d in reversed(range(steps)):
        top = ChainRingElement(ring, r[d + df].copy())
        if top.is_zero():
            continue
        c = top * ChainRingElement(ring, twisted[d][df].copy()).inverse()
        q[d] = c.coeffs
        r[d : d + df + 1] = r[d : d + df + 1] - ring_multiply(c.coeffs, twisted[d])
    return SkewPoly(ctx, q), SkewPoly(ctx, r)


@same_context([0, 1])
def left_divmod(g, f):
    """Left division ``g = f q + r`` with ``r = 0`` or ``deg r < deg f``.

    Raises:
        NonUnitLeadingCoeff: If the leading coefficient of ``f`` is not a unit.
        ZeroPolynomial: If ``f`` is zero.
    """
    ctx, ring = f.ctx, f.ctx.ring
    lc_inv = _checked_divisor(f).inverse()
    df = f.degree
    if g.is_zero() or g.degree < df:
        return ctx.zero, g
    steps = g.degree - df + 1
    undo = ctx.auto.power(-df)
    r = g.coeffs.copy()
    q = ring.zeros(steps)
    for d in reversed(range(steps)):
        top = ChainRingElement(ring, r[d + df].copy())
        if top.is_zero():
            continue
        c = undo(lc_inv * top)
        q[d] = c.coeffs
        twisted = ring.zeros(df + 1)
        current = c
        for i in range(df + 1):
            twisted[i] = current.coeffs
            current = ctx.auto(current)
        r[d : d + df + 1] = r[d : d + df + 1] - ring_multiply(f.coeffs, twisted)
    return SkewPoly(ctx, q), SkewPoly(ctx, r)


@same_context([0, 1])
def gcd_r_extended(f, g):
    """Extended right Euclidean algorithm.

    Args:
        f, g (SkewPoly): Polynomials from the same skew ring.

    Returns:
        tuple of SkewPoly: ``(d, a, b)`` with ``d`` the monic greatest common right
        divisor and ``a f + b g = d``.

    Raises:
        NonUnitPivot: If a remainder in the chain has a non-unit leading
            coefficient (possible only over R_k with ``k > 1``).
    """
    ctx = f.ctx
    r0, r1 = f, g
    s0, s1 = ctx.one, ctx.zero
    t0, t1 = ctx.zero, ctx.one
    while not r1.is_zero():
        try:
            q, r = right_divmod(r0, r1)
        except NonUnitLeadingCoeff as err:
            raise NonUnitPivot(
                f'Euclidean step stalled on {r1}: {err.message}'
            ) from err
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    lc = r0.leading_coefficient()
    if not lc.is_unit():
        raise NonUnitPivot(f'The right gcd {r0} has non-unit leading coefficient.')
    inv = lc.inverse()
    d, a, b = inv * r0, inv * s0, inv * t0
    certify(a * f + b * g == d, f'Bezout coefficients of {f} and {g} fail.')
    return d, a, b


def gcd_r(f, g):
    return gcd_r_extended(f, g)[0]


@is_skew_poly(0)
def is_central(f):
    """Decides whether a monic polynomial lies in the centre of R_k[x; Theta].

    A monic ``f`` of degree ``n`` is central exactly when its coefficients are
    Theta-fixed, ``a_i r = Theta^i(r) a_i`` for every ring element ``r`` and
    ``Theta^n`` is the identity. The second condition is checked on the ring
    generators only.

    Args:
        f (SkewPoly): Monic polynomial.

    Returns:
        CentralityReport

    Raises:
        NonMonic: If ``f`` is not monic.
    """
    if not f.is_monic():
        raise NonMonic(f'{f} is not monic.')
    ctx = f.ctx
    auto = ctx.auto
    if auto.is_identity():
        return CentralityReport(True)
    coeffs = f.coefficients()
    n = f.degree
    for i, a in enumerate(coeffs):
        if auto(a) != a:
            return CentralityReport(False, 1, i)
    gens = ctx.ring.generators()
    power = RingAutomorphism(ctx.ring)
    for i, a in enumerate(coeffs[:-1]):
        for r in gens:
            if a * r != power(r) * a:
                return CentralityReport(False, 2, (i, r))
        power = power.compose(auto)
    if not auto.power(n).is_identity():
        return CentralityReport(False, 3, n)
    return CentralityReport(True)


@same_context([0, 1])
def commutes(f, g):
    return f * g == g * f


@is_skew_poly(0)
def reciprocal(f):
    """Twisted reversal ``f* = sum Theta(b_{r-i}) x^i`` of ``f = sum b_i x^i``.

    Raises:
        ZeroPolynomial: If ``f`` is zero.
    """
    if f.is_zero():
        raise ZeroPolynomial('The zero polynomial has no reciprocal.')
    return SkewPoly(f.ctx, f.ctx.auto.apply_array(f.coeffs[::-1].copy()))


@is_skew_poly(0)
def dual_reciprocal(h, length):
    """Coordinate twist ``w(h)_i = Theta^i(h_{N-1-i})`` for ``deg h < N``.

    For a code ``C`` in ``R_k[x; Theta]/(x^N - lam)`` with ``Theta(lam) = lam`` the
    image of the right annihilator of ``C`` under this map is exactly ``C^perp``.

    Args:
        h (SkewPoly): Polynomial of degree below ``length``.
        length (int): Code length ``N``.

    Returns:
        SkewPoly
    """
    ctx = h.ctx
    reversed_rows = h.vector(length)[::-1].copy()
    out = ctx.ring.zeros(length)
    for i in range(length):
        out[i] = reversed_rows[i]
        reversed_rows = ctx.auto.apply_array(reversed_rows)
    return SkewPoly(ctx, out)


@is_skew_poly(0)
def undo_dual_reciprocal(w, length):
    """Inverse of ``dual_reciprocal``: ``h_{N-1-i} = Theta^{-i}(w_i)``."""
    ctx = w.ctx
    rows = w.vector(length)
    out = ctx.ring.zeros(length)
    inverse = ctx.auto.inverse()
    for i in range(length):
        out[length - 1 - i] = rows[i]
        rows = inverse.apply_array(rows)
    return SkewPoly(ctx, out)


@is_skew_poly(0)
def eval_right_remainder(f, a):
    """Remainder of ``f`` on right division by ``x - a``.

    Uses the norms ``N_0 = 1``, ``N_i = Theta^{i-1}(a) N_{i-1}``; the remainder is
    ``sum c_i N_i``.
    """
    ctx = f.ctx
    a = ctx.ring.element(a)
    total = ctx.ring.zero
    norm = ctx.ring.one
    twisted = a
    for i, c in enumerate(f.coefficients()):
        if i:
            norm = twisted * norm
            twisted = ctx.auto(twisted)
        total = total + c * norm
    return total


@is_skew_poly(0)
def eval_left_remainder(f, a):
    """Remainder of ``f`` on left division by ``x - a``.

    Writing ``c_i x^i = x^i Theta^{-i}(c_i)``, the remainder is
    ``sum rho_i Theta^{-i}(c_i)`` with ``rho_0 = 1`` and
    ``rho_i = a Theta^{-1}(rho_{i-1})``.
    """
    ctx = f.ctx
    a = ctx.ring.element(a)
    inverse = ctx.auto.inverse()
    total = ctx.ring.zero
    rho = ctx.ring.one
    undo = RingAutomorphism(ctx.ring)
    for i, c in enumerate(f.coefficients()):
        if i:
            rho = a * inverse(rho)
        total = total + rho * undo(c)
        undo = undo.compose(inverse)
    return total
