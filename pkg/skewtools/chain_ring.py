"""Arithmetic in the finite chain ring R_k = F_{p^m}[u]/(u^k) and its automorphisms."""
import logging
from itertools import product

import galois
import numpy as np

from .constants import AUTOMORPHISM_CAP, CHAIN_SYMBOL, RING_OPS
from .exceptions import CapExceeded, KTooSmall, MismatchedRing, NotAUnit
from .finite_field import FieldAutomorphism, frobenius
from .utils import binary_power

logger = logging.getLogger(__name__)


def _is_scalar(value):
    return isinstance(
        value, (ChainRingElement, int, np.integer, galois.FieldArray, list, tuple)
    )


def ring_multiply(a, b):
    """Multiplies coefficient arrays of R_k elements, truncating at ``u^k``.

    Args:
        a, b (FieldArray): Arrays of shape ``(..., k)`` that broadcast together.

    Returns:
        FieldArray: Elementwise products, shape ``(..., k)``.
    """
    k = a.shape[-1]
    out = type(a).Zeros(np.broadcast_shapes(a.shape, b.shape))
    for i in range(k):
        out[..., i:] = out[..., i:] + a[..., i : i + 1] * b[..., : k - i]
    return out


class ChainRingParams:
    """The chain ring R_k over a finite field.

    Args:
        field (FieldParams): Residue field F_{p^m}.
        k (int, optional): Nilpotency index of ``u``. Defaults to 1, in which case
            the ring is the field itself.
    """

    def __init__(self, field, k=1):
        k = int(k)
        if k < 1:
            raise ValueError(f'k must be at least 1, got {k}.')
        self.field = field
        self.k = k

    @property
    def GF(self):
        return self.field.GF

    @property
    def size(self):
        return self.field.order ** self.k

    def __eq__(self, other):
        return (
            isinstance(other, ChainRingParams)
            and self.field == other.field
            and self.k == other.k
        )

    def __hash__(self):
        return hash((self.field, self.k))

    def __repr__(self):
        return f'ChainRingParams(field={self.field!r}, k={self.k})'

    def zeros(self, shape=()):
        if isinstance(shape, int):
            shape = (shape,)
        return self.GF.Zeros(tuple(shape) + (self.k,))

    def element(self, value):
        """Builds a ring element.

        Args:
            value: A ``ChainRingElement`` of this ring, an integer or field element
                (read as a constant), or a sequence of at most ``k`` field
                coefficients of ``1, u, u^2, ...``.

        Returns:
            ChainRingElement
        """
        if isinstance(value, ChainRingElement):
            if value.ring != self:
                raise MismatchedRing(f'{value!r} does not belong to {self!r}.')
            return value
        coeffs = self.zeros()
        if isinstance(value, self.GF) and value.ndim == 1:
            if value.size > self.k:
                raise ValueError(f'Expected at most {self.k} coefficients.')
            coeffs[: value.size] = value
        elif isinstance(value, (list, tuple)):
            if len(value) > self.k:
                raise ValueError(
                    f'Expected at most {self.k} coefficients, got {len(value)}.'
                )
            for i, c in enumerate(value):
                coeffs[i] = self.field.element(c)
        else:
            coeffs[0] = self.field.element(value)
        return ChainRingElement(self, coeffs)

    @property
    def zero(self):
        return ChainRingElement(self, self.zeros())

    @property
    def one(self):
        return self.element(1)

    @property
    def u(self):
        coeffs = self.zeros()
        if self.k > 1:
            coeffs[1] = 1
        return ChainRingElement(self, coeffs)

    def generators(self):
        """Ring generators over F_p: a primitive field element and ``u``."""
        gens = [self.element(self.field.primitive_element)]
        if self.k > 1:
            gens.append(self.u)
        return gens

    def random(self, seed=None, unit=False):
        rng = np.random.default_rng(seed)
        coeffs = self.GF.Random((self.k,), seed=rng)
        if unit:
            coeffs[0] = self.GF.Random(low=1, seed=rng)
        return ChainRingElement(self, coeffs)

    def residue_ring(self):
        return ChainRingParams(self.field, 1)

    def quotient(self):
        """The ring R_{k-1} reached by ``pi``."""
        if self.k == 1:
            raise KTooSmall('R_1 has no quotient R_0.')
        return ChainRingParams(self.field, self.k - 1)

    def elements(self):
        """Iterates over every element of the ring (desk-scale rings only)."""
        field_elements = list(self.field.elements_in_order())
        for combo in product(field_elements, repeat=self.k):
            yield ChainRingElement(self, self.GF([int(c) for c in combo]))

    def units(self):
        return (a for a in self.elements() if a.is_unit())


class ChainRingElement:
    """An element ``a_0 + a_1 u + ... + a_{k-1} u^{k-1}`` of R_k."""

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, ChainRingElement):
            if other.ring != self.ring:
                raise MismatchedRing(
                    f'Operands belong to different rings: {self.ring!r} and '
                    f'{other.ring!r}.'
                )
            return other
        return self.ring.element(other)

    def __add__(self, other):
        if not _is_scalar(other):
            return NotImplemented
        return ChainRingElement(self.ring, self.coeffs + self._coerce(other).coeffs)

    __radd__ = __add__

    def __sub__(self, other):
        if not _is_scalar(other):
            return NotImplemented
        return ChainRingElement(self.ring, self.coeffs - self._coerce(other).coeffs)

    def __rsub__(self, other):
        if not _is_scalar(other):
            return NotImplemented
        return ChainRingElement(self.ring, self._coerce(other).coeffs - self.coeffs)

    def __neg__(self):
        return ChainRingElement(self.ring, -self.coeffs)

    def __mul__(self, other):
        if not _is_scalar(other):
            return NotImplemented
        other = self._coerce(other)
        return ChainRingElement(self.ring, ring_multiply(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return binary_power(self, int(exponent), lambda a, b: a * b, self.ring.one)

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (MismatchedRing, TypeError, ValueError):
            return False
        return bool(
            np.array_equal(self.coeffs.view(np.ndarray), other.coeffs.view(np.ndarray))
        )

    def __hash__(self):
        return hash((self.ring, tuple(int(c) for c in self.coeffs)))

    def __getitem__(self, i):
        return self.coeffs[i]

    def __repr__(self):
        return f'ChainRingElement({self})'

    def __str__(self):
        terms = []
        for i in range(self.ring.k):
            if self.coeffs[i] == 0:
                continue
            c = self.ring.field.format(self.coeffs[i])
            if i == 0:
                terms.append(c)
                continue
            power = CHAIN_SYMBOL if i == 1 else f'{CHAIN_SYMBOL}^{i}'
            if c == '1':
                terms.append(power)
            elif ' + ' in c:
                terms.append(f'({c})*{power}')
            else:
                terms.append(f'{c}*{power}')
        return ' + '.join(terms) if terms else '0'

    def is_zero(self):
        return not np.any(self.coeffs.view(np.ndarray))

    def is_unit(self):
        return bool(self.coeffs[0] != 0)

    def valuation(self):
        """The largest ``v`` with ``u^v`` dividing the element (``k`` for zero)."""
        nonzero = np.flatnonzero(self.coeffs.view(np.ndarray))
        return int(nonzero[0]) if nonzero.size else self.ring.k

    def is_constant(self):
        return not np.any(self.coeffs[1:].view(np.ndarray))

    def inverse(self):
        """Inverts a unit as ``a_0^{-1} sum_j (-n)^j`` with ``n`` nilpotent."""
        if not self.is_unit():
            raise NotAUnit(f'{self} is not a unit of R_{self.ring.k}.')
        inv0 = self.coeffs[0] ** -1
        nilpotent = self.coeffs * inv0
        nilpotent[0] = 0
        step = ChainRingElement(self.ring, -nilpotent)
        term = self.ring.one
        total = self.ring.one
        for _ in range(1, self.ring.k):
            term = term * step
            total = total + term
        return ChainRingElement(self.ring, total.coeffs * inv0)


def cr_arith(a, b, op):
    """Ring arithmetic with explicit error reporting.

    Args:
        a, b (ChainRingElement): Elements of the same ring.
        op (str): One of ['add', 'sub', 'mul'].

    Raises:
        MismatchedRing: If the operands come from different rings.
    """
    b = a._coerce(b)
    if op == 'add':
        return a + b
    elif op == 'sub':
        return a - b
    elif op == 'mul':
        return a * b
    raise ValueError(f'{op} not one of {RING_OPS}')


def cr_invert(a):
    return a.inverse()


def mu(a):
    """Projection R_k -> F_{p^m} onto the residue field."""
    return a.coeffs[0]


def pi(a):
    """Projection R_k -> R_{k-1} killing ``u^{k-1}``."""
    quotient = a.ring.quotient()
    return ChainRingElement(quotient, a.coeffs[: quotient.k].copy())


def unit_decomposition(eta):
    """Factors a unit as ``eta_1 eta_2 ... eta_{k-1}`` modulo ``u^{k-1}``.

    ``eta_1`` is a nonzero field constant and ``eta_i = 1 + c_i u^{i-1}`` for
    ``2 <= i <= k-1``. The factorization is unique.

    Args:
        eta (ChainRingElement): A unit of R_k.

    Returns:
        list of ChainRingElement: The ``k - 1`` factors (empty when ``k = 1``).
    """
    ring = eta.ring
    if not eta.is_unit():
        raise NotAUnit(f'{eta} is not a unit.')
    if ring.k == 1:
        return []
    first = ring.element(eta.coeffs[0])
    factors = [first]
    rest = eta * first.inverse()
    for i in range(2, ring.k):
        factor = ring.one + ring.element(rest.coeffs[i - 1]) * ring.u ** (i - 1)
        factors.append(factor)
        rest = rest * factor.inverse()
    return factors


class RingAutomorphism:
    """The automorphism ``sum a_i u^i -> sum theta(a_i) eta^i u^i`` of R_k.

    ``theta`` is a power of Frobenius and ``eta`` the unit with ``Theta(u) = eta u``.
    Only ``eta`` modulo ``u^{k-1}`` matters, so it is stored in that canonical form
    and equality of automorphisms is equality of ``(theta, eta)``.

    Args:
        ring (ChainRingParams): Ring acted on.
        theta (int or FieldAutomorphism, optional): Frobenius exponent.
        eta (optional): Unit of the ring (anything ``ring.element`` accepts).
            Defaults to 1.
    """

    def __init__(self, ring, theta=0, eta=None):
        if isinstance(theta, FieldAutomorphism):
            theta = theta.e
        self.ring = ring
        self.theta = FieldAutomorphism(ring.field, theta)
        eta = ring.one if eta is None else ring.element(eta)
        if not eta.is_unit():
            raise NotAUnit(f'eta = {eta} must be a unit.')
        coeffs = eta.coeffs.copy()
        if ring.k == 1:
            coeffs[0] = 1
        else:
            coeffs[ring.k - 1] = 0
        self.eta = ChainRingElement(ring, coeffs)
        self._matrix = self._action_matrix()
        self._inverse_matrix = np.linalg.inv(self._matrix)

    @classmethod
    def from_factors(cls, ring, theta, etas):
        """Builds ``Theta_{theta, eta_1, ..., eta_{k-1}}`` from its unit factors.

        Raises:
            ValueError: If the factors do not have the shapes ``eta_1`` in F^* and
                ``eta_i`` in ``1 + u^{i-1} F``.
        """
        if len(etas) > max(ring.k - 1, 0):
            raise ValueError(f'R_{ring.k} takes at most {ring.k - 1} unit factors.')
        eta = ring.one
        for i, factor in enumerate(etas, start=1):
            factor = ring.element(factor)
            if i == 1:
                valid = factor.is_constant() and factor.is_unit()
            else:
                rest = factor - ring.one
                valid = all(
                    rest.coeffs[j] == 0 for j in range(ring.k) if j != i - 1
                )
            if not valid:
                raise ValueError(f'eta_{i} = {factor} has the wrong shape.')
            eta = eta * factor
        return cls(ring, theta, eta)

    def _action_matrix(self):
        k = self.ring.k
        matrix = self.ring.GF.Zeros((k, k))
        eta_u = self.eta * self.ring.u
        power = self.ring.one
        for i in range(k):
            matrix[i] = power.coeffs
            power = power * eta_u
        return matrix

    def apply_array(self, coeffs):
        """Applies the automorphism to coefficient arrays of shape ``(..., k)``."""
        flat = frobenius(coeffs, self.theta.e).reshape(-1, self.ring.k)
        return (flat @ self._matrix).reshape(coeffs.shape)

    def apply_inverse_array(self, coeffs):
        flat = coeffs.reshape(-1, self.ring.k) @ self._inverse_matrix
        return frobenius(flat.reshape(coeffs.shape), -self.theta.e)

    def __call__(self, a):
        if a.ring != self.ring:
            raise MismatchedRing(f'{a!r} does not belong to {self.ring!r}.')
        return ChainRingElement(self.ring, self.apply_array(a.coeffs))

    def __eq__(self, other):
        return (
            isinstance(other, RingAutomorphism)
            and self.ring == other.ring
            and self.theta == other.theta
            and self.eta == other.eta
        )

    def __hash__(self):
        return hash((self.ring, self.theta.e, self.eta))

    def __repr__(self):
        return f'RingAutomorphism(theta={self.theta.e}, eta={self.eta})'

    def is_identity(self):
        return self.theta.is_identity() and self.eta == self.ring.one

    def compose(self, other):
        """Returns ``self o other``."""
        eta = self(other.eta) * self.eta
        return RingAutomorphism(self.ring, self.theta.e + other.theta.e, eta)

    def inverse(self):
        if self.ring.k == 1:
            return RingAutomorphism(self.ring, -self.theta.e)
        image = self.apply_inverse_array(self.ring.u.coeffs)
        coeffs = self.ring.zeros()
        coeffs[:-1] = image[1:]
        return RingAutomorphism(
            self.ring, -self.theta.e, ChainRingElement(self.ring, coeffs)
        )

    def power(self, t):
        t = int(t)
        if t < 0:
            return self.inverse().power(-t)
        identity = RingAutomorphism(self.ring)
        return binary_power(self, t, lambda a, b: a.compose(b), identity)

    def order(self, cap=AUTOMORPHISM_CAP):
        """Least ``t >= 1`` with ``Theta^t`` the identity."""
        current = self
        t = 1
        while not current.is_identity():
            current = current.compose(self)
            t += 1
            if t > cap:
                raise CapExceeded(f'Automorphism order exceeds {cap}.')
        return t

    def factors(self):
        return unit_decomposition(self.eta)

    def residue(self):
        """The induced automorphism ``theta`` of the residue field, as a k = 1 ring
        automorphism."""
        return RingAutomorphism(self.ring.residue_ring(), self.theta.e)


def apply_automorphism(phi, a):
    return phi(a)


def automorphism_order(phi, cap=AUTOMORPHISM_CAP):
    return phi.order(cap=cap)


def automorphism_group_order(ring):
    """``|Aut(R_k)| = m (q - 1) q^{k-2}`` for ``k >= 2`` and ``m`` for ``k = 1``."""
    q, m = ring.field.order, ring.field.m
    if ring.k == 1:
        return m
    return m * (q - 1) * q ** (ring.k - 2)


def enumerate_automorphisms(ring, cap=AUTOMORPHISM_CAP):
    """Yields every automorphism of R_k exactly once.

    Args:
        ring (ChainRingParams): The ring.
        cap (int, optional): Largest group that may be enumerated.

    Raises:
        CapExceeded: If the group order exceeds ``cap``.
    """
    count = automorphism_group_order(ring)
    if count > cap:
        raise CapExceeded(f'Aut(R_{ring.k}) has {count} elements; the cap is {cap}.')
    logger.debug('Enumerating %d automorphisms.', count)
    field = ring.field
    if ring.k == 1:
        for e in range(field.m):
            yield RingAutomorphism(ring, e)
        return
    units = list(field.elements_in_order(1))
    everything = list(field.elements_in_order())
    for e in range(field.m):
        for eta0 in units:
            for tail in product(everything, repeat=ring.k - 2):
                eta = [eta0] + list(tail)
                yield RingAutomorphism(ring, e, eta)
