import logging
from functools import lru_cache
from math import gcd

import galois
import numpy as np

from .checks import certify
from .constants import (
    CHUNK_SIZE,
    CONWAY_POLYNOMIALS,
    FIELD_OPS,
    FIELD_SCAN_CAP,
    FIELD_SYMBOL,
    MAX_EXTENSION_DEGREE,
    MAX_FIELD_ORDER,
)
from .exceptions import (
    DivisionByZero,
    FieldTooLarge,
    MismatchedField,
    ModulusUnavailable,
    ZeroInput,
)

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _field_class(p, m, modulus):
    """Returns the ``galois`` field class for F_{p^m} built on ``modulus``."""
    if m == 1:
        return galois.GF(p)
    poly = galois.Poly(list(modulus)[::-1], field=galois.GF(p))
    return galois.GF(p ** m, irreducible_poly=poly)


def conway_modulus(p, m):
    """Returns the Conway polynomial of F_{p^m} as low-to-high coefficients.

    Args:
        p (int): Odd prime.
        m (int): Extension degree.

    Returns:
        list of int: Monic modulus of degree ``m``, constant term first.

    Raises:
        ModulusUnavailable: If neither ``galois`` nor the built-in table knows the
            polynomial.
    """
    try:
        poly = galois.conway_poly(p, m)
        return [int(c) for c in poly.coeffs[::-1]]
    except (LookupError, ValueError, OSError):
        if (p, m) in CONWAY_POLYNOMIALS:
            return list(CONWAY_POLYNOMIALS[(p, m)])
        if m == 1:
            return [p - int(galois.primitive_root(p)), 1]
    raise ModulusUnavailable(f'No Conway polynomial is available for F_{p}^{m}.')


class FieldParams:
    """The finite field F_{p^m} presented as F_p[w]/(modulus).

    Elements are ``galois`` field arrays; ``GF`` is the array class and plays the
    role of the params handle shared by every element of the field.

    Args:
        p (int): Odd prime characteristic.
        m (int, optional): Extension degree. Defaults to 1.
        modulus (list of int, optional): Monic irreducible polynomial of degree
            ``m``, coefficients low-to-high. Defaults to the Conway polynomial.

    Raises:
        ValueError: If ``p`` is not an odd prime, ``m`` is out of range or the
            modulus is not monic irreducible of degree ``m``.
        FieldTooLarge: If ``p^m`` exceeds the supported field order.

    Examples:
        >>> F9 = FieldParams(3, 2, [1, 0, 1])
        >>> t = F9.generator
        >>> F9.coefficients(t * t)
        [2, 0]
    """

    def __init__(self, p, m=1, modulus=None):
        p, m = int(p), int(m)
        if p == 2 or not galois.is_prime(p):
            raise ValueError(f'p must be an odd prime, got {p}.')
        if m < 1 or m > MAX_EXTENSION_DEGREE:
            raise ValueError(
                f'm must lie in [1, {MAX_EXTENSION_DEGREE}] for desk-scale fields, '
                f'got {m}.'
            )
        if p ** m > MAX_FIELD_ORDER:
            raise FieldTooLarge(
                f'F_{p}^{m} has {p ** m} elements; the limit is {MAX_FIELD_ORDER}.'
            )
        if modulus is None:
            modulus = conway_modulus(p, m)
        modulus = [int(c) % p for c in modulus]
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValueError(
                f'modulus must be monic of degree {m}, got coefficients {modulus}.'
            )
        if m > 1:
            poly = galois.Poly(modulus[::-1], field=galois.GF(p))
            if not poly.is_irreducible():
                raise ValueError(f'modulus {poly} is reducible over F_{p}.')
        self.p = p
        self.m = m
        self.modulus = tuple(modulus)
        self.GF = _field_class(p, m, self.modulus)

    @property
    def order(self):
        return self.p ** self.m

    @property
    def zero(self):
        return self.GF(0)

    @property
    def one(self):
        return self.GF(1)

    @property
    def generator(self):
        """The class of ``w``, a root of the modulus."""
        if self.m == 1:
            return self.GF((-self.modulus[0]) % self.p)
        return self.GF(self.p)

    @property
    def primitive_element(self):
        return self.GF.primitive_element

    def __eq__(self, other):
        return isinstance(other, FieldParams) and (
            (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f'FieldParams(p={self.p}, m={self.m}, modulus={list(self.modulus)})'

    def owns(self, a):
        return isinstance(a, self.GF)

    def element(self, value):
        """Builds a field element.

        Args:
            value (int, sequence of int or field array): An integer is read as the
                constant ``value mod p``; a sequence as coefficients of
                ``1, w, w^2, ...``.

        Returns:
            FieldArray: 0-d element of ``self.GF``.
        """
        if isinstance(value, galois.FieldArray):
            if not isinstance(value, self.GF):
                raise MismatchedField(f'{value!r} does not belong to {self!r}.')
            return value
        if isinstance(value, (int, np.integer)):
            return self.GF(int(value) % self.p)
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.m:
            raise ValueError(
                f'Expected at most {self.m} coefficients, got {len(coeffs)}.'
            )
        return self.GF(sum(c * self.p ** i for i, c in enumerate(coeffs)))

    def coefficients(self, a):
        """Returns the coefficients of ``a`` in ``1, w, ..., w^{m-1}``."""
        vec = np.asarray(self.element(a).vector(), dtype=np.int64)
        return [int(c) for c in vec[::-1]]

    def encode(self, a):
        """Returns the sort key of ``a``: lexicographic on coefficients, low degree
        first."""
        return int(self.encode_array(self.element(a)))

    def encode_array(self, arr):
        vec = np.asarray(arr.vector(), dtype=np.int64)[..., ::-1]
        weights = self.p ** np.arange(self.m - 1, -1, -1, dtype=np.int64)
        return vec @ weights

    def decode_keys(self, keys):
        """Inverse of ``encode_array``: field elements for the given sort keys."""
        keys = np.asarray(keys, dtype=np.int64)
        places = self.p ** np.arange(self.m - 1, -1, -1, dtype=np.int64)
        digits = (keys[..., None] // places) % self.p
        ints = digits @ (self.p ** np.arange(self.m, dtype=np.int64))
        return self.GF(ints)

    def elements_in_order(self, start=0, stop=None):
        """Field elements with keys in ``[start, stop)``, in encoding order."""
        stop = self.order if stop is None else min(stop, self.order)
        return self.decode_keys(np.arange(start, stop, dtype=np.int64))

    def sort(self, elements):
        """Sorts a list of field elements by encoding."""
        return sorted(elements, key=self.encode)

    def random(self, size=None, seed=None, nonzero=False):
        low = 1 if nonzero else 0
        return self.GF.Random(() if size is None else size, low=low, seed=seed)

    def format(self, a):
        """Renders ``a`` as a polynomial in ``w`` (highest power first)."""
        coeffs = self.coefficients(a)
        if self.m == 1:
            return str(coeffs[0])
        terms = []
        for i in range(self.m - 1, -1, -1):
            c = coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            power = FIELD_SYMBOL if i == 1 else f'{FIELD_SYMBOL}^{i}'
            terms.append(power if c == 1 else f'{c}*{power}')
        return ' + '.join(terms) if terms else '0'


def _same_field(a, b):
    if type(a) is not type(b):
        raise MismatchedField(
            f'Operands belong to different fields: {type(a).name} and '
            f'{type(b).name}.'
        )


def ff_arith(a, b, op):
    """Field arithmetic with explicit error reporting.

    Args:
        a, b (FieldArray): Elements of the same field.
        op (str): One of ['add', 'sub', 'mul', 'div'].

    Returns:
        FieldArray: ``a op b``.

    Raises:
        MismatchedField: If ``a`` and ``b`` come from different fields.
        DivisionByZero: If ``op`` is 'div' and ``b`` is zero.
        ValueError: If ``op`` is unknown.
    """
    _same_field(a, b)
    if op == 'add':
        return a + b
    elif op == 'sub':
        return a - b
    elif op == 'mul':
        return a * b
    elif op == 'div':
        if b == 0:
            raise DivisionByZero('Division by the zero field element.')
        return a / b
    raise ValueError(f'{op} not one of {FIELD_OPS}')


def frobenius(a, e):
    """Returns ``a^{p^e}``, the e-th power of the Frobenius map.

    ``e`` is taken modulo ``m`` so negative powers give inverse automorphisms.
    Works elementwise on arrays.
    """
    field = type(a)
    e = int(e) % field.degree
    if e == 0:
        return a.copy()
    return a ** (field.characteristic ** e)


class FieldAutomorphism:
    """The automorphism ``a -> a^{p^e}`` of F_{p^m}.

    Args:
        field (FieldParams): The field acted on.
        e (int, optional): Frobenius exponent, reduced modulo ``m``.
    """

    def __init__(self, field, e=0):
        self.field = field
        self.e = int(e) % field.m

    def __call__(self, a):
        return frobenius(a, self.e)

    def __eq__(self, other):
        return (
            isinstance(other, FieldAutomorphism)
            and self.field == other.field
            and self.e == other.e
        )

    def __hash__(self):
        return hash((self.field, self.e))

    def __repr__(self):
        return f'FieldAutomorphism(e={self.e})'

    @property
    def order(self):
        return self.field.m // gcd(self.field.m, self.e) if self.e else 1

    def is_identity(self):
        return self.e == 0

    def compose(self, other):
        return FieldAutomorphism(self.field, self.e + other.e)

    def power(self, t):
        return FieldAutomorphism(self.field, self.e * int(t))

    def inverse(self):
        return FieldAutomorphism(self.field, -self.e)


def _scan(field, predicate, cap=FIELD_SCAN_CAP, first_only=False):
    """Scans the field in encoding order and returns the elements where
    ``predicate`` (vectorised) is true."""
    if field.order > cap:
        raise FieldTooLarge(
            f'Scanning F_{field.p}^{field.m} needs {field.order} evaluations; '
            f'the cap is {cap}.'
        )
    found = []
    for start in range(0, field.order, CHUNK_SIZE):
        chunk = field.elements_in_order(start, start + CHUNK_SIZE)
        hits = chunk[np.asarray(predicate(chunk), dtype=bool)]
        found.extend(hits[i] for i in range(hits.size))
        if first_only and found:
            return found[:1]
    return found


def cube_root_field(a, cap=FIELD_SCAN_CAP, field=None):
    """Returns all cube roots of a nonzero field element.

    Args:
        a (FieldArray): Nonzero element.
        cap (int, optional): Largest field that may be scanned when no closed form
            applies.
        field (FieldParams, optional): The field of ``a``. Defaults to
            ``field_params_of(a)``.

    Returns:
        list of FieldArray or None: The roots sorted by encoding (one root when
        ``3`` does not divide ``q-1``, three roots otherwise), or ``None`` when
        ``a`` is not a cube.

    Raises:
        ZeroInput: If ``a`` is zero.
    """
    if a == 0:
        raise ZeroInput('cube_root_field needs a nonzero element.')
    GF = type(a)
    q = GF.order
    if field is None:
        field = field_params_of(a)
    if (q - 1) % 3:
        return [a ** pow(3, -1, q - 1)]
    if a ** ((q - 1) // 3) != 1:
        return None
    t = q - 1
    while t % 3 == 0:
        t //= 3
    if ((q - 1) // t) == 3:
        # 9 does not divide q - 1: a^{1/3} is a power of a.
        root = a ** pow(3, -1, t)
        omega = primitive_cube_root_of_unity(field)
        return field.sort([root, root * omega, root * omega ** 2])
    logger.debug('Scanning F_%d^%d for cube roots.', GF.characteristic, GF.degree)
    return field.sort(_scan(field, lambda xs: xs ** 3 == a, cap=cap))


def _modulus_of(GF):
    if GF.degree == 1:
        return None
    return [int(c) for c in GF.irreducible_poly.coeffs[::-1]]


def pth_power_root(a, s):
    """Returns the unique ``b`` with ``b^{p^s} = a``.

    Writing ``s = qm + r`` with ``0 <= r < m``, the root is ``a^{p^{m-r}}`` since
    ``a^{p^{(q+1)m}} = a``.

    Raises:
        ZeroInput: If ``a`` is zero.
        ValueError: If ``s`` is negative.
    """
    if a == 0:
        raise ZeroInput('pth_power_root needs a nonzero element.')
    if s < 0:
        raise ValueError(f's must be non-negative, got {s}.')
    GF = type(a)
    m = GF.degree
    r = s % m
    b = frobenius(a, (m - r) % m)
    certify(frobenius(b, s % m) == a, f'{b} is not a p^{s}-th root of {a}.')
    return b


def primitive_root_of_unity(field, n):
    """Returns the least-encoded primitive n-th root of unity, or ``None``."""
    q = field.order
    if (q - 1) % n:
        return None
    zeta = field.primitive_element ** ((q - 1) // n)
    candidates = [zeta ** j for j in range(1, n + 1) if gcd(j, n) == 1]
    return field.sort(candidates)[0]


def primitive_cube_root_of_unity(field):
    """Returns the least-encoded primitive cube root of unity ω (``ω^2+ω+1 = 0``),
    or ``None`` when ``3`` does not divide ``q-1``."""
    return primitive_root_of_unity(field, 3)


def prime_field_generator(p):
    """Returns the least generator ξ of F_p^*."""
    return int(galois.primitive_root(p))


def square_roots(a):
    """Returns the square roots of ``a`` sorted by encoding (empty if none)."""
    if a == 0:
        return [a.copy()]
    if not a.is_square():
        return []
    r = np.sqrt(a)
    field = field_params_of(a)
    return field.sort([r, -r])


def field_params_of(a):
    """Recovers the ``FieldParams`` of a field element (one instance per field
    class)."""
    return _params_of_class(type(a))


@lru_cache(maxsize=None)
def _params_of_class(GF):
    return FieldParams(GF.characteristic, GF.degree, _modulus_of(GF))
