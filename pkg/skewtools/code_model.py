import logging
import warnings
from itertools import product

import galois
import numpy as np

from .chain_ring import ring_multiply
from .checks import certify, is_desk_scale
from .constants import IDEAL_ENUMERATION_CAP, IDEAL_TYPES
from .exceptions import (
    AmbientMismatch,
    AutomorphismMovesAlpha,
    CapExceeded,
    IndexOutOfRange,
    LengthMismatch,
    NonMonic,
    NotReduced,
    UnsupportedAmbient,
)
from .finite_field import pth_power_root
from .linalg import (
    chain_echelon,
    element_with_prefix,
    flatten,
    in_row_space,
    log_cardinality,
    orthogonal_complement,
    pivot_columns,
    row_basis,
    span_words,
    unflatten,
)
from .skew_poly import SkewPoly, dual_reciprocal, gcd_r, is_central, right_divmod

logger = logging.getLogger(__name__)


def polycyclic_shift(v, f):
    """The skew ``(f, Theta)``-polycyclic shift of a word.

    With ``f = x^N - sum a_i x^i`` the shift sends ``c`` to
    ``(Theta(c_{N-1}) a_0, Theta(c_0) + Theta(c_{N-1}) a_1, ...)``, which is
    multiplication by ``x`` in the quotient by ``f``.

    Args:
        v (FieldArray): Word of shape ``(N, k)`` (or ``(N,)`` when ``k = 1``);
            leading batch axes are allowed.
        f (SkewPoly): Monic polynomial of degree ``N``.

    Returns:
        FieldArray: Shifted word(s), same shape as ``v``.

    Raises:
        LengthMismatch: If the word length is not ``deg f``.
    """
    if not f.is_monic():
        raise NonMonic(f'{f} is not monic.')
    ctx = f.ctx
    flat = v.ndim == 1 and ctx.k == 1
    words = v.reshape(-1, 1) if flat else v
    n = f.degree
    if words.shape[-2] != n:
        raise LengthMismatch(f'Word length {words.shape[-2]} differs from N = {n}.')
    tail = -f.coeffs[:n]
    twisted = ctx.auto.apply_array(words)
    top = twisted[..., n - 1 : n, :]
    out = ring_multiply(top, tail)
    out[..., 1:, :] = out[..., 1:, :] + twisted[..., : n - 1, :]
    return out.reshape(v.shape) if flat else out


class AmbientQuotient:
    """The quotient ``R_k[x; Theta]/(f)`` by a monic central polynomial ``f``.

    Raises:
        UnsupportedAmbient: If the modulus is not monic and central.
    """

    def __init__(self, ctx, modulus):
        modulus = ctx.poly(modulus)
        if not modulus.is_monic() or modulus.degree < 1:
            raise UnsupportedAmbient(f'The modulus {modulus} is not monic.')
        if not is_central(modulus):
            raise UnsupportedAmbient(f'The modulus {modulus} is not central.')
        self.ctx = ctx
        self.modulus = modulus

    @property
    def length(self):
        return self.modulus.degree

    @property
    def k(self):
        return self.ctx.k

    @property
    def GF(self):
        return self.ctx.field.GF

    @property
    def log_size(self):
        """``log_q`` of the number of words."""
        return self.length * self.k

    def __eq__(self, other):
        return isinstance(other, AmbientQuotient) and (
            self.ctx == other.ctx and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.ctx, self.modulus))

    def __repr__(self):
        return f'AmbientQuotient({self.modulus})'

    def constant(self):
        """``lam`` when the modulus is ``x^N - lam``, else ``None``."""
        n = self.length
        if any(self.modulus.coeffs[i].view(np.ndarray).any() for i in range(1, n)):
            return None
        return -self.modulus.coefficient(0)

    def reduce(self, g):
        return g % self.modulus

    def word(self, g):
        g = self.ctx.poly(g)
        if g.degree >= self.length:
            raise NotReduced(f'{g} is not reduced modulo {self.modulus}.')
        return g.vector(self.length)

    def poly(self, word):
        if word.ndim == 1:
            word = word.reshape(-1, 1)
        return SkewPoly(self.ctx, word)

    def shift(self, words):
        return polycyclic_shift(words, self.modulus)

    def field_ambient(self):
        """The ambient over the residue field with modulus ``mu(f)``."""
        residue = self.ctx.residue()
        return AmbientQuotient(residue, self.ctx.project(self.modulus))


class LinearCode:
    """An F_{p^m}-linear code of length ``N`` over R_k.

    The code is held as a reduced row echelon F-basis of flattened words.

    Args:
        ctx (SkewPolyRing): Skew ring supplying coefficient ring and twist.
        length (int): Code length ``N``.
        words (FieldArray): Spanning words, shape ``(count, N, k)``.
        ambient (AmbientQuotient, optional): Ambient the code lives in.
    """

    def __init__(self, ctx, length, words, ambient=None):
        self.ctx = ctx
        self.length = length
        self.ambient = ambient
        if words.shape[0] == 0:
            self.basis = ctx.field.GF.Zeros((0, length * ctx.k))
        else:
            self.basis = row_basis(flatten(words))
        self._pivots = None

    @property
    def k(self):
        return self.ctx.k

    @property
    def words(self):
        return unflatten(self.basis, self.k)

    @property
    def dimension(self):
        """Dimension over F_{p^m}."""
        return self.basis.shape[0]

    @property
    def log_cardinality(self):
        """``log_q |C|``."""
        return self.dimension

    @property
    def cardinality(self):
        return self.ctx.field.order ** self.dimension

    def is_field_code(self):
        return self.k == 1

    def is_zero(self):
        return self.dimension == 0

    def is_whole(self):
        return self.dimension == self.length * self.k

    def chain_pivots(self):
        """Chain-ring standard form of the code (cached)."""
        if self._pivots is None:
            self._pivots = chain_echelon(self.words)
            certify(
                log_cardinality(self._pivots, self.k) == self.dimension,
                'The standard form does not span the code.',
            )
        return self._pivots

    def valuations(self):
        return [v for _, v, _ in self.chain_pivots()]

    def profile(self):
        """Number of standard-form pivots of each u-adic valuation."""
        counts = [0] * self.k
        for v in self.valuations():
            counts[v] += 1
        return tuple(counts)

    def _coerce_word(self, c):
        if isinstance(c, SkewPoly):
            c = c.vector(self.length)
        if c.ndim == 1 and self.k == 1:
            c = c.reshape(-1, 1)
        if c.shape != (self.length, self.k):
            raise LengthMismatch(
                f'Expected a word of shape {(self.length, self.k)}, got {c.shape}.'
            )
        return c

    def contains(self, c):
        c = self._coerce_word(c)
        return in_row_space(self.basis, flatten(c))

    __contains__ = contains

    def __eq__(self, other):
        return (
            isinstance(other, LinearCode)
            and self.ctx.ring == other.ctx.ring
            and self.length == other.length
            and np.array_equal(
                self.basis.view(np.ndarray), other.basis.view(np.ndarray)
            )
        )

    def __hash__(self):
        return hash((self.ctx.ring, self.length, self.basis.view(np.ndarray).tobytes()))

    def __le__(self, other):
        return all(other.contains(w) for w in self.words)

    def __repr__(self):
        return (
            f'{type(self).__name__}(N={self.length}, k={self.k}, '
            f'dim={self.dimension})'
        )

    def is_left_ideal(self):
        """Closure under the polycyclic shift (ambient codes only)."""
        if self.ambient is None or self.is_zero():
            return True
        shifted = self.ambient.shift(self.words)
        return all(self.contains(w) for w in shifted)

    def generator_polys(self):
        return [SkewPoly(self.ctx, w) for w in self.words]

    def generator_matrix(self):
        """F-generator matrix of a field code (rows are codewords)."""
        return self.basis.copy()


class LeftIdealCode(LinearCode):
    """A left ideal of an ambient quotient, given by generator polynomials.

    Its F-basis is taken from ``u^a x^i g mod f`` for ``0 <= a < k``, ``0 <= i < N``
    and every generator ``g``.

    Args:
        ambient (AmbientQuotient): The ambient.
        generators (list of SkewPoly): Generators of degree below ``N``.

    Raises:
        NotReduced: If a generator is not reduced modulo the ambient modulus.
    """

    def __init__(self, ambient, generators):
        ctx = ambient.ctx
        generators = [ctx.poly(g) for g in generators]
        n, k = ambient.length, ambient.k
        for g in generators:
            if g.degree >= n:
                raise NotReduced(f'{g} is not reduced modulo {ambient.modulus}.')
        rows = []
        if generators:
            current = ctx.ring.zeros((len(generators), n))
            for idx, g in enumerate(generators):
                current[idx] = g.vector(n)
            for _ in range(n):
                rows.append(current)
                current = ambient.shift(current)
            stacked = type(current)(
                np.concatenate([r.view(np.ndarray) for r in rows], axis=0)
            )
            layers = []
            for a in range(k):
                power = ctx.ring.zeros()
                power[a] = 1
                layers.append(ring_multiply(power, stacked).view(np.ndarray))
            words = type(current)(np.concatenate(layers, axis=0))
        else:
            words = ctx.ring.zeros((0, n))
        super().__init__(ctx, n, words, ambient=ambient)
        self.generators = generators
        if k == 1 and generators:
            d = ambient.modulus
            for g in generators:
                d = gcd_r(g, d)
            certify(
                self.dimension == n - d.degree,
                f'Dimension {self.dimension} disagrees with gcd_r degree {d.degree}.',
            )


def code_from_generators(ambient, gens):
    return LeftIdealCode(ambient, gens)


def membership(c, code):
    return code.contains(c)


def code_from_words(ambient, words):
    """The left ideal spanned by a set of words of the ambient."""
    return LeftIdealCode(ambient, [ambient.poly(w) for w in words])


def whole_code(ambient):
    return LeftIdealCode(ambient, [ambient.ctx.one])


def zero_code(ambient):
    return LeftIdealCode(ambient, [])


def _fp_coordinates(values):
    """F_p coordinates of field values, low power first, on a new last axis."""
    vec = np.asarray(values.vector(), dtype=np.int64)
    return vec[..., ::-1]


def right_annihilator(code):
    """F_p-basis of ``{h : g h = 0 mod f for every g in the code}``.

    Args:
        code (LinearCode): A code with an ambient.

    Returns:
        list of SkewPoly
    """
    ambient = code.ambient
    ctx = ambient.ctx
    field = ctx.field
    n, k, m = ambient.length, ambient.k, field.m
    gens = code.generator_polys()
    basis_polys = []
    images = []
    for i in range(n):
        for layer in range(k):
            for j in range(m):
                coeff = [0] * m
                coeff[j] = 1
                ring_coeff = [0] * k
                ring_coeff[layer] = coeff
                h = ctx.monomial(ring_coeff, i)
                basis_polys.append(h)
                if gens:
                    parts = [ambient.word(ambient.reduce(g * h)) for g in gens]
                    stacked = field.GF(np.stack([w.view(np.ndarray) for w in parts]))
                    images.append(_fp_coordinates(stacked).reshape(-1))
    if not gens:
        return basis_polys
    prime = galois.GF(field.p)
    matrix = prime(np.stack(images) % field.p)
    annihilator = []
    for row in row_basis(matrix.T.null_space()):
        h = ctx.zero
        for c, e in zip(row, basis_polys):
            if c != 0:
                h = h + int(c) * e
        annihilator.append(h)
    return annihilator


def dual_code(code):
    """The Euclidean dual.

    The dual is computed as the orthogonal complement. When the ambient modulus is
    ``x^N - lam`` with ``Theta(lam) = lam``, the dual is also obtained from the
    right annihilator through ``dual_reciprocal``, the two are checked to agree and
    the dual is returned as a left ideal of ``R_k[x; Theta]/(x^N - lam^{-1})``.
    Otherwise a plain ``LinearCode`` is returned with a warning.

    Raises:
        UnsupportedAmbient: If the code has no ambient.
    """
    ambient = code.ambient
    if ambient is None:
        raise UnsupportedAmbient('The dual needs a code with an ambient quotient.')
    ctx = ambient.ctx
    n, k = ambient.length, ambient.k
    complement = orthogonal_complement(code.words, n, k, ctx.field.GF)
    certify(
        code.dimension + complement.shape[0] == n * k,
        'The orthogonal complement has the wrong dimension.',
    )
    lam = ambient.constant()
    if lam is None or not lam.is_unit() or ctx.auto(lam) != lam:
        warnings.warn(
            'The dual of a code outside a constacyclic ambient is returned as a '
            'linear code.'
        )
        return LinearCode(ctx, n, complement)
    dual_ambient = AmbientQuotient(ctx, ctx.binomial(n, lam.inverse()))
    annihilator = right_annihilator(code)
    twisted = [dual_reciprocal(h % ambient.modulus, n) for h in annihilator]
    if twisted:
        stack = ctx.ring.zeros((len(twisted), n))
        for i, w in enumerate(twisted):
            stack[i] = w.vector(n)
        reversed_words = span_words(stack)
    else:
        reversed_words = ctx.ring.zeros((0, n))
    dual = LinearCode(ctx, n, complement, ambient=dual_ambient)
    certify(
        LinearCode(ctx, n, reversed_words) == dual,
        'The twisted annihilator disagrees with the orthogonal complement.',
    )
    if not dual.is_left_ideal():
        warnings.warn('The dual is not a left ideal of the expected ambient.')
        return dual
    if k == 1 and not dual.is_zero():
        d = dual_ambient.modulus
        for g in dual.generator_polys():
            d = gcd_r(g, d)
        result = LeftIdealCode(dual_ambient, [d % dual_ambient.modulus])
    else:
        result = code_from_words(dual_ambient, dual.words)
    certify(result == dual, 'The dual generators do not regenerate the dual.')
    result.annihilator = annihilator
    return result


def are_orthogonal(code, other):
    """Whether every basis word of ``code`` is orthogonal to every basis word of
    ``other``."""
    for a in code.words:
        for b in other.words:
            if inner_product(a, b).view(np.ndarray).any():
                return False
    return True


def inner_product(a, b):
    """``sum_i a_i b_i`` in R_k for two words of shape ``(N, k)``."""
    products = ring_multiply(a, b)
    total = type(products).Zeros(products.shape[-1])
    for term in products:
        total = total + term
    return total


def torsion_code(code, i):
    """The torsion code ``Tor_i(C) = mu((C : u^{i-1}))``, a left ideal over the
    residue field.

    Raises:
        IndexOutOfRange: If ``i`` is outside ``1..k``.
    """
    k = code.k
    if not 1 <= i <= k:
        raise IndexOutOfRange(f'Torsion index {i} is outside 1..{k}.')
    n = code.length
    ambient = code.ambient.field_ambient()
    start = (i - 1) * n
    rows = [
        row[start : start + n]
        for row, pivot in zip(code.basis, pivot_columns(code.basis))
        if pivot >= start
    ]
    gens = [ambient.poly(r) for r in rows]
    return LeftIdealCode(ambient, gens)


def torsion_profile(code):
    return [torsion_code(code, i).dimension for i in range(1, code.k + 1)]


class CanonicalIdealForm:
    """Canonical generators ``u^{i-1} a_i + sum_j u^{i-1+j} r_{i,j}`` of a left
    ideal.

    ``a[i-1]`` is the monic generator of ``Tor_i`` (``None`` for the zero torsion
    code) and ``r[i-1][j-1]`` the residue polynomial ``r_{i,j}`` with
    ``deg r_{i,j} < deg a_{i+j}``.
    """

    def __init__(self, ambient, a, r):
        self.ambient = ambient
        self.a = a
        self.r = r

    def key(self):
        def text(f):
            return None if f is None else str(f)

        return (
            tuple(text(f) for f in self.a),
            tuple(tuple(text(f) for f in row) for row in self.r),
        )

    def __eq__(self, other):
        return isinstance(other, CanonicalIdealForm) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f'CanonicalIdealForm(a={self.a}, r={self.r})'

    def generators(self):
        """The canonical generators as polynomials of the ambient."""
        ctx = self.ambient.ctx
        n, k = self.ambient.length, self.ambient.k
        gens = []
        for i, a in enumerate(self.a):
            if a is None:
                continue
            coeffs = ctx.ring.zeros(n)
            coeffs[:, i] = a.vector(n)[:, 0]
            for j, r in enumerate(self.r[i], start=1):
                if r is not None:
                    coeffs[:, i + j] = r.vector(n)[:, 0]
            gens.append(SkewPoly(ctx, coeffs))
        return gens

    def regenerate(self):
        return LeftIdealCode(self.ambient, self.generators())

    def label(self, code=None):
        """Ideal type for ``k = 2``: trivial, non-monic principal, principal or
        non-principal."""
        if self.ambient.k != 2:
            return None
        code = self.regenerate() if code is None else code
        if code.is_zero() or code.is_whole():
            return IDEAL_TYPES[0]
        if self.a[0] is None:
            return IDEAL_TYPES[1]
        first = LeftIdealCode(self.ambient, self.generators()[:1])
        return IDEAL_TYPES[2] if first == code else IDEAL_TYPES[3]


def canonicalize_ideal(code, cap=None):
    """Canonical form of a left ideal.

    ``a_i`` is the monic right gcd of ``Tor_i`` with ``mu(f)``. For each nonzero
    ``a_i`` a codeword with lower layers zero and layer ``i-1`` equal to ``a_i`` is
    found, then every higher layer ``l`` is reduced by right division by
    ``a_{l+1}``, subtracting the codeword that carries the quotient part.

    Raises:
        UnsupportedAmbient: If the code has no ambient.
        NotDeskScale: If ``cap`` is given and the ambient has more words.
    """
    ambient = code.ambient
    if ambient is None:
        raise UnsupportedAmbient('Canonical forms need a code with an ambient.')
    if cap is not None:
        is_desk_scale(ambient.ctx.field.order ** ambient.log_size, cap)
    n, k = ambient.length, ambient.k
    field_ambient = ambient.field_ambient()
    residue_mod = field_ambient.modulus
    a = []
    for i in range(1, k + 1):
        tor = torsion_code(code, i)
        if tor.is_zero():
            a.append(None)
            continue
        d = residue_mod
        for g in tor.generator_polys():
            d = gcd_r(g, d)
        a.append(d)
    r = [[None] * (k - 1 - i) for i in range(k)]
    for i in range(k):
        if a[i] is None:
            continue
        target = a[i].vector(n)[:, 0]
        element = element_with_prefix(code.basis, i * n, (i + 1) * n, target)
        certify(element is not None, f'No codeword starts with torsion layer {i + 1}.')
        for layer in range(i + 1, k):
            start = layer * n
            b = field_ambient.poly(element[start : start + n])
            q, rem = right_divmod(b, a[layer])
            carried = (q * a[layer]).vector(n)[:, 0]
            if carried.view(np.ndarray).any():
                z = element_with_prefix(code.basis, start, start + n, carried)
                certify(z is not None, f'Layer {layer} cannot be reduced.')
                element = element - z
            r[i][layer - i - 1] = None if rem.is_zero() else rem
    form = CanonicalIdealForm(ambient, a, r)
    certify(form.regenerate() == code, f'{form!r} does not regenerate the code.')
    return form


def _monic_right_divisors(field_ambient, cap):
    """Monic right divisors of the residue modulus of degree below ``N``."""
    ctx = field_ambient.ctx
    field = ctx.field
    modulus = field_ambient.modulus
    n = modulus.degree
    elements = list(field.elements_in_order())
    divisors = []
    visited = 0
    for degree in range(n):
        for tail in product(elements, repeat=degree):
            visited += 1
            if visited > cap:
                raise CapExceeded(f'Divisor search exceeds {cap} candidates.')
            d = ctx.poly(list(tail) + [1])
            if (modulus % d).is_zero():
                divisors.append(d)
    return divisors


def _residue_polys(field_ambient, degree):
    ctx = field_ambient.ctx
    elements = list(ctx.field.elements_in_order())
    for coeffs in product(elements, repeat=max(degree, 0)):
        yield ctx.poly(list(coeffs)) if coeffs else ctx.zero


def enumerate_ideals(ambient, cap=IDEAL_ENUMERATION_CAP):
    """Yields every left ideal of the ambient once, as ``(form, code, label)``.

    Candidates run over chains of monic right divisors ``a_{i+1} |_r a_i`` of the
    residue modulus and all ``r_{i,j}`` with ``deg r_{i,j} < deg a_{i+j}``; each is
    canonicalised and duplicates are dropped.

    Raises:
        CapExceeded: If the ambient has more than ``cap`` words.
        UnsupportedAmbient: If the modulus has coefficients outside F_{p^m}.
    """
    field = ambient.ctx.field
    size = field.order ** ambient.log_size
    if size > cap:
        raise CapExceeded(f'The ambient has {size} words; the cap is {cap}.')
    if ambient.modulus.coeffs[:, 1:].view(np.ndarray).any():
        raise UnsupportedAmbient('Ideal enumeration needs a modulus over F_{p^m}.')
    k = ambient.k
    field_ambient = ambient.field_ambient()
    divisors = [None] + _monic_right_divisors(field_ambient, cap)
    seen = set()
    for chain in product(divisors, repeat=k):
        if not _is_divisor_chain(chain):
            continue
        slots = [
            (i, j)
            for i in range(k)
            if chain[i] is not None
            for j in range(1, k - i)
        ]
        options = [
            list(_residue_polys(field_ambient, chain[i + j].degree))
            for i, j in slots
        ]
        for choice in product(*options):
            r = [[None] * (k - 1 - i) for i in range(k)]
            for (i, j), poly in zip(slots, choice):
                r[i][j - 1] = None if poly.is_zero() else poly
            candidate = CanonicalIdealForm(ambient, list(chain), r).regenerate()
            key = candidate.basis.view(np.ndarray).tobytes()
            if key in seen:
                continue
            seen.add(key)
            form = canonicalize_ideal(candidate)
            yield form, candidate, form.label(candidate)


def _is_divisor_chain(chain):
    """``a_1, ..., a_k`` with zeros first and ``a_{i+1} |_r a_i`` after."""
    for current, following in zip(chain, chain[1:]):
        if current is None:
            continue
        if following is None or not (current % following).is_zero():
            return False
    return True


def alpha0_prime(alpha, s):
    """``alpha_0'`` with ``alpha_0'^{p^s} = alpha^{-1}``."""
    return pth_power_root(alpha ** -1, s)


def psi_map(g, alpha0p):
    """Substitution ``g(x) -> g(alpha_0' x)``: ``c_i -> c_i alpha_0'^i``.

    Raises:
        AutomorphismMovesAlpha: If Theta does not fix ``alpha_0'``.
    """
    ctx = g.ctx
    scalar = ctx.ring.element(alpha0p)
    if ctx.auto(scalar) != scalar:
        raise AutomorphismMovesAlpha(f'Theta moves {scalar}.')
    coeffs = g.coeffs.copy()
    power = ctx.ring.one
    for i in range(len(coeffs)):
        coeffs[i] = ring_multiply(power.coeffs, coeffs[i])
        power = power * scalar
    return SkewPoly(ctx, coeffs)


def psi_code(code, alpha0p):
    """Image of a code of ``R_k[x; Theta]/(x^N - 1)`` under ``psi_map``; it is a
    code of ``R_k[x; Theta]/(x^N - alpha_0'^{-N})``.

    Raises:
        AmbientMismatch: If the code is not in the cyclic ambient.
    """
    ambient = code.ambient
    ctx = ambient.ctx
    n = ambient.length
    if ambient.modulus != ctx.binomial(n, 1):
        raise AmbientMismatch(f'{ambient!r} is not the cyclic ambient.')
    scalar = ctx.ring.element(alpha0p)
    target = AmbientQuotient(ctx, ctx.binomial(n, (scalar ** n).inverse()))
    images = [psi_map(g, alpha0p) for g in code.generator_polys()]
    return LeftIdealCode(target, images)


def decompose_code(code, system):
    """Components ``C_j``: the images of the code modulo each block.

    Raises:
        AmbientMismatch: If the CRT system is for another modulus.
    """
    ambient = code.ambient
    if ambient is None or system.modulus != ambient.modulus:
        raise AmbientMismatch('The CRT system does not match the code ambient.')
    components = []
    for block in system.blocks:
        block_ambient = AmbientQuotient(ambient.ctx, block)
        images = [g % block for g in code.generator_polys()]
        components.append(LeftIdealCode(block_ambient, images))
    certify(
        sum(c.dimension for c in components) == code.dimension,
        'The components do not add up to the code.',
    )
    return components


def recompose_code(components, system):
    """The code ``sum eps_j C_j`` of the full ambient."""
    ambient = AmbientQuotient(system.ctx, system.modulus)
    gens = []
    for eps, component in zip(system.idempotents, components):
        gens.extend(
            ambient.reduce(eps * g) for g in component.generator_polys()
        )
    return LeftIdealCode(ambient, gens)


def is_self_dual(code, system=None):
    """Whether ``C = C^perp``.

    With a CRT system and ``lam^{-1} = lam`` the components of ``C`` and ``C^perp``
    are compared as well and must agree with the direct check.
    """
    n, k = code.length, code.k
    if 2 * code.dimension != n * k:
        return False
    dual = dual_code(code)
    direct = LinearCode.__eq__(code, dual)
    if system is not None and dual.ambient == code.ambient:
        left = decompose_code(code, system)
        right = decompose_code(dual, system)
        componentwise = all(a == b for a, b in zip(left, right))
        certify(
            componentwise == direct,
            'Componentwise and direct self-duality disagree.',
        )
    return direct


def self_dual_report(code, system):
    """Per-component comparison of ``C_j`` with ``(C^perp)_j``."""
    dual = dual_code(code)
    if dual.ambient != code.ambient:
        raise AmbientMismatch('C and its dual live in different ambients.')
    left = decompose_code(code, system)
    right = decompose_code(dual, system)
    return {
        'self_dual': LinearCode.__eq__(code, dual),
        'components': [a == b for a, b in zip(left, right)],
    }


def polynomial_span_code(g, length):
    """The code spanned by ``x^i g`` for ``i < N - deg g``, without reduction."""
    ctx = g.ctx
    count = length - g.degree
    if count < 1:
        raise LengthMismatch(f'deg g = {g.degree} leaves no room in length {length}.')
    words = ctx.ring.zeros((count, length))
    current = g
    for i in range(count):
        words[i] = current.vector(length)
        current = ctx.x * current
    return LinearCode(ctx, length, words)
