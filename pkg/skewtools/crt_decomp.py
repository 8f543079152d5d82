import logging

from .checks import certify
from .exceptions import ArityMismatch, NonUnitPivot, NotCoprime
from .skew_poly import gcd_r_extended, right_divmod

logger = logging.getLogger(__name__)


class CrtSystem:
    """Idempotents ``eps_j`` splitting the quotient by a central factorization.

    Args:
        factorization (CentralFactorization): Central coprime blocks ``f_j^{k_j}``.
        complements (list of SkewPoly): ``F_j``, the modulus divided by block ``j``.
        idempotents (list of SkewPoly): ``eps_j = v_j F_j`` reduced mod the
            modulus.
    """

    def __init__(self, factorization, complements, idempotents):
        self.factorization = factorization
        self.complements = complements
        self.idempotents = idempotents

    @property
    def modulus(self):
        return self.factorization.modulus

    @property
    def blocks(self):
        return self.factorization.blocks

    @property
    def ctx(self):
        return self.modulus.ctx

    def __len__(self):
        return len(self.idempotents)

    def __repr__(self):
        return f'CrtSystem(modulus={self.modulus}, t={len(self)})'

    def reduce(self, g):
        return g % self.modulus

    def certificate(self):
        """Checks ``sum eps_j = 1``, ``eps_j^2 = eps_j`` and ``eps_j eps_l = 0``."""
        total = self.ctx.zero
        for eps in self.idempotents:
            total = total + eps
        idempotent = all(self.reduce(e * e) == e for e in self.idempotents)
        orthogonal = all(
            self.reduce(a * b).is_zero()
            for i, a in enumerate(self.idempotents)
            for j, b in enumerate(self.idempotents)
            if i != j
        )
        return {
            'sum': self.reduce(total) == 1,
            'idempotent': idempotent,
            'orthogonal': orthogonal,
        }


def _hensel_bezout(complement, block):
    """Bezout coefficients over R_k lifted from the residue field.

    If ``v F + w f = t`` with ``t = 1 mod u``, replacing ``v, w`` by
    ``(2 - t) v, (2 - t) w`` squares ``t - 1``, so finitely many steps reach 1.
    """
    ctx = complement.ctx
    residue = ctx.residue()
    d, v_bar, w_bar = gcd_r_extended(ctx.project(complement), ctx.project(block))
    if d != residue.one:
        raise NotCoprime(f'{complement} and {block} are not coprime mod u.')
    v, w = ctx.lift(v_bar), ctx.lift(w_bar)
    t = v * complement + w * block
    steps = 0
    while t != 1:
        correction = 2 - t
        v, w = correction * v, correction * w
        t = v * complement + w * block
        steps += 1
        logger.debug('Hensel step %d on block %s.', steps, block)
        certify(steps <= ctx.k, f'Hensel lifting for {block} did not converge.')
    return v, w


def build_crt(factorization):
    """Builds the idempotents of a central coprime factorization.

    ``F_j`` is the exact quotient of the modulus by block ``j``; Bezout gives
    ``v_j F_j + w_j f_j^{k_j} = 1`` and ``eps_j = v_j F_j mod modulus``.

    Args:
        factorization (CentralFactorization)

    Returns:
        CrtSystem

    Raises:
        NotCoprime: If a block and its complement have a nontrivial right gcd.
    """
    modulus = factorization.modulus
    ctx = modulus.ctx
    complements, idempotents = [], []
    for block in factorization.blocks:
        complement, remainder = right_divmod(modulus, block)
        certify(remainder.is_zero(), f'Block {block} does not divide {modulus}.')
        try:
            d, v, w = gcd_r_extended(complement, block)
            if d != 1:
                raise NotCoprime(f'gcd_r({complement}, {block}) = {d}.')
        except NonUnitPivot:
            v, w = _hensel_bezout(complement, block)
        complements.append(complement)
        idempotents.append((v * complement) % modulus)
    if len(idempotents) == 1:
        idempotents = [ctx.one % modulus]
    system = CrtSystem(factorization, complements, idempotents)
    report = system.certificate()
    certify(all(report.values()), f'{system!r} failed its certificate: {report}.')
    return system


def decompose(g, system):
    """Residues of ``g`` modulo each block."""
    return [g % block for block in system.blocks]


def recompose(components, system):
    """Inverse of ``decompose``: ``sum eps_j a_j`` reduced mod the modulus.

    Raises:
        ArityMismatch: If the number of components differs from the number of
            blocks.
    """
    if len(components) != len(system):
        raise ArityMismatch(
            f'Expected {len(system)} components, got {len(components)}.'
        )
    total = system.ctx.zero
    for eps, a in zip(system.idempotents, components):
        total = total + eps * a
    return system.reduce(total)
