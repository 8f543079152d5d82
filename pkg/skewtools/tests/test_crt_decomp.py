import pytest

import skewtools.crt_decomp
from skewtools.crt_decomp import (
    CrtSystem,
    _hensel_bezout,
    build_crt,
    decompose,
    recompose,
)
from skewtools.exceptions import ArityMismatch, CertificateFailed
from skewtools.factor_engine import (
    CentralFactorization,
    FactorEntry,
    factor_length3,
    factor_length6,
)
from skewtools.skew_poly import gcd_r_extended


@pytest.fixture()
def crt_system(skew_ring):
    """Builder for CRT systems of small central factorizations."""
    # Wrapper so fixture can be called multiple times.
    def _gen_data(shape='len3', lam=1, s=0, **ring_kwargs):
        ctx = skew_ring(**ring_kwargs)
        if shape == 'len3':
            return build_crt(factor_length3(lam, s, ctx))
        return build_crt(factor_length6(lam, s, ctx))

    return _gen_data


CASES = [
    dict(shape='len3', p=7, m=1, k=1, theta=0),
    dict(shape='len3', p=5, m=1, k=2, theta=0),
    dict(shape='len6', lam=-1, p=7, m=1, k=2, theta=0),
    dict(shape='len3', s=1, p=5, m=5, k=1, theta=1),
]


@pytest.mark.parametrize('case', CASES)
def test_certificate(crt_system, case):
    """Tests that the idempotents sum to one and are orthogonal idempotents."""
    system = crt_system(**case)
    assert system.certificate() == {
        'sum': True,
        'idempotent': True,
        'orthogonal': True,
    }
    assert len(system) == len(system.blocks)


@pytest.mark.parametrize('case', CASES[:3])
def test_decompose_recompose(crt_system, case):
    """Tests that recompose inverts decompose on reduced polynomials."""
    system = crt_system(**case)
    ctx = system.ctx
    for seed in range(4):
        g = ctx.random(system.modulus.degree + 2, seed=seed)
        parts = decompose(g, system)
        for part, block in zip(parts, system.blocks):
            assert part.degree < block.degree
        assert recompose(parts, system) == g % system.modulus


def test_idempotent_projects_onto_block(crt_system):
    """Tests eps_j = 1 mod block j and 0 mod the other blocks."""
    system = crt_system(p=7, m=1, k=1, theta=0)
    for j, eps in enumerate(system.idempotents):
        for i, block in enumerate(system.blocks):
            assert eps % block == (1 if i == j else 0)


def test_arity_mismatch(crt_system):
    """Tests that a wrong number of components raises ArityMismatch."""
    system = crt_system(p=7, m=1, k=1, theta=0)
    with pytest.raises(ArityMismatch):
        recompose([system.ctx.one], system)


def test_hensel_bezout(skew_ring):
    """Tests that lifted Bezout coefficients reach one over R_3."""
    ctx = skew_ring(7, 1, 3, 0)
    u = ctx.ring.u
    complement = ctx.x + ctx.poly(1 + u)
    block = ctx.x - ctx.poly(1 + 2 * u * u)
    v, w = _hensel_bezout(complement, block)
    assert v * complement + w * block == 1


def test_block_must_divide(skew_ring):
    """Tests that a block that does not divide the modulus is rejected."""
    ctx = skew_ring(7, 1, 1, 0)
    block = ctx.x - 2
    entries = [FactorEntry(block, 1, block, True)]
    fact = CentralFactorization(ctx.binomial(2, 1), entries, 'manual')
    with pytest.raises(CertificateFailed):
        build_crt(fact)


def test_failed_idempotents(skew_ring, monkeypatch):
    """Tests that idempotents failing their identities are not returned."""
    ctx = skew_ring(7, 1, 1, 0)
    monkeypatch.setattr(
        CrtSystem,
        'certificate',
        lambda self: {'sum': False, 'idempotent': True, 'orthogonal': True},
    )
    with pytest.raises(CertificateFailed):
        build_crt(factor_length3(1, 0, ctx))


def test_hensel_bezout_diverges(skew_ring, monkeypatch):
    """Tests that residue coefficients summing to 2 never lift to 1."""

    def doubled(f, g):
        d, v, w = gcd_r_extended(f, g)
        return d, v + v, w + w

    monkeypatch.setattr(skewtools.crt_decomp, 'gcd_r_extended', doubled)
    ctx = skew_ring(7, 1, 3, 0)
    u = ctx.ring.u
    complement = ctx.x + ctx.poly(1 + u)
    block = ctx.x - ctx.poly(1 + 2 * u * u)
    with pytest.raises(CertificateFailed):
        _hensel_bezout(complement, block)
