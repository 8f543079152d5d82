import pytest

from skewtools.chain_ring import ChainRingParams, RingAutomorphism
from skewtools.code_model import AmbientQuotient
from skewtools.finite_field import FieldParams
from skewtools.skew_poly import SkewPolyRing


@pytest.fixture()
def field():
    """Builder for finite fields with the Conway modulus by default."""
    # Wrapper so fixture can be called multiple times.
    # https://alysivji.github.io/pytest-fixures-with-function-arguments.html
    def _gen_data(p=7, m=1, modulus=None):
        return FieldParams(p, m, modulus)

    return _gen_data


@pytest.fixture()
def ring(field):
    """Builder for chain rings R_k over F_{p^m}."""

    def _gen_data(p=7, m=1, k=1):
        return ChainRingParams(field(p, m), k)

    return _gen_data


@pytest.fixture()
def skew_ring(ring):
    """Builder for skew polynomial rings R_k[x; Theta]."""

    def _gen_data(p=5, m=2, k=1, theta=1, eta=None):
        base = ring(p, m, k)
        return SkewPolyRing(base, RingAutomorphism(base, theta, eta))

    return _gen_data


@pytest.fixture()
def ambient(skew_ring):
    """Builder for quotients R_k[x; Theta]/(x^N - lam)."""

    def _gen_data(n=3, lam=1, p=7, m=1, k=1, theta=0, eta=None):
        ctx = skew_ring(p, m, k, theta, eta)
        return AmbientQuotient(ctx, ctx.binomial(n, lam))

    return _gen_data
