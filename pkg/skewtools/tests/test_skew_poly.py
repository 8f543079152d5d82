import pytest

import skewtools.skew_poly
from skewtools.exceptions import (
    CertificateFailed,
    MismatchedContext,
    NonMonic,
    NonUnitLeadingCoeff,
    ZeroPolynomial,
)
from skewtools.skew_poly import (
    NEG_INF,
    commutes,
    dual_reciprocal,
    eval_left_remainder,
    eval_right_remainder,
    gcd_r,
    gcd_r_extended,
    is_central,
    left_divmod,
    reciprocal,
    right_divmod,
    sp_pow,
    undo_dual_reciprocal,
)

SKEW_CASES = [
    dict(p=5, m=2, k=1, theta=1),
    dict(p=7, m=3, k=1, theta=2),
    dict(p=5, m=2, k=2, theta=1, eta=3),
    dict(p=3, m=2, k=3, theta=1, eta=[2, 1]),
]


def test_commutation_rule(skew_ring):
    """Tests that x a = Theta(a) x."""
    ctx = skew_ring(5, 2, 2, 1, 3)
    x = ctx.x
    for seed in range(5):
        a = ctx.ring.random(seed=seed)
        assert x * ctx.poly(a) == ctx.poly(ctx.auto(a)) * x


@pytest.mark.parametrize('case', SKEW_CASES)
def test_multiplication_associative(skew_ring, case):
    """Tests that the skew product is associative and distributive."""
    ctx = skew_ring(**case)
    f, g, h = (ctx.random(d, seed=d) for d in [2, 3, 1])
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert sp_pow(f, 3) == f * f * f
    assert f ** 0 == 1


@pytest.mark.parametrize('case', SKEW_CASES)
def test_right_divmod(skew_ring, case):
    """Tests g = q f + r with deg r < deg f."""
    ctx = skew_ring(**case)
    for seed in range(3):
        g = ctx.random(6, seed=seed)
        f = ctx.random(3, seed=100 + seed, monic=True)
        q, r = right_divmod(g, f)
        assert q * f + r == g
        assert r.degree < f.degree


@pytest.mark.parametrize('case', SKEW_CASES)
def test_left_divmod(skew_ring, case):
    """Tests g = f q + r with deg r < deg f."""
    ctx = skew_ring(**case)
    for seed in range(3):
        g = ctx.random(5, seed=seed)
        f = ctx.random(2, seed=50 + seed)
        q, r = left_divmod(g, f)
        assert f * q + r == g
        assert r.degree < f.degree


def test_division_errors(skew_ring):
    """Tests division by zero and by a non-unit leading coefficient."""
    ctx = skew_ring(5, 1, 2, 0)
    g = ctx.random(3, seed=0)
    with pytest.raises(ZeroPolynomial):
        right_divmod(g, ctx.zero)
    with pytest.raises(NonUnitLeadingCoeff):
        right_divmod(g, ctx.poly([1, ctx.ring.u]))
    with pytest.raises(NonUnitLeadingCoeff):
        left_divmod(g, ctx.poly([1, ctx.ring.u]))


def test_mismatched_context(skew_ring):
    """Tests that polynomials of different skew rings do not mix."""
    f = skew_ring(5, 2, 1, 1).x
    g = skew_ring(5, 2, 1, 0).x
    with pytest.raises(MismatchedContext):
        f * g


@pytest.mark.parametrize('case', SKEW_CASES[:2])
def test_gcd_r_extended(skew_ring, case):
    """Tests the Bezout identity and that a common right factor divides the gcd."""
    ctx = skew_ring(**case)
    common = ctx.random(1, seed=7, monic=True)
    f = ctx.random(3, seed=1) * common
    g = ctx.random(2, seed=2) * common
    d, a, b = gcd_r_extended(f, g)
    assert a * f + b * g == d
    assert d.is_monic()
    assert (f % d).is_zero() and (g % d).is_zero()
    assert (d % common).is_zero()
    assert gcd_r(ctx.x + 1, ctx.x + 2) == 1


def test_gcd_r_extended_certificate(skew_ring, monkeypatch):
    """Tests that wrong quotients in the Euclidean chain break the Bezout check."""

    def shifted(g, f):
        q, r = right_divmod(g, f)
        return q + q.ctx.one, r

    monkeypatch.setattr(skewtools.skew_poly, 'right_divmod', shifted)
    ctx = skew_ring(7, 1, 1, 0)
    with pytest.raises(CertificateFailed):
        gcd_r_extended(ctx.binomial(2, -1), ctx.x + 1)


def test_degree_of_zero(skew_ring):
    """Tests the degree convention for the zero polynomial."""
    ctx = skew_ring()
    assert ctx.zero.degree == NEG_INF
    assert ctx.x.degree == 1


def test_str(skew_ring):
    """Tests the text form of polynomials."""
    ctx = skew_ring(7, 1, 2, 0)
    f = ctx.poly([1, [2, 3], 0, 1])
    assert str(f) == '1 + (2 + 3*u)*x + x^3'
    assert str(ctx.zero) == '0'


@pytest.mark.parametrize(
    'case,coeffs,central,condition',
    [
        (dict(p=5, m=2, theta=1), [0, 0, 1], True, None),
        (dict(p=5, m=2, theta=1), [0, 1], False, 3),
        (dict(p=5, m=2, theta=1), ['w', 0, 1], False, 1),
        (dict(p=5, m=1, k=2, theta=0, eta=2), [0, 0, 0, 0, 1], True, None),
        (dict(p=5, m=1, k=2, theta=0, eta=2), [0, 0, 1], False, 3),
        (dict(p=5, m=1, k=2, theta=0, eta=2), ['u', 0, 0, 0, 1], False, 1),
        (dict(p=5, m=1, k=2, theta=0, eta=2), [0, 1, 0, 0, 1], False, 2),
    ],
)
def test_is_central(skew_ring, case, coeffs, central, condition):
    """Tests the three centrality conditions."""
    ctx = skew_ring(**case)
    named = {'w': ctx.field.generator, 'u': ctx.ring.u}
    f = ctx.poly([named.get(c, c) for c in coeffs])
    report = is_central(f)
    assert bool(report) is central
    assert report.condition == condition


@pytest.mark.parametrize('case', SKEW_CASES)
def test_is_central_agrees_with_commuting(skew_ring, case):
    """Tests is_central against commuting with x and the ring generators."""
    ctx = skew_ring(**case)
    order = ctx.auto.order()
    candidates = [ctx.random(order, seed=s, monic=True) for s in range(3)]
    candidates += [ctx.binomial(order, 1), ctx.binomial(2 * order, 1)]
    for f in candidates:
        expected = commutes(f, ctx.x) and all(
            commutes(f, ctx.poly(r)) for r in ctx.ring.generators()
        )
        assert bool(is_central(f)) == expected
    assert is_central(ctx.binomial(order, 1))


def test_is_central_needs_monic(skew_ring):
    """Tests that is_central rejects non-monic input."""
    ctx = skew_ring(5, 2)
    with pytest.raises(NonMonic):
        is_central(ctx.poly([1, 2]))


def test_reciprocal(skew_ring):
    """Tests the twisted reversal."""
    ctx = skew_ring(5, 2, 1, 1)
    w = ctx.field.generator
    f = ctx.poly([1, w, 0, 2])
    expected = ctx.poly([2, 0, ctx.auto(ctx.ring.element(w)), 1])
    assert reciprocal(f) == expected
    with pytest.raises(ZeroPolynomial):
        reciprocal(ctx.zero)


@pytest.mark.parametrize('case', SKEW_CASES)
def test_dual_reciprocal_inverse(skew_ring, case):
    """Tests that undo_dual_reciprocal inverts dual_reciprocal."""
    ctx = skew_ring(**case)
    h = ctx.random(4, seed=3)
    assert undo_dual_reciprocal(dual_reciprocal(h, 6), 6) == h


@pytest.mark.parametrize('case', SKEW_CASES)
def test_remainder_evaluation(skew_ring, case):
    """Tests the closed-form remainders against division by x - a."""
    ctx = skew_ring(**case)
    f = ctx.random(5, seed=11)
    for seed in range(3):
        a = ctx.ring.random(seed=seed)
        linear = ctx.x - ctx.poly(a)
        assert ctx.poly(eval_right_remainder(f, a)) == right_divmod(f, linear)[1]
        assert ctx.poly(eval_left_remainder(f, a)) == left_divmod(f, linear)[1]
