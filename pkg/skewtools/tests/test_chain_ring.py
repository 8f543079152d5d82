from itertools import product

import pytest

from skewtools.chain_ring import (
    ChainRingParams,
    RingAutomorphism,
    apply_automorphism,
    automorphism_group_order,
    automorphism_order,
    cr_arith,
    cr_invert,
    enumerate_automorphisms,
    mu,
    pi,
    unit_decomposition,
)
from skewtools.exceptions import CapExceeded, KTooSmall, MismatchedRing, NotAUnit


def _brute_force_automorphisms(ring):
    """Every bijective ring endomorphism, found by trying all images of u."""
    elements = list(ring.elements())
    found = set()
    for e in range(ring.field.m):
        theta = RingAutomorphism(ring, e)
        for v in elements:

            def image(a):
                total = ring.zero
                power = ring.one
                for i in range(ring.k):
                    total = total + ring.element(theta(ring.element(a[i]))[0]) * power
                    power = power * v
                return total

            table = {a: image(a) for a in elements}
            if len(set(table.values())) != len(elements):
                continue
            if all(
                table[a * b] == table[a] * table[b]
                and table[a + b] == table[a] + table[b]
                for a, b in product(elements, repeat=2)
            ):
                found.add(tuple(table[a] for a in elements))
    return found


def test_element_arithmetic(ring):
    """Tests products truncate at u^k and the string form."""
    R2 = ring(7, 1, 2)
    u = R2.u
    assert (u * u).is_zero()
    a = R2.element([3, 2])
    assert str(a) == '3 + 2*u'
    assert a.valuation() == 0 and u.valuation() == 1 and R2.zero.valuation() == 2
    R3 = ring(7, 1, 3)
    assert R3.u * R3.u == R3.element([0, 0, 1])


@pytest.mark.parametrize('seed', range(5))
def test_unit_inverse(ring, seed):
    """Tests that units times their inverses give one."""
    R = ring(5, 2, 3)
    a = R.random(seed=seed, unit=True)
    assert a * cr_invert(a) == 1
    assert a / a == 1


def test_non_unit_inverse(ring):
    """Tests that inverting a non-unit raises NotAUnit."""
    with pytest.raises(NotAUnit):
        ring(7, 1, 2).u.inverse()


def test_cr_arith(ring):
    """Tests cr_arith operations and ring mismatches."""
    R = ring(5, 1, 2)
    a, b = R.element([1, 2]), R.element([3, 4])
    assert cr_arith(a, b, 'add') == R.element([4, 1])
    assert cr_arith(a, b, 'sub') == R.element([3, 3])
    assert cr_arith(a, b, 'mul') == R.element([3, 0])
    with pytest.raises(ValueError):
        cr_arith(a, b, 'div')
    with pytest.raises(MismatchedRing):
        cr_arith(a, ring(5, 1, 3).one, 'add')


def test_projections(ring):
    """Tests mu and pi on a ring element."""
    R = ring(7, 1, 3)
    a = R.element([1, 2, 3])
    assert int(mu(a)) == 1
    assert pi(a) == ChainRingParams(R.field, 2).element([1, 2])
    with pytest.raises(KTooSmall):
        pi(ring(7, 1, 1).one)


@pytest.mark.parametrize('k', [2, 3, 4])
def test_unit_decomposition(ring, k):
    """Tests that the unit factors multiply back to eta mod u^{k-1}."""
    R = ring(5, 2, k)
    eta = R.random(seed=k, unit=True)
    factors = unit_decomposition(eta)
    assert len(factors) == k - 1
    total = R.one
    for f in factors:
        total = total * f
    assert (total - eta).valuation() >= k - 1
    assert factors[0].is_constant()


@pytest.mark.parametrize('seed', range(4))
def test_automorphism_is_ring_map(ring, seed):
    """Tests that Theta preserves sums and products and has an inverse."""
    R = ring(5, 2, 3)
    auto = RingAutomorphism(R, 1, R.random(seed=seed, unit=True))
    a, b = R.random(seed=10 + seed), R.random(seed=20 + seed)
    assert auto(a * b) == auto(a) * auto(b)
    assert auto(a + b) == auto(a) + auto(b)
    assert auto(R.u) == auto.eta * R.u
    assert auto.inverse()(auto(a)) == a
    assert auto.compose(auto.inverse()).is_identity()
    order = auto.order()
    assert auto.power(order).is_identity()


def test_automorphism_from_factors(ring):
    """Tests that from_factors builds the product of the unit factors."""
    R = ring(5, 1, 3)
    auto = RingAutomorphism.from_factors(R, 0, [2, R.element([1, 3])])
    assert auto.eta == R.element([2, 1])
    assert [str(f) for f in auto.factors()] == ['2', '1 + 3*u']
    with pytest.raises(ValueError):
        RingAutomorphism.from_factors(R, 0, [R.element([2, 1])])


def test_automorphism_eta_must_be_unit(ring):
    """Tests that a non-unit eta raises NotAUnit."""
    R = ring(5, 1, 2)
    with pytest.raises(NotAUnit):
        RingAutomorphism(R, 0, R.u)


@pytest.mark.parametrize('p,m,k', [(3, 1, 2), (3, 1, 3), (5, 1, 2), (3, 2, 2)])
def test_automorphism_count(ring, p, m, k):
    """Tests that enumeration finds every automorphism exactly once."""
    R = ring(p, m, k)
    autos = list(enumerate_automorphisms(R))
    assert len(autos) == automorphism_group_order(R)
    assert len(set(autos)) == len(autos)
    assert len(_brute_force_automorphisms(R)) == len(autos)


def test_automorphism_count_cap(ring):
    """Tests that CapExceeded guards large enumerations."""
    with pytest.raises(CapExceeded):
        list(enumerate_automorphisms(ring(7, 2, 3), cap=10))


def test_apply_automorphism_and_order(ring):
    """Tests a scaling of u by 2 over F_7 and the Frobenius of F_9."""
    R = ring(7, 1, 2)
    scale = RingAutomorphism(R, 0, 2)
    assert apply_automorphism(scale, R.element([3, 1])) == R.element([3, 2])
    assert automorphism_order(scale) == 3
    with pytest.raises(CapExceeded):
        automorphism_order(scale, cap=2)
    F = ring(3, 2, 1)
    assert automorphism_order(RingAutomorphism(F, 1)) == 2
