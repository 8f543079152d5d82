import pytest

import skewtools.finite_field
from skewtools.exceptions import (
    CertificateFailed,
    DivisionByZero,
    FieldTooLarge,
    MismatchedField,
    ZeroInput,
)
from skewtools.finite_field import (
    FieldAutomorphism,
    FieldParams,
    conway_modulus,
    cube_root_field,
    ff_arith,
    field_params_of,
    frobenius,
    prime_field_generator,
    primitive_cube_root_of_unity,
    primitive_root_of_unity,
    pth_power_root,
    square_roots,
)


@pytest.mark.parametrize('p,m,expected', [(5, 5, [3, 4, 0, 0, 0, 1])])
def test_conway_modulus(p, m, expected):
    """Tests that the default modulus is the Conway polynomial."""
    assert conway_modulus(p, m) == expected
    assert list(FieldParams(p, m).modulus) == expected


@pytest.mark.parametrize(
    'p,m,modulus', [(2, 1, None), (9, 1, None), (3, 2, [0, 0, 1]), (3, 2, [1, 1])]
)
def test_invalid_field(p, m, modulus):
    """Tests that even or composite characteristics and bad moduli are rejected."""
    with pytest.raises(ValueError):
        FieldParams(p, m, modulus)


def test_field_too_large():
    """Tests that fields beyond the supported order raise FieldTooLarge."""
    with pytest.raises(FieldTooLarge):
        FieldParams(101, 4)


def test_generator_satisfies_modulus():
    """Tests that w is a root of the chosen modulus."""
    F9 = FieldParams(3, 2, [1, 0, 1])
    w = F9.generator
    assert F9.coefficients(w * w) == [2, 0]
    assert F9.format(w) == 'w'
    assert F9.format(w * w) == '2'
    assert F9.format(F9.element([1, 2])) == '2*w + 1'


def test_encoding_order(field):
    """Tests that elements_in_order walks the field once in encoding order."""
    F = field(5, 2)
    elements = F.elements_in_order()
    assert [F.encode(elements[i]) for i in range(F.order)] == list(range(F.order))
    assert F.sort([elements[7], elements[3], elements[12]]) == [
        elements[3],
        elements[7],
        elements[12],
    ]


@pytest.mark.parametrize('op', ['add', 'sub', 'mul', 'div'])
def test_ff_arith_matches_operators(field, op):
    """Tests that ff_arith agrees with the galois operators."""
    F = field(7, 2)
    a = F.random(seed=1, nonzero=True)
    b = F.random(seed=2, nonzero=True)
    expected = {'add': a + b, 'sub': a - b, 'mul': a * b, 'div': a / b}[op]
    assert ff_arith(a, b, op) == expected


def test_ff_arith_errors(field):
    """Tests division by zero, mismatched fields and unknown operations."""
    F7, F5 = field(7), field(5)
    with pytest.raises(DivisionByZero):
        ff_arith(F7.one, F7.zero, 'div')
    with pytest.raises(MismatchedField):
        ff_arith(F7.one, F5.one, 'add')
    with pytest.raises(ValueError):
        ff_arith(F7.one, F7.one, 'pow')


@pytest.mark.parametrize('p,m', [(3, 2), (5, 3), (7, 2)])
def test_frobenius_order(field, p, m):
    """Tests that the Frobenius has order m and fixes exactly F_p."""
    F = field(p, m)
    elements = F.elements_in_order()
    assert (frobenius(elements, m) == elements).all()
    fixed = (frobenius(elements, 1) == elements).sum()
    assert fixed == p
    assert FieldAutomorphism(F, 1).order == m
    assert FieldAutomorphism(F, 1).compose(FieldAutomorphism(F, -1)).is_identity()


@pytest.mark.parametrize(
    'p,a,expected',
    [(7, 6, [3, 5, 6]), (7, 1, [1, 2, 4]), (5, 2, [3]), (19, 1, [1, 7, 11])],
)
def test_cube_root_field(field, p, a, expected):
    """Tests all cube roots in the closed-form and scanning branches."""
    F = field(p)
    roots = cube_root_field(F.element(a))
    assert [int(r) for r in roots] == expected
    assert all(r ** 3 == a for r in roots)


def test_cube_root_field_non_cube(field):
    """Tests that non-cubes give None and zero raises ZeroInput."""
    F = field(7)
    assert cube_root_field(F.element(2)) is None
    with pytest.raises(ZeroInput):
        cube_root_field(F.zero)


@pytest.mark.parametrize('s', [0, 1, 2, 3, 7])
def test_pth_power_root(field, s):
    """Tests that the p^s-th root is a root."""
    F = field(5, 3)
    a = F.random(seed=s, nonzero=True)
    b = pth_power_root(a, s)
    assert b ** (5 ** s) == a


def test_pth_power_root_errors(field):
    """Tests that pth_power_root rejects zero and negative exponents."""
    F = field(5, 3)
    with pytest.raises(ZeroInput):
        pth_power_root(F.zero, 1)
    with pytest.raises(ValueError):
        pth_power_root(F.one, -1)


def test_roots_of_unity(field):
    """Tests the least-encoded primitive roots of unity."""
    assert int(primitive_cube_root_of_unity(field(7))) == 2
    assert primitive_cube_root_of_unity(field(5)) is None
    zeta = primitive_root_of_unity(field(13), 12)
    assert zeta ** 12 == 1 and zeta ** 6 != 1 and zeta ** 4 != 1
    assert prime_field_generator(7) == 3


def test_square_roots(field):
    """Tests square roots in F_7."""
    F = field(7)
    assert [int(r) for r in square_roots(F.element(2))] == [3, 4]
    assert square_roots(F.element(3)) == []


def test_field_params_of(field):
    """Tests that the field of an element is recovered."""
    F = field(3, 2, [2, 2, 1])
    assert field_params_of(F.generator) == F


def test_pth_power_root_certificate(field, monkeypatch):
    """Tests that a wrong Frobenius image is caught before a root is returned."""
    F = field(5, 3)
    monkeypatch.setattr(
        skewtools.finite_field, 'frobenius', lambda a, e: a + type(a)(1)
    )
    with pytest.raises(CertificateFailed):
        pth_power_root(F.generator, 1)


def test_field_params_cached(field):
    """Tests that elements of one field share a FieldParams and that passing it
    to cube_root_field changes nothing."""
    F = field(7)
    a = F.element(6)
    assert field_params_of(a) is field_params_of(F.element(3))
    assert [int(r) for r in cube_root_field(a, field=F)] == [3, 5, 6]
