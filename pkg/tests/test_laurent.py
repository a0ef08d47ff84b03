import pytest
from hypothesis import given, strategies as st

from trigrid import LaurentPolynomial

coeff_dicts = st.dictionaries(
    st.integers(min_value=-6, max_value=6), st.integers(min_value=-9, max_value=9), max_size=5
)
polys = coeff_dicts.map(LaurentPolynomial)


def test_constructors():
    assert LaurentPolynomial.zero().is_zero()
    assert LaurentPolynomial.one() == 1
    assert LaurentPolynomial.monomial(3, -2).coeff(3) == -2
    assert LaurentPolynomial({0: 0, 2: 0}).is_zero()


def test_arithmetic_basics():
    a = LaurentPolynomial({1: 1})
    d = LaurentPolynomial({2: -1, -2: -1})
    assert a * a == LaurentPolynomial({2: 1})
    assert d * d == LaurentPolynomial({4: 1, 0: 2, -4: 1})
    assert a + (-a) == 0
    assert 2 * a - a == a
    assert (a - 1) * (a + 1) == LaurentPolynomial({2: 1, 0: -1})


def test_pow():
    d = LaurentPolynomial({2: -1, -2: -1})
    assert d**0 == 1
    assert d**3 == d * d * d
    m = LaurentPolynomial({3: -1})
    assert m**-2 == LaurentPolynomial({-6: 1})
    assert m**-1 == LaurentPolynomial({-3: -1})
    with pytest.raises(ValueError):
        d**-1
    with pytest.raises(ValueError):
        LaurentPolynomial({0: 2}) ** -1


def test_shift():
    p = LaurentPolynomial({0: 1, 2: 3})
    assert p.shift(-2) == LaurentPolynomial({-2: 1, 0: 3})
    assert p.shift(0) == p


def test_repr_roundtrippable_forms():
    assert repr(LaurentPolynomial.zero()) == "0"
    assert repr(LaurentPolynomial({1: 1})) == "A"
    assert repr(LaurentPolynomial({-2: -1})) == "-A^-2"


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(polys)
def test_additive_inverse_and_units(p):
    assert p + (-p) == 0
    assert p * 1 == p
    assert p * 0 == 0


@given(polys, st.integers(min_value=-5, max_value=5))
def test_shift_is_monomial_multiplication(p, d):
    assert p.shift(d) == p * LaurentPolynomial.monomial(d)
