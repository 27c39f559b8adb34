from fractions import Fraction

import pytest

from koszulator.fields import (
    FieldError,
    PrimeField,
    RationalField,
    field_from_spec,
)


def test_prime_field_arithmetic():
    f = PrimeField(7)
    assert f.add(5, 4) == 2
    assert f.mul(3, 5) == 1
    assert f.neg(2) == 5
    assert f.sub(1, 3) == 5
    # a * a^{-1} = 1 for every unit
    for a in range(1, 7):
        assert f.mul(a, f.inv(a)) == 1


def test_prime_field_of_handles_rationals():
    f = PrimeField(7)
    # 1/2 = 4 mod 7
    assert f.of(Fraction(1, 2)) == 4
    assert f.of(-1) == 6


def test_prime_field_symmetric_printing():
    f = PrimeField(7)
    assert f.to_str(f.of(-2)) == "-2"
    assert f.to_str(3) == "3"


def test_prime_field_rejects_composite():
    with pytest.raises(FieldError):
        PrimeField(6)


def test_rational_field():
    f = RationalField()
    a = f.of(Fraction(2, 3))
    assert f.mul(a, f.inv(a)) == 1
    assert f.add(f.of(1), f.of(-1)) == 0
    assert f.is_zero(f.zero())
    with pytest.raises(ZeroDivisionError):
        f.inv(f.zero())


def test_field_from_spec():
    assert field_from_spec("rational") == RationalField()
    assert field_from_spec("prime 13") == PrimeField(13)
    with pytest.raises(FieldError):
        field_from_spec("prime 4")
    with pytest.raises(FieldError):
        field_from_spec("galois 9")
