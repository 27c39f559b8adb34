from fractions import Fraction

import pytest

from koszulator.fields import PrimeField, RationalField
from koszulator.linalg import in_span, mat_vec, nullspace, rank, rref

FIELDS = [PrimeField(), RationalField()]


@pytest.mark.parametrize("field", FIELDS)
def test_rref_known_matrix(field):
    # [[1,2,3],[2,4,6],[1,0,1]] has rank 2
    rows = [[field.of(v) for v in r] for r in [[1, 2, 3], [2, 4, 6], [1, 0, 1]]]
    red, piv = rref(rows, field)
    assert piv == [0, 1]
    assert rank(rows, field) == 2


@pytest.mark.parametrize("field", FIELDS)
def test_nullspace_is_kernel(field):
    rows = [[field.of(v) for v in r] for r in [[1, 2, 3, 4], [0, 1, 1, 1]]]
    basis = nullspace(rows, field, 4)
    assert len(basis) == 2  # rank 2, 4 columns
    for v in basis:
        assert all(field.is_zero(x) for x in mat_vec(rows, v, field))


def test_nullspace_of_empty_matrix():
    f = RationalField()
    basis = nullspace([], f, 3)
    assert len(basis) == 3


def test_in_span():
    f = RationalField()
    vecs = [[f.of(1), f.of(0)], [f.of(1), f.of(1)]]
    assert in_span(vecs, [f.of(3), f.of(2)], f)
    assert not in_span([vecs[0]], [f.of(0), f.of(1)], f)


def test_rational_rref_exact():
    f = RationalField()
    rows = [[Fraction(1, 3), Fraction(1, 2)], [Fraction(2, 3), Fraction(1, 4)]]
    red, piv = rref(rows, f)
    assert piv == [0, 1]
    assert red[0] == [Fraction(1), Fraction(0)]
    assert red[1] == [Fraction(0), Fraction(1)]
