import pytest

from koszulator.fields import PrimeField, RationalField
from koszulator.polyring import (
    ParseError,
    RingError,
    monomials_of_degree,
    parse_polynomial,
    ring_from_strings,
)

VARS = ["x", "y", "z"]
Q = RationalField()


def P(text):
    return parse_polynomial(text, VARS, Q)


def test_monomial_order_graded_lex_descending():
    # degree-2 monomials in x > y > z: x², xy, xz, y², yz, z²
    assert monomials_of_degree(3, 2) == [
        (2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2),
    ]


def test_parse_round_trip():
    for text in ["x^2 + y*z", "-x + 3*y^2*z - 1/2*z^3", "0", "x*y*z"]:
        p = P(text)
        assert P(p.to_string(VARS)) == p


def test_parse_coefficients_and_powers():
    from fractions import Fraction

    p = P("2*x^2 - 3/4*y*z")
    assert p.terms[(2, 0, 0)] == Fraction(2)
    assert p.terms[(0, 1, 1)] == Fraction(-3, 4)


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as exc:
        P("x^2 + *y")
    assert exc.value.position == 6


def test_parse_unknown_variable():
    with pytest.raises(ParseError):
        P("x + w")


def test_polynomial_homogeneous_components():
    p = P("x^2 + y + z^3")
    comps = p.homogeneous_components()
    assert sorted(comps) == [1, 2, 3]
    assert comps[2] == P("x^2")
    assert not p.is_homogeneous()
    assert P("x*y + z^2").is_homogeneous(2)


def test_ring_rejects_inhomogeneous_or_low_degree_generators():
    with pytest.raises(RingError):
        ring_from_strings(VARS, ["x^2 + y"], Q)
    with pytest.raises(RingError):
        ring_from_strings(VARS, ["x"], Q)


def test_normal_form_pinned_representatives():
    # in Q[x,y,z]/(x^2, y^2+z^2): nf eliminates the largest monomial of each
    # relation, so y^2 reduces to -z^2 and z^2 is already reduced
    ring = ring_from_strings(VARS, ["x^2", "y^2+z^2"], Q)
    assert ring.normal_form(P("z^2")) == P("z^2")
    assert ring.normal_form(P("y^2")) == P("-z^2")
    assert ring.normal_form(P("x^2")).is_zero()
    assert ring.normal_form(P("x^3 + x*y")) == P("x*y")


def test_dim_quotient_matches_hand_count():
    # Q[x,y,z]/(x^2, y^2+z^2): Hilbert series (1+t)^2/(1-t) = 1,3,4,4,...
    ring = ring_from_strings(VARS, ["x^2", "y^2+z^2"], Q)
    assert [ring.dim_quotient(d) for d in range(4)] == [1, 3, 4, 4]
    assert ring.hilbert_coefficients(8) == ring.ci_hilbert_coefficients(8)


def test_degree_piece_basis_is_reduced():
    ring = ring_from_strings(VARS, ["x^2", "y^2+z^2"], Q)
    basis = ring.degree_piece_basis(2)
    assert len(basis) == 4
    assert (2, 0, 0) not in basis  # x^2 is a relation leading monomial


def test_prime_field_ring_agrees_with_rational():
    fp = PrimeField()
    ring_p = ring_from_strings(VARS, ["x^2+y^2", "x*z", "z^2+x*y"], fp)
    ring_q = ring_from_strings(VARS, ["x^2+y^2", "x*z", "z^2+x*y"], Q)
    assert ring_p.hilbert_coefficients(10) == ring_q.hilbert_coefficients(10)
    assert ring_p.codepth == ring_q.codepth == 3
