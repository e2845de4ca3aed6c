"""
Unit tests for the scalar semirings.

Tests the exact scalar arithmetic including:
- Field laws of Q(i, √2) and the involution
- The Boolean semiring and its missing negatives
- Text grammar parsing and rendering
"""

from fractions import Fraction
import hypothesis
import logging
import hypothesis.strategies as strat
import pytest
import sys
import os

# Add the project root directory to Python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from exceptions import ParseError, UnsupportedOperationError
from scalar_rings import (
    BOOLEAN,
    COMPLEX_ROOT_TWO,
    BooleanScalar,
    ComplexRootTwoScalar,
    get_semiring,
)

rationals = strat.fractions(min_value=-4, max_value=4, max_denominator=6)
field_scalars = strat.builds(ComplexRootTwoScalar, rationals, rationals, rationals, rationals)
boolean_scalars = strat.builds(BooleanScalar, strat.booleans())


@hypothesis.given(field_scalars, field_scalars, field_scalars)
def test_field_associativity_and_distributivity(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z


@hypothesis.given(field_scalars, field_scalars)
def test_field_commutativity_and_involution(x, y):
    assert x * y == y * x
    assert (x * y).conj() == x.conj() * y.conj()
    assert (x + y).conj() == x.conj() + y.conj()
    assert x.conj().conj() == x


@hypothesis.given(field_scalars)
def test_self_adjoint_norm(x):
    # conj(x)·x is self-adjoint
    norm = x.conj() * x
    assert norm.conj() == norm


@hypothesis.given(field_scalars)
def test_inverse(x):
    hypothesis.assume(not x.is_zero())
    assert x * x.inverse() == COMPLEX_ROOT_TWO.one
    assert x / x == COMPLEX_ROOT_TWO.one


@hypothesis.given(boolean_scalars, boolean_scalars, boolean_scalars)
def test_boolean_semiring_laws(x, y, z):
    assert x * (y + z) == x * y + x * z
    assert x + x == x
    assert x.conj() == x
    assert (x + y) + z == x + (y + z)


def test_teleportation_scalar(field):
    s = field.teleportation_scalar()
    two = field.from_int(2)
    assert two * s.conj() * s == field.one
    assert s == ComplexRootTwoScalar(0, Fraction(1, 2))
    assert s * s == ComplexRootTwoScalar(Fraction(1, 2))


def test_imaginary_unit(field):
    assert field.i * field.i == field.minus_one()
    assert field.root_two * field.root_two == field.from_int(2)


def test_inverse_of_zero_raises(field):
    with pytest.raises(ZeroDivisionError):
        field.zero.inverse()


def test_boolean_has_no_negatives(rel):
    assert rel.one + rel.one == rel.one
    with pytest.raises(UnsupportedOperationError):
        rel.minus_one()
    with pytest.raises(UnsupportedOperationError):
        -rel.one
    with pytest.raises(UnsupportedOperationError):
        rel.one - rel.one
    with pytest.raises(UnsupportedOperationError):
        rel.teleportation_scalar()


def test_from_int(semiring):
    assert semiring.from_int(0) == semiring.zero
    assert semiring.from_int(1) == semiring.one
    if semiring is BOOLEAN:
        assert semiring.from_int(4) == semiring.one
    else:
        assert semiring.from_int(4) == ComplexRootTwoScalar(4)


@pytest.mark.parametrize(
    "text,expected",
    [
        ("0", ComplexRootTwoScalar()),
        ("1", ComplexRootTwoScalar(1)),
        ("-1", ComplexRootTwoScalar(-1)),
        ("s", ComplexRootTwoScalar(0, Fraction(1, 2))),
        ("-s", ComplexRootTwoScalar(0, Fraction(-1, 2))),
        ("1/2√2", ComplexRootTwoScalar(0, Fraction(1, 2))),
        ("1/2sqrt2i", ComplexRootTwoScalar(0, 0, 0, Fraction(1, 2))),
        ("i", ComplexRootTwoScalar(0, 0, 1)),
        ("1 - 3/4i", ComplexRootTwoScalar(1, 0, Fraction(-3, 4))),
        ("2 + r2 + 3i - √2i", ComplexRootTwoScalar(2, 1, 3, -1)),
    ],
)
def test_parse_field_scalars(text, expected):
    assert COMPLEX_ROOT_TWO.parse(text) == expected


@pytest.mark.parametrize("text", ["", "x", "1/0", "2//3", "√3", "i√2i"])
def test_parse_field_rejects_malformed(text):
    with pytest.raises(ParseError):
        COMPLEX_ROOT_TWO.parse(text)


def test_malformed_terms_are_logged(caplog):
    caplog.set_level(logging.DEBUG, logger="scalar_rings")
    with pytest.raises(ParseError):
        COMPLEX_ROOT_TWO.parse("1 + x")
    assert "malformed term '+x' in scalar '1 + x'" in caplog.text


@hypothesis.given(field_scalars)
def test_render_parses_back(x):
    assert COMPLEX_ROOT_TWO.parse(COMPLEX_ROOT_TWO.render(x)) == x


def test_render_field_scalars(field):
    assert field.render(field.zero) == "0"
    assert field.render(field.teleportation_scalar()) == "1/2√2"
    assert field.render(ComplexRootTwoScalar(1, 0, -1)) == "1 - i"
    assert field.render(ComplexRootTwoScalar(Fraction(-1, 2), 0, 0, 2)) == "-1/2 + 2√2i"


def test_parse_boolean(rel):
    assert rel.parse("1") == rel.one
    assert rel.parse(" true ") == rel.one
    assert rel.parse("0") == rel.zero
    with pytest.raises(ParseError):
        rel.parse("2")
    assert rel.render(rel.one) == "1"


def test_get_semiring():
    assert get_semiring("boolean") is BOOLEAN
    assert get_semiring("complex-root-two") is COMPLEX_ROOT_TWO
    with pytest.raises(ValueError):
        get_semiring("tropical")


def test_sample_pools():
    assert COMPLEX_ROOT_TWO.sample_pool() == [
        COMPLEX_ROOT_TWO.zero,
        COMPLEX_ROOT_TWO.one,
        COMPLEX_ROOT_TWO.minus_one(),
        COMPLEX_ROOT_TWO.i,
        COMPLEX_ROOT_TWO.teleportation_scalar(),
    ]
    assert BOOLEAN.sample_pool() == [BOOLEAN.zero, BOOLEAN.one]


def test_unit_products(field):
    root_two, i = field.root_two, field.i
    assert root_two * root_two == field.from_int(2)
    assert i * i == field.minus_one()
    assert (root_two * i) * (root_two * i) == field.from_int(-2)
    assert field.parse("1 + √2") * field.parse("1 + i") == field.parse("1 + √2 + i + √2i")
    assert field.parse("1/2√2 - 3i") * field.parse("2/3√2i") == field.parse("2/3i + 2√2")


@hypothesis.given(field_scalars, rationals)
def test_rational_factors_scale_componentwise(x, q):
    scaled = ComplexRootTwoScalar(q * x.a, q * x.b, q * x.c, q * x.d)
    assert x * ComplexRootTwoScalar(q) == scaled
    assert ComplexRootTwoScalar(q) * x == scaled
    assert x * 0 == COMPLEX_ROOT_TWO.zero
    assert x + 0 == x


def test_units_return_the_other_operand(field):
    x = field.parse("3/4 - √2i")
    assert (x * field.one) is x
    assert (field.one * x) is x
    assert (x + field.zero) is x
    assert (field.zero + x) is x
    assert type((x * field.i).a) is Fraction
