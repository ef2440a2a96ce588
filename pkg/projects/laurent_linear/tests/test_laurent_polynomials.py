"""Tests for Laurent polynomial arithmetic and rendering."""

import pytest

from laurent_linear import LaurentPoly, VariableMismatchError

T = ("t",)
TT1 = ("t", "t1")


def mono(
    variables: tuple[str, ...], coefficient: int = 1, **powers: int
) -> LaurentPoly:
    """Build a monomial."""
    return LaurentPoly.monomial(variables, powers, coefficient)


def test_arithmetic_examples() -> None:
    one_minus_t = LaurentPoly.one(T) - mono(T, t=1)
    product = one_minus_t * mono(T, t=-1)
    assert product == mono(T, t=-1) - LaurentPoly.one(T)
    assert str(product) == "t^-1 - 1"
    assert one_minus_t + LaurentPoly.zero(T) == one_minus_t
    assert mono(TT1, t=1, t1=1) * mono(TT1, t1=-1) == mono(TT1, t=1)


def test_zero_terms_are_not_stored() -> None:
    p = mono(T, t=2) - mono(T, t=2)
    assert p.is_zero()
    assert p.terms == {}
    assert str(p) == "0"


def test_rendering() -> None:
    p = mono(TT1, 3, t=1, t1=-1) - mono(TT1, t=2) + LaurentPoly.constant(TT1, -2)
    assert str(p) == "-2 + 3*t*t1^-1 - t^2"


def test_powers_and_units() -> None:
    t = mono(T, t=1)
    assert t**-2 == mono(T, t=-2)
    one = LaurentPoly.one(T)
    assert (one + t) ** 2 == one + mono(T, 2, t=1) + mono(T, t=2)
    assert mono(T, -1, t=3).unit_inverse() == mono(T, -1, t=-3)
    with pytest.raises(ValueError, match="not a unit"):
        (LaurentPoly.one(T) + t).unit_inverse()


def test_specialize_drops_variables() -> None:
    p = mono(TT1, t=1, t1=1) + mono(TT1, t=1, t1=-1)
    assert p.specialize(["t1"]) == mono(T, 2, t=1)


def test_variable_lists_must_match() -> None:
    with pytest.raises(VariableMismatchError):
        _ = LaurentPoly.one(T) + LaurentPoly.one(TT1)
    with pytest.raises(VariableMismatchError):
        mono(T, l=1)
