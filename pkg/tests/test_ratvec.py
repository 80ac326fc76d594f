"""Exact vector arithmetic: parsing, inner products, reflections."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from scalarverma.ratvec import (
    add,
    format_rational,
    inner,
    is_integer,
    pairing,
    parse_rational,
    reflect,
    scale,
    sub,
    weight,
    zero,
)

rationals = st.fractions(
    min_value=-50, max_value=50, max_denominator=12
)
vectors3 = st.tuples(rationals, rationals, rationals)
nonzero_vectors3 = vectors3.filter(lambda v: any(v))


def test_parse_rational_basic():
    assert parse_rational("3") == Fraction(3)
    assert parse_rational("-3/4") == Fraction(-3, 4)
    assert parse_rational("+7/2") == Fraction(7, 2)
    assert parse_rational(" 5/10 ") == Fraction(1, 2)


def test_parse_rational_unicode_minus():
    assert parse_rational("−3/4") == Fraction(-3, 4)
    assert parse_rational("−5") == Fraction(-5)


@pytest.mark.parametrize("bad", ["", "1.5", "3/0", "a", "1/2/3", "--2", "1e3"])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


@given(rationals)
def test_parse_format_roundtrip(x):
    assert parse_rational(format_rational(x)) == x


def test_format_rational_integral():
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-3, 2)) == "-3/2"


def test_weight_and_zero():
    w = weight([1, Fraction(1, 2), -2])
    assert w == (Fraction(1), Fraction(1, 2), Fraction(-2))
    assert zero(3) == (Fraction(0),) * 3


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        inner(weight([1, 2]), weight([1, 2, 3]))
    with pytest.raises(ValueError):
        add(weight([1]), weight([1, 2]))


def test_pairing_zero_root():
    with pytest.raises(ValueError):
        pairing(weight([1, 2]), zero(2))


def test_pairing_known_values():
    # long and short roots of B2
    assert pairing(weight([1, 0]), weight([1, -1])) == 1
    assert pairing(weight([1, 0]), weight([0, 1])) == 0
    assert pairing(weight([1, 1]), weight([0, 1])) == 2


def test_is_integer():
    assert is_integer(Fraction(6, 3))
    assert not is_integer(Fraction(1, 2))


@given(vectors3, vectors3)
def test_inner_symmetric(u, v):
    assert inner(u, v) == inner(v, u)


@given(vectors3, vectors3, vectors3)
def test_inner_bilinear(u, v, w):
    assert inner(add(u, v), w) == inner(u, w) + inner(v, w)
    assert inner(sub(u, v), w) == inner(u, w) - inner(v, w)


@given(rationals, vectors3, vectors3)
def test_inner_scaling(t, u, v):
    assert inner(scale(t, u), v) == t * inner(u, v)


@given(vectors3, nonzero_vectors3)
def test_reflect_involution(v, alpha):
    assert reflect(reflect(v, alpha), alpha) == v


@given(vectors3, vectors3, nonzero_vectors3)
def test_reflect_isometry(u, v, alpha):
    assert inner(reflect(u, alpha), reflect(v, alpha)) == inner(u, v)


@given(nonzero_vectors3)
def test_reflect_negates_root(alpha):
    assert reflect(alpha, alpha) == scale(Fraction(-1), alpha)


@given(vectors3, nonzero_vectors3)
def test_reflect_fixes_orthogonal_complement(v, alpha):
    # project v onto the wall, then the reflection must fix it
    t = Fraction(inner(v, alpha), inner(alpha, alpha))
    fixed = sub(v, scale(t, alpha))
    assert reflect(fixed, alpha) == fixed


@given(rationals, nonzero_vectors3)
def test_pairing_scale_invariant_in_weight_slot(t, alpha):
    v = (Fraction(3), Fraction(-1), Fraction(2))
    assert pairing(scale(t, v), alpha) == t * pairing(v, alpha)
