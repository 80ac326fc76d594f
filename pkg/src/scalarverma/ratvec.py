"""Exact rational scalars and coordinate weight vectors.

Weights are plain tuples of `fractions.Fraction` in the ambient coordinates
of a case realization.  Everything is exact: no floats anywhere, and every
operation returns a fresh immutable value, so weights can be shared freely
between threads.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable

Rational = Fraction
Weight = tuple[Fraction, ...]

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?")


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" into an exact rational.

    Accepts an ASCII hyphen or a U+2212 minus sign.  Anything else (floats,
    exponents, whitespace inside the number) is rejected.
    """
    s = text.strip().replace("−", "-")
    if not _RATIONAL_RE.fullmatch(s):
        raise ValueError(f"not a rational: {text!r} (expected p or p/q)")
    num, _, den = s.partition("/")
    if den and int(den) == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den)) if den else Fraction(int(num))


def format_rational(x: Fraction) -> str:
    """Render as "p/q", or just "p" when the denominator is 1."""
    return str(x)


def weight(coords: Iterable) -> Weight:
    """Build a weight from an iterable of ints, rationals, or "p/q" strings."""
    return tuple(
        parse_rational(c) if isinstance(c, str) else Fraction(c) for c in coords
    )


def zero(dim: int) -> Weight:
    return (Fraction(0),) * dim


def add(mu: Weight, nu: Weight) -> Weight:
    _check_dims(mu, nu)
    return tuple(a + b for a, b in zip(mu, nu))


def sub(mu: Weight, nu: Weight) -> Weight:
    _check_dims(mu, nu)
    return tuple(a - b for a, b in zip(mu, nu))


def scale(c, mu: Weight) -> Weight:
    k = Fraction(c)
    return tuple(k * a for a in mu)


def inner(mu: Weight, nu: Weight) -> Fraction:
    """Euclidean inner product in the ambient coordinates."""
    _check_dims(mu, nu)
    return sum((a * b for a, b in zip(mu, nu)), Fraction(0))


def pairing(mu: Weight, nu: Weight) -> Fraction:
    """Normalized product 2*inner(mu, nu) / inner(nu, nu); requires nu != 0."""
    nn = inner(nu, nu)
    if nn == 0:
        raise ValueError("pairing against the zero weight")
    return 2 * inner(mu, nu) / nn


def reflect(mu: Weight, alpha: Weight) -> Weight:
    """Orthogonal reflection of mu in the hyperplane normal to alpha.

    Involutive and inner-product preserving; requires alpha != 0.
    """
    k = pairing(mu, alpha)
    return tuple(m - k * a for m, a in zip(mu, alpha))


def is_integer(x: Fraction) -> bool:
    return x.denominator == 1


def _check_dims(mu: Weight, nu: Weight) -> None:
    if len(mu) != len(nu):
        raise ValueError(f"dimension mismatch: {len(mu)} vs {len(nu)}")
