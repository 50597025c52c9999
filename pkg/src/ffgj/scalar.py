"""Exact scalars.

Python's ``int`` is already an arbitrary-precision signed integer and
``fractions.Fraction`` keeps itself normalized with a positive denominator,
so both are used directly. This module adds the checked division that
fraction-free elimination depends on, plus the textual scalar format.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

from .errors import DivisionByZero, NonExactDivision

Scalar = Union[int, Fraction]

SCALAR_RE = re.compile(r"-?[0-9]+(?:/[1-9][0-9]*)?")


def exact_div(a: int, b: int) -> int:
    """Return ``a // b``, refusing to truncate."""
    if b == 0:
        raise DivisionByZero(f"exact_div({a}, 0)")
    q, r = divmod(a, b)
    if r:
        raise NonExactDivision(a, b)
    return q


def rational_from(num: int, den: int = 1) -> Fraction:
    if den == 0:
        raise DivisionByZero(f"rational_from({num}, 0)")
    return Fraction(num, den)


def as_exact(x) -> Scalar:
    """Demote an integral ``Fraction`` to ``int``; pass other scalars through."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, (int, Fraction)):
        return x
    raise TypeError(f"not an exact scalar: {x!r}")


def render_scalar(x: Scalar) -> str:
    x = as_exact(x)
    if isinstance(x, int):
        return str(x)
    return f"{x.numerator}/{x.denominator}"


def parse_scalar(token: str) -> Scalar:
    """Parse ``-?[0-9]+`` or ``-?[0-9]+/[1-9][0-9]*``.

    Integer tokens come back as ``int``; fraction tokens as a normalized
    ``Fraction`` (even when the value happens to be integral, e.g. ``4/2``).
    """
    if not SCALAR_RE.fullmatch(token):
        raise ValueError(f"invalid scalar token {token!r}")
    if "/" in token:
        num, den = token.split("/")
        return Fraction(int(num), int(den))
    return int(token)
