"""Exact rational scalars, points, and permutations.

Everything geometric in this package is decided over arbitrary-precision
rationals (``fractions.Fraction``), so predicates are exact and there are no
tolerances anywhere.  Floating point exists only in the SVG renderer.

Points are plain tuples of Fractions; permutations are tuples of 1-based
images ``(pi(1), ..., pi(d))``.  Both are immutable and freely shareable.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Sequence

Rational = Fraction
Point = tuple[Fraction, ...]
Permutation = tuple[int, ...]
IntVector = tuple[int, ...]

# Accepted grammar: -? digits ( "/" digits )?
_RATIONAL_RE = re.compile(r"-?\d+(?:/\d+)?")


class ParseError(ValueError):
    """Malformed rational or point literal."""


def rat_parse(s: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` (optionally negated) into a canonical Fraction.

    Raises ParseError on anything outside the grammar, including a zero
    denominator.  The result is always in lowest terms with a positive
    denominator (``Fraction`` guarantees both).
    """
    if not _RATIONAL_RE.fullmatch(s):
        raise ParseError(f"not a rational literal: {s!r}")
    num, _, den = s.partition("/")
    if den:
        if int(den) == 0:
            raise ParseError(f"zero denominator: {s!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(num))


def rat_format(r: Fraction) -> str:
    """Canonical rendering: ``"p/q"`` in lowest terms, or ``"p"`` when q = 1."""
    return str(r)


def rat_floor(r: Fraction) -> int:
    """Greatest integer <= r."""
    return math.floor(r)


def point_parse(s: str, d: int) -> Point:
    """Parse a comma-separated list of exactly ``d`` rational tokens."""
    tokens = [t.strip() for t in s.split(",")]
    if len(tokens) != d:
        raise ParseError(f"expected {d} coordinates, got {len(tokens)}: {s!r}")
    return tuple(rat_parse(t) for t in tokens)


def point_format(p: Sequence[Fraction]) -> str:
    return ",".join(rat_format(c) for c in p)


def as_point(values: Sequence) -> Point:
    """Coerce a sequence of ints/Fractions to a Point."""
    return tuple(Fraction(v) for v in values)


def vec_add(a: Sequence[Fraction], b: Sequence[Fraction]) -> Point:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vec_sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> Point:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vec_scale(c: Fraction, a: Sequence[Fraction]) -> Point:
    return tuple(c * x for x in a)


def ones(d: int) -> Point:
    """The all-ones vector e."""
    return (Fraction(1),) * d


def unit_vector(d: int, j: int) -> Point:
    """The coordinate vector e^j (1-based j)."""
    if not 1 <= j <= d:
        raise ValueError(f"coordinate index {j} out of range 1..{d}")
    return tuple(Fraction(1 if i == j else 0) for i in range(1, d + 1))


def is_permutation(perm: Sequence[int], d: int) -> bool:
    return len(perm) == d and sorted(perm) == list(range(1, d + 1))


def perm_identity(d: int) -> Permutation:
    return tuple(range(1, d + 1))


def perm_position(perm: Permutation, j: int) -> int:
    """The 1-based position of j in perm, i.e. the inverse image pi^{-1}(j)."""
    return perm.index(j) + 1


def perm_inverse(perm: Permutation) -> Permutation:
    inv = [0] * len(perm)
    for pos, image in enumerate(perm, start=1):
        inv[image - 1] = pos
    return tuple(inv)


def rank_descending(values: Sequence[Fraction]) -> Permutation:
    """Indices 1..d ordered by value, largest first; ties keep ascending index.

    This is the canonical ordering permutation used throughout: sorting is
    stable, so equal values come out in ascending original-index order.
    """
    return tuple(sorted(range(1, len(values) + 1), key=lambda j: -values[j - 1]))
