"""Unit right d-simplices anchored on a point and a coordinate order.

A unit right simplex ``k(u, pi)`` is the convex hull of the path
``u, u + e^{pi(1)}, u + e^{pi(1)} + e^{pi(2)}, ..., u + e``.  Membership has a
closed form as a chain of coordinate inequalities; an independent barycentric
oracle (exact linear solve) is kept alongside it for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .arith import Permutation, Point, is_permutation

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class KuhnSimplex:
    """The unit right simplex with base vertex ``anchor`` and edge order ``perm``."""

    anchor: Point
    perm: Permutation

    def __post_init__(self) -> None:
        if not is_permutation(self.perm, len(self.anchor)):
            raise ValueError(f"perm {self.perm} is not a permutation of 1..{len(self.anchor)}")

    @property
    def dim(self) -> int:
        return len(self.anchor)


@dataclass(frozen=True)
class GramMetric2D:
    """Entries of the exact Gram matrix of the shear taking right 2-simplices to
    equilateral triangles.  The shear itself has an irrational entry; its Gram
    matrix does not, so squared lengths stay rational."""

    g11: Fraction = Fraction(1)
    g12: Fraction = Fraction(-1, 2)
    g22: Fraction = Fraction(1)


GRAM_2D = GramMetric2D()


def vertices(simplex: KuhnSimplex) -> tuple[Point, ...]:
    """The d+1 vertices in path order, from the anchor up to anchor + e."""
    pts = [simplex.anchor]
    cur = list(simplex.anchor)
    for j in simplex.perm:
        cur[j - 1] = cur[j - 1] + 1
        pts.append(tuple(cur))
    return tuple(pts)


def contains(simplex: KuhnSimplex, x: Point, strict: bool = False) -> bool:
    """Exact membership: 1 >= (x-u)_{pi(1)} >= ... >= (x-u)_{pi(d)} >= 0.

    With ``strict`` every inequality must be strict (interior test).
    """
    if len(x) != simplex.dim:
        raise ValueError(f"point has dimension {len(x)}, simplex has {simplex.dim}")
    u = simplex.anchor
    prev = ONE
    for j in simplex.perm:
        c = x[j - 1] - u[j - 1]
        if c > prev or (strict and c == prev):
            return False
        prev = c
    if strict:
        return prev > ZERO
    return prev >= ZERO


def _solve_linear(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Gauss-Jordan elimination over Fractions; raises on a singular system."""
    n = len(rows)
    m = [list(rows[i]) + [rhs[i]] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular system")
        m[col], m[pivot] = m[pivot], m[col]
        inv = m[col][col]
        m[col] = [v / inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [v - f * w for v, w in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]


def barycentric(simplex: KuhnSimplex, x: Point) -> tuple[Fraction, ...]:
    """Exact barycentric coordinates of x with respect to vertices(simplex)."""
    if len(x) != simplex.dim:
        raise ValueError(f"point has dimension {len(x)}, simplex has {simplex.dim}")
    verts = vertices(simplex)
    d = simplex.dim
    rows = [[verts[k][i] for k in range(d + 1)] for i in range(d)]
    rows.append([ONE] * (d + 1))
    rhs = [x[i] for i in range(d)] + [ONE]
    return tuple(_solve_linear(rows, rhs))


def contains_oracle(simplex: KuhnSimplex, x: Point) -> bool:
    """Independent membership test: solve for barycentric coordinates and check
    they are all nonnegative.  Must agree with ``contains`` everywhere."""
    return all(lam >= 0 for lam in barycentric(simplex, x))


def unit_volume(d: int) -> Fraction:
    """Volume 1/d! of any unit right d-simplex."""
    if d < 2:
        raise ValueError(f"dimension must be at least 2, got {d}")
    return Fraction(1, factorial(d))


def gram_squared_length(u: Point, metric: GramMetric2D = GRAM_2D) -> Fraction:
    """Squared length of a 2-vector under the equilateral metric: u1^2 - u1*u2 + u2^2."""
    if len(u) != 2:
        raise ValueError(f"expected a 2-dimensional vector, got dimension {len(u)}")
    a, b = u
    return metric.g11 * a * a + 2 * metric.g12 * a * b + metric.g22 * b * b
