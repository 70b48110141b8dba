"""The explicit cover of S^{n+delta} by unit right simplices.

With ``delta = 1/(n+2)`` the target splits at the seam ``x_d = 1 + delta``:

* the piece above the seam is a translate of S^{n-1} and is tiled by the
  (n-1)^d triangulation cells, shifted by ``(1+delta)e`` ("top" elements);
* the slab below it is covered by reanchoring the (n+1)^d - n^d slab cells of
  S^{n+1}: a cell whose permutation ends with index d keeps anchor
  ``(1-delta)v`` ("base_a"), any other cell gets ``(1-delta)v + delta*e``
  ("base_b").

Total: (n+1)^d + (n-1)^d - n^d elements.  Covers may overlap and overhang the
target; nothing here asserts containment in S^{n+delta}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .arith import IntVector, Permutation, Point, perm_position
from .simplex import KuhnSimplex
from .triangulation import enumerate_base_slab, enumerate_simplex_triangulation

KIND_TOP = "top"
KIND_BASE_A = "base_a"
KIND_BASE_B = "base_b"
KINDS = (KIND_TOP, KIND_BASE_A, KIND_BASE_B)


@dataclass(frozen=True)
class CoverElement:
    """One simplex of the cover: its kind, lattice data, and explicit anchor."""

    kind: str
    v: IntVector
    perm: Permutation
    anchor: Point

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown element kind {self.kind!r}")

    @property
    def simplex(self) -> KuhnSimplex:
        return KuhnSimplex(self.anchor, self.perm)

    @property
    def key(self) -> tuple[str, IntVector, Permutation]:
        return (self.kind, self.v, self.perm)


@dataclass(frozen=True)
class CoverSpec:
    """A full cover of S^{n+delta}, elements in canonical order (top, then base)."""

    d: int
    n: int
    delta: Fraction
    elements: tuple[CoverElement, ...]

    @cached_property
    def element_index(self) -> dict[tuple[str, IntVector, Permutation], CoverElement]:
        return {el.key: el for el in self.elements}

    def kind_counts(self) -> dict[str, int]:
        counts = {kind: 0 for kind in KINDS}
        for el in self.elements:
            counts[el.kind] += 1
        return counts


def delta(n: int) -> Fraction:
    """The squeeze margin 1/(n+2)."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return Fraction(1, n + 2)


def cover_count(d: int, n: int) -> int:
    """Number of cover elements: (n+1)^d + (n-1)^d - n^d."""
    if d < 2:
        raise ValueError(f"dimension must be at least 2, got {d}")
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return (n + 1) ** d + (n - 1) ** d - n**d


def top_anchor(v: IntVector, dl: Fraction) -> Point:
    return tuple(v_j + 1 + dl for v_j in v)


def base_a_anchor(v: IntVector, dl: Fraction) -> Point:
    return tuple((1 - dl) * v_j for v_j in v)


def base_b_anchor(v: IntVector, dl: Fraction) -> Point:
    return tuple((1 - dl) * v_j + dl for v_j in v)


def build_cover(d: int, n: int) -> CoverSpec:
    """Construct the cover, invariant-complete and canonically ordered."""
    if d < 2:
        raise ValueError(f"dimension must be at least 2, got {d}")
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    dl = delta(n)
    elements: list[CoverElement] = []
    if n >= 2:
        for pair in enumerate_simplex_triangulation(d, n - 1):
            elements.append(CoverElement(KIND_TOP, pair.v, pair.perm, top_anchor(pair.v, dl)))
    for pair in enumerate_base_slab(d, n + 1):
        if perm_position(pair.perm, d) == d:
            elements.append(
                CoverElement(KIND_BASE_A, pair.v, pair.perm, base_a_anchor(pair.v, dl))
            )
        else:
            elements.append(
                CoverElement(KIND_BASE_B, pair.v, pair.perm, base_b_anchor(pair.v, dl))
            )
    return CoverSpec(d=d, n=n, delta=dl, elements=tuple(elements))
