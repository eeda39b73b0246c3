"""Picard lattice of the degree-6 del Pezzo surface.

A hyperplane section ``S`` of ``F`` is the plane blown up in three points.
Classes are written ``a l - b1 e1 - b2 e2 - b3 e3``; the hyperplane class
is ``3l - e1 - e2 - e3``.  Effective curve classes are approximated by
``a >= 0`` and ``b_i >= 0``; no cone membership test is made.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterable, List, Tuple

from .chow import CurveClass
from .invariants import NonIntegralError

__all__ = [
    "HYPERPLANE",
    "SurfaceClass",
    "cremona",
    "curve_classes",
    "normal_chi",
    "orbit_reduce",
    "pushforward",
    "s_degree",
    "s_genus",
    "s_intersect",
    "schwarz_a_range",
]


@dataclass(frozen=True, order=True)
class SurfaceClass:
    a: int
    b1: int
    b2: int
    b3: int

    @property
    def b(self) -> Tuple[int, int, int]:
        return (self.b1, self.b2, self.b3)

    def canonical(self) -> "SurfaceClass":
        return SurfaceClass(self.a, *sorted(self.b, reverse=True))

    def __str__(self) -> str:
        return "(%d;%d,%d,%d)" % (self.a, self.b1, self.b2, self.b3)


HYPERPLANE = SurfaceClass(3, 1, 1, 1)


def s_intersect(x: SurfaceClass, y: SurfaceClass) -> int:
    return x.a * y.a - x.b1 * y.b1 - x.b2 * y.b2 - x.b3 * y.b3


def s_degree(c: SurfaceClass) -> int:
    return s_intersect(c, HYPERPLANE)


def s_genus(c: SurfaceClass) -> int:
    twice = s_intersect(c, c) - s_degree(c)
    if twice % 2:
        raise NonIntegralError("non-integral genus")
    return 1 + twice // 2


def schwarz_a_range(degree: int, genus: int) -> range:
    """Values of ``a`` allowed by ``(sum b)^2 <= 3 sum b^2``.

    With ``sum b = 3a - deg`` and ``sum b^2 = a^2 - (deg + 2g - 2)`` this
    reads ``6a^2 - 6 deg a + deg^2 + 3(deg + 2g - 2) <= 0``.
    """
    const = degree * degree + 3 * (degree + 2 * genus - 2)
    disc = 36 * degree * degree - 24 * const
    if disc < 0:
        return range(0)
    root = isqrt(disc) + 1
    lo = max(0, (6 * degree - root) // 12)
    hi = (6 * degree + root) // 12 + 1
    ok = [a for a in range(lo, hi + 1) if 6 * a * a - 6 * degree * a + const <= 0]
    return range(ok[0], ok[-1] + 1) if ok else range(0)


def curve_classes(degree: int, genus: int, widen: int = 1) -> List[SurfaceClass]:
    """Classes with ``a, b_i >= 0`` of the given degree and arithmetic genus.

    ``widen`` multiplies the upper end of the ``a`` search range; the
    result must not depend on it.
    """
    if degree < 1:
        raise ValueError("degree must be positive")
    a_range = schwarz_a_range(degree, genus)
    if not a_range:
        return []
    found = set()
    for a in range(a_range.start, a_range.stop * widen):
        s = 3 * a - degree
        q = a * a - (degree + 2 * genus - 2)
        if s < 0 or q < 0:
            continue
        for b1 in range(s + 1):
            for b2 in range(min(b1, s - b1) + 1):
                b3 = s - b1 - b2
                if b3 > b2:
                    continue
                if b1 * b1 + b2 * b2 + b3 * b3 == q:
                    found.add(SurfaceClass(a, b1, b2, b3))
    return sorted(found)


def cremona(c: SurfaceClass) -> SurfaceClass:
    a, b1, b2, b3 = c.a, c.b1, c.b2, c.b3
    return SurfaceClass(2 * a - b1 - b2 - b3, a - b2 - b3, a - b1 - b3, a - b1 - b2)


def _orbit(c: SurfaceClass) -> set:
    seen = {c.canonical()}
    frontier = [c.canonical()]
    while frontier:
        nxt = cremona(frontier.pop()).canonical()
        if nxt not in seen:
            seen.add(nxt)
            frontier.append(nxt)
    return seen


def orbit_reduce(classes: Iterable[SurfaceClass]) -> List[SurfaceClass]:
    """One representative per orbit of permutations of the ``e_i`` and Cremona."""
    reps = set()
    for c in classes:
        reps.add(min(_orbit(c)))
    return sorted(reps)


def pushforward(c: SurfaceClass) -> CurveClass:
    """Class in ``A^2(F)``: ``l -> h2h3 + h1h3 + h1h2`` and ``e_i`` to the ``i``-th basis curve."""
    return CurveClass(c.a - c.b1, c.a - c.b2, c.a - c.b3)


def normal_chi(c: SurfaceClass) -> Tuple[int, int]:
    """``(chi(O_S(C)), chi(N_{C|F}))`` for a curve of genus 0 or 1."""
    genus = s_genus(c)
    if genus not in (0, 1):
        raise ValueError("normal_chi only covers genus 0 and 1")
    degree = s_degree(c)
    twice = s_intersect(c, c) + degree
    if twice % 2:
        raise NonIntegralError("non-integral chi")
    chi_os = 1 + twice // 2
    return chi_os, chi_os + (degree + 1 - genus) - 1
