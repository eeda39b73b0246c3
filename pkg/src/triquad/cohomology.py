"""Line-bundle cohomology on P1 x P1 x P1 via the Kunneth formula."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import FrozenSet, Tuple

from .chow import H, DivisorClass

__all__ = [
    "CohomologyVector",
    "acm_window",
    "cohomology_vector",
    "euler_characteristic",
    "ext1_line",
    "h_p1",
    "initialized_acm_line_bundles",
    "is_acm_line",
    "is_initialized_line",
    "kunneth_h",
    "serre_conditions",
]

# Coefficients of an initialized aCM line lie in [-1, 2]; 4 leaves room to check that.
ACM_SEARCH_BOUND = 4


@dataclass(frozen=True)
class CohomologyVector:
    h0: int
    h1: int
    h2: int
    h3: int

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.h0, self.h1, self.h2, self.h3)

    @property
    def euler(self) -> int:
        return self.h0 - self.h1 + self.h2 - self.h3


def h_p1(i: int, d: int) -> int:
    if i == 0:
        return d + 1 if d >= 0 else 0
    if i == 1:
        return -d - 1 if d <= -2 else 0
    raise ValueError(f"P1 has no cohomology in degree {i}")


def kunneth_h(i: int, d: DivisorClass) -> int:
    if not 0 <= i <= 3:
        return 0
    total = 0
    for degrees in product((0, 1), repeat=3):
        if sum(degrees) != i:
            continue
        term = 1
        for k, dk in zip(degrees, d):
            term *= h_p1(k, dk)
            if term == 0:
                break
        total += term
    return total


def cohomology_vector(d: DivisorClass) -> CohomologyVector:
    return CohomologyVector(*(kunneth_h(i, d) for i in range(4)))


def euler_characteristic(d: DivisorClass) -> int:
    return (d.d1 + 1) * (d.d2 + 1) * (d.d3 + 1)


def acm_window(d: DivisorClass) -> range:
    """Twists ``t`` for which ``O(D + t h)`` can have middle cohomology.

    A nonzero Kunneth term in degree 1 or 2 needs one factor of degree
    at most -2 and another of degree at least 0; outside this range all
    factors fall on the same side.
    """
    return range(-max(d) - 2, -min(d) + 3)


def is_acm_line(d: DivisorClass, slack: int = 0) -> bool:
    window = acm_window(d)
    for t in range(window.start - slack, window.stop + slack):
        twisted = d + H * t
        if kunneth_h(1, twisted) or kunneth_h(2, twisted):
            return False
    return True


def is_initialized_line(d: DivisorClass) -> bool:
    closed = min(d) == 0
    assert closed == (kunneth_h(0, d) > 0 and kunneth_h(0, d - H) == 0)
    return closed


def _search_initialized_acm(bound: int) -> FrozenSet[DivisorClass]:
    found = set()
    for coeffs in product(range(bound + 1), repeat=3):
        d = DivisorClass(*coeffs)
        if min(coeffs) == 0 and is_acm_line(d):
            found.add(d)
    return frozenset(found)


def initialized_acm_line_bundles(bound: int = ACM_SEARCH_BOUND) -> FrozenSet[DivisorClass]:
    """Initialized aCM line bundles, found by search in ``0 <= d_i <= bound``."""
    return _search_initialized_acm(bound)


def ext1_line(target: DivisorClass, sub: DivisorClass) -> int:
    """``dim Ext^1(O(target), O(sub)) = h^1(O(sub - target))``."""
    return kunneth_h(1, sub - target)


def serre_conditions(line: DivisorClass) -> Tuple[bool, bool]:
    """Numerical hypotheses for building a rank-2 bundle from a curve.

    Returns ``(existence_ok, uniqueness_ok)``, i.e. the vanishing of
    ``H^2`` and of ``H^1`` of the dual line bundle.
    """
    dual = -line
    return kunneth_h(2, dual) == 0, kunneth_h(1, dual) == 0
