"""Numerical invariants of rank-2 bundles on F = P1 x P1 x P1.

Chern data is written ``c1 = a1 h1 + a2 h2 + a3 h3`` and
``c2 = b1 h2h3 + b2 h1h3 + b3 h1h2``.  Riemann-Roch is available twice:
as a closed polynomial in the ``a_i, b_i`` and as a direct evaluation of
the threefold formula inside the Chow ring.  The two must agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Tuple

from .chow import (
    H,
    ChowClass,
    CurveClass,
    DivisorClass,
    check_int,
    divisor_product,
    embed,
    intersect_dc,
    mul,
)
from .cohomology import kunneth_h

__all__ = [
    "BundleData",
    "EtaValues",
    "FConstants",
    "F_CONSTANTS",
    "NonIntegralError",
    "c1c2_constraint",
    "chi_line",
    "chi_rank2",
    "chi_rank2_rr",
    "dual",
    "e_flag",
    "eta1",
    "eta2",
    "eta_values",
    "hc2_constraint",
    "residual_class",
    "twist",
    "zero_locus_invariants",
]


class NonIntegralError(ValueError):
    """An invariant that must be an integer came out as a half-integer."""


class BundleData(NamedTuple):
    c1: DivisorClass
    c2: CurveClass

    def permuted(self, sigma) -> "BundleData":
        return BundleData(self.c1.permuted(sigma), self.c2.permuted(sigma))


def _omega2() -> CurveClass:
    # c(Omega_F) = prod (1 - 2 h_i); its degree-2 part is 4 (h2h3 + h1h3 + h1h2).
    c = ChowClass(c0=1)
    for i in range(3):
        unit = [0, 0, 0]
        unit[i] = -2
        c = mul(c, ChowClass(c0=1, c1part=DivisorClass(*unit)))
    return c.c2part


@dataclass(frozen=True)
class FConstants:
    omega1: DivisorClass = field(default_factory=lambda: H * -2)
    omega2: CurveClass = field(default_factory=_omega2)
    degree: int = 6
    rank: int = 2

    @property
    def omega1_omega2(self) -> int:
        return intersect_dc(self.omega1, self.omega2)


F_CONSTANTS = FConstants()


def chi_line(d: DivisorClass) -> int:
    return (d[0] + 1) * (d[1] + 1) * (d[2] + 1)


def chi_rank2(b: BundleData) -> int:
    """Euler characteristic of a rank-2 bundle from its Chern classes.

    Raises :class:`NonIntegralError` when ``c1 c2`` is odd.

    >>> chi_rank2(BundleData(DivisorClass(1, 2, 3), CurveClass(4, 1, 2)))
    12
    """
    a1, a2, a3 = b.c1
    c1c2 = intersect_dc(b.c1, b.c2)
    if c1c2 % 2:
        raise NonIntegralError("non-integral chi; inconsistent Chern data")
    value = (
        2
        + a1 * a2 * a3
        + (a1 * a2 + a1 * a3 + a2 * a3)
        + (a1 + a2 + a3)
        - c1c2 // 2
        - (b.c2[0] + b.c2[1] + b.c2[2])
    )
    return check_int(value)


def chi_rank2_rr(b: BundleData, constants: FConstants = F_CONSTANTS) -> int:
    """Same quantity, evaluated term by term from the general formula."""
    c1 = embed(b.c1)
    w1 = embed(constants.omega1)
    c1_cubed = mul(mul(c1, c1), c1).c3
    c1c2 = intersect_dc(b.c1, b.c2)
    w1_c1_sq = mul(w1, mul(c1, c1)).c3
    w1_c2 = intersect_dc(constants.omega1, b.c2)
    w1_sq_c1 = mul(mul(w1, w1), c1).c3
    w2_c1 = intersect_dc(b.c1, constants.omega2)
    chi = (
        Fraction(-constants.rank, 24) * constants.omega1_omega2
        + Fraction(1, 6) * (c1_cubed - 3 * c1c2)
        - Fraction(1, 4) * (w1_c1_sq - 2 * w1_c2)
        + Fraction(1, 12) * (w1_sq_c1 + w2_c1)
    )
    if chi.denominator != 1:
        raise NonIntegralError("non-integral chi; inconsistent Chern data")
    return check_int(int(chi))


def twist(b: BundleData, d: DivisorClass) -> BundleData:
    """Chern data of ``E(D)``."""
    return BundleData(b.c1 + d * 2, b.c2 + divisor_product(b.c1, d) + divisor_product(d, d))


def dual(b: BundleData) -> BundleData:
    return BundleData(-b.c1, b.c2)


def zero_locus_invariants(b: BundleData) -> Tuple[int, int]:
    """``(degree, arithmetic genus)`` of the zero locus of a section."""
    c1c2 = intersect_dc(b.c1, b.c2)
    if c1c2 % 2:
        raise NonIntegralError("non-integral genus")
    degree = b.c2.total()
    return degree, check_int(c1c2 // 2 - degree + 1)


def c1c2_constraint(c1: DivisorClass) -> int:
    return check_int(2 * c1.d1 * c1.d2 * c1.d3)


def e_flag(c1: DivisorClass, d: DivisorClass) -> int:
    return int(c1 == d)


def hc2_constraint(c1: DivisorClass, e: int) -> int:
    a1, a2, a3 = c1
    return check_int(a1 * a2 * a3 + (1 - a1) * (1 - a2) * (1 - a3) + 1 - e)


def eta1(d: DivisorClass) -> int:
    return kunneth_h(2, d - H * 2)


def eta2(d: DivisorClass) -> int:
    return kunneth_h(3, d - H * 2)


class EtaValues(NamedTuple):
    eta1: int
    eta2: int
    #: False when ``D`` is not one of the divisor candidates, so the
    #: indicator description of the two values need not apply.
    in_domain: bool


def eta_values(d: DivisorClass) -> EtaValues:
    from .enumeration import divisor_candidates

    known = {c.divisor for c in divisor_candidates()}
    return EtaValues(eta1(d), eta2(d), DivisorClass(*sorted(d)) in known)


def residual_class(c1: DivisorClass, c2: CurveClass, d: DivisorClass) -> CurveClass:
    """Class of the curve part once the divisor ``D`` is split off: ``c2(E(-D))``."""
    return c2 - divisor_product(c1, d) + divisor_product(d, d)
