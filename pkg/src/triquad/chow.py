"""Chow ring of P1 x P1 x P1.

The ring is Z[h1, h2, h3] / (h1^2, h2^2, h3^2).  A graded element is stored
by degree: a constant, a divisor part (coefficients of h1, h2, h3), a curve
part (coefficients of h2h3, h1h3, h1h2) and a point part (coefficient of
h1h2h3).  The curve basis is indexed so that ``b_i`` pairs with ``h_i``
under intersection, which makes ``D . C`` a plain dot product.

All coefficients are Python integers checked against the signed 64-bit
range; leaving it raises :class:`OverflowError` instead of wrapping.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from operator import itemgetter
from typing import Sequence, Tuple, TypeVar

__all__ = [
    "ChowClass",
    "CurveClass",
    "DivisorClass",
    "H",
    "S3",
    "canonicalize_s3",
    "check_int",
    "divisor_product",
    "embed",
    "intersect_dc",
    "mul",
    "permute",
]

INT_MIN = -(1 << 63)
INT_MAX = (1 << 63) - 1

#: The six index permutations; ``sigma`` sends slot ``i`` to ``sigma[i]``.
S3: Tuple[Tuple[int, int, int], ...] = tuple(permutations(range(3)))


def check_int(value: int) -> int:
    if type(value) is int and INT_MIN <= value <= INT_MAX:
        return value
    if not isinstance(value, int) or isinstance(value, bool):
        raise TypeError(f"expected an integer coefficient, got {value!r}")
    if value < INT_MIN or value > INT_MAX:
        raise OverflowError(f"coefficient {value} leaves the 64-bit range")
    return value


class _Triple(tuple):
    """Immutable integer triple with componentwise arithmetic.

    Instances are tuples, so ordering and hashing are lexicographic, but
    ``+`` and ``*`` act on coefficients rather than concatenating.
    """

    __slots__ = ()
    _fields: Tuple[str, str, str] = ("x1", "x2", "x3")

    def __new__(cls, x1: int, x2: int, x3: int):
        return tuple.__new__(cls, (check_int(x1), check_int(x2), check_int(x3)))

    def __getnewargs__(self):
        return tuple(self)

    def as_tuple(self) -> Tuple[int, int, int]:
        return tuple.__new__(tuple, self)

    def __repr__(self) -> str:
        body = ", ".join(f"{n}={v}" for n, v in zip(self._fields, self))
        return f"{type(self).__name__}({body})"

    def __str__(self) -> str:
        return "(%d,%d,%d)" % tuple(self)

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)(self[0] + other[0], self[1] + other[1], self[2] + other[2])

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)(self[0] - other[0], self[1] - other[1], self[2] - other[2])

    def __neg__(self):
        return type(self)(-self[0], -self[1], -self[2])

    def __mul__(self, k: int):
        if type(k) is not int:
            return NotImplemented
        return type(self)(k * self[0], k * self[1], k * self[2])

    __rmul__ = __mul__

    def permuted(self, sigma: Sequence[int]):
        """Coefficient ``i`` of the result is coefficient ``sigma[i]`` of self."""
        return type(self)(self[sigma[0]], self[sigma[1]], self[sigma[2]])

    def total(self) -> int:
        return check_int(self[0] + self[1] + self[2])


class DivisorClass(_Triple):
    """``d1 h1 + d2 h2 + d3 h3``."""

    __slots__ = ()
    _fields = ("d1", "d2", "d3")
    d1 = property(itemgetter(0))
    d2 = property(itemgetter(1))
    d3 = property(itemgetter(2))

    @property
    def is_effective(self) -> bool:
        return min(self) >= 0


class CurveClass(_Triple):
    """``b1 h2h3 + b2 h1h3 + b3 h1h2``."""

    __slots__ = ()
    _fields = ("b1", "b2", "b3")
    b1 = property(itemgetter(0))
    b2 = property(itemgetter(1))
    b3 = property(itemgetter(2))

    @property
    def is_effective_candidate(self) -> bool:
        return min(self) >= 0


H = DivisorClass(1, 1, 1)
ZERO_DIVISOR = DivisorClass(0, 0, 0)
ZERO_CURVE = CurveClass(0, 0, 0)


@dataclass(frozen=True)
class ChowClass:
    c0: int = 0
    c1part: DivisorClass = ZERO_DIVISOR
    c2part: CurveClass = ZERO_CURVE
    c3: int = 0

    def __post_init__(self) -> None:
        check_int(self.c0)
        check_int(self.c3)

    def __add__(self, other: "ChowClass") -> "ChowClass":
        if not isinstance(other, ChowClass):
            return NotImplemented
        return ChowClass(
            self.c0 + other.c0,
            self.c1part + other.c1part,
            self.c2part + other.c2part,
            self.c3 + other.c3,
        )

    def __neg__(self) -> "ChowClass":
        return ChowClass(-self.c0, -self.c1part, -self.c2part, -self.c3)

    def __sub__(self, other: "ChowClass") -> "ChowClass":
        return self + (-other)

    def __mul__(self, other: "ChowClass") -> "ChowClass":
        if not isinstance(other, ChowClass):
            return NotImplemented
        return mul(self, other)

    def permuted(self, sigma: Sequence[int]) -> "ChowClass":
        return ChowClass(
            self.c0, self.c1part.permuted(sigma), self.c2part.permuted(sigma), self.c3
        )


def embed(x) -> ChowClass:
    """Lift a divisor class, curve class or integer to a graded element."""
    if isinstance(x, ChowClass):
        return x
    if isinstance(x, DivisorClass):
        return ChowClass(c1part=x)
    if isinstance(x, CurveClass):
        return ChowClass(c2part=x)
    if isinstance(x, int):
        return ChowClass(c0=x)
    raise TypeError(f"cannot embed {x!r} in the Chow ring")


def divisor_product(x: DivisorClass, y: DivisorClass) -> CurveClass:
    """Product of two divisor classes, e.g. ``(h1+h2)^2 = 2 h1h2``."""
    x1, x2, x3 = x
    y1, y2, y3 = y
    return CurveClass(x2 * y3 + x3 * y2, x1 * y3 + x3 * y1, x1 * y2 + x2 * y1)


def intersect_dc(d: DivisorClass, c: CurveClass) -> int:
    """Degree of ``D . C``."""
    return check_int(d[0] * c[0] + d[1] * c[1] + d[2] * c[2])


def mul(x: ChowClass, y: ChowClass) -> ChowClass:
    """Graded product; every ``h_i^2`` term vanishes."""
    c0 = x.c0 * y.c0
    c1 = x.c1part * y.c0 + y.c1part * x.c0
    c2 = x.c2part * y.c0 + y.c2part * x.c0 + divisor_product(x.c1part, y.c1part)
    c3 = (
        x.c3 * y.c0
        + y.c3 * x.c0
        + intersect_dc(x.c1part, y.c2part)
        + intersect_dc(y.c1part, x.c2part)
    )
    return ChowClass(check_int(c0), c1, c2, check_int(c3))


T = TypeVar("T")


def permute(triple: T, sigma: Sequence[int]) -> T:
    """Apply an index permutation to a class or to a plain 3-tuple."""
    if hasattr(triple, "permuted"):
        return triple.permuted(sigma)
    values = tuple(triple)
    return type(triple)(values[sigma[i]] for i in range(3))  # type: ignore[call-arg]


def sorting_permutations(alpha: Sequence[int]) -> list:
    """All ``sigma`` for which ``alpha`` permuted by ``sigma`` is ascending."""
    target = tuple(sorted(alpha))
    values = tuple(alpha)
    return [s for s in S3 if tuple(values[s[i]] for i in range(3)) == target]


def canonicalize_s3(alpha: DivisorClass, attached: Sequence = ()) -> Tuple[DivisorClass, list]:
    """Sort ``alpha`` ascending and move ``attached`` along consistently.

    When ``alpha`` has repeated entries several permutations sort it; among
    those the one giving the lexicographically smallest attached list wins.

    >>> canonicalize_s3(DivisorClass(3, 1, 2))[0]
    DivisorClass(d1=1, d2=2, d3=3)
    >>> canonicalize_s3(DivisorClass(2, 2, 2), [CurveClass(4, 2, 2)])[1]
    [CurveClass(b1=2, b2=2, b3=4)]
    """
    best = None
    for sigma in sorting_permutations(alpha):
        moved = [permute(t, sigma) for t in attached]
        key = [tuple(t) for t in moved]
        if best is None or key < best[0]:
            best = (key, moved)
    canon_alpha = DivisorClass(*sorted(alpha))
    return canon_alpha, best[1]
