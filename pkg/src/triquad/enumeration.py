"""Case enumeration for initialized aCM rank-2 bundles.

The engines here solve the Chern-class constraint systems and attach a
verdict to every surviving case:

* ``divisorial_table`` covers sections vanishing along a nonzero divisor
  ``D`` plus a curve ``E``;
* ``intermediate_table`` covers sections vanishing along a curve only,
  for ``c1`` strictly between ``0`` and ``2h``;
* ``ulrich_c2_options`` and ``rational_c2_options`` handle the two
  extremal first Chern classes ``2h`` and ``h1 + 2h2 + 3h3``;
* ``theorem_a_filter`` and ``theorem_b_verdict`` are the final classifiers.

Everything is derived from the constraint equations; the reference tables
in ``golden/`` are read only by the conformance runner.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import permutations, product
from typing import List, Optional, Sequence, Tuple

from .chow import (
    H,
    S3,
    ZERO_CURVE,
    CurveClass,
    DivisorClass,
    canonicalize_s3,
    divisor_product,
    intersect_dc,
    sorting_permutations,
)
from .cohomology import (
    initialized_acm_line_bundles,
    is_acm_line,
    is_initialized_line,
    kunneth_h,
)
from .invariants import (
    BundleData,
    c1c2_constraint,
    dual,
    e_flag,
    hc2_constraint,
    residual_class,
    twist,
    zero_locus_invariants,
)

__all__ = [
    "ClassificationVerdict",
    "ConsistencyError",
    "DivisorCandidate",
    "DivisorialCaseRow",
    "DivisorialVerdict",
    "INTERMEDIATE_LABELS",
    "IntermediateCaseRow",
    "IntermediateVerdict",
    "NOT_ADMISSIBLE",
    "RationalOption",
    "admissible_pairs",
    "decomposable_candidates",
    "divisor_candidates",
    "divisorial_table",
    "intermediate_table",
    "rational_c2_options",
    "solve_alpha_beta",
    "theorem_a_filter",
    "theorem_b_verdict",
    "ulrich_c2_options",
]

Pair = Tuple[DivisorClass, DivisorClass]

SPORADIC_C1 = DivisorClass(1, 2, 3)
INTERMEDIATE_LABELS = "LMNPQRSTUVW"
NOT_ADMISSIBLE = "NotAdmissible"


class ConsistencyError(RuntimeError):
    """An enumerated case fell outside every known verdict."""


class DivisorialVerdict(str, Enum):
    NEGATIVE_CLASS = "NegativeClass"
    EMPTY_E_FORBIDDEN = "EmptyEForbidden"
    GLOBALLY_GENERATED_CONTRADICTION = "GloballyGeneratedContradiction"


class IntermediateVerdict(str, Enum):
    ADMISSIBLE = "Admissible"
    DECOMPOSABLE = "Decomposable"
    NON_EXISTENT = "NonExistent"
    EXCLUDED_EMPTY = "ExcludedEmpty"
    EXCLUDED_DUAL_POSITIVITY = "ExcludedDualPositivity"


@dataclass(frozen=True)
class DivisorCandidate:
    divisor: DivisorClass
    allowed: bool
    note: str


@dataclass(frozen=True)
class DivisorialCaseRow:
    alpha: DivisorClass
    delta: DivisorClass
    e: int
    beta: CurveClass
    classE: CurveClass
    verdict: DivisorialVerdict

    @property
    def key(self) -> Tuple[DivisorClass, DivisorClass, CurveClass]:
        return (self.alpha, self.delta, self.beta)


@dataclass(frozen=True)
class IntermediateCaseRow:
    label: str
    alpha: DivisorClass
    beta: CurveClass
    degE: int
    paE: int
    verdict: IntermediateVerdict
    split: Optional[Pair] = None

    @property
    def verdict_text(self) -> str:
        if self.split is None:
            return self.verdict.value
        return "%s(%s+%s)" % (self.verdict.value, self.split[0], self.split[1])


@dataclass(frozen=True)
class ClassificationVerdict:
    c1_sorted: DivisorClass
    allowed_c2: Tuple[CurveClass, ...]
    curve_description: str
    indecomposability_condition: str
    c2: Optional[CurveClass] = None

    @property
    def admissible(self) -> bool:
        return self.curve_description != NOT_ADMISSIBLE


@dataclass(frozen=True)
class RationalOption:
    beta: CurveClass
    verdict: str
    dot_products: Tuple[int, ...]


# ---------------------------------------------------------------------------
# constraint solving


def solve_alpha_beta(
    alpha: DivisorClass, e: int, lower_bounds: CurveClass = ZERO_CURVE
) -> List[CurveClass]:
    """All ``beta >= lower_bounds`` with ``alpha . beta = c1c2`` and ``h . beta = hc2``.

    For ``alpha = 0`` the pair ``(c1, D) = (0, 0)`` has ``e = 1`` by
    definition, so ``hc2 = 1`` there and the solutions are the unit classes.
    Calling with ``e = 0`` is still answered literally.
    """
    target = c1c2_constraint(alpha)
    total = hc2_constraint(alpha, e)
    l1, l2, l3 = lower_bounds
    found = []
    for b1 in range(l1, total - l2 - l3 + 1):
        for b2 in range(l2, total - b1 - l3 + 1):
            beta = CurveClass(b1, b2, total - b1 - b2)
            if intersect_dc(alpha, beta) == target:
                found.append(beta)
    return sorted(found)


def divisor_candidates() -> List[DivisorCandidate]:
    return [
        DivisorCandidate(DivisorClass(0, 0, 0), True, "D = 0 (curve-only case)"),
        DivisorCandidate(DivisorClass(0, 0, 1), True, "nonzero D"),
        DivisorCandidate(DivisorClass(0, 1, 1), True, "nonzero D"),
        DivisorCandidate(DivisorClass(0, 0, 2), True, "nonzero D"),
        DivisorCandidate(DivisorClass(0, 1, 2), True, "nonzero D"),
        DivisorCandidate(DivisorClass(0, 2, 2), False, "excluded: h^1(O(D-2h)) = 1 forces a section of O(c1-D-2h)"),
    ]


def _orbit(d: DivisorClass) -> List[DivisorClass]:
    return sorted({d.permuted(s) for s in S3})


def _middle_alphas() -> List[DivisorClass]:
    """Sorted ``c1`` with ``0 <= a_i <= 2`` other than ``0`` and ``2h``."""
    out = []
    for a in product(range(3), repeat=3):
        if list(a) == sorted(a) and a[0] <= 1 <= a[2]:
            out.append(DivisorClass(*a))
    return out


# ---------------------------------------------------------------------------
# divisorial table

_GG_CLASSES = {(0, 0, 1), (0, 1, 1), (0, 0, 2)}


def _divisorial_verdict(class_e: CurveClass) -> DivisorialVerdict:
    if min(class_e) < 0:
        return DivisorialVerdict.NEGATIVE_CLASS
    if class_e == ZERO_CURVE:
        return DivisorialVerdict.EMPTY_E_FORBIDDEN
    if tuple(sorted(class_e)) in _GG_CLASSES:
        return DivisorialVerdict.GLOBALLY_GENERATED_CONTRADICTION
    raise ConsistencyError(f"effective class {class_e} has no exclusion argument")


def _divisorial_rows_for(alpha: DivisorClass) -> List[DivisorialCaseRow]:
    nonzero = [c.divisor for c in divisor_candidates() if c.allowed and any(c.divisor)]
    seen = {}
    for base in nonzero:
        for delta in _orbit(base):
            if min(alpha - delta) < 0:
                continue
            e = e_flag(alpha, delta)
            for beta in solve_alpha_beta(alpha, e):
                _, (d_c, b_c) = canonicalize_s3(alpha, [delta, beta])
                if (d_c, b_c) in seen:
                    continue
                class_e = residual_class(alpha, b_c, d_c)
                seen[(d_c, b_c)] = DivisorialCaseRow(
                    alpha, d_c, e, b_c, class_e, _divisorial_verdict(class_e)
                )
    return list(seen.values())


@lru_cache(maxsize=None)
def _divisorial_table() -> Tuple[DivisorialCaseRow, ...]:
    rows = []
    for alpha in _middle_alphas():
        rows.extend(_divisorial_rows_for(alpha))
    rows.sort(key=lambda r: r.key)
    return tuple(rows)


def divisorial_table() -> List[DivisorialCaseRow]:
    """Cases ``(c1, D, c2)`` for a section vanishing on ``E`` plus a nonzero divisor ``D``.

    ``c1`` runs over the sorted classes with ``a1 <= 1 <= a3`` inside the
    box ``0 <= a_i <= 2``; ``D`` over the permutations of the allowed
    nonzero candidates with ``0 <= D <= c1``; ``c2`` over the nonnegative
    solutions of the constraint system.  Rows are deduplicated under the
    stabilizer of ``c1`` and sorted by ``(c1, D, c2)``.
    """
    return list(_divisorial_table())


# ---------------------------------------------------------------------------
# split bundles


def _sorted_pair(l1: DivisorClass, l2: DivisorClass) -> Pair:
    return (l1, l2) if l1 <= l2 else (l2, l1)


def decomposable_candidates(
    c1: DivisorClass,
    h0_total: Optional[int] = None,
    c2_target: Optional[CurveClass] = None,
    require_sections: bool = False,
) -> List[Pair]:
    """Split aCM bundles ``L1 + L2`` with ``c1(L1 + L2) = c1``.

    ``L1`` is initialized and ``L2`` is initialized or has no sections.
    With ``require_sections`` both summands must have sections, which is
    what a split bundle needs for a general section to vanish on a curve.
    """
    pairs = set()
    for l1 in initialized_acm_line_bundles():
        l2 = c1 - l1
        if not is_acm_line(l2):
            continue
        l2_sections = kunneth_h(0, l2)
        if not (min(l2) == 0 and is_initialized_line(l2)) and l2_sections:
            continue
        if require_sections and not l2_sections:
            continue
        if h0_total is not None and kunneth_h(0, l1) + l2_sections != h0_total:
            continue
        if c2_target is not None and divisor_product(l1, l2) != c2_target:
            continue
        pairs.add(_sorted_pair(l1, l2))
    return sorted(pairs)


# ---------------------------------------------------------------------------
# intermediate table


def _label_key(alpha: DivisorClass, beta: CurveClass, degree: int):
    widest = max(tuple(beta.permuted(s)) for s in sorting_permutations(alpha))
    return (degree, alpha.total(), alpha, widest)


def _dual_twist(b: BundleData) -> BundleData:
    return twist(dual(b), H)


def _sectioned_split(b: BundleData) -> List[Pair]:
    return decomposable_candidates(b.c1, c2_target=b.c2, require_sections=True)


def _intermediate_verdict(b: BundleData, degree: int):
    if degree == 0:
        return IntermediateVerdict.EXCLUDED_EMPTY, None
    flipped = _dual_twist(b).c2
    if min(flipped) < 0 or flipped == ZERO_CURVE:
        return IntermediateVerdict.EXCLUDED_DUAL_POSITIVITY, None
    ordered = sorted(b.c2)
    if ordered[0] == ordered[1] == 0 and ordered[2] >= 2:
        # a multiple line: no reduced curve of this class
        return IntermediateVerdict.NON_EXISTENT, None
    split = _sectioned_split(b)
    if split and _sectioned_split(_dual_twist(b)):
        return IntermediateVerdict.DECOMPOSABLE, split[0]
    return IntermediateVerdict.ADMISSIBLE, None


@lru_cache(maxsize=None)
def _intermediate_table() -> Tuple[IntermediateCaseRow, ...]:
    cases = {}
    for alpha in _middle_alphas():
        for beta in solve_alpha_beta(alpha, 0):
            _, (b_c,) = canonicalize_s3(alpha, [beta])
            cases[(alpha, b_c)] = zero_locus_invariants(BundleData(alpha, b_c))
    order = sorted(cases, key=lambda k: _label_key(k[0], k[1], cases[k][0]))
    if len(order) != len(INTERMEDIATE_LABELS):
        raise ConsistencyError(f"expected {len(INTERMEDIATE_LABELS)} curve-only cases, found {len(order)}")
    rows = []
    for label, (alpha, beta) in zip(INTERMEDIATE_LABELS, order):
        degree, genus = cases[(alpha, beta)]
        verdict, split = _intermediate_verdict(BundleData(alpha, beta), degree)
        rows.append(IntermediateCaseRow(label, alpha, beta, degree, genus, verdict, split))
    return tuple(rows)


def intermediate_table() -> List[IntermediateCaseRow]:
    """Curve-only cases (``D = 0``) labelled ``L`` to ``W``.

    Labels follow ``(deg E, a1+a2+a3, c1, c2)``.  Verdicts come from, in
    order: an empty zero locus; a negative or zero ``c2(E^v(h))``; a class
    that is a multiple of a line; split candidates existing for both ``E``
    and ``E^v(h)``.  Anything left is admissible.
    """
    return list(_intermediate_table())


# ---------------------------------------------------------------------------
# extremal first Chern classes


def ulrich_c2_options() -> List[CurveClass]:
    """``c2`` for ``c1 = 2h``: degree 8 with every ``b_i >= 2``."""
    out = set()
    for beta in solve_alpha_beta(H * 2, 0, CurveClass(2, 2, 2)):
        out.add(canonicalize_s3(H * 2, [beta])[1][0])
    return sorted(out)


def rational_c2_options() -> List[RationalOption]:
    """``c2`` for ``c1 = h1 + 2h2 + 3h3``.

    Candidates have degree 7, ``b_i >= 1`` and ``b_i + b_j >= 3``.  A
    multiset is admissible when some ordering meets ``c1 . c2 = 12``;
    that ordering is reported, otherwise the descending one.
    """
    alpha = SPORADIC_C1
    total = hc2_constraint(alpha, 0)
    target = c1c2_constraint(alpha)
    multisets = set()
    for b1, b2 in product(range(1, total + 1), repeat=2):
        b3 = total - b1 - b2
        if b3 < 1 or min(b1 + b2, b1 + b3, b2 + b3) < 3:
            continue
        multisets.add(tuple(sorted((b1, b2, b3), reverse=True)))
    options = []
    for ms in sorted(multisets):
        orders = sorted(set(permutations(ms)), reverse=True)
        dots = tuple(sorted({intersect_dc(alpha, CurveClass(*o)) for o in orders}))
        hits = [o for o in orders if intersect_dc(alpha, CurveClass(*o)) == target]
        if hits:
            options.append(RationalOption(CurveClass(*hits[0]), "Admissible", dots))
        else:
            options.append(RationalOption(CurveClass(*ms), "Excluded", dots))
    return options


# ---------------------------------------------------------------------------
# classifiers


def theorem_a_filter(c1: DivisorClass) -> bool:
    return all(0 <= a <= 2 for a in c1) or tuple(sorted(c1)) == (1, 2, 3)


_CURVE_NAMES = {
    (1, 0): "line",
    (5, 0): "quintic (possibly reducible)",
    (7, 0): "rational normal curve",
    (8, 1): "elliptic normal curve",
}


def _describe(c1: DivisorClass, c2: CurveClass) -> str:
    degree, genus = zero_locus_invariants(BundleData(c1, c2))
    name = _CURVE_NAMES.get((degree, genus), "curve")
    return f"{name}, deg {degree}, genus {genus}"


def _format_divisor(d: DivisorClass) -> str:
    terms = []
    for i, k in enumerate(d, start=1):
        if k:
            terms.append(("" if k == 1 else str(k)) + f"h{i}")
    return "+".join(terms) or "0"


def _condition(c1: DivisorClass, allowed: Sequence[CurveClass]) -> str:
    pairs = set()
    for c2 in allowed:
        pairs.update(decomposable_candidates(c1, c2_target=c2, require_sections=True))
    if not pairs:
        return "always indecomposable"
    l1, l2 = min(pairs)
    return "indecomposable unless complete intersection pair in |%s| and |%s|" % (
        _format_divisor(l1),
        _format_divisor(l2),
    )


@lru_cache(maxsize=None)
def _catalogue():
    """Admissible ``c2`` per sorted ``c1``, assembled from the engines above."""
    entries = {}
    zero = DivisorClass(0, 0, 0)
    lines = []
    for beta in solve_alpha_beta(zero, e_flag(zero, zero)):
        if not decomposable_candidates(zero, c2_target=beta):
            lines.append(canonicalize_s3(zero, [beta])[1][0])
    entries[zero] = sorted(set(lines))
    entries[H * 2] = ulrich_c2_options()
    entries[SPORADIC_C1] = sorted(o.beta for o in rational_c2_options() if o.verdict == "Admissible")
    for row in intermediate_table():
        if row.verdict is IntermediateVerdict.ADMISSIBLE:
            entries.setdefault(row.alpha, []).append(row.beta)
    return {
        c1: (tuple(sorted(c2s)), _condition(c1, c2s)) for c1, c2s in entries.items() if c2s
    }


def admissible_pairs() -> List[Tuple[DivisorClass, CurveClass]]:
    """Canonical ``(c1, c2)`` pairs that the classifier accepts."""
    return sorted((c1, c2) for c1, (c2s, _) in _catalogue().items() for c2 in c2s)


def theorem_b_verdict(c1: DivisorClass, c2: CurveClass) -> ClassificationVerdict:
    c1_sorted, (c2_canon,) = canonicalize_s3(c1, [c2])
    catalogue = _catalogue()
    if not theorem_a_filter(c1) or c1_sorted not in catalogue:
        return ClassificationVerdict(c1_sorted, (), NOT_ADMISSIBLE, "", c2_canon)
    allowed, condition = catalogue[c1_sorted]
    if c2_canon not in allowed:
        return ClassificationVerdict(c1_sorted, allowed, NOT_ADMISSIBLE, "", c2_canon)
    return ClassificationVerdict(c1_sorted, allowed, _describe(c1_sorted, c2_canon), condition, c2_canon)
