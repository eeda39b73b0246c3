"""Conformance runner: derived results against the golden data files.

Each check carries a scope (for ``verify --only``), a provenance tag
(``golden-table`` when it reads a data file, ``property`` when it tests an
identity) and a status.  ``paper-discrepancy`` marks cells where the
transcribed reference disagrees with the derivation for a reason recorded
in the detail text; those do not fail the run.
"""

from __future__ import annotations

import csv
import os
import random
from dataclasses import dataclass, field
from itertools import product
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .chow import (
    H,
    S3,
    ChowClass,
    CurveClass,
    DivisorClass,
    canonicalize_s3,
    divisor_product,
    intersect_dc,
    mul,
    sorting_permutations,
)
from .cohomology import (
    cohomology_vector,
    euler_characteristic,
    ext1_line,
    initialized_acm_line_bundles,
    is_acm_line,
    kunneth_h,
)
from .delpezzo import (
    SurfaceClass,
    cremona,
    curve_classes,
    normal_chi,
    orbit_reduce,
    pushforward,
    s_degree,
    s_genus,
    s_intersect,
)
from .enumeration import (
    DivisorialVerdict,
    admissible_pairs,
    decomposable_candidates,
    divisor_candidates,
    divisorial_table,
    intermediate_table,
    rational_c2_options,
    solve_alpha_beta,
    theorem_a_filter,
    theorem_b_verdict,
    ulrich_c2_options,
)
from .invariants import (
    BundleData,
    c1c2_constraint,
    chi_line,
    chi_rank2,
    chi_rank2_rr,
    dual,
    e_flag,
    eta1,
    eta2,
    hc2_constraint,
    residual_class,
    twist,
    zero_locus_invariants,
)

__all__ = [
    "Check",
    "ConformanceReport",
    "SCOPES",
    "golden_dir",
    "run_checks",
    "s3_equivariance_failures",
]

PASS = "pass"
FAIL = "fail"
DISCREPANCY = "paper-discrepancy"
GOLDEN = "golden-table"
PROPERTY = "property"

SCOPES = ("cohomology", "invariants", "tables", "classify", "delpezzo", "equivariance")

ENV_VAR = "TRIQUAD_GOLDEN_DIR"


@dataclass(frozen=True)
class Check:
    name: str
    scope: str
    provenance: str
    status: str
    detail: str

    def as_dict(self) -> Dict[str, str]:
        return {
            "name": self.name,
            "scope": self.scope,
            "provenance": self.provenance,
            "status": self.status,
            "detail": self.detail,
        }


@dataclass
class ConformanceReport:
    checks: List[Check] = field(default_factory=list)

    def summary(self) -> Dict[str, int]:
        counts = {PASS: 0, FAIL: 0, DISCREPANCY: 0}
        for c in self.checks:
            counts[c.status] += 1
        counts["total"] = len(self.checks)
        return counts

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def as_dict(self) -> dict:
        return {"summary": self.summary(), "checks": [c.as_dict() for c in self.checks]}


def golden_dir() -> Path:
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override)
    return Path(__file__).resolve().parent / "golden"


def _read_csv(name: str) -> List[Dict[str, str]]:
    with open(golden_dir() / name, newline="", encoding="utf-8") as fh:
        return list(csv.DictReader(fh))


def _ints(text: str) -> List[int]:
    return [int(t) for t in text.replace(";", " ").split()]


def _triple(row: Dict[str, str], prefix: str, cls=DivisorClass):
    return cls(*(int(row[f"{prefix}{i}"]) for i in (1, 2, 3)))


def _verdict(ok: bool, detail_ok: str, detail_bad: str) -> Tuple[str, str]:
    return (PASS, detail_ok) if ok else (FAIL, detail_bad)


# ---------------------------------------------------------------------------
# cohomology


def _golden_values(kind: str) -> List[Dict[str, str]]:
    return [r for r in _read_csv("values.csv") if r["kind"] == kind]


def check_golden_values(kind: str, compute: Callable[[List[int]], List[int]]) -> Tuple[str, str]:
    bad = []
    rows = _golden_values(kind)
    for r in rows:
        got = compute(_ints(r["args"]))
        want = _ints(r["expected"])
        if got != want:
            bad.append(f"{r['name']}: expected {want}, got {got}")
    if not rows:
        return FAIL, f"no golden values of kind {kind}"
    return _verdict(not bad, f"{len(rows)} values match", "; ".join(bad))


def _box(radius: int) -> Iterable[DivisorClass]:
    for d in product(range(-radius, radius + 1), repeat=3):
        yield DivisorClass(*d)


def check_serre_duality(radius: int = 6) -> Tuple[str, str]:
    n = 0
    for d in _box(radius):
        dual_d = H * -2 - d
        for i in range(4):
            n += 1
            if kunneth_h(i, d) != kunneth_h(3 - i, dual_d):
                return FAIL, f"h^{i}{d} differs from h^{3 - i}{dual_d}"
    return PASS, f"{n} comparisons in the box |d_i| <= {radius}"


def check_euler(radius: int = 6) -> Tuple[str, str]:
    n = 0
    for d in _box(radius):
        n += 1
        if cohomology_vector(d).euler != euler_characteristic(d):
            return FAIL, f"alternating sum wrong at {d}"
    return PASS, f"{n} classes"


def check_window(radius: int = 4, slack: int = 10) -> Tuple[str, str]:
    n = 0
    for d in _box(radius):
        n += 1
        if is_acm_line(d) != is_acm_line(d, slack=slack):
            return FAIL, f"widening the twist window changes the verdict at {d}"
    return PASS, f"{n} classes, window widened by {slack}"


def expected_acm_lines() -> frozenset:
    out = {DivisorClass(0, 0, 0)}
    for base in ((1, 0, 0), (1, 1, 0), (2, 1, 0)):
        out.update(DivisorClass(*base).permuted(s) for s in S3)
    return frozenset(out)


def check_acm_lines() -> Tuple[str, str]:
    found = initialized_acm_line_bundles()
    wider = initialized_acm_line_bundles(bound=8)
    closed = all(d.permuted(s) in found for d in found for s in S3)
    ok = found == expected_acm_lines() and wider == found and closed and len(found) == 13
    return _verdict(ok, "13 classes, orbit union, stable at bound 8", f"found {sorted(found)}")


def check_acm_printed_list() -> Tuple[str, str]:
    printed = [_triple(r, "d") for r in _read_csv("acm_lines.csv")]
    derived = initialized_acm_line_bundles()
    distinct = set(printed)
    missing = sorted(derived - distinct)
    extra = sorted(distinct - derived)
    dupes = sorted({d for d in printed if printed.count(d) > 1})
    if extra:
        return FAIL, f"printed classes not derived: {extra}"
    if not missing and not dupes:
        return PASS, "printed list equals the derived set"
    return DISCREPANCY, (
        f"printed list has {len(printed)} entries, {len(distinct)} distinct; "
        f"repeated {[str(d) for d in dupes]}, missing {[str(d) for d in missing]}"
    )


def check_ext_dual() -> Tuple[str, str]:
    n = 0
    for l1 in _box(2):
        for l2 in initialized_acm_line_bundles():
            n += 1
            if ext1_line(l1, l2) != kunneth_h(2, l1 - l2 - H * 2):
                return FAIL, f"Serre-dual Ext^1 disagrees at {l1}, {l2}"
    return PASS, f"{n} pairs"


# ---------------------------------------------------------------------------
# invariants


def _compute_chi(v: List[int]) -> List[int]:
    return [chi_rank2(BundleData(DivisorClass(*v[:3]), CurveClass(*v[3:])))]


def check_chi_paths(n: int = 10_000, seed: int = 20240601) -> Tuple[str, str]:
    rng = random.Random(seed)
    agree = raised = 0
    for _ in range(n):
        b = BundleData(
            DivisorClass(*(rng.randint(-9, 9) for _ in range(3))),
            CurveClass(*(rng.randint(-9, 9) for _ in range(3))),
        )
        try:
            closed = chi_rank2(b)
        except ValueError:
            closed = None
        try:
            direct = chi_rank2_rr(b)
        except ValueError:
            direct = None
        if closed != direct:
            return FAIL, f"paths disagree at {b}: {closed} vs {direct}"
        if closed is None:
            raised += 1
        else:
            agree += 1
    return PASS, f"{agree} integral and {raised} non-integral samples agree"


def check_split_chi(radius: int = 4) -> Tuple[str, str]:
    lines = list(_box(radius))
    n = 0
    for i, x in enumerate(lines):
        for y in lines[i:]:
            n += 1
            if chi_rank2(BundleData(x + y, divisor_product(x, y))) != chi_line(x) + chi_line(y):
                return FAIL, f"split chi wrong for {x} + {y}"
    return PASS, f"{n} unordered pairs"


def check_transform_laws(n: int = 500, seed: int = 7) -> Tuple[str, str]:
    rng = random.Random(seed)

    def rd(cls, r=5):
        return cls(*(rng.randint(-r, r) for _ in range(3)))

    for _ in range(n):
        b = BundleData(rd(DivisorClass), rd(CurveClass))
        d1, d2 = rd(DivisorClass), rd(DivisorClass)
        if twist(twist(b, d1), d2) != twist(b, d1 + d2):
            return FAIL, f"twist is not additive at {b}"
        if twist(twist(b, d1), -d1) != b or dual(dual(b)) != b:
            return FAIL, f"twist or dual fails to invert at {b}"
        t = twist(b, d1)
        want_deg = b.c2.total() + intersect_dc(H, divisor_product(b.c1, d1) + divisor_product(d1, d1))
        if t.c2.total() != want_deg:
            return FAIL, f"degree after twist wrong at {b}"
    return PASS, f"{n} random Chern data"


def check_eta() -> Tuple[str, str]:
    for cand in divisor_candidates():
        for d in {cand.divisor.permuted(s) for s in S3}:
            in_2hj = sorted(d) == [0, 0, 2]
            want1 = 1 if in_2hj else 0
            want2 = 1 if d == DivisorClass(0, 0, 0) else 0
            if (eta1(d), eta2(d)) != (want1, want2):
                return FAIL, f"eta values at {d}: {(eta1(d), eta2(d))}"
    return PASS, "indicator description matches Kunneth on all candidate divisors"


def check_table_constraints() -> Tuple[str, str]:
    n = 0
    for r in divisorial_table():
        n += 1
        if intersect_dc(r.alpha, r.beta) != c1c2_constraint(r.alpha):
            return FAIL, f"c1.c2 constraint broken at {r.key}"
        if r.beta.total() != hc2_constraint(r.alpha, r.e) or r.e != e_flag(r.alpha, r.delta):
            return FAIL, f"h.c2 constraint broken at {r.key}"
        if r.classE != residual_class(r.alpha, r.beta, r.delta):
            return FAIL, f"residual class wrong at {r.key}"
    for r in intermediate_table():
        n += 1
        if intersect_dc(r.alpha, r.beta) != c1c2_constraint(r.alpha) or r.beta.total() != hc2_constraint(r.alpha, 0):
            return FAIL, f"constraint broken in row {r.label}"
        if (r.degE, r.paE) != zero_locus_invariants(BundleData(r.alpha, r.beta)):
            return FAIL, f"zero-locus invariants wrong in row {r.label}"
    return PASS, f"{n} rows satisfy both constraint equations"


# ---------------------------------------------------------------------------
# tables


def _divisorial_key(alpha, delta, beta, class_e):
    a, (d, b, c) = canonicalize_s3(alpha, [delta, beta, class_e])
    return (a, d, b), c


def _key_text(key) -> str:
    return "|".join("".join(str(v) for v in t) for t in key)


def _golden_divisorial():
    rows = []
    for r in _read_csv("divisorial.csv"):
        alpha = _triple(r, "a")
        delta = _triple(r, "d")
        beta = _triple(r, "b", CurveClass)
        class_e = _triple(r, "cE", CurveClass)
        rows.append((r, alpha, delta, beta, class_e))
    return rows


def check_divisorial_golden() -> Tuple[str, str]:
    derived = {row.key: row for row in divisorial_table()}
    bad = []
    golden = _golden_divisorial()
    for r, alpha, delta, beta, class_e in golden:
        key, class_c = _divisorial_key(alpha, delta, beta, class_e)
        where = f"row {r['paper_row']}"
        if _key_text(key) != r["canonical_key"]:
            bad.append(f"{where}: canonical key {_key_text(key)} != {r['canonical_key']}")
            continue
        row = derived.get(key)
        if row is None:
            bad.append(f"{where}: {_key_text(key)} not derived")
            continue
        if row.e != int(r["e"]) or row.classE != class_c or row.verdict.value != r["verdict"]:
            bad.append(
                f"{where}: golden e={r['e']} class={class_c} {r['verdict']}, "
                f"derived e={row.e} class={row.classE} {row.verdict.value}"
            )
    return _verdict(not bad, f"{len(golden)} transcribed rows match derived rows", "; ".join(bad))


def check_divisorial_typos() -> Tuple[str, str]:
    notes = []
    for r, *_ in _golden_divisorial():
        if r["status"] not in ("ok", "duplicate"):
            notes.append(f"row {r['paper_row']} printed {r['printed']}")
    if not notes:
        return PASS, "no corrected cells"
    return DISCREPANCY, "corrected cells: " + "; ".join(notes)


def check_divisorial_count() -> Tuple[str, str]:
    derived = divisorial_table()
    golden = _golden_divisorial()
    keys = {_divisorial_key(a, d, b, c)[0] for _, a, d, b, c in golden}
    dupes = sum(1 for r, *_ in golden if r["status"] == "duplicate")
    unlisted = [row for row in derived if row.key not in keys]
    detail = (
        f"stated count 53; printed rows {len(golden)} ({dupes} repeat a case up to permutation, "
        f"{len(keys)} distinct); derived {len(derived)}; derived but not printed: "
        + ", ".join(_key_text(r.key) for r in unlisted)
    )
    if not keys <= {row.key for row in derived}:
        return FAIL, detail
    if len(derived) == 53 and len(keys) == 53:
        return PASS, detail
    return DISCREPANCY, detail


def check_divisorial_verdicts() -> Tuple[str, str]:
    allowed = set(DivisorialVerdict)
    for row in divisorial_table():
        if row.verdict not in allowed:
            return FAIL, f"unknown verdict at {row.key}"
        negative = min(row.classE) < 0
        if negative != (row.verdict is DivisorialVerdict.NEGATIVE_CLASS):
            return FAIL, f"negative-class verdict inconsistent at {row.key}"
        if (row.classE == CurveClass(0, 0, 0)) != (row.verdict is DivisorialVerdict.EMPTY_E_FORBIDDEN):
            return FAIL, f"empty-curve verdict inconsistent at {row.key}"
    return PASS, "every row carries one of the three verdicts consistently"


def _split_of(text: str):
    if not text:
        return None
    a, b = text.split("|")
    return DivisorClass(*_ints(a)), DivisorClass(*_ints(b))


def _intermediate_form(alpha, beta, split):
    best = None
    for sigma in sorting_permutations(alpha):
        pair = None
        if split is not None:
            pair = tuple(sorted(p.permuted(sigma) for p in split))
        cand = (beta.permuted(sigma), pair)
        if best is None or cand < best:
            best = cand
    return DivisorClass(*sorted(alpha)), best[0], best[1]


def check_intermediate_golden() -> Tuple[str, str]:
    derived = {r.label: r for r in intermediate_table()}
    golden = _read_csv("intermediate.csv")
    bad = []
    if sorted(derived) != sorted(r["label"] for r in golden):
        bad.append(f"labels differ: {sorted(derived)}")
    for g in golden:
        row = derived.get(g["label"])
        if row is None:
            continue
        want = _intermediate_form(_triple(g, "a"), _triple(g, "b", CurveClass), _split_of(g["split"]))
        got = _intermediate_form(row.alpha, row.beta, row.split)
        fields_ok = (row.degE, row.paE, row.verdict.value) == (int(g["deg"]), int(g["pa"]), g["verdict"])
        if want != got or not fields_ok:
            bad.append(
                f"{g['label']}: golden {want} deg={g['deg']} pa={g['pa']} {g['verdict']}, "
                f"derived {got} deg={row.degE} pa={row.paE} {row.verdict.value}"
            )
    return _verdict(not bad, f"{len(golden)} rows match", "; ".join(bad))


def check_intermediate_printed() -> Tuple[str, str]:
    notes = [f"row {g['label']} printed {g['printed']}" for g in _read_csv("intermediate.csv") if g["status"] != "ok"]
    if not notes:
        return PASS, "no corrected cells"
    return DISCREPANCY, "; ".join(notes) + " (genus formula gives the stored value)"


def check_dual_pairs() -> Tuple[str, str]:
    rows = {r.label: r for r in intermediate_table()}

    def flipped(label):
        r = rows[label]
        b = twist(dual(BundleData(r.alpha, r.beta)), H)
        a, (c,) = canonicalize_s3(b.c1, [b.c2])
        return a, c

    bad = []
    for x, y in (("N", "T"), ("M", "V")):
        if flipped(x) != (rows[y].alpha, rows[y].beta):
            bad.append(f"{x} does not flip to {y}")
        admissible = {rows[x].verdict, rows[y].verdict}
        if len(admissible) != 1:
            bad.append(f"{x} and {y} carry different verdicts")
    return _verdict(not bad, "T and V are the dual twists of N and M with matching verdicts", "; ".join(bad))


# ---------------------------------------------------------------------------
# classify


def check_ulrich() -> Tuple[str, str]:
    got = ulrich_c2_options()
    want = [CurveClass(2, 2, 4), CurveClass(2, 3, 3)]
    ok = got == want and all(intersect_dc(H * 2, b) == 16 for b in got)
    return _verdict(ok, "c2 in {(2,2,4), (2,3,3)}", f"got {got}")


def check_ulrich_strict() -> Tuple[str, str]:
    strict = solve_alpha_beta(H * 2, 0, CurveClass(3, 3, 3))
    if strict:
        return FAIL, f"strict reading unexpectedly has solutions {strict}"
    return DISCREPANCY, "reading the degree bound as b_i > 2 leaves no solutions; b_i >= 2 is used"


def check_rational() -> Tuple[str, str]:
    got = {(o.beta, o.verdict, o.dot_products) for o in rational_c2_options()}
    ok = (
        (CurveClass(3, 2, 2), "Excluded", (13, 14, 15)) in got
        and {o.beta for o in rational_c2_options() if o.verdict == "Admissible"}
        == {CurveClass(4, 1, 2), CurveClass(3, 3, 1)}
        and len(got) == 3
        and all(intersect_dc(DivisorClass(1, 2, 3), o.beta) == 12 for o in rational_c2_options() if o.verdict == "Admissible")
    )
    return _verdict(ok, "(4,1,2), (3,3,1) admissible; (3,2,2) excluded with dots 13, 14, 15", f"got {sorted(got)}")


EXPECTED_ADMISSIBLE = (
    ((0, 0, 0), (1, 0, 0)),
    ((2, 2, 2), (2, 2, 4)),
    ((2, 2, 2), (2, 3, 3)),
    ((1, 2, 3), (4, 1, 2)),
    ((1, 2, 3), (3, 3, 1)),
    ((0, 0, 1), (1, 0, 0)),
    ((1, 2, 2), (2, 2, 1)),
)


def canonical_pair(c1: Sequence[int], c2: Sequence[int]) -> Tuple[DivisorClass, CurveClass]:
    a, (b,) = canonicalize_s3(DivisorClass(*c1), [CurveClass(*c2)])
    return a, b


def check_admissible_set() -> Tuple[str, str]:
    want = sorted(canonical_pair(a, b) for a, b in EXPECTED_ADMISSIBLE)
    got = admissible_pairs()
    return _verdict(got == want, "7 canonical pairs", f"got {got}")


def check_classifier_box() -> Tuple[str, str]:
    want = {canonical_pair(a, b) for a, b in EXPECTED_ADMISSIBLE}
    n = 0
    for a in product(range(4), repeat=3):
        for b in product(range(6), repeat=3):
            n += 1
            v = theorem_b_verdict(DivisorClass(*a), CurveClass(*b))
            if v.admissible != (canonical_pair(a, b) in want):
                return FAIL, f"verdict wrong at {a}, {b}"
    return PASS, f"{n} pairs in the box"


def check_theorem_a() -> Tuple[str, str]:
    cases = {(2, 0, 1): True, (3, 2, 1): True, (0, 3, 3): False, (0, 2, 4): False, (2, 2, 2): True}
    bad = [c for c, want in cases.items() if theorem_a_filter(DivisorClass(*c)) != want]
    return _verdict(not bad, f"{len(cases)} classes", f"wrong at {bad}")


def _pair_orbits(pairs):
    out = set()
    for l1, l2 in pairs:
        out.add(min(tuple(sorted((l1.permuted(s), l2.permuted(s)))) for s in S3))
    return out


def check_split_elliptic() -> Tuple[str, str]:
    pairs = decomposable_candidates(H * 2, h0_total=12)
    orbits = _pair_orbits(pairs)
    want = _pair_orbits([(DivisorClass(2, 0, 1), DivisorClass(0, 2, 1))])
    return _verdict(orbits == want, f"one orbit of {len(pairs)} pairs", f"got {pairs}")


def check_split_line() -> Tuple[str, str]:
    pairs = decomposable_candidates(DivisorClass(0, 0, 0), c2_target=CurveClass(1, 0, 0))
    return _verdict(not pairs, "no split bundle with c1 = 0 has c2 = h2h3", f"got {pairs}")


def check_split_case_m() -> Tuple[str, str]:
    c1 = DivisorClass(0, 0, 1)
    target = CurveClass(1, 0, 0)
    pairs = decomposable_candidates(c1, c2_target=target)
    sectioned = decomposable_candidates(c1, c2_target=target, require_sections=True)
    if sectioned:
        return FAIL, f"a split bundle with sections on both summands reaches c2 = h2h3: {sectioned}"
    if not pairs:
        return PASS, "no split candidate"
    every = decomposable_candidates(c1)
    c2s = sorted({divisor_product(a, b) for a, b in every})
    return DISCREPANCY, (
        f"split candidates for c1 = h3 give c2 in {[str(c) for c in c2s]}; "
        f"{[f'{a}+{b}' for a, b in pairs]} reaches h2h3, beyond the printed list of three; "
        "one summand has no sections, so no section vanishes on a curve and the bundle stays indecomposable"
    )


# ---------------------------------------------------------------------------
# del Pezzo


def check_curve_classes() -> Tuple[str, str]:
    bad = []
    if curve_classes(8, 1) != [SurfaceClass(3, 1, 0, 0), SurfaceClass(4, 2, 2, 0), SurfaceClass(5, 3, 2, 2)]:
        bad.append(f"(8,1): {curve_classes(8, 1)}")
    seven = set(curve_classes(7, 0))
    for c in (SurfaceClass(3, 0, 0, 2), SurfaceClass(4, 1, 1, 3)):
        if c.canonical() not in seven or pushforward(c) != CurveClass(3, 3, 1):
            bad.append(f"(7,0): {c}")
    if curve_classes(2, 0) != [SurfaceClass(1, 1, 0, 0)]:
        bad.append(f"(2,0): {curve_classes(2, 0)}")
    return _verdict(not bad, "degree/genus queries (8,1), (7,0), (2,0)", "; ".join(bad))


def check_cremona_orbits() -> Tuple[str, str]:
    ok = (
        cremona(SurfaceClass(5, 3, 2, 2)) == SurfaceClass(3, 1, 0, 0)
        and cremona(SurfaceClass(0, -1, 0, 0)) == SurfaceClass(1, 0, 1, 1)
        and orbit_reduce(curve_classes(8, 1)) == [SurfaceClass(3, 1, 0, 0), SurfaceClass(4, 2, 2, 0)]
    )
    return _verdict(ok, "Cremona maps (5;3,2,2) to (3;1,0,0); two orbits remain", "orbit data differs")


def _compute_surface(kind: str) -> Callable[[List[int]], List[int]]:
    def run(v: List[int]) -> List[int]:
        c = SurfaceClass(*v)
        return list(normal_chi(c)) if kind == "normal_chi" else list(pushforward(c))

    return run


def check_cremona_isometry(n: int = 500, seed: int = 11) -> Tuple[str, str]:
    rng = random.Random(seed)
    for _ in range(n):
        x = SurfaceClass(*(rng.randint(-6, 6) for _ in range(4)))
        y = SurfaceClass(*(rng.randint(-6, 6) for _ in range(4)))
        if cremona(cremona(x)) != x or s_intersect(cremona(x), cremona(y)) != s_intersect(x, y):
            return FAIL, f"Cremona is not an isometric involution at {x}, {y}"
        if s_degree(cremona(x)) != s_degree(x) or sum(pushforward(x)) != s_degree(x):
            return FAIL, f"degree not preserved at {x}"
    for c in curve_classes(8, 1):
        if sorted(pushforward(cremona(c))) != sorted(pushforward(c)) and s_genus(cremona(c)) != s_genus(c):
            return FAIL, f"pushforward orbit check fails at {c}"
    return PASS, f"{n} random pairs"


def check_curve_bounds() -> Tuple[str, str]:
    for degree in range(1, 13):
        for genus in range(0, 4):
            if curve_classes(degree, genus) != curve_classes(degree, genus, widen=2):
                return FAIL, f"search range too small at degree {degree}, genus {genus}"
    return PASS, "doubling the a-range changes nothing for degree <= 12, genus <= 3"


# ---------------------------------------------------------------------------
# S3 equivariance


def _rand_div(rng, lo=-3, hi=3):
    return DivisorClass(*(rng.randint(lo, hi) for _ in range(3)))


def _rand_curve(rng, lo=-3, hi=3):
    return CurveClass(*(rng.randint(lo, hi) for _ in range(3)))


def _perm_pairs(pairs, sigma):
    return sorted(tuple(sorted((a.permuted(sigma), b.permuted(sigma)))) for a, b in pairs)


def _equivariance_trials(rng: random.Random):
    """Yield ``(name, ok)`` for one random input per operation."""
    sigma = rng.choice(S3)
    x = ChowClass(rng.randint(-3, 3), _rand_div(rng), _rand_curve(rng), rng.randint(-3, 3))
    y = ChowClass(rng.randint(-3, 3), _rand_div(rng), _rand_curve(rng), rng.randint(-3, 3))
    yield "mul", mul(x.permuted(sigma), y.permuted(sigma)) == mul(x, y).permuted(sigma)
    d1, d2 = _rand_div(rng), _rand_div(rng)
    yield "divisor_product", divisor_product(d1.permuted(sigma), d2.permuted(sigma)) == divisor_product(d1, d2).permuted(sigma)
    c = _rand_curve(rng)
    yield "intersect_dc", intersect_dc(d1.permuted(sigma), c.permuted(sigma)) == intersect_dc(d1, c)
    attached = [d2, c]
    yield "canonicalize_s3", canonicalize_s3(d1.permuted(sigma), [t.permuted(sigma) for t in attached]) == canonicalize_s3(d1, attached)

    alpha = _rand_div(rng, 0, 2)
    e = rng.randint(0, 1)
    sols = solve_alpha_beta(alpha, e)
    yield "solve_alpha_beta", solve_alpha_beta(alpha.permuted(sigma), e) == sorted(b.permuted(sigma) for b in sols)
    c1 = _rand_div(rng, 0, 3)
    yield "theorem_a_filter", theorem_a_filter(c1.permuted(sigma)) == theorem_a_filter(c1)
    c2 = _rand_curve(rng, 0, 5)
    yield "theorem_b_verdict", theorem_b_verdict(c1.permuted(sigma), c2.permuted(sigma)) == theorem_b_verdict(c1, c2)
    target = _rand_curve(rng, -1, 2) if rng.random() < 0.5 else None
    pairs = decomposable_candidates(c1, c2_target=target)
    moved_target = target.permuted(sigma) if target is not None else None
    yield "decomposable_candidates", decomposable_candidates(c1.permuted(sigma), c2_target=moved_target) == _perm_pairs(pairs, sigma)
    yield "residual_class", residual_class(c1.permuted(sigma), c2.permuted(sigma), d1.permuted(sigma)) == residual_class(c1, c2, d1).permuted(sigma)


def _table_invariance() -> bool:
    """Whole tables are orbit data: permuting every input and recanonicalizing is a no-op."""
    for row in divisorial_table():
        for sigma in S3:
            a = row.alpha.permuted(sigma)
            if _divisorial_key(a, row.delta.permuted(sigma), row.beta.permuted(sigma), row.classE.permuted(sigma))[0] != row.key:
                return False
    for row in intermediate_table():
        for sigma in S3:
            a, (b,) = canonicalize_s3(row.alpha.permuted(sigma), [row.beta.permuted(sigma)])
            if (a, b) != (row.alpha, row.beta):
                return False
    return True


def s3_equivariance_failures(n: int = 1000, seed: int = 3) -> Tuple[int, List[str]]:
    """Run ``n`` random permutation checks; return the count and failures."""
    rng = random.Random(seed)
    done = 0
    failures: List[str] = []
    while done < n:
        for name, ok in _equivariance_trials(rng):
            done += 1
            if not ok:
                failures.append(name)
            if done >= n:
                break
    if not _table_invariance():
        failures.append("tables")
    return done, failures


def check_equivariance() -> Tuple[str, str]:
    done, failures = s3_equivariance_failures()
    return _verdict(not failures, f"{done} random permutation checks", f"failed: {sorted(set(failures))}")


def check_chow_axioms(n: int = 300, seed: int = 5) -> Tuple[str, str]:
    rng = random.Random(seed)

    def rc():
        return ChowClass(rng.randint(-4, 4), _rand_div(rng, -4, 4), _rand_curve(rng, -4, 4), rng.randint(-4, 4))

    for _ in range(n):
        x, y, z = rc(), rc(), rc()
        if mul(x, mul(y, z)) != mul(mul(x, y), z) or mul(x, y) != mul(y, x) or mul(x, y + z) != mul(x, y) + mul(x, z):
            return FAIL, f"ring axiom fails at {x}, {y}, {z}"
    hh = mul(ChowClass(c1part=H), ChowClass(c1part=H))
    if mul(hh, ChowClass(c1part=H)).c3 != 6:
        return FAIL, "h^3 != 6"
    return PASS, f"{n} random triples; h^3 = 6"


# ---------------------------------------------------------------------------
# registry

Registry = List[Tuple[str, str, str, Callable[[], Tuple[str, str]]]]

REGISTRY: Registry = [
    ("kunneth-golden-values", "cohomology", GOLDEN, lambda: check_golden_values("kunneth", lambda v: [kunneth_h(v[0], DivisorClass(*v[1:]))])),
    ("serre-duality-box", "cohomology", PROPERTY, check_serre_duality),
    ("euler-characteristic-box", "cohomology", PROPERTY, check_euler),
    ("acm-window-soundness", "cohomology", PROPERTY, check_window),
    ("initialized-acm-lines", "cohomology", PROPERTY, check_acm_lines),
    ("initialized-acm-lines-printed", "cohomology", GOLDEN, check_acm_printed_list),
    ("ext1-golden-values", "cohomology", GOLDEN, lambda: check_golden_values("ext1", lambda v: [ext1_line(DivisorClass(*v[:3]), DivisorClass(*v[3:]))])),
    ("ext1-serre-dual", "cohomology", PROPERTY, check_ext_dual),
    ("chi-golden-values", "invariants", GOLDEN, lambda: check_golden_values("chi", _compute_chi)),
    ("chi-two-paths", "invariants", PROPERTY, check_chi_paths),
    ("chi-split-oracle", "invariants", PROPERTY, check_split_chi),
    ("twist-dual-laws", "invariants", PROPERTY, check_transform_laws),
    ("eta-indicators", "invariants", PROPERTY, check_eta),
    ("table-constraints", "invariants", PROPERTY, check_table_constraints),
    ("divisorial-golden-rows", "tables", GOLDEN, check_divisorial_golden),
    ("divisorial-printed-cells", "tables", GOLDEN, check_divisorial_typos),
    ("divisorial-row-count", "tables", GOLDEN, check_divisorial_count),
    ("divisorial-verdicts", "tables", PROPERTY, check_divisorial_verdicts),
    ("intermediate-golden-rows", "tables", GOLDEN, check_intermediate_golden),
    ("intermediate-printed-cells", "tables", GOLDEN, check_intermediate_printed),
    ("intermediate-dual-pairs", "tables", PROPERTY, check_dual_pairs),
    ("ulrich-c2-options", "classify", GOLDEN, check_ulrich),
    ("ulrich-strict-bound", "classify", PROPERTY, check_ulrich_strict),
    ("rational-c2-options", "classify", GOLDEN, check_rational),
    ("admissible-set", "classify", GOLDEN, check_admissible_set),
    ("classifier-box", "classify", PROPERTY, check_classifier_box),
    ("c1-bounds", "classify", GOLDEN, check_theorem_a),
    ("split-elliptic", "classify", GOLDEN, check_split_elliptic),
    ("split-line", "classify", GOLDEN, check_split_line),
    ("split-degree-one", "classify", GOLDEN, check_split_case_m),
    ("curve-classes", "delpezzo", GOLDEN, check_curve_classes),
    ("cremona-orbits", "delpezzo", GOLDEN, check_cremona_orbits),
    ("pushforward-values", "delpezzo", GOLDEN, lambda: check_golden_values("pushforward", _compute_surface("pushforward"))),
    ("normal-chi-values", "delpezzo", GOLDEN, lambda: check_golden_values("normal_chi", _compute_surface("normal_chi"))),
    ("cremona-isometry", "delpezzo", PROPERTY, check_cremona_isometry),
    ("curve-class-bounds", "delpezzo", PROPERTY, check_curve_bounds),
    ("s3-equivariance", "equivariance", PROPERTY, check_equivariance),
    ("chow-ring-axioms", "equivariance", PROPERTY, check_chow_axioms),
]


def run_checks(only: Optional[Iterable[str]] = None) -> ConformanceReport:
    scopes = set(only) if only else set(SCOPES)
    unknown = scopes - set(SCOPES)
    if unknown:
        raise ValueError(f"unknown scope(s): {sorted(unknown)}")
    report = ConformanceReport()
    for name, scope, provenance, func in REGISTRY:
        if scope not in scopes:
            continue
        try:
            status, detail = func()
        except (OSError, KeyError, ValueError) as exc:
            status, detail = FAIL, f"{type(exc).__name__}: {exc}"
        report.checks.append(Check(name, scope, provenance, status, detail))
    return report
