from itertools import permutations, product

import pytest
from hypothesis import given, settings, strategies as st

from triquad.chow import H, S3, CurveClass, DivisorClass, divisor_product, intersect_dc
from triquad.cohomology import kunneth_h
from triquad.enumeration import (
    DivisorialVerdict,
    IntermediateVerdict,
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

DIVISOR_TYPES = {(0, 0, 1), (0, 1, 1), (0, 0, 2), (0, 1, 2)}


def perm(t, s):
    return tuple(t[s[i]] for i in range(3))


def orbit_key(*triples):
    """Smallest image of the tuple of triples under simultaneous S3 action."""
    return min(tuple(perm(t, s) for t in triples) for s in permutations(range(3)))


def brute_betas(alpha, e, lo=0, box=12):
    c1c2 = 2 * alpha[0] * alpha[1] * alpha[2]
    hc2 = alpha[0] * alpha[1] * alpha[2] + (1 - alpha[0]) * (1 - alpha[1]) * (1 - alpha[2]) + 1 - e
    return [
        b for b in product(range(lo, box + 1), repeat=3)
        if sum(b) == hc2 and sum(x * y for x, y in zip(alpha, b)) == c1c2
    ]


def middle_alphas():
    return [a for a in product(range(3), repeat=3) if min(a) <= 1 <= max(a)]


def residual(alpha, beta, d):
    return tuple(
        beta[i] - (alpha[(i + 1) % 3] * d[(i + 2) % 3] + alpha[(i + 2) % 3] * d[(i + 1) % 3])
        + 2 * d[(i + 1) % 3] * d[(i + 2) % 3]
        for i in range(3)
    )


def test_divisor_candidates():
    allowed = {tuple(c.divisor) for c in divisor_candidates() if c.allowed and any(c.divisor)}
    assert allowed == DIVISOR_TYPES
    assert [tuple(c.divisor) for c in divisor_candidates() if not c.allowed] == [(0, 2, 2)]


def test_divisorial_table_against_orbit_enumeration():
    brute = {}
    for alpha in middle_alphas():
        for d in product(range(3), repeat=3):
            if tuple(sorted(d)) not in DIVISOR_TYPES or any(x > a for x, a in zip(d, alpha)):
                continue
            e = int(d == alpha)
            for beta in brute_betas(alpha, e):
                brute[orbit_key(alpha, d, beta)] = residual(alpha, beta, d)
    rows = divisorial_table()
    derived = {orbit_key(r.alpha, r.delta, r.beta): tuple(r.classE) for r in rows}
    assert len(rows) == len(derived) == len(brute) == 60
    for key, class_e in derived.items():
        assert min(perm(class_e, s) for s in S3) == min(perm(brute[key], s) for s in S3)


def test_divisorial_verdict_split():
    counts = {}
    for r in divisorial_table():
        counts[r.verdict] = counts.get(r.verdict, 0) + 1
        if min(r.classE) < 0:
            assert r.verdict is DivisorialVerdict.NEGATIVE_CLASS
        elif r.classE == CurveClass(0, 0, 0):
            assert r.verdict is DivisorialVerdict.EMPTY_E_FORBIDDEN
        else:
            assert r.verdict is DivisorialVerdict.GLOBALLY_GENERATED_CONTRADICTION
            # a line, a conic or two skew lines: globally generated classes
            assert tuple(sorted(r.classE)) in {(0, 0, 1), (0, 1, 1), (0, 0, 2)}
    assert sum(counts.values()) == 60


def test_quoted_divisorial_row():
    rows = {r.key: r for r in divisorial_table()}
    r = rows[(DivisorClass(1, 2, 2), DivisorClass(0, 1, 2), CurveClass(2, 1, 2))]
    assert r.classE == CurveClass(0, -1, 1)
    assert r.verdict is DivisorialVerdict.NEGATIVE_CLASS


def test_intermediate_table_against_orbit_enumeration():
    brute = {orbit_key(a, b) for a in middle_alphas() for b in brute_betas(a, 0)}
    rows = intermediate_table()
    assert {orbit_key(r.alpha, r.beta) for r in rows} == brute
    assert "".join(r.label for r in rows) == "LMNPQRSTUVW"


def test_intermediate_verdicts():
    want = {
        "L": "ExcludedEmpty", "M": "Admissible", "N": "Decomposable", "P": "Decomposable",
        "Q": "Decomposable", "R": "NonExistent", "S": "ExcludedDualPositivity",
        "T": "Decomposable", "U": "ExcludedDualPositivity", "V": "Admissible",
        "W": "ExcludedDualPositivity",
    }
    rows = intermediate_table()
    assert {r.label: r.verdict.value for r in rows} == want
    for r in rows:
        if r.verdict is IntermediateVerdict.DECOMPOSABLE:
            l1, l2 = r.split
            assert l1 + l2 == r.alpha and divisor_product(l1, l2) == r.beta
            assert kunneth_h(0, l1) and kunneth_h(0, l2)


def test_row_l_genus():
    l_row = intermediate_table()[0]
    assert (l_row.degE, l_row.paE) == (0, 1)


@settings(max_examples=60)
@given(st.tuples(*[st.integers(0, 3)] * 3), st.integers(0, 1))
def test_solve_against_box(alpha, e):
    alpha = DivisorClass(*alpha)
    got = [tuple(b) for b in solve_alpha_beta(alpha, e)]
    assert got == sorted(brute_betas(alpha, e, box=40))


def brute_aCM(d):
    return all(kunneth_h(i, DivisorClass(*d) + H * t) == 0 for t in range(-12, 13) for i in (1, 2))


def brute_initialized(d):
    d = DivisorClass(*d)
    return bool(kunneth_h(0, d)) and not kunneth_h(0, d - H)


@pytest.mark.parametrize("c1", [(0, 0, 0), (0, 0, 1), (1, 1, 1), (2, 2, 2), (1, 2, 3), (0, 2, 2)])
def test_decomposable_against_brute(c1):
    want = set()
    for l1 in product(range(-4, 5), repeat=3):
        l2 = tuple(c - x for c, x in zip(c1, l1))
        if not (brute_initialized(l1) and brute_aCM(l1) and brute_aCM(l2)):
            continue
        if kunneth_h(0, DivisorClass(*l2)) and not brute_initialized(l2):
            continue
        want.add(tuple(sorted((l1, l2))))
    got = {tuple(tuple(x) for x in p) for p in decomposable_candidates(DivisorClass(*c1))}
    assert got == want


def test_decomposable_goldens():
    pairs = decomposable_candidates(H * 2, h0_total=12)
    def pair_orbit(a, b):
        return min(tuple(sorted((perm(a, s), perm(b, s)))) for s in S3)

    assert len(pairs) == 3
    assert {pair_orbit(a, b) for a, b in pairs} == {pair_orbit((2, 0, 1), (0, 2, 1))}
    assert decomposable_candidates(DivisorClass(0, 0, 0), c2_target=CurveClass(1, 0, 0)) == []
    assert decomposable_candidates(DivisorClass(0, 0, 1), c2_target=CurveClass(1, 0, 0), require_sections=True) == []


def test_ulrich_against_box():
    brute = {min(perm(b, s) for s in S3) for b in brute_betas((2, 2, 2), 0) if min(b) >= 2}
    assert {tuple(b) for b in ulrich_c2_options()} == brute == {(2, 2, 4), (2, 3, 3)}


def test_rational_options():
    opts = {tuple(sorted(o.beta)): o for o in rational_c2_options()}
    assert set(opts) == {(2, 2, 3), (1, 3, 3), (1, 2, 4)}
    assert opts[(2, 2, 3)].verdict == "Excluded"
    assert opts[(2, 2, 3)].dot_products == (13, 14, 15)
    assert 12 not in opts[(2, 2, 3)].dot_products
    assert {o.beta for o in opts.values() if o.verdict == "Admissible"} == {CurveClass(4, 1, 2), CurveClass(3, 3, 1)}
    brute = {
        tuple(sorted(b)) for b in brute_betas((1, 2, 3), 0)
        if min(b) >= 1 and min(b[0] + b[1], b[0] + b[2], b[1] + b[2]) >= 3
    }
    assert brute == {(1, 2, 4), (1, 3, 3)}


def test_theorem_a():
    assert theorem_a_filter(DivisorClass(3, 1, 2))
    assert theorem_a_filter(DivisorClass(0, 2, 1))
    assert not theorem_a_filter(DivisorClass(0, 3, 3))
    assert not theorem_a_filter(DivisorClass(-1, 0, 0))


def test_admissible_pairs():
    pairs = {(tuple(a), tuple(b)) for a, b in admissible_pairs()}
    assert pairs == {
        ((0, 0, 0), (0, 0, 1)),
        ((0, 0, 1), (0, 1, 0)),
        ((1, 2, 2), (2, 1, 2)),
        ((1, 2, 3), (3, 3, 1)),
        ((1, 2, 3), (4, 1, 2)),
        ((2, 2, 2), (2, 2, 4)),
        ((2, 2, 2), (2, 3, 3)),
    }


@given(st.tuples(*[st.integers(0, 3)] * 3), st.tuples(*[st.integers(0, 5)] * 3), st.sampled_from(S3))
def test_verdict_is_orbit_invariant(c1, c2, sigma):
    a, b = DivisorClass(*c1), CurveClass(*c2)
    assert theorem_b_verdict(a, b) == theorem_b_verdict(a.permuted(sigma), b.permuted(sigma))
    if theorem_b_verdict(a, b).admissible:
        assert intersect_dc(a, b) == 2 * a[0] * a[1] * a[2]


def test_verdict_text():
    v = theorem_b_verdict(H * 2, CurveClass(3, 2, 3))
    assert v.curve_description == "elliptic normal curve, deg 8, genus 1"
    assert v.indecomposability_condition.startswith("indecomposable unless complete intersection pair")
    assert theorem_b_verdict(DivisorClass(0, 0, 1), CurveClass(1, 0, 0)).indecomposability_condition == "always indecomposable"
    assert not theorem_b_verdict(DivisorClass(1, 1, 1), CurveClass(0, 1, 1)).admissible
