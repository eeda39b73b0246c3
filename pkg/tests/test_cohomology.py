from itertools import product

import pytest
from hypothesis import given, strategies as st

from triquad.chow import H, S3, DivisorClass
from triquad.cohomology import (
    acm_window,
    cohomology_vector,
    ext1_line,
    h_p1,
    initialized_acm_line_bundles,
    is_acm_line,
    kunneth_h,
    serre_conditions,
)


def p1_by_monomials(d):
    """(h0, h1) of O(d) on P1 by counting monomials x^i y^j, i + j = d.

    Sections are monomials with i, j >= 0; H^1 is spanned by the Cech
    monomials with i, j <= -1.
    """
    h0 = sum(1 for i in range(0, d + 1) if d - i >= 0)
    h1 = sum(1 for i in range(d + 1, 0) if d - i <= -1)
    return h0, h1


def kunneth_oracle(i, d):
    total = 0
    for parts in product((0, 1), repeat=3):
        if sum(parts) == i:
            term = 1
            for p, di in zip(parts, d):
                term *= p1_by_monomials(di)[p]
            total += term
    return total


def test_p1_against_monomials():
    for d in range(-8, 9):
        assert (h_p1(0, d), h_p1(1, d)) == p1_by_monomials(d)
    with pytest.raises(ValueError):
        h_p1(2, 0)


def test_kunneth_against_monomial_oracle():
    for d in product(range(-4, 5), repeat=3):
        for i in range(4):
            assert kunneth_h(i, DivisorClass(*d)) == kunneth_oracle(i, d)
    assert kunneth_h(4, DivisorClass(0, 0, 0)) == 0


@pytest.mark.parametrize(
    "d, h1",
    [((0, 0, -2), 1), ((2, -2, 0), 3), ((1, -2, 1), 4)],
)
def test_quoted_h1_values(d, h1):
    assert kunneth_h(1, DivisorClass(*d)) == h1


def test_vector_and_euler():
    v = cohomology_vector(DivisorClass(0, 0, 0))
    assert v.as_tuple() == (1, 0, 0, 0) and v.euler == 1


def acm_by_wide_scan(d, reach=15):
    return all(
        kunneth_h(i, d + H * t) == 0 for t in range(-reach, reach + 1) for i in (1, 2)
    )


def test_window_covers_every_nonvanishing_twist():
    for d in product(range(-4, 5), repeat=3):
        d = DivisorClass(*d)
        assert is_acm_line(d) == acm_by_wide_scan(d)
        window = acm_window(d)
        for t in range(-20, 21):
            if t not in window:
                assert kunneth_h(1, d + H * t) == kunneth_h(2, d + H * t) == 0


def test_initialized_lines_are_orbits():
    found = initialized_acm_line_bundles()
    assert len(found) == 13
    assert initialized_acm_line_bundles(bound=8) == found
    bases = {(0, 0, 0), (1, 0, 0), (1, 1, 0), (2, 1, 0)}
    assert {tuple(sorted(d, reverse=True)) for d in found} == bases
    assert all(d.permuted(s) in found for d in found for s in S3)


def test_initialized_lines_by_definition():
    # h0(L) != 0, h0(L - h) == 0, aCM
    brute = {
        DivisorClass(*d)
        for d in product(range(-6, 7), repeat=3)
        if kunneth_h(0, DivisorClass(*d)) and not kunneth_h(0, DivisorClass(*d) - H)
        and acm_by_wide_scan(DivisorClass(*d))
    }
    assert brute == set(initialized_acm_line_bundles())


def test_ext_values():
    assert ext1_line(DivisorClass(0, 2, 1), DivisorClass(2, 0, 1)) == 3
    assert ext1_line(DivisorClass(0, 2, 1), DivisorClass(1, 0, 2)) == 4


@given(st.tuples(*[st.integers(-5, 5)] * 3))
def test_serre_conditions_are_h2_h1_of_dual(d):
    line = DivisorClass(*d)
    assert serre_conditions(line) == (kunneth_h(2, -line) == 0, kunneth_h(1, -line) == 0)
