import pytest
from hypothesis import given, strategies as st

from triquad.chow import CurveClass
from triquad.delpezzo import (
    HYPERPLANE,
    SurfaceClass,
    cremona,
    curve_classes,
    normal_chi,
    orbit_reduce,
    pushforward,
    s_degree,
    s_genus,
    s_intersect,
    schwarz_a_range,
)

coef = st.integers(-10, 10)
classes = st.builds(SurfaceClass, coef, coef, coef, coef)


def brute_classes(degree, genus, a_max=40):
    """Integer search: 3a - sum(b) = degree and a^2 - sum(b^2) - degree = 2g - 2."""
    out = set()
    for a in range(a_max + 1):
        total = 3 * a - degree
        square = a * a - degree - (2 * genus - 2)
        if total < 0 or square < 0:
            continue
        for b1 in range(total + 1):
            for b2 in range(total - b1 + 1):
                b3 = total - b1 - b2
                if b1 * b1 + b2 * b2 + b3 * b3 == square:
                    out.add(SurfaceClass(a, *sorted((b1, b2, b3), reverse=True)))
    return sorted(out)


@pytest.mark.parametrize("degree, genus", [(1, 0), (2, 0), (3, 0), (5, 0), (7, 0), (8, 1), (6, 1), (9, 2)])
def test_curve_classes_against_wide_search(degree, genus):
    assert curve_classes(degree, genus) == brute_classes(degree, genus)


def test_octic_and_septic():
    octics = curve_classes(8, 1)
    assert octics == [SurfaceClass(3, 1, 0, 0), SurfaceClass(4, 2, 2, 0), SurfaceClass(5, 3, 2, 2)]
    assert cremona(octics[2]) == octics[0]
    assert orbit_reduce(octics) == octics[:2]
    assert [pushforward(c) for c in octics[:2]] == [CurveClass(2, 3, 3), CurveClass(2, 2, 4)]
    septics = curve_classes(7, 0)
    for c in (SurfaceClass(3, 0, 0, 2), SurfaceClass(4, 1, 1, 3)):
        assert c.canonical() in septics
        assert pushforward(c) == CurveClass(3, 3, 1)


def test_normal_chi():
    assert normal_chi(SurfaceClass(3, 1, 0, 0)) == (9, 16)
    assert normal_chi(SurfaceClass(3, 0, 0, 2)) == (7, 14)
    with pytest.raises(ValueError):
        normal_chi(SurfaceClass(4, 0, 0, 0))


@given(classes, classes)
def test_cremona_is_isometric_involution(x, y):
    assert cremona(cremona(x)) == x
    assert s_intersect(cremona(x), cremona(y)) == s_intersect(x, y)
    assert cremona(HYPERPLANE) == HYPERPLANE


@given(classes)
def test_pushforward_degree(c):
    assert pushforward(c).total() == s_degree(c)


def test_schwarz_range_is_sound():
    for degree in range(1, 15):
        for genus in range(0, 4):
            r = schwarz_a_range(degree, genus)
            for c in brute_classes(degree, genus, a_max=30):
                assert c.a in r


def test_genus_parity_and_bad_degree():
    assert s_genus(SurfaceClass(1, 0, 0, 0)) == 0
    with pytest.raises(ValueError):
        curve_classes(0, 0)
    assert str(SurfaceClass(3, 1, 0, 0)) == "(3;1,0,0)"
