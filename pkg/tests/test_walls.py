from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from hkmod.errors import InputError
from hkmod.lattice import lattice, pair, vec
from hkmod.walls import (
    EllipticNS,
    as_elliptic,
    elliptic_from_json,
    enumerate_wall_classes,
    has_minus_two_class,
    is_suitable,
    min_negative_norm,
    no_wall_threshold,
    same_chamber,
    suitability_for,
    wall_ray,
)


def wall_tuples(ns, a):
    return [
        (w.lam.int_coords(), w.norm, w.pair_h, w.pair_f)
        for w in enumerate_wall_classes(ns, a)
    ]


def test_elliptic_ns_validation():
    ns = EllipticNS(4, 1)
    assert ns.lattice.gram == ((Fraction(4), Fraction(1)), (Fraction(1), Fraction(0)))
    assert ns.q(ns.h) == 4
    assert ns.q(ns.h, ns.f) == 1
    with pytest.raises(InputError):
        EllipticNS(4, 0)
    with pytest.raises(InputError):
        EllipticNS(4, -2)
    with pytest.raises(InputError):
        EllipticNS(4.0, 1)
    assert elliptic_from_json({"e": 2, "d": 3}) == EllipticNS(2, 3)
    with pytest.raises(InputError):
        elliptic_from_json({"e": 2})


def test_as_elliptic_coercion():
    assert as_elliptic(EllipticNS(2, 3)) == EllipticNS(2, 3)
    assert as_elliptic(lattice(((4, 1), (1, 0)))) == EllipticNS(4, 1)
    with pytest.raises(InputError):
        as_elliptic(lattice(((2, 1), (1, 2))))
    with pytest.raises(InputError):
        as_elliptic(lattice(((2, -1), (-1, 0))))
    with pytest.raises(InputError):
        as_elliptic("ns")


def test_enumeration_frozen_small():
    assert wall_tuples(EllipticNS(2, 3), 6) == [
        ((1, -1), -4, -1, 3),
        ((2, -1), -4, 1, 6),
    ]
    assert wall_tuples(EllipticNS(6, 5), 20) == [
        ((1, -2), -14, -4, 5),
        ((1, -1), -4, 1, 5),
        ((3, -2), -6, 8, 15),
        ((8, -5), -16, 23, 40),
    ]
    assert wall_tuples(EllipticNS(8, 3), 10) == [
        ((1, -3), -10, -1, 3),
        ((1, -2), -4, 2, 3),
        ((2, -3), -4, 7, 6),
        ((5, -7), -10, 19, 15),
    ]


def test_enumeration_frozen_e4_d1():
    assert wall_tuples(EllipticNS(4, 1), 12) == [
        ((1, -8), -12, -4, 1),
        ((1, -7), -10, -3, 1),
        ((1, -6), -8, -2, 1),
        ((1, -5), -6, -1, 1),
        ((1, -4), -4, 0, 1),
        ((1, -3), -2, 1, 1),
        ((2, -7), -12, 1, 2),
        ((2, -5), -4, 3, 2),
        ((3, -8), -12, 4, 3),
        ((3, -7), -6, 5, 3),
        ((4, -9), -8, 7, 4),
        ((5, -11), -10, 9, 5),
        ((6, -13), -12, 11, 6),
    ]


def test_enumeration_count_and_rational_level():
    walls = enumerate_wall_classes(EllipticNS(2, 1), 40)
    assert len(walls) == 53
    assert all(-40 <= w.norm < 0 for w in walls)
    assert wall_tuples(EllipticNS(2, 1), Fraction(7, 2)) == [((1, -2), -2, 0, 1)]
    with pytest.raises(InputError):
        enumerate_wall_classes(EllipticNS(2, 1), 0)
    with pytest.raises(InputError):
        enumerate_wall_classes(EllipticNS(2, 1), Fraction(-1, 2))


def test_min_negative_norm_frozen():
    cases = {
        (2, 3): 4,
        (4, 31): 30,
        (2, 1): 2,
        (4, 1): 2,
        (6, 5): 4,
        (20, 50): 80,
        (2, 50): 98,
        (8, 3): 4,
    }
    for (e, d), expected in cases.items():
        ns = EllipticNS(e, d)
        assert min_negative_norm(ns) == expected, (e, d)
        bound = -((-2 * d) // (1 + e))
        assert expected >= bound
    assert has_minus_two_class(EllipticNS(4, 1))
    assert not has_minus_two_class(EllipticNS(2, 3))
    with pytest.raises(InputError):
        min_negative_norm(EllipticNS(-2, 1))


def test_no_wall_threshold_frozen():
    assert no_wall_threshold(4, 12) == 31
    assert no_wall_threshold(2, 6) == 10
    assert no_wall_threshold(2, Fraction(1, 2)) == 1
    assert no_wall_threshold(20, 40) == 421
    with pytest.raises(InputError):
        no_wall_threshold(2, 0)
    with pytest.raises(InputError):
        no_wall_threshold(-2, 5)


def test_suitability_reports():
    ns = EllipticNS(4, 1)
    rep = is_suitable(ns, 12)
    assert not rep.suitable
    assert not rep.generic
    assert [w.lam.int_coords() for w in rep.witnesses] == [
        (1, -8),
        (1, -7),
        (1, -6),
        (1, -5),
        (1, -4),
    ]
    assert all(w.pair_f > 0 >= w.pair_h for w in rep.witnesses)
    # same lattice, polarization moved deep into the cone: every wall on one side
    rep2 = suitability_for(ns, 12, vec((1, 5)))
    assert rep2.suitable and rep2.generic and rep2.witnesses == ()
    # wall set is empty, so trivially suitable and generic
    rep3 = is_suitable(EllipticNS(4, 31), 12)
    assert rep3.suitable and rep3.generic and rep3.witnesses == ()
    with pytest.raises(InputError):
        suitability_for(ns, 12, vec((0, 1)))


def test_same_chamber():
    ns = EllipticNS(4, 1)
    assert same_chamber(ns, 2, vec((1, 0)), vec((1, 1)))
    assert not same_chamber(ns, 2, vec((2, -3)), vec((1, 0)))
    # (1, 0) is orthogonal to the wall (1, -4) at level 12
    assert not same_chamber(ns, 12, vec((1, 0)), vec((1, 0)))
    with pytest.raises(InputError):
        same_chamber(ns, 2, vec((0, 1)), vec((1, 0)))
    with pytest.raises(InputError):
        same_chamber(ns, 2, vec((1, 0)), vec((-1, 1)))


def test_wall_ray():
    ns = EllipticNS(2, 3)
    assert wall_ray(ns, vec((1, -1))).int_coords() == (3, 1)
    assert wall_ray(ns, vec((-1, 1))).int_coords() == (3, 1)
    assert wall_ray(ns, enumerate_wall_classes(ns, 6)[0]).int_coords() == (3, 1)
    with pytest.raises(InputError):
        wall_ray(ns, vec((1, 0)))
    with pytest.raises(InputError):
        wall_ray(ns, vec((Fraction(1, 2), -1)))
    with pytest.raises(InputError):
        wall_ray(ns, vec((1, -1, 0)))


def brute_walls(e, d, a):
    out = []
    for x in range(1, a + 1):
        lo = (-a - e * x) // (2 * d) - 1
        hi = (-e * x) // (2 * d) + 1
        for y in range(lo, hi + 1):
            q = x * (e * x + 2 * d * y)
            if -a <= q < 0 and gcd(x, abs(y)) == 1:
                out.append((x, y, q))
    return out


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 6), st.integers(1, 8), st.integers(1, 25))
def test_enumeration_matches_brute_scan(half_e, d, a):
    e = 2 * half_e
    ns = EllipticNS(e, d)
    got = [(w.lam.int_coords()[0], w.lam.int_coords()[1], w.norm)
           for w in enumerate_wall_classes(ns, a)]
    assert got == brute_walls(e, d, a)
    lat = ns.lattice
    for w in enumerate_wall_classes(ns, a):
        assert w.pair_h == pair(lat, w.lam, ns.h)
        assert w.pair_f == pair(lat, w.lam, ns.f)
        assert w.pair_f > 0
        ray = wall_ray(ns, w)
        assert pair(lat, ray, w.lam) == 0
        assert ns.q(ray) > 0


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10), st.integers(1, 30))
def test_min_norm_bound(half_e, d):
    e = 2 * half_e
    ns = EllipticNS(e, d)
    value = min_negative_norm(ns)
    assert value >= -((-2 * d) // (1 + e))
    # the reported minimum is achieved by some primitive class
    walls = enumerate_wall_classes(ns, value)
    assert walls and min(-w.norm for w in walls) == value
