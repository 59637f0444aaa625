from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hkmod.errors import InputError
from hkmod.lattice import (
    IntLattice,
    LatVec,
    content,
    discriminant,
    divisibility,
    is_primitive,
    lattice,
    lattice_from_json,
    latvec_from_json,
    norm,
    pair,
    primitive_part,
    saturation_check,
    vec,
)

HYP = lattice(((2, 3), (3, 0)))


def test_vec_infers_integrality():
    assert vec((1, 2)).integral
    assert not vec((Fraction(1, 2), 1)).integral


def test_latvec_arithmetic():
    u, v = vec((1, 2)), vec((3, -1))
    assert u + v == vec((4, 1))
    assert u - v == vec((-2, 3))
    assert 3 * u == vec((3, 6))
    assert -u == vec((-1, -2))
    assert len(u) == 2
    assert not u.is_zero and vec((0, 0)).is_zero


def test_latvec_from_json_rationals():
    v = latvec_from_json([1, "3/2"])
    assert v.coords == (Fraction(1), Fraction(3, 2))
    assert not v.integral
    with pytest.raises(InputError):
        latvec_from_json([1, 2], rank=3)
    with pytest.raises(InputError):
        latvec_from_json("nope")


def test_lattice_validation():
    with pytest.raises(InputError):
        lattice(((1, 2), (3, 4)))  # not symmetric
    with pytest.raises(InputError):
        lattice(((1, 2),))  # not square
    with pytest.raises(InputError):
        lattice(((Fraction(1, 2),),))  # not integral
    with pytest.raises(InputError):
        lattice(((0, 0), (0, 0)), nondegenerate=True)
    lat = lattice_from_json({"gram": [[2, 3], [3, 0]], "label": "hyp"})
    assert lat.gram == ((2, 3), (3, 0)) and lat.label == "hyp"
    with pytest.raises(InputError):
        lattice_from_json({"nope": 1})


def test_pair_and_norm():
    assert pair(HYP, vec((1, 0)), vec((0, 1))) == 3
    assert norm(HYP, vec((1, 0))) == 2
    assert norm(HYP, vec((0, 1))) == 0
    assert norm(HYP, vec((1, -1))) == 2 - 6
    assert pair(HYP, vec((Fraction(1, 2), 0)), vec((1, 0))) == 1
    with pytest.raises(InputError):
        pair(HYP, vec((1, 0, 0)), vec((0, 1)))


def test_divisibility_examples():
    assert divisibility(HYP, vec((0, 1))) == 3
    assert divisibility(HYP, vec((1, 0))) == 1
    assert divisibility(HYP, vec((0, 0))) == 0
    with pytest.raises(InputError):
        divisibility(HYP, vec((Fraction(1, 2), 0)))


def test_content_and_primitive():
    assert content(vec((4, 6))) == 2
    assert content(vec((0, 0))) == 0
    assert primitive_part(HYP, vec((4, 6))) == vec((2, 3))
    assert is_primitive(HYP, vec((2, 3)))
    assert not is_primitive(HYP, vec((2, 4)))
    with pytest.raises(InputError):
        primitive_part(HYP, vec((0, 0)))
    with pytest.raises(InputError):
        is_primitive(HYP, vec((0, 0)))


def test_saturation():
    lat = lattice(((2, 1, 0), (1, 0, 0), (0, 0, -2)))
    assert saturation_check(lat, vec((1, 0, 0)), vec((0, 1, 0)))
    assert not saturation_check(lat, vec((2, 0, 0)), vec((0, 2, 0)))
    with pytest.raises(InputError):
        saturation_check(lat, vec((1, 2, 0)), vec((2, 4, 0)))


def test_discriminant():
    assert discriminant(HYP) == -9
    assert discriminant(lattice(((2, 1), (1, 0)))) == -1
    assert discriminant(lattice(((0, 1), (1, 0)))) == -1  # zero pivot swap
    assert discriminant(lattice(((2, 0, 0), (0, 3, 0), (0, 0, -2)))) == -12
    assert discriminant(lattice(((1, 1), (1, 1)))) == 0
    for m0 in range(4):
        for d in range(1, 5):
            assert discriminant(lattice(((2 * m0, d), (d, 0)))) == -d * d


def test_basis_vector_and_json_roundtrip():
    e0 = HYP.basis_vector(0)
    assert e0 == vec((1, 0))
    data = HYP.to_json_dict()
    assert lattice_from_json(data) == HYP
    v = vec((1, Fraction(1, 2)))
    assert latvec_from_json(v.to_json_dict()) == v


coords = st.lists(st.integers(-30, 30), min_size=2, max_size=4)


@given(st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6), coords, coords, coords)
def test_pair_is_symmetric_and_bilinear(a, b, c, xs, ys, zs):
    n = min(len(xs), len(ys), len(zs))
    gram = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            gram[i][j] = gram[j][i] = (a * i + b * j + c) % 7 - 3
    lat = lattice(tuple(tuple(r) for r in gram))
    u, v, w = vec(xs[:n]), vec(ys[:n]), vec(zs[:n])
    assert pair(lat, u, v) == pair(lat, v, u)
    assert pair(lat, u + v, w) == pair(lat, u, w) + pair(lat, v, w)
    assert pair(lat, a * u, w) == a * pair(lat, u, w)


@given(coords)
def test_primitive_part_has_content_one(xs):
    v = vec(xs)
    lat = lattice(tuple(tuple(2 if i == j else 0 for j in range(len(xs))) for i in range(len(xs))))
    if v.is_zero:
        with pytest.raises(InputError):
            primitive_part(lat, v)
    else:
        p = primitive_part(lat, v)
        assert content(p) == 1
        assert content(v) * p == v
