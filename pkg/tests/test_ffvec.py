import pytest
from hypothesis import given

from apcqc.ffvec import DimensionError, FpVector, dot, is_prime, wh, ws

from conftest import fp_vectors, vector_pairs


def V(p, *c):
    return FpVector(p, c)


@pytest.mark.parametrize(
    "a, b, expected",
    [
        (V(2, 0, 0, 0), V(2, 0, 0, 0), 0),
        (V(2, 1, 0, 1), V(2, 0, 1, 0), 3),
        (V(3, 1, 0), V(3, 2, 0), 1),
    ],
)
def test_ws(a, b, expected):
    assert ws(a, b) == expected


@pytest.mark.parametrize(
    "a, b, expected",
    [
        (V(5, 1, 4, 2), V(5, 1, 4, 2), 0),
        (V(2, 1, 0, 1), V(2, 0, 1, 1), 2),
        (V(3, 0, 0), V(3, 1, 2), 2),
    ],
)
def test_wh(a, b, expected):
    assert wh(a, b) == expected


def test_dot():
    assert dot(V(3, 0, 0), V(3, 2, 1)) == 0
    assert dot(V(3, 1, 2), V(3, 2, 2)) == 0
    assert dot(V(2, 1, 1), V(2, 1, 1)) == 0
    assert dot(V(7, 3, 5), V(7, 2, 2)) == 2


def test_mismatch_raises():
    with pytest.raises(DimensionError):
        ws(V(2, 1, 0), V(2, 1, 0, 0))
    with pytest.raises(DimensionError):
        wh(V(2, 1), V(3, 1))
    with pytest.raises(DimensionError):
        dot(V(3, 1), V(5, 1))


def test_construction_validation():
    with pytest.raises(ValueError):
        FpVector(4, (1, 2))  # composite modulus
    with pytest.raises(ValueError):
        FpVector(3, (3, 0))
    with pytest.raises(ValueError):
        FpVector(3, ())
    assert FpVector.of(3, [4, -1]).coords == (1, 2)


def test_one_based_view_and_text():
    v = V(3, 2, 0, 1)
    assert v.coord(1) == 2 and v.coord(3) == 1
    with pytest.raises(IndexError):
        v.coord(0)
    assert str(v) == "2,0,1"
    assert FpVector.parse(3, "2,0,1") == v
    assert FpVector.unit(3, 3, 2) == V(3, 0, 1, 0)
    assert v.support() == {1, 3}


def test_is_prime():
    assert [q for q in range(30) if is_prime(q)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@given(vector_pairs())
def test_ws_bounds_and_symmetry(pair):
    a, b = pair
    z = FpVector.zero(a.p, a.n)
    assert max(ws(a, z), ws(b, z)) <= ws(a, b) <= ws(a, z) + ws(b, z)
    assert ws(a, b) == ws(b, a)
    assert wh(a, b) == wh(b, a)
    assert wh(a, b) == ws(a - b, z)


@given(vector_pairs(count=3))
def test_wh_triangle(triple):
    a, b, c = triple
    assert wh(a, c) <= wh(a, b) + wh(b, c)


@given(vector_pairs())
def test_arithmetic_closed(pair):
    a, b = pair
    assert (a + b) - b == a
    assert a + (-a) == FpVector.zero(a.p, a.n)
    assert 2 * a == a + a
    assert dot(a, b) == dot(b, a)


@given(fp_vectors())
def test_weight_is_ws_with_zero(v):
    assert v.weight() == ws(v, FpVector.zero(v.p, v.n))
