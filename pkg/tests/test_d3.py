from fractions import Fraction

import pytest
from hypothesis import given, settings

from tightlift.d3 import (SpinCClass, c_squared, contact_class_degree, d3_legendrian,
                          spinc_difference, spinc_equal)
from tightlift.errors import MissingRotation, NotCharacteristic, SingularMatrix
from tightlift.framedlink import FramedLinkPresentation as P, enumerate_spin
from tightlift.rational import det, solve_rational

from conftest import CHAIN, brute_in_lattice, legendrian_presentations

F = Fraction


@pytest.mark.parametrize("L, rot, value", [
    ((), (), F(-1, 2)),
    (((-8,),), (0,), F(-1, 4)),
    (CHAIN, (0, 0, 0), F(1, 4)),
    (CHAIN, (0, 2, 0), F(-1, 12)),
    (CHAIN, (0, -2, 0), F(-1, 12)),
])
def test_d3_golden(L, rot, value):
    assert d3_legendrian(P(L, rot)) == value


def test_d3_errors():
    with pytest.raises(MissingRotation):
        d3_legendrian(P([[-8]]))
    with pytest.raises(SingularMatrix):
        d3_legendrian(P([[0]], (0,)))


def test_c_squared():
    assert c_squared((1,), P([[-8]])) == F(-1, 8)
    assert c_squared((0, 2, 0), P(CHAIN)) == F(-4, 3)
    x = solve_rational(CHAIN, (0, 2, 0))
    assert c_squared((0, 2, 0), P(CHAIN)) == 2 * x[1]
    assert c_squared((0, 0), P([[-2, 1], [1, -2]])) == 0


@pytest.mark.parametrize("d3, deg", [(F(-1, 2), 0), (F(1, 4), F(3, 4)), (F(-1, 12), F(5, 12))])
def test_contact_class_degree(d3, deg):
    assert contact_class_degree(d3) == deg


def test_spinc_difference_examples():
    assert spinc_difference(P([[-8]], (0,)), (0,)).delta == (0,)
    assert spinc_difference(P([[-8]], (0,)), (1,)).delta == (-4,)
    assert spinc_difference(P(CHAIN, (0, 0, 0)), (0, 0, 0)).delta == (0, 0, 0)
    with pytest.raises(NotCharacteristic):
        spinc_difference(P(CHAIN, (0, 0, 0)), (1, 0, 0))
    with pytest.raises(MissingRotation):
        spinc_difference(P(CHAIN), (0, 0, 0))


def test_spinc_equal_rank_one():
    p = P([[-8]])
    a = SpinCClass((0,), (0,))
    assert spinc_equal(p, a, a)
    assert spinc_equal(p, a, SpinCClass((0,), (8,)))
    assert not spinc_equal(p, a, SpinCClass((0,), (1,)))


def test_spin_structures_on_chain_give_distinct_spinc():
    p = P(CHAIN)
    a = SpinCClass((0, 0, 0), (0, 0, 0))
    b = SpinCClass((1, 0, 1), (0, 0, 0))
    assert not spinc_equal(p, a, b)
    # the rebasing shift is (-1, 1, -1), which is not in L Z^3
    assert not brute_in_lattice(CHAIN, (-1, 1, -1))
    assert brute_in_lattice(CHAIN, (-2, 2, -2))


def test_middle_chain_class_is_the_spin_one():
    left, mid, right = (spinc_difference(P(CHAIN, r), (0, 0, 0))
                        for r in ((0, 2, 0), (0, 0, 0), (0, -2, 0)))
    z = SpinCClass((0, 0, 0), (0, 0, 0))
    assert spinc_equal(P(CHAIN), mid, z)
    assert not spinc_equal(P(CHAIN), left, z)
    assert not spinc_equal(P(CHAIN), right, z)
    assert not spinc_equal(P(CHAIN), left, right)


@settings(max_examples=150, deadline=None)
@given(legendrian_presentations(max_n=4, bound=5))
def test_d3_denominator_and_spinc_integrality(p):
    if det(p.L) == 0:
        return
    d3 = d3_legendrian(p)
    assert (4 * det(p.L)) % d3.denominator == 0
    classes = [spinc_difference(p, s) for s in enumerate_spin(p)]
    # the induced Spin^C structure of s plus delta_s is the same class for every s
    for a in classes:
        for b in classes:
            assert spinc_equal(p, a, b)


@settings(max_examples=80, deadline=None)
@given(legendrian_presentations(max_n=3, bound=4))
def test_spinc_equal_is_an_equivalence(p):
    if det(p.L) == 0:
        return
    spins = enumerate_spin(p)
    vals = [SpinCClass(s, d) for s in spins for d in ((0,) * p.n, (1,) + (0,) * (p.n - 1))]
    for a in vals:
        assert spinc_equal(p, a, a)
        for b in vals:
            ab = spinc_equal(p, a, b)
            assert ab == spinc_equal(p, b, a)
            for c in vals:
                if ab and spinc_equal(p, b, c):
                    assert spinc_equal(p, a, c)
