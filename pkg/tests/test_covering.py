from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tightlift.covering import (CoveringScene, Propagation, Verdict, cosecant_sum,
                                cosecant_sum_float, d3_lift, degree_propagation,
                                lift_branch_framing, spin_lift, verdict_elliptic,
                                verdict_minimal_L)
from tightlift.d3 import SpinCClass
from tightlift.errors import InvalidScene, NotCharacteristicUpstairs, NotDivisible
from tightlift.framedlink import FramedLinkPresentation as P

from conftest import CHAIN, UPSTAIRS

F = Fraction


def trefoil_scene(**kw):
    return CoveringScene(2, P([[-8, 0], [0, -1]]), P(UPSTAIRS), (0,),
                         {0: (0,), 1: (1, 2)}, **kw)


@pytest.mark.parametrize("n, m, out", [(-8, 2, -4), (0, 5, 0), (9, 3, 3)])
def test_lift_branch_framing(n, m, out):
    assert lift_branch_framing(n, m) == out


def test_lift_branch_framing_not_divisible():
    with pytest.raises(NotDivisible):
        lift_branch_framing(-8, 3)


@pytest.mark.parametrize("m, val", [(1, 0), (2, 1), (5, 8)])
def test_cosecant_sum_examples(m, val):
    assert cosecant_sum(m) == val


@pytest.mark.parametrize("m", range(2, 51))
def test_cosecant_sum_float(m):
    assert abs(float(cosecant_sum(m)) - cosecant_sum_float(m)) < 1e-9


def test_scene_signatures():
    s = trefoil_scene()
    assert (s.sigma_down, s.sigma_up, s.s_dot_s) == (-2, -1, -4)


def test_d3_lift_examples():
    assert d3_lift(F(-1, 4), trefoil_scene()) == F(1, 4)
    trivial = CoveringScene(1, P([[-2]]), P([[-2]]))
    assert d3_lift(F(-1, 4), trivial) == F(-1, 4)
    empty = CoveringScene(2, P([]), P([]), (), {}, s_dot_s=0, sigma_up=0, sigma_down=0)
    assert d3_lift(F(-1, 2), empty) == -1


@given(st.fractions(max_denominator=50), st.integers(-5, 5))
def test_d3_lift_identity_for_trivial_cover(x, sigma):
    s = CoveringScene(1, P([]), P([]), sigma_up=sigma, sigma_down=sigma)
    assert d3_lift(x, s) == x


def test_scene_validation():
    with pytest.raises(NotDivisible):
        CoveringScene(3, P([[-8]]), P([[-8]]), (0,), {0: (0,)})
    with pytest.raises(InvalidScene):
        CoveringScene(2, P([[-8, 0], [0, -1]]), P(UPSTAIRS), (0,), {0: (0,), 1: (1,)})
    with pytest.raises(InvalidScene):
        CoveringScene(2, P([[-6, 0], [0, -1]]), P(UPSTAIRS), (0,), {0: (0,), 1: (1, 2)})
    with pytest.raises(InvalidScene):
        trefoil_scene(h1_order_up=13)
    assert trefoil_scene(h1_order_up=12).m == 2


def test_spin_lift_trefoil():
    assert spin_lift(trefoil_scene(), (0, 1)) == (1, 1, 1)


def test_spin_lift_rejects_inconsistent_upstairs():
    bad = CoveringScene(2, P([[-8, 0], [0, -1]]), P([[-4, 1, 0], [1, -1, 0], [0, 0, -1]]),
                        (0,), {0: (0,), 1: (1, 2)})
    with pytest.raises(NotCharacteristicUpstairs):
        spin_lift(bad, (0, 1))


@pytest.mark.parametrize("bit", [0, 1])
@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_branch_rule(bit, m):
    # a single branch handle with framing divisible by m
    down = P([[-2 * m]])
    up = P([[-2]])
    lifted = spin_lift(CoveringScene(m, down, up, (0,), {0: (0,)}), (bit,))
    assert lifted == ((1,) if bit or m % 2 == 0 else (0,))


def test_free_lifts_copy_bits():
    down = P([[-1]])
    up = P([[-1, 0, 0], [0, -1, 0], [0, 0, -1]])
    assert spin_lift(CoveringScene(3, down, up, (), {0: (0, 1, 2)}), (1,)) == (1, 1, 1)


KNOWN = [("left", F(-1, 12), SpinCClass((0, 0, 0), (0, 1, 0))),
         ("middle", F(1, 4), SpinCClass((0, 0, 0), (0, 0, 0))),
         ("right", F(-1, 12), SpinCClass((0, 0, 0), (0, -1, 0)))]


def test_verdict_elliptic():
    up = SpinCClass((0, 0, 0), (0, 0, 0))
    v = verdict_elliptic(F(1, 4), up, KNOWN, P(CHAIN))
    assert v.verdict is Verdict.TIGHT and v.matched == "middle"
    assert str(v) == "Tight (matched: middle)"
    v = verdict_elliptic(0, up, KNOWN, P(CHAIN))
    assert v.verdict is Verdict.OVERTWISTED
    assert verdict_elliptic(0, up, [], complete=False).verdict is Verdict.INCONCLUSIVE
    assert verdict_elliptic(0, up, KNOWN, P(CHAIN), complete=False).verdict is \
        Verdict.INCONCLUSIVE


def test_verdict_elliptic_needs_spinc_match():
    # right d3 but the other Spin structure's class
    other = SpinCClass((1, 0, 1), (0, 0, 0))
    v = verdict_elliptic(F(1, 4), other, KNOWN, P(CHAIN))
    assert v.verdict is Verdict.OVERTWISTED


@pytest.mark.parametrize("d3, d, verdict", [
    (F(1, 4), F(3, 4), Verdict.TIGHT),
    (F(-1, 12), F(3, 4), Verdict.OVERTWISTED),
    (F(-1, 2), 0, Verdict.TIGHT),
])
def test_verdict_minimal_L(d3, d, verdict):
    assert verdict_minimal_L(d3, d).verdict is verdict


@given(st.fractions())
def test_verdict_minimal_L_tautology(x):
    assert verdict_minimal_L(x, x + F(1, 2)).verdict is Verdict.TIGHT


@pytest.mark.parametrize("deg, bound, out", [
    (F(3, 4), F(3, 4), Propagation.UP_NONVANISHING_FORCED),
    (F(5, 12), F(3, 4), Propagation.DOWNSTAIRS_VANISHES),
    (F(7, 4), F(3, 4), Propagation.NO_CONCLUSION),
])
def test_degree_propagation(deg, bound, out):
    assert degree_propagation(deg, bound) is out
