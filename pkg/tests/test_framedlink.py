import itertools

import pytest
from hypothesis import given, settings, strategies as st

from tightlift.errors import (MoveError, NotCharacteristic, NotIsolated, NotUnitFramed,
                              ParityViolation, ParseError)
from tightlift.framedlink import (BlowDownIsolated, BlowUp, Contract, FramedLinkPresentation,
                                  HandleSlide, apply_script, blow_down_isolated, blow_up,
                                  contract, enumerate_spin, format_script, handle_slide,
                                  is_characteristic, parse_move, parse_script)
from tightlift.rational import det, signature

from conftest import CHAIN, UPSTAIRS, presentations_with_spin, sym_matrices

P = FramedLinkPresentation


def brute_spin(L):
    n = len(L)
    return [c for c in itertools.product((0, 1), repeat=n) if is_characteristic(L, c)]


@pytest.mark.parametrize("L, expected", [
    (((-8,),), [(0,), (1,)]),
    (((-1,),), [(1,)]),
    (CHAIN, [(0, 0, 0), (1, 0, 1)]),
    ((), [()]),
])
def test_enumerate_spin_examples(L, expected):
    assert enumerate_spin(P(L)) == expected


@settings(max_examples=200, deadline=None)
@given(sym_matrices(max_n=5, bound=5))
def test_enumerate_spin_matches_brute_force(L):
    got = enumerate_spin(P(L))
    assert got == brute_spin(L)
    assert len(got) & (len(got) - 1) == 0


def test_blow_up_isolated():
    q, s = blow_up(P([[-8]]), (0,), -1, (0,))
    assert q.L == ((-8, 0), (0, -1)) and s == (0, 1)
    assert q.fillable


def test_blow_up_linked():
    q, s = blow_up(P([[-8]]), (0,), -1, (1,))
    assert q.L == ((-9, 1), (1, -1)) and s == (0, 1)
    assert det(q.L) == 8 and signature(q.L) == -2


def test_positive_blow_up_trips_fillable():
    q, _ = blow_up(P([[-8]]), None, 1)
    assert not q.fillable
    r, _ = blow_down_isolated(P([[-8, 0], [0, -1]]), (0, 1), 1)
    assert r.fillable and r.L == ((-8,),)


def test_slide_example():
    q, s = handle_slide(P([[-1, 0], [0, -1]]), (1, 1), 0, 1, 1)
    assert q.L == ((-2, -1), (-1, -1)) and s == (1, 0)


def test_blow_down_errors():
    with pytest.raises(NotIsolated):
        blow_down_isolated(P([[-1, 1], [1, -2]]), None, 0)
    with pytest.raises(NotUnitFramed):
        blow_down_isolated(P([[-2]]), None, 0)
    with pytest.raises(NotCharacteristic):
        blow_down_isolated(P([[-1]]), (0,), 0)


def test_contract():
    q = contract(P([[-1, 1, 0], [1, -3, 1], [0, 1, -2]]), 0)
    assert q.L == ((-2, 1), (1, -2)) and q.rot is None
    with pytest.raises(NotUnitFramed):
        contract(P(CHAIN), 1)


def test_moves_drop_rot():
    p = P([[-2]], rot=(0,))
    assert blow_up(p, None, -1)[0].rot is None


def test_parity_checked_on_construction():
    with pytest.raises(ParityViolation):
        P([[-8]], rot=(1,))


L12_7_SCRIPT = [
    "blowup(-1; 0,0,0)", "slide(1,2,-1)", "slide(3,1,+1)", "slide(4,3,-1)", "slide(2,3,+1)",
    "slide(3,4,+1)", "slide(3,4,+1)", "slide(1,2,-1)", "slide(2,4,-1)", "blowdown(4)",
]


def test_l12_7_script():
    q, s = apply_script(P(UPSTAIRS), (1, 1, 1), parse_script(L12_7_SCRIPT))
    assert q.L == CHAIN and s == (0, 0, 0)
    # the other Spin structure upstairs goes to the other one on the chain
    q, s = apply_script(P(UPSTAIRS), (0, 1, 1), parse_script(L12_7_SCRIPT))
    assert s == (1, 0, 1)


def test_script_error_position():
    with pytest.raises(MoveError) as err:
        apply_script(P([[-2]]), None, [BlowUp(-1, (0,)), BlowDownIsolated(0)])
    assert err.value.position == 1
    assert isinstance(err.value.cause, NotUnitFramed)
    assert "move 2" in str(err.value)


@pytest.mark.parametrize("text, move", [
    ("blowup(-1; 0,1)", BlowUp(-1, (0, 1))),
    ("blowup(+1;)", BlowUp(1, ())),
    ("slide(1,2,-1)", HandleSlide(0, 1, -1)),
    ("slide(2, 1)", HandleSlide(1, 0, 1)),
    ("blowdown(3)", BlowDownIsolated(2)),
    ("contract(1)", Contract(0)),
])
def test_parse_move(text, move):
    assert parse_move(text) == move
    assert parse_move(str(move)) == move


def test_parse_errors():
    for bad in ("twist(1)", "slide(1)", "blowup(; 1)", "blowdown(a)"):
        with pytest.raises(ParseError):
            parse_move(bad)
    assert format_script(parse_script(["slide(1,2); blowdown(1)"])) == \
        ["slide(1,2,+1)", "blowdown(1)"]


@settings(max_examples=500, deadline=None)
@given(presentations_with_spin(max_n=5, bound=5), st.data())
def test_slide_invariants(ps, data):
    p, spin = ps
    if p.n < 2:
        return
    i, j = data.draw(st.permutations(range(p.n)))[:2]
    sign = data.draw(st.sampled_from((1, -1)))
    q, s = handle_slide(p, spin, i, j, sign)
    assert abs(det(q.L)) == abs(det(p.L))
    assert signature(q.L) == signature(p.L)
    assert is_characteristic(q.L, s)
    back, s2 = handle_slide(q, s, i, j, -sign)
    assert back.L == p.L and s2 == spin


@settings(max_examples=300, deadline=None)
@given(presentations_with_spin(max_n=4, bound=4), st.data())
def test_blow_up_down_round_trip(ps, data):
    p, spin = ps
    sign = data.draw(st.sampled_from((1, -1)))
    q, s = blow_up(p, spin, sign)
    assert det(q.L) == sign * det(p.L)
    assert signature(q.L) == signature(p.L) + sign
    r, s2 = blow_down_isolated(q, s, p.n)
    assert r.L == p.L and s2 == spin


@settings(max_examples=200, deadline=None)
@given(presentations_with_spin(max_n=4, bound=4), st.data())
def test_linked_blow_up_matches_contract(ps, data):
    p, spin = ps
    sign = data.draw(st.sampled_from((1, -1)))
    l = data.draw(st.lists(st.integers(-2, 2), min_size=p.n, max_size=p.n))
    q, s = blow_up(p, spin, sign, l)
    assert is_characteristic(q.L, s)
    assert abs(det(q.L)) == abs(det(p.L))
    assert contract(q, p.n).L == p.L
