from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _strategies import assert_valid_house, houses
from periodic_atlas import (
    JToggle,
    LStep,
    MOutOfRange,
    MStep,
    NStep,
    NoSecondSubBlock,
    OutOfAvenue,
    OutOfBlock,
    OutOfStreet,
    ShellAddress,
    TaxiTo,
    apply_move,
    house,
    houses_in_shell,
    step_so21,
    step_so3,
    step_so4,
    taxi,
    z_from_address,
)

unit_moves = st.one_of(
    st.sampled_from([MStep(+1), MStep(-1), JToggle(), LStep(+1), LStep(-1), NStep(+1), NStep(-1)])
)


def test_m_step_inside_block():
    assert step_so3(house(6, 3, 5, 1), MStep(+1)) == house(6, 3, 5, 3)


def test_m_step_past_edge_is_out_of_block():
    with pytest.raises(OutOfBlock):
        step_so3(house(1, 0, 1, 1), MStep(+1))
    with pytest.raises(OutOfBlock):
        step_so3(house(2, 1, 3, -3), MStep(-1))


def test_j_toggle_switches_sub_blocks():
    toggled = step_so3(house(2, 1, 1, -1), JToggle())
    assert toggled == house(2, 1, 3, -1)
    assert z_from_address(house(2, 1, 1, -1)) == 5
    assert z_from_address(toggled) == 8


def test_j_toggle_rejections():
    with pytest.raises(NoSecondSubBlock):
        step_so3(house(3, 0, 1, 1), JToggle())
    with pytest.raises(MOutOfRange):
        step_so3(house(2, 1, 3, 3), JToggle())


def test_l_step_clamps_j_up():
    assert step_so4(house(4, 1, 1, -1), LStep(+1)) == house(4, 2, 3, -1)


def test_l_step_preserves_valid_j():
    assert step_so4(house(4, 2, 3, -1), LStep(-1)) == house(4, 1, 3, -1)


def test_l_step_clamps_m_into_new_sub_block():
    # l: 2 -> 1 sends j from 5/2 to its nearest neighbour 3/2; m=5/2 must
    # clamp to the new edge.
    assert step_so4(house(4, 2, 5, 5), LStep(-1)) == house(4, 1, 3, 3)


def test_l_step_to_s_block_forces_j_half():
    assert step_so4(house(3, 1, 3, 3), LStep(-1)) == house(3, 0, 1, 1)


def test_l_step_out_of_street():
    with pytest.raises(OutOfStreet):
        step_so4(house(4, 0, 1, -1), LStep(-1))
    with pytest.raises(OutOfStreet):
        step_so4(house(4, 3, 7, 1), LStep(+1))


def test_n_step_along_avenue():
    assert step_so21(house(1, 0, 1, -1), NStep(+1)) == house(2, 0, 1, -1)
    assert z_from_address(step_so21(house(1, 0, 1, -1), NStep(+1))) == 3


def test_n_step_above_column_top():
    with pytest.raises(OutOfAvenue):
        step_so21(house(2, 1, 3, 3), NStep(-1))


def test_noble_gas_avenue_chain():
    addr = house(2, 1, 3, 3)
    numbers = [z_from_address(addr)]
    for _ in range(5):
        addr = step_so21(addr, NStep(+1))
        numbers.append(z_from_address(addr))
    assert numbers == [10, 18, 36, 54, 86, 118]


def test_avenue_reaches_exactly_the_column():
    start = house(3, 2, 3, -1)
    reached = {start}
    addr = start
    while addr.n > addr.l + 1:
        addr = step_so21(addr, NStep(-1))
        reached.add(addr)
    addr = start
    for _ in range(12):
        addr = step_so21(addr, NStep(+1))
        reached.add(addr)
    top = start.l + 1
    expected = {house(n, start.l, start.two_j, start.two_m) for n in range(top, start.n + 13)}
    assert reached == expected


@given(houses())
def test_m_step_reversibility(addr):
    try:
        up = step_so3(addr, MStep(+1))
    except OutOfBlock:
        return
    assert step_so3(up, MStep(-1)) == addr


@given(houses())
def test_n_step_reversibility(addr):
    up = step_so21(addr, NStep(+1))
    assert step_so21(up, NStep(-1)) == addr


@given(houses())
def test_j_toggle_is_an_involution_where_defined(addr):
    try:
        flipped = step_so3(addr, JToggle())
    except (NoSecondSubBlock, MOutOfRange):
        return
    assert step_so3(flipped, JToggle()) == addr


@given(houses(), st.lists(unit_moves, max_size=40))
def test_moves_never_build_invalid_addresses(addr, moves):
    current = addr
    for move in moves:
        try:
            current = apply_move(current, move)
        except (OutOfBlock, NoSecondSubBlock, MOutOfRange, OutOfStreet, OutOfAvenue):
            continue
        assert_valid_house(current)


def test_move_payloads_are_validated():
    with pytest.raises(ValueError):
        MStep(2)
    with pytest.raises(ValueError):
        NStep(0)


def test_taxi_adjacent_houses_is_one_m_step():
    route = taxi(house(1, 0, 1, -1), house(1, 0, 1, 1))
    assert route.steps == (MStep(+1),)
    assert route.stops == (house(1, 0, 1, -1), house(1, 0, 1, 1))


def test_taxi_long_jump_replays_validly():
    route = taxi(house(1, 0, 1, -1), house(4, 3, 7, 7))
    assert route.stops[0] == house(1, 0, 1, -1)
    assert route.stops[-1] == house(4, 3, 7, 7)
    current = route.start
    for step, stop in zip(route.steps, route.stops[1:]):
        current = apply_move(current, step)
        assert current == stop
        assert_valid_house(current)


def test_taxi_move_object_jumps_directly():
    target = house(5, 4, 9, -7)
    assert apply_move(house(1, 0, 1, 1), TaxiTo(target)) == target


@settings(max_examples=200)
@given(houses(max_n=9), houses(max_n=9))
def test_taxi_between_random_houses(a, b):
    route = taxi(a, b)
    assert route.stops[-1] == b
    current = a
    for step in route.steps:
        current = apply_move(current, step)
        assert_valid_house(current)
    assert current == b
    bound = 2 * (
        abs(a.n - b.n) + a.l + b.l + abs(a.two_m) + abs(b.two_m) + 4
    )
    assert len(route.steps) <= bound


def test_taxi_exhaustive_small_city():
    all_houses = [
        addr
        for n in range(1, 5)
        for l in range(0, n)
        for addr in houses_in_shell(ShellAddress(n, l))
    ]
    for a in all_houses:
        for b in all_houses:
            route = taxi(a, b)
            assert route.stops[0] == a and route.stops[-1] == b
            for stop in route.stops:
                assert_valid_house(stop)
