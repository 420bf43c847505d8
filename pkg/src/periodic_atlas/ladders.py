"""Validated moves between houses: the table as a navigable graph.

Three bus lines move along one quantum number at a time, and a taxi
jumps anywhere while proving the jump decomposes into bus rides:

* inside a block (fixed n, l): step m by one, or toggle j between its
  two sub-block values;
* along a street (fixed n): step l by one, clamping j and m to the
  nearest values legal for the new block;
* along an avenue (fixed l, j, m): step n by one.

Every move either returns a valid `HouseAddress` or raises a typed
`LadderError`; no move can construct an invalid address.
"""

from __future__ import annotations

from dataclasses import dataclass

from .addresses import HouseAddress, ShellAddress


class LadderError(Exception):
    """A move was rejected; the address is unchanged."""


class OutOfBlock(LadderError):
    """m-step past the edge of the current sub-block."""


class NoSecondSubBlock(LadderError):
    """j-toggle in an s block, which has a single sub-block."""


class MOutOfRange(LadderError):
    """j-toggle would leave m outside the other sub-block's range."""


class OutOfStreet(LadderError):
    """l-step leaving the street's 0 <= l <= n-1 span."""


class OutOfAvenue(LadderError):
    """n-step above the top of the column (n < l+1)."""


def _unit(delta: int) -> None:
    if delta not in (-1, 1):
        raise ValueError(f"step must be +1 or -1, got {delta}")


@dataclass(frozen=True)
class MStep:
    """m -> m + delta within the current sub-block."""

    delta: int

    def __post_init__(self) -> None:
        _unit(self.delta)


@dataclass(frozen=True)
class JToggle:
    """Flip j between l - 1/2 and l + 1/2, keeping m."""


@dataclass(frozen=True)
class LStep:
    """l -> l + delta within the current street."""

    delta: int

    def __post_init__(self) -> None:
        _unit(self.delta)


@dataclass(frozen=True)
class NStep:
    """n -> n + delta within the current avenue."""

    delta: int

    def __post_init__(self) -> None:
        _unit(self.delta)


@dataclass(frozen=True)
class TaxiTo:
    """Direct jump to an arbitrary house."""

    target: HouseAddress


LadderMove = MStep | JToggle | LStep | NStep | TaxiTo


def step_so3(addr: HouseAddress, step: MStep | JToggle) -> HouseAddress:
    """Move inside the block: an m-step or a j-toggle."""
    if isinstance(step, MStep):
        new_two_m = addr.two_m + 2 * step.delta
        if abs(new_two_m) > addr.two_j:
            raise OutOfBlock(
                f"m-step from {addr} would leave the j={addr.two_j}/2 sub-block"
            )
        return HouseAddress(addr.shell, addr.two_j, new_two_m)
    l = addr.l
    if l == 0:
        raise NoSecondSubBlock(f"{addr} sits in an s block; there is no j to toggle to")
    new_two_j = 2 * l + 1 if addr.two_j == 2 * l - 1 else 2 * l - 1
    if abs(addr.two_m) > new_two_j:
        raise MOutOfRange(
            f"j-toggle from {addr} strands m={addr.two_m}/2 outside j={new_two_j}/2"
        )
    return HouseAddress(addr.shell, new_two_j, addr.two_m)


def step_so4(addr: HouseAddress, step: LStep) -> HouseAddress:
    """Move along the street: l-step, clamping j then m to the new block.

    j goes to the nearest of the new block's sub-block values (an l of 0
    forces j = 1/2), ties toward the smaller; m is then clamped into
    [-j, j].
    """
    new_l = addr.l + step.delta
    if not 0 <= new_l <= addr.n - 1:
        raise OutOfStreet(
            f"l-step from {addr} leaves street n={addr.n} (new l={new_l})"
        )
    candidates = (1,) if new_l == 0 else (2 * new_l - 1, 2 * new_l + 1)
    new_two_j = min(candidates, key=lambda c: (abs(c - addr.two_j), c))
    new_two_m = max(-new_two_j, min(new_two_j, addr.two_m))
    return HouseAddress(ShellAddress(addr.n, new_l), new_two_j, new_two_m)


def step_so21(addr: HouseAddress, step: NStep) -> HouseAddress:
    """Move along the avenue: n-step with (l, j, m) unchanged."""
    new_n = addr.n + step.delta
    if new_n < addr.l + 1:
        raise OutOfAvenue(
            f"n-step from {addr} goes above the top of its avenue (new n={new_n})"
        )
    return HouseAddress(ShellAddress(new_n, addr.l), addr.two_j, addr.two_m)


def apply_move(addr: HouseAddress, move: LadderMove) -> HouseAddress:
    """Apply any single move, raising the move's typed error on rejection."""
    if isinstance(move, (MStep, JToggle)):
        return step_so3(addr, move)
    if isinstance(move, LStep):
        return step_so4(addr, move)
    if isinstance(move, NStep):
        return step_so21(addr, move)
    if isinstance(move, TaxiTo):
        return move.target
    raise TypeError(f"not a ladder move: {move!r}")


@dataclass(frozen=True)
class TaxiRoute:
    """A taxi ride with its constructive bus-line decomposition.

    `stops` replays `steps` from `start`: stops[0] == start,
    stops[-1] == target, and stops[i+1] == apply_move(stops[i], steps[i]).
    """

    start: HouseAddress
    target: HouseAddress
    steps: tuple[MStep | JToggle | LStep | NStep, ...]
    stops: tuple[HouseAddress, ...]


def taxi(addr: HouseAddress, target: HouseAddress) -> TaxiRoute:
    """Plan a jump to `target` as a sequence of valid bus-line steps.

    Route: climb the avenue to a street tall enough for the l walk, cross
    the street to the target block, ride the avenue to the target street,
    then settle j and m inside the block.  Each step is applied while
    planning, so the returned route is its own validity proof.
    """
    steps: list[MStep | JToggle | LStep | NStep] = []
    stops: list[HouseAddress] = [addr]
    cur = addr

    def push(step: MStep | JToggle | LStep | NStep) -> None:
        nonlocal cur
        cur = apply_move(cur, step)
        steps.append(step)
        stops.append(cur)

    hub_n = max(addr.n, target.l + 1)
    while cur.n < hub_n:
        push(NStep(+1))
    while cur.l < target.l:
        push(LStep(+1))
    while cur.l > target.l:
        push(LStep(-1))
    while cur.n > target.n:
        push(NStep(-1))
    while cur.n < target.n:
        push(NStep(+1))
    if cur.two_j != target.two_j:
        if target.two_j < cur.two_j:
            # Toggling down needs |m| inside the smaller sub-block first.
            while abs(cur.two_m) > target.two_j:
                push(MStep(-1 if cur.two_m > 0 else +1))
        push(JToggle())
    while cur.two_m < target.two_m:
        push(MStep(+1))
    while cur.two_m > target.two_m:
        push(MStep(-1))

    assert cur == target
    return TaxiRoute(start=addr, target=target, steps=tuple(steps), stops=tuple(stops))
