"""Chemical classification on top of the address grid.

Columns (avenues) are families of chemical analogs; d and f blocks form
the transition and inner-transition series; f blocks split into light
and heavy sub-blocks.  Ground-state configurations here are the
idealized ones produced by filling shells strictly in Madelung order;
experimental exceptions (Cr, Cu, ...) are deliberately not modeled.

Also includes the commuting-operator counting arithmetic used to label
states of a semi-simple Lie group of a given order and rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .addresses import (
    HouseAddress,
    ShellAddress,
    address_from_z,
    block_z_range,
    halfint_str,
    house,
    iter_shells,
    shell_capacity,
    z_from_address,
)
from .ladders import NStep, step_so21


class FamilyLabel(Enum):
    ALKALI_METAL = "alkali-metal"
    ALKALINE_EARTH = "alkaline-earth"
    CHALCOGEN = "chalcogen"
    HALOGEN = "halogen"
    NOBLE_GAS = "noble-gas"
    OTHER = "other"


#: The five named columns, keyed by (l, two_j, two_m).
NAMED_COLUMNS: dict[tuple[int, int, int], FamilyLabel] = {
    (0, 1, -1): FamilyLabel.ALKALI_METAL,
    (0, 1, 1): FamilyLabel.ALKALINE_EARTH,
    (1, 3, -1): FamilyLabel.CHALCOGEN,
    (1, 3, 1): FamilyLabel.HALOGEN,
    (1, 3, 3): FamilyLabel.NOBLE_GAS,
}

_FAMILY_ALIASES = {
    "alkali": FamilyLabel.ALKALI_METAL,
    "alkali-metal": FamilyLabel.ALKALI_METAL,
    "alkaline": FamilyLabel.ALKALINE_EARTH,
    "alkaline-earth": FamilyLabel.ALKALINE_EARTH,
    "chalcogen": FamilyLabel.CHALCOGEN,
    "halogen": FamilyLabel.HALOGEN,
    "noble": FamilyLabel.NOBLE_GAS,
    "noble-gas": FamilyLabel.NOBLE_GAS,
}


@dataclass(frozen=True)
class Family:
    """A column identity (l, j, m) with its chemical label, if it has one."""

    l: int
    two_j: int
    two_m: int
    label: FamilyLabel

    @property
    def column(self) -> tuple[int, int, int]:
        return (self.l, self.two_j, self.two_m)

    def describe(self) -> str:
        if self.label is not FamilyLabel.OTHER:
            return self.label.value
        return (
            f"column(l={self.l},j={halfint_str(self.two_j)},"
            f"m={halfint_str(self.two_m)})"
        )

    def members(self, count: int) -> list[int]:
        return column_members(self.l, self.two_j, self.two_m, count)

    def __str__(self) -> str:
        return self.describe()


def family_of_column(l: int, two_j: int, two_m: int) -> Family:
    label = NAMED_COLUMNS.get((l, two_j, two_m), FamilyLabel.OTHER)
    # Validate the column by building its topmost house.
    house(l + 1, l, two_j, two_m)
    return Family(l, two_j, two_m, label)


def family_of_address(addr: HouseAddress) -> Family:
    return family_of_column(addr.l, addr.two_j, addr.two_m)


def classify_family(z: int) -> Family:
    """Family of element z, read off its column."""
    return family_of_address(address_from_z(z))


def family_by_name(name: str) -> Family:
    """Resolve a family name ('alkali', 'halogen', ...) to its column."""
    label = _FAMILY_ALIASES.get(name.strip().lower())
    if label is None:
        known = ", ".join(sorted(_FAMILY_ALIASES))
        raise ValueError(f"unknown family {name!r}; known names: {known}")
    column = next(col for col, lab in NAMED_COLUMNS.items() if lab is label)
    return Family(*column, label)


def column_members(l: int, two_j: int, two_m: int, count: int) -> list[int]:
    """First `count` atomic numbers in a column, walked north-south.

    Starts at the column's topmost house (n = l + 1) and rides the avenue
    downward, numbering each stop.
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    addr = house(l + 1, l, two_j, two_m)
    members = [z_from_address(addr)]
    for _ in range(count - 1):
        addr = step_so21(addr, NStep(+1))
        members.append(z_from_address(addr))
    return members


class SeriesKind(Enum):
    TRANSITION = "transition"
    INNER_TRANSITION = "inner-transition"
    NEW_PERIOD_121_138 = "new-period"
    NONE = "none"


class SubBlock(Enum):
    LIGHT = "light"  # j = l - 1/2
    HEAVY = "heavy"  # j = l + 1/2


#: The lone g block singled out as a period of its own: 5g, numbers 121-138.
NEW_PERIOD_SHELL = ShellAddress(5, 4)


@dataclass(frozen=True)
class SeriesMembership:
    """Transition / inner-transition / new-period membership of an element."""

    kind: SeriesKind
    generation: int | None = None
    z_range: tuple[int, int] | None = None
    sub_block: SubBlock | None = None

    def describe(self) -> str:
        if self.kind is SeriesKind.NONE:
            return "none"
        parts = [self.kind.value]
        if self.generation is not None:
            parts.append(f"generation n={self.generation}")
        if self.z_range is not None:
            parts.append(f"Z={self.z_range[0]}..{self.z_range[1]}")
        if self.sub_block is not None:
            parts.append(f"{self.sub_block.value} sub-block")
        return ", ".join(parts)


def _sub_block_of(addr: HouseAddress) -> SubBlock | None:
    if addr.l == 0:
        return None
    return SubBlock.LIGHT if addr.two_j == 2 * addr.l - 1 else SubBlock.HEAVY


def series_of_address(addr: HouseAddress) -> SeriesMembership:
    """Series membership read straight off the block (l value and n)."""
    if addr.l == 2:
        kind = SeriesKind.TRANSITION
    elif addr.l == 3:
        kind = SeriesKind.INNER_TRANSITION
    elif addr.shell == NEW_PERIOD_SHELL:
        return SeriesMembership(
            SeriesKind.NEW_PERIOD_121_138,
            z_range=block_z_range(addr.shell),
            sub_block=_sub_block_of(addr),
        )
    else:
        return SeriesMembership(SeriesKind.NONE)
    return SeriesMembership(
        kind,
        generation=addr.n,
        z_range=block_z_range(addr.shell),
        sub_block=_sub_block_of(addr),
    )


def series_membership(z: int) -> SeriesMembership:
    return series_of_address(address_from_z(z))


def rare_earth_subblock(z: int) -> SubBlock | None:
    """Light (j = 5/2) or heavy (j = 7/2) for f-block elements, else None."""
    addr = address_from_z(z)
    if addr.l != 3:
        return None
    return _sub_block_of(addr)


@dataclass(frozen=True)
class Configuration:
    """Idealized ground-state shell occupancies, in Madelung filling order."""

    occupied: tuple[tuple[ShellAddress, int], ...]

    def __post_init__(self) -> None:
        prev: ShellAddress | None = None
        for i, (shell, count) in enumerate(self.occupied):
            if not 1 <= count <= shell_capacity(shell):
                raise ValueError(f"occupancy {count} out of range for {shell}")
            if i < len(self.occupied) - 1 and count != shell_capacity(shell):
                raise ValueError(f"inner shell {shell} must be full")
            if prev is not None and not prev < shell:
                raise ValueError("shells must be in strictly increasing Madelung order")
            prev = shell

    @property
    def total(self) -> int:
        return sum(count for _, count in self.occupied)

    def to_string(self) -> str:
        return format_occupancies(self.occupied)


def format_occupancies(occupied: tuple[tuple[ShellAddress, int], ...]) -> str:
    return " ".join(f"{shell.label()}{count}" for shell, count in occupied)


def ground_state_configuration(z: int) -> Configuration:
    """Distribute z electrons over shells in Madelung order."""
    if z < 1:
        raise ValueError(f"z must be >= 1, got {z}")
    occupied: list[tuple[ShellAddress, int]] = []
    remaining = z
    for shell in iter_shells():
        take = min(remaining, shell_capacity(shell))
        occupied.append((shell, take))
        remaining -= take
        if remaining == 0:
            break
    return Configuration(tuple(occupied))


def iter_noble_gas_closures() -> Iterator[int]:
    """Atomic numbers closing the noble-gas column: 10, 18, 36, 54, ..."""
    addr = house(2, 1, 3, 3)
    while True:
        yield z_from_address(addr)
        addr = step_so21(addr, NStep(+1))


def noble_gas_closures(count: int) -> list[int]:
    closures: list[int] = []
    for z in iter_noble_gas_closures():
        closures.append(z)
        if len(closures) == count:
            return closures
    raise AssertionError("unreachable")


def split_noble_core(
    config: Configuration,
) -> tuple[int | None, tuple[tuple[ShellAddress, int], ...]]:
    """Split off the largest completed-p-shell prefix of a configuration.

    Returns (core z, remaining occupancies); core z is None when no
    closure strictly precedes the configuration's total (so helium-like
    totals never abbreviate: a bare filled s shell is not a closure).
    """
    core_z: int | None = None
    core_len = 0
    running = 0
    for i, (shell, count) in enumerate(config.occupied):
        running += count
        if running >= config.total:
            break
        if shell.l == 1 and count == shell_capacity(shell):
            core_z = running
            core_len = i + 1
    return core_z, config.occupied[core_len:]


class OddDeficit(ValueError):
    """order - 3 * rank is odd, so no integral extra-operator count exists."""


class NegativeDeficit(ValueError):
    """order < 3 * rank; the counting rule does not apply."""


@dataclass(frozen=True)
class LabellingCount:
    """Commuting-operator budget for a semi-simple Lie group.

    The rank counts both the Cartan generators and the Casimir
    invariants; (order - 3 * rank) / 2 further operators complete the
    labelling set.
    """

    order: int
    rank: int

    @property
    def cartan(self) -> int:
        return self.rank

    @property
    def casimirs(self) -> int:
        return self.rank

    @property
    def racah_extra(self) -> int:
        return (self.order - 3 * self.rank) // 2

    @property
    def complete_set(self) -> int:
        return self.cartan + self.casimirs + self.racah_extra


def labelling_count(order: int, rank: int) -> LabellingCount:
    """Validated LabellingCount for a group of the given order and rank."""
    if order < 1 or rank < 1:
        raise ValueError(f"order and rank must be positive, got ({order}, {rank})")
    deficit = order - 3 * rank
    if deficit < 0:
        raise NegativeDeficit(f"order {order} is below 3 * rank = {3 * rank}")
    if deficit % 2 != 0:
        raise OddDeficit(f"order {order} minus 3 * rank = {3 * rank} is odd")
    return LabellingCount(order, rank)


def composed_complete_set(*groups: LabellingCount) -> int:
    """Complete-set size of a direct product: the sum over the factors."""
    return sum(g.complete_set for g in groups)


#: The two factor groups of the table's dynamical symmetry, as labelling data.
CONFORMAL_GROUP = labelling_count(order=15, rank=3)
SPIN_GROUP = labelling_count(order=3, rank=1)
