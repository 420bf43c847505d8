"""Quantum-number addressing for a Madelung-ordered periodic table.

The table is laid out as a city grid: one street per principal quantum
number n, and one avenue per (l, j, m) column.  A shell (n, l) owns one
block of 2(2l+1) houses; blocks fill in Madelung order (increasing n+l,
ties broken by increasing n) with consecutive atomic numbers starting at
1.  Inside an l >= 1 block the j = l - 1/2 sub-block comes first, then
j = l + 1/2, each swept with m ascending from -j to j.

Half-integers j and m are stored doubled (two_j, two_m) so every
comparison and step is exact integer arithmetic; the closed-form house
numbering is evaluated over exact rationals and checked for integrality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import total_ordering
from typing import Iterator


class InvalidAddressError(ValueError):
    """A shell or house address violates its construction invariants."""


#: Spectroscopic letters for l = 0, 1, 2, ... ("j" is skipped by convention).
L_SYMBOLS = "spdfghiklmnoqrtuvwxyz"


def l_symbol(l: int) -> str:
    """Spectroscopic letter for an orbital quantum number, e.g. 3 -> 'f'."""
    if 0 <= l < len(L_SYMBOLS):
        return L_SYMBOLS[l]
    return f"(l={l})"


def halfint_str(two_x: int) -> str:
    """Human-readable form of a doubled half-odd integer, e.g. -3 -> '-3/2'."""
    return f"{two_x}/2"


@total_ordering
@dataclass(frozen=True)
class ShellAddress:
    """One atomic shell: street n, block l.

    Ordering is the Madelung order: by n + l, then by n.
    """

    n: int
    l: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidAddressError(f"n must be a positive integer, got n={self.n}")
        if not 0 <= self.l <= self.n - 1:
            raise InvalidAddressError(
                f"l must satisfy 0 <= l <= n-1, got n={self.n}, l={self.l}"
            )

    @property
    def madelung_key(self) -> tuple[int, int]:
        return (self.n + self.l, self.n)

    def label(self) -> str:
        """Spectroscopic name, e.g. ShellAddress(4, 3) -> '4f'."""
        return f"{self.n}{l_symbol(self.l)}"

    def __lt__(self, other: ShellAddress) -> bool:
        if not isinstance(other, ShellAddress):
            return NotImplemented
        return self.madelung_key < other.madelung_key

    def __str__(self) -> str:
        return self.label()


def compare_shells(a: ShellAddress, b: ShellAddress) -> int:
    """Madelung comparison: negative, zero or positive as a <, ==, > b."""
    ka, kb = a.madelung_key, b.madelung_key
    return (ka > kb) - (ka < kb)


def iter_shells() -> Iterator[ShellAddress]:
    """Yield every shell in Madelung order, forever."""
    for total in itertools.count(1):
        for n in range(total // 2 + 1, total + 1):
            yield ShellAddress(n, total - n)


def enumerate_shells(count: int) -> list[ShellAddress]:
    """The first `count` shells in Madelung order."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    return list(itertools.islice(iter_shells(), count))


def shell_capacity(shell: ShellAddress) -> int:
    """Number of houses in the shell's block, 2(2l+1)."""
    return 2 * (2 * shell.l + 1)


def diagonal_capacity(total: int) -> int:
    """Total house count over all blocks with n + l == total."""
    half = (total + 1) // 2
    return 2 * half * half


def block_z_range(shell: ShellAddress) -> tuple[int, int]:
    """Inclusive (first, last) atomic numbers filling the shell's block."""
    total = shell.n + shell.l
    before = sum(diagonal_capacity(t) for t in range(1, total))
    for n in range(total // 2 + 1, shell.n):
        before += 2 * (2 * (total - n) + 1)
    first = before + 1
    return first, first + shell_capacity(shell) - 1


@dataclass(frozen=True)
class HouseAddress:
    """One table cell (n, l, j, m), with j and m stored doubled."""

    shell: ShellAddress
    two_j: int
    two_m: int

    def __post_init__(self) -> None:
        l = self.shell.l
        if self.two_j % 2 == 0 or self.two_j < 1:
            raise InvalidAddressError(f"two_j must be odd and positive, got {self.two_j}")
        allowed = (1,) if l == 0 else (2 * l - 1, 2 * l + 1)
        if self.two_j not in allowed:
            raise InvalidAddressError(
                f"two_j={self.two_j} invalid for l={l}; allowed: {allowed}"
            )
        if self.two_m % 2 == 0 or abs(self.two_m) > self.two_j:
            raise InvalidAddressError(
                f"two_m must be odd with |two_m| <= two_j, got two_m={self.two_m}, two_j={self.two_j}"
            )

    @property
    def n(self) -> int:
        return self.shell.n

    @property
    def l(self) -> int:
        return self.shell.l

    @property
    def j(self) -> Fraction:
        return Fraction(self.two_j, 2)

    @property
    def m(self) -> Fraction:
        return Fraction(self.two_m, 2)

    def __str__(self) -> str:
        return (
            f"(n={self.n}, l={self.l}, j={halfint_str(self.two_j)}, "
            f"m={halfint_str(self.two_m)})"
        )


def house(n: int, l: int, two_j: int, two_m: int) -> HouseAddress:
    """Shorthand constructor for a HouseAddress from plain integers."""
    return HouseAddress(ShellAddress(n, l), two_j, two_m)


def houses_in_shell(shell: ShellAddress) -> Iterator[HouseAddress]:
    """Houses of one block in filling order: j = l - 1/2 first, m ascending."""
    sub_blocks = (1,) if shell.l == 0 else (2 * shell.l - 1, 2 * shell.l + 1)
    for two_j in sub_blocks:
        for two_m in range(-two_j, two_j + 1, 2):
            yield HouseAddress(shell, two_j, two_m)


def oracle_enumerate(max_sum: int) -> list[tuple[HouseAddress, int]]:
    """Ground-truth numbering by brute-force walk.

    Visits every block with n + l <= max_sum in Madelung order, sweeps
    each block sub-block by sub-block with m ascending, and hands out
    consecutive numbers starting at 1.  This is the independent oracle
    against which the closed-form `z_from_address` is verified; it shares
    no arithmetic with it.
    """
    if max_sum < 1:
        raise ValueError(f"max_sum must be >= 1, got {max_sum}")
    numbered: list[tuple[HouseAddress, int]] = []
    z = 0
    for shell in iter_shells():
        if shell.n + shell.l > max_sum:
            break
        for h in houses_in_shell(shell):
            z += 1
            numbered.append((h, z))
    return numbered


def z_from_address(addr: HouseAddress) -> int:
    """Closed-form atomic number of the house at (n, l, j, m).

    Evaluated in exact rational arithmetic; the result is integral for
    every valid address (an invariant the test suite checks exhaustively
    against the enumeration oracle).
    """
    total = addr.n + addr.l
    l = addr.l
    z = (
        Fraction(total * (total * total - 1), 6)
        + Fraction((total + 1) ** 2, 2)
        - Fraction((1 + (-1) ** total) * (total + 1), 4)
        - 4 * l * (l + 1)
        + l
        + Fraction(addr.two_j, 2) * (2 * l + 1)
        + Fraction(addr.two_m, 2)
        - 1
    )
    if z.denominator != 1:
        raise ArithmeticError(f"non-integral house number {z} at {addr}")
    return int(z)


def _house_at_offset(shell: ShellAddress, offset: int) -> HouseAddress:
    """The house `offset` places (0-based) into the block's filling order."""
    l = shell.l
    if l >= 1 and offset < 2 * l:
        two_j = 2 * l - 1
    else:
        two_j = 2 * l + 1
        if l >= 1:
            offset -= 2 * l
    return HouseAddress(shell, two_j, -two_j + 2 * offset)


def address_from_z(z: int) -> HouseAddress:
    """Inverse of `z_from_address` by block-skipping search.

    Skips whole diagonals (n + l constant) using their known capacities,
    then walks the blocks of the containing diagonal.  Total for every
    z >= 1; the table is unbounded.
    """
    if z < 1:
        raise ValueError(f"z must be >= 1, got {z}")
    before = 0
    total = 1
    while True:
        cap = diagonal_capacity(total)
        if before + cap >= z:
            break
        before += cap
        total += 1
    for n in range(total // 2 + 1, total + 1):
        l = total - n
        cap = 2 * (2 * l + 1)
        if before + cap >= z:
            return _house_at_offset(ShellAddress(n, l), z - before - 1)
        before += cap
    raise AssertionError("diagonal capacity bookkeeping is inconsistent")


def check_formula_against_oracle(
    max_sum: int,
) -> tuple[int, tuple[HouseAddress, int, int] | None]:
    """Compare the closed form with the oracle over all blocks with n + l <= max_sum.

    Returns (houses checked, first mismatch) where a mismatch is
    (address, oracle number, formula number); None means full agreement.
    """
    checked = 0
    for addr, expected in oracle_enumerate(max_sum):
        checked += 1
        got = z_from_address(addr)
        if got != expected:
            return checked, (addr, expected, got)
    return checked, None


@dataclass(frozen=True)
class AltHouseAddress:
    """Alternative cell labels (n, l, m_l, m_s), with m_s stored doubled."""

    shell: ShellAddress
    m_l: int
    two_m_s: int

    def __post_init__(self) -> None:
        if abs(self.m_l) > self.shell.l:
            raise InvalidAddressError(
                f"|m_l| must be <= l, got m_l={self.m_l}, l={self.shell.l}"
            )
        if self.two_m_s not in (-1, 1):
            raise InvalidAddressError(f"two_m_s must be -1 or +1, got {self.two_m_s}")


def alt_house(n: int, l: int, m_l: int, two_m_s: int) -> AltHouseAddress:
    """Shorthand constructor for an AltHouseAddress from plain integers."""
    return AltHouseAddress(ShellAddress(n, l), m_l, two_m_s)


def alt_houses_in_shell(shell: ShellAddress) -> Iterator[AltHouseAddress]:
    """Alt labels of one shell in canonical order: m_s ascending, then m_l."""
    for two_m_s in (-1, 1):
        for m_l in range(-shell.l, shell.l + 1):
            yield AltHouseAddress(shell, m_l, two_m_s)


def _alt_rank(alt: AltHouseAddress) -> int:
    half = (alt.two_m_s + 1) // 2
    return half * (2 * alt.shell.l + 1) + (alt.m_l + alt.shell.l)


def _house_rank(addr: HouseAddress) -> int:
    l = addr.l
    base = 0 if (l == 0 or addr.two_j == 2 * l - 1) else 2 * l
    return base + (addr.two_m + addr.two_j) // 2

def alt_to_jm(alt: AltHouseAddress) -> HouseAddress:
    """Positional pairing between the two label schemes of one shell.

    Ranks `alt` among its shell's (m_l, m_s) labels (m_s ascending, then
    m_l ascending) and returns the house at the same rank in the (j, m)
    filling order.  Bijective per shell; this is a bookkeeping pairing,
    not a change of physical basis.
    """
    return _house_at_offset(alt.shell, _alt_rank(alt))


def jm_to_alt(addr: HouseAddress) -> AltHouseAddress:
    """Inverse of `alt_to_jm` (same rank, alt label order)."""
    rank = _house_rank(addr)
    width = 2 * addr.l + 1
    return AltHouseAddress(addr.shell, rank % width - addr.l, -1 if rank < width else 1)


class Status(Enum):
    """Occupancy status of a house in a given dataset snapshot."""

    NAMED = "named"
    OBSERVED_UNNAMED = "observed-unnamed"
    UNOBSERVED = "unobserved"


@dataclass(frozen=True)
class ElementRecord:
    """An element: number, house, optional nickname, occupancy status."""

    z: int
    address: HouseAddress
    symbol: str | None = None
    name: str | None = None
    status: Status = Status.UNOBSERVED

    def __post_init__(self) -> None:
        expected = z_from_address(self.address)
        if self.z != expected:
            raise InvalidAddressError(
                f"record z={self.z} does not match its address {self.address} "
                f"(which numbers to {expected})"
            )
