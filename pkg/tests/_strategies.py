"""Shared hypothesis strategies and invariant checkers for the suite."""

from __future__ import annotations

from hypothesis import strategies as st

from periodic_atlas import HouseAddress, ShellAddress


@st.composite
def shells(draw, max_n: int = 20) -> ShellAddress:
    n = draw(st.integers(min_value=1, max_value=max_n))
    l = draw(st.integers(min_value=0, max_value=n - 1))
    return ShellAddress(n, l)


@st.composite
def houses(draw, max_n: int = 20) -> HouseAddress:
    shell = draw(shells(max_n=max_n))
    if shell.l == 0:
        two_j = 1
    else:
        two_j = draw(st.sampled_from((2 * shell.l - 1, 2 * shell.l + 1)))
    k = draw(st.integers(min_value=0, max_value=two_j))
    return HouseAddress(shell, two_j, -two_j + 2 * k)


def assert_valid_house(addr: HouseAddress) -> None:
    """Re-state the house invariants without trusting the constructor."""
    n, l = addr.shell.n, addr.shell.l
    assert n >= 1
    assert 0 <= l <= n - 1
    assert addr.two_j % 2 == 1 and addr.two_j >= 1
    if l == 0:
        assert addr.two_j == 1
    else:
        assert addr.two_j in (2 * l - 1, 2 * l + 1)
    assert addr.two_m % 2 != 0
    assert abs(addr.two_m) <= addr.two_j
