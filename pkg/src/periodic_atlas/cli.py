"""Command-line interface: maps, queries, walks, and verification."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .addresses import (
    InvalidAddressError,
    check_formula_against_oracle,
    halfint_str,
    house,
    z_from_address,
)
from .chemistry import (
    Family,
    classify_family,
    family_by_name,
    family_of_address,
    format_occupancies,
    ground_state_configuration,
    series_of_address,
    split_noble_core,
)
from .dataset import DatasetError, ElementDataset, element_record, load_dataset
from .ladders import JToggle, LadderError, LStep, MStep, NStep, TaxiTo, apply_move
from .render import RenderSpec, parse_annotations, render_table

_MOVE_TOKENS = {
    "m+": MStep(+1),
    "m-": MStep(-1),
    "j": JToggle(),
    "l+": LStep(+1),
    "l-": LStep(-1),
    "n+": NStep(+1),
    "n-": NStep(-1),
}


def _parse_move(token: str):
    if token in _MOVE_TOKENS:
        return _MOVE_TOKENS[token]
    if token.startswith("taxi:"):
        parts = token[len("taxi:"):].split(",")
        if len(parts) != 4:
            raise ValueError(f"taxi move needs 'taxi:N,L,2J,2M', got {token!r}")
        n, l, two_j, two_m = (int(p) for p in parts)
        return TaxiTo(house(n, l, two_j, two_m))
    known = " ".join(_MOVE_TOKENS)
    raise ValueError(f"unknown move {token!r}; use one of: {known} taxi:N,L,2J,2M")


def _add_dataset_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--dataset",
        metavar="PATH",
        default=None,
        help="element dataset file (z,symbol,name lines); bundled snapshot by default",
    )


def _print_element(z: int, ds: ElementDataset, core: bool, out) -> None:
    record = element_record(z, ds)
    addr = record.address
    title = f"Z={z}"
    if record.symbol:
        title += f"  symbol={record.symbol}"
    if record.name:
        title += f"  name={record.name}"
    print(title, file=out)
    print(
        f"  address: n={addr.n} l={addr.l} ({addr.shell.label()})"
        f"  j={halfint_str(addr.two_j)}  m={halfint_str(addr.two_m)}",
        file=out,
    )
    print(f"  family:  {family_of_address(addr).describe()}", file=out)
    print(f"  series:  {series_of_address(addr).describe()}", file=out)
    print(f"  status:  {record.status.value}", file=out)
    print(f"  config:  {_config_text(z, ds, core)}", file=out)


def _config_text(z: int, ds: ElementDataset, core: bool) -> str:
    config = ground_state_configuration(z)
    if not core:
        return config.to_string()
    core_z, tail = split_noble_core(config)
    if core_z is None:
        return config.to_string()
    core_label = ds.symbol(core_z) or f"Z={core_z}"
    tail_text = format_occupancies(tail)
    return f"[{core_label}] {tail_text}".rstrip()


def _cmd_table(args: argparse.Namespace, out) -> int:
    spec = RenderSpec(
        max_row_n=args.rows,
        format=args.format,
        annotate=parse_annotations(args.annotate),
    )
    ds = load_dataset(args.dataset)
    text = render_table(spec, ds)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    if args.figure:
        from .figures import save_city_figure

        save_city_figure(spec, ds, args.figure)
        print(f"figure written to {args.figure}", file=sys.stderr)
    return 0


def _cmd_element(args: argparse.Namespace, out) -> int:
    ds = load_dataset(args.dataset)
    _print_element(args.z, ds, args.core, out)
    return 0


def _cmd_address(args: argparse.Namespace, out) -> int:
    ds = load_dataset(args.dataset)
    addr = house(args.n, args.l, args.two_j, args.two_m)
    _print_element(z_from_address(addr), ds, args.core, out)
    return 0


def _cmd_family(args: argparse.Namespace, out) -> int:
    ds = load_dataset(args.dataset)
    family = _parse_family(args.family)
    print(f"family {family.describe()}, first {args.count} members:", file=out)
    for z in family.members(args.count):
        symbol = ds.symbol(z)
        addr = address_text(z)
        print(f"  Z={z}" + (f" {symbol}" if symbol else "") + f"  {addr}", file=out)
    return 0


def _parse_family(text: str) -> Family:
    if "," in text:
        parts = [int(p) for p in text.split(",")]
        if len(parts) != 3:
            raise ValueError(f"column spec needs 'L,2J,2M', got {text!r}")
        from .chemistry import family_of_column

        return family_of_column(*parts)
    return family_by_name(text)


def address_text(z: int) -> str:
    from .addresses import address_from_z

    return str(address_from_z(z))


def _cmd_walk(args: argparse.Namespace, out) -> int:
    addr = house(args.n, args.l, args.two_j, args.two_m)
    print(f"start: Z={z_from_address(addr)} {addr}", file=out)
    for token in args.moves:
        move = _parse_move(token)
        try:
            addr = apply_move(addr, move)
        except LadderError as err:
            print(f"{token:>6} -> {type(err).__name__}: {err}", file=out)
            return 1
        print(f"{token:>6} -> Z={z_from_address(addr)} {addr}", file=out)
    return 0


def _cmd_verify(args: argparse.Namespace, out) -> int:
    checked, mismatch = check_formula_against_oracle(args.max_sum)
    if mismatch is None:
        print(f"all {checked} houses with n+l <= {args.max_sum} agree", file=out)
        return 0
    addr, expected, got = mismatch
    print(
        f"mismatch after {checked} houses: {addr} "
        f"oracle={expected} formula={got}",
        file=out,
    )
    return 1


def _cmd_config(args: argparse.Namespace, out) -> int:
    ds = load_dataset(args.dataset)
    print(_config_text(args.z, ds, args.core), file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="atlas",
        description="Build, query, and verify a quantum-number-addressed periodic table.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="render the table (ascii, csv, or json)")
    p.add_argument("--rows", type=int, default=7, metavar="N", help="streets to render (default 7)")
    p.add_argument("--format", choices=("ascii", "csv", "json"), default="ascii")
    p.add_argument(
        "--annotate",
        default="",
        metavar="LIST",
        help="comma list from: families,series,status",
    )
    p.add_argument("--output", metavar="PATH", default=None, help="write the table to a file")
    p.add_argument(
        "--figure",
        metavar="PATH",
        default=None,
        help="also save a figure of the grid (png/pdf/svg by extension)",
    )
    _add_dataset_arg(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("element", help="report on element Z")
    p.add_argument("z", type=int)
    p.add_argument("--core", action="store_true", help="abbreviate the configuration")
    _add_dataset_arg(p)
    p.set_defaults(func=_cmd_element)

    p = sub.add_parser("address", help="report on the house (n, l, 2j, 2m)")
    p.add_argument("n", type=int)
    p.add_argument("l", type=int)
    p.add_argument("two_j", type=int, help="doubled j, e.g. 5 for j=5/2")
    p.add_argument("two_m", type=int, help="doubled m, e.g. -5 for m=-5/2")
    p.add_argument("--core", action="store_true", help="abbreviate the configuration")
    _add_dataset_arg(p)
    p.set_defaults(func=_cmd_address)

    p = sub.add_parser("family", help="list the first members of a column")
    p.add_argument("family", help="name (alkali, halogen, ...) or column 'L,2J,2M'")
    p.add_argument("--count", type=int, default=8, metavar="K")
    _add_dataset_arg(p)
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("walk", help="replay ladder moves from a start house")
    p.add_argument("n", type=int)
    p.add_argument("l", type=int)
    p.add_argument("two_j", type=int)
    p.add_argument("two_m", type=int)
    p.add_argument(
        "moves",
        nargs="*",
        help="move tokens: m+ m- j l+ l- n+ n- taxi:N,L,2J,2M",
    )
    p.set_defaults(func=_cmd_walk)

    p = sub.add_parser("verify", help="check the closed form against the enumeration oracle")
    p.add_argument("--max-sum", type=int, default=12, metavar="S", dest="max_sum")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("config", help="idealized ground-state configuration of Z")
    p.add_argument("z", type=int)
    p.add_argument("--core", action="store_true", help="abbreviate with the noble-gas core")
    _add_dataset_arg(p)
    p.set_defaults(func=_cmd_config)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except (InvalidAddressError, LadderError, DatasetError, ValueError) as err:
        print(f"{type(err).__name__}: {err}", file=sys.stderr)
        return 1
    except OSError as err:
        print(f"{type(err).__name__}: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
