"""Element symbol/name dataset and occupancy-status bounds.

The bundled snapshot carries nicknames for Z = 1..110 and treats
Z <= 116 as observed, matching the early-2004 state of discovery.  Both
bounds are data, not code: a user dataset file can override them with
``#!`` directives and extend or replace the entries.

File format: UTF-8 lines ``z,symbol,name``; ``#`` starts a comment;
an optional ``z,symbol,name`` header line is skipped; lines of the form
``#! named_max=118`` or ``#! observed_max=118`` override the status
bounds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .addresses import ElementRecord, Status, address_from_z

DEFAULT_NAMED_MAX = 110
DEFAULT_OBSERVED_MAX = 116

# fmt: off
_BUNDLED: tuple[tuple[int, str, str], ...] = (
    (1, "H", "hydrogen"), (2, "He", "helium"), (3, "Li", "lithium"),
    (4, "Be", "beryllium"), (5, "B", "boron"), (6, "C", "carbon"),
    (7, "N", "nitrogen"), (8, "O", "oxygen"), (9, "F", "fluorine"),
    (10, "Ne", "neon"), (11, "Na", "sodium"), (12, "Mg", "magnesium"),
    (13, "Al", "aluminium"), (14, "Si", "silicon"), (15, "P", "phosphorus"),
    (16, "S", "sulfur"), (17, "Cl", "chlorine"), (18, "Ar", "argon"),
    (19, "K", "potassium"), (20, "Ca", "calcium"), (21, "Sc", "scandium"),
    (22, "Ti", "titanium"), (23, "V", "vanadium"), (24, "Cr", "chromium"),
    (25, "Mn", "manganese"), (26, "Fe", "iron"), (27, "Co", "cobalt"),
    (28, "Ni", "nickel"), (29, "Cu", "copper"), (30, "Zn", "zinc"),
    (31, "Ga", "gallium"), (32, "Ge", "germanium"), (33, "As", "arsenic"),
    (34, "Se", "selenium"), (35, "Br", "bromine"), (36, "Kr", "krypton"),
    (37, "Rb", "rubidium"), (38, "Sr", "strontium"), (39, "Y", "yttrium"),
    (40, "Zr", "zirconium"), (41, "Nb", "niobium"), (42, "Mo", "molybdenum"),
    (43, "Tc", "technetium"), (44, "Ru", "ruthenium"), (45, "Rh", "rhodium"),
    (46, "Pd", "palladium"), (47, "Ag", "silver"), (48, "Cd", "cadmium"),
    (49, "In", "indium"), (50, "Sn", "tin"), (51, "Sb", "antimony"),
    (52, "Te", "tellurium"), (53, "I", "iodine"), (54, "Xe", "xenon"),
    (55, "Cs", "caesium"), (56, "Ba", "barium"), (57, "La", "lanthanum"),
    (58, "Ce", "cerium"), (59, "Pr", "praseodymium"), (60, "Nd", "neodymium"),
    (61, "Pm", "promethium"), (62, "Sm", "samarium"), (63, "Eu", "europium"),
    (64, "Gd", "gadolinium"), (65, "Tb", "terbium"), (66, "Dy", "dysprosium"),
    (67, "Ho", "holmium"), (68, "Er", "erbium"), (69, "Tm", "thulium"),
    (70, "Yb", "ytterbium"), (71, "Lu", "lutetium"), (72, "Hf", "hafnium"),
    (73, "Ta", "tantalum"), (74, "W", "tungsten"), (75, "Re", "rhenium"),
    (76, "Os", "osmium"), (77, "Ir", "iridium"), (78, "Pt", "platinum"),
    (79, "Au", "gold"), (80, "Hg", "mercury"), (81, "Tl", "thallium"),
    (82, "Pb", "lead"), (83, "Bi", "bismuth"), (84, "Po", "polonium"),
    (85, "At", "astatine"), (86, "Rn", "radon"), (87, "Fr", "francium"),
    (88, "Ra", "radium"), (89, "Ac", "actinium"), (90, "Th", "thorium"),
    (91, "Pa", "protactinium"), (92, "U", "uranium"), (93, "Np", "neptunium"),
    (94, "Pu", "plutonium"), (95, "Am", "americium"), (96, "Cm", "curium"),
    (97, "Bk", "berkelium"), (98, "Cf", "californium"), (99, "Es", "einsteinium"),
    (100, "Fm", "fermium"), (101, "Md", "mendelevium"), (102, "No", "nobelium"),
    (103, "Lr", "lawrencium"), (104, "Rf", "rutherfordium"), (105, "Db", "dubnium"),
    (106, "Sg", "seaborgium"), (107, "Bh", "bohrium"), (108, "Hs", "hassium"),
    (109, "Mt", "meitnerium"), (110, "Ds", "darmstadtium"),
)
# fmt: on


class DatasetError(Exception):
    """Invalid element dataset (content or bounds)."""


class ParseError(DatasetError):
    """Malformed dataset line; the message names the line number."""


class DuplicateZ(DatasetError):
    """The same atomic number appears on two lines."""


class DuplicateSymbol(DatasetError):
    """The same symbol appears on two lines."""


@dataclass(frozen=True)
class ElementDataset:
    """Symbols and names keyed by z, plus the status bounds."""

    entries: dict[int, tuple[str, str]] = field(default_factory=dict)
    named_max: int = DEFAULT_NAMED_MAX
    observed_max: int = DEFAULT_OBSERVED_MAX

    def __post_init__(self) -> None:
        if self.named_max < 1 or self.observed_max < 1:
            raise DatasetError("status bounds must be positive")
        if self.named_max > self.observed_max:
            raise DatasetError(
                f"named_max={self.named_max} exceeds observed_max={self.observed_max}"
            )
        seen: dict[str, int] = {}
        for z, (symbol, _name) in self.entries.items():
            if z < 1:
                raise DatasetError(f"entry z={z} is not a positive integer")
            if not symbol:
                raise DatasetError(f"entry z={z} has an empty symbol")
            if symbol in seen:
                raise DatasetError(f"symbol {symbol!r} used for both z={seen[symbol]} and z={z}")
            seen[symbol] = z

    def symbol(self, z: int) -> str | None:
        entry = self.entries.get(z)
        return entry[0] if entry else None

    def name(self, z: int) -> str | None:
        entry = self.entries.get(z)
        return entry[1] if entry and entry[1] else None


def bundled_dataset() -> ElementDataset:
    """The built-in snapshot: names through Z=110, observations through Z=116."""
    return ElementDataset(entries={z: (sym, name) for z, sym, name in _BUNDLED})


def _parse_directive(body: str, lineno: int, bounds: dict[str, int]) -> None:
    key, sep, value = body.partition("=")
    key = key.strip()
    if not sep or key not in ("named_max", "observed_max"):
        raise ParseError(f"line {lineno}: bad directive {body.strip()!r}")
    try:
        bounds[key] = int(value.strip())
    except ValueError:
        raise ParseError(f"line {lineno}: directive {key} needs an integer") from None


def load_dataset(path: str | Path | None = None) -> ElementDataset:
    """Parse a dataset file, or return the bundled snapshot when path is None."""
    if path is None:
        return bundled_dataset()
    text = Path(path).read_text(encoding="utf-8")
    entries: dict[int, tuple[str, str]] = {}
    symbol_lines: dict[str, int] = {}
    z_lines: dict[int, int] = {}
    bounds = {"named_max": DEFAULT_NAMED_MAX, "observed_max": DEFAULT_OBSERVED_MAX}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#!"):
            _parse_directive(line[2:], lineno, bounds)
            continue
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split(",", 2)]
        if fields[0].lower() == "z" and not entries:
            continue  # optional header
        if len(fields) != 3:
            raise ParseError(f"line {lineno}: expected 'z,symbol,name', got {raw!r}")
        try:
            z = int(fields[0])
        except ValueError:
            raise ParseError(f"line {lineno}: z must be an integer, got {fields[0]!r}") from None
        if z < 1:
            raise ParseError(f"line {lineno}: z must be >= 1, got {z}")
        symbol, name = fields[1], fields[2]
        if not symbol:
            raise ParseError(f"line {lineno}: empty symbol")
        if z in z_lines:
            raise DuplicateZ(f"line {lineno}: z={z} already defined on line {z_lines[z]}")
        if symbol in symbol_lines:
            raise DuplicateSymbol(
                f"line {lineno}: symbol {symbol!r} already used on line {symbol_lines[symbol]}"
            )
        z_lines[z] = lineno
        symbol_lines[symbol] = lineno
        entries[z] = (symbol, name)
    return ElementDataset(entries=entries, **bounds)


def status_of(z: int, ds: ElementDataset) -> Status:
    """Named, observed-but-unnamed, or unobserved, by the dataset bounds."""
    if z < 1:
        raise ValueError(f"z must be >= 1, got {z}")
    if z <= ds.named_max:
        return Status.NAMED
    if z <= ds.observed_max:
        return Status.OBSERVED_UNNAMED
    return Status.UNOBSERVED


def element_record(z: int, ds: ElementDataset) -> ElementRecord:
    """Full record for element z under the given dataset."""
    return ElementRecord(
        z=z,
        address=address_from_z(z),
        symbol=ds.symbol(z),
        name=ds.name(z),
        status=status_of(z, ds),
    )
