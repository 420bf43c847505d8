"""Quantum-number-addressed periodic table: construction, navigation, checks."""

from .addresses import (
    AltHouseAddress,
    ElementRecord,
    HouseAddress,
    InvalidAddressError,
    ShellAddress,
    Status,
    address_from_z,
    alt_house,
    alt_houses_in_shell,
    alt_to_jm,
    block_z_range,
    check_formula_against_oracle,
    compare_shells,
    diagonal_capacity,
    enumerate_shells,
    halfint_str,
    house,
    houses_in_shell,
    iter_shells,
    jm_to_alt,
    l_symbol,
    oracle_enumerate,
    shell_capacity,
    z_from_address,
)
from .chemistry import (
    CONFORMAL_GROUP,
    SPIN_GROUP,
    Configuration,
    Family,
    FamilyLabel,
    LabellingCount,
    NegativeDeficit,
    OddDeficit,
    SeriesKind,
    SeriesMembership,
    SubBlock,
    classify_family,
    column_members,
    composed_complete_set,
    family_by_name,
    family_of_address,
    family_of_column,
    ground_state_configuration,
    labelling_count,
    noble_gas_closures,
    rare_earth_subblock,
    series_membership,
    series_of_address,
    split_noble_core,
)
from .dataset import (
    DatasetError,
    DuplicateSymbol,
    DuplicateZ,
    ElementDataset,
    ParseError,
    bundled_dataset,
    element_record,
    load_dataset,
    status_of,
)
from .ladders import (
    JToggle,
    LadderError,
    LadderMove,
    LStep,
    MOutOfRange,
    MStep,
    NoSecondSubBlock,
    NStep,
    OutOfAvenue,
    OutOfBlock,
    OutOfStreet,
    TaxiRoute,
    TaxiTo,
    apply_move,
    step_so21,
    step_so3,
    step_so4,
    taxi,
)
from .render import RenderSpec, cell_record, column_index, iter_cells, render_table

__version__ = "0.1.0"

__all__ = [
    "AltHouseAddress",
    "CONFORMAL_GROUP",
    "Configuration",
    "DatasetError",
    "DuplicateSymbol",
    "DuplicateZ",
    "ElementDataset",
    "ElementRecord",
    "Family",
    "FamilyLabel",
    "HouseAddress",
    "InvalidAddressError",
    "JToggle",
    "LStep",
    "LabellingCount",
    "LadderError",
    "LadderMove",
    "MOutOfRange",
    "MStep",
    "NStep",
    "NegativeDeficit",
    "NoSecondSubBlock",
    "OddDeficit",
    "OutOfAvenue",
    "OutOfBlock",
    "OutOfStreet",
    "ParseError",
    "RenderSpec",
    "SPIN_GROUP",
    "SeriesKind",
    "SeriesMembership",
    "ShellAddress",
    "Status",
    "SubBlock",
    "TaxiRoute",
    "TaxiTo",
    "address_from_z",
    "alt_house",
    "alt_houses_in_shell",
    "alt_to_jm",
    "apply_move",
    "block_z_range",
    "bundled_dataset",
    "cell_record",
    "check_formula_against_oracle",
    "classify_family",
    "column_index",
    "column_members",
    "compare_shells",
    "composed_complete_set",
    "diagonal_capacity",
    "element_record",
    "enumerate_shells",
    "family_by_name",
    "family_of_address",
    "family_of_column",
    "ground_state_configuration",
    "halfint_str",
    "house",
    "houses_in_shell",
    "iter_cells",
    "iter_shells",
    "jm_to_alt",
    "l_symbol",
    "labelling_count",
    "load_dataset",
    "noble_gas_closures",
    "oracle_enumerate",
    "rare_earth_subblock",
    "render_table",
    "series_membership",
    "series_of_address",
    "shell_capacity",
    "split_noble_core",
    "status_of",
    "step_so21",
    "step_so3",
    "step_so4",
    "taxi",
    "z_from_address",
]
