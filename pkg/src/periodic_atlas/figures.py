"""Render the city grid as a matplotlib figure saved to a file."""

from __future__ import annotations

from pathlib import Path

from matplotlib.figure import Figure
from matplotlib.patches import Patch, Rectangle

from .chemistry import FamilyLabel, SeriesKind
from .dataset import ElementDataset
from .render import Cell, RenderSpec, column_index, iter_cells

_L_COLORS = {0: "#f4b6b6", 1: "#fbe3a2", 2: "#b8d4f2", 3: "#bce8c8", 4: "#e2cdf0"}
_L_FALLBACK = "#e3e3e3"

_FAMILY_COLORS = {
    FamilyLabel.ALKALI_METAL: "#e4572e",
    FamilyLabel.ALKALINE_EARTH: "#f3a712",
    FamilyLabel.CHALCOGEN: "#29335c",
    FamilyLabel.HALOGEN: "#669900",
    FamilyLabel.NOBLE_GAS: "#9649cb",
}

_SERIES_COLORS = {
    SeriesKind.TRANSITION: "#4f86c6",
    SeriesKind.INNER_TRANSITION: "#3faf7d",
    SeriesKind.NEW_PERIOD_121_138: "#d64d8a",
}

_STATUS_ALPHA = {"named": 1.0, "observed-unnamed": 0.75, "unobserved": 0.35}


def _cell_color(cell: Cell, annotate: frozenset[str]) -> str:
    if "families" in annotate:
        color = _FAMILY_COLORS.get(cell.family.label)
        if color:
            return color
    if "series" in annotate:
        color = _SERIES_COLORS.get(cell.series.kind)
        if color:
            return color
    return _L_COLORS.get(cell.address.l, _L_FALLBACK)


def _legend_handles(annotate: frozenset[str], max_l: int) -> list[Patch]:
    handles = []
    if "families" in annotate:
        for label, color in _FAMILY_COLORS.items():
            handles.append(Patch(facecolor=color, label=label.value))
    if "series" in annotate:
        for kind, color in _SERIES_COLORS.items():
            handles.append(Patch(facecolor=color, label=kind.value))
    if not handles:
        from .addresses import l_symbol

        for l in range(0, max_l + 1):
            color = _L_COLORS.get(l, _L_FALLBACK)
            handles.append(Patch(facecolor=color, label=f"{l_symbol(l)} block"))
    return handles


def save_city_figure(spec: RenderSpec, ds: ElementDataset, path: str | Path) -> Path:
    """Draw streets 1..max_row_n as colored house cells and save to `path`.

    The file type follows the extension (png, pdf, svg, ...).  Returns
    the written path.
    """
    cells = list(iter_cells(spec.max_row_n, ds))
    n_max = spec.max_row_n
    width = 2 * n_max * n_max

    fig = Figure(figsize=(max(6.0, 0.24 * width), max(3.0, 0.9 * n_max)))
    ax = fig.add_subplot()
    show_text = n_max <= 8

    for cell in cells:
        x = column_index(cell.address)
        y = cell.address.n
        alpha = _STATUS_ALPHA[cell.status.value] if "status" in spec.annotate else 1.0
        ax.add_patch(
            Rectangle(
                (x, y - 0.45),
                0.94,
                0.9,
                facecolor=_cell_color(cell, spec.annotate),
                edgecolor="black",
                linewidth=0.4,
                alpha=alpha,
            )
        )
        if show_text:
            label = str(cell.z) if cell.symbol is None else f"{cell.z}\n{cell.symbol}"
            ax.text(x + 0.47, y, label, ha="center", va="center", fontsize=5)

    ax.set_xlim(-0.5, width + 0.5)
    ax.set_ylim(n_max + 0.7, 0.3)
    ax.set_yticks(range(1, n_max + 1))
    ax.set_ylabel("street n")
    ax.set_xticks([])
    ax.set_xlabel("avenues (l, j, m)")
    ax.set_title(f"Element city map, streets 1..{n_max}")
    ax.legend(
        handles=_legend_handles(spec.annotate, n_max - 1),
        loc="lower right",
        fontsize=6,
        framealpha=0.9,
    )

    out = Path(path)
    fig.savefig(out, dpi=150, bbox_inches="tight")
    return out
