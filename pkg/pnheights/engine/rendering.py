"""CSV and SVG renderings of region tables."""

import io
from typing import List, Sequence, Tuple

import matplotlib
from matplotlib.figure import Figure

from ..core_utils.file_handler import FileHandler
from ..core_utils.validator import ValidationError
from .regions import RegionModel

SVG_RC = {
    "svg.hashsalt": "pnheights",
    "svg.fonttype": "none",
    "font.size": 8,
}


def region_rows(model: RegionModel) -> List[Tuple]:
    """(x_0, ..., x_{n-1}, coefficient, representative_k) in lexicographic order."""
    rows = []
    for indices, value in model.table().items():
        rows.append((*indices, value, model.representative(indices)))
    return rows


def region_header(n: int) -> List[str]:
    return [f"x_{j}" for j in range(n)] + ["coefficient", "representative_k"]


def region_csv(model: RegionModel) -> str:
    return FileHandler.csv_text(region_header(model.t.n), region_rows(model))


def _mark(value: int) -> str:
    return {1: "+", -1: "−"}.get(value, str(value) if value else "")


def _grid(ax, values, x_ticks: Sequence[int], y_ticks: Sequence[int], xlabel: str, ylabel: str, title: str):
    width, height = len(x_ticks), len(y_ticks)
    ax.set_xlim(0, width)
    ax.set_ylim(0, height)
    ax.set_aspect("equal")
    ax.set_xticks(range(width))
    ax.set_xticklabels([str(v) for v in x_ticks], rotation=90)
    ax.set_yticks(range(height))
    ax.set_yticklabels([str(v) for v in y_ticks])
    ax.grid(True, linewidth=0.5)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    for x in range(width):
        for y in range(height):
            text = _mark(int(values[x][y]))
            if text:
                ax.text(x + 0.5, y + 0.5, text, ha="center", va="center")


def region_svg(model: RegionModel) -> str:
    """Layers of the region table over x_2, and the three per-term projections.

    A generic triple has four 4x4 layers; tied boundaries give fewer cells.
    """
    t = model.t
    if t.n != 3:
        raise ValidationError("SVG region diagrams are drawn for three primes only")

    tensor = model.tensor()
    terms = model.term_tensors()
    ticks = [model.profile.cuts(j) for j in range(3)]
    names = [f"p={p}" for p in t.primes]

    with matplotlib.rc_context(SVG_RC):
        fig = Figure(figsize=(12, 6.5))
        axes = fig.subplots(2, 4)
        for z in range(4):
            if z >= tensor.shape[2]:
                axes[0][z].axis("off")
                continue
            _grid(axes[0][z], tensor[:, :, z], ticks[0], ticks[1], names[0], names[1],
                  f"x_2 = {z} (from {ticks[2][z]})")

        # term i is constant along axis i; draw it over the other two axes
        projections = [
            (terms[2][:, :, 0], 0, 1),
            (terms[1][:, 0, :], 0, 2),
            (terms[0][0, :, :], 1, 2),
        ]
        for ax, (values, a, b) in zip(axes[1], projections):
            missing = ({0, 1, 2} - {a, b}).pop()
            _grid(ax, values, ticks[a], ticks[b], names[a], names[b], f"term {missing}")
        axes[1][3].axis("off")
        axes[1][3].text(0.0, 0.5, f"P_N for N = {t.N}\n+ is 1, − is -1", va="center")

        fig.tight_layout()
        buffer = io.StringIO()
        fig.savefig(buffer, format="svg", metadata={"Date": None})
    return buffer.getvalue()
