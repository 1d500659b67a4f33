"""Grid pictures of the root data attached to a block structure.

A diagram is the n x n matrix drawn with its diagonal blocks outlined.
Layers place symbols on nilradical positions: base roots, derived roots,
chain roots, absorbable positions, and the cells of the principal minors.
Output is deterministic, so rendered diagrams can be compared byte for byte.
"""

from __future__ import annotations

from .blocks import BaseData
from .exceptions import BadIndexError
from .structure import (
    absorbable_roots,
    chain_roots,
    last_column_anchor,
    principal_minors,
)

LAYER_TAGS = ("s", "phi", "psi", "t", "principal")

# first matching layer decides the symbol of a cell
_PRECEDENCE = (
    ("psi", "⊠"),
    ("s", "⊗"),
    ("phi", "×"),
    ("t", "•"),
    ("principal", "#"),
)

ANCHORED_LAYERS = frozenset({"psi", "t", "principal"})


def parse_layers(spec: str) -> tuple[str, ...]:
    """Split a comma-separated layer list, validating each tag."""
    tags = []
    for raw in spec.split(","):
        tag = raw.strip().lower()
        if not tag:
            continue
        if tag not in LAYER_TAGS:
            raise BadIndexError(f"unknown layer {tag!r}, expected one of {', '.join(LAYER_TAGS)}")
        if tag not in tags:
            tags.append(tag)
    return tuple(tags)


def diagram_layers(
    bd: BaseData, layers: tuple[str, ...]
) -> tuple[dict[str, tuple[tuple[int, int], ...]], list[str]]:
    """Positions for each requested layer, plus notes for whatever is unavailable."""
    notes: list[str] = []
    if not bd.m_roots:
        notes.append("m = 0 (no positions above the diagonal blocks)")
    anchored = last_column_anchor(bd) is not None
    wanted_anchored = [tag for tag in layers if tag in ANCHORED_LAYERS]
    if wanted_anchored and not anchored and bd.m_roots:
        pretty = ", ".join(wanted_anchored)
        notes.append(f"no base root in the last column; layers unavailable: {pretty}")
    out: dict[str, tuple[tuple[int, int], ...]] = {}
    for tag in layers:
        if tag in ANCHORED_LAYERS and not anchored:
            continue
        if tag == "s":
            out[tag] = tuple(sorted(bd.base))
        elif tag == "phi":
            out[tag] = tuple(sorted(bd.derived))
        elif tag == "psi":
            out[tag] = tuple(sorted(chain_roots(bd)))
        elif tag == "t":
            out[tag] = tuple(sorted(absorbable_roots(bd)))
        elif tag == "principal":
            cells = {
                (i, j)
                for pm in principal_minors(bd)
                for i in pm.row_idx
                for j in pm.col_idx
            }
            out[tag] = tuple(sorted(cells))
    return out, notes


def render_diagram(bd: BaseData, layers: tuple[str, ...] = ("s", "phi")) -> str:
    """Text grid with block outlines and one symbol per marked position."""
    bs = bd.bs
    n = bs.n
    marks, notes = diagram_layers(bd, layers)
    symbol = {}
    for tag, glyph in _PRECEDENCE:
        for pos in marks.get(tag, ()):
            symbol.setdefault(pos, glyph)

    bounds = set(bs.boundaries[1:-1])
    gutter = "  "

    def separator() -> str:
        parts = ["+"]
        for j in range(1, n + 1):
            parts.append("--")
            if j in bounds or j == n:
                parts.append("+")
        return gutter + "".join(parts)

    lines = []
    header = [gutter, " "]
    for j in range(1, n + 1):
        header.append(f"{j % 10} ")
        if j in bounds:
            header.append(" ")
    lines.append("".join(header).rstrip())
    lines.append(separator())
    for i in range(1, n + 1):
        row = [f"{i % 10} ", "|"]
        for j in range(1, n + 1):
            if (i, j) in symbol:
                cell = symbol[(i, j)]
            elif (i, j) in bd.m_set:
                cell = "·"
            else:
                cell = " "
            row.append(f"{cell} ")
            if j in bounds or j == n:
                row.append("|")
        lines.append("".join(row))
        if i in bounds or i == n:
            lines.append(separator())
    for note in notes:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"


def diagram_json(bd: BaseData, layers: tuple[str, ...]) -> dict:
    """Layer positions in a stable machine-readable form."""
    marks, notes = diagram_layers(bd, layers)
    payload: dict = {
        "blocks": list(bd.bs.sizes),
        "n": bd.bs.n,
        "layers": {tag: [[i, j] for (i, j) in positions] for tag, positions in marks.items()},
        "notes": notes,
    }
    anchor = last_column_anchor(bd)
    if anchor is not None and "psi" in marks:
        payload["anchor"] = {
            "anchor_row": anchor.anchor_row,
            "top_row": anchor.top_row,
            "size": anchor.size,
            "ladder": [[i, j] for (i, j) in anchor.ladder],
        }
    return payload
