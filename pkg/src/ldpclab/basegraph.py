"""Protograph (base graph) parsing and the bundled 5G table.

Base-graph files are plain text: a header line ``nrows,ncols,kb``
followed by one ``row,col,shift`` triple per line.  Lines starting with
``#`` are comments.  The bundled table is 3GPP base graph 2 with the
shift set for lifting sizes {11, 22, 44, 88, 176, 352}.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

__all__ = ["BaseGraph", "BaseGraphError", "parse_base_graph", "load_bg2"]

_BG2_RESOURCE = "nr_bg2_set5.txt"


class BaseGraphError(ValueError):
    """Malformed or structurally invalid base-graph data."""


@dataclass(frozen=True)
class BaseGraph:
    """Protograph with cyclic-shift coefficients.

    ``entries`` holds (row, col, shift) triples; shifts are reduced
    modulo the lifting size only when a code is lifted, never here.
    ``k_b`` counts the systematic base columns.
    """

    n_rows: int
    n_cols: int
    k_b: int
    entries: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if not self.entries:
            raise BaseGraphError("base graph has no entries")
        if not (0 < self.k_b <= self.n_cols):
            raise BaseGraphError(f"k_b={self.k_b} outside 1..{self.n_cols}")
        seen = set()
        for r, c, s in self.entries:
            if not (0 <= r < self.n_rows and 0 <= c < self.n_cols):
                raise BaseGraphError(f"entry ({r},{c}) outside {self.n_rows}x{self.n_cols} grid")
            if s < 0:
                raise BaseGraphError(f"entry ({r},{c}) has negative shift {s}")
            if (r, c) in seen:
                raise BaseGraphError(f"duplicate entry ({r},{c})")
            seen.add((r, c))

    def row_cols(self, row: int) -> list[int]:
        return sorted(c for r, c, _ in self.entries if r == row)


def parse_base_graph(text: str) -> BaseGraph:
    """Parse the ``row,col,shift`` table format."""
    header = None
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split(",")
        if len(parts) != 3:
            raise BaseGraphError(f"line {lineno}: expected three comma-separated fields, got {raw!r}")
        try:
            a, b, c = (int(p) for p in parts)
        except ValueError:
            raise BaseGraphError(f"line {lineno}: non-integer field in {raw!r}") from None
        if header is None:
            header = (a, b, c)
        else:
            entries.append((a, b, c))
    if header is None:
        raise BaseGraphError("missing header line 'nrows,ncols,kb'")
    n_rows, n_cols, k_b = header
    if n_rows <= 0 or n_cols <= 0:
        raise BaseGraphError(f"invalid dimensions {n_rows}x{n_cols}")
    return BaseGraph(n_rows=n_rows, n_cols=n_cols, k_b=k_b, entries=tuple(entries))


def load_bg2() -> BaseGraph:
    """Bundled 5G base graph 2 (shift set covering Z = 22)."""
    text = resources.files(__package__).joinpath("data", _BG2_RESOURCE).read_text()
    return parse_base_graph(text)
