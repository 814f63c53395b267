"""Integer grid geometry: cells, vertices, connectivity and named configuration families.

Coordinates follow the usual mathematical orientation: ``y`` grows upward and the
cell ``(x, y)`` is the unit square ``[x, x+1] x [y, y+1]``.  Wherever an order is
needed, cells are sorted top row first, then left to right.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from typing import NamedTuple


class Vertex(NamedTuple):
    x: int
    y: int


class Cell(NamedTuple):
    x: int
    y: int

    def vertices(self) -> tuple[Vertex, Vertex, Vertex, Vertex]:
        """Corners as (bottom-left, bottom-right, top-left, top-right)."""
        x, y = self
        return Vertex(x, y), Vertex(x + 1, y), Vertex(x, y + 1), Vertex(x + 1, y + 1)


Configuration = frozenset  # frozenset[Cell]


def canonical_key(cell: Cell) -> tuple[int, int]:
    return (-cell[1], cell[0])


def configuration(cells: Iterable) -> frozenset[Cell]:
    """Build a configuration from any iterable of ``(x, y)`` pairs."""
    return frozenset(Cell(int(x), int(y)) for x, y in cells)


def sorted_cells(cells: Iterable[Cell]) -> list[Cell]:
    return sorted(cells, key=canonical_key)


def share_edge(a: Cell, b: Cell) -> bool:
    return abs(a[0] - b[0]) + abs(a[1] - b[1]) == 1


def share_vertex(a: Cell, b: Cell) -> bool:
    return max(abs(a[0] - b[0]), abs(a[1] - b[1])) == 1


_STEPS_4 = ((1, 0), (-1, 0), (0, 1), (0, -1))
_STEPS_8 = _STEPS_4 + ((1, 1), (1, -1), (-1, 1), (-1, -1))


def _flood(cells: frozenset[Cell], seed: Cell, steps) -> set[Cell]:
    seen = {seed}
    stack = [seed]
    while stack:
        x, y = stack.pop()
        for dx, dy in steps:
            nb = Cell(x + dx, y + dy)
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return seen


def _connected(cells: Iterable[Cell], steps) -> bool:
    cells = frozenset(cells)
    if len(cells) <= 1:
        return True
    return len(_flood(cells, next(iter(cells)), steps)) == len(cells)


def is_4_connected(cells: Iterable[Cell]) -> bool:
    return _connected(cells, _STEPS_4)


def is_8_connected(cells: Iterable[Cell]) -> bool:
    return _connected(cells, _STEPS_8)


def components_4(cells: Iterable[Cell]) -> list[frozenset[Cell]]:
    """Maximal 4-connected parts, ordered by their first cell in canonical order."""
    remaining = set(cells)
    frozen = frozenset(remaining)
    parts = []
    for cell in sorted_cells(frozen):
        if cell in remaining:
            part = _flood(frozen, cell, _STEPS_4)
            remaining -= part
            parts.append(frozenset(part))
    return parts


@dataclass(frozen=True, order=True)
class Line:
    """Contiguous cells ``(x, row)`` for ``x_start <= x <= x_end``."""

    row: int
    x_start: int
    x_end: int

    def __post_init__(self):
        if self.x_start > self.x_end:
            raise ValueError("x_start must not exceed x_end")

    @property
    def length(self) -> int:
        return self.x_end - self.x_start + 1

    def cells(self) -> list[Cell]:
        return [Cell(x, self.row) for x in range(self.x_start, self.x_end + 1)]

    def bottom(self, i: int) -> Vertex:
        """i-th bottom vertex, counted from 1 at the left end."""
        return Vertex(self.x_start + i - 1, self.row)

    def top(self, i: int) -> Vertex:
        return Vertex(self.x_start + i - 1, self.row + 1)


def maximal_run(cells, seed: Cell) -> Line:
    """The maximal horizontal run of ``cells`` through ``seed``."""
    x, row = seed
    lo = hi = x
    while (lo - 1, row) in cells:
        lo -= 1
    while (hi + 1, row) in cells:
        hi += 1
    return Line(row, lo, hi)


def decompose_into_lines(cells: Iterable[Cell]) -> list[Line]:
    cells = frozenset(cells)
    lines = []
    for cell in sorted_cells(cells):
        if (cell.x - 1, cell.y) not in cells:
            lines.append(maximal_run(cells, cell))
    return lines


def gen_line(n: int, origin: Vertex | tuple[int, int] = (0, 0)) -> frozenset[Cell]:
    if n < 1:
        raise ValueError("a line needs at least one cell")
    ox, oy = origin
    return frozenset(Cell(ox + i, oy) for i in range(n))


@dataclass(frozen=True)
class EscalierParams:
    """Either a simple staircase (``n``) or a staircase with landing (``g, p, d``)."""

    n: int | None = None
    g: int | None = None
    p: int | None = None
    d: int | None = None

    def __post_init__(self):
        if self.n is not None:
            if any(v is not None for v in (self.g, self.p, self.d)):
                raise ValueError("give either n or (g, p, d), not both")
            if self.n < 2:
                raise ValueError("simple staircase needs n >= 2")
        else:
            if None in (self.g, self.p, self.d):
                raise ValueError("landing staircase needs g, p and d")
            if min(self.g, self.p, self.d) < 1:
                raise ValueError("g, p, d must all be >= 1")

    @classmethod
    def simple(cls, n: int) -> EscalierParams:
        return cls(n=n)

    @classmethod
    def palier(cls, g: int, p: int, d: int) -> EscalierParams:
        return cls(g=g, p=p, d=d)

    @property
    def is_simple(self) -> bool:
        return self.n is not None

    @property
    def size(self) -> int:
        return self.n if self.is_simple else self.g + self.p + self.d

    def __str__(self) -> str:
        if self.is_simple:
            return f"simple:{self.n}"
        return f"palier:{self.g},{self.p},{self.d}"

    @classmethod
    def parse(cls, text: str) -> EscalierParams:
        kind, _, rest = text.partition(":")
        try:
            values = [int(v) for v in rest.split(",")]
        except ValueError:
            raise ValueError(f"bad staircase spec {text!r}") from None
        if kind == "simple" and len(values) == 1:
            return cls.simple(*values)
        if kind == "palier" and len(values) == 3:
            return cls.palier(*values)
        raise ValueError(f"bad staircase spec {text!r}")


def escalier_parts(params: EscalierParams) -> dict[str, list[Cell]]:
    """Cells of a landing staircase grouped as left stairs, landing, right stairs.

    Each part is listed in descending order.  A simple staircase is returned as a
    single ``"G"`` part.
    """
    if params.is_simple:
        return {"G": [Cell(i, -i) for i in range(params.n)]}
    g, p, d = params.g, params.p, params.d
    return {
        "G": [Cell(i, -i) for i in range(g)],
        "P": [Cell(g + j, -g) for j in range(p)],
        "D": [Cell(g + p + k, -g - k - 1) for k in range(d)],
    }


def gen_escalier(params: EscalierParams) -> frozenset[Cell]:
    return frozenset(c for part in escalier_parts(params).values() for c in part)


def normalize(cells: Iterable[Cell]) -> frozenset[Cell]:
    """Translate so the bounding box's bottom-left cell is ``(0, 0)``."""
    cells = list(cells)
    if not cells:
        return frozenset()
    mx = min(c[0] for c in cells)
    my = min(c[1] for c in cells)
    return frozenset(Cell(c[0] - mx, c[1] - my) for c in cells)


def gen_random_4_connected(n: int, rng) -> frozenset[Cell]:
    """Grow a random 4-connected configuration of ``n`` cells from ``(0, 0)``.

    ``rng`` is a :class:`random.Random`; the result depends only on its state.
    """
    if n < 1:
        raise ValueError("need at least one cell")
    cells = [Cell(0, 0)]
    present = {cells[0]}
    while len(cells) < n:
        x, y = rng.choice(cells)
        dx, dy = rng.choice(_STEPS_4)
        c = Cell(x + dx, y + dy)
        if c not in present:
            present.add(c)
            cells.append(c)
    return frozenset(cells)
