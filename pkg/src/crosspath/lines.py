"""Closed stitch plans for a single horizontal line, one per piercing-schema model.

Vertices of an ``n``-cell line are numbered 1..n+1 from the left, on the bottom
row (``b_i``) and the top row (``t_i``).  Model 1 with parameter ``k`` starts at
``b_k``; the primed models are the degenerate ``k = 1`` versions.  Models 2
and 4 start with a back move (the thread first dives from the front), models
3 and 4 are half-turn images of models 1 and 2.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache

from .errors import ModelError
from .grid import Cell, Line, Vertex
from .plan import (
    FROM_BACK,
    FROM_FRONT,
    Back,
    Diagonal,
    Direction,
    Front,
    Kind,
    StitchPlan,
    reflect,
    rotate_start,
)


class ModelId(str, Enum):
    M1 = "M1"
    M2 = "M2"
    M3 = "M3"
    M4 = "M4"
    M1P = "M1P"
    M2P = "M2P"
    M3P = "M3P"
    M4P = "M4P"

    @property
    def primed(self) -> bool:
        return self.value.endswith("P")

    @property
    def family(self) -> int:
        return int(self.value[1])


# order in which the stitcher tries models at a piercing
MODEL_ORDER = (
    ModelId.M1P, ModelId.M1, ModelId.M2P, ModelId.M2,
    ModelId.M3P, ModelId.M3, ModelId.M4P, ModelId.M4,
)


def _check_k(model: ModelId, line: Line, k: int | None) -> None:
    n = line.length
    if model.primed:
        if k not in (None, 1):
            raise ModelError(f"{model.value} takes no k")
        return
    if k is None or not 2 <= k <= n:
        raise ModelError(f"{model.value} on a {n}-cell line needs k in 2..{n}, got {k}")


def _lower(line: Line, i: int) -> Diagonal:
    return Diagonal(Cell(line.x_start + i - 1, line.row), Kind.LOWER)


def _upper(line: Line, i: int) -> Diagonal:
    return Diagonal(Cell(line.x_start + i - 1, line.row), Kind.UPPER)


def _model_one(line: Line, k: int) -> StitchPlan:
    n, b, t = line.length, line.bottom, line.top
    moves: list = []

    def stitch(diag: Diagonal, entry: Vertex) -> None:
        if moves:
            moves.append(Back(moves[-1].exit, entry))
        moves.append(Front(diag, entry))

    if k == 1:
        # all lower diagonals left to right, then all upper ones right to left
        for i in range(1, n + 1):
            stitch(_lower(line, i), b(i))
        for i in range(n, 0, -1):
            stitch(_upper(line, i), b(i + 1))
    else:
        for i in range(k, n + 1):
            stitch(_lower(line, i), b(i))
        for i in range(n, k, -1):
            stitch(_upper(line, i), b(i + 1))
        # needle is down through t(k+1); come back up through t(k)
        for i in range(k - 1, 0, -1):
            stitch(_lower(line, i), t(i + 1))
        for i in range(1, k):
            stitch(_upper(line, i), t(i))
        stitch(_upper(line, k), b(k + 1))
    moves.append(Back(moves[-1].exit, moves[0].entry))
    return StitchPlan(moves, closed=True)


def generate_model(model: ModelId | str, line: Line, k: int | None = None) -> StitchPlan:
    """A closed, thread-minimal plan of ``line`` following the given model."""
    model = ModelId(model)
    _check_k(model, line, k)
    return _generate(model, line, None if model.primed else k)


@lru_cache(maxsize=4096)
def _generate(model: ModelId, line: Line, k: int | None) -> StitchPlan:
    base = _model_one(line, 1 if model.primed else k)
    if model.family in (2, 4):
        base = rotate_start(base, len(base.moves) - 1)
    if model.family in (3, 4):
        base = reflect(base, 2 * line.x_start + line.length, 2 * line.row + 1)
    return base


def model_start(model: ModelId | str, line: Line, k: int | None = None) -> tuple[Vertex, Direction]:
    model = ModelId(model)
    _check_k(model, line, k)
    n = line.length
    pos = 1 if model.primed else k
    mirrored = n + 2 - pos
    return {
        1: (line.bottom(pos), FROM_BACK),
        2: (line.top(pos), FROM_FRONT),
        3: (line.top(mirrored), FROM_BACK),
        4: (line.bottom(mirrored), FROM_FRONT),
    }[model.family]


def admissible(line: Line):
    """Every ``(model, k)`` pair valid on ``line``."""
    for model in MODEL_ORDER:
        if model.primed:
            yield model, None
        else:
            for k in range(2, line.length + 1):
                yield model, k


def select_model_scan(line: Line, vertex: Vertex, direction: Direction):
    """First ``(model, k)`` in :data:`MODEL_ORDER` starting at ``(vertex, direction)``."""
    for model, k in admissible(line):
        if model_start(model, line, k) == (vertex, direction):
            return model, k
    return None


def select_model(line: Line, vertex: Vertex, direction: Direction):
    """Same answer as :func:`select_model_scan`, read off the vertex position.

    At most one model starts at any given hole and direction, so the scan order
    never has to break a tie.
    """
    n = line.length
    i = vertex[0] - line.x_start + 1
    if vertex[1] == line.row:
        if direction is FROM_BACK and 1 <= i <= n:
            return (ModelId.M1P, None) if i == 1 else (ModelId.M1, i)
        if direction is FROM_FRONT and 2 <= i <= n + 1:
            return (ModelId.M4P, None) if i == n + 1 else (ModelId.M4, n + 2 - i)
    elif vertex[1] == line.row + 1:
        if direction is FROM_FRONT and 1 <= i <= n:
            return (ModelId.M2P, None) if i == 1 else (ModelId.M2, i)
        if direction is FROM_BACK and 2 <= i <= n + 1:
            return (ModelId.M3P, None) if i == n + 1 else (ModelId.M3, n + 2 - i)
    return None


def corner_contact_vertex(model: ModelId, line: Line) -> Vertex | None:
    """Corner at which a primed model can be glued to a diagonal-only neighbour."""
    n = line.length
    return {
        ModelId.M1P: line.top(1),
        ModelId.M2P: line.bottom(1),
        ModelId.M3P: line.bottom(n + 1),
        ModelId.M4P: line.top(n + 1),
    }.get(model)
