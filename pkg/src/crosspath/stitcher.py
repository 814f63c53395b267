"""Thread-minimal closed stitching of 4-connected configurations.

The configuration is consumed one maximal horizontal run at a time.  Each run
is stitched with a line model whose start matches the hole the needle is in;
at every later piercing of that run the stitcher looks for a new run on the
far side of the pierced hole and splices its plan in on the spot.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import StitchError
from .grid import Cell, Line, Vertex, components_4, maximal_run, sorted_cells
from .lines import ModelId, corner_contact_vertex, generate_model, select_model
from .plan import FROM_BACK, FROM_FRONT, Front, StitchPlan


class Side(str, Enum):
    ABOVE = "above"
    BELOW = "below"


@dataclass(frozen=True)
class StitchTask:
    vertex: Vertex
    side: Side
    move: object = None  # move whose completion pierces ``vertex``; None for the root
    recurse: bool = True


@dataclass(frozen=True)
class LineRun:
    """Which model stitched which run, recorded when a ``trace`` list is passed."""

    line: Line
    model: ModelId
    k: int | None


@dataclass
class StitchStats:
    pushes: int = 0
    pops: int = 0


def find_line(remaining, vertex: Vertex, side: Side) -> Line | None:
    """Maximal run of remaining cells on ``side`` of ``vertex`` that touches it."""
    row = vertex.y if side is Side.ABOVE else vertex.y - 1
    for x in (vertex.x - 1, vertex.x):
        if (x, row) in remaining:
            return maximal_run(remaining, Cell(x, row))
    return None


def _plan_line(remaining: set, vertex: Vertex, side: Side, direction, restricted: bool, trace):
    line = find_line(remaining, vertex, side)
    if line is None:
        return None
    choice = select_model(line, vertex, direction)
    if choice is None:
        return None
    model, k = choice
    remaining.difference_update(line.cells())
    if trace is not None:
        trace.append(LineRun(line, model, k))
    skip = corner_contact_vertex(model, line) if restricted else None
    moves = generate_model(model, line, k).moves
    tasks = []
    for idx, move in enumerate(moves):
        pierced = move.exit if isinstance(move, Front) else move.target
        tasks.append(StitchTask(
            pierced,
            Side.ABOVE if pierced.y == line.row + 1 else Side.BELOW,
            move,
            # the closing move lands in the hole shared with the caller
            recurse=idx < len(moves) - 1 and pierced != skip,
        ))
    return tasks


def _check_start(cells: frozenset, start) -> Cell:
    if start is None:
        if not cells:
            raise StitchError("empty configuration has no start cell")
        return sorted_cells(cells)[0]
    start = Cell(*start)
    if start not in cells:
        raise StitchError(f"{start} is not in the configuration")
    return start


def _direction_after(moves: list):
    return FROM_FRONT if moves and isinstance(moves[-1], Front) else FROM_BACK


def _recursive(cells, start, restricted: bool, trace) -> StitchPlan:
    cells = frozenset(cells)
    start = _check_start(cells, start)
    remaining = set(cells)
    out: list = []

    def stitch_side(vertex: Vertex, side: Side) -> None:
        tasks = _plan_line(remaining, vertex, side, _direction_after(out), restricted, trace)
        for task in tasks or ():
            out.append(task.move)
            if task.recurse:
                stitch_side(task.vertex, task.side)

    stitch_side(Vertex(start.x, start.y), Side.ABOVE)
    return StitchPlan(out, closed=True)


def _iterative(cells, start, restricted: bool, trace, stats) -> StitchPlan:
    cells = frozenset(cells)
    start = _check_start(cells, start)
    remaining = set(cells)
    stats = stats if stats is not None else StitchStats()
    out: list = []
    stack = [StitchTask(Vertex(start.x, start.y), Side.ABOVE)]
    stats.pushes += 1
    while stack:
        task = stack.pop()
        stats.pops += 1
        if task.move is not None:
            out.append(task.move)
        if not task.recurse:
            continue
        tasks = _plan_line(remaining, task.vertex, task.side, _direction_after(out), restricted, trace)
        if tasks:
            stack.extend(reversed(tasks))
            stats.pushes += len(tasks)
    return StitchPlan(out, closed=True)


def stitch_recursive(cells, start=None, *, trace: list | None = None) -> StitchPlan:
    """Closed minimal plan starting at the bottom-left hole of ``start``.

    For a 4-connected configuration every cell is stitched.  Otherwise the plan
    covers the start cell's 4-component and possibly some corner-touching cells.
    """
    return _recursive(cells, start, False, trace)


def stitch_iterative(cells, start=None, *, trace: list | None = None,
                     stats: StitchStats | None = None) -> StitchPlan:
    """Explicit-stack version of :func:`stitch_recursive`; identical output."""
    return _iterative(cells, start, False, trace, stats)


def stitch_component_restricted(cells, start=None, *, engine: str = "iterative",
                                trace: list | None = None) -> StitchPlan:
    """Like :func:`stitch_recursive` but never crosses a corner-only contact."""
    if engine == "recursive":
        return _recursive(cells, start, True, trace)
    return _iterative(cells, start, True, trace, None)


def stitch_all_components(cells, *, engine: str = "iterative") -> list[StitchPlan]:
    """One closed minimal plan per 4-component, i.e. one thread per component."""
    cells = frozenset(cells)
    return [
        stitch_component_restricted(cells, sorted_cells(part)[0], engine=engine)
        for part in components_4(cells)
    ]
