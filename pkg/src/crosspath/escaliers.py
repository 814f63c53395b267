"""Closed-form answers and explicit witnesses for the staircase families.

``E_n`` is ``n`` cells descending to the right with corner contact only;
``E_{g,p,d}`` is a staircase of ``g`` cells, a horizontal landing of ``p``
cells, then a staircase of ``d`` cells.
"""

from __future__ import annotations

from .errors import NotConstructible
from .grid import Cell, EscalierParams, Vertex, escalier_parts
from .oracle import Classification
from .plan import Back, Diagonal, Front, Kind, StitchPlan, reflect

STRONG = Classification.STRONGLY_BRODABLE
ONLY = Classification.BRODABLE_ONLY
NOT = Classification.NOT_BRODABLE


def _as_simple(params: EscalierParams) -> EscalierParams:
    if not params.is_simple and params.p == 1:
        return EscalierParams.simple(params.g + params.d + 1)
    return params


def predict_escalier(params: EscalierParams) -> Classification:
    params = _as_simple(params)
    if params.is_simple:
        return STRONG if params.n == 2 else ONLY
    g, p, d = params.g, params.p, params.d
    if g == 1 and d == 1:
        return STRONG
    if g == 1 or d == 1:
        return ONLY
    return ONLY if p % 2 else NOT


class _Builder:
    """Appends front moves, inserting the unit back hop in between."""

    def __init__(self):
        self.moves: list = []

    def stitch(self, cell: Cell, kind: Kind, entry: tuple[int, int]) -> None:
        entry = Vertex(*entry)
        if self.moves:
            self.moves.append(Back(self.moves[-1].exit, entry))
        self.moves.append(Front(Diagonal(cell, kind), entry))

    def descend(self, cells) -> None:
        # per cell: bottom-left, top-right, top-left, bottom-right
        for c in cells:
            self.stitch(c, Kind.LOWER, (c.x, c.y))
            self.stitch(c, Kind.UPPER, (c.x, c.y + 1))

    def plan(self, closed: bool) -> StitchPlan:
        moves = list(self.moves)
        if closed:
            moves.append(Back(moves[-1].exit, moves[0].entry))
        return StitchPlan(moves, closed=closed)


def _simple_plan(n: int) -> StitchPlan:
    cells = [Cell(i, -i) for i in range(n)]
    b = _Builder()
    if n == 2:
        top, step = cells
        b.stitch(top, Kind.LOWER, (1, 1))
        b.stitch(top, Kind.UPPER, (0, 1))
        b.stitch(step, Kind.LOWER, (2, 0))
        b.stitch(step, Kind.UPPER, (2, -1))
        return b.plan(closed=True)
    b.descend(cells)
    return b.plan(closed=False)


def _landing_in_pairs(g: int, p: int, d: int) -> StitchPlan:
    parts = escalier_parts(EscalierParams.palier(g, p, d))
    landing = parts["P"]
    b = _Builder()
    b.descend(parts["G"])
    # two landing cells at a time, finishing down through the second one's bottom-left
    for j in range(0, p - 1, 2):
        left, right = landing[j], landing[j + 1]
        b.stitch(left, Kind.LOWER, (left.x, left.y))
        b.stitch(right, Kind.LOWER, (right.x, right.y))
        b.stitch(right, Kind.UPPER, (right.x + 1, right.y))
        b.stitch(left, Kind.UPPER, (left.x, left.y + 1))
    b.descend([landing[-1]] + parts["D"])
    return b.plan(closed=False)


def _single_right_step(g: int, p: int) -> StitchPlan:
    parts = escalier_parts(EscalierParams.palier(g, p, 1))
    landing, (last,) = parts["P"], parts["D"]
    b = _Builder()
    b.descend(parts["G"])
    for j, c in enumerate(landing, start=1):
        if j % 2:
            b.stitch(c, Kind.LOWER, (c.x + 1, c.y + 1))
        else:
            b.stitch(c, Kind.LOWER, (c.x, c.y))
    b.stitch(landing[-1], Kind.UPPER, (landing[-1].x, landing[-1].y + 1))
    b.stitch(last, Kind.LOWER, (last.x + 1, last.y + 1))
    b.stitch(last, Kind.UPPER, (last.x + 1, last.y))
    for c in reversed(landing[:-1]):
        b.stitch(c, Kind.UPPER, (c.x + 1, c.y))
    return b.plan(closed=g == 1)


def constructive_escalier_plan(params: EscalierParams) -> StitchPlan:
    """Explicit witness of the predicted class: closed when strongly stitchable, else open."""
    prediction = predict_escalier(params)
    if prediction is NOT:
        raise NotConstructible(f"{params} cannot be stitched with minimal thread")
    params = _as_simple(params)
    if params.is_simple:
        return _simple_plan(params.n)
    g, p, d = params.g, params.p, params.d
    if d == 1:
        return _single_right_step(g, p)
    if g == 1 and p % 2 == 0:
        # half turn of the mirror-image family E_{d,p,1}
        return reflect(_single_right_step(d, p), d + p + 1, -d)
    return _landing_in_pairs(g, p, d)
