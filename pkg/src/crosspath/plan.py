"""Stitch plans: data model, legality checks, exact length accounting and gluing.

A plan alternates front moves (a diagonal stitched on the visible side of the
fabric) with back moves (a hop on the reverse side between two holes).  The
needle comes up through a front move's entry hole and goes down through its
exit hole.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import Enum
from typing import Union

from .errors import InvalidPlan, PlanOperationError
from .exact import Len, ZERO
from .grid import Cell, Vertex, sorted_cells


class Kind(str, Enum):
    LOWER = "lower"  # bottom-left to top-right, stitched first
    UPPER = "upper"  # top-left to bottom-right, lies on top


class Direction(str, Enum):
    FROM_BACK = "from_back"
    FROM_FRONT = "from_front"


FROM_BACK = Direction.FROM_BACK
FROM_FRONT = Direction.FROM_FRONT


class Witness(str, Enum):
    NONE = "NONE"
    OPEN_MINIMAL = "OPEN_MINIMAL"
    CLOSED_MINIMAL = "CLOSED_MINIMAL"


@dataclass(frozen=True)
class Diagonal:
    cell: Cell
    kind: Kind

    def endpoints(self) -> tuple[Vertex, Vertex]:
        x, y = self.cell
        if self.kind is Kind.LOWER:
            return Vertex(x, y), Vertex(x + 1, y + 1)
        return Vertex(x, y + 1), Vertex(x + 1, y)

    @property
    def color(self) -> int:
        """Checkerboard color shared by both endpoints."""
        v = self.endpoints()[0]
        return (v.x + v.y) % 2


@dataclass(frozen=True)
class Front:
    diagonal: Diagonal
    entry: Vertex

    def __post_init__(self):
        if self.entry not in self.diagonal.endpoints():
            raise ValueError(f"{self.entry} is not an endpoint of {self.diagonal}")

    @property
    def exit(self) -> Vertex:
        a, b = self.diagonal.endpoints()
        return b if self.entry == a else a


@dataclass(frozen=True)
class Back:
    source: Vertex
    target: Vertex

    @property
    def hop(self) -> Len | None:
        return Len.of_hop(self.target[0] - self.source[0], self.target[1] - self.source[1])


Move = Union[Front, Back]


def front(cell, kind: Kind, entry) -> Front:
    return Front(Diagonal(Cell(*cell), Kind(kind)), Vertex(*entry))


def back(source, target) -> Back:
    return Back(Vertex(*source), Vertex(*target))


@dataclass(frozen=True)
class StitchPlan:
    moves: tuple = ()
    closed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "moves", tuple(self.moves))

    def __len__(self) -> int:
        return len(self.moves)

    def cells(self) -> frozenset[Cell]:
        return frozenset(m.diagonal.cell for m in self.moves if isinstance(m, Front))

    def fronts(self) -> list[Front]:
        return [m for m in self.moves if isinstance(m, Front)]

    def piercings(self) -> list[tuple[Vertex, Direction]]:
        """Every hole the needle passes, in order, starting with the initial one."""
        out = []
        for m in self.moves:
            if isinstance(m, Front):
                if not out:
                    out.append((m.entry, FROM_BACK))
                out.append((m.exit, FROM_FRONT))
            else:
                if not out:
                    out.append((m.source, FROM_FRONT))
                out.append((m.target, FROM_BACK))
        return out

    def opened(self) -> StitchPlan:
        """Drop the closing back move, giving an open plan."""
        if not self.closed:
            return self
        moves = self.moves
        if moves and isinstance(moves[0], Back):
            moves = moves[1:]
        elif moves:
            moves = moves[:-1]
        return StitchPlan(moves, closed=False)


@dataclass(frozen=True)
class PiercingSchema:
    marks: dict = field(default_factory=dict)  # Vertex -> frozenset[Direction]
    start: tuple | None = None  # (Vertex, Direction)

    def __post_init__(self):
        if self.start is not None and self.start[1] not in self.marks.get(self.start[0], ()):
            raise ValueError("start direction must be among the start vertex's marks")


@dataclass(frozen=True)
class PlanReport:
    n_cells: int
    front_len: Len
    back_len: Len
    closed: bool
    witness: Witness


def _check_structure(i: int, move, prev, closed: bool) -> None:
    if prev is None:
        if isinstance(move, Back) and not closed:
            raise InvalidPlan("ALTERNATION_BROKEN", i, "open plan must start with a front move")
        return
    if type(move) is type(prev):
        raise InvalidPlan("ALTERNATION_BROKEN", i, "front and back moves must alternate")
    if isinstance(move, Back) and move.source != prev.exit:
        raise InvalidPlan("CHAIN_BROKEN", i, f"back move leaves {move.source}, needle is at {prev.exit}")
    if isinstance(move, Front) and move.entry != prev.target:
        raise InvalidPlan("CHAIN_BROKEN", i, f"front move enters {move.entry}, needle is at {prev.target}")


def validate(plan: StitchPlan, cells: Iterable[Cell]) -> PlanReport:
    """Check every legality rule and account for thread length exactly.

    Raises :class:`InvalidPlan` naming the first offending move.
    """
    cells = frozenset(cells)
    moves = plan.moves
    seen: set[Diagonal] = set()
    back_len = ZERO
    prev = None
    for i, move in enumerate(moves):
        _check_structure(i, move, prev, plan.closed)
        if isinstance(move, Back):
            if move.source == move.target:
                raise InvalidPlan("SAME_HOLE_TWICE", i, f"needle goes down and up through {move.source}")
            hop = move.hop
            if hop is None:
                raise InvalidPlan("UNREPRESENTABLE_BACK_HOP", i, f"{move.source} -> {move.target}")
            back_len = back_len + hop
        else:
            diag = move.diagonal
            if diag.cell not in cells or diag in seen:
                raise InvalidPlan("WRONG_DIAGONAL_SET", i, f"unexpected {diag.kind.value} diagonal of {diag.cell}")
            if diag.kind is Kind.UPPER and Diagonal(diag.cell, Kind.LOWER) not in seen:
                raise InvalidPlan("UPPER_BEFORE_LOWER", i, f"cell {diag.cell}")
            seen.add(diag)
        prev = move

    if moves:
        first, last = moves[0], moves[-1]
        if plan.closed:
            if type(first) is type(last):
                raise InvalidPlan("ALTERNATION_BROKEN", len(moves) - 1, "closed plan must have even length")
            if isinstance(last, Back) and last.target != first.entry:
                raise InvalidPlan("CHAIN_BROKEN", len(moves) - 1, "closed plan does not return to its start")
            if isinstance(last, Front) and last.exit != first.source:
                raise InvalidPlan("CHAIN_BROKEN", len(moves) - 1, "closed plan does not return to its start")
        elif isinstance(last, Back):
            raise InvalidPlan("ALTERNATION_BROKEN", len(moves) - 1, "open plan must end with a front move")

    if len(seen) != 2 * len(cells):
        missing = sorted_cells({c for c in cells for k in Kind if Diagonal(c, k) not in seen})
        raise InvalidPlan("WRONG_DIAGONAL_SET", None, f"cells not fully stitched: {missing[:5]}")

    n = len(cells)
    if plan.closed and back_len == Len(2 * n, 0):
        witness = Witness.CLOSED_MINIMAL
    elif not plan.closed and n > 0 and back_len == Len(2 * n - 1, 0):
        witness = Witness.OPEN_MINIMAL
    else:
        witness = Witness.NONE
    return PlanReport(n, Len(0, 2 * n), back_len, plan.closed, witness)


def thread_length(report: PlanReport) -> Len:
    return report.front_len + report.back_len


def extract_schema(plan: StitchPlan) -> PiercingSchema:
    marks: dict[Vertex, set] = {}
    piercings = plan.piercings()
    for v, direction in piercings:
        marks.setdefault(v, set()).add(direction)
    start = piercings[0] if piercings else None
    return PiercingSchema({v: frozenset(d) for v, d in marks.items()}, start)


def rotate_start(plan: StitchPlan, offset: int) -> StitchPlan:
    """Re-root a closed plan so that it begins with ``moves[offset]``.

    The result is a raw cyclic rotation and must be re-validated: only the
    one-step rotation that moves the closing back move to the front is
    guaranteed to keep every lower diagonal ahead of its upper one.
    """
    if not plan.closed:
        raise PlanOperationError("only closed plans can be rotated", "OPEN_PLAN")
    if not 0 <= offset < len(plan.moves):
        raise PlanOperationError(f"offset {offset} outside plan of {len(plan.moves)} moves", "BAD_OFFSET")
    return StitchPlan(plan.moves[offset:] + plan.moves[:offset], closed=True)


def glue(host: StitchPlan, guest: StitchPlan, anchor: tuple) -> StitchPlan:
    """Splice the closed ``guest`` into ``host`` where the host pierces ``anchor``."""
    vertex, direction = Vertex(*anchor[0]), Direction(anchor[1])
    if not guest.closed:
        raise PlanOperationError("guest plan must be closed", "ANCHOR_MISMATCH")
    guest_start = extract_schema(guest).start
    if guest_start != (vertex, direction):
        raise PlanOperationError(f"guest starts at {guest_start}, not {anchor}", "ANCHOR_MISMATCH")
    if host.cells() & guest.cells():
        raise PlanOperationError("host and guest share cells", "CONFIGS_OVERLAP")

    fronts = [(i, m) for i, m in enumerate(host.moves) if isinstance(m, Front)]
    if direction is FROM_BACK:
        hit = next((i for i, m in fronts if m.entry == vertex), None)
    else:
        hit = next((i + 1 for i, m in fronts if m.exit == vertex), None)
    if hit is None:
        if any(vertex in m.diagonal.endpoints() for _, m in fronts):
            raise PlanOperationError(f"host never pierces {vertex} {direction.value}", "ANCHOR_MISMATCH")
        raise PlanOperationError(f"host never pierces {vertex}", "ANCHOR_NOT_IN_HOST")
    moves = host.moves[:hit] + guest.moves + host.moves[hit:]
    return StitchPlan(moves, closed=host.closed)


def reflect(plan: StitchPlan, cx2: int, cy2: int) -> StitchPlan:
    """Central symmetry about the point ``(cx2/2, cy2/2)``; move order is kept."""

    def v(p):
        return Vertex(cx2 - p[0], cy2 - p[1])

    out = []
    for m in plan.moves:
        if isinstance(m, Back):
            out.append(Back(v(m.source), v(m.target)))
        else:
            cell = Cell(cx2 - m.diagonal.cell.x - 1, cy2 - m.diagonal.cell.y - 1)
            image = Diagonal(cell, m.diagonal.kind)
            a, b = m.diagonal.endpoints()
            if {v(a), v(b)} != set(image.endpoints()):
                raise AssertionError("half turn changed a diagonal's kind")
            out.append(Front(image, v(m.entry)))
    return StitchPlan(out, closed=plan.closed)


def checkerboard_alternates(plan: StitchPlan) -> bool:
    colors = [f.diagonal.color for f in plan.fronts()]
    return all(a != b for a, b in zip(colors, colors[1:]))


def stitch_order(plan: StitchPlan) -> dict[Diagonal, int]:
    """1-based position of each diagonal in the plan."""
    return {f.diagonal: i for i, f in enumerate(plan.fronts(), start=1)}
