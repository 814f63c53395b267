"""Exhaustive decision of (strong) stitchability for small configurations.

A search state is the set of diagonals already stitched (a bitmask) plus the
hole the needle last went down through.  Only unit back hops are explored, so
every completed path is a thread-minimal witness.  States proven to have no
completion are remembered and never expanded twice.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum

from .errors import BudgetExceeded, PreconditionError
from .grid import Cell, Vertex, sorted_cells
from .plan import Back, Diagonal, Front, Kind, StitchPlan, stitch_order


class Classification(str, Enum):
    STRONGLY_BRODABLE = "STRONGLY_BRODABLE"
    BRODABLE_ONLY = "BRODABLE_ONLY"
    NOT_BRODABLE = "NOT_BRODABLE"


@dataclass(frozen=True)
class SearchBudget:
    max_cells: int = 8
    max_states: int = 20_000_000
    time_limit: float | None = None  # seconds

    def __post_init__(self):
        if self.max_cells < 1 or self.max_states < 1:
            raise ValueError("budget limits must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time limit must be positive")

    @classmethod
    def from_env(cls, **overrides) -> SearchBudget:
        """Default budget, taking the time limit from ``CROSSPATH_TIME_LIMIT`` if set."""
        env = os.environ.get("CROSSPATH_TIME_LIMIT")
        if env and "time_limit" not in overrides:
            overrides["time_limit"] = float(env)
        return cls(**overrides)


_STEPS = ((1, 0), (-1, 0), (0, 1), (0, -1))


class _Enough(Exception):
    pass


class _Search:
    def __init__(self, cells, budget: SearchBudget):
        self.cells = sorted_cells(cells)
        if len(self.cells) > budget.max_cells:
            raise BudgetExceeded(f"{len(self.cells)} cells exceed the limit of {budget.max_cells}")
        self.budget = budget
        self.diagonals = []
        for cell in self.cells:
            self.diagonals += [Diagonal(cell, Kind.LOWER), Diagonal(cell, Kind.UPPER)]
        self.full = (1 << len(self.diagonals)) - 1

        by_vertex: dict[Vertex, list] = {}
        for d, diag in enumerate(self.diagonals):
            a, b = diag.endpoints()
            by_vertex.setdefault(a, []).append((d, a, b))
            by_vertex.setdefault(b, []).append((d, b, a))
        self.adjacent = {
            v: [Vertex(v.x + dx, v.y + dy) for dx, dy in _STEPS if (v.x + dx, v.y + dy) in by_vertex]
            for v in by_vertex
        }
        # (diagonal, entry, exit) reachable after the needle went down at v
        self.next_moves = {
            v: [move for u in self.adjacent[v] for move in by_vertex[u]] for v in by_vertex
        }
        self.dead: set = set()
        self.states = 0
        self.deadline = None if budget.time_limit is None else time.monotonic() + budget.time_limit

    def roots(self):
        for d in range(0, len(self.diagonals), 2):
            for entry in sorted(self.diagonals[d].endpoints()):
                yield d, entry

    def _tick(self):
        self.states += 1
        if self.states > self.budget.max_states:
            raise BudgetExceeded(f"more than {self.budget.max_states} search states")
        if self.deadline is not None and not self.states & 1023 and time.monotonic() > self.deadline:
            raise BudgetExceeded(f"time limit of {self.budget.time_limit}s reached")

    def _dfs(self, mask, v, start, path, closed, sink) -> bool:
        self._tick()
        if mask == self.full:
            if closed and start not in self.adjacent[v]:
                return False
            sink(list(path))
            return True
        key = (mask, v, start) if closed else (mask, v)
        if key in self.dead:
            return False
        found = False
        for d, entry, out in self.next_moves[v]:
            bit = 1 << d
            if mask & bit or (d & 1 and not mask & (bit >> 1)):
                continue
            path.append((d, entry))
            if self._dfs(mask | bit, out, start, path, closed, sink):
                found = True
            path.pop()
        if not found:
            self.dead.add(key)
        return found

    def run(self, closed: bool, limit: int | None, roots=None) -> list:
        found: list = []

        def sink(path):
            found.append(path)
            if limit is not None and len(found) >= limit:
                raise _Enough

        if not self.diagonals:
            return found
        try:
            for d, entry in roots if roots is not None else self.roots():
                a, b = self.diagonals[d].endpoints()
                self._dfs(1 << d, b if entry == a else a, entry, [(d, entry)], closed, sink)
        except _Enough:
            pass
        return found

    def to_plan(self, path, closed: bool) -> StitchPlan:
        moves: list = []
        for d, entry in path:
            if moves:
                moves.append(Back(moves[-1].exit, entry))
            moves.append(Front(self.diagonals[d], entry))
        if closed and moves:
            moves.append(Back(moves[-1].exit, moves[0].entry))
        return StitchPlan(moves, closed=closed)


def _search_root(args):
    cells, closed, budget, root = args
    search = _Search(cells, budget)
    return search.run(closed, 1, roots=[root])


def find_witness(cells, closed: bool, budget: SearchBudget | None = None,
                 jobs: int = 1) -> StitchPlan | None:
    """A thread-minimal plan (closed or open), or None when none exists.

    ``None`` is definitive: running out of budget raises :class:`BudgetExceeded`
    instead.  With ``jobs > 1`` the roots are searched in worker processes and
    the witness of the first successful root (in root order) is returned.
    """
    budget = budget or SearchBudget()
    search = _Search(cells, budget)
    if jobs <= 1:
        paths = search.run(closed, 1)
    else:
        roots = list(search.roots())
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = pool.map(_search_root, [(search.cells, closed, budget, r) for r in roots])
            paths = next((r for r in results if r), [])
    return search.to_plan(paths[0], closed) if paths else None


def enumerate_witnesses(cells, closed: bool, limit: int | None = None,
                        budget: SearchBudget | None = None) -> list[StitchPlan]:
    """All thread-minimal plans up to ``limit``, in a fixed deterministic order."""
    search = _Search(cells, budget or SearchBudget())
    return [search.to_plan(p, closed) for p in search.run(closed, limit)]


def classify(cells, budget: SearchBudget | None = None, jobs: int = 1) -> Classification:
    if find_witness(cells, True, budget, jobs) is not None:
        return Classification.STRONGLY_BRODABLE
    if find_witness(cells, False, budget, jobs) is not None:
        return Classification.BRODABLE_ONLY
    return Classification.NOT_BRODABLE


def _lemma_forbidden_vertices(top: Cell) -> set[tuple[int, int]]:
    x, y = top
    a, d = (x, y + 1), (x + 1, y)  # the top cell's upper diagonal
    b, c = (x, y), (x + 1, y + 1)  # its lower diagonal
    near = {a, b, c, d}
    for vx, vy in (a, b, c, d):
        near |= {(vx + dx, vy + dy) for dx, dy in _STEPS}
    return near


def lemma_pattern_cell(cells) -> Cell | None:
    """First cell ``T`` (canonical order) at the top-left end of a descending step.

    The step is ``T`` together with ``S = T + (1, -1)``; no other cell may have a
    corner near the diagonals of ``T`` (within one unit of any corner of ``T``
    or of the hole that ``T`` and ``S`` share).
    """
    cells = frozenset(cells)
    for top in sorted_cells(cells):
        step = Cell(top.x + 1, top.y - 1)
        if step not in cells:
            continue
        near = _lemma_forbidden_vertices(top)
        if all(c in (top, step) or not (set(c.vertices()) & near) for c in cells):
            return top
    return None


def check_lemma_escalier(cells, closed: bool = False, budget: SearchBudget | None = None) -> bool:
    """Check the top-of-staircase ordering claims on every minimal witness.

    With ``T`` the matched top cell and ``S`` the next step down, every witness
    of ``n`` cells must stitch ``T``'s upper diagonal 2nd or last; when 2nd,
    ``T``'s lower is 1st and ``S``'s lower 3rd; when last, ``T``'s lower is
    second to last and ``S``'s upper third to last.
    """
    top = lemma_pattern_cell(cells)
    if top is None:
        raise PreconditionError("configuration has no isolated descending step at its top")
    step = Cell(top.x + 1, top.y - 1)
    n = len(frozenset(cells))
    for plan in enumerate_witnesses(cells, closed, budget=budget):
        order = stitch_order(plan)
        i = order[Diagonal(top, Kind.UPPER)]
        if i == 2:
            ok = order[Diagonal(top, Kind.LOWER)] == 1 and order[Diagonal(step, Kind.LOWER)] == 3
        elif i == 2 * n:
            ok = (order[Diagonal(top, Kind.LOWER)] == 2 * n - 1
                  and order[Diagonal(step, Kind.UPPER)] == 2 * n - 2)
        else:
            ok = False
        if not ok:
            return False
    return True
