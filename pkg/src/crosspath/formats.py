"""Text formats: '#'/'.' grid pictures and JSON plan records."""

from __future__ import annotations

import json
from collections.abc import Iterable

from .errors import GridFormatError, SchemaViolation
from .grid import Cell, Vertex, normalize
from .plan import Back, Diagonal, Front, Kind, StitchPlan

RECORD_VERSION = 1


def parse_grid(text: str) -> frozenset[Cell]:
    """Cells marked '#'; the first line of ``text`` is the top row."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    height = len(lines)
    cells = set()
    for row, line in enumerate(lines):
        for col, ch in enumerate(line):
            if ch == "#":
                cells.add(Cell(col, height - 1 - row))
            elif ch != ".":
                raise GridFormatError(row + 1, col + 1, ch)
    return frozenset(cells)


def emit_grid(cells: Iterable[Cell]) -> str:
    cells = normalize(cells)
    if not cells:
        return ""
    width = max(c.x for c in cells) + 1
    height = max(c.y for c in cells) + 1
    rows = (
        "".join("#" if (x, y) in cells else "." for x in range(width))
        for y in range(height - 1, -1, -1)
    )
    return "\n".join(rows) + "\n"


def _move_record(move) -> dict:
    if isinstance(move, Front):
        d = move.diagonal
        return {"front": {"cell": list(d.cell), "kind": d.kind.value, "entry": list(move.entry)}}
    return {"back": {"from": list(move.source), "to": list(move.target)}}


def plan_to_dict(plan: StitchPlan) -> dict:
    return {
        "version": RECORD_VERSION,
        "closed": plan.closed,
        "moves": [_move_record(m) for m in plan.moves],
    }


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":")) + "\n"


def plan_to_record(plan: StitchPlan) -> str:
    return _dump(plan_to_dict(plan))


def plans_to_record(plans: Iterable[StitchPlan]) -> str:
    """Several plans in one document (one per component)."""
    return _dump({"version": RECORD_VERSION, "plans": [plan_to_dict(p) for p in plans]})


def _point(value, path: str) -> tuple[int, int]:
    if (not isinstance(value, list) or len(value) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in value)):
        raise SchemaViolation(path, "expected a pair of integers")
    return value[0], value[1]


def _object(value, path: str, keys: set) -> dict:
    if not isinstance(value, dict):
        raise SchemaViolation(path, "expected an object")
    missing = keys - value.keys()
    if missing:
        raise SchemaViolation(f"{path}.{sorted(missing)[0]}", "missing field")
    extra = value.keys() - keys
    if extra:
        raise SchemaViolation(f"{path}.{sorted(extra)[0]}", "unknown field")
    return value


def _move(value, path: str):
    if not isinstance(value, dict) or len(value) != 1:
        raise SchemaViolation(path, "expected exactly one of 'front' or 'back'")
    (tag, body), = value.items()
    path = f"{path}.{tag}"
    if tag == "front":
        body = _object(body, path, {"cell", "kind", "entry"})
        try:
            kind = Kind(body["kind"])
        except ValueError:
            raise SchemaViolation(f"{path}.kind", "expected 'lower' or 'upper'") from None
        diag = Diagonal(Cell(*_point(body["cell"], f"{path}.cell")), kind)
        entry = Vertex(*_point(body["entry"], f"{path}.entry"))
        if entry not in diag.endpoints():
            raise SchemaViolation(f"{path}.entry", "not an endpoint of the diagonal")
        return Front(diag, entry)
    if tag == "back":
        body = _object(body, path, {"from", "to"})
        return Back(Vertex(*_point(body["from"], f"{path}.from")),
                    Vertex(*_point(body["to"], f"{path}.to")))
    raise SchemaViolation(path, "expected 'front' or 'back'")


def _check_version(doc, path: str) -> None:
    if doc.get("version") != RECORD_VERSION:
        raise SchemaViolation(f"{path}.version", f"unsupported version {doc.get('version')!r}")


def plan_from_dict(doc, path: str = "$") -> StitchPlan:
    if not isinstance(doc, dict):
        raise SchemaViolation(path, "expected an object")
    _check_version(doc, path)
    doc = _object(doc, path, {"version", "closed", "moves"})
    if not isinstance(doc["closed"], bool):
        raise SchemaViolation(f"{path}.closed", "expected a boolean")
    if not isinstance(doc["moves"], list):
        raise SchemaViolation(f"{path}.moves", "expected a list")
    moves = [_move(m, f"{path}.moves[{i}]") for i, m in enumerate(doc["moves"])]
    return StitchPlan(moves, closed=doc["closed"])


def _load(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaViolation("$", f"not JSON ({exc.msg})") from None


def plan_from_record(text: str) -> StitchPlan:
    return plan_from_dict(_load(text))


def plans_from_record(text: str) -> list[StitchPlan]:
    """Accept either a single plan record or a multi-plan document."""
    doc = _load(text)
    if isinstance(doc, dict) and "plans" in doc:
        _check_version(doc, "$")
        doc = _object(doc, "$", {"version", "plans"})
        if not isinstance(doc["plans"], list):
            raise SchemaViolation("$.plans", "expected a list")
        return [plan_from_dict(p, f"$.plans[{i}]") for i, p in enumerate(doc["plans"])]
    return [plan_from_dict(doc)]
