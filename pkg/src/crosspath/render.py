"""Deterministic SVG views of a stitched pattern: front, back and piercing schema.

All coordinates are integers: grid units times ``scale`` pixels, with the y
axis flipped so that larger y is drawn higher.
"""

from __future__ import annotations

from .grid import Vertex, sorted_cells
from .plan import FROM_BACK, FROM_FRONT, Back, Kind, PiercingSchema, StitchPlan, validate

SCALE = 24
_MARGIN = 1


class _Canvas:
    def __init__(self, points, scale: int):
        points = list(points) or [Vertex(0, 0)]
        self.scale = scale
        self.x0 = min(p[0] for p in points) - _MARGIN
        self.y1 = max(p[1] for p in points) + _MARGIN
        self.width = (max(p[0] for p in points) + _MARGIN - self.x0) * scale
        self.height = (self.y1 - min(p[1] for p in points) + _MARGIN) * scale
        self.body: list[str] = []

    def xy(self, p) -> tuple[int, int]:
        return (p[0] - self.x0) * self.scale, (self.y1 - p[1]) * self.scale

    def line(self, a, b, cls: str) -> None:
        (x1, y1), (x2, y2) = self.xy(a), self.xy(b)
        self.body.append(f'<line class="{cls}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')

    def add(self, element: str) -> None:
        self.body.append(element)

    def document(self, style: str) -> str:
        head = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{self.width}" '
            f'height="{self.height}" viewBox="0 0 {self.width} {self.height}">\n'
            f"<style>{style}</style>\n"
        )
        return head + "".join(e + "\n" for e in self.body) + "</svg>\n"


def _vertices_of(cells):
    return [v for c in cells for v in c.vertices()]


def render_front(cells, plan: StitchPlan, scale: int = SCALE) -> str:
    """Crosses as seen on the front; the plan is only checked, not drawn."""
    validate(plan, cells)
    ordered = sorted_cells(cells)
    canvas = _Canvas(_vertices_of(ordered), scale)
    for c in ordered:
        x, y = canvas.xy((c.x, c.y + 1))
        canvas.add(f'<rect class="cell" x="{x}" y="{y}" width="{scale}" height="{scale}"/>')
    # every lower stroke first so that every upper stroke lies on top
    for kind in (Kind.LOWER, Kind.UPPER):
        for c in ordered:
            a, b = _diagonal(c, kind)
            canvas.line(a, b, kind.value)
    return canvas.document(
        ".cell{fill:none;stroke:#ccc}"
        ".lower{stroke:#b33;stroke-width:3}.upper{stroke:#d55;stroke-width:3}"
    )


def _diagonal(cell, kind: Kind):
    x, y = cell
    if kind is Kind.LOWER:
        return (x, y), (x + 1, y + 1)
    return (x, y + 1), (x + 1, y)


def render_back(plan: StitchPlan, scale: int = SCALE) -> str:
    """Reverse side: the back hops only, each labelled with its rank."""
    validate(plan, plan.cells())
    backs = [m for m in plan.moves if isinstance(m, Back)]
    canvas = _Canvas(_vertices_of(plan.cells()), scale)
    for i, m in enumerate(backs, start=1):
        canvas.line(m.source, m.target, "back")
        (x1, y1), (x2, y2) = canvas.xy(m.source), canvas.xy(m.target)
        canvas.add(f'<text class="order" x="{(x1 + x2) // 2}" y="{(y1 + y2) // 2}">{i}</text>')
    return canvas.document(
        ".back{stroke:#335;stroke-width:3}.order{font:10px sans-serif;fill:#000}"
    )


def render_schema(schema: PiercingSchema, scale: int = SCALE) -> str:
    """Circle where the needle comes up from the back, cross where it goes down."""
    canvas = _Canvas(schema.marks, scale)
    r = max(scale // 6, 2)
    for v in sorted(schema.marks, key=lambda v: (-v[1], v[0])):
        x, y = canvas.xy(v)
        if FROM_BACK in schema.marks[v]:
            canvas.add(f'<circle class="from-back" cx="{x}" cy="{y}" r="{r}"/>')
        if FROM_FRONT in schema.marks[v]:
            canvas.add(
                f'<g class="from-front"><line x1="{x - r}" y1="{y - r}" x2="{x + r}" y2="{y + r}"/>'
                f'<line x1="{x - r}" y1="{y + r}" x2="{x + r}" y2="{y - r}"/></g>'
            )
    if schema.start is not None:
        x, y = canvas.xy(schema.start[0])
        canvas.add(f'<circle class="start" cx="{x}" cy="{y}" r="{r // 2 + 1}"/>')
    return canvas.document(
        ".from-back{fill:none;stroke:#000}.from-front line{stroke:#000}.start{fill:#888}"
    )
