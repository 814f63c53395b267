"""Exact lengths of the form a + b*sqrt(2) with non-negative integers a, b."""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
import math


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


@total_ordering
@dataclass(frozen=True)
class Len:
    units: int = 0
    diag_units: int = 0

    def __post_init__(self):
        if self.units < 0 or self.diag_units < 0:
            raise ValueError("Len components must be non-negative")

    def __add__(self, other: Len) -> Len:
        if not isinstance(other, Len):
            return NotImplemented
        return Len(self.units + other.units, self.diag_units + other.diag_units)

    def _cmp(self, other: Len) -> int:
        # sign of (a1 - a2) + (b1 - b2)*sqrt2, decided without floats
        da = self.units - other.units
        db = self.diag_units - other.diag_units
        sa, sb = _sign(da), _sign(db)
        if sa == sb or sb == 0:
            return sa
        if sa == 0:
            return sb
        # opposite signs: compare squares
        return sa * _sign(da * da - 2 * db * db)

    def __lt__(self, other: Len) -> bool:
        if not isinstance(other, Len):
            return NotImplemented
        return self._cmp(other) < 0

    def __float__(self) -> float:
        return self.units + self.diag_units * math.sqrt(2)

    def __str__(self) -> str:
        if self.diag_units == 0:
            return str(self.units)
        root = "√2" if self.diag_units == 1 else f"{self.diag_units}√2"
        return root if self.units == 0 else f"{self.units} + {root}"

    @classmethod
    def of_hop(cls, dx: int, dy: int) -> Len | None:
        """Euclidean length of a lattice displacement, or None if not a + b*sqrt2."""
        dx, dy = abs(dx), abs(dy)
        if dx == 0 or dy == 0:
            return cls(dx + dy, 0)
        if dx == dy:
            return cls(0, dx)
        return None


ZERO = Len(0, 0)
