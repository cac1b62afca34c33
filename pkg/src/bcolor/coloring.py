"""Edge colorings over a fixed palette."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .graph import Edge, canon


@dataclass
class EdgeColoring:
    palette_size: int
    assignment: dict[Edge, int] = field(default_factory=dict)

    def __getitem__(self, e: Edge) -> int:
        return self.assignment[canon(*e)]

    def __setitem__(self, e: Edge, color: int) -> None:
        if not 0 <= color < self.palette_size:
            raise ValueError(f"color {color} outside palette of {self.palette_size}")
        self.assignment[canon(*e)] = color

    def __contains__(self, e: object) -> bool:
        return e in self.assignment

    def __len__(self) -> int:
        return len(self.assignment)

    def get(self, e: Edge, default=None):
        return self.assignment.get(e, default)

    def items(self):
        return self.assignment.items()

    @property
    def colors_used(self) -> int:
        return len(set(self.assignment.values()))

    def permuted(self, perm: Mapping[int, int]) -> EdgeColoring:
        return EdgeColoring(
            self.palette_size, {e: perm[c] for e, c in self.assignment.items()}
        )
