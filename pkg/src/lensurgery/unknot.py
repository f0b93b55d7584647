"""Budgeted unknot detection with replayable certificates.

A diagram is certified trivial by exhibiting a Reidemeister move
sequence ending in the crossingless one-component diagram.  The search
is a best-first walk over canonically deduplicated diagrams: decreasing
moves and triangle slides are always tried, and bigon insertions are
allowed within a small crossing headroom to escape local minima.

Verdicts are three-valued.  "no" is only returned on the strength of an
invariant (component count, determinant, Alexander polynomial, and for
small diagrams the Jones polynomial), so it is conclusive; a failed
search within budget yields "unknown", never "no".
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field

from .diagram import PlanarDiagram
from .invariants import (LaurentPoly, alexander_polynomial, determinant,
                         jones_polynomial)
from .moves import (MoveDesc, apply_move, r1_removal_sites,
                    r2_addition_sites, r2_removal_sites, r3_sites)


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 30000
    headroom: int = 2
    jones_cap: int = 16

    def __post_init__(self):
        if self.max_nodes < 1 or self.headroom < 0 or self.jones_cap < 0:
            raise ValueError("budget fields must be positive")

    def to_dict(self) -> dict:
        return {"max_nodes": self.max_nodes, "headroom": self.headroom,
                "jones_cap": self.jones_cap}

    @classmethod
    def from_dict(cls, data: dict) -> "SearchBudget":
        return cls(**data)


@dataclass(frozen=True)
class Certificate:
    """A replayable move sequence taking `start` to the round unknot."""
    start: str                      # PD text of the initial diagram
    moves: tuple[MoveDesc, ...]

    def replay(self) -> PlanarDiagram:
        d = PlanarDiagram.from_text(self.start)
        for desc in self.moves:
            d = apply_move(d, desc)
        return d

    def is_valid_for(self, diagram: PlanarDiagram) -> bool:
        if PlanarDiagram.from_text(self.start) != diagram.normalized():
            return False
        final = self.replay()
        return final.crossing_count == 0 and final.component_count == 1

    def to_dict(self) -> dict:
        return {"start": self.start,
                "moves": [list(m) for m in self.moves]}

    @classmethod
    def from_dict(cls, data: dict) -> "Certificate":
        return cls(start=data["start"],
                   moves=tuple(tuple(m) for m in data["moves"]))


_JONES_UNKNOT = LaurentPoly.one()


def _search(d0: PlanarDiagram, budget: SearchBudget)\
        -> tuple[MoveDesc, ...] | None:
    counter = itertools.count()
    pq = [(d0.crossing_count, next(counter), d0, ())]
    seen = {d0.canonical_code}
    best = d0.crossing_count
    nodes = 0
    while pq and nodes < budget.max_nodes:
        _, _, d, path = heapq.heappop(pq)
        nodes += 1
        if d.crossing_count == 0:
            return path
        best = min(best, d.crossing_count)
        moves = r1_removal_sites(d) + r2_removal_sites(d) + r3_sites(d)
        if d.crossing_count + 2 <= best + budget.headroom:
            moves += r2_addition_sites(d)
        for desc in moves:
            try:
                nd = apply_move(d, desc)
            except Exception:
                continue
            code = nd.canonical_code
            if code in seen:
                continue
            seen.add(code)
            heapq.heappush(pq, (nd.crossing_count, next(counter), nd,
                                path + (desc,)))
    return None


def unknot_status(diagram: PlanarDiagram,
                  budget: SearchBudget = SearchBudget())\
        -> tuple[str, Certificate | None]:
    """("yes", certificate) | ("no", None) | ("unknown", None)."""
    if diagram.component_count != 1:
        return "no", None
    if diagram.crossing_count == 0:
        return "yes", Certificate(diagram.normalized().to_text(), ())
    if determinant(diagram) != 1:
        return "no", None
    if alexander_polynomial(diagram) != LaurentPoly.one():
        return "no", None
    if diagram.crossing_count <= budget.jones_cap \
            and jones_polynomial(diagram) != _JONES_UNKNOT:
        return "no", None
    start = diagram.normalized()
    path = _search(start, budget)
    if path is None:
        return "unknown", None
    cert = Certificate(start.to_text(), path)
    return "yes", cert
