"""Planar diagrams of knots and links.

A diagram is stored as a list of crossings in PD notation.  Each crossing
is a 4-tuple of arc labels listed counterclockwise around the crossing,
with the two ends of the understrand at positions 0 and 2 and the two
ends of the overstrand at positions 1 and 3.  Every arc label appears
exactly twice in the whole diagram.  Circles with no crossings at all are
counted separately in ``free_loops``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

Crossing = tuple[int, int, int, int]
Slot = tuple[int, int]  # (crossing index, position 0..3)


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class PlanarDiagram:
    crossings: tuple[Crossing, ...]
    free_loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "crossings",
                           tuple(tuple(int(a) for a in c) for c in self.crossings))
        if self.free_loops < 0:
            raise DiagramError("free_loops must be nonnegative")
        counts: dict[int, int] = {}
        for c in self.crossings:
            if len(c) != 4:
                raise DiagramError(f"crossing {c} is not a 4-tuple")
            for a in c:
                counts[a] = counts.get(a, 0) + 1
        bad = [a for a, n in counts.items() if n != 2]
        if bad:
            raise DiagramError(f"arcs {sorted(bad)} do not appear exactly twice")

    # -- basic structure ------------------------------------------------

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @cached_property
    def arcs(self) -> tuple[int, ...]:
        return tuple(sorted({a for c in self.crossings for a in c}))

    @cached_property
    def incidence(self) -> dict[int, list[Slot]]:
        out: dict[int, list[Slot]] = {}
        for ci, c in enumerate(self.crossings):
            for pos, a in enumerate(c):
                out.setdefault(a, []).append((ci, pos))
        return out

    def other_end(self, arc: int, slot: Slot) -> Slot:
        s, t = self.incidence[arc]
        return t if slot == s else s

    # -- traversal ------------------------------------------------------

    @cached_property
    def components(self) -> tuple[tuple[Slot, ...], ...]:
        """Strand components with crossings, as cycles of entry slots."""
        seen: set[Slot] = set()
        comps = []
        for ci in range(len(self.crossings)):
            for pos in range(4):
                start = (ci, pos)
                if start in seen:
                    continue
                cycle = []
                slot = start
                while slot not in seen:
                    seen.add(slot)
                    cycle.append(slot)
                    ei, epos = slot[0], (slot[1] + 2) % 4
                    seen.add((ei, epos))
                    arc = self.crossings[ei][epos]
                    slot = self.other_end(arc, (ei, epos))
                comps.append(tuple(cycle))
        return tuple(comps)

    @property
    def component_count(self) -> int:
        return len(self.components) + self.free_loops

    @cached_property
    def orientations(self) -> dict[Slot, str]:
        """Each slot marked 'in' or 'out' for a fixed traversal direction."""
        marks: dict[Slot, str] = {}
        for cycle in self.components:
            for slot in cycle:
                marks[slot] = "in"
                marks[(slot[0], (slot[1] + 2) % 4)] = "out"
        return marks

    @cached_property
    def signs(self) -> tuple[int, ...]:
        """Crossing signs for the traversal orientation of each component."""
        marks = self.orientations
        out = []
        for ci in range(len(self.crossings)):
            under_in = 0 if marks[(ci, 0)] == "in" else 2
            over_in = 1 if marks[(ci, 1)] == "in" else 3
            out.append(1 if over_in == (under_in + 3) % 4 else -1)
        return tuple(out)

    @property
    def writhe(self) -> int:
        return sum(self.signs)

    # -- faces ----------------------------------------------------------

    @cached_property
    def faces(self) -> tuple[tuple[Slot, ...], ...]:
        """Faces as cycles of corners.

        Corner (ci, k) sits between positions k and (k+1) of crossing ci.
        The successor of a corner is found by walking along the arc at
        position k and turning counterclockwise at the far end.
        """
        seen: set[Slot] = set()
        faces = []
        for ci in range(len(self.crossings)):
            for k in range(4):
                if (ci, k) in seen:
                    continue
                cycle = []
                corner = (ci, k)
                while corner not in seen:
                    seen.add(corner)
                    cycle.append(corner)
                    arc = self.crossings[corner[0]][corner[1]]
                    cj, m = self.other_end(arc, corner)
                    corner = (cj, (m + 3) % 4)
                faces.append(tuple(cycle))
        return tuple(faces)

    def check_planar(self) -> None:
        """Euler-characteristic sanity check (connected diagrams only)."""
        n = len(self.crossings)
        if n == 0:
            return
        if len(self.faces) != n + 2 and self._is_connected():
            raise DiagramError("diagram fails the Euler face count")

    def _is_connected(self) -> bool:
        n = len(self.crossings)
        if n == 0:
            return True
        adj: dict[int, set[int]] = {i: set() for i in range(n)}
        for slots in self.incidence.values():
            (a, _), (b, _) = slots
            adj[a].add(b)
            adj[b].add(a)
        todo, seen = [0], {0}
        while todo:
            for j in adj[todo.pop()]:
                if j not in seen:
                    seen.add(j)
                    todo.append(j)
        return len(seen) == n

    # -- relabeling and canonical form ----------------------------------

    def relabel(self, mapping: dict[int, int]) -> "PlanarDiagram":
        return PlanarDiagram(
            tuple(tuple(mapping[a] for a in c) for c in self.crossings),
            self.free_loops)

    def normalized(self) -> "PlanarDiagram":
        """Relabel arcs to 1..n preserving label order."""
        mapping = {a: i + 1 for i, a in enumerate(self.arcs)}
        return self.relabel(mapping)

    def _encode_from(self, start: Slot, limit: tuple | None = None):
        """Traversal code from one starting slot; used by canonical_code.

        Stops early (returns None) as soon as the partial code exceeds
        ``limit`` lexicographically.
        """
        n = len(self.crossings)
        first_seen: dict[int, int] = {}
        first_pin: dict[int, int] = {}
        code = []
        slot = start
        for step in range(2 * n):
            ci, pin = slot
            if ci not in first_seen:
                first_seen[ci] = len(first_seen)
                first_pin[ci] = pin
                tok = (first_seen[ci], pin % 2, 0)
            else:
                spin = 1 if (pin - first_pin[ci]) % 4 == 1 else 2
                tok = (first_seen[ci], pin % 2, spin)
            code.append(tok)
            if limit is not None and code[:len(limit)] > list(limit[:len(code)]):
                return None
            epos = (pin + 2) % 4
            arc = self.crossings[ci][epos]
            slot = self.other_end(arc, (ci, epos))
        return tuple(code)

    @cached_property
    def canonical_code(self) -> tuple:
        """A label-independent code; equal codes mean equal diagrams.

        Only meaningful for connected one-component diagrams, which is
        all the unknot search needs.
        """
        if not self.crossings:
            return ("loops", self.free_loops)
        best = None
        for ci in range(len(self.crossings)):
            for pos in range(4):
                code = self._encode_from((ci, pos), best)
                if code is not None and (best is None or code < best):
                    best = code
        return ("pd", self.free_loops, best)

    # -- serialization ---------------------------------------------------

    def to_text(self) -> str:
        lines = [f"PD arcs={len(self.arcs)} components={self.component_count}"]
        for c in self.crossings:
            lines.append("X[%d,%d,%d,%d]" % c)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "PlanarDiagram":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("PD"):
            raise DiagramError("missing PD header")
        header: dict[str, int] = {}
        for tok in lines[0].split()[1:]:
            key, _, val = tok.partition("=")
            header[key] = int(val)
        crossings = []
        for ln in lines[1:]:
            if not (ln.startswith("X[") and ln.endswith("]")):
                raise DiagramError(f"bad crossing line: {ln!r}")
            parts = ln[2:-1].split(",")
            if len(parts) != 4:
                raise DiagramError(f"bad crossing line: {ln!r}")
            crossings.append(tuple(int(p) for p in parts))
        diagram = cls(tuple(crossings))
        want = header.get("components")
        if want is not None:
            loops = want - len(diagram.components)
            if loops < 0:
                raise DiagramError("header component count too small")
            diagram = cls(diagram.crossings, loops)
        if "arcs" in header and header["arcs"] != len(diagram.arcs):
            raise DiagramError("header arc count does not match")
        return diagram


UNKNOT = PlanarDiagram((), free_loops=1)


def trefoil() -> PlanarDiagram:
    return PlanarDiagram(((1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)))


def figure_eight() -> PlanarDiagram:
    return PlanarDiagram(((4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8)))
