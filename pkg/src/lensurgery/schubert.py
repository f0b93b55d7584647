"""Pillowcase diagrams of two-bridge links and their wedge modifications.

The two-bridge link b(p, q) is drawn on the quotient of the torus
R^2/Z^2 by the elliptic involution v -> -v.  The quotient sphere is a
"pillowcase" with four cone points.  The two straight fixed arcs of one
handlebody descend to the two bridges (the horizontal folds of the
pillowcase), and the two invariant lines of slope p/q descend to the two
understrands, which bounce between the folds and cross the bridges
2(p-1) times in total.

All coordinates are exact fractions, so crossing positions, strand
directions and counterclockwise orderings are computed without any
floating point.

A "wedge" is one of the p segments the understrands cut the bottom
bridge into.  Modifying the diagram at the u-th wedge attaches a band
from the leftmost bottom segment to the understrand edge rising from the
u-th bottom crossing.  The band runs alongside the bottom bridge,
passing over the understrand edges in between, and is reattached either
flat (smoothing) or with a single half twist between its sides (the two
crossing modes).  The resulting diagrams are the two candidate branch
sets produced by replacing the tangle around the wedge.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd

from .diagram import DiagramError, PlanarDiagram, Slot
from .lens import LensParams

Point = tuple[Fraction, Fraction]

HALF = Fraction(1, 2)


# Frozen drawing and modification conventions.  Reports carry this tag so
# stored outputs are self-describing: bands attach on the bottom bridge
# through the left cone, run over the upper-front understrand edges, and
# reattach at the edge rising from the u-th bottom crossing.
CALIBRATION_ID = "pillowcase-band/left-cone-upper-front/v1"


class Mode(Enum):
    CROSSING_POS = "crossing+"
    CROSSING_NEG = "crossing-"
    SMOOTHING = "smoothing"


CROSSING_MODES = (Mode.CROSSING_POS, Mode.CROSSING_NEG)


@dataclass(frozen=True)
class _CrossingInfo:
    index: int            # PD crossing index
    arc: int              # understrand 0 or 1
    j: int                # step along the understrand, 1..p-1
    bridge: int           # 0 bottom, 1 top
    x: Fraction           # chart x coordinate of the crossing point
    front: bool           # x < 1/2
    k: int                # fold position: xi = k/(2p)


@dataclass(frozen=True)
class EdgeEnd:
    """A diagram edge together with the incidence playing the 'low' role."""
    arc: int
    low: Slot


@dataclass(frozen=True)
class WedgeSite:
    """Band attachment data for one wedge of a pillowcase diagram.

    attach_a is the bottom-bridge edge through the leftmost segment,
    attach_b the understrand edge rising from the u-th bottom crossing,
    and corridor lists the understrand edges the band passes over on the
    way, in order.
    """
    u: int
    attach_a: int
    attach_b: int
    corridor: tuple[int, ...]


class SchubertError(ValueError):
    pass


def _frac_mod1(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


class SchubertDiagram:
    """b(p, q) with enough bookkeeping to locate and modify wedges."""

    def __init__(self, p: int, q: int):
        if p < 2 or not 0 < q <= p // 2 or gcd(p, q) != 1:
            raise SchubertError(f"({p}, {q}) is not a canonical two-bridge pair")
        self.lens = LensParams(p, q)
        self.p, self.q = p, q
        self._build()

    # -- geometry ---------------------------------------------------------

    def _build(self) -> None:
        p, q = self.p, self.q
        cones = [(Fraction(0), Fraction(0)), (HALF, Fraction(0)),
                 (Fraction(0), HALF), (HALF, HALF)]
        c0 = (Fraction(0), Fraction(0))
        offset = (_frac_mod1(Fraction(q, 2)), _frac_mod1(Fraction(p, 2)))
        e0 = (_frac_mod1(c0[0] + offset[0]), _frac_mod1(c0[1] + offset[1]))
        rest = sorted(c for c in cones if c not in (c0, e0))
        c1 = rest[0]
        e1 = (_frac_mod1(c1[0] + offset[0]), _frac_mod1(c1[1] + offset[1]))
        starts = (c0, c1)
        ends = (e0, e1)

        crossings: list[_CrossingInfo] = []
        per_arc: list[list[_CrossingInfo]] = [[], []]
        for arc in (0, 1):
            cx, cy = starts[arc]
            for j in range(1, p):
                t = Fraction(j, 2 * p)
                y = _frac_mod1(cy + p * t)
                x = _frac_mod1(cx + q * t)
                if y not in (Fraction(0), HALF):
                    raise SchubertError("understrand step off the folds")
                xi = min(x, 1 - x)
                info = _CrossingInfo(
                    index=len(crossings), arc=arc, j=j,
                    bridge=0 if y == 0 else 1,
                    x=x, front=x < HALF, k=int(xi * 2 * p))
                crossings.append(info)
                per_arc[arc].append(info)

        by_bridge: list[list[_CrossingInfo]] = [[], []]
        for info in crossings:
            by_bridge[info.bridge].append(info)
        for b in (0, 1):
            by_bridge[b].sort(key=lambda c: c.k)
            if [c.k for c in by_bridge[b]] != list(range(1, p)):
                raise SchubertError("bridge crossings are not evenly spread")

        # endpoints of each element, used to walk the link
        bridge_ends = [((Fraction(0), Fraction(0)), (HALF, Fraction(0))),
                       ((Fraction(0), HALF), (HALF, HALF))]
        cone_of: dict[tuple[str, int, int], Point] = {}
        for arc in (0, 1):
            cone_of[("arc", arc, 0)] = starts[arc]
            cone_of[("arc", arc, 1)] = ends[arc]
        for b in (0, 1):
            cone_of[("bridge", b, 0)] = bridge_ends[b][0]
            cone_of[("bridge", b, 1)] = bridge_ends[b][1]
        at_cone: dict[Point, list[tuple[str, int, int]]] = {}
        for key, cone in cone_of.items():
            at_cone.setdefault(cone, []).append(key)
        if any(len(v) != 2 for v in at_cone.values()):
            raise SchubertError("cone points do not pair the strand ends")

        # traverse components; a passage is (info, role, direction)
        passages_by_comp: list[list[tuple[_CrossingInfo, str, int]]] = []
        visited: set[tuple[str, int]] = set()
        for start_arc in (0, 1):
            if ("arc", start_arc) in visited:
                continue
            passages: list[tuple[_CrossingInfo, str, int]] = []
            element, direction = ("arc", start_arc), 1
            while (element[0], element[1]) not in visited:
                visited.add((element[0], element[1]))
                kind, idx = element
                if kind == "arc":
                    seq = per_arc[idx] if direction == 1 else per_arc[idx][::-1]
                    role = "under"
                else:
                    seq = (by_bridge[idx] if direction == 1
                           else by_bridge[idx][::-1])
                    role = "over"
                for info in seq:
                    passages.append((info, role, direction))
                out_end = 1 if direction == 1 else 0
                cone = cone_of[(kind, idx, out_end)]
                nxt = [k for k in at_cone[cone] if k[:2] != (kind, idx)]
                if len(nxt) != 1:
                    # both ends of one element at the same cone: impossible
                    # for coprime parameters
                    raise SchubertError("ambiguous cone transition")
                nkind, nidx, nend = nxt[0]
                element, direction = (nkind, nidx), (1 if nend == 0 else -1)
            passages_by_comp.append(passages)

        # arc labels between consecutive passages of each component
        label = 0
        arc_in: dict[tuple[int, str], int] = {}
        arc_out: dict[tuple[int, str], int] = {}
        for passages in passages_by_comp:
            if not passages:
                raise SchubertError("component without crossings")
            for pos, (info, role, _) in enumerate(passages):
                label += 1
                arc_out[(info.index, role)] = label
                nxt = passages[(pos + 1) % len(passages)]
                arc_in[(nxt[0].index, nxt[1])] = label

        under_dir: dict[int, int] = {}
        over_dir: dict[int, int] = {}
        for passages in passages_by_comp:
            for info, role, direction in passages:
                if role == "under":
                    under_dir[info.index] = direction
                else:
                    over_dir[info.index] = direction

        tuples: list[tuple[int, int, int, int]] = []
        over_in_pos: dict[int, int] = {}
        for info in crossings:
            du = under_dir[info.index]
            # understrand direction in the chart at the crossing point
            u_vec = (du * q, du * p)
            # bridge direction for increasing xi, expressed in the same chart
            o_sign = over_dir[info.index] * (1 if info.front else -1)
            # cross(-u, -o) > 0 puts the incoming over end at position 1
            cross = u_vec[1] * o_sign
            a0 = arc_in[(info.index, "under")]
            a2 = arc_out[(info.index, "under")]
            if cross > 0:
                a1 = arc_in[(info.index, "over")]
                a3 = arc_out[(info.index, "over")]
                over_in_pos[info.index] = 1
            else:
                a1 = arc_out[(info.index, "over")]
                a3 = arc_in[(info.index, "over")]
                over_in_pos[info.index] = 3
            tuples.append((a0, a1, a2, a3))

        self.diagram = PlanarDiagram(tuple(tuples))
        self.diagram.check_planar()
        self._info = crossings
        self._bottom = by_bridge[0]
        self._arc_in = arc_in
        self._arc_out = arc_out
        self._under_dir = under_dir
        self._over_dir = over_dir
        self._over_in_pos = over_in_pos
        want = 1 if self.p % 2 else 2
        if self.diagram.component_count != want:
            raise SchubertError("unexpected component count")

    # -- wedge sites ------------------------------------------------------

    def _under_piece(self, info: _CrossingInfo, upper_front: bool) -> EdgeEnd:
        """Understrand edge at a bottom crossing, on the chosen side.

        upper_front picks the piece in the upper half of the front chart
        (the region above the bottom bridge as drawn); the other piece is
        the one below.
        """
        # the piece on the increasing-parameter side sits in the upper
        # half of the crossing's own chart, which is the front chart
        # exactly when the crossing point lies at x < 1/2
        plus_t = upper_front == info.front
        outgoing = plus_t == (self._under_dir[info.index] > 0)
        key = (info.index, "under")
        arc = self._arc_out[key] if outgoing else self._arc_in[key]
        return EdgeEnd(arc, (info.index, 2 if outgoing else 0))

    def _bridge_piece(self, info: _CrossingInfo, toward_left: bool) -> EdgeEnd:
        """Bottom-bridge edge at a bottom crossing, on the chosen side."""
        # over traversal direction +1 means increasing xi (to the right)
        outgoing = (self._over_dir[info.index] == -1) == toward_left
        key = (info.index, "over")
        arc = self._arc_out[key] if outgoing else self._arc_in[key]
        in_pos = self._over_in_pos[info.index]
        pos = in_pos if not outgoing else (in_pos + 2) % 4
        return EdgeEnd(arc, (info.index, pos))

    def wedge_site(self, u: int) -> WedgeSite:
        """Band attachment data for the u-th wedge (1 <= u <= p-1)."""
        p = self.p
        if not 1 <= u < p:
            raise SchubertError(f"wedge index must be in 1..{p - 1}")
        bottom = {c.k: c for c in self._bottom}
        attach_a = self._bridge_piece(bottom[1], toward_left=True).arc
        attach_b = self._under_piece(bottom[u], upper_front=True).arc
        corridor = tuple(self._under_piece(bottom[i], upper_front=True).arc
                         for i in range(1, u))
        return WedgeSite(u=u, attach_a=attach_a, attach_b=attach_b,
                         corridor=corridor)

    def modify(self, u: int, mode: Mode) -> PlanarDiagram:
        """Candidate branch set for the tangle replacement at wedge u."""
        site = self.wedge_site(u)
        return band_modify(self.diagram, site.attach_a, site.attach_b,
                           site.corridor, mode)


def band_modify(diagram: PlanarDiagram, attach_a: int, attach_b: int,
                corridor: tuple[int, ...], mode: Mode) -> PlanarDiagram:
    """Attach a band between two edges, passing over the corridor edges.

    The band is a flat strip whose opposite sides are glued along the
    edges attach_a and attach_b; the edges of `corridor` are crossed
    transversally, in order, with the band on top.  Its route is resolved
    through the face structure, so consecutive edges of the route must
    border a common face.  Smoothing reattaches the strip flat; the
    crossing modes put one half twist between its sides, with the two
    signs giving the two choices of over strand at the new crossing.
    """
    route = (attach_a,) + corridor + (attach_b,)
    if len(set(route)) != len(route):
        raise DiagramError("band route repeats an edge")
    faces = diagram.faces
    face_of: dict[Slot, int] = {}
    for fi, face in enumerate(faces):
        for corner in face:
            face_of[corner] = fi
    edges_in_face = [{diagram.crossings[ci][k] for ci, k in face}
                     for face in faces]
    inc = diagram.incidence
    for arc in route:
        if len(inc[arc]) != 2 or inc[arc][0] == inc[arc][1]:
            raise DiagramError("band route uses a degenerate edge")

    crossings = [list(c) for c in diagram.crossings]
    fresh = max(diagram.arcs)

    def new_label() -> int:
        nonlocal fresh
        fresh += 1
        return fresh

    # leave attach_a on the side whose face contains the next route edge
    start = [c for c in inc[attach_a]
             if route[1] in edges_in_face[face_of[c]]]
    if not start:
        raise DiagramError("band attachments do not share a face")
    u_a = start[0]
    v_a = diagram.other_end(attach_a, u_a)
    face = face_of[u_a]

    # the side arcs of the band grow from the two stubs of the cut edge
    side1, side2 = new_label(), attach_a
    crossings[v_a[0]][v_a[1]] = side1

    for arc in corridor:
        hits = [c for c in inc[arc] if face_of[c] == face]
        if not hits:
            raise DiagramError("band corridor leaves the face route")
        u_c = hits[0]
        v_c = diagram.other_end(arc, u_c)
        mid, top = new_label(), new_label()
        crossings[v_c[0]][v_c[1]] = top
        n1, n2 = new_label(), new_label()
        crossings.append([arc, n1, mid, side1])
        crossings.append([mid, n2, top, side2])
        side1, side2 = n1, n2
        face = face_of[v_c]

    hits = [c for c in inc[attach_b] if face_of[c] == face]
    if not hits:
        raise DiagramError("band cannot reach its far attachment")
    u_b = hits[0]
    v_b = diagram.other_end(attach_b, u_b)

    if mode is Mode.SMOOTHING:
        crossings[u_b[0]][u_b[1]] = side1
        crossings[v_b[0]][v_b[1]] = side2
    else:
        o1, o2 = new_label(), new_label()
        if mode is Mode.CROSSING_POS:
            crossings.append([side1, o2, o1, side2])
        else:
            crossings.append([o2, o1, side2, side1])
        crossings[u_b[0]][u_b[1]] = o2
        crossings[v_b[0]][v_b[1]] = o1

    out = PlanarDiagram(tuple(tuple(c) for c in crossings),
                        diagram.free_loops)
    out.check_planar()
    return out
