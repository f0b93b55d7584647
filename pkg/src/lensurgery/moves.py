"""Reidemeister moves on planar diagrams.

Moves are described by small serializable tuples so that a recorded
sequence can be replayed later as a certificate.  Descriptors name the
crossings and arcs of the diagram they apply to, and every application
re-validates the local pattern, so a stale or forged descriptor fails
instead of silently producing a different diagram.

Descriptor forms:

    ("r1-", ci, k)            remove the kink at crossing ci whose loop
                              arc spans positions k, k+1
    ("r2-", c1, c2)           remove the bigon between two crossings
    ("r3", c0, c1, c2)        slide across the triangle face whose
                              corners visit these crossings in order
    ("r1+", arc, variant)     add a kink on an edge, variant 0..3
    ("r2+", e, f, over)       push edge e across edge f along a shared
                              face; over picks which strand is on top
"""

from __future__ import annotations

import random

from .diagram import DiagramError, PlanarDiagram

MoveDesc = tuple


def _positions(crossing, arc: int) -> list[int]:
    return [k for k in range(4) if crossing[k] == arc]


def _rebuild(crossings, deleted: set[int], merges, free_loops: int)\
        -> PlanarDiagram:
    """Drop deleted crossings and unify merged arc labels."""
    parent: dict[int, int] = {}

    def find(a: int) -> int:
        root = a
        while parent.get(root, root) != root:
            root = parent[root]
        while parent.get(a, a) != a:
            parent[a], a = root, parent[a]
        return root

    for a, b in merges:
        ra, rb = find(a), find(b)
        if ra == rb:
            # both ends of one arc were joined: a crossingless circle
            free_loops += 1
        else:
            parent[rb] = ra
    kept = [c for ci, c in enumerate(crossings) if ci not in deleted]
    return PlanarDiagram(tuple(tuple(find(a) for a in c) for c in kept),
                         free_loops)


# -- decreasing moves ----------------------------------------------------

def r1_removal_sites(d: PlanarDiagram) -> list[MoveDesc]:
    sites = []
    for ci, c in enumerate(d.crossings):
        for k in range(4):
            if c[k] == c[(k + 1) % 4]:
                sites.append(("r1-", ci, k))
    return sites


def apply_r1_removal(d: PlanarDiagram, desc: MoveDesc) -> PlanarDiagram:
    _, ci, k = desc
    try:
        c = d.crossings[ci]
    except IndexError:
        raise DiagramError("stale kink site") from None
    if c[k] != c[(k + 1) % 4]:
        raise DiagramError("stale kink site")
    return _rebuild(d.crossings, {ci},
                    [(c[(k + 2) % 4], c[(k + 3) % 4])], d.free_loops)


def _bigon_edges(d: PlanarDiagram, c1: int, c2: int) -> tuple[int, int]:
    """The two arcs of a reducible bigon between c1 and c2, over first."""
    shared = [a for a in set(d.crossings[c1])
              if a in d.crossings[c2] and len(d.incidence[a]) == 2]
    pair = [a for a in shared
            if {s[0] for s in d.incidence[a]} == {c1, c2}]
    if len(pair) != 2:
        raise DiagramError("no bigon between these crossings")
    e1, e2 = pair

    def levels(arc):
        return {pos % 2 for _, pos in d.incidence[arc]}

    l1, l2 = levels(e1), levels(e2)
    if l1 == {1} and l2 == {0}:
        return e1, e2
    if l1 == {0} and l2 == {1}:
        return e2, e1
    raise DiagramError("bigon is not reducible")


def r2_removal_sites(d: PlanarDiagram) -> list[MoveDesc]:
    sites = []
    seen = set()
    for face in d.faces:
        if len(face) != 2:
            continue
        (c1, _), (c2, _) = face
        if c1 == c2:
            continue
        key = (min(c1, c2), max(c1, c2))
        if key in seen:
            continue
        seen.add(key)
        try:
            _bigon_edges(d, c1, c2)
        except DiagramError:
            continue
        sites.append(("r2-", key[0], key[1]))
    return sites


def apply_r2_removal(d: PlanarDiagram, desc: MoveDesc) -> PlanarDiagram:
    _, c1, c2 = desc
    if not (0 <= c1 < len(d.crossings) and 0 <= c2 < len(d.crossings)):
        raise DiagramError("stale bigon site")
    over, under = _bigon_edges(d, c1, c2)
    merges = []
    for arc, parity in ((over, 1), (under, 0)):
        stubs = []
        for ci in (c1, c2):
            c = d.crossings[ci]
            outside = [c[k] for k in (parity, parity + 2)
                       if c[k] not in (over, under)]
            if len(outside) != 1:
                raise DiagramError("bigon strands are tangled")
            stubs.append(outside[0])
        merges.append((stubs[0], stubs[1]))
    return _rebuild(d.crossings, {c1, c2}, merges, d.free_loops)


# -- triangle slides -----------------------------------------------------

def _face_edges(d: PlanarDiagram, face) -> list[int]:
    return [d.crossings[ci][k] for ci, k in face]


def _edge_kind(d: PlanarDiagram, arc: int) -> str:
    """'oo' if the arc rides over both its crossings, 'uu', or 'mixed'."""
    levels = sorted(pos % 2 for _, pos in d.incidence[arc])
    return {(1, 1): "oo", (0, 0): "uu", (0, 1): "mixed"}[tuple(levels)]


def r3_sites(d: PlanarDiagram) -> list[MoveDesc]:
    sites = []
    for face in d.faces:
        if len(face) != 3:
            continue
        cs = [ci for ci, _ in face]
        if len(set(cs)) != 3:
            continue
        edges = _face_edges(d, face)
        if len(set(edges)) != 3:
            continue
        kinds = [_edge_kind(d, e) for e in edges]
        if sorted(kinds) == ["mixed", "oo", "uu"]:
            sites.append(("r3", cs[0], cs[1], cs[2]))
    return sites


def _rotate_to_under(crossing, arc: int):
    """Read the crossing tuple starting at `arc` in an under position."""
    for k in (0, 2):
        if crossing[k] == arc:
            return tuple(crossing[k:] + crossing[:k])
    raise DiagramError("expected arc at an under position")


def apply_r3(d: PlanarDiagram, desc: MoveDesc) -> PlanarDiagram:
    _, *cs = desc
    face = None
    for f in d.faces:
        if len(f) == 3 and [ci for ci, _ in f] in [
                [cs[i % 3] for i in range(r, r + 3)] for r in range(3)]:
            face = f
            break
    if face is None:
        raise DiagramError("stale triangle site")
    corners = list(face)
    edges = _face_edges(d, face)
    kinds = [_edge_kind(d, e) for e in edges]
    if sorted(kinds) != ["mixed", "oo", "uu"]:
        raise DiagramError("triangle is not slideable")
    j = kinds.index("oo")
    mirror = kinds[(j + 1) % 3] == "uu"
    a = edges[j]
    if mirror:
        # face visits the crossings as (ab, ac, bc); the strand of the
        # oo edge is a, of the uu edge c, of the mixed edge b
        p_i, q_i, r_i = corners[j][0], corners[(j + 1) % 3][0], \
            corners[(j + 2) % 3][0]
        c_arc, b = edges[(j + 1) % 3], edges[(j + 2) % 3]
        tp = _rotate_to_under(d.crossings[p_i], b)      # (B, w_a, n_b, A)
        tq = _rotate_to_under(d.crossings[q_i], c_arc)  # (C, A, n_c, e_a)
        tr = _rotate_to_under(d.crossings[r_i], c_arc)  # (C, s_b, s_c, B)
        if tp[3] != a or tq[1] != a or tr[3] != b:
            raise DiagramError("triangle labels do not match")
        _, w_a, n_b, _ = tp
        _, _, n_c, e_a = tq
        _, s_b, s_c, _ = tr
        new_p = (s_b, a, b, e_a)
        new_q = (s_c, w_a, c_arc, a)
        new_r = (c_arc, n_b, n_c, b)
    else:
        # face visits the crossings as (ac, ab, bc)
        q_i, p_i, r_i = corners[j][0], corners[(j + 1) % 3][0], \
            corners[(j + 2) % 3][0]
        b, c_arc = edges[(j + 1) % 3], edges[(j + 2) % 3]
        tp = _rotate_to_under(d.crossings[p_i], b)      # (B, A, n_b, w_a)
        tq = _rotate_to_under(d.crossings[q_i], c_arc)  # (C, e_a, n_c, A)
        tr = _rotate_to_under(d.crossings[r_i], c_arc)  # (C, B, s_c, s_b)
        if tp[1] != a or tq[3] != a or tr[1] != b:
            raise DiagramError("triangle labels do not match")
        _, _, n_b, w_a = tp
        _, e_a, n_c, _ = tq
        _, _, s_c, s_b = tr
        new_p = (s_b, e_a, b, a)
        new_q = (s_c, a, c_arc, w_a)
        new_r = (c_arc, b, n_c, n_b)
    crossings = [list(c) for c in d.crossings]
    crossings[p_i] = list(new_p)
    crossings[q_i] = list(new_q)
    crossings[r_i] = list(new_r)
    out = PlanarDiagram(tuple(tuple(c) for c in crossings), d.free_loops)
    out.check_planar()
    return out


# -- increasing moves ----------------------------------------------------

def apply_r1_addition(d: PlanarDiagram, desc: MoveDesc) -> PlanarDiagram:
    _, arc, variant = desc
    inc = d.incidence.get(arc)
    if not inc or len(inc) != 2:
        raise DiagramError("stale edge for kink")
    fresh = max(d.arcs) + 1
    loop, tail = fresh, fresh + 1
    ci, pos = inc[1]
    crossings = [list(c) for c in d.crossings]
    crossings[ci][pos] = tail
    kink = [(loop, loop, arc, tail), (arc, loop, loop, tail),
            (arc, tail, loop, loop), (loop, arc, tail, loop)][variant % 4]
    crossings.append(list(kink))
    out = PlanarDiagram(tuple(tuple(c) for c in crossings), d.free_loops)
    out.check_planar()
    return out


def r2_addition_sites(d: PlanarDiagram) -> list[MoveDesc]:
    sites = []
    for face in d.faces:
        edges = sorted(set(_face_edges(d, face)))
        for e in edges:
            for f in edges:
                if e != f:
                    sites.append(("r2+", e, f, True))
                    sites.append(("r2+", e, f, False))
    return sites


def apply_r2_addition(d: PlanarDiagram, desc: MoveDesc) -> PlanarDiagram:
    _, e, f, over = desc
    faces = d.faces
    face_of = {}
    for fi, face in enumerate(faces):
        for corner in face:
            face_of[corner] = fi
    shared = [c for c in d.incidence[e]
              if f in set(_face_edges(d, faces[face_of[c]]))]
    if not shared:
        raise DiagramError("edges do not share a face")
    u_e = shared[0]
    fi = face_of[u_e]
    v_e = d.other_end(e, u_e)
    hits = [c for c in d.incidence[f] if face_of[c] == fi]
    if not hits:
        raise DiagramError("edges do not share a face")
    u_f = hits[0]
    v_f = d.other_end(f, u_f)
    fresh = max(d.arcs) + 1
    tip, n2, fm, n3 = fresh, fresh + 1, fresh + 2, fresh + 3
    crossings = [list(c) for c in d.crossings]
    crossings[v_e[0]][v_e[1]] = n2
    crossings[v_f[0]][v_f[1]] = n3
    if over:
        crossings.append([f, tip, fm, n2])
        crossings.append([fm, tip, n3, e])
    else:
        crossings.append([n2, f, tip, fm])
        crossings.append([e, fm, tip, n3])
    out = PlanarDiagram(tuple(tuple(c) for c in crossings), d.free_loops)
    out.check_planar()
    return out


# -- dispatch ------------------------------------------------------------

_APPLY = {
    "r1-": apply_r1_removal,
    "r2-": apply_r2_removal,
    "r3": apply_r3,
    "r1+": apply_r1_addition,
    "r2+": apply_r2_addition,
}


def apply_move(d: PlanarDiagram, desc: MoveDesc) -> PlanarDiagram:
    try:
        fn = _APPLY[desc[0]]
    except KeyError:
        raise DiagramError(f"unknown move {desc[0]!r}") from None
    return fn(d, desc)


def random_moves(d: PlanarDiagram, count: int, rng: random.Random,
                 max_crossings: int = 24)\
        -> tuple[PlanarDiagram, list[MoveDesc]]:
    """Apply `count` random moves, returning the result and the log."""
    log: list[MoveDesc] = []
    for _ in range(count):
        choices: list[MoveDesc] = []
        choices += r1_removal_sites(d)
        choices += r2_removal_sites(d)
        choices += r3_sites(d)
        if d.crossing_count + 1 <= max_crossings and d.arcs:
            arcs = list(d.arcs)
            choices += [("r1+", rng.choice(arcs), rng.randrange(4))]
        if d.crossing_count + 2 <= max_crossings:
            adds = r2_addition_sites(d)
            if adds:
                choices += [rng.choice(adds)]
        if not choices:
            break
        desc = rng.choice(choices)
        d = apply_move(d, desc)
        log.append(desc)
    return d, log
