"""Knot invariants computed from planar diagrams.

Provides integer Laurent polynomials in one variable, the Kauffman
bracket and Jones polynomial, the Goeritz determinant and the Alexander
polynomial.  All arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction

from .diagram import DiagramError, PlanarDiagram, Slot


class LaurentPoly:
    """Integer Laurent polynomial in one variable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def monomial(cls, coeff: int = 1, exp: int = 0) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls({})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.monomial(other)
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self.coeffs.items()})
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                k = e1 + e2
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def mirror(self) -> "LaurentPoly":
        """Substitute the variable by its inverse."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def __call__(self, x: Fraction | int) -> Fraction:
        return sum((Fraction(c) * Fraction(x) ** e for e, c in self.coeffs.items()),
                   Fraction(0))

    def divide_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        if not other:
            raise ZeroDivisionError
        rem = dict(self.coeffs)
        le = max(other.coeffs)
        lc = other.coeffs[le]
        out: dict[int, int] = {}
        while rem:
            e = max(rem)
            q, r = divmod(rem[e], lc)
            if r != 0:
                raise ArithmeticError("inexact Laurent division")
            out[e - le] = q
            for oe, oc in other.coeffs.items():
                k = e - le + oe
                rem[k] = rem.get(k, 0) - q * oc
                if rem[k] == 0:
                    del rem[k]
        return LaurentPoly(out)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            mag = abs(c)
            if e == 0:
                term = str(mag)
            else:
                var = "A" if e == 1 else f"A^{e}"
                term = var if mag == 1 else f"{mag}*{var}"
            parts.append(("- " if c < 0 else "+ ") + term)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    __repr__ = __str__


_DELTA = LaurentPoly({2: -1, -2: -1})  # value of a disjoint circle


def _crossing_order(diagram: PlanarDiagram) -> list[int]:
    """Greedy processing order keeping the open frontier small."""
    n = diagram.crossing_count
    remaining = set(range(n))
    order: list[int] = []
    open_arcs: set[int] = set()
    while remaining:
        def cost(ci: int) -> tuple[int, int]:
            arcs = set(diagram.crossings[ci])
            return (len(arcs - open_arcs) - len(arcs & open_arcs), ci)
        best = min(remaining, key=cost)
        remaining.discard(best)
        order.append(best)
        for a in diagram.crossings[best]:
            if a in open_arcs:
                open_arcs.discard(a)
            else:
                open_arcs.add(a)
    return order


def kauffman_bracket(diagram: PlanarDiagram) -> LaurentPoly:
    """Kauffman bracket in the variable A, normalized to 1 on the unknot.

    Crossings are contracted one at a time; partial resolutions that
    induce the same pairing of open strand ends are merged, which keeps
    the state count manageable for diagrams of moderate width.
    """
    if diagram.crossing_count == 0:
        if diagram.free_loops == 0:
            return LaurentPoly.zero()
        poly = LaurentPoly.one()
        for _ in range(diagram.free_loops - 1):
            poly = poly * _DELTA
        return poly

    arc_partner: dict[Slot, Slot] = {}
    for slots in diagram.incidence.values():
        s, t = slots
        arc_partner[s] = t
        arc_partner[t] = s

    a_mono = LaurentPoly.monomial(1, 1)
    b_mono = LaurentPoly.monomial(1, -1)

    # state: frozenset of open-end pairs -> accumulated coefficient
    states: dict[frozenset, LaurentPoly] = {frozenset(): LaurentPoly.one()}

    for ci in _crossing_order(diagram):
        slots = [(ci, pos) for pos in range(4)]
        new_states: dict[frozenset, LaurentPoly] = {}
        for pairing, coeff in states.items():
            partner: dict[Slot, Slot] = {}
            for x, y in pairing:
                partner[x] = y
                partner[y] = x
            for joins, weight in (
                (((slots[0], slots[1]), (slots[2], slots[3])), a_mono),
                (((slots[0], slots[3]), (slots[1], slots[2])), b_mono),
            ):
                pmap = dict(partner)
                w = coeff * weight
                for si, sj in joins:
                    fa = pmap.pop(si, arc_partner[si])
                    fb = pmap.pop(sj, arc_partner[sj])
                    pmap.pop(fa, None)
                    pmap.pop(fb, None)
                    if fa == sj:
                        w = w * _DELTA
                    else:
                        pmap[fa] = fb
                        pmap[fb] = fa
                key = frozenset(tuple(sorted((x, y)))
                                for x, y in pmap.items() if x < y)
                if key in new_states:
                    new_states[key] = new_states[key] + w
                else:
                    new_states[key] = w
        states = new_states

    total = LaurentPoly.zero()
    for pairing, coeff in states.items():
        if pairing:
            raise DiagramError("bracket contraction left open strands")
        total = total + coeff
    result = total.divide_exact(_DELTA)
    for _ in range(diagram.free_loops):
        result = result * _DELTA
    return result


def jones_polynomial(diagram: PlanarDiagram) -> LaurentPoly:
    """Jones polynomial in the variable A, i.e. f(A) = (-A^3)^{-w} <D>.

    The usual variable t is A^{-4}.  Keeping the A form avoids fractional
    exponents for links.
    """
    bracket = kauffman_bracket(diagram)
    w = diagram.writhe
    unit = LaurentPoly.monomial(-1 if w % 2 else 1, -3 * w)
    return unit * bracket


def jones_in_t(poly_a: LaurentPoly) -> dict[Fraction, int]:
    """Rewrite a Jones polynomial from the A variable to t = A^-4."""
    return {Fraction(-e, 4): c for e, c in sorted(poly_a.coeffs.items())}


# -- Goeritz determinant ------------------------------------------------


def _checkerboard(diagram: PlanarDiagram) -> list[int]:
    """Two-color the faces; returns a color (0/1) per face index."""
    faces = diagram.faces
    corner_face: dict[Slot, int] = {}
    for fi, face in enumerate(faces):
        for corner in face:
            corner_face[corner] = fi

    colors = [-1] * len(faces)
    colors[0] = 0
    todo = [0]
    seen = {0}
    while todo:
        fi = todo.pop()
        for ci, k in faces[fi]:
            # the face on the other side of the arc at slot (ci, k)
            cj, m = diagram.other_end(diagram.crossings[ci][k], (ci, k))
            other = corner_face[(cj, m)]
            if colors[other] == -1:
                colors[other] = 1 - colors[fi]
            elif colors[other] == colors[fi]:
                raise DiagramError("diagram is not checkerboard colorable")
            if other not in seen:
                seen.add(other)
                todo.append(other)
    if any(c == -1 for c in colors):
        raise DiagramError("disconnected diagram; determinant undefined here")
    return colors


def _bareiss_det(matrix: list[list[int]]) -> int:
    m = [row[:] for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def determinant(diagram: PlanarDiagram) -> int:
    """Knot/link determinant |H_1| of the double branched cover (0 if infinite)."""
    if diagram.crossing_count == 0:
        return 1 if diagram.component_count == 1 else 0
    if diagram.free_loops:
        return 0
    colors = _checkerboard(diagram)
    faces = diagram.faces
    corner_face: dict[Slot, int] = {}
    for fi, face in enumerate(faces):
        for corner in face:
            corner_face[corner] = fi

    white = [fi for fi in range(len(faces)) if colors[fi] == 0]
    index = {fi: i for i, fi in enumerate(white)}
    size = len(white)
    g = [[0] * size for _ in range(size)]
    for ci in range(diagram.crossing_count):
        # white corners of this crossing sit at an opposite corner pair
        wc = [k for k in range(4) if colors[corner_face[(ci, k)]] == 0]
        eta = 1 if 0 in wc else -1
        f1, f2 = (corner_face[(ci, k)] for k in wc)
        i, j = index[f1], index[f2]
        if i == j:
            continue
        g[i][j] -= eta
        g[j][i] -= eta
        g[i][i] += eta
        g[j][j] += eta
    minor = [row[1:] for row in g[1:]]
    return abs(_bareiss_det(minor))


# -- Alexander polynomial -----------------------------------------------


def _wirtinger_classes(diagram: PlanarDiagram) -> dict[int, int]:
    """Merge arcs joined through overcrossings into Wirtinger generators."""
    parent = {a: a for a in diagram.arcs}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in diagram.crossings:
        a, b = c[1], c[3]
        parent[find(a)] = find(b)
    return {a: find(a) for a in diagram.arcs}


def alexander_polynomial(diagram: PlanarDiagram) -> LaurentPoly:
    """Alexander polynomial of a knot, normalized with positive constant
    term and unit value at 1."""
    if diagram.component_count != 1:
        raise DiagramError("alexander_polynomial expects a knot diagram")
    n = diagram.crossing_count
    if n == 0:
        return LaurentPoly.one()

    classes = _wirtinger_classes(diagram)
    gens = sorted(set(classes.values()))
    gidx = {g: i for i, g in enumerate(gens)}
    marks = diagram.orientations
    signs = diagram.signs

    # row coefficients are linear in t: store (const, t) pairs
    rows: list[list[tuple[int, int]]] = []
    for ci, c in enumerate(diagram.crossings):
        under_in = 0 if marks[(ci, 0)] == "in" else 2
        i = gidx[classes[c[under_in]]]
        k = gidx[classes[c[(under_in + 2) % 4]]]
        j = gidx[classes[c[1]]]
        row = [(0, 0)] * len(gens)

        def add(col: int, const: int, lin: int):
            cc, ll = row[col]
            row[col] = (cc + const, ll + lin)

        if signs[ci] == 1:
            add(i, 0, 1)
            add(k, -1, 0)
            add(j, 1, -1)
        else:
            add(i, 1, 0)
            add(k, 0, -1)
            add(j, -1, 1)
        rows.append(row)

    size = len(gens) - 1
    if size <= 0:
        return LaurentPoly.one()
    points = list(range(2, 2 + size + 2))
    values = []
    for t0 in points:
        mat = [[const + lin * t0 for (const, lin) in row[:size]]
               for row in rows[:size]]
        values.append(_bareiss_det(mat))

    # exact Lagrange interpolation
    coeffs = [Fraction(0)] * len(points)
    for xi, yi in zip(points, values):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for xj in points:
            if xj == xi:
                continue
            denom *= xi - xj
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
        scale = Fraction(yi) / denom
        for k, b in enumerate(basis):
            coeffs[k] += scale * b
    poly = {}
    for k, c in enumerate(coeffs):
        if c != 0:
            if c.denominator != 1:
                raise ArithmeticError("interpolation produced a non-integer")
            poly[k] = int(c)
    if not poly:
        raise ArithmeticError("vanishing Alexander determinant on a knot")
    low = min(poly)
    result = LaurentPoly({e - low: c for e, c in poly.items()})
    if result(1) < 0:
        result = -result
    return result
