"""Independent cross-check constructions.

Nothing in the main pipeline depends on this module; it exists so tests
and reports can confront the pipeline's output with classical facts:

* two-bridge links built as numerator closures of rational tangles,
  giving a second, unrelated source of b(p, q) diagrams;
* the lens spaces produced by integral surgery on torus knots, which
  realize the expected positive cases.
"""

from __future__ import annotations

from math import gcd

from .diagram import PlanarDiagram
from .lens import LensParams, canonical_form


def continued_fraction(p: int, q: int) -> list[int]:
    """Positive continued fraction [a1, a2, ...] with p/q = a1 + 1/(a2 + ...)."""
    if not 0 < q < p:
        raise ValueError("need 0 < q < p")
    out = []
    while q:
        out.append(p // q)
        p, q = q, p % q
    return out


class _TangleBuilder:
    """Growing rational tangle with labeled NW/NE/SW/SE corner strands."""

    def __init__(self):
        self.crossings: list[tuple[int, int, int, int]] = []
        self.nw, self.ne = 1, 1
        self.sw, self.se = 2, 2
        self.next_label = 3

    def _fresh(self) -> int:
        self.next_label += 1
        return self.next_label - 1

    def twist_east(self, count: int) -> None:
        """Twist the NE and SE strands around each other `count` times."""
        for _ in range(count):
            ne2, se2 = self._fresh(), self._fresh()
            self.crossings.append((self.ne, self.se, se2, ne2))
            self.ne, self.se = ne2, se2

    def twist_south(self, count: int) -> None:
        """Twist the SW and SE strands around each other `count` times."""
        for _ in range(count):
            sw2, se2 = self._fresh(), self._fresh()
            self.crossings.append((self.sw, sw2, se2, self.se))
            self.sw, self.se = sw2, se2

    def numerator_closure(self) -> PlanarDiagram:
        crossings = [list(c) for c in self.crossings]
        corners = {"nw": self.nw, "ne": self.ne, "sw": self.sw, "se": self.se}
        loops = 0
        for a, b in (("nw", "ne"), ("sw", "se")):
            la, lb = corners[a], corners[b]
            if la == lb:
                if not any(la in c for c in crossings):
                    loops += 1
                continue
            for c in crossings:
                for i, x in enumerate(c):
                    if x == lb:
                        c[i] = la
            for k, v in corners.items():
                if v == lb:
                    corners[k] = la
        return PlanarDiagram(tuple(tuple(c) for c in crossings), loops)


def two_bridge_link(p: int, q: int) -> PlanarDiagram:
    """Numerator closure of the alternating rational tangle for p/q.

    Built independently of the pillowcase construction; used as an
    oracle for determinants and Jones polynomials (up to mirror image).
    """
    if p < 2 or not 0 < q < p or gcd(p, q) != 1:
        raise ValueError(f"invalid two-bridge parameters ({p}, {q})")
    terms = continued_fraction(p, q)
    if len(terms) % 2 == 0:
        # vertical twists do nothing to the starting 0-tangle, so the
        # innermost batch must be horizontal: force an odd expansion
        terms[-1] -= 1
        terms.append(1)
    builder = _TangleBuilder()
    # build from the innermost term outward, ending with a horizontal
    # batch for the integer part
    for i in range(len(terms) - 1, -1, -1):
        if i % 2 == 0:
            builder.twist_east(terms[i])
        else:
            builder.twist_south(terms[i])
    diagram = builder.numerator_closure()
    diagram.check_planar()
    return diagram


def lens_from_torus_knot(r: int, s: int, framing: int) -> LensParams:
    """Lens space produced by integral surgery on the (r, s) torus knot.

    Only framings adjacent to r*s yield lens spaces; those give
    L(framing, s^2).
    """
    if abs(r) < 2 or abs(s) < 2 or gcd(r, s) != 1:
        raise ValueError("need a nontrivial torus knot")
    if abs(r * s - framing) != 1:
        raise ValueError("framing must differ from r*s by one")
    return canonical_form(framing, (s * s) % framing)
