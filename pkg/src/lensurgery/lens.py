"""Lens space parameters and their homeomorphism classification.

L(p, q) and L(p, q') are homeomorphic (up to orientation) exactly when
q' is congruent to one of q, -q, q^-1 or -q^-1 modulo p.  Each class has
a unique representative with 0 < q* <= p/2 once p >= 2, which we use as
the canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


class LensError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class LensParams:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 1:
            raise LensError("p must be positive")
        if self.p == 1:
            if self.q != 0:
                raise LensError("L(1, q) is written L(1, 0)")
            return
        if not 0 < self.q < self.p:
            raise LensError("q must satisfy 0 < q < p")
        if gcd(self.p, self.q) != 1:
            raise LensError("p and q must be coprime")

    def __str__(self):
        return f"L({self.p},{self.q})"


def canonical_form(p: int, q: int) -> LensParams:
    """Smallest representative q* of {+-q, +-q^-1 mod p} with 2q* <= p."""
    if p == 1:
        return LensParams(1, 0)
    q %= p
    if q == 0 or gcd(p, q) != 1:
        raise LensError(f"invalid lens parameters ({p}, {q})")
    qinv = pow(q, -1, p)
    orbit = {q, p - q, qinv, p - qinv}
    return LensParams(p, min(x for x in orbit if 2 * x <= p))


def homeomorphic(a: LensParams, b: LensParams) -> bool:
    return canonical_form(a.p, a.q) == canonical_form(b.p, b.q)


def klein_bottle_params(n: int) -> LensParams:
    """The lens space L(4n, 2n-1) containing a Klein bottle."""
    if n < 1:
        raise LensError("n must be positive")
    return LensParams(4 * n, 2 * n - 1)


def normalize_u(p: int, u: int) -> int:
    """Dual knot index folded into 1..p//2.

    The dual knots with indices u and p - u are isotopic, so only the
    smaller representative is ever used.
    """
    u %= p
    if u == 0:
        raise LensError("u must be nonzero modulo p")
    return min(u, p - u)
