"""Residue-sequence filter for dual knot indices.

For L(p, q) let s_j = q*j mod p.  For 1 <= k < p define Psi(k) as the
first index j with s_j = k, and Phi(k) as the number of indices j < Psi(k)
with s_j < k.  A dual knot index u can admit an integral S^3 surgery only
if p*Phi(u) - u*Psi(u) lies in {1, -1, 1-p, -1-p}.  This is a necessary
condition, not a sufficient one; survivors still need diagram-level work.
"""

from __future__ import annotations

from math import gcd

from .lens import LensParams, klein_bottle_params


def residue_sequence(p: int, q: int) -> list[int]:
    """[q*j mod p for j = 1..p]; the last entry is always 0."""
    return [(q * j) % p for j in range(1, p + 1)]


def psi_phi(p: int, q: int, u: int) -> tuple[int, int]:
    """(Psi(u), Phi(u)) for the residue sequence of (p, q)."""
    if not 0 < u < p:
        raise ValueError("u must satisfy 0 < u < p")
    if gcd(p, q) != 1:
        raise ValueError("p and q must be coprime")
    if gcd(p, u) != 1:
        # u never occurs in the sequence; the criterion cannot hold
        raise ValueError("u must be coprime to p")
    psi = (pow(q, -1, p) * u) % p
    phi = 0
    for j in range(1, psi):
        if (q * j) % p < u:
            phi += 1
    return psi, phi


def criterion_value(p: int, q: int, u: int) -> int:
    """p*Phi(u) - u*Psi(u) for the residue sequence of (p, q)."""
    psi, phi = psi_phi(p, q, u)
    return p * phi - u * psi


def passes_criterion(p: int, q: int, u: int) -> bool:
    """True when u survives the residue filter (necessary condition only)."""
    if gcd(p, u) != 1:
        return False
    return criterion_value(p, q, u) in (1, -1, 1 - p, -1 - p)


class _Fenwick:
    def __init__(self, size: int):
        self.tree = [0] * (size + 1)

    def add(self, i: int) -> None:
        i += 1
        while i < len(self.tree):
            self.tree[i] += 1
            i += i & -i

    def count_below(self, i: int) -> int:
        # number of added values strictly less than i
        total = 0
        while i > 0:
            total += self.tree[i]
            i -= i & -i
        return total


def surviving_indices(p: int, q: int, u_max: int | None = None) -> list[int]:
    """All u in 1..u_max passing the filter, in one O(p log p) sweep."""
    if u_max is None:
        u_max = p // 2
    qinv = pow(q, -1, p)
    targets = sorted(
        ((qinv * u) % p, u) for u in range(1, u_max + 1) if gcd(p, u) == 1)
    good = (1, -1, 1 - p, -1 - p)
    tree = _Fenwick(p)
    out = []
    ti = 0
    for j in range(0, p):
        while ti < len(targets) and targets[ti][0] == j:
            psi, u = targets[ti]
            if p * tree.count_below(u) - u * psi in good:
                out.append(u)
            ti += 1
        if j >= 1:
            tree.add((q * j) % p)
    return sorted(out)


def klein_candidates(n_max: int, n_min: int = 2) -> list[tuple[int, int]]:
    """(n, u) pairs with u surviving the filter for L(4n, 2n-1)."""
    out = []
    for n in range(n_min, n_max + 1):
        lens = klein_bottle_params(n)
        for u in surviving_indices(lens.p, lens.q):
            out.append((n, u))
    return out


def klein_residue_closed_form(n: int) -> list[int]:
    """First 2n-1 residues of L(4n, 2n-1) by the parity closed form."""
    lens = klein_bottle_params(n)
    out = []
    for j in range(1, 2 * n):
        out.append(2 * n - j if j % 2 == 1 else 4 * n - j)
    assert out == residue_sequence(lens.p, lens.q)[:2 * n - 1]
    return out
