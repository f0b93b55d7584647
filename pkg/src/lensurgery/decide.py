"""Deciding whether a lens space arises from doubly primitive surgery.

For L(p, q) the candidate dual-knot parameters u are filtered by the
residue criterion, which is necessary for the dual knot to admit a
surgery returning the three-sphere.  Each survivor is then checked
directly: the pillowcase diagram of b(p, q) is modified at the u-th
wedge in the two candidate ways, and a candidate counts as a witness
exactly when the modified branch set is certified to be the unknot.

"no" is only reported when every u is conclusively resolved; any
budget-limited unknown downgrades the verdict to "inconclusive".
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .lens import LensParams, canonical_form
from .oracle import lens_from_torus_knot
from .residues import psi_phi
from .schubert import CALIBRATION_ID, Mode, SchubertDiagram
from .unknot import Certificate, SearchBudget, unknot_status

CANDIDATE_MODES = (Mode.SMOOTHING, Mode.CROSSING_POS)


@dataclass(frozen=True)
class UReport:
    u: int
    psi: int | None
    phi: int | None
    value: int | None
    criterion_passes: bool
    status: str                 # "witness" | "excluded" | "unknown"
    witness_mode: str | None = None
    certificate: Certificate | None = None

    def to_dict(self) -> dict:
        out = {"u": self.u, "psi": self.psi, "phi": self.phi,
               "value": self.value,
               "criterion_passes": self.criterion_passes,
               "status": self.status, "witness_mode": self.witness_mode,
               "certificate": (self.certificate.to_dict()
                               if self.certificate else None)}
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "UReport":
        cert = data.get("certificate")
        return cls(u=data["u"], psi=data["psi"], phi=data["phi"],
                   value=data["value"],
                   criterion_passes=data["criterion_passes"],
                   status=data["status"],
                   witness_mode=data.get("witness_mode"),
                   certificate=Certificate.from_dict(cert) if cert else None)


@dataclass(frozen=True)
class DecisionReport:
    lens: LensParams
    canonical: LensParams
    per_u: tuple[UReport, ...]
    obtainable: str             # "yes" | "no" | "inconclusive"
    witnesses: tuple[int, ...]
    budget: SearchBudget
    calibration_id: str = CALIBRATION_ID

    def to_dict(self) -> dict:
        return {
            "lens": {"p": self.lens.p, "q": self.lens.q,
                     "canonical_q": self.canonical.q},
            "per_u": [r.to_dict() for r in self.per_u],
            "obtainable": self.obtainable,
            "witnesses": list(self.witnesses),
            "budget": self.budget.to_dict(),
            "calibration_id": self.calibration_id,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "DecisionReport":
        lens = LensParams(data["lens"]["p"], data["lens"]["q"])
        canonical = LensParams(data["lens"]["p"], data["lens"]["canonical_q"])
        return cls(lens=lens, canonical=canonical,
                   per_u=tuple(UReport.from_dict(r) for r in data["per_u"]),
                   obtainable=data["obtainable"],
                   witnesses=tuple(data["witnesses"]),
                   budget=SearchBudget.from_dict(data["budget"]),
                   calibration_id=data["calibration_id"])


def _examine(sch: SchubertDiagram, u: int, psi: int, phi: int, value: int,
             budget: SearchBudget) -> UReport:
    unknown = False
    for mode in CANDIDATE_MODES:
        candidate = sch.modify(u, mode)
        verdict, cert = unknot_status(candidate, budget)
        if verdict == "yes":
            return UReport(u, psi, phi, value, True, "witness",
                           witness_mode=mode.value, certificate=cert)
        if verdict == "unknown":
            unknown = True
    return UReport(u, psi, phi, value, True,
                   "unknown" if unknown else "excluded")


def decide(p: int, q: int,
           budget: SearchBudget = SearchBudget()) -> DecisionReport:
    lens = LensParams(p, q)
    canonical = canonical_form(p, q)
    cp, cq = canonical.p, canonical.q
    per_u: list[UReport] = []
    sch: SchubertDiagram | None = None
    for u in range(1, cp // 2 + 1):
        if gcd(u, cp) != 1:
            continue
        psi, phi = psi_phi(cp, cq, u)
        value = cp * phi - u * psi
        if value not in (1, -1, 1 - cp, -1 - cp):
            per_u.append(UReport(u, psi, phi, value, False, "excluded"))
            continue
        if sch is None:
            sch = SchubertDiagram(cp, cq)
        per_u.append(_examine(sch, u, psi, phi, value, budget))
    witnesses = tuple(r.u for r in per_u if r.status == "witness")
    if witnesses:
        obtainable = "yes"
    elif any(r.status == "unknown" for r in per_u):
        obtainable = "inconclusive"
    else:
        obtainable = "no"
    return DecisionReport(lens=lens, canonical=canonical,
                          per_u=tuple(per_u), obtainable=obtainable,
                          witnesses=witnesses, budget=budget)


def klein_scan(n_min: int, n_max: int,
               budget: SearchBudget = SearchBudget())\
        -> list[DecisionReport]:
    """Decide every Klein-bottle lens space L(4n, 2n-1) in the range."""
    if not 2 <= n_min <= n_max:
        raise ValueError("need 2 <= n_min <= n_max")
    return [decide(4 * n, 2 * n - 1, budget)
            for n in range(n_min, n_max + 1)]


_TORUS_CHECKS = {
    LensParams(16, 7): (5, 3, 16),
    LensParams(20, 9): (7, 3, 20),
}


def cross_check_torus(report: DecisionReport) -> bool:
    """Confirm a Klein-bottle 'yes' against the torus-knot surgery table.

    L(16,7) and L(20,9) are the lens spaces of the (5,3)- and
    (7,3)-torus knots with framing rs+1 and rs-1 respectively; any
    other report violates the precondition.
    """
    if report.obtainable != "yes":
        raise ValueError("cross-check requires a 'yes' report")
    key = report.canonical
    if key not in _TORUS_CHECKS:
        raise ValueError("cross-check only applies to L(16,7) and L(20,9)")
    r, s, framing = _TORUS_CHECKS[key]
    return lens_from_torus_knot(r, s, framing) == key
