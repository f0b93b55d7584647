"""Deciding which lens spaces arise by surface-slope surgery on doubly
primitive knots."""

from .decide import (DecisionReport, UReport, cross_check_torus, decide,
                     klein_scan)
from .diagram import PlanarDiagram
from .lens import LensParams, canonical_form, homeomorphic, normalize_u
from .residues import criterion_value, klein_candidates, passes_criterion
from .schubert import CALIBRATION_ID, Mode, SchubertDiagram, band_modify
from .unknot import Certificate, SearchBudget, unknot_status

__all__ = [
    "CALIBRATION_ID", "Certificate", "DecisionReport", "LensParams",
    "Mode", "PlanarDiagram", "SchubertDiagram", "SearchBudget", "UReport",
    "band_modify", "canonical_form", "criterion_value", "cross_check_torus",
    "decide", "homeomorphic", "klein_candidates", "klein_scan",
    "normalize_u", "passes_criterion", "unknot_status",
]
