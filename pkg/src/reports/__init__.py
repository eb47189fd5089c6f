"""Relatórios: modelos SQLModel e emissores."""

from src.reports.emitters import Report, ReportEmitter, get_emitter
from src.reports.models import (
    MAX_TEXT,
    CensusReport,
    CosetBreakdown,
    EstimateReport,
    GammaReport,
    NamedValue,
    PairReport,
    SylowReport,
    TowerEvaluation,
    VerificationOutcome,
    fraction_str,
)

__all__ = [
    "MAX_TEXT",
    "CensusReport",
    "CosetBreakdown",
    "EstimateReport",
    "GammaReport",
    "NamedValue",
    "PairReport",
    "Report",
    "ReportEmitter",
    "SylowReport",
    "TowerEvaluation",
    "VerificationOutcome",
    "fraction_str",
    "get_emitter",
]
