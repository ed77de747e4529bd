"""Qualitative risk assessment by constructing arguments for and against a proposition."""

__version__ = "0.1.0"

from .acceptability import EvidenceClass, class_order, classify
from .arguments import (
    Argument,
    ArgumentCapExceeded,
    ContradictionWitness,
    arguments_concerning,
    derive_signs,
    find_contradictions,
    is_consistent,
    propagate_sign,
)
from .cases import (
    AggregationPolicy,
    Case,
    CasePattern,
    DominanceVerdict,
    Lexicon,
    aggregate,
    build_case,
    dominance,
    linguistic_term,
    match_pattern,
)
from .kb import KbItem, KnowledgeBase, SignTag, format_kb, parse_kb, validate_kb
from .report import RiskReport, render_structured, render_text, run_query
from .woe import OverallCategory, StudyEvidence, classify_woe

from pathlib import Path as _Path

CORPUS_DIR = _Path(__file__).parent / "corpus"


def corpus_path(name: str) -> _Path:
    """Path of a bundled sample knowledge base, e.g. ``corpus_path("benzidine_like")``."""
    return CORPUS_DIR / f"{name}.kb"
