"""Risk reports: assembling a query result and rendering it as text or JSON.

Reports are a pure function of the knowledge-base bytes, the query, the
aggregation policy and the lexicon.  Every argument is printed with its full
derivation; nothing is filtered out, however strongly the case against
outweighs the case for.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .acceptability import EvidenceClass, classify
from .arguments import DEFAULT_ARGUMENT_CAP, Argument, derivation, find_contradictions
from .cases import (
    AggregationPolicy,
    CasePattern,
    DominanceVerdict,
    Lexicon,
    aggregate,
    build_case,
    dominance,
    linguistic_term,
    load_lexicon,
    match_pattern,
)
from .kb import KnowledgeBase, format_item, parse_kb

REPORT_FORMAT = "argrisk-report/1"


@dataclass(frozen=True)
class GroundLine:
    id: str
    depth: int
    source: str


@dataclass(frozen=True)
class RenderedArgument:
    sign: str
    weight: float
    grounds: tuple[GroundLine, ...]


@dataclass(frozen=True)
class ContradictionSummary:
    prop: str
    confirming: tuple[str, ...]
    excluding: tuple[str, ...]


@dataclass(frozen=True)
class RiskReport:
    """Everything a query produces.

    ``term`` is the lexicon's word for the case pattern; ``qualified_term``
    appends the dominance qualifier where the lexicon defines one.
    """

    prop: str
    evidence_class: EvidenceClass
    pattern: CasePattern
    term: str
    qualified_term: str
    verdict: DominanceVerdict
    policy: AggregationPolicy
    for_total: float
    against_total: float
    for_args: tuple[RenderedArgument, ...]
    against_args: tuple[RenderedArgument, ...]
    contradictions: tuple[ContradictionSummary, ...]
    kb_digest: str


def kb_digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def _number(value: Fraction | float) -> float:
    return float(f"{float(value):.12g}")


def _render_argument(kb: KnowledgeBase, arg: Argument) -> RenderedArgument:
    lines = tuple(GroundLine(item.id, depth, format_item(item)) for depth, item in derivation(kb, arg))
    return RenderedArgument(arg.sign.value, _number(arg.weight), lines)


def build_report(
    kb: KnowledgeBase,
    prop: str,
    digest: str,
    policy: AggregationPolicy = AggregationPolicy.COUNT,
    lexicon: Lexicon | None = None,
    cap: int = DEFAULT_ARGUMENT_CAP,
) -> RiskReport:
    lexicon = lexicon or Lexicon()
    case = build_case(kb, prop, cap)
    pattern = match_pattern(case)
    verdict = dominance(case, policy)
    return RiskReport(
        prop=prop,
        evidence_class=classify(kb, prop, cap=cap),
        pattern=pattern,
        term=lexicon.mapping[pattern],
        qualified_term=linguistic_term(pattern, verdict, lexicon),
        verdict=verdict,
        policy=policy,
        for_total=_number(aggregate(case.for_args, policy)),
        against_total=_number(aggregate(case.against_args, policy)),
        for_args=tuple(_render_argument(kb, a) for a in case.for_args),
        against_args=tuple(_render_argument(kb, a) for a in case.against_args),
        contradictions=tuple(
            ContradictionSummary(w.prop, w.confirming.ground_ids, w.excluding.ground_ids)
            for w in find_contradictions(kb, cap)
        ),
        kb_digest=digest,
    )


def run_query(
    kb_path: str | Path,
    prop: str,
    policy: AggregationPolicy = AggregationPolicy.COUNT,
    lexicon_path: str | Path | None = None,
    cap: int = DEFAULT_ARGUMENT_CAP,
) -> RiskReport:
    """Parse the knowledge base at ``kb_path`` and report on ``prop``."""
    data = Path(kb_path).read_bytes()
    kb = parse_kb(data.decode("utf-8"))
    lexicon = load_lexicon(lexicon_path)[0] if lexicon_path is not None else None
    return build_report(kb, prop, kb_digest(data), policy, lexicon, cap)


# --------------------------------------------------------------------------
# Text


def _fmt(value: float) -> str:
    return f"{value:.12g}"


def render_text(report: RiskReport) -> str:
    lines = [f"proposition: {report.prop}"]
    if not report.for_args and not report.against_args:
        lines += [f"class: {report.evidence_class.value}", "no arguments"]
    else:
        lines += [
            f"term: {report.qualified_term}",
            f"class: {report.evidence_class.value}",
            f"pattern: {report.pattern.value}",
            f"verdict: {report.verdict.value}"
            f" ({report.policy.value}: for {_fmt(report.for_total)}, against {_fmt(report.against_total)})",
            f"kb: {report.kb_digest}",
        ]
        number = 0
        for title, args in (("case for", report.for_args), ("case against", report.against_args)):
            lines.append(f"{title}: {len(args)} argument{'' if len(args) == 1 else 's'}")
            for arg in args:
                number += 1
                lines.append(f"  {number}. [{arg.sign}] weight {_fmt(arg.weight)}")
                lines += ["    " + "  " * g.depth + g.source for g in arg.grounds]
    for c in report.contradictions:
        lines.append(
            f"contradiction: {c.prop} confirmed by {{{', '.join(c.confirming)}}}"
            f" and excluded by {{{', '.join(c.excluding)}}}"
        )
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# JSON

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "argrisk risk report",
    "type": "object",
    "additionalProperties": False,
    "required": [
        "format", "proposition", "evidence_class", "pattern", "term", "qualified_term", "verdict",
        "policy", "aggregate", "for_arguments", "against_arguments", "contradictions", "kb_digest",
    ],
    "properties": {
        "format": {"const": REPORT_FORMAT},
        "proposition": {"type": "string"},
        "evidence_class": {"enum": [c.value for c in EvidenceClass]},
        "pattern": {"enum": [p.value for p in CasePattern]},
        "term": {"type": "string", "minLength": 1},
        "qualified_term": {"type": "string", "minLength": 1},
        "verdict": {"enum": [v.value for v in DominanceVerdict]},
        "policy": {"enum": [p.value for p in AggregationPolicy]},
        "aggregate": {
            "type": "object",
            "additionalProperties": False,
            "required": ["for", "against"],
            "properties": {"for": {"type": "number", "minimum": 0}, "against": {"type": "number", "minimum": 0}},
        },
        "for_arguments": {"type": "array", "items": {"$ref": "#/$defs/argument"}},
        "against_arguments": {"type": "array", "items": {"$ref": "#/$defs/argument"}},
        "contradictions": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["proposition", "confirming", "excluding"],
                "properties": {
                    "proposition": {"type": "string"},
                    "confirming": {"type": "array", "items": {"type": "string"}},
                    "excluding": {"type": "array", "items": {"type": "string"}},
                },
            },
        },
        "kb_digest": {"type": "string", "pattern": "^sha256:[0-9a-f]{64}$"},
    },
    "$defs": {
        "argument": {
            "type": "object",
            "additionalProperties": False,
            "required": ["sign", "weight", "grounds"],
            "properties": {
                "sign": {"enum": ["++", "+", "-", "--"]},
                "weight": {"type": "number", "exclusiveMinimum": 0, "maximum": 1},
                "grounds": {
                    "type": "array",
                    "minItems": 1,
                    "items": {
                        "type": "object",
                        "additionalProperties": False,
                        "required": ["id", "depth", "source"],
                        "properties": {
                            "id": {"type": "string"},
                            "depth": {"type": "integer", "minimum": 0},
                            "source": {"type": "string"},
                        },
                    },
                },
            },
        },
    },
}


def _argument_json(arg: RenderedArgument) -> dict:
    return {
        "sign": arg.sign,
        "weight": arg.weight,
        "grounds": [{"id": g.id, "depth": g.depth, "source": g.source} for g in arg.grounds],
    }


def report_to_dict(report: RiskReport) -> dict:
    return {
        "format": REPORT_FORMAT,
        "proposition": report.prop,
        "evidence_class": report.evidence_class.value,
        "pattern": report.pattern.value,
        "term": report.term,
        "qualified_term": report.qualified_term,
        "verdict": report.verdict.value,
        "policy": report.policy.value,
        "aggregate": {"for": report.for_total, "against": report.against_total},
        "for_arguments": [_argument_json(a) for a in report.for_args],
        "against_arguments": [_argument_json(a) for a in report.against_args],
        "contradictions": [
            {"proposition": c.prop, "confirming": list(c.confirming), "excluding": list(c.excluding)}
            for c in report.contradictions
        ],
        "kb_digest": report.kb_digest,
    }


def render_structured(report: RiskReport) -> str:
    return json.dumps(report_to_dict(report), indent=2, ensure_ascii=False) + "\n"


def _argument_from_json(data: dict) -> RenderedArgument:
    grounds = tuple(GroundLine(g["id"], g["depth"], g["source"]) for g in data["grounds"])
    return RenderedArgument(data["sign"], float(data["weight"]), grounds)


def parse_structured(text: str) -> RiskReport:
    """Inverse of :func:`render_structured`."""
    data = json.loads(text)
    if data.get("format") != REPORT_FORMAT:
        raise ValueError(f"not a {REPORT_FORMAT} document")
    return RiskReport(
        prop=data["proposition"],
        evidence_class=EvidenceClass(data["evidence_class"]),
        pattern=CasePattern(data["pattern"]),
        term=data["term"],
        qualified_term=data["qualified_term"],
        verdict=DominanceVerdict(data["verdict"]),
        policy=AggregationPolicy(data["policy"]),
        for_total=float(data["aggregate"]["for"]),
        against_total=float(data["aggregate"]["against"]),
        for_args=tuple(_argument_from_json(a) for a in data["for_arguments"]),
        against_args=tuple(_argument_from_json(a) for a in data["against_arguments"]),
        contradictions=tuple(
            ContradictionSummary(c["proposition"], tuple(c["confirming"]), tuple(c["excluding"]))
            for c in data["contradictions"]
        ),
        kb_digest=data["kb_digest"],
    )
