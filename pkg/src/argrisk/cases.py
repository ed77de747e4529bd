"""Cases for and against a proposition, their weights, and their linguistic labels."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping

from .arguments import DEFAULT_ARGUMENT_CAP, Argument, ArgumentEngine
from .kb import KnowledgeBase, Polarity, SignTag

BALANCE_TOLERANCE = 1e-9


class AggregationPolicy(enum.Enum):
    COUNT = "count"
    SUM = "sum"
    MAX = "max"


class DominanceVerdict(enum.Enum):
    FOR_DOMINATES = "for_dominates"
    AGAINST_DOMINATES = "against_dominates"
    BALANCED = "balanced"


class CasePattern(enum.Enum):
    # listed in matching priority, most severe conflict first
    CONTRADICTORY = "contradictory"
    CONFIRMED_BUT_OPPOSED = "confirmed_but_opposed"
    SUPPORTED_BUT_EXCLUDED = "supported_but_excluded"
    EQUIVOCAL = "equivocal"
    CONFIRMED_CLEAN = "confirmed_clean"
    SUPPORTED_CLEAN = "supported_clean"
    EXCLUDED_CLEAN = "excluded_clean"
    OPPOSED_CLEAN = "opposed_clean"
    OPEN_PATTERN = "open_pattern"


@dataclass(frozen=True)
class Case:
    prop: str
    for_args: tuple[Argument, ...] = ()
    against_args: tuple[Argument, ...] = ()

    @property
    def arguments(self) -> tuple[Argument, ...]:
        return self.for_args + self.against_args

    def has(self, sign: SignTag) -> bool:
        return any(a.sign is sign for a in self.arguments)


def build_case(kb: KnowledgeBase, prop: str, cap: int = DEFAULT_ARGUMENT_CAP) -> Case:
    args = ArgumentEngine(kb, cap).arguments(prop)
    return Case(
        prop,
        tuple(a for a in args if a.polarity is Polarity.FOR),
        tuple(a for a in args if a.polarity is Polarity.AGAINST),
    )


def aggregate(side: Iterable[Argument], policy: AggregationPolicy) -> Fraction:
    side = list(side)
    if policy is AggregationPolicy.COUNT:
        return Fraction(len(side))
    if policy is AggregationPolicy.SUM:
        return sum((a.weight for a in side), Fraction(0))
    return max((a.weight for a in side), default=Fraction(0))


def dominance(case: Case, policy: AggregationPolicy) -> DominanceVerdict:
    pro = aggregate(case.for_args, policy)
    con = aggregate(case.against_args, policy)
    if abs(pro - con) <= BALANCE_TOLERANCE:
        return DominanceVerdict.BALANCED
    return DominanceVerdict.FOR_DOMINATES if pro > con else DominanceVerdict.AGAINST_DOMINATES


def match_pattern(case: Case) -> CasePattern:
    confirm = case.has(SignTag.CONFIRM)
    exclude = case.has(SignTag.EXCLUDE)
    pro = bool(case.for_args)
    con = bool(case.against_args)
    if confirm and exclude:
        return CasePattern.CONTRADICTORY
    if confirm and con:
        return CasePattern.CONFIRMED_BUT_OPPOSED
    if pro and exclude:
        return CasePattern.SUPPORTED_BUT_EXCLUDED
    if pro and con:
        return CasePattern.EQUIVOCAL
    if confirm:
        return CasePattern.CONFIRMED_CLEAN
    if pro:
        return CasePattern.SUPPORTED_CLEAN
    if exclude:
        return CasePattern.EXCLUDED_CLEAN
    if con:
        return CasePattern.OPPOSED_CLEAN
    return CasePattern.OPEN_PATTERN


# --------------------------------------------------------------------------
# Lexicon

DEFAULT_TERMS: Mapping[CasePattern, str] = {
    CasePattern.CONTRADICTORY: "contradictory",
    CasePattern.CONFIRMED_BUT_OPPOSED: "contested confirmation",
    CasePattern.SUPPORTED_BUT_EXCLUDED: "discounted",
    CasePattern.EQUIVOCAL: "equivocal",
    CasePattern.CONFIRMED_CLEAN: "confirmed",
    CasePattern.SUPPORTED_CLEAN: "supported",
    CasePattern.EXCLUDED_CLEAN: "excluded",
    CasePattern.OPPOSED_CLEAN: "doubted",
    CasePattern.OPEN_PATTERN: "open",
}

DEFAULT_SUFFIXES: Mapping[DominanceVerdict, str] = {
    DominanceVerdict.FOR_DOMINATES: "on balance supported",
    DominanceVerdict.AGAINST_DOMINATES: "on balance opposed",
}


class LexiconError(ValueError):
    pass


@dataclass(frozen=True)
class Lexicon:
    """Case pattern to linguistic term, plus qualifiers appended to ``equivocal``."""

    mapping: Mapping[CasePattern, str] = field(default_factory=lambda: dict(DEFAULT_TERMS))
    dominance_suffixes: Mapping[DominanceVerdict, str] = field(default_factory=lambda: dict(DEFAULT_SUFFIXES))

    def __post_init__(self) -> None:
        missing = [p.value for p in CasePattern if not self.mapping.get(p)]
        if missing:
            raise LexiconError("lexicon has no term for " + ", ".join(missing))


def linguistic_term(pattern: CasePattern, verdict: DominanceVerdict, lexicon: Lexicon | None = None) -> str:
    lexicon = lexicon or Lexicon()
    term = lexicon.mapping[pattern]
    suffix = lexicon.dominance_suffixes.get(verdict)
    if pattern is CasePattern.EQUIVOCAL and suffix:
        term = f"{term}, {suffix}"
    return term


_LEXICON_LINE = re.compile(r'\s*([A-Za-z_][A-Za-z0-9_]*)\s*=\s*"([^"\\]*)"\s*(?:#.*)?\Z')


def parse_lexicon(text: str) -> tuple[Lexicon, list[str]]:
    """Parse ``name = "term"`` lines.  Returns the lexicon and fallback warnings.

    Names are case pattern names (``equivocal``, ``open_pattern``, ...) or
    dominance verdict names, the latter setting the qualifier appended to
    equivocal terms (an empty string disables it).
    """
    terms: dict[CasePattern, str] = {}
    suffixes: dict[DominanceVerdict, str] = dict(DEFAULT_SUFFIXES)
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        m = _LEXICON_LINE.match(line)
        if m is None:
            raise LexiconError(f'line {lineno}: expected name = "term"')
        name, value = m.group(1).lower(), m.group(2)
        if name in CasePattern._value2member_map_:
            if not value.strip():
                raise LexiconError(f"line {lineno}: empty term for {name}")
            terms[CasePattern(name)] = value
        elif name in DominanceVerdict._value2member_map_:
            suffixes[DominanceVerdict(name)] = value
        else:
            raise LexiconError(f"line {lineno}: unknown pattern name {m.group(1)!r}")
    warnings = []
    for pattern in CasePattern:
        if pattern not in terms:
            warnings.append(f"lexicon: no term for {pattern.value}, using {DEFAULT_TERMS[pattern]!r}")
            terms[pattern] = DEFAULT_TERMS[pattern]
    return Lexicon(terms, {v: s for v, s in suffixes.items() if s}), warnings


def load_lexicon(path: str | Path) -> tuple[Lexicon, list[str]]:
    return parse_lexicon(Path(path).read_text(encoding="utf-8"))
