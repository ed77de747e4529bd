"""Overall carcinogenicity category from human and animal weight of evidence."""

from __future__ import annotations

import enum


class StudyEvidence(enum.Enum):
    SUFFICIENT = "sufficient"
    LIMITED = "limited"
    INADEQUATE = "inadequate"
    NO_DATA = "no_data"
    NO_EVIDENCE = "no_evidence"


class OverallCategory(enum.Enum):
    KNOWN = "known_human_carcinogen"
    PROBABLE_CARCINOGEN = "probable_carcinogen"
    POSSIBLE = "possible"
    NOT_CLASSIFIABLE = "not_classifiable"
    NON_CARCINOGENIC = "non_carcinogenic"


# ordered from least to most concern
CATEGORY_ORDER = (
    OverallCategory.NON_CARCINOGENIC,
    OverallCategory.NOT_CLASSIFIABLE,
    OverallCategory.POSSIBLE,
    OverallCategory.PROBABLE_CARCINOGEN,
    OverallCategory.KNOWN,
)

_ANY = frozenset(StudyEvidence)
S = StudyEvidence

# (human levels, animal levels, category), first match wins
DECISION_TABLE: tuple[tuple[frozenset[StudyEvidence], frozenset[StudyEvidence], OverallCategory], ...] = (
    (frozenset({S.SUFFICIENT}), _ANY, OverallCategory.KNOWN),
    (frozenset({S.LIMITED}), frozenset({S.SUFFICIENT}), OverallCategory.PROBABLE_CARCINOGEN),
    (frozenset({S.INADEQUATE, S.NO_DATA}), frozenset({S.SUFFICIENT}), OverallCategory.POSSIBLE),
    (frozenset({S.LIMITED}), _ANY - {S.SUFFICIENT}, OverallCategory.POSSIBLE),
    (frozenset({S.NO_EVIDENCE}), frozenset({S.NO_EVIDENCE}), OverallCategory.NON_CARCINOGENIC),
)
FALLBACK = OverallCategory.NOT_CLASSIFIABLE

del S


def matching_rows(human: StudyEvidence, animal: StudyEvidence) -> list[int]:
    """Indices of every table row whose condition holds (not just the first)."""
    return [i for i, (hs, as_, _) in enumerate(DECISION_TABLE) if human in hs and animal in as_]


def classify_woe(human: StudyEvidence, animal: StudyEvidence) -> OverallCategory:
    for humans, animals, category in DECISION_TABLE:
        if human in humans and animal in animals:
            return category
    return FALLBACK
