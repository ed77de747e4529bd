"""The six acceptability classes, from ``open`` up to ``certain``."""

from __future__ import annotations

import enum
import functools

from .arguments import DEFAULT_ARGUMENT_CAP, Argument, ArgumentEngine, is_consistent, premises
from .kb import KnowledgeBase, Polarity, SignTag


@functools.total_ordering
class EvidenceClass(enum.Enum):
    OPEN = "open"
    SUPPORTED = "supported"
    PLAUSIBLE = "plausible"
    PROBABLE = "probable"
    CONFIRMED = "confirmed"
    CERTAIN = "certain"

    @property
    def level(self) -> int:
        return _LEVELS[self]

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, EvidenceClass):
            return NotImplemented
        return self.level < other.level


_LEVELS = {c: i for i, c in enumerate(EvidenceClass)}


def class_order(a: EvidenceClass, b: EvidenceClass) -> int:
    """-1, 0 or 1 as ``a`` is below, equal to or above ``b``."""
    return (a.level > b.level) - (a.level < b.level)


class _Classifier:
    def __init__(self, kb: KnowledgeBase, cap: int):
        self.kb = kb
        self.engine = ArgumentEngine(kb, cap)
        self._consistent: dict[frozenset[str], bool] = {}

    def consistent(self, arg: Argument) -> bool:
        if arg.grounds not in self._consistent:
            self._consistent[arg.grounds] = is_consistent(self.kb, arg.grounds)
        return self._consistent[arg.grounds]

    def side(self, prop: str, polarity: Polarity, consistent_only: bool = False) -> list[Argument]:
        return [
            a
            for a in self.engine.arguments(prop)
            if a.polarity is polarity and (not consistent_only or self.consistent(a))
        ]

    def premises_unopposed(self, arg: Argument) -> bool:
        return not any(self.side(r, Polarity.AGAINST, consistent_only=True) for r in premises(self.kb, arg) - {arg.conclusion})

    def conditions(self, prop: str, universal: bool) -> dict[EvidenceClass, bool]:
        supporting = self.side(prop, Polarity.FOR)
        consistent_for = [a for a in supporting if self.consistent(a)]
        probable = bool(consistent_for) and not self.side(prop, Polarity.AGAINST, consistent_only=True)
        if universal:
            clean = all(self.premises_unopposed(a) for a in consistent_for)
        else:
            clean = any(self.premises_unopposed(a) for a in consistent_for)
        confirmed = probable and clean
        axiomatic = any(
            a.sign is SignTag.CONFIRM and all(self.kb[i].axiomatic for i in a.grounds) for a in supporting
        )
        return {
            EvidenceClass.OPEN: True,
            EvidenceClass.SUPPORTED: bool(supporting),
            EvidenceClass.PLAUSIBLE: bool(consistent_for),
            EvidenceClass.PROBABLE: probable,
            EvidenceClass.CONFIRMED: confirmed,
            EvidenceClass.CERTAIN: confirmed and axiomatic,
        }


def class_conditions(
    kb: KnowledgeBase, prop: str, universal: bool = False, cap: int = DEFAULT_ARGUMENT_CAP
) -> dict[EvidenceClass, bool]:
    """Whether each class's defining condition holds for ``prop``.

    ``confirmed`` asks that some consistent supporting argument has no premise
    with a consistent argument against it; with ``universal=True`` every
    consistent supporting argument must pass.  ``certain`` additionally needs
    a confirming argument built from axiomatic items alone.
    """
    return _Classifier(kb, cap).conditions(prop, universal)


def classify(kb: KnowledgeBase, prop: str, universal: bool = False, cap: int = DEFAULT_ARGUMENT_CAP) -> EvidenceClass:
    conditions = class_conditions(kb, prop, universal, cap)
    return max(c for c, holds in conditions.items() if holds)
