"""Construction of subset-minimal arguments.

An argument for ``p`` is a pair of grounds (a set of item ids) and a sign
such that the grounds derive ``p`` with that sign and no proper subset
derives ``p`` with a sign of the same polarity that is at least as strong.
Derivation chains through rules whose antecedents are each satisfied by a
supporting (``+`` or ``++``) derivation; strength follows the weakest link.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .kb import KbItem, KnowledgeBase, Polarity, SignTag

DEFAULT_ARGUMENT_CAP = 10_000


class ArgumentCapExceeded(RuntimeError):
    def __init__(self, prop: str, cap: int):
        self.prop = prop
        self.cap = cap
        super().__init__(f"more than {cap} candidate arguments while deriving {prop!r}")


@dataclass(frozen=True)
class Argument:
    conclusion: str
    sign: SignTag
    grounds: frozenset[str]
    weight: Fraction

    @property
    def polarity(self) -> Polarity:
        return self.sign.polarity

    @property
    def ground_ids(self) -> tuple[str, ...]:
        return tuple(sorted(self.grounds))

    def sort_key(self) -> tuple:
        return (self.conclusion, self.sign.rank, self.ground_ids)


@dataclass(frozen=True)
class ContradictionWitness:
    prop: str
    confirming: Argument
    excluding: Argument


def propagate_sign(rule_sign: SignTag, antecedent_signs: Sequence[SignTag]) -> SignTag:
    """Sign of a rule's conclusion given the signs its antecedents were derived with.

    A strong rule keeps its strength only when every antecedent is confirmed.
    """
    for sign in antecedent_signs:
        if sign.polarity is not Polarity.FOR:
            raise ValueError(f"antecedent derived with {sign.value!r} cannot satisfy a rule condition")
    if rule_sign.strength == 1:
        return rule_sign
    if all(sign is SignTag.CONFIRM for sign in antecedent_signs):
        return rule_sign
    return rule_sign.weakened()


def grounds_weight(kb: KnowledgeBase, grounds: Iterable[str]) -> Fraction:
    return math.prod((kb[i].weight for i in grounds), start=Fraction(1))


def _dominates(small: tuple[frozenset[str], SignTag], big: tuple[frozenset[str], SignTag]) -> bool:
    return (
        small[0] < big[0]
        and small[1].polarity is big[1].polarity
        and small[1].strength >= big[1].strength
    )


def minimize(candidates: Iterable[tuple[frozenset[str], SignTag]]) -> list[tuple[frozenset[str], SignTag]]:
    """Drop every (grounds, sign) pair beaten by one with strictly fewer items."""
    unique = sorted(set(candidates), key=lambda c: (len(c[0]), c[1].rank, sorted(c[0])))
    kept: list[tuple[frozenset[str], SignTag]] = []
    for cand in unique:
        # candidates are sorted by size, so only earlier ones can be proper subsets
        if not any(_dominates(other, cand) for other in kept):
            kept.append(cand)
    return kept


class ArgumentEngine:
    """Memoising backward chainer over one knowledge base.

    Instances are cheap; the memo is private, so an engine is safe to use
    for any number of queries against its (immutable) knowledge base.
    """

    def __init__(self, kb: KnowledgeBase, cap: int = DEFAULT_ARGUMENT_CAP):
        self.kb = kb
        self.cap = cap
        self._memo: dict[str, tuple[Argument, ...]] = {}

    def arguments(self, prop: str) -> tuple[Argument, ...]:
        """All arguments concluding ``prop``, canonically ordered."""
        if prop not in self._memo:
            # walk antecedents first so recursion depth stays bounded
            for dep in self._dependencies(prop):
                if dep not in self._memo:
                    self._memo[dep] = self._build(dep)
        return self._memo[prop]

    def supporting(self, prop: str) -> tuple[Argument, ...]:
        return tuple(a for a in self.arguments(prop) if a.polarity is Polarity.FOR)

    def _dependencies(self, prop: str) -> list[str]:
        order: list[str] = []
        seen: set[str] = set()
        stack = [(prop, False)]
        while stack:
            node, expanded = stack.pop()
            if expanded:
                order.append(node)
                continue
            if node in seen:
                continue
            seen.add(node)
            stack.append((node, True))
            for item in self.kb.concluding.get(node, ()):
                stack.extend((a, False) for a in item.antecedents if a not in seen)
        return order

    def _build(self, prop: str) -> tuple[Argument, ...]:
        candidates: dict[tuple[frozenset[str], SignTag], Fraction | None] = {}
        for item in self.kb.concluding.get(prop, ()):
            for grounds, sign, weight in self._expand(item):
                if candidates.get((grounds, sign)) is None:
                    candidates[grounds, sign] = weight
            if len(candidates) > self.cap:
                raise ArgumentCapExceeded(prop, self.cap)
        args = []
        for grounds, sign in minimize(candidates):
            weight = candidates[grounds, sign]
            if weight is None:
                weight = grounds_weight(self.kb, grounds)
            args.append(Argument(prop, sign, grounds, weight))
        return tuple(sorted(args, key=Argument.sort_key))

    def _expand(self, item: KbItem) -> Iterator[tuple[frozenset[str], SignTag, Fraction | None]]:
        """Candidate (grounds, sign, weight) triples; weight is None when sub-grounds overlap."""
        if item.is_fact:
            yield frozenset({item.id}), item.sign, item.weight
            return
        options = [[a for a in self._memo[ant] if a.polarity is Polarity.FOR] for ant in item.antecedents]
        if math.prod(len(o) for o in options) > self.cap:
            raise ArgumentCapExceeded(item.consequent, self.cap)
        for combo in itertools.product(*options):
            grounds = frozenset({item.id}).union(*(a.grounds for a in combo))
            sign = propagate_sign(item.sign, [a.sign for a in combo])
            weight = None
            if len(grounds) == 1 + sum(len(a.grounds) for a in combo):
                weight = math.prod((a.weight for a in combo), start=item.weight)
            yield grounds, sign, weight


def arguments_concerning(kb: KnowledgeBase, prop: str, cap: int = DEFAULT_ARGUMENT_CAP) -> tuple[Argument, ...]:
    return ArgumentEngine(kb, cap).arguments(prop)


def derive_signs(kb: KnowledgeBase, prop: str, cap: int = DEFAULT_ARGUMENT_CAP) -> set[SignTag]:
    return {a.sign for a in arguments_concerning(kb, prop, cap)}


def derivable_signs(kb: KnowledgeBase) -> dict[str, set[SignTag]]:
    """Every sign each proposition can be derived with from the whole of ``kb``."""
    signs: dict[str, set[SignTag]] = {}
    for prop in kb.topological_order:
        found: set[SignTag] = set()
        for item in kb.concluding.get(prop, ()):
            if item.is_fact or item.sign.strength == 1:
                if all(_supports(signs, a) for a in item.antecedents):
                    found.add(item.sign)
                continue
            ante = [signs.get(a, set()) for a in item.antecedents]
            if not all(_supports(signs, a) for a in item.antecedents):
                continue
            if all(SignTag.CONFIRM in s for s in ante):
                found.add(item.sign)
            if any(SignTag.SUPPORT in s for s in ante):
                found.add(item.sign.weakened())
        signs[prop] = found
    return signs


def _supports(signs: dict[str, set[SignTag]], prop: str) -> bool:
    return any(s.polarity is Polarity.FOR for s in signs.get(prop, ()))


def is_consistent(kb: KnowledgeBase, grounds: Iterable[str]) -> bool:
    """False iff the grounds on their own both confirm and exclude some proposition."""
    signs = derivable_signs(kb.subset(grounds))
    return not any(SignTag.CONFIRM in s and SignTag.EXCLUDE in s for s in signs.values())


def find_contradictions(kb: KnowledgeBase, cap: int = DEFAULT_ARGUMENT_CAP) -> tuple[ContradictionWitness, ...]:
    engine = ArgumentEngine(kb, cap)
    witnesses = []
    for prop in sorted(kb.concluding):
        args = engine.arguments(prop)
        confirming = next((a for a in args if a.sign is SignTag.CONFIRM), None)
        excluding = next((a for a in args if a.sign is SignTag.EXCLUDE), None)
        if confirming and excluding:
            witnesses.append(ContradictionWitness(prop, confirming, excluding))
    return tuple(witnesses)


def derivation(kb: KnowledgeBase, argument: Argument) -> list[tuple[int, KbItem]]:
    """The argument's derivation tree as (depth, item) pairs in depth-first order.

    Minimal grounds hold exactly one item per derived proposition, so the
    tree is unique.  Items shared between branches are listed once.
    """
    concluding = {kb[i].consequent: kb[i] for i in argument.ground_ids}
    lines: list[tuple[int, KbItem]] = []
    seen: set[str] = set()
    stack = [(argument.conclusion, 0)]
    while stack:
        prop, depth = stack.pop()
        item = concluding[prop]
        if item.id in seen:
            continue
        seen.add(item.id)
        lines.append((depth, item))
        stack.extend((ant, depth + 1) for ant in reversed(item.antecedents))
    return lines


def premises(kb: KnowledgeBase, argument: Argument) -> set[str]:
    """Propositions used as rule conditions anywhere in the argument's grounds."""
    return {ant for i in argument.grounds for ant in kb[i].antecedents}
