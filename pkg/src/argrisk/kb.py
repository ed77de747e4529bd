"""Knowledge-base data model and the line-oriented rule language.

A knowledge base is a set of identified facts and rules.  Every item
concludes a proposition with one of four sign tags::

    fact ames_positive: mutagenic : + .
    rule r1: aromatic_amine & bioavailable -> carcinogenic : + weight 0.6 .
    fact a1: aromatic_amine : ++ weight 1 axiom .

Rule bodies are conjunctions of positive conditions; opposition is
expressed only through the sign of a conclusion.  Rule graphs must be
acyclic.
"""

from __future__ import annotations

import enum
import graphlib
import re
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

__all__ = [
    "ItemKind",
    "KbError",
    "KbSyntaxError",
    "KbValidationError",
    "KbItem",
    "KnowledgeBase",
    "Polarity",
    "SignTag",
    "format_item",
    "format_kb",
    "is_identifier",
    "is_proposition",
    "parse_kb",
    "validate_kb",
]

PROPOSITION_RE = re.compile(r"[a-z][a-zA-Z0-9_]*\Z")
IDENTIFIER_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def is_proposition(name: str) -> bool:
    return bool(PROPOSITION_RE.match(name))


def is_identifier(name: str) -> bool:
    return bool(IDENTIFIER_RE.match(name))


class Polarity(enum.Enum):
    FOR = "for"
    AGAINST = "against"


class SignTag(enum.Enum):
    """The four qualifiers a derived proposition can carry."""

    CONFIRM = "++"
    SUPPORT = "+"
    OPPOSE = "-"
    EXCLUDE = "--"

    @property
    def polarity(self) -> Polarity:
        if self in (SignTag.SUPPORT, SignTag.CONFIRM):
            return Polarity.FOR
        return Polarity.AGAINST

    @property
    def strength(self) -> int:
        """1 for the weak tags (+, -), 2 for the strong ones (++, --)."""
        return 2 if self in (SignTag.CONFIRM, SignTag.EXCLUDE) else 1

    @property
    def rank(self) -> int:
        # canonical ordering: ++, +, -, --
        return _SIGN_RANK[self]

    def weakened(self) -> SignTag:
        return {SignTag.CONFIRM: SignTag.SUPPORT, SignTag.EXCLUDE: SignTag.OPPOSE}.get(self, self)

    @classmethod
    def from_token(cls, token: str) -> SignTag:
        return cls(token)


_SIGN_RANK = {SignTag.CONFIRM: 0, SignTag.SUPPORT: 1, SignTag.OPPOSE: 2, SignTag.EXCLUDE: 3}


class ItemKind(enum.Enum):
    FACT = "fact"
    RULE = "rule"


class KbError(Exception):
    """Base class for knowledge-base errors, optionally carrying a source location."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)


class KbSyntaxError(KbError):
    def __init__(self, message: str, line: int, column: int, token: str):
        self.token = token
        super().__init__(f"{message} (at {token!r})", line, column)


class KbValidationError(KbError):
    pass


class CycleError(KbValidationError):
    def __init__(self, cycle: list[str]):
        self.cycle = cycle
        super().__init__("cyclic rule graph: " + " -> ".join(cycle))


@dataclass(frozen=True)
class KbItem:
    id: str
    kind: ItemKind
    antecedents: tuple[str, ...]
    consequent: str
    sign: SignTag
    weight: Fraction = Fraction(1)
    axiomatic: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "antecedents", tuple(self.antecedents))
        object.__setattr__(self, "weight", Fraction(self.weight))
        problem = item_problem(self)
        if problem:
            raise KbValidationError(f"item {self.id!r}: {problem}")

    @classmethod
    def fact(cls, id: str, prop: str, sign: SignTag, weight=1, axiomatic: bool = False) -> KbItem:
        return cls(id, ItemKind.FACT, (), prop, sign, Fraction(weight), axiomatic)

    @classmethod
    def rule(
        cls,
        id: str,
        antecedents: Iterable[str],
        consequent: str,
        sign: SignTag,
        weight=1,
        axiomatic: bool = False,
    ) -> KbItem:
        return cls(id, ItemKind.RULE, tuple(antecedents), consequent, sign, Fraction(weight), axiomatic)

    @property
    def is_fact(self) -> bool:
        return self.kind is ItemKind.FACT


def item_problem(item: KbItem) -> str | None:
    """Describe the first invariant ``item`` violates, or return None."""
    if not is_identifier(item.id):
        return f"invalid identifier {item.id!r}"
    for prop in (*item.antecedents, item.consequent):
        if not is_proposition(prop):
            return f"invalid proposition name {prop!r}"
    if item.kind is ItemKind.FACT and item.antecedents:
        return "a fact has no antecedents"
    if item.kind is ItemKind.RULE and not item.antecedents:
        return "a rule needs at least one antecedent"
    if not 0 < item.weight <= 1:
        return f"weight {_format_weight(item.weight, strict=False)} outside (0, 1]"
    if item.axiomatic and item.weight != 1:
        return "an axiomatic item must have weight 1"
    if item.consequent in item.antecedents:
        return f"rule concludes its own antecedent {item.consequent!r}"
    return None


@dataclass(frozen=True)
class KnowledgeBase:
    """An immutable, validated collection of facts and rules.

    ``items`` keeps source order; ``topological_order`` lists every mentioned
    proposition so that each comes after all antecedents of rules concluding it.
    """

    items: tuple[KbItem, ...] = ()
    by_id: Mapping[str, KbItem] = field(init=False, repr=False, compare=False)
    concluding: Mapping[str, tuple[KbItem, ...]] = field(init=False, repr=False, compare=False)
    propositions: Mapping[str, tuple[str, ...]] = field(init=False, repr=False, compare=False)
    topological_order: tuple[str, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        items = tuple(self.items)
        object.__setattr__(self, "items", items)
        by_id: dict[str, KbItem] = {}
        concluding: dict[str, list[KbItem]] = defaultdict(list)
        mentions: dict[str, list[str]] = defaultdict(list)
        for item in items:
            if item.id in by_id:
                raise KbValidationError(f"duplicate item id {item.id!r}")
            by_id[item.id] = item
            concluding[item.consequent].append(item)
            for prop in dict.fromkeys((*item.antecedents, item.consequent)):
                mentions[prop].append(item.id)
        object.__setattr__(self, "by_id", by_id)
        object.__setattr__(self, "concluding", {p: tuple(v) for p, v in concluding.items()})
        object.__setattr__(self, "propositions", {p: tuple(v) for p, v in mentions.items()})
        object.__setattr__(self, "topological_order", _topological_order(items))

    def __len__(self) -> int:
        return len(self.items)

    def __contains__(self, item_id: object) -> bool:
        return item_id in self.by_id

    def __getitem__(self, item_id: str) -> KbItem:
        return self.by_id[item_id]

    def subset(self, ids: Iterable[str]) -> KnowledgeBase:
        """The sub-base holding only ``ids``, in source order."""
        wanted = set(ids)
        return KnowledgeBase(tuple(it for it in self.items if it.id in wanted))

    def union(self, other: Iterable[KbItem]) -> KnowledgeBase:
        return KnowledgeBase(self.items + tuple(other))


def _topological_order(items: tuple[KbItem, ...]) -> tuple[str, ...]:
    graph: dict[str, set[str]] = {}
    for item in items:
        graph.setdefault(item.consequent, set()).update(item.antecedents)
        for prop in item.antecedents:
            graph.setdefault(prop, set())
    # static_order breaks ties by insertion order; sort nodes first for determinism
    sorter = graphlib.TopologicalSorter({p: sorted(graph[p]) for p in sorted(graph)})
    try:
        return tuple(sorter.static_order())
    except graphlib.CycleError as exc:
        cycle = list(exc.args[1])
        raise CycleError(cycle) from None


# --------------------------------------------------------------------------
# Parsing

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<arrow>->)
  | (?P<sign>\+\+|--|\+|-)
  | (?P<number>[0-9]+(?:\.[0-9]+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<colon>:)
  | (?P<amp>&)
  | (?P<dot>\.)
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(source: str) -> list[_Token]:
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            bad = source[pos]
            raise KbSyntaxError("unexpected character", line, pos - line_start + 1, bad)
        kind = m.lastgroup
        text = m.group()
        if kind not in ("ws", "comment"):
            tokens.append(_Token(kind, text, line, pos - line_start + 1))
        newlines = text.count("\n")
        if newlines:
            line += newlines
            line_start = pos + text.rindex("\n") + 1
        pos = m.end()
    tokens.append(_Token("eof", "<end of input>", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, source: str):
        self.tokens = _tokenize(source)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str, text: str | None = None) -> _Token:
        tok = self.peek()
        if tok.kind != kind or (text is not None and tok.text != text):
            raise KbSyntaxError(f"expected {what}", tok.line, tok.column, tok.text)
        return self.advance()

    def proposition(self) -> str:
        tok = self.expect("ident", "a proposition name")
        if not is_proposition(tok.text):
            raise KbSyntaxError(
                "proposition names must start with a lowercase letter", tok.line, tok.column, tok.text
            )
        return tok.text

    def statement(self) -> tuple[KbItem, _Token]:
        head = self.peek()
        if head.kind != "ident" or head.text not in ("fact", "rule"):
            raise KbSyntaxError("expected 'fact' or 'rule'", head.line, head.column, head.text)
        self.advance()
        item_id = self.expect("ident", "an item identifier").text
        self.expect("colon", "':' after the item identifier")
        antecedents: list[str] = []
        if head.text == "rule":
            antecedents.append(self.proposition())
            while self.peek().kind == "amp":
                self.advance()
                antecedents.append(self.proposition())
            self.expect("arrow", "'&' or '->'")
        consequent_tok = self.peek()
        consequent = self.proposition()
        self.expect("colon", "':' before the sign")
        sign = SignTag.from_token(self.expect("sign", "a sign (++, +, -, --)").text)
        weight = Fraction(1)
        axiomatic = False
        if self.peek().kind == "ident" and self.peek().text == "weight":
            self.advance()
            tok = self.expect("number", "a decimal weight")
            weight = Fraction(tok.text)
            if not 0 < weight <= 1:
                raise KbValidationError(f"weight {tok.text} outside (0, 1]", tok.line, tok.column)
        if self.peek().kind == "ident" and self.peek().text == "axiom":
            tok = self.advance()
            if weight != 1:
                raise KbValidationError("an axiomatic item must have weight 1", tok.line, tok.column)
            axiomatic = True
        self.expect("dot", "'.' ending the statement")
        if consequent in antecedents:
            raise KbValidationError(
                f"rule {item_id!r} concludes its own antecedent {consequent!r}",
                consequent_tok.line,
                consequent_tok.column,
            )
        kind = ItemKind.RULE if head.text == "rule" else ItemKind.FACT
        return KbItem(item_id, kind, tuple(antecedents), consequent, sign, weight, axiomatic), head


def parse_kb(source: str) -> KnowledgeBase:
    """Parse rule-language text into a validated :class:`KnowledgeBase`.

    Raises :class:`KbSyntaxError` for malformed text and
    :class:`KbValidationError` (or its :class:`CycleError` subclass) when the
    statements are well formed but violate a knowledge-base invariant.
    """
    if source.startswith("﻿"):
        source = source[1:]
    parser = _Parser(source)
    items: list[KbItem] = []
    seen: dict[str, _Token] = {}
    while parser.peek().kind != "eof":
        item, head = parser.statement()
        if item.id in seen:
            first = seen[item.id]
            raise KbValidationError(
                f"duplicate item id {item.id!r} (first defined on line {first.line})", head.line, head.column
            )
        seen[item.id] = head
        items.append(item)
    return KnowledgeBase(tuple(items))


# --------------------------------------------------------------------------
# Serialization


def _format_weight(weight: Fraction, strict: bool = True) -> str:
    """Exact decimal text for ``weight``; rationals without one raise ValueError."""
    den = weight.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        if strict:
            raise ValueError(f"weight {weight} has no finite decimal expansion")
        return str(weight)
    places = max(twos, fives)
    scaled = weight.numerator * 10**places // weight.denominator
    if not places:
        return str(scaled)
    whole, frac = divmod(scaled, 10**places)
    return f"{whole}.{frac:0{places}d}".rstrip("0").rstrip(".")


def format_item(item: KbItem) -> str:
    if item.is_fact:
        body = item.consequent
    else:
        body = " & ".join(item.antecedents) + " -> " + item.consequent
    text = f"{item.kind.value} {item.id}: {body} : {item.sign.value}"
    if item.weight != 1:
        text += f" weight {_format_weight(item.weight)}"
    if item.axiomatic:
        text += " axiom"
    return text + " ."


def format_kb(kb: KnowledgeBase) -> str:
    return "".join(format_item(item) + "\n" for item in kb.items)


# --------------------------------------------------------------------------
# Validation


def validate_kb(kb: KnowledgeBase) -> list[str]:
    """Non-fatal diagnostics for a parsed knowledge base.

    Reports antecedents nothing concludes, antecedents that can never be
    satisfied because no supporting derivation of them exists, and facts
    repeated under different ids.
    """
    warnings: list[str] = []

    needed_by: dict[str, list[str]] = defaultdict(list)
    for item in kb.items:
        for prop in item.antecedents:
            needed_by[prop].append(item.id)

    supportable: set[str] = set()
    for prop in kb.topological_order:
        for item in kb.concluding.get(prop, ()):
            if item.sign.polarity is Polarity.FOR and all(a in supportable for a in item.antecedents):
                supportable.add(prop)
                break

    for prop in sorted(needed_by):
        rules = ", ".join(needed_by[prop])
        if prop not in kb.concluding:
            warnings.append(f"underivable antecedent {prop!r}: nothing concludes it (needed by {rules})")
        elif prop not in supportable:
            warnings.append(
                f"antecedent {prop!r} is never supported: no derivation with sign + or ++ exists,"
                f" so these rules never fire ({rules})"
            )

    groups: dict[tuple, list[str]] = defaultdict(list)
    for item in kb.items:
        if item.is_fact:
            groups[(item.consequent, item.sign, item.weight, item.axiomatic)].append(item.id)
    for key, ids in sorted(groups.items(), key=lambda kv: kv[1][0]):
        if len(ids) > 1:
            warnings.append(f"duplicate facts {', '.join(ids)} state the same content ({key[0]} : {key[1].value})")
    return warnings
