from __future__ import annotations

import random

import pytest

from argrisk.acceptability import EvidenceClass, class_conditions, class_order, classify
from argrisk.arguments import arguments_concerning
from argrisk.kb import Polarity, parse_kb

from kbgen import random_kb
from oracle import Oracle

EC = EvidenceClass


def test_empty_kb_is_open():
    assert classify(parse_kb(""), "p") is EC.OPEN


def test_support_and_opposition_is_plausible():
    assert classify(parse_kb("fact f1: p : + .\nfact f2: p : - ."), "p") is EC.PLAUSIBLE


def test_axiomatic_confirming_chain_is_certain():
    kb = parse_kb("fact a: a : ++ axiom .\nrule r1: a -> p : ++ axiom .")
    assert classify(kb, "p") is EC.CERTAIN


def test_opposed_premise_blocks_confirmation():
    kb = parse_kb("fact a: a : + .\nrule r1: a -> p : + .\nfact b: a : - .")
    # literal reading: nothing argues against p itself, so p is probable;
    # the opposed premise a keeps it from being confirmed
    assert Oracle(kb).classify("p") == "probable"
    assert classify(kb, "p") is EC.PROBABLE
    assert not class_conditions(kb, "p")[EC.CONFIRMED]


def test_intermediate_conclusions_count_as_premises():
    kb = parse_kb("fact f: a : + .\nrule r1: a -> b : + .\nrule r2: b -> p : + .\nfact g: b : - .")
    assert classify(kb, "p") is EC.PROBABLE
    assert classify(kb.subset({"f", "r1", "r2"}), "p") is EC.CONFIRMED


def test_bare_fact_is_confirmed_when_unopposed():
    assert classify(parse_kb("fact f: p : + ."), "p") is EC.CONFIRMED


def test_axiomatic_support_does_not_make_a_contested_proposition_certain():
    kb = parse_kb("fact a: p : ++ axiom .\nfact b: p : - .")
    assert classify(kb, "p") is EC.PLAUSIBLE


def test_existential_versus_universal_confirmation():
    kb = parse_kb("fact f: p : + .\nfact a: a : + .\nrule r: a -> p : + .\nfact x: a : - .")
    assert classify(kb, "p") is EC.CONFIRMED
    assert classify(kb, "p", universal=True) is EC.PROBABLE
    assert Oracle(kb).classify("p", universal=True) == "probable"


@pytest.mark.parametrize(
    "a,b,expected",
    [(EC.OPEN, EC.CERTAIN, -1), (EC.PROBABLE, EC.PROBABLE, 0), (EC.CONFIRMED, EC.PLAUSIBLE, 1)],
)
def test_class_order(a, b, expected):
    assert class_order(a, b) == expected


def test_total_order():
    listed = [EC.OPEN, EC.SUPPORTED, EC.PLAUSIBLE, EC.PROBABLE, EC.CONFIRMED, EC.CERTAIN]
    assert sorted(reversed(listed)) == listed
    assert EC.OPEN < EC.SUPPORTED and EC.CERTAIN > EC.CONFIRMED


def test_anti_monotone_class_with_monotone_arguments():
    small = parse_kb("fact f1: p : + .")
    big = parse_kb("fact f1: p : + .\nfact f2: p : - .")
    assert set(arguments_concerning(small, "p")) <= set(arguments_concerning(big, "p"))
    assert classify(small, "p") >= EC.PROBABLE
    assert classify(big, "p") is EC.PLAUSIBLE


def test_agrees_with_oracle_on_random_kbs():
    rng = random.Random(99)
    for _ in range(150):
        kb = random_kb(rng, 8)
        oracle = Oracle(kb)
        for p in ("a", "b", "c", "p"):
            for universal in (False, True):
                assert classify(kb, p, universal).value == oracle.classify(p, universal), (kb, p)
            has_for = any(a.polarity is Polarity.FOR for a in arguments_concerning(kb, p))
            assert (classify(kb, p) is EC.OPEN) == (not has_for)
