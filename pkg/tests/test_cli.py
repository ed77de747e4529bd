from __future__ import annotations

import subprocess
import sys
from pathlib import Path

import pytest

from argrisk import __version__, corpus_path
from argrisk.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_query_text_matches_golden(capsys):
    code, out, _ = run(capsys, "query", str(corpus_path("benzidine_like")), "carcinogenic")
    assert code == 0
    assert out == (GOLDEN / "benzidine_like.txt").read_text()


def test_query_structured_matches_golden(capsys):
    code, out, _ = run(capsys, "query", str(corpus_path("contradictory")), "carcinogenic", "--format", "structured")
    assert code == 0
    assert out == (GOLDEN / "contradictory.json").read_text()


def test_query_with_policy_and_lexicon(capsys, tmp_path):
    lexicon = tmp_path / "terms.lex"
    lexicon.write_text('equivocal = "mixed"\nfor_dominates = "leaning positive"\n')
    code, out, err = run(
        capsys, "query", str(corpus_path("benzidine_like")), "carcinogenic", "--policy", "sum", "--lexicon", str(lexicon)
    )
    assert code == 0
    assert "term: mixed, leaning positive" in out
    assert "verdict: for_dominates (sum: for 0.84, against 0.378)" in out
    assert err.count("warning:") == 8


@pytest.mark.parametrize(
    "human,animal,expected",
    [
        ("sufficient", "no_data", "known_human_carcinogen"),
        ("inadequate", "sufficient", "possible"),
        ("no_evidence", "no_evidence", "non_carcinogenic"),
    ],
)
def test_woe(capsys, human, animal, expected):
    assert run(capsys, "woe", human, animal) == (0, expected + "\n", "")


def test_woe_unknown_level_is_usage_error(capsys):
    code, out, err = run(capsys, "woe", "overwhelming", "limited")
    assert code == 1 and out == "" and "invalid choice" in err


def test_check_prints_warnings(capsys, tmp_path):
    kb = tmp_path / "k.kb"
    kb.write_text("fact f: a : + .\nrule r1: a & exposure_high -> p : + .\n")
    code, out, err = run(capsys, "check", str(kb))
    assert code == 0
    assert "2 items, 1 warnings" in out
    assert "exposure_high" in err


def test_exit_statuses(capsys, tmp_path):
    bad = tmp_path / "bad.kb"
    bad.write_text("fact f: p : + .\nrule r: p -> p : + .\n")
    assert run(capsys, "query", str(bad), "p")[0] == 2
    assert run(capsys, "check", str(bad))[0] == 2
    assert run(capsys, "query", str(tmp_path / "missing.kb"), "p")[0] == 1
    assert run(capsys, "query", str(corpus_path("deep_chain")), "Not_a_prop")[0] == 1
    assert run(capsys, "bogus")[0] == 1
    assert run(capsys)[0] == 1
    bad_lex = tmp_path / "bad.lex"
    bad_lex.write_text('nonsense = "x"\n')
    assert run(capsys, "query", str(corpus_path("deep_chain")), "p", "--lexicon", str(bad_lex))[0] == 2

    wide = tmp_path / "wide.kb"
    lines = [f"fact f{k}: l0 : + .\n" for k in range(6)]
    lines += [f"rule r{j}_{k}: l{j - 1} -> l{j} : + .\n" for j in range(1, 6) for k in range(6)]
    wide.write_text("".join(lines))
    code, out, err = run(capsys, "query", str(wide), "l5", "--cap", "1000")
    assert code == 3 and out == "" and "1000" in err


def test_contradictory_report_still_exits_zero(capsys):
    code, out, _ = run(capsys, "query", str(corpus_path("contradictory")), "carcinogenic")
    assert code == 0 and "term: contradictory" in out


def test_version_and_module_entry_point():
    result = subprocess.run([sys.executable, "-m", "argrisk", "--version"], capture_output=True, text=True)
    assert result.returncode == 0
    assert result.stdout.strip() == f"argrisk {__version__}"


def test_separate_processes_give_identical_output():
    cmd = [sys.executable, "-m", "argrisk", "query", str(corpus_path("deep_chain")), "carcinogenic", "--format", "structured"]
    first = subprocess.run(cmd, capture_output=True).stdout
    second = subprocess.run(cmd, capture_output=True).stdout
    assert first == second == (GOLDEN / "deep_chain.json").read_bytes()
