import subprocess
import sys

import pytest

from conftest import CORPUS
from ipfkernel.checker import check
from ipfkernel.cli import run
from ipfkernel.normalizer import is_normal
from ipfkernel.script import parse_script
from ipfkernel.syntax import alpha_eq


def corpus(rel):
    return str(CORPUS / rel)


def test_check_valid(capsys):
    assert run(["check", corpus("star12.fpl"), "--system", "ipf-i"]) == 0
    assert capsys.readouterr().out.strip() == "valid"


def test_check_uses_header_system(capsys):
    assert run(["check", corpus("star5.fpl")]) == 0


def test_check_mutant(capsys):
    assert run(["check", corpus("mutants/ii_bad_eigen.fpl"), "--system", "ipf-i"]) == 1
    out = capsys.readouterr().out
    assert out.startswith("invalid")
    assert "EigenNotFresh" in out


def test_check_in_other_system(capsys):
    assert run(["check", corpus("star12.fpl"), "--system", "ipf"]) == 1
    assert "RuleNotInSystem" in capsys.readouterr().out


def test_normalize_output_is_normal_and_valid(capsys, tmp_path):
    src = parse_script((CORPUS / "cut_star13_star12.fpl").read_text())
    trace = tmp_path / "trace.txt"
    assert run(["normalize", corpus("cut_star13_star12.fpl"), "--trace", str(trace)]) == 0
    text = capsys.readouterr().out
    out = parse_script(text)
    assert is_normal(out.body)
    assert check(out.body, out.system).valid
    assert alpha_eq(out.body.conclusion, src.body.conclusion)
    lines = trace.read_text().splitlines()
    assert len(lines) == 4 and lines[0].startswith("STEP 1 ")

    again = tmp_path / "normal.fpl"
    again.write_text(text)
    assert run(["normalize", str(again)]) == 0
    assert capsys.readouterr().out == text


def test_normalize_elaborate_only(capsys):
    assert run(["normalize", corpus("star17.fpl"), "--elaborate"]) == 0
    out = parse_script(capsys.readouterr().out)
    assert "Prime" not in str(out.body)
    assert check(out.body, out.system).valid


def test_normalize_invalid_input(capsys):
    assert run(["normalize", corpus("mutants/eqe_vacuous.fpl")]) == 1


def test_translate_roundtrip(capsys, tmp_path):
    src = tmp_path / "ir.fpl"
    src.write_text("(proof t :system ipf-ir\n"
                   "  (rule ImpI :conclusion (imp (I x (F x) (= x (p a))) (I x (F x) (= x (p a))))"
                   " :discharge (h)\n    (assume h (I x (F x) (= x (p a))))))\n")
    assert run(["translate", str(src), "--to", "iota"]) == 0
    there = capsys.readouterr().out
    assert ":system ipf-iota-r" in there and "(= (iota x (F x)) (p a))" in there
    mid = tmp_path / "iota.fpl"
    mid.write_text(there)
    assert run(["check", str(mid)]) == 0
    capsys.readouterr()
    assert run(["translate", str(mid), "--to", "i"]) == 0
    back = parse_script(capsys.readouterr().out)
    assert back.body == parse_script(src.read_text()).body


def test_translate_unrestricted_script(capsys):
    assert run(["translate", corpus("star10.fpl"), "--to", "iota"]) == 1
    assert "NotRestricted" in capsys.readouterr().err


def test_stats(capsys):
    assert run(["stats", corpus("cut_star13_star12.fpl")]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "rank 1,4"
    assert out[2] == "open assumptions 1"
    assert out[-2:] == ["maximal formulas 0", "maximal segments 2"]


@pytest.mark.parametrize("argv", [
    [],
    ["check"],
    ["frobnicate", "x.fpl"],
    ["check", "corpus/star12.fpl", "--bogus"],
    ["translate", "corpus/star12.fpl", "--to", "lambda"],
])
def test_usage_errors(argv, capsys):
    assert run(argv) == 2


def test_unreadable_and_malformed_files(tmp_path, capsys):
    assert run(["check", str(tmp_path / "missing.fpl")]) == 2
    bad = tmp_path / "bad.fpl"
    bad.write_text("(proof t :system ipf (assume h (A))")
    assert run(["check", str(bad)]) == 2
    assert run(["check", corpus("star12.fpl"), "--system", "nosuch"]) == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "ipfkernel.cli", "check", corpus("star1.fpl")],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.strip() == "valid"
