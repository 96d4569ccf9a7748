import filecmp

import pytest
from hypothesis import given, settings, strategies as st

from conftest import CORPUS
from ipfkernel import build as b
from ipfkernel.checker import CODES, check, elaborate_macros
from ipfkernel.corpus import ENTRIES, build_entry, write_corpus
from ipfkernel.deduction import MACROS, Rule, RuleApp, iter_nodes
from ipfkernel.generators import random_deduction
from ipfkernel.mutants import MUTANTS
from ipfkernel.syntax import alpha_eq
from ipfkernel.systems import System

seeds = st.integers(min_value=0, max_value=10**6)


def _rules(d):
    return {n.rule for _, n in iter_nodes(d) if isinstance(n, RuleApp)}


@pytest.mark.parametrize("name", sorted(ENTRIES))
def test_corpus_entry_valid(name):
    system, d = build_entry(name)
    rep = check(d, system)
    assert rep.valid, str(rep)


@pytest.mark.parametrize("name", sorted(MUTANTS))
def test_mutant_single_code(name):
    fn, system, code = MUTANTS[name]
    rep = check(fn(), system)
    assert rep.codes == [code]
    assert code in CODES


def test_corpus_files_in_sync(tmp_path):
    write_corpus(tmp_path)
    fresh = sorted(p.relative_to(tmp_path) for p in tmp_path.rglob("*") if p.is_file())
    disk = sorted(p.relative_to(CORPUS) for p in CORPUS.rglob("*") if p.is_file())
    assert fresh == disk
    for rel in fresh:
        assert filecmp.cmp(tmp_path / rel, CORPUS / rel, shallow=False), rel


def test_bot_e_to_atomic():
    d = b.bot_e(b.assume("h", "bot"), "(F (p a))")
    assert check(d, System.IPF).valid


def test_eq_e_replaces_some_occurrences():
    major = b.assume("e", "(= (p a) (p b))")
    minor = b.assume("h", "(R (p a) (p a))")
    for concl in ("(R (p b) (p a))", "(R (p a) (p b))", "(R (p b) (p b))"):
        assert check(b.eq_e(major, minor, concl), System.IPF).valid


def test_i_notation_outside_i_systems():
    d = b.assume("h", "(I x (F x) (G x))")
    for system in (System.IPF, System.IPF_iota, System.IPF_iotaR):
        assert check(d, system).codes == ["RuleNotInSystem"]
    assert check(d, System.IPF_I).valid


def test_lambert_law_needs_iota():
    d = b.ll("x", "y", "(F x)")
    assert check(d, System.IPF_iota).valid
    assert check(d, System.IPF_I).codes == ["RuleNotInSystem"]


def test_holes_only_in_templates():
    d = b.hole("Pi", "(A)")
    assert check(d, System.IPF).codes == ["RuleNotInSystem"]
    assert check(d, System.IPF, allow_holes=True).valid


def test_one_diagnostic_per_faulty_node():
    left = b.bot_e(b.assume("h", "bot"), "(and (A) (B))")
    right = b.rule(Rule.AndEL, b.assume("k", "(and (A) (B))"), concl="(B)")
    rep = check(b.and_i(left, right), System.IPF)
    assert rep.codes == ["NotAtomic", "WrongPremiseShape"]
    assert [d.position for d in rep.diagnostics] == [(0,), (1,)]
    assert str(rep).startswith("invalid\n0: NotAtomic")


def test_system_names_accepted_as_strings():
    assert check(b.refl("(p a)"), "ipf").valid


@pytest.mark.parametrize("name", sorted(n for n in ENTRIES
                                        if MACROS & _rules(build_entry(n)[1])))
def test_elaboration_removes_primed_rules(name):
    system, d = build_entry(name)
    e = elaborate_macros(d)
    assert not MACROS & _rules(e)
    assert alpha_eq(e.conclusion, d.conclusion)
    assert check(e, system).valid


def test_elaboration_is_identity_on_primitive_deductions():
    _, d = build_entry("conv2")
    assert elaborate_macros(d) is d


@settings(max_examples=100, deadline=None)
@given(seeds)
def test_generated_deductions_valid(seed):
    assert check(random_deduction(seed), System.IPF_I).valid


@settings(max_examples=100, deadline=None)
@given(seeds)
def test_generated_without_I_valid_in_base_system(seed):
    d = random_deduction(seed, binary_quantifier=False)
    assert check(d, System.IPF).valid
