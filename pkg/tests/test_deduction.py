import pytest
from hypothesis import given, settings, strategies as st

from ipfkernel import build as b
from ipfkernel.checker import check
from ipfkernel.deduction import (Assume, Rule, canonical_labels, eigen_apps, graft, leaves,
                                 open_assumptions, same_up_to_labels, size,
                                 substitute_in_deduction, uniquify_parameters,
                                 validate_structure)
from ipfkernel.errors import (ClassMismatch, DanglingLabel, DuplicateDischarge,
                              EigenCapture, FormulaMismatch, ParseError)
from ipfkernel.generators import random_deduction
from ipfkernel.script import parse_script, print_script
from ipfkernel.syntax import Param, parse_formula
from ipfkernel.systems import System

seeds = st.integers(min_value=0, max_value=10**6)


def _conj():
    return b.and_i(b.assume("h", "(A)"), b.assume("h", "(A)"))


def test_open_assumptions_and_size():
    d = b.imp_i(_conj(), "h")
    assert open_assumptions(d) == set()
    assert open_assumptions(_conj()) == {("h", parse_formula("(A)"))}
    assert size(d) == 4


def test_class_mismatch():
    with pytest.raises(ClassMismatch):
        validate_structure(b.and_i(b.assume("h", "(A)"), b.assume("h", "(B)")))


def test_duplicate_discharge():
    inner = b.rule(Rule.ImpI, b.assume("h", "(A)"), concl="(imp (A) (A))", dis=("h",))
    outer = b.rule(Rule.ImpI, inner, concl="(imp (A) (imp (A) (A)))", dis=("h",))
    with pytest.raises(DuplicateDischarge):
        validate_structure(outer)


def test_dangling_label():
    left = b.rule(Rule.ImpI, b.assume("h", "(A)"), concl="(imp (A) (A))", dis=("h",))
    with pytest.raises(DanglingLabel):
        validate_structure(b.and_i(left, b.assume("h", "(A)")))


def test_graft_replaces_every_occurrence():
    sigma = b.and_el(b.assume("k", "(and (A) (B))"))
    d = graft(_conj(), "h", sigma)
    assert {n.label for _, n in leaves(d)} == {"k"}
    assert check(d, System.IPF).valid


def test_graft_renames_internal_labels_per_copy():
    sigma = b.imp_e(b.imp_i(b.assume("m", "(A)"), "m"), b.assume("k", "(A)"))
    d = graft(_conj(), "h", sigma)
    validate_structure(d)
    assert check(d, System.IPF).valid


def test_graft_formula_mismatch():
    with pytest.raises(FormulaMismatch):
        graft(_conj(), "h", b.assume("k", "(B)"))


def test_substitute_rejects_eigen_capture():
    d = b.all_i(b.refl("(p a)"), "a", "x")
    with pytest.raises(EigenCapture):
        substitute_in_deduction(d, "a", Param("b"))


def test_uniquify_separates_shared_eigenparameters():
    left = b.all_i(b.refl("(p a)"), "a", "x")
    d = b.and_i(left, b.all_i(b.refl("(p a)"), "a", "x"))
    u = uniquify_parameters(d)
    eig = [e for _, n in eigen_apps(u) for e in n.eigen]
    assert len(eig) == len(set(eig)) == 2
    assert check(u, System.IPF).valid


def test_canonical_labels():
    d1 = b.imp_i(b.assume("h", "(A)"), "h")
    d2 = b.imp_i(b.assume("z9", "(A)"), "z9")
    assert same_up_to_labels(d1, d2)
    assert canonical_labels(d1).discharged == ("L1",)
    assert not same_up_to_labels(d1, b.imp_i(b.assume("h", "(B)"), "h"))


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_script_roundtrip(seed):
    d = random_deduction(seed, max_nodes=30)
    text = print_script("t", System.IPF_I, d)
    script = parse_script(text)
    assert script.system is System.IPF_I
    assert script.body == d
    assert print_script("t", System.IPF_I, script.body) == text


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_uniquify_is_idempotent_and_sound(seed):
    d = random_deduction(seed, max_nodes=30)
    u = uniquify_parameters(d)
    assert uniquify_parameters(u) == u
    assert check(u, System.IPF_I).valid


@pytest.mark.parametrize("text", [
    "(proof t (assume h (A)))",
    "(proof t :system nosuch (assume h (A)))",
    "(proof t :system ipf :bogus 1 (assume h (A)))",
    "(proof t :system ipf :decls ((params a a)) (assume h (A)))",
    "(proof t :system ipf (assume h (A)) (assume k (B)))",
    "(proof t :system ipf (rule NoSuchRule :conclusion (A)))",
    "(proof t :system ipf (assume h))",
])
def test_script_parse_errors(text):
    with pytest.raises(ParseError):
        parse_script(text)


def test_leaf_kinds_parse():
    text = """(proof t :system ipf-iota
      (rule AndI :conclusion (and (= (p a) (p a)) (all y (iff (= (iota x (F x)) y) (all x (iff (F x) (= x y))))))
        (eq-refl (p a))
        (ll x y (F x))))"""
    script = parse_script(text)
    assert check(script.body, script.system).valid
    assert isinstance(parse_script("(proof t :system ipf (assume h (A)))").body, Assume)
