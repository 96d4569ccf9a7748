import random
from importlib import resources

import pytest
from hypothesis import given, settings, strategies as st

from ipfkernel.bridge import (TO_I, TO_IOTA, instantiate_template, template_ids,
                              template_script, template_system, translate,
                              verify_equivalence, _letters)
from ipfkernel.checker import check
from ipfkernel.corpus import build_entry
from ipfkernel.deduction import EqRefl, same_up_to_labels
from ipfkernel.errors import CaptureConflict, MissingBinding, NotRestricted
from ipfkernel.generators import FormulaGen
from ipfkernel.syntax import (Exists, FormulaReader, Iff, Param, alpha_eq, parse_formula,
                              parse_term, print_formula, replace_param)
from ipfkernel.sexpr import read_one
from ipfkernel.systems import System
from ipfkernel.template_src import OBLIGATIONS, TEMPLATES, template_text

seeds = st.integers(min_value=0, max_value=10**6)
GAP = {"IotaR_II_ExBang", "IotaR_IE1pPrime_ExBang", "IotaR_IE1pPrime_Eq", "IotaR_IE2pPrime"}


def pf(text, system=None):
    return parse_formula(text, system)


# -- translate -------------------------------------------------------------------

@pytest.mark.parametrize("i_side, iota_side", [
    ("(I x (F x) (ex! x))", "(ex! (iota x (F x)))"),
    ("(I x (F x) (= x (p t)))", "(= (iota x (F x)) (p t))"),
    ("(F (p a))", "(F (p a))"),
    ("(ex y (I x (F x) (= x y)))", "(ex y (= (iota x (F x)) y))"),
    ("(and (I x (and (F x) (H x)) (ex! x)) (all y (imp (I x (F x) (= x y)) (ex! y))))",
     "(and (ex! (iota x (and (F x) (H x)))) (all y (imp (= (iota x (F x)) y) (ex! y))))"),
])
def test_translate_examples(i_side, iota_side):
    assert translate(pf(i_side), TO_IOTA) == pf(iota_side)
    assert translate(pf(iota_side), TO_I) == pf(i_side)


def test_description_on_the_right_of_identity():
    assert translate(pf("(= (p t) (iota x (F x)))"), TO_I) == pf("(I x (F x) (= x (p t)))")


def test_translate_renames_binder_against_capture():
    out = translate(pf("(all x (= (iota x (F x)) x))"), TO_I)
    assert alpha_eq(out, pf("(all x (I z (F z) (= z x)))"))
    assert alpha_eq(translate(out, TO_IOTA), pf("(all x (= (iota x (F x)) x))"))


@pytest.mark.parametrize("text, direction", [
    ("(I x (F x) (G x))", TO_IOTA),
    ("(I x (I y (F y) (= y x)) (ex! x))", TO_IOTA),
    ("(G (iota x (F x)))", TO_I),
    ("(= (iota x (F x)) (iota x (G x)))", TO_I),
    ("(ex! (iota x (F x)))", TO_IOTA),
    ("(I x (F x) (ex! x))", TO_I),
])
def test_translate_rejects_unrestricted(text, direction):
    with pytest.raises(NotRestricted):
        translate(pf(text), direction)


def test_translate_unknown_direction():
    with pytest.raises(ValueError):
        translate(pf("(A)"), "lambda")


@settings(max_examples=300, deadline=None)
@given(seeds, st.integers(min_value=1, max_value=4))
def test_translate_roundtrip(seed, depth):
    f = FormulaGen(random.Random(seed)).restricted(depth)
    g = translate(f, TO_IOTA)
    assert parse_formula(print_formula(g), System.IPF_iotaR) == g
    assert alpha_eq(translate(g, TO_I), f)


def test_star17_translation_is_star1_at_a_description():
    _, star17 = build_entry("star17")
    left_to_right = translate(star17.conclusion, TO_IOTA)
    _, star1 = build_entry("star1")
    inst = replace_param(star1.conclusion, "t", parse_term("(iota x (F x))", System.IPF_iota))
    assert isinstance(left_to_right, Iff) and isinstance(inst, Iff)
    # star1 reads  ex! t <-> ex y (y = t); star17 has the sides swapped and t = y
    assert alpha_eq(left_to_right.right, inst.left)
    assert isinstance(left_to_right.left, Exists) and isinstance(inst.right, Exists)
    flipped = left_to_right.left.body
    assert alpha_eq(Exists(left_to_right.left.var, type(flipped)(flipped.rhs, flipped.lhs)),
                    inst.right)


# -- templates -------------------------------------------------------------------

@pytest.mark.parametrize("name", sorted(TEMPLATES))
def test_template_files_in_sync(name):
    shipped = resources.files("ipfkernel") / "data" / "templates" / f"{name}.fpl"
    assert shipped.read_text(encoding="utf-8") == template_text(name)
    assert template_system(name) is TEMPLATES[name][1]


def test_template_ids():
    assert set(template_ids()) == set(TEMPLATES)
    assert set(OBLIGATIONS) <= set(TEMPLATES)


def _bindings(name, seed):
    rng = random.Random(seed)
    fg = FormulaGen(rng)
    forms, terms = _letters(template_script(name).body)
    out = {k: fg.restrictor("x") for k in forms}
    out.update({k: fg.term() for k in terms})
    return out


@pytest.mark.parametrize("name", sorted(TEMPLATES))
def test_template_instances_valid(name):
    system = template_system(name)
    if name in GAP:
        system = System.IPF_iota
    for seed in range(50):
        d = instantiate_template(name, _bindings(name, seed))
        rep = check(d, system, allow_holes=True)
        assert rep.valid, f"{name} seed {seed}: {rep}"


@pytest.mark.parametrize("name", sorted(GAP))
def test_gap_obligations_need_unrestricted_leibniz_or_scope(name):
    d = instantiate_template(name, {"F": "(F x)"})
    rep = check(d, System.IPF_iotaR, allow_holes=True)
    assert not rep.valid
    assert set(rep.codes) <= {"RestrictedLeibniz", "RestrictedScope"}
    assert check(d, System.IPF_iota, allow_holes=True).valid


def test_star12_instance_is_corpus_tree():
    d = instantiate_template("Star12", {"F": "(F x)"})
    assert same_up_to_labels(d, build_entry("star12")[1])


def test_ll_in_ir_conclusion():
    d = instantiate_template("LL_in_IR", {"F": "(F x)"})
    assert alpha_eq(d.conclusion, pf("(all y (iff (I x (F x) (= x y)) (all x (iff (F x) (= x y)))))"))
    assert check(d, System.IPF_IR).valid


def test_symmetry_degenerate_instance():
    d = instantiate_template("Symmetry", {"s": "(p a)", "t": "(p a)"})
    assert d == EqRefl(Param("a"))


def test_compound_binding_is_leibniz_expanded():
    d = instantiate_template("Symmetry", {"s": "(p a)", "t": "(p b)"})
    assert check(d, System.IPF).valid
    f = instantiate_template("Star19", {"F": "(and (F x) (all y (imp (H y) (R x y))))",
                                        "G": "(or (G x) (ex! x))"})
    assert check(f, System.IPF_I).valid


def test_eigenparameters_renamed_away_from_bindings():
    d = instantiate_template("Star10", {"F": "(R x (p a))", "G": "(R x (p b))"})
    assert check(d, System.IPF_I).valid


def test_missing_binding():
    with pytest.raises(MissingBinding):
        instantiate_template("Star10", {"F": "(F x)"})


def test_capture_conflict():
    with pytest.raises(CaptureConflict):
        instantiate_template("Star12", {"F": "(R x y)"})
    with pytest.raises(CaptureConflict):
        instantiate_template("Symmetry", {"s": "x", "t": "(p a)"})


def test_unknown_template():
    with pytest.raises(KeyError):
        template_script("Star99")


# -- equivalence report ------------------------------------------------------------

def test_report_lists_every_obligation():
    rep = verify_equivalence("(F x)")
    names = [o.name for o in rep.obligations]
    assert names == list(OBLIGATIONS) + ["LL_in_IR"]
    by_name = {o.name: o for o in rep.obligations}
    for name in set(names) - GAP:
        assert by_name[name].passed, name
    for name in GAP:
        assert by_name[name].unrestricted_valid
    assert "LL_in_IR [ipf-ir]" in str(rep)


def test_report_conjunction():
    rep = verify_equivalence(FormulaReader(None, False, ("x",)).formula(
        read_one("(and (F x) (G x))")))
    assert rep.error is None
    assert all(o.passed for o in rep.obligations if o.name not in GAP)


def test_report_rejects_nested_description():
    rep = verify_equivalence("(I y (F y) (= y x))")
    assert not rep.passed
    assert "NotRestricted" in str(rep)
    assert rep.obligations == []
