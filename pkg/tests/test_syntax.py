import random

import pytest
from hypothesis import given, settings, strategies as st

from ipfkernel.errors import IotaNotAllowed, ParseError, RestrictionViolation
from ipfkernel.generators import FormulaGen
from ipfkernel.syntax import (Atom, Eq, ExistsBang, Forall, FormulaReader, Iota, Param,
                              Var, alpha_eq, degree, free_vars, iota_restriction_violations,
                              I_restriction_violations, parse_formula, parse_term,
                              print_formula, substitute)
from ipfkernel.sexpr import read_one
from ipfkernel.systems import System

seeds = st.integers(min_value=0, max_value=10**6)


def open_formula(text, *free):
    return FormulaReader(None, False, free).formula(read_one(text))


@given(seeds, st.integers(min_value=0, max_value=4))
def test_print_parse_roundtrip(seed, depth):
    f = FormulaGen(random.Random(seed)).formula(depth)
    assert parse_formula(print_formula(f)) == f


@given(seeds)
def test_restricted_formulas_parse_in_restricted_system(seed):
    f = FormulaGen(random.Random(seed)).restricted()
    assert parse_formula(print_formula(f), System.IPF_IR) == f


@pytest.mark.parametrize("text, expected", [
    ("(F (p a))", 0),
    ("bot", 0),
    ("(= (p a) (p b))", 0),
    ("(not (F (p a)))", 1),
    ("(and (F (p a)) (imp (G (p a)) bot))", 2),
    ("(all x (ex y (R x y)))", 2),
    ("(I x (F x) (G x))", 1),
    ("(I x (and (F x) (H x)) (ex! x))", 2),
])
def test_degree(text, expected):
    assert degree(parse_formula(text)) == expected


def test_alpha_equivalence():
    assert alpha_eq(parse_formula("(all x (F x))"), parse_formula("(all y (F y))"))
    assert alpha_eq(parse_formula("(I x (F x) (= x (p a)))"),
                    parse_formula("(I z (F z) (= z (p a)))"))
    assert not alpha_eq(parse_formula("(all x (ex y (R x y)))"),
                        parse_formula("(all x (ex y (R y x)))"))


def test_substitution_avoids_capture():
    f = open_formula("(all y (R x y))", "x")
    g = substitute(f, "x", Var("y"))
    assert isinstance(g, Forall) and g.var != "y"
    assert alpha_eq(g, open_formula("(all z (R y z))", "y"))
    assert free_vars(g) == {"y"}


def test_substitution_skips_bound_occurrences():
    f = open_formula("(and (F x) (all x (G x)))", "x")
    g = substitute(f, "x", Param("a"))
    assert g == parse_formula("(and (F (p a)) (all x (G x)))")


def test_substitution_into_iota():
    f = open_formula("(= (iota y (R x y)) x)", "x")
    g = substitute(f, "x", Param("a"))
    assert g == Eq(Iota("y", Atom("R", (Param("a"), Var("y")))), Param("a"))


def test_iota_gated_by_system():
    with pytest.raises(IotaNotAllowed):
        parse_formula("(ex! (iota x (F x)))", System.IPF_I)
    assert parse_formula("(ex! (iota x (F x)))", System.IPF_iota) == \
        ExistsBang(parse_term("(iota x (F x))"))


@pytest.mark.parametrize("text, system", [
    ("(I x (F x) (G x))", System.IPF_IR),
    ("(I x (F x) (= x x))", System.IPF_IR),
    ("(I x (I y (F y) (= y x)) (ex! x))", System.IPF_IR),
    ("(G (iota x (F x)))", System.IPF_iotaR),
    ("(= (iota x (F x)) (iota x (G x)))", System.IPF_iotaR),
])
def test_restriction_violations_rejected(text, system):
    with pytest.raises(RestrictionViolation):
        parse_formula(text, system)


def test_restriction_checks_agree_on_variants():
    ok = parse_formula("(and (I x (F x) (ex! x)) (I x (F x) (= x (p a))))")
    assert I_restriction_violations(ok) == []
    io = parse_formula("(and (ex! (iota x (F x))) (= (p a) (iota x (F x))))")
    assert iota_restriction_violations(io) == []


@pytest.mark.parametrize("text", [
    "(F x)",                       # unbound variable
    "(and (F (p a)))",             # arity
    "(all (F (p a)))",
    "(I x (F x))",
    "((F) (G))",
    "(F (p a)",                    # unbalanced
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_formula(text)


def test_parse_error_has_position():
    with pytest.raises(ParseError) as e:
        parse_formula("(and (F (p a))\n     (G y))")
    assert e.value.position is not None
