import pytest
from hypothesis import given, settings, strategies as st

from conftest import load
from ipfkernel import build as b
from ipfkernel.checker import check
from ipfkernel.corpus import ENTRIES, build_entry
from ipfkernel.deduction import EqRefl, Rule, open_formulas, size
from ipfkernel.errors import AlreadyNormal
from ipfkernel.generators import random_deduction
from ipfkernel.normalizer import (all_orders_terminate, is_normal, maximal_formulas,
                                  maximal_segments, normalize, rank, reduce_once,
                                  sweep_vacuous, trace_lines)
from ipfkernel.syntax import alpha_eq, alpha_key, parse_formula
from ipfkernel.systems import System

seeds = st.integers(min_value=0, max_value=10**6)
AB = "(and (A) (B))"


def and_detour():
    return b.and_el(b.and_i(b.assume("a", "(A)"), b.assume("b", "(B)")))


def or_segment():
    """(A or B), both branches assume C & D; AndEL applied below the OrE."""
    orr = b.or_e(b.assume("h", "(or (A) (B))"), b.assume("k", "(and (C) (D))"),
                 b.assume("k", "(and (C) (D))"), "m", "n")
    return b.and_el(orr)


def test_detection():
    assert maximal_formulas(and_detour()) == [(0,)]
    assert maximal_segments(and_detour()) == []
    segs = maximal_segments(or_segment())
    assert {s.positions for s in segs} == {((0, 1), (0,)), ((0, 2), (0,))}
    assert all(s.degree == 1 for s in segs)


def test_rank_by_hand():
    assert rank(and_detour()) == (1, 1)
    assert rank(or_segment()) == (1, 4)
    # a degree-3 detour dominates the degree-1 one
    imp = b.imp_e(b.imp_i(b.assume("u", AB), "u", antecedent=AB),
                  b.and_i(b.assume("a", "(A)"), b.assume("b", "(B)")))
    assert rank(imp) == (3, 1)
    assert rank(b.and_i(and_detour(), imp)) == (3, 1)
    assert rank(b.refl("(p a)")) == (0, 0)


def test_and_detour_step():
    out, step = reduce_once(and_detour())
    assert out == b.assume("a", "(A)")
    assert step.line() == "STEP 1 detour AndI/AndEL rank 1,1 -> 0,0"


def test_imp_detour_grafts_minor():
    d = b.imp_e(b.imp_i(b.and_i(b.assume("u", "(A)"), b.assume("u", "(A)")), "u"),
                b.and_el(b.assume("w", "(and (A) (B))")))
    out, _ = reduce_once(d)
    assert check(out, System.IPF).valid
    assert size(out) == 5
    assert is_normal(out)


def test_permutation_moves_elimination_up():
    out, step = reduce_once(or_segment())
    assert step.kind == "permute"
    assert out.rule is Rule.OrE
    assert all(p.rule is Rule.AndEL for p in out.premises[1:])
    assert rank(out) == (0, 0)


def test_already_normal():
    with pytest.raises(AlreadyNormal):
        reduce_once(b.assume("h", "(A)"))


def test_sweep_vacuous():
    d = b.rule(Rule.EqE, b.refl("(p a)"), b.assume("h", "(F (p a))"), concl="(F (p a))")
    assert sweep_vacuous(d) == b.assume("h", "(F (p a))")


def test_symmetry_through_reflexivity_leaves_identity_leaf():
    d = b.symm(b.refl("(p a)"))
    out = sweep_vacuous(d)
    assert isinstance(out, EqRefl)


def test_cut_trace():
    _, d = build_entry("cut_star13_star12")
    assert rank(d) == (1, 4)
    out, steps = normalize(d)
    assert trace_lines(steps) == [
        "STEP 1 permute ExistsE/IE2p rank 1,4 -> 1,3",
        "STEP 2 detour II/IE2p rank 1,3 -> 1,2",
        "STEP 3 permute ExistsE/IE3p rank 1,2 -> 1,1",
        "STEP 4 detour II/IE3p rank 1,1 -> 0,0",
    ]
    assert alpha_eq(out.conclusion, parse_formula("(ex y (all x (iff (F x) (= x y))))"))


@pytest.mark.parametrize("name", sorted(ENTRIES))
def test_normalizing_normal_output_is_identity(name):
    system, d = build_entry(name)
    out, _ = normalize(d, system)
    again, steps = normalize(out, system)
    assert steps == [] and again == out


@pytest.mark.parametrize("i", range(1, 6))
def test_conversion_outputs_normal(i):
    left = load(f"conv{i}.fpl").body
    out, steps = normalize(left)
    assert len(steps) == 1
    assert out == reduce_once(left)[0]


@settings(max_examples=150, deadline=None)
@given(seeds)
def test_normalize_postconditions(seed):
    d = random_deduction(seed, budget=30)
    out, steps = normalize(d, System.IPF_I, verify=False)
    assert is_normal(out)
    assert alpha_eq(out.conclusion, d.conclusion)
    keys = {alpha_key(f) for f in open_formulas(d)}
    assert {alpha_key(f) for f in open_formulas(out)} <= keys
    assert check(out, System.IPF_I).valid
    ranks = [s.rank_before for s in steps] + [rank(out)]
    assert all(x > y for x, y in zip(ranks, ranks[1:]))


def test_all_orders_on_corpus_detours():
    for name in ("conv1", "conv2", "conv3", "conv4", "conv5", "cut_star13_star12"):
        _, d = build_entry(name)
        ok, states, longest = all_orders_terminate(d)
        assert ok and longest >= 1


def test_all_orders_reports_normal_input():
    assert all_orders_terminate(b.assume("h", "(A)")) == (True, 1, 0)
