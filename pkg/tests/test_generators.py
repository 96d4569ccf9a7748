import random

from hypothesis import given, settings, strategies as st

from ipfkernel.checker import check
from ipfkernel.deduction import size
from ipfkernel.normalizer import is_normal
from ipfkernel.generators import (FormulaGen, random_deduction, random_restricted,
                                  random_restrictor)
from ipfkernel.syntax import (contains_I, contains_iota, free_vars, params_of,
                              restriction_violations)
from ipfkernel.systems import System

seeds = st.integers(min_value=0, max_value=10**6)


def test_deterministic():
    assert random_deduction(7) == random_deduction(7)
    assert random_restricted(7) == random_restricted(7)
    assert random_restrictor(7) == random_restrictor(7)


@settings(max_examples=100, deadline=None)
@given(seeds, st.integers(min_value=8, max_value=40))
def test_size_bound_and_validity(seed, bound):
    d = random_deduction(seed, max_nodes=bound)
    assert size(d) <= bound
    assert check(d, System.IPF_I).valid


@settings(max_examples=200, deadline=None)
@given(seeds)
def test_restrictor_shape(seed):
    f = random_restrictor(seed)
    assert free_vars(f) <= {"x"}
    assert not contains_I(f) and not contains_iota(f)


@settings(max_examples=200, deadline=None)
@given(seeds)
def test_restricted_formulas_are_closed_and_restricted(seed):
    f = random_restricted(seed)
    assert free_vars(f) == frozenset()
    assert restriction_violations(f) == []


def test_terms_are_closed_parameters():
    fg = FormulaGen(random.Random(0))
    for _ in range(50):
        t = fg.term()
        assert free_vars(t) == frozenset() and params_of(t)


def test_detours_appear():
    ds = [random_deduction(s, max_nodes=40, detour_bias=0.8) for s in range(200)]
    assert sum(not is_normal(d) for d in ds) > 40
