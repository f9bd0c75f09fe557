#!/usr/bin/env python3

# This file checks algebraic laws on seeded theories with hypothesis

from fractions import Fraction

import hypothesis
import hypothesis.strategies as strat

from restheory import gen, harness
from restheory.convex import cva, cva_oracle
from restheory.core import validate
from restheory.monotones import cost_monotone, yield_monotone
from restheory.translate import deg_by_functions, deg_order, enh_by_functions, enh_order

seeds = strat.integers(min_value=0, max_value=2 ** 32 - 1)

rationals = strat.builds(Fraction, strat.integers(-4, 4), strat.integers(1, 3))

points = strat.lists(rationals, min_size=2, max_size=2).map(tuple)

small_theories = strat.sampled_from([gen.tri(), gen.um1(), gen.p5(), gen.cvx1()])

settings = hypothesis.settings(max_examples=40, deadline=None)


def subsets(theory):
    return strat.frozensets(strat.integers(0, len(theory) - 1))


@settings
@hypothesis.given(seeds)
def test_generated_theories_are_valid(seed):
    theory = gen.random_theory(seed)
    assert validate(theory)
    assert harness.brute_force_valid(theory)


@settings
@hypothesis.given(seeds, seeds)
def test_yield_and_cost_are_monotone(theory_seed, valuation_seed):
    theory = gen.random_theory(theory_seed, max_carrier=6)
    fW = gen.random_valuation(theory, valuation_seed, domain_mode=gen.RANDOM_SUBSET)
    assert yield_monotone(theory, fW).checked
    assert cost_monotone(theory, fW).checked


@settings
@hypothesis.given(seeds, seeds)
def test_monotones_extend_themselves(theory_seed, valuation_seed):
    theory = gen.random_theory(theory_seed, max_carrier=6)
    f = gen.random_valuation(theory, valuation_seed, monotone=True)
    assert list(yield_monotone(theory, f).values) == f.as_list()
    assert list(cost_monotone(theory, f).values) == f.as_list()


@settings
@hypothesis.given(small_theories.flatmap(
    lambda t: strat.tuples(strat.just(t), subsets(t), subsets(t))))
def test_subset_orders_match_functions(case):
    theory, S, T = case
    assert enh_order(theory, S, T) == enh_by_functions(theory, S, T)
    assert deg_order(theory, S, T) == deg_by_functions(theory, S, T)


@settings
@hypothesis.given(points, points, points)
def test_cva_matches_oracle(r, s, t):
    value = cva(r, s, t)
    assert value == cva_oracle(r, s, t)
    assert 0 <= value <= 1
