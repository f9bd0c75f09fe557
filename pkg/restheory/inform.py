"""Interesting relations and the informativeness preorder on valuations.

   A valuation is more informative than another when its interesting
   relation contains the other's. For a monotone f the interesting pairs are
   the (a, b) with f(a) < f(b), each of which shows that a cannot be
   converted into b. For a partial function f_W they are the pairs of W
   with f(a) < f(b) and a not above b.
"""

import itertools
import random
from fractions import Fraction

from restheory import config
from restheory.errors import BadParameters, CarrierTooLarge, WNotAChain
from restheory.log import log, showing, SHOW_SUMMARY
from restheory.monotones import (PartialValuation, MonotoneFn, cost_monotone,
                                 is_monotone, is_monotone_on_domain, yield_monotone)
from restheory.order import OrderedResources
from restheory.preorder import FinitePreorder
from restheory.verdict import Verdict

MONOTONE = 'monotone'
PARTIAL = 'partial'


def _values(f, n):
    """Returns a {index: value} dict for a valuation, monotone or list."""
    if isinstance(f, PartialValuation):
        return dict(f.values)
    if isinstance(f, MonotoneFn):
        return dict(enumerate(f.values))
    values = list(f)
    if len(values) != n:
        raise BadParameters('expecting {} values, got {}'.format(n, len(values)))
    return dict(enumerate(values))


def interesting_pairs(f, pre):
    """Returns the set of index pairs (a, b) with f(a) < f(b)."""
    values = _values(f, len(pre))
    return frozenset((a, b) for a, b in itertools.permutations(sorted(values), 2)
                     if values[a] < values[b])


def interesting_pairs_partial(fW, pre):
    """Returns the pairs (a, b) of W x W with f(a) < f(b) and a not >= b."""
    values = _values(fW, len(pre))
    return frozenset((a, b) for a, b in itertools.permutations(sorted(values), 2)
                     if values[a] < values[b] and not pre.geq(a, b))


def pair_labels(pre, pairs):
    return sorted((pre.labels[a], pre.labels[b]) for a, b in pairs)


def more_informative(f, g, pre, mode=MONOTONE):
    """Checks that f is at least as informative as g. The witness is the
       first pair interesting for g but not for f.
    """
    if mode == MONOTONE:
        relation = interesting_pairs
    elif mode == PARTIAL:
        relation = interesting_pairs_partial
    else:
        raise BadParameters("mode must be 'monotone' or 'partial'")
    missing = relation(g, pre) - relation(f, pre)
    if missing:
        a, b = min(missing)
        return Verdict(False, witness=(pre.labels[a], pre.labels[b]))
    return Verdict(True)


class InformReport:
    """relations maps names to the Verdicts of informativeness comparisons,
       and implications to the Verdicts of the implications between them.
    """

    def __init__(self, relations, implications):
        self.relations = relations
        self.implications = implications

    def __bool__(self):
        return all(self.implications.values())

    def to_json(self):
        return {
            'holds': bool(self),
            'relations': {k: v.to_json() for k, v in self.relations.items()},
            'implications': {k: v.to_json() for k, v in self.implications.items()},
        }


def _implies(premise, conclusion):
    if premise.holds and not conclusion.holds:
        return Verdict(False, witness=conclusion.witness)
    return Verdict(True)


def _iff(a, b):
    if a.holds != b.holds:
        return Verdict(False, witness=a.witness if b.holds else b.witness)
    return Verdict(True)


def prop_informative_yield_cost_check(fW, gW, D, ctx):
    """Compares f_W with g_W' and their yields and costs relative to D.

       The forward implications (f more informative than g implies the same
       for their yields and for their costs) are always reported. They are
       only guaranteed when f is finite on W: f(w) = -inf cannot be told
       apart from the yield of a resource that reaches nothing in W, and
       likewise +inf from an empty cost. When both valuations are monotone
       on the same domain and D is the free set the converse implications
       are reported too.
    """
    ctx = OrderedResources.wrap(ctx)
    pre = ctx.preorder
    premise = more_informative(fW, gW, pre, PARTIAL)
    yf = yield_monotone(ctx, fW, D)
    yg = yield_monotone(ctx, gW, D)
    cf = cost_monotone(ctx, fW, D)
    cg = cost_monotone(ctx, gW, D)
    relations = {
        'premise': premise,
        'yield': more_informative(yf, yg, pre),
        'cost': more_informative(cf, cg, pre),
    }
    implications = {
        'yield-forward': _implies(premise, relations['yield']),
        'cost-forward': _implies(premise, relations['cost']),
    }
    if D is None and fW.domain == gW.domain and \
            is_monotone_on_domain(fW, pre) and is_monotone_on_domain(gW, pre):
        implications['yield-converse'] = _iff(premise, relations['yield'])
        implications['cost-converse'] = _iff(premise, relations['cost'])
    report = InformReport(relations, implications)
    if showing(SHOW_SUMMARY):
        log('informative: premise={} yield={} cost={} implications={}'.format(
            premise.holds, relations['yield'].holds, relations['cost'].holds,
            bool(report)))
    return report


def compare(ctx, fW, gW, D=None):
    """Returns the comparison report of two valuations in both directions,
       as functions and through their yields and costs.
    """
    ctx = OrderedResources.wrap(ctx)
    pre = ctx.preorder
    yf, yg = yield_monotone(ctx, fW, D), yield_monotone(ctx, gW, D)
    cf, cg = cost_monotone(ctx, fW, D), cost_monotone(ctx, gW, D)
    return {
        'f>=g': more_informative(fW, gW, pre, PARTIAL),
        'g>=f': more_informative(gW, fW, pre, PARTIAL),
        'yield f>=g': more_informative(yf, yg, pre),
        'yield g>=f': more_informative(yg, yf, pre),
        'cost f>=g': more_informative(cf, cg, pre),
        'cost g>=f': more_informative(cg, cf, pre),
    }


def compare_to_json(report):
    return {name: verdict.to_json() for name, verdict in report.items()}


def counterexample_preorder():
    """r1 >= r2 and s1 >= s2, nothing else."""
    return FinitePreorder.from_pairs(('r1', 'r2', 's1', 's2'),
                                     [('r1', 'r2'), ('s1', 's2')])


def order_preserving_maps(pre, levels=4, cap=None):
    """Yields every order-preserving map from pre to {0, ..., levels - 1}
       as a tuple of Fractions.
    """
    cap = config.POWERSET_CAP if cap is None else cap
    if levels ** len(pre) > cap:
        raise CarrierTooLarge('{}**{} maps exceed the cap of {}'.format(
            levels, len(pre), cap))
    for values in itertools.product(range(levels), repeat=len(pre)):
        if all(values[a] >= values[b] for a, b in pre.pairs()):
            yield tuple(Fraction(v) for v in values)


def builtin_counterexample():
    """Returns (pre, fW, facts) for the four element order with
       f = (0, 1, 0, 1) on r1, r2, s1, s2.

       f is not monotone, yet it shows both r1 -/-> s2 and s1 -/-> r2,
       which no single monotone does. Its yield and cost are constant.
    """
    pre = counterexample_preorder()
    fW = PartialValuation.total(pre.labels, [0, 1, 0, 1])
    facts = {
        'monotone': False,
        'pairs': [('r1', 's2'), ('s1', 'r2')],
        'yield': (Fraction(1),) * 4,
        'cost': (Fraction(0),) * 4,
        'no-monotone-witnesses-both': True,
    }
    return pre, fW, facts


def check_counterexample():
    """Recomputes every fact of builtin_counterexample(). The witness is the
       name of the first fact that does not hold.
    """
    pre, fW, facts = builtin_counterexample()
    wanted = interesting_pairs_partial(fW, pre)
    found = {
        'monotone': is_monotone(fW, pre).holds,
        'pairs': pair_labels(pre, wanted),
        'yield': yield_monotone(pre, fW).values,
        'cost': cost_monotone(pre, fW).values,
        'no-monotone-witnesses-both': not any(
            wanted <= interesting_pairs(g, pre) for g in order_preserving_maps(pre)),
    }
    for name in ('monotone', 'pairs', 'yield', 'cost', 'no-monotone-witnesses-both'):
        expected = facts[name]
        if name == 'pairs':
            expected = sorted(expected)
        if found[name] != expected:
            return Verdict(False, witness=name)
    return Verdict(True)


def rank_valuation(pre, W):
    """Returns the valuation w -> number of elements of W below w."""
    W = frozenset(W)
    return PartialValuation(pre.labels, {w: len(pre.down(w) & W) for w in W})


def chain_most_informative_check(ctx, W, trials=50, seed=None):
    """Checks that the rank valuation of a chain W is at least as
       informative as every one of a seeded sample of valuations on W.
    """
    pre = OrderedResources.wrap(ctx).preorder
    W = frozenset(W)
    restricted, keep = pre.restrict(W)
    pair = restricted.is_chain()
    if pair is not None:
        raise WNotAChain('W is not totally ordered',
                         witness=(pre.labels[keep[pair[0]]], pre.labels[keep[pair[1]]]))
    rank = rank_valuation(pre, W)
    rng = random.Random(config.DEFAULT_SEED if seed is None else seed)
    for _ in range(trials):
        g = PartialValuation(pre.labels, {w: rng.randrange(len(W) + 1) for w in sorted(W)})
        verdict = more_informative(rank, g, pre, PARTIAL)
        if not verdict:
            return verdict
    return Verdict(True, note='{} valuations'.format(trials))


def informative_on_window_check(fW, gW, W, ctx):
    """For monotones on a common domain W, checks that comparing their
       yields on W agrees with comparing them on the whole carrier.
    """
    ctx = OrderedResources.wrap(ctx)
    pre = ctx.preorder
    W = frozenset(W)
    if fW.domain != W or gW.domain != W:
        raise BadParameters('both valuations must have domain W')
    yf = yield_monotone(ctx, fW)
    yg = yield_monotone(ctx, gW)
    on_window = more_informative(yf.as_valuation().restrict(W),
                                 yg.as_valuation().restrict(W), pre)
    everywhere = more_informative(yf, yg, pre)
    if on_window.holds != everywhere.holds:
        return Verdict(False, witness=on_window.witness or everywhere.witness)
    return Verdict(True, note='holds' if everywhere else 'fails on both')
