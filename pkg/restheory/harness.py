"""Property suites checking the constructions on fixture and seeded
   theories against brute force oracles.

   Each suite returns a SuiteReport with the number of cases it ran and
   the failures it found. The check command of the command line tool runs
   them.
"""

import itertools
import random
from fractions import Fraction

from restheory import config
from restheory import convex, dist, gen, inform, monotones, order, translate
from restheory.core import (ResourceTheory, all_subsets, compatibility_check,
                            set_order, subset_triples, validate)
from restheory.errors import TheoryError
from restheory.log import log
from restheory.monotones import PartialValuation
from restheory.order import OrderedResources, down_closure, up_closure
from restheory.verdict import Verdict, jsonable

# pylint: disable=too-many-locals
# pylint: disable=cell-var-from-loop


class SuiteReport:
    """Result of one suite. failures holds (case, witness) pairs."""

    def __init__(self, name):
        self.name = name
        self.cases = 0
        self.failures = []
        self.notes = []

    def __bool__(self):
        return len(self.failures) == 0

    def check(self, case, verdict):
        """Counts a case and records it as failed unless verdict holds."""
        self.cases += 1
        if not verdict:
            witness = verdict.witness if isinstance(verdict, Verdict) else None
            self.failures.append((case, witness))

    def run(self, case, fn):
        """Counts a case whose check raises TheoryError on failure."""
        try:
            result = fn()
        except TheoryError as err:
            self.cases += 1
            self.failures.append((case, str(err)))
            return None
        self.cases += 1
        return result

    def run_check(self, case, fn):
        """Runs fn and checks the Verdict it returns. A TheoryError counts as
           a failure.
        """
        verdict = self.run(case, fn)
        if verdict is not None and not verdict:
            self.failures.append((case, verdict.witness))

    def to_json(self):
        return {
            'suite': self.name,
            'cases': self.cases,
            'failures': [{'case': case, 'witness': jsonable(witness)}
                         for case, witness in self.failures],
            'notes': list(self.notes),
        }


def _rng(seed):
    return random.Random(config.DEFAULT_SEED if seed is None else seed)


def small_builtins():
    return [('TRI', gen.tri()), ('UM1', gen.um1()), ('P5', gen.p5()), ('CVX1', gen.cvx1())]


def deterministic_bases():
    """Small deterministic theories usable as distinguishability bases."""
    bases = [('TRI', gen.tri()), ('UM1', gen.um1()), ('CVX1', gen.cvx1())]
    for m in (1, 2, 3):
        bases.append(('truncated-addition m={}'.format(m), gen.truncated_addition(
            gen.FamilySpec(gen.TRUNCATED_ADDITION, bound=m, generators=['1']), None)))
    bases.append(('tropical m=2', gen.tropical(
        gen.FamilySpec(gen.TROPICAL, bound=2, generators=['1']), None)))
    return bases


def brute_force_valid(theory):
    """Checks every axiom directly, with no symmetry shortcuts."""
    n = len(theory)
    for r, s, t in itertools.product(range(n), repeat=3):
        left = set()
        for x in theory.combine(r, s):
            left |= theory.combine(x, t)
        right = set()
        for y in theory.combine(s, t):
            right |= theory.combine(r, y)
        if left != right:
            return False
    if not theory.neutral or not theory.neutral <= theory.free:
        return False
    for r in range(n):
        if theory.combine_sets(theory.neutral, [r]) != {r}:
            return False
    return theory.combine_sets(theory.free, theory.free) == theory.free


def _witness_is_genuine(theory, axiom, witness):
    idx = [theory.index(name) for name in witness]
    if axiom == 'associativity':
        r, s, t = idx
        left = theory.combine_sets(theory.combine(r, s), [t])
        right = theory.combine_sets([r], theory.combine(s, t))
        return left != right
    if axiom == 'neutral-law':
        return theory.combine_sets(theory.neutral, idx) != set(idx)
    if axiom == 'neutral-in-free':
        return idx[0] in theory.neutral and idx[0] not in theory.free
    if axiom == 'free-closure':
        if len(idx) == 2:
            return not theory.combine(*idx) <= theory.free
        return idx[0] not in theory.combine_sets(theory.free, theory.free)
    return True


def suite_axioms(trials, seed):
    report = SuiteReport('axioms')
    fixtures = small_builtins()
    for m in range(5):
        fixtures.append(('truncated-addition m={}'.format(m), gen.truncated_addition(
            gen.FamilySpec(gen.TRUNCATED_ADDITION, bound=m), _rng(seed))))
    for size in range(4):
        fixtures.append(('union-monoid ground={}'.format(size), gen.union_monoid(
            gen.FamilySpec(gen.UNION_MONOID, size=size), _rng(seed))))
    for name, base in (('TRI', gen.tri()), ('UM1', gen.um1())):
        for constrained in (False, True):
            fixtures.append(('2-dist {} constrained={}'.format(name, constrained),
                             dist.build_k_dist(base, 2, constrained)))
    rng = _rng(seed)
    for i in range(trials):
        fixtures.append(('random #{}'.format(i), gen.random_theory(rng.randrange(1 << 32))))
    for name, theory in fixtures:
        result = validate(theory)
        report.check(name, Verdict(result.ok, result.violations[:1] or None))

    # Perturb one table entry of each small fixture. Every reported witness
    # must be a real violation, and a clean report must agree with brute force.
    for name, theory in small_builtins()[:3]:
        n = len(theory)
        for i, j in itertools.combinations_with_replacement(range(n), 2):
            for k in range(n):
                if theory.combine(i, j) == {k}:
                    continue
                table = dict(theory.table)
                table[(i, j)] = frozenset([k])
                mutant = ResourceTheory(theory.names, table, theory.free, theory.neutral)
                result = validate(mutant)
                case = '{} mutant {},{}->{}'.format(name, theory.names[i], theory.names[j],
                                                    theory.names[k])
                if result.ok:
                    report.check(case, Verdict(brute_force_valid(mutant)))
                else:
                    axiom, witness = result.violations[0]
                    report.check(case, Verdict(_witness_is_genuine(mutant, axiom, witness),
                                               (axiom,) + tuple(witness)))
    return report


def _random_dc(ctx, rng):
    return down_closure(ctx, [r for r in range(len(ctx)) if rng.random() < 0.4])


def suite_yield_cost(trials, seed):
    report = SuiteReport('yield-cost')
    rng = _rng(seed)
    for i in range(trials):
        theory = gen.random_theory(rng.randrange(1 << 32), max_carrier=8)
        ctx = OrderedResources.wrap(theory)
        mode = gen.DOMAIN_MODES[i % len(gen.DOMAIN_MODES)]
        fW = gen.random_valuation(ctx, rng.randrange(1 << 32), domain_mode=mode)
        D = _random_dc(ctx, rng)
        report.run('yield #{}'.format(i), lambda: monotones.yield_monotone(ctx, fW, D))
        report.run('cost #{}'.format(i), lambda: monotones.cost_monotone(ctx, fW, D))
    return report


def _small_theories(trials, seed):
    theories = [(name, t) for name, t in small_builtins() if len(t) <= 4]
    rng = _rng(seed)
    for i in range(max(1, trials // 20)):
        theory = gen.random_theory(rng.randrange(1 << 32), max_carrier=4)
        theories.append(('random #{}'.format(i), theory))
    return theories


def suite_closure(trials, seed):
    report = SuiteReport('closure')
    for name, theory in _small_theories(trials, seed):
        ctx = OrderedResources.wrap(theory)
        subsets = list(all_subsets(len(theory)))
        for S, T in itertools.product(subsets, repeat=2):
            case = '{} {} {}'.format(name, ctx.label(S), ctx.label(T))
            enh = translate.enh_order(ctx, S, T)
            deg = translate.deg_order(ctx, S, T)
            same = enh == (down_closure(ctx, S) >= down_closure(ctx, T)) \
                == set_order(theory, S, T) == translate.enh_by_functions(ctx, S, T)
            report.check(case + ' enh', Verdict(same))
            same = deg == (up_closure(ctx, S) <= up_closure(ctx, T)) \
                == translate.deg_by_functions(ctx, S, T)
            report.check(case + ' deg', Verdict(same))
    return report


def suite_identities(trials, seed):
    report = SuiteReport('identities')
    for name, theory in _small_theories(trials, seed):
        pre = OrderedResources.wrap(theory).preorder
        subsets = list(all_subsets(len(theory)))
        for S, T in itertools.product(subsets, repeat=2):
            case = '{} {} {}'.format(name, theory.set_label(S), theory.set_label(T))
            report.check(case + ' compose', order.check_compose_images(theory, S, T))
            report.check(case + ' arrows', order.removing_arrows_check(pre, S, T))
        for S, T, U in subset_triples(theory, samples=trials, seed=seed):
            case = '{} {} {} {}'.format(name, theory.set_label(S), theory.set_label(T),
                                        theory.set_label(U))
            report.check(case + ' compatible', compatibility_check(theory, S, T, U))
    rng = _rng(seed)
    for i in range(trials):
        theory = gen.random_theory(rng.randrange(1 << 32), max_carrier=8)
        n = len(theory)
        S = frozenset(r for r in range(n) if rng.random() < 0.4)
        T = frozenset(r for r in range(n) if rng.random() < 0.4)
        pre = OrderedResources.wrap(theory).preorder
        report.check('random #{} compose'.format(i), order.check_compose_images(theory, S, T))
        report.check('random #{} arrows'.format(i), order.removing_arrows_check(pre, S, T))
    return report


def suite_counterexample(trials, seed):     # pylint: disable=unused-argument
    report = SuiteReport('counterexample')
    report.check('four element order', inform.check_counterexample())
    return report


def _coarsening(fW, rng):
    """Returns g = min(f, c) on the same domain, which f is at least as
       informative as.
    """
    values = sorted(set(fW.values.values()))
    if not values:
        return fW
    c = rng.choice(values)
    return PartialValuation(fW.labels, {w: min(v, c) for w, v in fW.values.items()})


def suite_informative(trials, seed):
    report = SuiteReport('informative')
    rng = _rng(seed)
    for i in range(trials // 2):
        theory = gen.random_theory(rng.randrange(1 << 32), max_carrier=8)
        ctx = OrderedResources.wrap(theory)
        mode = gen.DOMAIN_MODES[i % len(gen.DOMAIN_MODES)]
        fW = gen.random_valuation(ctx, rng.randrange(1 << 32), domain_mode=mode)
        gW = _coarsening(fW, rng)
        D = _random_dc(ctx, rng)
        result = inform.prop_informative_yield_cost_check(fW, gW, D, ctx)
        premise = result.relations['premise']
        report.check('forward #{}'.format(i), Verdict(premise.holds and bool(result),
                                                          premise.witness))

        fM = gen.random_valuation(ctx, rng.randrange(1 << 32), monotone=True,
                                  domain_mode=mode)
        gM = gen.random_valuation(ctx, rng.randrange(1 << 32), monotone=True)
        gM = gM.restrict(fM.domain)
        result = inform.prop_informative_yield_cost_check(fM, gM, None, ctx)
        report.check('converse #{}'.format(i), Verdict(bool(result)))
        report.run_check('extension #{}'.format(i),
                         lambda: monotones.extension_coincidence_check(ctx, fM))
        report.check('window #{}'.format(i),
                     inform.informative_on_window_check(fM, gM, fM.domain, ctx))
    return report


def suite_dist(trials, seed):
    report = SuiteReport('dist')
    rng = _rng(seed)
    certified = []
    for name, base in deterministic_bases():
        if len(base) > 4:
            continue
        for k in (2, 3):
            for constrained in (False, True):
                tt = dist.build_k_dist(base, k, constrained)
                report.check('{} k={} constrained={} validate'.format(name, k, constrained),
                             Verdict(validate(tt).ok))
            tt = dist.build_k_dist(base, k)
            cert = dist.certify_contraction(dist.difference_indicator(tt), tt)
            report.check('{} k={} difference'.format(name, k), cert.verdict)
            certified.append((name, base, cert))
    for i in range(trials // 2):
        name, base, cert = certified[rng.randrange(len(certified))]
        tt = cert.theory
        sets = [_random_dc(base, rng) for _ in range(tt.k)]
        if tt.k == 2:
            report.run('{} #{} min-dist'.format(name, i),
                       lambda: dist.min_distinguishability(base, cert, sets[1]))
        axis = rng.randint(1, tt.k)
        sets[axis - 1] = base.carrier
        W_dc = dist.product_set(tt, sets)
        report.run('{} #{} contraction'.format(name, i),
                   lambda: dist.contraction_monotone(base, cert, axis, W_dc))
        report.check('{} #{} product'.format(name, i), dist.product_dc_check(
            base, [_random_dc(base, rng) for _ in range(tt.k)]))
    return report


def suite_convex(trials, seed):
    report = SuiteReport('convex')
    ct = gen.cvx1()
    half = ct.index('1/2')
    report.check('CVX1 weight', Verdict(convex.weight(ct, half) == Fraction(1, 2)))
    report.check('CVX1 robustness', Verdict(convex.robustness(ct, half) == 1))
    report.check('CVX1 bilinear', convex.bilinearity_check(ct))
    report.check('CVX1 contraction', convex.cva_contraction_check(ct))
    constant = sum(1 for c in convex.classify_constructions(ct) if c.constant)
    report.check('CVX1 classification', Verdict(constant == 8, constant))
    rng = _rng(seed)
    for i in range(min(trials, 20)):
        ct = gen.convex_family(rng.randrange(1 << 32), dim=1 + i % 2)
        for kind in sorted(convex.NAMED):
            report.run('family #{} {}'.format(i, kind),
                       lambda: convex.named_monotone(ct, kind))
        constructions = report.run('family #{} classification'.format(i),
                                   lambda: convex.classify_constructions(ct))
        if constructions is not None:
            count = sum(1 for c in constructions if c.constant)
            if count != 8:
                report.notes.append('family #{}: {} constant constructions'.format(i, count))
    return report


def suite_isomorphism(trials, seed):
    report = SuiteReport('isomorphism')
    for name, theory in _small_theories(trials, seed):
        ctx = OrderedResources.wrap(theory)
        for closure, family_fn, kind, subset_kind in (
                (down_closure, order.downward_closed_sets, order.INCLUSION,
                 translate.SubsetOrderKind.ENHANCEMENT),
                (up_closure, order.upward_closed_sets, order.REVERSE_INCLUSION,
                 translate.SubsetOrderKind.DEGRADATION)):
            family = family_fn(ctx)
            f = order.closure_map(ctx, closure, family)
            preA = translate.powerset_preorder(ctx, subset_kind)
            preB = order.family_preorder(ctx.labels, family, kind)
            report.run_check('{} {} isomorphic'.format(name, subset_kind),
                             lambda: order.first_isomorphism_check(f, preA, preB))
    return report


def suite_mediating(trials, seed):      # pylint: disable=unused-argument
    report = SuiteReport('mediating')
    for name, theory in small_builtins():
        for C in [theory.neutral] + [frozenset([r]) for r in range(len(theory))]:
            report.run('{} aug{}'.format(name, theory.set_label(C)),
                       lambda: translate.aug_map(theory, C))
        for n in (1, 2, 3):
            report.run('{} copy{}'.format(name, n), lambda: translate.copy_map(theory, n))
    for name, base in deterministic_bases():
        E = dist.tuple_embedding(base, 2, 1)
        rep = translate.check_deg_mediating(E)
        failed = [k for k, v in rep.conditions.items() if not v]
        report.check('{} projection'.format(name), Verdict(bool(rep), failed or None))
    E = dist.tuple_embedding(gen.tri(), 2, 1)
    enh = translate.direct_check(E, translate.SubsetOrderKind.ENHANCEMENT)
    report.check('TRI E not enh-preserving', Verdict(not enh, enh.witness))
    return report


SUITES = {
    'axioms': suite_axioms,
    'yield-cost': suite_yield_cost,
    'closure': suite_closure,
    'identities': suite_identities,
    'counterexample': suite_counterexample,
    'informative': suite_informative,
    'dist': suite_dist,
    'convex': suite_convex,
    'isomorphism': suite_isomorphism,
    'mediating': suite_mediating,
}


def run_suites(names=None, trials=None, seed=None):
    """Runs the named suites (all of them by default) in order and returns
       their reports.
    """
    trials = config.DEFAULT_TRIALS if trials is None else trials
    seed = config.DEFAULT_SEED if seed is None else seed
    names = list(SUITES) if names is None or 'all' in names else names
    reports = []
    for name in names:
        report = SUITES[name](trials, seed)
        log('suite {}: {} cases, {} failures'.format(name, report.cases,
                                                      len(report.failures)))
        reports.append(report)
    return reports
