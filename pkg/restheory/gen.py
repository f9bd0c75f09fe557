"""Builders for the fixture theories and seeded generators for theories and
   valuations.

   Every family is closed under its combination by construction, so the
   generated theories are valid without any repair step. Generation is a
   pure function of the family parameters and the seed.
"""

import itertools
import random
from fractions import Fraction

from restheory import config
from restheory.convex import ConvexTheory
from restheory.core import ResourceTheory, all_subsets, validate
from restheory.errors import BadParameters, FormatError
from restheory.log import log, showing, SHOW_SUMMARY
from restheory.monotones import PartialValuation
from restheory.order import OrderedResources, down_closure, up_closure

UNION_MONOID = 'union-monoid'
TRUNCATED_ADDITION = 'truncated-addition'
TROPICAL = 'tropical'
DIRECT_PRODUCT = 'direct-product'
UNION_OF_TABLES = 'union-of-tables'
BUILTIN = 'builtin'

FAMILIES = (UNION_MONOID, TRUNCATED_ADDITION, TROPICAL, DIRECT_PRODUCT,
            UNION_OF_TABLES, BUILTIN)
BUILTINS = ('TRI', 'UM1', 'CVX1', 'P5')

MAX_GROUND = 6          # 64 subsets
MAX_BOUND = 63


class FamilySpec:
    """Names a family of theories and its parameters.

       size is the ground set size of a union monoid, bound the largest
       value of truncated addition or tropical min, factors the two specs
       of a direct product or union of tables, and name the builtin fixture.
       generators, when given, lists the resource names whose closure is
       the free set; otherwise the free set is drawn from the seed.
    """

    def __init__(self, family, size=None, bound=None, factors=None,
                 generators=None, name=None):
        if family not in FAMILIES:
            raise BadParameters("unknown family '{}'".format(family))
        self.family = family
        self.size = size
        self.bound = bound
        self.factors = factors
        self.generators = generators
        self.name = name

    def __repr__(self):
        return 'FamilySpec({})'.format(self.to_json())

    def to_json(self):
        result = {'family': self.family}
        for key in ('size', 'bound', 'generators', 'name'):
            value = getattr(self, key)
            if value is not None:
                result[key] = value
        if self.factors is not None:
            result['factors'] = [f.to_json() for f in self.factors]
        return result

    @staticmethod
    def from_json(obj, field='<root>'):
        if not isinstance(obj, dict) or obj.get('family') not in FAMILIES:
            raise FormatError('expecting an object with a known "family"', field=field)
        factors = obj.get('factors')
        if factors is not None:
            if not isinstance(factors, list):
                raise FormatError('expecting a list', field=field + '.factors')
            factors = [FamilySpec.from_json(f, '{}.factors[{}]'.format(field, i))
                       for i, f in enumerate(factors)]
        for key in ('size', 'bound'):
            if key in obj and not isinstance(obj[key], int):
                raise FormatError('expecting an integer', field='{}.{}'.format(field, key))
        return FamilySpec(obj['family'], obj.get('size'), obj.get('bound'), factors,
                          obj.get('generators'), obj.get('name'))


def _closure(combine, generators, seed_set):
    """Returns the closure of generators | seed_set under combine(a, b),
       which returns a set of elements.
    """
    result = set(generators) | set(seed_set)
    changed = True
    while changed:
        changed = False
        for a, b in itertools.product(sorted(result), repeat=2):
            new = set(combine(a, b)) - result
            if new:
                result |= new
                changed = True
    return frozenset(result)


def _theory_from_fn(names, fn, free_generators, neutral, rng, probability=0.3):
    """Builds a deterministic theory from fn(i, j) -> index. The free set is
       the closure of the neutral set and the generators; with no explicit
       generators each resource is picked with the given probability.
    """
    n = len(names)
    table = {(i, j): (fn(i, j),) for i in range(n) for j in range(i, n)}
    if free_generators is None:
        free_generators = [i for i in range(n) if rng.random() < probability]
    free = _closure(lambda a, b: (fn(min(a, b), max(a, b)),), free_generators, neutral)
    return ResourceTheory(names, table, free, neutral)


def _generator_indices(spec, names):
    if spec.generators is None:
        return None
    index = {name: i for i, name in enumerate(names)}
    for name in spec.generators:
        if name not in index:
            raise BadParameters("unknown generator '{}'".format(name))
    return [index[name] for name in spec.generators]


def union_monoid(spec, rng):
    size = 2 if spec.size is None else spec.size
    if not 0 <= size <= MAX_GROUND:
        raise BadParameters('ground size must be between 0 and {}'.format(MAX_GROUND))
    ground = 'abcdefghijklmnopqrstuvwxyz'[:size]
    subsets = list(all_subsets(size))
    names = ['{' + ''.join(ground[i] for i in sorted(S)) + '}' for S in subsets]
    index = {S: i for i, S in enumerate(subsets)}
    return _theory_from_fn(names, lambda i, j: index[subsets[i] | subsets[j]],
                           _generator_indices(spec, names), [0], rng)


def _bound(spec, default):
    bound = default if spec.bound is None else spec.bound
    if not 0 <= bound <= MAX_BOUND:
        raise BadParameters('bound must be between 0 and {}'.format(MAX_BOUND))
    return bound


def truncated_addition(spec, rng):
    """{0, ..., m} under addition saturating at m."""
    m = _bound(spec, 3)
    names = [str(i) for i in range(m + 1)]
    return _theory_from_fn(names, lambda i, j: min(i + j, m),
                           _generator_indices(spec, names), [0], rng)


def tropical(spec, rng):
    """{0, ..., m, inf} under min, with inf the neutral resource."""
    m = _bound(spec, 3)
    names = [str(i) for i in range(m + 1)] + ['inf']
    return _theory_from_fn(names, min, _generator_indices(spec, names), [m + 1], rng)


def direct_product(t1, t2):
    """The componentwise combination of two theories. Names look like
       "[a|b]".
    """
    pairs = list(itertools.product(range(len(t1)), range(len(t2))))
    index = {p: i for i, p in enumerate(pairs)}
    names = ['[{}|{}]'.format(t1.names[a], t2.names[b]) for a, b in pairs]
    table = {}
    for i, (a1, b1) in enumerate(pairs):
        for j in range(i, len(pairs)):
            a2, b2 = pairs[j]
            table[(i, j)] = [index[(x, y)] for x in t1.combine(a1, a2)
                             for y in t2.combine(b1, b2)]
    free = [index[p] for p in itertools.product(sorted(t1.free), sorted(t2.free))]
    neutral = [index[p] for p in itertools.product(sorted(t1.neutral), sorted(t2.neutral))]
    return ResourceTheory(names, table, free, neutral)


def union_of_tables(t1, t2):
    """Returns the theory combining r and s to r (x)1 s | r (x)2 s. Both
       theories must share names and neutral set. Raises BadParameters when
       the union is not a valid theory.
    """
    if t1.names != t2.names:
        raise BadParameters('tables must share their resource names')
    if t1.neutral != t2.neutral:
        raise BadParameters('tables must share their neutral set')
    table = {}
    for key in set(t1.table) | set(t2.table):
        table[key] = t1.table.get(key, frozenset()) | t2.table.get(key, frozenset())
    theory = ResourceTheory(t1.names, table, t1.free | t2.free, t1.neutral)
    report = validate(theory)
    if not report:
        axiom, witness = report.violations[0]
        raise BadParameters('union of tables violates {} at {}'.format(
            axiom, ','.join(witness)))
    return theory


def biaffine(p, q):
    """Coordinatewise x (x) y = xy + (1 - x)(1 - y) on [0, 1]."""
    return tuple(x * y + (1 - x) * (1 - y) for x, y in zip(p, q))


HALF = Fraction(1, 2)


def tri():
    names = ['e', 'a', 'b']
    table = {(0, 0): [0], (0, 1): [1], (0, 2): [2],
             (1, 1): [1], (1, 2): [2], (2, 2): [2]}
    return ResourceTheory(names, table, free=[0, 1], neutral=[0])


def um1():
    names = ['{}', '{x}']
    table = {(0, 0): [0], (0, 1): [1], (1, 1): [1]}
    return ResourceTheory(names, table, free=[0], neutral=[0])


def cvx1():
    return ConvexTheory.from_points(['0', '1/2', '1'], [[0], [HALF], [1]], biaffine,
                                    free=['0', '1'], neutral=['1'])


def p5():
    """z is neutral. Each side {r1, r2} and {s1, s2} combines to the larger
       index, and the sides cannot be combined with each other.
    """
    names = ['z', 'r1', 'r2', 's1', 's2']
    table = {(0, i): [i] for i in range(5)}
    for side in ((1, 2), (3, 4)):
        for i in side:
            for j in side:
                if i <= j:
                    table[(i, j)] = [j]
    return ResourceTheory(names, table, free=[0, 2, 4], neutral=[0])


_BUILTINS = {'TRI': tri, 'UM1': um1, 'CVX1': cvx1, 'P5': p5}


def builtin(name):
    if name not in _BUILTINS:
        raise BadParameters("unknown builtin '{}'".format(name))
    return _BUILTINS[name]()


def build(spec, seed=None):
    """Builds the theory described by spec. The result depends only on spec
       and seed.
    """
    rng = random.Random(config.DEFAULT_SEED if seed is None else seed)
    if spec.family == BUILTIN:
        theory = builtin(spec.name)
    elif spec.family == UNION_MONOID:
        theory = union_monoid(spec, rng)
    elif spec.family == TRUNCATED_ADDITION:
        theory = truncated_addition(spec, rng)
    elif spec.family == TROPICAL:
        theory = tropical(spec, rng)
    else:
        if spec.factors is None or len(spec.factors) != 2:
            raise BadParameters('{} needs exactly two factors'.format(spec.family))
        t1 = build(spec.factors[0], rng.randrange(1 << 32))
        t2 = build(spec.factors[1], rng.randrange(1 << 32))
        if spec.family == DIRECT_PRODUCT:
            theory = direct_product(t1, t2)
        else:
            theory = union_of_tables(t1, t2)
    if showing(SHOW_SUMMARY):
        log('build: {} -> {}'.format(spec.family, theory))
    return theory


def random_theory(seed, max_carrier=8):
    """Draws a family and its parameters from the seed, keeping the carrier
       at most max_carrier resources.
    """
    if max_carrier < 2:
        raise BadParameters('max_carrier must be at least 2')
    rng = random.Random(seed)
    choices = [TRUNCATED_ADDITION, TROPICAL, UNION_MONOID]
    if max_carrier >= 4:
        choices.append(DIRECT_PRODUCT)
    family = rng.choice(choices)
    if family == TRUNCATED_ADDITION:
        spec = FamilySpec(family, bound=rng.randint(1, max_carrier - 1))
    elif family == TROPICAL:
        spec = FamilySpec(family, bound=rng.randint(0, max_carrier - 2))
    elif family == UNION_MONOID:
        size = rng.randint(1, min(3, max_carrier.bit_length() - 1))
        spec = FamilySpec(family, size=size)
    else:
        spec = FamilySpec(family, factors=[
            FamilySpec(TRUNCATED_ADDITION, bound=rng.randint(1, max_carrier // 2 - 1)),
            FamilySpec(rng.choice([TRUNCATED_ADDITION, UNION_MONOID]), bound=1, size=1)])
    return build(spec, rng.randrange(1 << 32))


def convex_family(seed, dim=1):
    """The convex theory on {0, 1/2, 1}^dim under coordinatewise biaffine
       combination. The all-ones point is neutral and the free set is the
       closure of a seeded choice of vertices.
    """
    if not 1 <= dim <= 3:
        raise BadParameters('dim must be 1, 2 or 3')
    rng = random.Random(seed)
    levels = (Fraction(0), HALF, Fraction(1))
    points = list(itertools.product(levels, repeat=dim))
    names = ['[' + '|'.join(str(c) for c in p) + ']' for p in points]
    index = {p: i for i, p in enumerate(points)}
    ones = index[(Fraction(1),) * dim]
    vertices = [index[p] for p in itertools.product(levels[::2], repeat=dim)]
    generators = [v for v in vertices if rng.random() < 0.5]
    free = _closure(lambda a, b: (index[biaffine(points[a], points[b])],),
                    generators, [ones])
    return ConvexTheory.from_points(names, points, biaffine,
                                    free=[names[i] for i in sorted(free)],
                                    neutral=[names[ones]])


FULL = 'full'
RANDOM_SUBSET = 'random-subset'
DOWNWARD_CLOSED = 'downward-closed'
UPWARD_CLOSED = 'upward-closed'
DOMAIN_MODES = (FULL, RANDOM_SUBSET, DOWNWARD_CLOSED, UPWARD_CLOSED)


def random_domain(ctx, rng, domain_mode):
    ctx = OrderedResources.wrap(ctx)
    if domain_mode == FULL:
        return ctx.carrier
    picked = frozenset(r for r in range(len(ctx)) if rng.random() < 0.5)
    if domain_mode == RANDOM_SUBSET:
        return picked
    if domain_mode == DOWNWARD_CLOSED:
        return down_closure(ctx, picked)
    if domain_mode == UPWARD_CLOSED:
        return up_closure(ctx, picked)
    raise BadParameters("unknown domain mode '{}'".format(domain_mode))


def random_valuation(ctx, seed, monotone=False, domain_mode=FULL):
    """Draws a partial valuation. A monotone valuation sends r to the sum of
       seeded weights over everything r dominates.
    """
    ctx = OrderedResources.wrap(ctx)
    rng = random.Random(seed)
    W = random_domain(ctx, rng, domain_mode)
    if monotone:
        weights = [rng.randint(0, 3) for _ in range(len(ctx))]
        values = {r: sum(weights[s] for s in ctx.preorder.down(r)) for r in W}
    else:
        values = {r: Fraction(rng.randint(-6, 10), rng.choice((1, 2, 3)))
                  for r in sorted(W)}
    return PartialValuation(ctx.labels, values)
