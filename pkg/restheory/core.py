"""This module provides the ResourceTheory class, which models a finite
   universally combinable resource theory, and the validator for its axioms.

   Resources are referred to by index. Sets of resources are frozensets of
   indices. The combination table is keyed by ordered index pairs (i, j)
   with i <= j, which makes it commutative by construction. Missing
   entries are the empty set (the two resources cannot be combined).
"""

import itertools
import random

from restheory import config
from restheory.errors import AxiomViolation, BadParameters, FormatError, NotAPreorder
from restheory.log import log, showing, SHOW_SUMMARY, SHOW_WITNESSES
from restheory.preorder import FinitePreorder
from restheory.verdict import Verdict

EMPTY = frozenset()


class ResourceTheory:
    """A finite resource theory (R_free, R, (x)) with a declared neutral set."""

    def __init__(self, names, table, free, neutral):
        self.names = tuple(names)
        n = len(self.names)
        if len(set(self.names)) != n:
            raise BadParameters('resource names must be distinct')
        for name in self.names:
            if ',' in name or name == '':
                raise BadParameters("invalid resource name '{}'".format(name))
        self._index = {name: i for i, name in enumerate(self.names)}
        self.table = {}
        for (i, j), value in table.items():
            if i > j:
                i, j = j, i
            value = frozenset(value)
            if not 0 <= i < n or not 0 <= j < n or \
                    any(not 0 <= k < n for k in value):
                raise BadParameters('combine entry ({}, {}) out of range'.format(i, j))
            if value:
                self.table[(i, j)] = value
        self.free = frozenset(free)
        self.neutral = frozenset(neutral)
        for k in self.free | self.neutral:
            if not 0 <= k < n:
                raise BadParameters('free/neutral index {} out of range'.format(k))
        self._free_image = None
        self._order = None

    def __len__(self):
        return len(self.names)

    @property
    def size(self):
        return len(self.names)

    def __repr__(self):
        return '{}({} resources, free={}, neutral={})'.format(
            type(self).__name__, len(self), self.set_label(self.free),
            self.set_label(self.neutral))

    def index(self, name):
        return self._index[name]

    def has_name(self, name):
        return name in self._index

    def parse_set(self, names):
        """Converts an iterable of names to a set of indices."""
        return frozenset(self._index[name] for name in names)

    def set_names(self, resources):
        """Returns the names of a set of resources in index order."""
        return [self.names[i] for i in sorted(resources)]

    def set_label(self, resources):
        return '{' + ','.join(self.set_names(resources)) + '}'

    @property
    def carrier(self):
        return frozenset(range(len(self)))

    def combine(self, r, s):
        """Returns r (x) s."""
        if r > s:
            r, s = s, r
        return self.table.get((r, s), EMPTY)

    def combine_sets(self, S, T):
        result = set()
        for s in S:
            for t in T:
                result |= self.combine(s, t)
        return frozenset(result)

    def free_image(self, r):
        """Returns R_free (x) r, the resources obtainable from r for free."""
        if self._free_image is None:
            self._free_image = tuple(self.combine_sets(self.free, (a,))
                                     for a in range(len(self)))
        return self._free_image[r]

    def is_deterministic(self):
        """Returns the first pair whose combination is not a singleton, or
           None if every combination is.
        """
        for r in range(len(self)):
            for s in range(r, len(self)):
                if len(self.combine(r, s)) != 1:
                    return (r, s)
        return None

    def replace(self, free=None, neutral=None, table=None, names=None):
        """Returns a copy of the theory with some components replaced."""
        return ResourceTheory(self.names if names is None else names,
                              self.table if table is None else table,
                              self.free if free is None else free,
                              self.neutral if neutral is None else neutral)


def combine_sets(theory, S, T):
    """Returns the union of s (x) t over s in S and t in T."""
    return theory.combine_sets(S, T)


class ValidationReport:
    """Result of validate(). Each violation is (axiom, witness) with the
       witness given as a tuple of resource names.
    """

    def __init__(self, violations, warnings, coverage):
        self.violations = violations
        self.warnings = warnings
        self.coverage = coverage

    def __bool__(self):
        return len(self.violations) == 0

    @property
    def ok(self):
        return len(self.violations) == 0

    def axioms(self):
        return [axiom for axiom, _ in self.violations]

    def first(self, axiom):
        """Returns the first witness reported for the given axiom."""
        for name, witness in self.violations:
            if name == axiom:
                return witness
        return None

    def to_json(self):
        return {
            'ok': self.ok,
            'coverage': self.coverage,
            'violations': [{'axiom': axiom, 'witness': list(witness)}
                           for axiom, witness in self.violations],
            'warnings': [{'kind': kind, 'witness': list(witness)}
                         for kind, witness in self.warnings],
        }


ASSOCIATIVITY = 'associativity'
NEUTRAL_NONEMPTY = 'neutral-nonempty'
NEUTRAL_LAW = 'neutral-law'
NEUTRAL_IN_FREE = 'neutral-in-free'
FREE_CLOSURE = 'free-closure'


def _associativity_fails(theory, r, s, t):
    left = set()
    for x in theory.combine(r, s):
        left |= theory.combine(x, t)
    right = set()
    for y in theory.combine(s, t):
        right |= theory.combine(r, y)
    return left != right


def validate(theory, strict=False, all_witnesses=False, cap=None, seed=None):
    """Checks the axioms of a resource theory.

       Associativity is checked over every triple when the carrier is at
       most cap (config.CARRIER_CAP) resources, and over a seeded sample of
       triples otherwise. Only the first witness of each axiom is reported
       unless all_witnesses is set. With strict set, absent combination
       entries are reported as warnings.
    """
    cap = config.CARRIER_CAP if cap is None else cap
    names = theory.names
    n = len(theory)
    violations = []
    warnings = []

    def report(axiom, witness):
        if not all_witnesses and any(a == axiom for a, _ in violations):
            return False
        violations.append((axiom, tuple(names[i] for i in witness)))
        return True

    if n <= cap:
        coverage = 'exhaustive'
        # With (x) commutative, the triples (r, s, t) and (t, s, r) give the
        # same equation, so r <= t suffices and still finds the first witness.
        triples = ((r, s, t) for r in range(n) for s in range(n)
                   for t in range(r, n))
        for r, s, t in triples:
            if _associativity_fails(theory, r, s, t):
                report(ASSOCIATIVITY, (r, s, t))
                if not all_witnesses:
                    break
    else:
        rng = random.Random(config.DEFAULT_SEED if seed is None else seed)
        samples = config.SAMPLE_TRIPLES
        coverage = 'sampled {}/{}'.format(samples, n ** 3)
        log('validate: {} resources above cap {}, sampling {} triples'.format(
            n, cap, samples))
        failures = []
        for _ in range(samples):
            r, s, t = rng.randrange(n), rng.randrange(n), rng.randrange(n)
            if _associativity_fails(theory, r, s, t):
                failures.append((r, s, t))
        for witness in sorted(set(failures)):
            report(ASSOCIATIVITY, witness)

    if not theory.neutral:
        violations.append((NEUTRAL_NONEMPTY, ()))
    for r in range(n):
        if theory.combine_sets(theory.neutral, (r,)) != {r}:
            report(NEUTRAL_LAW, (r,))
    for z in sorted(theory.neutral - theory.free):
        report(NEUTRAL_IN_FREE, (z,))
    free = sorted(theory.free)
    for i, s in enumerate(free):
        for t in free[i:]:
            if not theory.combine(s, t) <= theory.free:
                report(FREE_CLOSURE, (s, t))
    missing = theory.free - theory.combine_sets(theory.free, theory.free)
    for r in sorted(missing):
        report(FREE_CLOSURE, (r,))

    if strict:
        for r in range(n):
            for s in range(r, n):
                if not theory.combine(r, s):
                    warnings.append(('incompatible', (names[r], names[s])))

    result = ValidationReport(violations, warnings, coverage)
    if showing(SHOW_SUMMARY):
        log('validate: {} resources, {} violations ({})'.format(
            n, len(violations), coverage))
    if showing(SHOW_WITNESSES):
        for axiom, witness in violations:
            log('  {}: {}'.format(axiom, ','.join(witness)))
    return result


def require_valid(theory):
    """Raises AxiomViolation with the first witness if validate fails."""
    result = validate(theory)
    if not result:
        axiom, witness = result.violations[0]
        raise AxiomViolation('{} fails'.format(axiom), witness=witness)
    return theory


def resource_order(theory):
    """Returns the resource ordering: r >= s iff s in R_free (x) r.

       The result is cached on the theory. AxiomViolation is raised if the
       derived relation fails to be a preorder.
    """
    if theory._order is None:           # pylint: disable=protected-access
        order = FinitePreorder(theory.names,
                               [theory.free_image(r) for r in range(len(theory))])
        try:
            order.check()
        except NotAPreorder as err:
            raise AxiomViolation('resource ordering is not a preorder',
                                 witness=err.witness)
        theory._order = order           # pylint: disable=protected-access
    return theory._order                # pylint: disable=protected-access


def set_order(theory, S, T):
    """Returns True if S >= T, i.e. T is a subset of R_free (x) S."""
    return frozenset(T) <= theory.combine_sets(theory.free, S)


def compatibility_check(theory, S, T, U):
    """Checks that S >= T implies S (x) U >= T (x) U."""
    if not set_order(theory, S, T):
        return Verdict(True, note='premise does not hold')
    SU = theory.combine_sets(S, U)
    TU = theory.combine_sets(T, U)
    if set_order(theory, SU, TU):
        return Verdict(True)
    return Verdict(False, witness=(theory.set_label(S), theory.set_label(T),
                                   theory.set_label(U)))


def all_subsets(n):
    """Yields every subset of range(n) as a frozenset, in bitmask order."""
    for mask in range(1 << n):
        yield frozenset(i for i in range(n) if mask & (1 << i))


def subset_label(names, S):
    return '{' + ','.join(names[i] for i in sorted(S)) + '}'


def sample_subsets(n, rng, count):
    """Returns count random subsets of range(n)."""
    return [frozenset(i for i in range(n) if rng.random() < 0.5)
            for _ in range(count)]


def subset_triples(theory, exhaustive_cap=None, samples=200, seed=None):
    """Returns (S, T, U) triples: all of them for small carriers, a seeded
       sample above exhaustive_cap (config.EXHAUSTIVE_SUBSET_CARRIER).
    """
    cap = config.EXHAUSTIVE_SUBSET_CARRIER if exhaustive_cap is None else exhaustive_cap
    n = len(theory)
    if n <= cap:
        subsets = list(all_subsets(n))
        return list(itertools.product(subsets, repeat=3))
    rng = random.Random(config.DEFAULT_SEED if seed is None else seed)
    return [tuple(sample_subsets(n, rng, 3)) for _ in range(samples)]


def _field_error(message, field):
    return FormatError(message, field=field)


def _name_list(obj, field, names=None):
    if not isinstance(obj, list):
        raise _field_error('expecting a list of names', field)
    for i, name in enumerate(obj):
        if not isinstance(name, str):
            raise _field_error('expecting a string', '{}[{}]'.format(field, i))
        if names is not None and name not in names:
            raise _field_error("unknown resource '{}'".format(name),
                               '{}[{}]'.format(field, i))
    return obj


def theory_from_json(obj):
    """Builds a ResourceTheory from the theory file format:

       {"resources": [...], "free": [...], "neutral": [...],
        "combine": {"a,b": [...], ...}}
    """
    if not isinstance(obj, dict):
        raise _field_error('expecting an object', '<root>')
    for key in ('resources', 'free', 'neutral'):
        if key not in obj:
            raise _field_error('missing field', key)
    names = _name_list(obj['resources'], 'resources')
    if len(set(names)) != len(names):
        raise _field_error('duplicate resource name', 'resources')
    for i, name in enumerate(names):
        if ',' in name or name == '':
            raise _field_error("invalid resource name '{}'".format(name),
                               'resources[{}]'.format(i))
    known = set(names)
    index = {name: i for i, name in enumerate(names)}
    free = _name_list(obj['free'], 'free', known)
    neutral = _name_list(obj['neutral'], 'neutral', known)
    combine = obj.get('combine', {})
    if not isinstance(combine, dict):
        raise _field_error('expecting an object', 'combine')
    table = {}
    for key, value in combine.items():
        field = 'combine["{}"]'.format(key)
        parts = key.split(',')
        if len(parts) != 2 or parts[0] not in known or parts[1] not in known:
            raise _field_error('expecting a key "a,b" of two resource names', field)
        i, j = sorted((index[parts[0]], index[parts[1]]))
        result = frozenset(index[name] for name in _name_list(value, field, known))
        if (i, j) in table and table[(i, j)] != result:
            raise _field_error('conflicting entries for the same pair', field)
        table[(i, j)] = result
    return ResourceTheory(names, table,
                          [index[name] for name in free],
                          [index[name] for name in neutral])


def theory_to_json(theory):
    """Returns the canonical JSON object for a theory: keys in index order,
       names in index order, empty entries omitted.
    """
    names = theory.names
    combine = {}
    for (i, j), value in sorted(theory.table.items()):
        if value:
            combine['{},{}'.format(names[i], names[j])] = theory.set_names(value)
    return {
        'resources': list(names),
        'free': theory.set_names(theory.free),
        'neutral': theory.set_names(theory.neutral),
        'combine': combine,
    }
