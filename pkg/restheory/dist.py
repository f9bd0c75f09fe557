"""k-distinguishability theories over deterministic base theories, and the
   monotones obtained from k-contractions.

   The tuple theory over a base R has the k-tuples of resources as its
   carrier and combines them componentwise. Its free tuples are the
   constant ones (unconstrained), or the constant tuples of free resources
   (constrained). Monotones of the unconstrained theory are the
   k-contractions: measures of distinguishability that cannot increase
   when the same deterministic processing is applied to every component.
"""

import itertools

from restheory import config
from restheory.core import ResourceTheory, resource_order, theory_to_json
from restheory.errors import (BadParameters, BaseNotDeterministic, CarrierTooLarge,
                              DNotDownwardClosed, NotMonotone, UncertifiedInput,
                              WdcNotDownwardClosed)
from restheory.log import log, showing, SHOW_SUMMARY
from restheory.monotones import (MonotoneFn, PartialValuation, f_min, format_ext,
                                 is_monotone)
from restheory.order import (OrderedResources, down_escape, up_escape,
                             is_downward_closed, is_upward_closed)
from restheory.translate import (DEG, ENH, MediatingMap, pull_back,
                                 restrict_map)
from restheory.verdict import Verdict


class TupleTheory(ResourceTheory):
    """The k-distinguishability theory over a deterministic base.

       tuples[i] is the tuple of base indices of resource i, in
       lexicographic order. Names look like "(a|b)".
    """

    def __init__(self, base, k, constrained, tuples, table, free, neutral):
        names = ['(' + '|'.join(base.names[c] for c in t) + ')' for t in tuples]
        ResourceTheory.__init__(self, names, table, free, neutral)
        self.base = base
        self.k = k
        self.constrained = constrained
        self.tuples = tuple(tuples)
        self.tuple_index = {t: i for i, t in enumerate(self.tuples)}

    def __repr__(self):
        return 'TupleTheory(k={}, {}, {} tuples)'.format(
            self.k, 'constrained' if self.constrained else 'unconstrained', len(self))

    def index_of(self, components):
        """Returns the index of the tuple with the given base indices."""
        return self.tuple_index[tuple(components)]

    def projection(self, axis):
        """Returns the list mapping each tuple to its component at axis
           (counted from 1).
        """
        if not 1 <= axis <= self.k:
            raise BadParameters('axis must be between 1 and {}'.format(self.k))
        return [t[axis - 1] for t in self.tuples]

    def to_json(self):
        result = theory_to_json(self)
        result['tuples'] = {name: [self.base.names[c] for c in t]
                            for name, t in zip(self.names, self.tuples)}
        return result


def build_k_dist(base, k, constrained=False, cap=None):
    """Builds the (constrained) k-distinguishability theory over base."""
    if k < 2:
        raise BadParameters('k must be at least 2')
    pair = base.is_deterministic()
    if pair is not None:
        raise BaseNotDeterministic('combination is not singleton-valued',
                                   witness=(base.names[pair[0]], base.names[pair[1]]))
    cap = config.TUPLE_CAP if cap is None else cap
    n = len(base)
    if n ** k > cap:
        raise CarrierTooLarge('{}**{} tuples exceed the cap of {}'.format(n, k, cap))
    product = [[next(iter(base.combine(a, b))) for b in range(n)] for a in range(n)]

    def index(t):
        result = 0
        for c in t:
            result = result * n + c
        return result

    tuples = list(itertools.product(range(n), repeat=k))
    table = {}
    for i, t in enumerate(tuples):
        for j in range(i, len(tuples)):
            u = tuples[j]
            table[(i, j)] = (index([product[a][b] for a, b in zip(t, u)]),)
    constant = lambda c: index((c,) * k)
    free_base = base.free if constrained else range(n)
    free = [constant(c) for c in free_base]
    neutral = [constant(c) for c in base.neutral]
    theory = TupleTheory(base, k, constrained, tuples, table, free, neutral)
    if showing(SHOW_SUMMARY):
        log('build_k_dist: k={} {} over {} resources, {} tuples'.format(
            k, 'constrained' if constrained else 'unconstrained', n, len(tuples)))
    return theory


def difference_indicator(tt):
    """1 on tuples whose components are not all equal, 0 on the others."""
    return PartialValuation.total(tt.names,
                                  [0 if len(set(t)) == 1 else 1 for t in tt.tuples])


def equality_indicator(tt):
    return PartialValuation.total(tt.names,
                                  [1 if len(set(t)) == 1 else 0 for t in tt.tuples])


def is_k_contraction(f, tt):
    """Checks that f is monotone on the unconstrained tuple theory."""
    if tt.constrained:
        raise BadParameters('contractions are monotones of the unconstrained theory')
    if not f.is_total():
        raise BadParameters('a contraction must be defined on every tuple')
    return is_monotone(f, resource_order(tt))


class Certificate:
    """Records whether subject passed a check.

       Constructors taking certificates refuse ones that do not hold unless
       they are explicitly forced.
    """

    def __init__(self, kind, subject, verdict, theory=None):
        self.kind = kind
        self.subject = subject
        self.verdict = verdict
        self.theory = theory

    def __bool__(self):
        return self.verdict.holds

    @property
    def holds(self):
        return self.verdict.holds

    @property
    def witness(self):
        return self.verdict.witness

    def __repr__(self):
        return 'Certificate({}, holds={})'.format(self.kind, self.holds)


def certify_contraction(f, tt):
    return Certificate('contraction', f, is_k_contraction(f, tt), theory=tt)


def _as_list(phi, n):
    if callable(phi) and not isinstance(phi, (list, tuple)):
        phi = [phi(r) for r in range(n)]
    phi = list(phi)
    if len(phi) != n or any(not 0 <= p < n for p in phi):
        raise BadParameters('the map must send every resource to a resource')
    return phi


def commuting_map_check(base, phi):
    """Checks phi(t (x) r) == t (x) phi(r) for every free t and every r.
       The witness is the first failing (t, r).
    """
    phi = _as_list(phi, len(base))
    for t in sorted(base.free):
        for r in range(len(base)):
            lhs = frozenset(phi[x] for x in base.combine(t, r))
            rhs = base.combine(t, phi[r])
            if lhs != rhs:
                return Verdict(False, witness=(base.names[t], base.names[r]))
    return Verdict(True)


def certify_commuting(base, phi):
    phi = _as_list(phi, len(base))
    return Certificate('commuting', phi, commuting_map_check(base, phi), theory=base)


def _require(cert, kind, force):
    if cert.kind != kind:
        raise BadParameters('expecting a {} certificate'.format(kind))
    if not cert.holds:
        if not force:
            raise UncertifiedInput('{} certificate does not hold'.format(kind),
                                   witness=cert.witness)
        log('using a failed {} certificate (forced)'.format(kind))


def _finish(base, values, provenance):
    pre = resource_order(base)
    checked = is_monotone(values, pre)
    if not checked:
        raise NotMonotone('{} output is not monotone'.format(provenance['construction']),
                          witness=checked.witness)
    if showing(SHOW_SUMMARY):
        log('{}: {}'.format(provenance['construction'],
                            ' '.join('{}={}'.format(l, format_ext(v))
                                     for l, v in zip(base.names, values))))
    return MonotoneFn(base.names, values, provenance, checked)


def _two_dist(f_cert, base):
    tt = f_cert.theory
    if tt.k != 2 or tt.base is not base:
        raise BadParameters('expecting a 2-contraction over the given base')
    return tt


def monotone_from_commuting(base, f_cert, phi_cert, force=False):
    """Returns M(r) = f(r, phi(r)) for a 2-contraction f and a map phi that
       commutes with the free resources.
    """
    _require(f_cert, 'contraction', force)
    _require(phi_cert, 'commuting', force)
    tt = _two_dist(f_cert, base)
    f, phi = f_cert.subject, phi_cert.subject
    values = [f(tt.index_of((r, phi[r]))) for r in range(len(base))]
    provenance = {
        'construction': 'commuting',
        'phi': {base.names[r]: base.names[phi[r]] for r in range(len(base))},
    }
    return _finish(base, values, provenance)


def min_distinguishability(base, f_cert, R_dc, force=False):
    """Returns M(r) = inf { f(r, s) | s in R_dc } for a downward closed R_dc."""
    _require(f_cert, 'contraction', force)
    tt = _two_dist(f_cert, base)
    R_dc = frozenset(R_dc)
    escape = down_escape(base, R_dc)
    if escape is not None:
        raise DNotDownwardClosed('R_dc is not downward closed',
                                 witness=(base.names[escape[0]], base.names[escape[1]]))
    f = f_cert.subject
    values = []
    for r in range(len(base)):
        values.append(f_min(f, [tt.index_of((r, s)) for s in R_dc]))
    provenance = {
        'construction': 'min-distinguishability',
        'R_dc': base.set_names(R_dc),
    }
    return _finish(base, values, provenance)


def tuple_embedding(base, k=2, axis=1, constrained=False, cap=None):
    """Returns the map r -> every tuple whose axis component is r, into the
       k-distinguishability theory, with the projection onto that axis.
    """
    tt = build_k_dist(base, k, constrained, cap)
    G = tt.projection(axis)
    images = [[q for q in range(len(tt)) if G[q] == r] for r in range(len(base))]
    return MediatingMap(base, tt, images, DEG, projection=G, name='E{}'.format(axis))


def contraction_monotone(base, f_cert, axis, W_dc, force=False, cap=None):
    """Returns M(r) = inf of f over the tuples of W_dc whose axis component
       is r. W_dc must be downward closed in the constrained tuple theory.
    """
    _require(f_cert, 'contraction', force)
    tt = f_cert.theory
    if tt.base is not base:
        raise BadParameters('expecting a contraction over the given base')
    E = tuple_embedding(base, tt.k, axis, constrained=True, cap=cap)
    target = E.target
    W_dc = frozenset(W_dc)
    escape = down_escape(target, W_dc)
    if escape is not None:
        raise WdcNotDownwardClosed(
            'W_dc is not downward closed in the constrained theory',
            witness=(target.names[escape[0]], target.names[escape[1]]))
    root = PartialValuation.total(target.names, f_cert.subject.as_list())
    m = pull_back(restrict_map(E, W_dc), root, 'min', force=force)
    m.provenance = {
        'construction': 'contraction',
        'k': tt.k,
        'axis': axis,
        'W_dc': target.set_names(W_dc),
    }
    return m


def product_set(tt, sets):
    """Returns the indices of the tuples in S_1 x ... x S_k."""
    return frozenset(tt.index_of(t) for t in itertools.product(*[sorted(S) for S in sets]))


def product_dc_check(base, sets, cap=None):
    """Checks that a product of downward closed sets is downward closed in
       the constrained tuple theory, and the same for upward closed sets.
    """
    sets = [frozenset(S) for S in sets]
    tt = build_k_dist(base, len(sets), constrained=True, cap=cap)
    P = product_set(tt, sets)
    ctx = OrderedResources.wrap(base)
    notes = []
    if all(is_downward_closed(ctx, S) for S in sets):
        escape = down_escape(tt, P)
        if escape is not None:
            return Verdict(False, witness=('down', tt.names[escape[0]], tt.names[escape[1]]))
        notes.append('down')
    if all(is_upward_closed(ctx, S) for S in sets):
        escape = up_escape(tt, P)
        if escape is not None:
            return Verdict(False, witness=('up', tt.names[escape[0]], tt.names[escape[1]]))
        notes.append('up')
    return Verdict(True, note=','.join(notes) if notes else 'premise does not hold')


def product_factorization(tt, P):
    """Returns the factors [S_1, ..., S_k] when the tuple set P is their
       product, or None. The only candidate factors are the projections.
    """
    P = frozenset(P)
    factors = [frozenset(tt.tuples[p][i] for p in P) for i in range(tt.k)]
    if product_set(tt, factors) == P:
        return factors
    return None


def commuting_embedding(base, phi):
    """Returns the map r -> {(r, phi(r))} into the unconstrained
       2-distinguishability theory as an 'enh' mediating map.
       Raises UncertifiedMediatingMap when it is not order-preserving.
    """
    phi = _as_list(phi, len(base))
    tt = build_k_dist(base, 2)
    images = [(tt.index_of((r, phi[r])),) for r in range(len(base))]
    return MediatingMap(base, tt, images, ENH, name='commuting').certified()
