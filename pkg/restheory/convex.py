"""Convex resource theories over exact rational points, the convex
   alignment, and the weight and robustness family of monotones built from
   it.

   The convex alignment cva(r, s, t) is the least lambda in [0, 1] with
   r = lambda * s + (1 - lambda) * t, and 1 when there is none. It never
   increases when the same resource is combined into all three arguments,
   so infima of it over products of downward closed sets are monotones.
"""

import itertools
from fractions import Fraction

from restheory.core import ResourceTheory, resource_order, theory_from_json, theory_to_json
from restheory.errors import (AxisWindowMismatch, BadParameters, DimensionMismatch,
                              FormatError, NotMonotone, SNotDownwardClosed)
from restheory.log import log, showing, SHOW_SUMMARY
from restheory.monotones import INF, MonotoneFn, format_ext, is_monotone, parse_ext
from restheory.order import down_escape
from restheory.verdict import Verdict

ZERO = Fraction(0)
ONE = Fraction(1)


def as_vector(coords):
    return tuple(Fraction(c) for c in coords)


def _dimension(*vectors):
    dims = {len(v) for v in vectors}
    if len(dims) != 1:
        raise DimensionMismatch('vectors of dimensions {}'.format(sorted(dims)))
    return dims.pop()


def mixing_weight(r, s, t):
    """Returns the least lambda in [0, 1] with r = lambda s + (1 - lambda) t,
       or None if there is none.
    """
    _dimension(r, s, t)
    if s == t:
        return ZERO if r == t else None
    weight = None
    for ri, si, ti in zip(r, s, t):
        if si == ti:
            if ri != ti:
                return None
            continue
        lam = (ri - ti) / (si - ti)
        if weight is None:
            weight = lam
        elif lam != weight:
            return None
    if ZERO <= weight <= ONE:
        return weight
    return None


def cva(r, s, t):
    """The convex alignment of r with respect to s and t."""
    weight = mixing_weight(r, s, t)
    return ONE if weight is None else weight


def cva_oracle(r, s, t):
    """Computes cva by solving each coordinate equation on its own and
       intersecting the solution sets with [0, 1].
    """
    _dimension(r, s, t)
    solutions = None            # None stands for all of [0, 1]
    for ri, si, ti in zip(r, s, t):
        if si == ti:
            coord = None if ri == ti else set()
        else:
            lam = (ri - ti) / (si - ti)
            coord = {lam} if ZERO <= lam <= ONE else set()
        if coord is None:
            continue
        solutions = coord if solutions is None else solutions & coord
    if solutions is None:
        return ZERO
    return min(solutions) if solutions else ONE


class ConvexTheory(ResourceTheory):
    """A resource theory whose resources are rational points and whose
       combination is singleton-valued and bilinear. check_bilinear=False
       skips the bilinearity check, for building counterexamples.
    """

    def __init__(self, names, points, table, free, neutral, check_bilinear=True):
        ResourceTheory.__init__(self, names, table, free, neutral)
        self.points = tuple(as_vector(p) for p in points)
        if len(self.points) != len(self.names):
            raise BadParameters('expecting one point per resource')
        self.dimension = _dimension(*self.points) if self.points else 0
        pair = self.is_deterministic()
        if pair is not None:
            raise BadParameters('convex theories need singleton combinations; '
                                '{} (x) {} is not'.format(self.names[pair[0]],
                                                          self.names[pair[1]]))
        if check_bilinear:
            verdict = bilinearity_check(self)
            if not verdict:
                raise BadParameters('combination is not bilinear', witness=verdict.witness)

    def point(self, r):
        return self.points[r]

    def product(self, r, s):
        """Returns the index of the single resource in r (x) s."""
        return next(iter(self.combine(r, s)))

    def replace(self, free=None, neutral=None, table=None, names=None):
        return ConvexTheory(self.names if names is None else names, self.points,
                            self.table if table is None else table,
                            self.free if free is None else free,
                            self.neutral if neutral is None else neutral)

    @staticmethod
    def from_points(names, points, combine_fn, free, neutral, check_bilinear=True):
        """Builds the table from combine_fn(p, q) -> point. The carrier must be
           closed under it. free and neutral are lists of names.
        """
        points = [as_vector(p) for p in points]
        index = {p: i for i, p in enumerate(points)}
        table = {}
        for i, j in itertools.combinations_with_replacement(range(len(points)), 2):
            p = as_vector(combine_fn(points[i], points[j]))
            if p not in index:
                raise BadParameters('{} (x) {} leaves the carrier'.format(names[i], names[j]))
            table[(i, j)] = (index[p],)
        by_name = {name: i for i, name in enumerate(names)}
        return ConvexTheory(names, points, table, [by_name[n] for n in free],
                            [by_name[n] for n in neutral], check_bilinear)


def convex_from_json(obj):
    """Parses the theory file format extended with
       "points": {"name": ["p/q", ...]}.
    """
    theory = theory_from_json(obj)
    points = obj.get('points')
    if not isinstance(points, dict):
        raise FormatError('expecting an object', field='points')
    vectors = []
    for name in theory.names:
        field = 'points["{}"]'.format(name)
        if name not in points or not isinstance(points[name], list):
            raise FormatError('expecting a list of coordinates', field=field)
        coords = [parse_ext(c, field) for c in points[name]]
        if any(c in (INF, -INF) for c in coords):
            raise FormatError('coordinates must be finite', field=field)
        vectors.append(coords)
    try:
        return ConvexTheory(theory.names, vectors, theory.table, theory.free, theory.neutral)
    except DimensionMismatch as err:
        raise FormatError(str(err), field='points') from err


def convex_to_json(ct):
    result = theory_to_json(ct)
    result['points'] = {name: [format_ext(c) for c in p]
                        for name, p in zip(ct.names, ct.points)}
    return result


def _combined(ct, u, *resources):
    return tuple(ct.point(ct.product(x, u)) for x in resources)


def bilinearity_check(ct):
    """Checks r (x) u = lambda (s (x) u) + (1 - lambda)(t (x) u) for every
       triple of the carrier with r = lambda s + (1 - lambda) t, and every u.
       Only collinear triples inside the carrier are observable.
    """
    n = len(ct)
    for r, s, t in itertools.product(range(n), repeat=3):
        lam = mixing_weight(ct.point(r), ct.point(s), ct.point(t))
        if lam is None:
            continue
        for u in range(n):
            ru, su, tu = _combined(ct, u, r, s, t)
            mixed = tuple(lam * a + (1 - lam) * b for a, b in zip(su, tu))
            if ru != mixed:
                return Verdict(False, witness=tuple(ct.names[x] for x in (r, s, t, u)))
    return Verdict(True)


def cva_contraction_check(ct):
    """Checks cva(r, s, t) >= cva(r (x) u, s (x) u, t (x) u) for all r, s, t, u."""
    n = len(ct)
    for r, s, t in itertools.product(range(n), repeat=3):
        before = cva(ct.point(r), ct.point(s), ct.point(t))
        for u in range(n):
            after = cva(*_combined(ct, u, r, s, t))
            if before < after:
                return Verdict(False, witness=tuple(ct.names[x] for x in (r, s, t, u)))
    return Verdict(True)


CARRIER = 'R'
FREE = 'free'


def _window(ct, S):
    if S == CARRIER:
        return ct.carrier
    if S == FREE:
        return ct.free
    return frozenset(S)


def cva_values(ct, axis, S1, S2, S3):
    """Returns M(x) = inf cva(y1, y2, y3) over (y1, y2, y3) in S1 x S2 x S3
       with y_axis = x, for every resource x. S1..S3 are sets of indices or
       'R' / 'free'.
    """
    windows = [_window(ct, S) for S in (S1, S2, S3)]
    if not 1 <= axis <= 3:
        raise BadParameters('axis must be 1, 2 or 3')
    values = []
    for x in range(len(ct)):
        best = INF
        choices = [sorted(w) for w in windows]
        choices[axis - 1] = [x]
        for y in itertools.product(*choices):
            value = cva(*(ct.point(i) for i in y))
            if value < best:
                best = value
        values.append(best)
    return values


def cva_monotone(ct, axis, S1, S2, S3, provenance=None):
    """The cva-min construction with window S1 x S2 x S3. S_axis must be the
       whole carrier and every S_j downward closed.
    """
    windows = [_window(ct, S) for S in (S1, S2, S3)]
    if not 1 <= axis <= 3:
        raise BadParameters('axis must be 1, 2 or 3')
    if windows[axis - 1] != ct.carrier:
        raise AxisWindowMismatch('S{} must be the whole carrier'.format(axis))
    for j, S in enumerate(windows):
        escape = down_escape(ct, S)
        if escape is not None:
            raise SNotDownwardClosed('S{} is not downward closed'.format(j + 1),
                                     witness=(ct.names[escape[0]], ct.names[escape[1]]))
    values = cva_values(ct, axis, *windows)
    checked = is_monotone(values, resource_order(ct))
    if provenance is None:
        provenance = {
            'construction': 'convex',
            'axis': axis,
            'S': [S if S in (CARRIER, FREE) else ct.set_names(S) for S in (S1, S2, S3)],
        }
    if not checked:
        raise NotMonotone('cva construction is not monotone', witness=checked.witness)
    if showing(SHOW_SUMMARY):
        log('{}: {}'.format(provenance.get('kind', 'cva'), ' '.join(
            '{}={}'.format(l, format_ext(v)) for l, v in zip(ct.names, values))))
    return MonotoneFn(ct.names, values, provenance, checked)


# kind -> (axis, S1, S2, S3)
NAMED = {
    'weight':           (1, CARRIER, CARRIER, FREE),
    'robustness':       (3, FREE, CARRIER, CARRIER),
    'free-robustness':  (3, FREE, FREE, CARRIER),
    'non-convexity':    (1, CARRIER, FREE, FREE),
}


def named_monotone(ct, kind):
    if kind not in NAMED:
        raise BadParameters("unknown convex monotone '{}'".format(kind))
    axis, S1, S2, S3 = NAMED[kind]
    return cva_monotone(ct, axis, S1, S2, S3,
                        provenance={'construction': 'convex', 'kind': kind})


def _pointwise(ct, kind, r):
    axis, S1, S2, S3 = NAMED[kind]
    return cva_values(ct, axis, S1, S2, S3)[r]


def weight(ct, r):
    """inf cva(r, s, t) over s in R and free t."""
    return _pointwise(ct, 'weight', r)


def robustness(ct, t):
    """inf cva(r, s, t) over free r and s in R."""
    return _pointwise(ct, 'robustness', t)


def free_robustness(ct, t):
    return _pointwise(ct, 'free-robustness', t)


def non_convexity(ct, r):
    """inf cva(r, s, t) over free s and t: 0 on free resources, 1 outside
       the convex hull of the free set.
    """
    return _pointwise(ct, 'non-convexity', r)


class Construction:
    """One of the twelve cva-min constructions: the axis and, for the two
       other positions, whether the window is 'R' or 'free'.
    """

    def __init__(self, axis, windows, values):
        self.axis = axis
        self.windows = windows
        self.values = values

    @property
    def constant(self):
        return len(set(self.values)) <= 1

    def to_json(self):
        return {
            'axis': self.axis,
            'S': list(self.windows),
            'constant': self.constant,
            'values': [format_ext(v) for v in self.values],
        }


def classify_constructions(ct):
    """Computes all twelve constructions and returns them in order of
       axis, then windows with 'R' before 'free'.
    """
    result = []
    for axis in (1, 2, 3):
        for others in itertools.product((CARRIER, FREE), repeat=2):
            windows = list(others)
            windows.insert(axis - 1, CARRIER)
            values = cva_monotone(ct, axis, *windows).values
            result.append(Construction(axis, tuple(windows), values))
    if showing(SHOW_SUMMARY):
        log('classify_constructions: {} of {} constant'.format(
            sum(1 for c in result if c.constant), len(result)))
    return result


def classification_to_json(constructions):
    return {
        'constructions': [c.to_json() for c in constructions],
        'constant': sum(1 for c in constructions if c.constant),
    }
