"""Extended rational valuations, the f-max and f-min root monotones, and the
   generalized yield and cost constructions.

   Extended rationals are fractions.Fraction values, or the floats
   float('inf') and float('-inf') for the two infinities. Fraction compares
   correctly against both.
"""

from fractions import Fraction

from restheory.errors import (BadParameters, DNotDownwardClosed,
                              FNotMonotoneOnDomain, FormatError, NotMonotone)
from restheory.log import log, showing, SHOW_SUMMARY
from restheory.order import (OrderedResources, d_image, d_preimage, down_escape)
from restheory.verdict import Verdict

INF = float('inf')
NEG_INF = float('-inf')


def parse_ext(value, field='value'):
    """Parses "p/q", "n", "inf", "+inf", "-inf" or an int into an extended
       rational. Floats are rejected since they are not exact.
    """
    if isinstance(value, bool):
        raise FormatError('expecting a rational, got a boolean', field=field)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        text = value.strip().lower()
        if text in ('inf', '+inf'):
            return INF
        if text == '-inf':
            return NEG_INF
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            pass
        raise FormatError("invalid rational '{}'".format(value), field=field)
    if value in (INF, NEG_INF):
        return value
    raise FormatError('expecting a string "p/q", "inf" or "-inf"', field=field)


def format_ext(value):
    if value == INF:
        return 'inf'
    if value == NEG_INF:
        return '-inf'
    return str(Fraction(value))


class PartialValuation:
    """A partial function f_W from a labelled carrier to the extended
       rationals. values maps the indices of W to their values.
    """

    def __init__(self, labels, values):
        self.labels = tuple(labels)
        self.values = {}
        for i, v in values.items():
            if not 0 <= i < len(self.labels):
                raise BadParameters('valuation index {} out of range'.format(i))
            self.values[i] = v if v in (INF, NEG_INF) else Fraction(v)
        self.domain = frozenset(self.values)

    def __call__(self, i):
        return self.values[i]

    def __contains__(self, i):
        return i in self.values

    def __repr__(self):
        return 'PartialValuation({})'.format(', '.join(
            '{}={}'.format(self.labels[i], format_ext(v))
            for i, v in sorted(self.values.items())))

    @staticmethod
    def total(labels, values):
        """Builds a valuation defined everywhere from a sequence of values."""
        return PartialValuation(labels, dict(enumerate(values)))

    @staticmethod
    def from_names(labels, values):
        """Builds a valuation from a {label: value} dict."""
        index = {label: i for i, label in enumerate(labels)}
        return PartialValuation(labels, {index[k]: parse_ext(v) for k, v in values.items()})

    def restrict(self, W):
        return PartialValuation(self.labels, {i: v for i, v in self.values.items()
                                              if i in W})

    def is_total(self):
        return len(self.domain) == len(self.labels)

    def as_list(self):
        """Returns the values as a list indexed by element. Only valid when
           the valuation is total.
        """
        return [self.values[i] for i in range(len(self.labels))]

    def to_json(self):
        return {
            'domain': [self.labels[i] for i in sorted(self.domain)],
            'values': {self.labels[i]: format_ext(v) for i, v in self.values.items()},
        }


class MonotoneFn:
    """A total map carrier -> extended rationals with a description of how
       it was constructed.

       checked holds the Verdict of the monotonicity self-check, or None if
       it was not run.
    """

    def __init__(self, labels, values, provenance, checked=None):
        self.labels = tuple(labels)
        self.values = tuple(values)
        self.provenance = provenance
        self.checked = checked

    def __call__(self, i):
        return self.values[i]

    def __len__(self):
        return len(self.values)

    def __repr__(self):
        return 'MonotoneFn({}: {})'.format(
            self.provenance.get('construction', '?'),
            ', '.join('{}={}'.format(l, format_ext(v))
                      for l, v in zip(self.labels, self.values)))

    def as_valuation(self):
        return PartialValuation.total(self.labels, self.values)

    def to_json(self):
        result = {
            'domain': list(self.labels),
            'values': {l: format_ext(v) for l, v in zip(self.labels, self.values)},
            'provenance': self.provenance,
        }
        if self.checked is not None:
            result['monotone'] = self.checked.to_json()
        return result


def valuation_from_json(obj, labels):
    """Parses the valuation file format:

       {"domain": [...], "values": {"name": "p/q" | "inf" | "-inf"}}
    """
    if not isinstance(obj, dict) or 'values' not in obj:
        raise FormatError('expecting an object with "values"', field='<root>')
    index = {label: i for i, label in enumerate(labels)}
    values = obj['values']
    if not isinstance(values, dict):
        raise FormatError('expecting an object', field='values')
    domain = obj.get('domain', list(values))
    if not isinstance(domain, list):
        raise FormatError('expecting a list of names', field='domain')
    result = {}
    for i, name in enumerate(domain):
        field = 'domain[{}]'.format(i)
        if name not in index:
            raise FormatError("unknown element '{}'".format(name), field=field)
        if name not in values:
            raise FormatError("no value for '{}'".format(name), field=field)
    for name, value in values.items():
        field = 'values["{}"]'.format(name)
        if name not in index:
            raise FormatError("unknown element '{}'".format(name), field=field)
        if name not in domain:
            raise FormatError("'{}' is not in the domain".format(name), field=field)
        result[index[name]] = parse_ext(value, field)
    return PartialValuation(labels, result)


def f_max(fW, S):
    """Returns the supremum of f over S & W, with sup of nothing = -inf."""
    values = [fW(s) for s in S if s in fW.domain]
    return max(values) if values else NEG_INF


def f_min(fW, S):
    """Returns the infimum of f over S & W, with inf of nothing = +inf."""
    values = [fW(s) for s in S if s in fW.domain]
    return min(values) if values else INF


def is_monotone(values, pre):
    """Checks a >= b implies values[a] >= values[b]. values may be a
       sequence, a MonotoneFn or a total PartialValuation. The witness is the
       first violating pair (a, b) as labels.
    """
    if isinstance(values, PartialValuation):
        values = values.as_list()
    for a in range(len(pre)):
        for b in sorted(pre.down(a)):
            if values[a] < values[b]:
                return Verdict(False, witness=(pre.labels[a], pre.labels[b]))
    return Verdict(True)


def is_monotone_on_domain(fW, pre):
    """Checks that f_W is order-preserving on (W, >=)."""
    for a in sorted(fW.domain):
        for b in sorted(pre.down(a) & fW.domain):
            if fW(a) < fW(b):
                return Verdict(False, witness=(pre.labels[a], pre.labels[b]))
    return Verdict(True)


def _resolve_D(ctx, D):
    """Returns the set D to optimize over, or None to mean R_free on a
       preorder-backed context.
    """
    if D is None:
        return ctx.free
    D = frozenset(D)
    if not ctx.theory_backed:
        raise BadParameters('D-image maps for D other than the free set need '
                            'a resource theory, not a bare preorder')
    escape = down_escape(ctx, D)
    if escape is not None:
        s, t = escape
        raise DNotDownwardClosed('D is not downward closed',
                                 witness=(ctx.labels[s], ctx.labels[t]))
    return D


def _finish(ctx, values, provenance, check):
    checked = None
    if check:
        checked = is_monotone(values, ctx.preorder)
        if not checked:
            raise NotMonotone('{} output is not monotone'.format(
                provenance['construction']), witness=checked.witness)
    if showing(SHOW_SUMMARY):
        log('{}: {}'.format(provenance['construction'],
                            ' '.join('{}={}'.format(l, format_ext(v))
                                     for l, v in zip(ctx.labels, values))))
    return MonotoneFn(ctx.labels, values, provenance, checked)


def _provenance(ctx, construction, fW, D):
    result = {
        'construction': construction,
        'W': [ctx.labels[i] for i in sorted(fW.domain)],
    }
    if D is None:
        result['D'] = 'free'
    else:
        result['D'] = [ctx.labels[i] for i in sorted(D)]
    return result


def yield_monotone(ctx, fW, D=None, check=True):
    """Returns Yield(r) = sup { f(w) | w in D (x) r, w in W }.

       D defaults to the free set, and must be downward closed.
    """
    ctx = OrderedResources.wrap(ctx)
    D_set = _resolve_D(ctx, D)
    values = []
    for r in range(len(ctx)):
        if D is None:
            image = ctx.down(r)
        else:
            image = d_image(ctx.theory, D_set, r)
        values.append(f_max(fW, image))
    return _finish(ctx, values, _provenance(ctx, 'yield', fW, None if D is None else D_set),
                   check)


def cost_monotone(ctx, fW, D=None, check=True):
    """Returns Cost(r) = inf { f(w) | r in D (x) w, w in W }."""
    ctx = OrderedResources.wrap(ctx)
    D_set = _resolve_D(ctx, D)
    values = []
    for r in range(len(ctx)):
        if D is None:
            preimage = ctx.up(r)
        else:
            preimage = d_preimage(ctx.theory, D_set, r)
        values.append(f_min(fW, preimage))
    return _finish(ctx, values, _provenance(ctx, 'cost', fW, None if D is None else D_set),
                   check)


def extension_coincidence_check(ctx, fW):
    """Checks Yield(r) = f(r) = Cost(r) on every r in W, with D the free set.

       f_W must be monotone on its domain (FNotMonotoneOnDomain otherwise).
    """
    ctx = OrderedResources.wrap(ctx)
    on_domain = is_monotone_on_domain(fW, ctx.preorder)
    if not on_domain:
        raise FNotMonotoneOnDomain('f is not monotone on its domain',
                                   witness=on_domain.witness)
    yields = yield_monotone(ctx, fW)
    costs = cost_monotone(ctx, fW)
    for r in sorted(fW.domain):
        if not yields(r) == fW(r) == costs(r):
            return Verdict(False, witness=(ctx.labels[r], format_ext(yields(r)),
                                           format_ext(fW(r)), format_ext(costs(r))))
    return Verdict(True)


def window_monotonicity_check(ctx, fW, gV, D=None):
    """Checks that enlarging the domain never lowers the yield and never
       raises the cost. gV must extend fW (same values on W, W within V).
    """
    ctx = OrderedResources.wrap(ctx)
    for w in fW.domain:
        if w not in gV.domain or gV(w) != fW(w):
            raise BadParameters('second valuation does not extend the first')
    yf = yield_monotone(ctx, fW, D)
    yg = yield_monotone(ctx, gV, D)
    cf = cost_monotone(ctx, fW, D)
    cg = cost_monotone(ctx, gV, D)
    for r in range(len(ctx)):
        if yg(r) < yf(r):
            return Verdict(False, witness=('yield', ctx.labels[r]))
        if cg(r) > cf(r):
            return Verdict(False, witness=('cost', ctx.labels[r]))
    return Verdict(True)
