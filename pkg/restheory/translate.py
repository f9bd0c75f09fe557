"""Enhancement and degradation orders on sets of resources, mediating maps
   into them, and pulling monotones back along mediating maps.

   S >=_enh T holds when every element of T is dominated by an element of
   S, and S >=_deg T when every element of S dominates an element of T.
   Both are computed through closures: down(S) contains down(T), and up(S)
   is contained in up(T).
"""

import itertools

from restheory import config
from restheory.core import all_subsets, require_valid
from restheory.errors import (BadParameters, CarrierTooLarge, ClosureMismatch,
                              FNotMonotoneOnDomain, FormatError, NotMonotone,
                              UncertifiedMediatingMap, WindowClosureMismatch)
from restheory.log import log, showing, SHOW_SUMMARY
from restheory.monotones import (MonotoneFn, PartialValuation, f_max, f_min,
                                 is_monotone, is_monotone_on_domain, cost_monotone)
from restheory.order import (OrderedResources, down_closure, up_closure,
                             down_escape, up_escape, d_preimage)
from restheory.preorder import FinitePreorder
from restheory.verdict import Verdict


class SubsetOrderKind:
    """The orders a set of subsets can carry."""

    ENHANCEMENT = 'enhancement'
    DEGRADATION = 'degradation'
    INCLUSION = 'inclusion'                 # S >= T iff S contains T
    REVERSE_INCLUSION = 'reverse-inclusion' # S >= T iff S is contained in T


def enh_order(ctx, S, T):
    """Returns True if S >=_enh T. S >=_enh {} always holds."""
    return down_closure(ctx, S) >= down_closure(ctx, T)


def deg_order(ctx, S, T):
    """Returns True if S >=_deg T. {} >=_deg T always holds."""
    return up_closure(ctx, S) <= up_closure(ctx, T)


def subset_geq(ctx, kind, S, T):
    if kind == SubsetOrderKind.ENHANCEMENT:
        return enh_order(ctx, S, T)
    if kind == SubsetOrderKind.DEGRADATION:
        return deg_order(ctx, S, T)
    if kind == SubsetOrderKind.INCLUSION:
        return frozenset(S) >= frozenset(T)
    if kind == SubsetOrderKind.REVERSE_INCLUSION:
        return frozenset(S) <= frozenset(T)
    raise BadParameters("unknown subset order '{}'".format(kind))


def enh_by_functions(ctx, S, T):
    """Brute force: is there a map e: T -> S with e(t) >= t for every t?"""
    ctx = OrderedResources.wrap(ctx)
    T = sorted(T)
    for choice in itertools.product(sorted(S), repeat=len(T)):
        if all(ctx.geq(s, t) for s, t in zip(choice, T)):
            return True
    return False


def deg_by_functions(ctx, S, T):
    """Brute force: is there a map d: S -> T with s >= d(s) for every s?"""
    ctx = OrderedResources.wrap(ctx)
    S = sorted(S)
    for choice in itertools.product(sorted(T), repeat=len(S)):
        if all(ctx.geq(s, t) for s, t in zip(S, choice)):
            return True
    return False


def powerset_preorder(ctx, kind, cap=None):
    """Returns the preorder on every subset of the carrier (bitmask order)
       under the given subset order.
    """
    ctx = OrderedResources.wrap(ctx)
    cap = config.POWERSET_CAP if cap is None else cap
    n = len(ctx)
    if (1 << n) > cap:
        raise CarrierTooLarge('2**{} subsets exceed the cap of {}'.format(n, cap))
    subsets = list(all_subsets(n))
    if kind == SubsetOrderKind.ENHANCEMENT:
        keys = [down_closure(ctx, S) for S in subsets]
        geq = lambda a, b: keys[a] >= keys[b]
    elif kind == SubsetOrderKind.DEGRADATION:
        keys = [up_closure(ctx, S) for S in subsets]
        geq = lambda a, b: keys[a] <= keys[b]
    elif kind in (SubsetOrderKind.INCLUSION, SubsetOrderKind.REVERSE_INCLUSION):
        geq = lambda a, b: subset_geq(ctx, kind, subsets[a], subsets[b])
    else:
        raise BadParameters("unknown subset order '{}'".format(kind))
    m = len(subsets)
    down = [[b for b in range(m) if geq(a, b)] for a in range(m)]
    return FinitePreorder([ctx.label(S) for S in subsets], down)


ENH = 'enh'
DEG = 'deg'


class MediatingMap:
    """A map F from the resources of source to sets of resources of target,
       meant to be order-preserving into (P(target), >=_kind).

       projection, when given, is a map G from target indices to source
       indices with F = G^-1, as used by the degradation conditions.
       certificate holds the Verdict kept by certified().
    """

    def __init__(self, source, target, images, kind, projection=None, name=None,
                 parent=None):
        if kind not in (ENH, DEG):
            raise BadParameters("mediating map kind must be 'enh' or 'deg'")
        if len(images) != len(source):
            raise BadParameters('mediating map is not total')
        self.source = source
        self.target = target
        self.images = tuple(frozenset(im) for im in images)
        for im in self.images:
            if any(not 0 <= q < len(target) for q in im):
                raise BadParameters('image outside the target carrier')
        self.kind = kind
        self.projection = None if projection is None else tuple(projection)
        self.name = name or 'map'
        self.parent = parent
        self.certificate = None

    def __call__(self, r):
        return self.images[r]

    def __len__(self):
        return len(self.images)

    def __repr__(self):
        return 'MediatingMap({}, kind={})'.format(self.name, self.kind)

    def image_of_set(self, S):
        result = set()
        for r in S:
            result |= self.images[r]
        return frozenset(result)

    def certified(self):
        """Certifies the map and keeps the Verdict as its certificate.
           Raises UncertifiedMediatingMap with the violating pair otherwise.
        """
        verdict = certify(self)
        if showing(SHOW_SUMMARY):
            log('{}: certified={} ({})'.format(self.name, verdict.holds, verdict.note))
        if not verdict:
            raise UncertifiedMediatingMap('{} is not order-preserving'.format(self.name),
                                          witness=verdict.witness)
        self.certificate = verdict
        return self

    @property
    def subset_kind(self):
        if self.kind == ENH:
            return SubsetOrderKind.ENHANCEMENT
        return SubsetOrderKind.DEGRADATION

    def to_json(self):
        return {
            'name': self.name,
            'kind': self.kind,
            'map': {self.source.names[r]: self.target.set_names(im)
                    for r, im in enumerate(self.images)},
        }


def copy_map(theory, n):
    """Copy_n(r) = r (x) r (x) ... (x) r (n factors)."""
    if n < 1:
        raise BadParameters('copy count must be at least 1')
    images = []
    for r in range(len(theory)):
        power = frozenset((r,))
        for _ in range(n - 1):
            power = theory.combine_sets(power, (r,))
        images.append(power)
    F = MediatingMap(theory, theory, images, ENH, name='copy{}'.format(n))
    return F.certified()


def aug_map(theory, C):
    """Aug_C(r) = C (x) r."""
    C = frozenset(C)
    images = [theory.combine_sets(C, (r,)) for r in range(len(theory))]
    return MediatingMap(theory, theory, images, ENH,
                        name='aug{}'.format(theory.set_label(C))).certified()


def u_image_map(theory, U):
    """The U-image map r -> U (x) r, order-preserving into >=_enh."""
    U = frozenset(U)
    images = [theory.combine_sets(U, (r,)) for r in range(len(theory))]
    return MediatingMap(theory, theory, images, ENH,
                        name='image{}'.format(theory.set_label(U)))


def u_preimage_map(theory, U):
    """The U-preimage map r -> {s | r in U (x) s}, order-preserving into
       >=_deg.
    """
    U = frozenset(U)
    images = [d_preimage(theory, U, r) for r in range(len(theory))]
    return MediatingMap(theory, theory, images, DEG,
                        name='preimage{}'.format(theory.set_label(U)))


def _subset_pairs(n, exhaustive=None):
    exhaustive = config.EXHAUSTIVE_SUBSET_CARRIER if exhaustive is None else exhaustive
    if n > exhaustive:
        raise CarrierTooLarge('subset pair checks need at most {} resources'.format(
            exhaustive))
    subsets = list(all_subsets(n))
    return itertools.product(subsets, repeat=2)


def u_image_isotone_check(theory, U):
    """Checks S >=_enh T implies U (x) S >=_enh U (x) T over all subsets."""
    ctx = OrderedResources.wrap(theory)
    for S, T in _subset_pairs(len(theory)):
        if enh_order(ctx, S, T) and not enh_order(
                ctx, theory.combine_sets(U, S), theory.combine_sets(U, T)):
            return Verdict(False, witness=(theory.set_label(S), theory.set_label(T)))
    return Verdict(True)


def u_preimage_isotone_check(theory, U):
    """Checks S >=_deg T implies up_U(S) >=_deg up_U(T) over all subsets."""
    ctx = OrderedResources.wrap(theory)
    pre = [d_preimage(theory, U, r) for r in range(len(theory))]

    def up_U(S):
        result = set()
        for s in S:
            result |= pre[s]
        return frozenset(result)

    for S, T in _subset_pairs(len(theory)):
        if deg_order(ctx, S, T) and not deg_order(ctx, up_U(S), up_U(T)):
            return Verdict(False, witness=(theory.set_label(S), theory.set_label(T)))
    return Verdict(True)


def image_map(fW, S):
    """Returns the values f takes on S & W."""
    return frozenset(fW(s) for s in S if s in fW)


def _values_enh(A, B):
    """Extended-rational sets: every value in B is at most some value in A."""
    return all(any(a >= b for a in A) for b in B)


def _values_deg(A, B):
    """Every value in A is at least some value in B."""
    return all(any(a >= b for b in B) for a in A)


def sup_isotone_check(ctx, fW):
    """Checks that S -> f(S & W) is order-preserving from >=_enh to >=_enh
       on the extended rationals. Needs W upward closed and f monotone on W.
    """
    ctx = OrderedResources.wrap(ctx)
    _require_partial_monotone(ctx, fW, upward=True)
    for S, T in _subset_pairs(len(ctx)):
        if enh_order(ctx, S, T):
            fS = image_map(fW, S)
            fT = image_map(fW, T)
            if not _values_enh(fS, fT):
                return Verdict(False, witness=(ctx.label(S), ctx.label(T)))
    return Verdict(True)


def sup_isotone_deg_check(ctx, fW):
    """Dual of sup_isotone_check for >=_deg and a downward closed W."""
    ctx = OrderedResources.wrap(ctx)
    _require_partial_monotone(ctx, fW, upward=False)
    for S, T in _subset_pairs(len(ctx)):
        if deg_order(ctx, S, T):
            fS = image_map(fW, S)
            fT = image_map(fW, T)
            if not _values_deg(fS, fT):
                return Verdict(False, witness=(ctx.label(S), ctx.label(T)))
    return Verdict(True)


def _require_partial_monotone(ctx, fW, upward):
    escape = up_escape(ctx, fW.domain) if upward else down_escape(ctx, fW.domain)
    if escape is not None:
        raise ClosureMismatch('domain W is not {} closed'.format(
            'upward' if upward else 'downward'),
            witness=(ctx.labels[escape[0]], ctx.labels[escape[1]]))
    on_domain = is_monotone_on_domain(fW, ctx.preorder)
    if not on_domain:
        raise FNotMonotoneOnDomain('root is not monotone on its domain',
                                   witness=on_domain.witness)


class MediatingReport:
    """Outcome of checking the sufficient conditions for a mediating map.

       conditions maps each condition name to its Verdict, and certified_by
       lists the condition sets that passed.
    """

    def __init__(self, conditions, certified_by):
        self.conditions = conditions
        self.certified_by = certified_by

    def __bool__(self):
        return len(self.certified_by) > 0

    def holds(self, name):
        return self.conditions[name].holds

    def to_json(self):
        return {
            'certified': bool(self),
            'certified_by': list(self.certified_by),
            'conditions': {name: v.to_json() for name, v in self.conditions.items()},
        }


def check_enh_mediating(F):
    """Checks the three sufficient condition sets for F to be
       order-preserving into (P(Q), >=_enh):

         down-commute:       F(R_free (x) r) within Q_free (x) F(r)
         star-morphism-0:    F(r (x) s) == F(r) (x) F(s)
         free-preserving-0:  F(R_free) within Q_free (x) F(neutral)
         star-morphism-1:    F(r (x) s) within F(r) (x) F(s)
         free-preserving-1:  F(R_free) within Q_free
    """
    R, Q = F.source, F.target
    names = R.names
    conditions = {}

    witness = None
    for r in range(len(R)):
        lhs = F.image_of_set(R.free_image(r))
        rhs = Q.combine_sets(Q.free, F(r))
        if not lhs <= rhs:
            witness = (names[r], Q.names[min(lhs - rhs)])
            break
    conditions['down-commute'] = Verdict(witness is None, witness)

    equal_witness = None
    within_witness = None
    for r in range(len(R)):
        for s in range(r, len(R)):
            lhs = F.image_of_set(R.combine(r, s))
            rhs = Q.combine_sets(F(r), F(s))
            if equal_witness is None and lhs != rhs:
                equal_witness = (names[r], names[s])
            if within_witness is None and not lhs <= rhs:
                within_witness = (names[r], names[s])
    conditions['star-morphism-0'] = Verdict(equal_witness is None, equal_witness)
    conditions['star-morphism-1'] = Verdict(within_witness is None, within_witness)

    free_image = F.image_of_set(R.free)
    target0 = Q.combine_sets(Q.free, F.image_of_set(R.neutral))
    missing = free_image - target0
    conditions['free-preserving-0'] = Verdict(
        not missing, Q.names[min(missing)] if missing else None)
    missing = free_image - Q.free
    conditions['free-preserving-1'] = Verdict(
        not missing, Q.names[min(missing)] if missing else None)

    certified_by = []
    if conditions['down-commute']:
        certified_by.append('down-commute')
    if conditions['star-morphism-0'] and conditions['free-preserving-0']:
        certified_by.append('star-morphism-0+free-preserving-0')
    if conditions['star-morphism-1'] and conditions['free-preserving-1']:
        certified_by.append('star-morphism-1+free-preserving-1')
    return MediatingReport(conditions, certified_by)


def check_deg_mediating(F, G=None):
    """Checks the sufficient conditions for F to be order-preserving into
       (P(Q), >=_deg) given G: Q -> R:

         preimage:          F(r) == G^-1(r)
         star-morphism-2:   G(p (x) q) contains G(p) (x) G(q)
         free-surjective:   G(Q_free) contains R_free
    """
    G = F.projection if G is None else tuple(G)
    if G is None:
        raise BadParameters('degradation conditions need a projection G')
    R, Q = F.source, F.target
    if len(G) != len(Q) or any(not 0 <= g < len(R) for g in G):
        raise BadParameters('G must map every target resource to a source resource')
    conditions = {}

    witness = None
    for r in range(len(R)):
        if F(r) != frozenset(q for q in range(len(Q)) if G[q] == r):
            witness = (R.names[r],)
            break
    conditions['preimage'] = Verdict(witness is None, witness)

    witness = None
    for p in range(len(Q)):
        for q in range(p, len(Q)):
            lhs = frozenset(G[x] for x in Q.combine(p, q))
            rhs = R.combine(G[p], G[q])
            if not rhs <= lhs:
                witness = (Q.names[p], Q.names[q])
                break
        if witness is not None:
            break
    conditions['star-morphism-2'] = Verdict(witness is None, witness)

    missing = R.free - frozenset(G[q] for q in Q.free)
    conditions['free-surjective'] = Verdict(
        not missing, R.names[min(missing)] if missing else None)

    certified_by = []
    if all(conditions.values()):
        certified_by.append('preimage+star-morphism-2+free-surjective')
    return MediatingReport(conditions, certified_by)


def direct_check(F, kind=None):
    """Checks r >= s implies F(r) >=_kind F(s) on every comparable pair."""
    kind = F.subset_kind if kind is None else kind
    src = OrderedResources.wrap(F.source)
    tgt = OrderedResources.wrap(F.target)
    for r in range(len(src)):
        for s in sorted(src.down(r)):
            if not subset_geq(tgt, kind, F(r), F(s)):
                return Verdict(False, witness=(src.labels[r], src.labels[s]))
    return Verdict(True, note='direct')


def certify(F):
    """Returns a Verdict saying whether F is order-preserving for its kind.
       The note names the condition set that certified it, or 'direct'
       when only the direct comparison of images succeeded.
    """
    if F.parent is not None:
        inherited = certify(F.parent)
        if inherited:
            return Verdict(True, note='restricted ' + inherited.note)
    if F.kind == ENH:
        report = check_enh_mediating(F)
    elif F.projection is not None:
        report = check_deg_mediating(F)
    else:
        report = None
    if report:
        return Verdict(True, note=report.certified_by[0])
    return direct_check(F)


def restrict_map(F, window):
    """Returns r -> F(r) & window. The window must be upward closed in the
       target for 'enh' maps and downward closed for 'deg' maps.
    """
    window = frozenset(window)
    tgt = OrderedResources.wrap(F.target)
    if F.kind == ENH:
        escape = up_escape(tgt, window)
        closed = 'upward'
    else:
        escape = down_escape(tgt, window)
        closed = 'downward'
    if escape is not None:
        raise WindowClosureMismatch('window is not {} closed'.format(closed),
                                    witness=(tgt.labels[escape[0]], tgt.labels[escape[1]]))
    images = [im & window for im in F.images]
    return MediatingMap(F.source, F.target, images, F.kind,
                        name='{}&{}'.format(F.name, F.target.set_label(window)),
                        parent=F)


MAX = 'max'
MIN = 'min'


def pull_back(F, root, mode, force=False, inclusion=False):
    """Returns the source monotone r -> f-max(F(r)) (mode 'max') or
       r -> f-min(F(r)) (mode 'min') for a root valuation on the target.

       By default F must be certified for >=_enh (max) or >=_deg (min), and
       the root must be monotone on a domain that is upward (max) or
       downward (min) closed. With inclusion set, the root may be any
       partial function and F must instead be order-preserving into P(Q)
       ordered by containment (max) or by inclusion (min). force skips the
       certification of F; the result is still checked for monotonicity.
    """
    if mode not in (MAX, MIN):
        raise BadParameters("mode must be 'max' or 'min'")
    tgt = OrderedResources.wrap(F.target)
    if inclusion:
        kind = SubsetOrderKind.INCLUSION if mode == MAX else SubsetOrderKind.REVERSE_INCLUSION
        verdict = direct_check(F, kind)
    else:
        expected = ENH if mode == MAX else DEG
        if F.kind != expected:
            raise BadParameters("mode '{}' needs a '{}' mediating map".format(mode, expected))
        _require_partial_monotone(tgt, root, upward=(mode == MAX))
        verdict = F.certificate if F.certificate is not None else certify(F)
    if not verdict:
        if not force:
            raise UncertifiedMediatingMap('{} is not certified'.format(F.name),
                                          witness=verdict.witness)
        log('pull_back: using uncertified map {} (forced)'.format(F.name))
    optimum = f_max if mode == MAX else f_min
    values = [optimum(root, F(r)) for r in range(len(F.source))]
    src = OrderedResources.wrap(F.source)
    checked = is_monotone(values, src.preorder)
    if not checked:
        raise NotMonotone('pull-back along {} is not monotone'.format(F.name),
                          witness=checked.witness)
    provenance = {
        'construction': 'pullback',
        'map': F.name,
        'mode': mode,
        'certified_by': verdict.note if verdict else 'forced',
        'W': [tgt.labels[i] for i in sorted(root.domain)],
    }
    if inclusion:
        provenance['inclusion'] = True
    return MonotoneFn(src.labels, values, provenance, checked)


def noncommuting_constructions(F, root):
    """Composes a cost construction with a min pull-back along F in both
       orders, for a total root valuation on the target:

         cost after pull-back:  r -> Cost of (s -> f-min(F(s))) at r
         pull-back after cost:  r -> f-min of Cost_f over F(r)

       Returns the two value tuples, which differ in general.
    """
    theory = F.source
    require_valid(theory)
    pulled = PartialValuation.total(theory.names,
                                    [f_min(root, F(r)) for r in range(len(theory))])
    cost_after = cost_monotone(theory, pulled, check=False).values
    target_cost = cost_monotone(F.target, root, check=False).as_valuation()
    after_cost = tuple(f_min(target_cost, F(r)) for r in range(len(theory)))
    return cost_after, after_cost


def noncommuting_constructions_fixture():
    """Two-distinguishability over the three element theory, F the preimage
       of the first projection and f(t) = 1 when the first component is b.
       The constructions disagree at b (1 against 0).
    """
    from restheory import dist, gen   # pylint: disable=import-outside-toplevel
    base = gen.builtin('TRI')
    F = dist.tuple_embedding(base, k=2, axis=1)
    b = base.index('b')
    root = PartialValuation.total(
        F.target.names, [1 if t[0] == b else 0 for t in F.target.tuples])
    return base, noncommuting_constructions(F, root)


def mediating_from_json(obj, source, target):
    """Parses {"kind": "enh"|"deg", "map": {"r": [targets...]}} against
       already loaded source and target theories. An optional "projection"
       object maps each target name to a source name.
    """
    if not isinstance(obj, dict):
        raise FormatError('expecting an object', field='<root>')
    kind = obj.get('kind')
    if kind not in (ENH, DEG):
        raise FormatError("expecting 'enh' or 'deg'", field='kind')
    mapping = obj.get('map')
    if not isinstance(mapping, dict):
        raise FormatError('expecting an object', field='map')
    images = []
    for r in source.names:
        if r not in mapping:
            raise FormatError("no image for '{}'".format(r), field='map')
        value = mapping[r]
        if not isinstance(value, list) or any(not target.has_name(q) for q in value):
            raise FormatError('expecting a list of target names', field='map["{}"]'.format(r))
        images.append(target.parse_set(value))
    projection = None
    if 'projection' in obj:
        proj = obj['projection']
        if not isinstance(proj, dict) or any(q not in proj for q in target.names) or \
                any(not source.has_name(proj[q]) for q in target.names):
            raise FormatError('expecting a target -> source name object', field='projection')
        projection = [source.index(proj[q]) for q in target.names]
    return MediatingMap(source, target, images, kind, projection,
                        name=obj.get('name', 'map'))

