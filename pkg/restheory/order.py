"""Closures, downward and upward closed sets, D-image maps, order
   preservation checks, and the quotient machinery for order-preserving
   maps between finite preorders.
"""

from collections import deque

from restheory import config
from restheory.core import ResourceTheory, resource_order, all_subsets, subset_label
from restheory.errors import BadParameters, CarrierTooLarge, NotOrderPreserving
from restheory.preorder import FinitePreorder
from restheory.verdict import Verdict


class OrderedResources:
    """A carrier with a preorder, backed either by a full ResourceTheory or
       by a bare FinitePreorder.

       Constructions that only need the ordering (yield and cost relative to
       the free set, the informativeness machinery) accept either. D-image
       maps for other sets D need the theory.
    """

    def __init__(self, theory=None, preorder=None):
        if (theory is None) == (preorder is None):
            raise BadParameters('expecting exactly one of theory or preorder')
        self.theory = theory
        if theory is not None:
            preorder = resource_order(theory)
        self.preorder = preorder

    @staticmethod
    def wrap(obj):
        """Accepts a ResourceTheory, a FinitePreorder or an OrderedResources."""
        if isinstance(obj, OrderedResources):
            return obj
        if isinstance(obj, ResourceTheory):
            return OrderedResources(theory=obj)
        if isinstance(obj, FinitePreorder):
            return OrderedResources(preorder=obj)
        raise BadParameters('cannot order a {}'.format(type(obj).__name__))

    @property
    def theory_backed(self):
        return self.theory is not None

    @property
    def labels(self):
        return self.preorder.labels

    def __len__(self):
        return len(self.preorder)

    @property
    def carrier(self):
        return frozenset(range(len(self)))

    @property
    def free(self):
        return None if self.theory is None else self.theory.free

    def down(self, r):
        if self.theory is not None:
            return self.theory.free_image(r)
        return self.preorder.down(r)

    def up(self, r):
        return self.preorder.up(r)

    def geq(self, r, s):
        return self.preorder.geq(r, s)

    def label(self, S):
        return subset_label(self.labels, S)


def down_closure(ctx, S):
    """Returns the union of the principal downsets of the members of S."""
    ctx = OrderedResources.wrap(ctx)
    result = set()
    for s in S:
        result |= ctx.down(s)
    return frozenset(result)


def up_closure(ctx, S):
    ctx = OrderedResources.wrap(ctx)
    result = set()
    for s in S:
        result |= ctx.up(s)
    return frozenset(result)


def is_downward_closed(ctx, S):
    return down_closure(ctx, S) == frozenset(S)


def is_upward_closed(ctx, S):
    return up_closure(ctx, S) == frozenset(S)


def down_escape(ctx, S):
    """Returns (s, t) with s in S, s >= t and t outside S, the first such
       pair, or None if S is downward closed.
    """
    ctx = OrderedResources.wrap(ctx)
    S = frozenset(S)
    for s in sorted(S):
        outside = ctx.down(s) - S
        if outside:
            return (s, min(outside))
    return None


def up_escape(ctx, S):
    ctx = OrderedResources.wrap(ctx)
    S = frozenset(S)
    for s in sorted(S):
        outside = ctx.up(s) - S
        if outside:
            return (s, min(outside))
    return None


def d_image(theory, D, r):
    """Returns D (x) r."""
    return theory.combine_sets(D, (r,))


def d_preimage(theory, D, r):
    """Returns the resources s with r in D (x) s."""
    return frozenset(s for s in range(len(theory))
                     if r in theory.combine_sets(D, (s,)))


def d_image_of_set(theory, D, X):
    return theory.combine_sets(D, X)


def d_preimage_of_set(theory, D, X):
    result = set()
    for x in X:
        result |= d_preimage(theory, D, x)
    return frozenset(result)


def check_compose_images(theory, S, T):
    """Checks that the S-image map after the T-image map is the (S (x) T)-
       image map, and likewise for preimage maps, at every resource.
    """
    ST = theory.combine_sets(S, T)
    for r in range(len(theory)):
        if d_image_of_set(theory, S, d_image(theory, T, r)) != d_image(theory, ST, r):
            return Verdict(False, witness=('image', theory.names[r]))
    for r in range(len(theory)):
        if d_preimage_of_set(theory, S, d_preimage(theory, T, r)) != \
                d_preimage(theory, ST, r):
            return Verdict(False, witness=('preimage', theory.names[r]))
    return Verdict(True)


class MapBetweenCarriers:
    """A total map from a source carrier to a target carrier.

       images[i] is a target index, or a frozenset of target indices when
       set_valued is True.
    """

    def __init__(self, source_labels, target_labels, images, set_valued=False):
        self.source_labels = tuple(source_labels)
        self.target_labels = tuple(target_labels)
        self.set_valued = set_valued
        if len(images) != len(self.source_labels):
            raise BadParameters('map is not total: {} images for {} elements'.format(
                len(images), len(self.source_labels)))
        n = len(self.target_labels)
        if set_valued:
            self.images = tuple(frozenset(im) for im in images)
            bad = [im for im in self.images if any(not 0 <= q < n for q in im)]
        else:
            self.images = tuple(images)
            bad = [im for im in self.images if not 0 <= im < n]
        if bad:
            raise BadParameters('image outside the target carrier')

    def __call__(self, a):
        return self.images[a]

    def __len__(self):
        return len(self.images)

    @staticmethod
    def identity(labels):
        return MapBetweenCarriers(labels, labels, list(range(len(labels))))


def is_order_preserving(f, preA, preB):
    """Checks a1 >= a2 implies f(a1) >= f(a2). The witness is the first
       violating pair (a1, a2) as labels.
    """
    for a1 in range(len(preA)):
        for a2 in sorted(preA.down(a1)):
            if not preB.geq(f(a1), f(a2)):
                return Verdict(False, witness=(preA.labels[a1], preA.labels[a2]))
    return Verdict(True)


def kernel(f, preB):
    """Returns the classes of a ~ a' iff f(a) ~ f(a'), as sorted tuples of
       source indices.
    """
    classes = []
    seen = set()
    for a in range(len(f)):
        if a in seen:
            continue
        members = tuple(b for b in range(a, len(f))
                        if b not in seen and preB.equivalent(f(a), f(b)))
        seen.update(members)
        classes.append(members)
    return classes


def first_isomorphism_check(f, preA, preB):
    """Checks that A/~ is order isomorphic to the image of f in B/~.

       f must be order-preserving (NotOrderPreserving otherwise). The
       canonical map [a] -> [f(a)] is always well defined and bijective onto
       the image classes; it is an order isomorphism exactly when f also
       reflects the order, and then the kernel classes are the classes of
       mutual dominance in A.
    """
    preserving = is_order_preserving(f, preA, preB)
    if not preserving:
        raise NotOrderPreserving('map is not order-preserving',
                                 witness=preserving.witness)
    for a1 in range(len(preA)):
        for a2 in range(len(preA)):
            if preB.geq(f(a1), f(a2)) and not preA.geq(a1, a2):
                return Verdict(False, witness=(preA.labels[a1], preA.labels[a2]),
                               note='not order-reflecting')
    classes = kernel(f, preB)
    for members in classes:
        a = members[0]
        mutual = tuple(b for b in range(len(preA)) if preA.equivalent(a, b))
        if mutual != members:
            return Verdict(False, witness=tuple(preA.labels[b] for b in members),
                           note='kernel differs from mutual dominance')
    image_classes = kernel(MapBetweenCarriers.identity(preB.labels), preB)
    image = {f(a) for a in range(len(f))}
    used = [c for c in image_classes if any(b in image for b in c)]
    if len(used) != len(classes):
        return Verdict(False, note='class count mismatch')
    return Verdict(True, note='{} classes'.format(len(classes)))


def removing_arrows_check(pre, S, T):
    """Checks down(up(S) & down(T)) == down(up(S) & T) and the dual
       up(down(S) & up(T)) == up(down(S) & T).
    """
    S = frozenset(S)
    T = frozenset(T)
    upS = pre.up_closure(S)
    downS = pre.down_closure(S)
    if pre.down_closure(upS & pre.down_closure(T)) != pre.down_closure(upS & T):
        return Verdict(False, witness=('down-up-down', subset_label(pre.labels, S),
                                       subset_label(pre.labels, T)))
    if pre.up_closure(downS & pre.up_closure(T)) != pre.up_closure(downS & T):
        return Verdict(False, witness=('up-down-up', subset_label(pre.labels, S),
                                       subset_label(pre.labels, T)))
    return Verdict(True)


INCLUSION = 'inclusion'                 # S >= T iff S contains T
REVERSE_INCLUSION = 'reverse-inclusion' # S >= T iff S is contained in T


def family_preorder(labels, family, kind=INCLUSION):
    """Builds the preorder on a list of sets ordered by inclusion or by
       reverse inclusion. Element labels are the set labels.
    """
    family = [frozenset(S) for S in family]
    if kind == INCLUSION:
        geq = lambda a, b: family[a] >= family[b]
    elif kind == REVERSE_INCLUSION:
        geq = lambda a, b: family[a] <= family[b]
    else:
        raise BadParameters("unknown set order '{}'".format(kind))
    n = len(family)
    down = [[b for b in range(n) if geq(a, b)] for a in range(n)]
    return FinitePreorder([subset_label(labels, S) for S in family], down)


def _closed_sets(ctx, principal, cap, count_cap):
    ctx = OrderedResources.wrap(ctx)
    n = len(ctx)
    cap = config.CLOSED_SET_CARRIER_CAP if cap is None else cap
    count_cap = config.CLOSED_SET_COUNT_CAP if count_cap is None else count_cap
    if n > cap:
        raise CarrierTooLarge('{} resources exceed the cap of {}'.format(n, cap))
    # Every closed set is a union of principal closed sets.
    empty = frozenset()
    found = {empty}
    queue = deque([empty])
    while queue:
        S = queue.popleft()
        for r in range(n):
            if r in S:
                continue
            T = S | principal(ctx, r)
            if T not in found:
                if len(found) >= count_cap:
                    raise CarrierTooLarge('more than {} closed sets'.format(count_cap))
                found.add(T)
                queue.append(T)
    return sorted(found, key=lambda S: (len(S), sorted(S)))


def downward_closed_sets(ctx, cap=None, count_cap=None):
    """Enumerates DC(R), smallest sets first."""
    return _closed_sets(ctx, lambda c, r: c.down(r), cap, count_cap)


def upward_closed_sets(ctx, cap=None, count_cap=None):
    """Enumerates UC(R), smallest sets first."""
    return _closed_sets(ctx, lambda c, r: c.up(r), cap, count_cap)


def closure_map(ctx, closure, family):
    """Returns the map P(R) -> family sending S (bitmask order) to the index
       of closure(S) in family.
    """
    ctx = OrderedResources.wrap(ctx)
    index = {S: i for i, S in enumerate(family)}
    images = [index[closure(ctx, S)] for S in all_subsets(len(ctx))]
    return MapBetweenCarriers([ctx.label(S) for S in all_subsets(len(ctx))],
                              [ctx.label(S) for S in family], images)
