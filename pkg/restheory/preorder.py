"""This module provides the FinitePreorder class, an explicit reflexive and
   transitive relation over a labelled finite carrier, along with the
   quotient, Hasse diagram and DOT emission helpers.

   Elements are referred to by their index into the label tuple. The
   relation is stored as one frozenset per element holding every element
   below it (a >= b is stored as b in down[a]).
"""

import networkx as nx
import pydot

from restheory.errors import NotAPreorder


class FinitePreorder:
    """A preorder on the elements 0..n-1, labelled by labels[i]."""

    def __init__(self, labels, down):
        self.labels = tuple(labels)
        self._down = tuple(frozenset(d) for d in down)
        if len(self._down) != len(self.labels):
            raise ValueError('Expecting {} down sets, got {}'.format(
                len(self.labels), len(self._down)))
        up = [set() for _ in self.labels]
        for a, below in enumerate(self._down):
            for b in below:
                up[b].add(a)
        self._up = tuple(frozenset(u) for u in up)
        self._index = {label: i for i, label in enumerate(self.labels)}

    def __len__(self):
        return len(self.labels)

    def __eq__(self, other):
        if not isinstance(other, FinitePreorder):
            return NotImplemented
        return self.labels == other.labels and self._down == other._down

    def __hash__(self):
        return hash((self.labels, self._down))

    def __repr__(self):
        return 'FinitePreorder({} elements, {} pairs)'.format(
            len(self), sum(len(d) for d in self._down))

    def index(self, label):
        """Returns the index of the element with the given label."""
        return self._index[label]

    def geq(self, a, b):
        """Returns True if a >= b."""
        return b in self._down[a]

    def equivalent(self, a, b):
        return b in self._down[a] and a in self._down[b]

    def down(self, a):
        """Returns the principal downset of a (everything a dominates)."""
        return self._down[a]

    def up(self, a):
        """Returns the principal upset of a (everything dominating a)."""
        return self._up[a]

    def down_closure(self, elements):
        result = set()
        for a in elements:
            result |= self._down[a]
        return frozenset(result)

    def up_closure(self, elements):
        result = set()
        for a in elements:
            result |= self._up[a]
        return frozenset(result)

    def pairs(self):
        """Returns every pair (a, b) with a >= b, in lexicographic order."""
        return [(a, b) for a in range(len(self)) for b in sorted(self._down[a])]

    def label_pairs(self):
        return [(self.labels[a], self.labels[b]) for a, b in self.pairs()]

    def check(self):
        """Raises NotAPreorder if the stored relation is not reflexive or
           not transitive. The witness is the first offending pair or triple.
        """
        for a in range(len(self)):
            if a not in self._down[a]:
                raise NotAPreorder('relation is not reflexive',
                                   witness=(self.labels[a], self.labels[a]))
        for a in range(len(self)):
            for b in sorted(self._down[a]):
                missing = self._down[b] - self._down[a]
                if missing:
                    c = min(missing)
                    raise NotAPreorder('relation is not transitive',
                                       witness=(self.labels[a], self.labels[b],
                                                self.labels[c]))
        return self

    def restrict(self, elements):
        """Returns the preorder induced on the given elements (kept in index
           order) together with the list mapping new indices to old ones.
        """
        keep = sorted(elements)
        new_index = {old: new for new, old in enumerate(keep)}
        down = [[new_index[b] for b in self._down[a] if b in new_index]
                for a in keep]
        return FinitePreorder([self.labels[a] for a in keep], down), keep

    def is_chain(self):
        """Returns the first incomparable pair, or None if the preorder is
           total.
        """
        for a in range(len(self)):
            for b in range(a + 1, len(self)):
                if not self.geq(a, b) and not self.geq(b, a):
                    return (a, b)
        return None

    def to_json(self):
        return {
            'elements': list(self.labels),
            'relation': [list(p) for p in self.label_pairs()],
        }

    @staticmethod
    def from_relation(labels, geq):
        """Builds a preorder from a predicate geq(a, b). The result is
           checked for reflexivity and transitivity.
        """
        labels = tuple(labels)
        n = len(labels)
        down = [[b for b in range(n) if geq(a, b)] for a in range(n)]
        return FinitePreorder(labels, down).check()

    @staticmethod
    def from_pairs(labels, pairs):
        """Builds the reflexive transitive closure of the generating pairs
           (a, b), each meaning a >= b. Pairs may use labels or indices.
        """
        labels = tuple(labels)
        index = {label: i for i, label in enumerate(labels)}
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(labels)))
        for a, b in pairs:
            graph.add_edge(index.get(a, a), index.get(b, b))
        closure = nx.transitive_closure(graph, reflexive=True)
        down = [set(closure.successors(a)) | {a} for a in range(len(labels))]
        return FinitePreorder(labels, down)

    @staticmethod
    def discrete(labels):
        return FinitePreorder(labels, [[a] for a in range(len(labels))])

    @staticmethod
    def chain(labels):
        """The total order labels[0] >= labels[1] >= ..."""
        n = len(labels)
        return FinitePreorder(labels, [range(a, n) for a in range(n)])


def _graph(pre):
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(pre)))
    graph.add_edges_from(pre.pairs())
    return graph


def quotient(pre):
    """Computes the quotient of a preorder by mutual dominance.

       Returns (classes, order) where classes is a list of tuples of
       element indices, sorted by smallest member, and order is the
       partial order on the classes. Class labels join the member labels
       with '~'.
    """
    pre.check()
    classes = sorted(tuple(sorted(c))
                     for c in nx.strongly_connected_components(_graph(pre)))
    class_of = {}
    for i, members in enumerate(classes):
        for a in members:
            class_of[a] = i
    down = []
    for members in classes:
        down.append({class_of[b] for b in pre.down(members[0])})
    labels = ['~'.join(pre.labels[a] for a in members) for members in classes]
    return classes, FinitePreorder(labels, down)


def hasse(pre):
    """Returns (classes, order, covers) where covers lists the cover pairs
       (upper, lower) of the quotient partial order.
    """
    classes, order = quotient(pre)
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(order)))
    graph.add_edges_from((a, b) for a, b in order.pairs() if a != b)
    reduced = nx.transitive_reduction(graph)
    covers = sorted(reduced.edges())
    return classes, order, covers


def to_dot(pre, name='order'):
    """Returns the DOT text of the Hasse diagram of pre's quotient.

       Nodes are numbered n0, n1, ... in label order, and carry the class
       label. Edges point from the larger class to the one it covers.
    """
    _, order, covers = hasse(pre)
    by_label = sorted(range(len(order)), key=lambda i: order.labels[i])
    rank = {cls: i for i, cls in enumerate(by_label)}
    node_id = {cls: 'n{}'.format(i) for cls, i in rank.items()}
    graph = pydot.Dot(name, graph_type='digraph')
    for cls in by_label:
        graph.add_node(pydot.Node(node_id[cls],
                                  label='"{}"'.format(order.labels[cls])))
    for upper, lower in sorted(covers, key=lambda e: (rank[e[0]], rank[e[1]])):
        graph.add_edge(pydot.Edge(node_id[upper], node_id[lower]))
    return graph.to_string()
