#!/usr/bin/env python3

# This file tests closures, D-image maps and the order-map helpers

import unittest

from restheory import gen, inform
from restheory.errors import BadParameters, CarrierTooLarge, NotOrderPreserving
from restheory.order import (INCLUSION, REVERSE_INCLUSION, MapBetweenCarriers,
                             OrderedResources, check_compose_images, closure_map,
                             d_image, d_preimage, down_closure, down_escape,
                             downward_closed_sets, family_preorder, first_isomorphism_check,
                             is_downward_closed, is_order_preserving, is_upward_closed,
                             kernel, removing_arrows_check, up_closure, up_escape,
                             upward_closed_sets)
from restheory.preorder import FinitePreorder


class TestOrderedResources(unittest.TestCase):

    def test_wrap(self):
        tri = gen.tri()
        ctx = OrderedResources.wrap(tri)
        self.assertTrue(ctx.theory_backed)
        self.assertIs(OrderedResources.wrap(ctx), ctx)
        self.assertEqual(ctx.free, frozenset([0, 1]))
        self.assertEqual(ctx.label([0, 2]), '{e,b}')
        bare = OrderedResources.wrap(ctx.preorder)
        self.assertFalse(bare.theory_backed)
        self.assertIsNone(bare.free)
        self.assertEqual(bare.down(0), ctx.down(0))
        self.assertRaises(BadParameters, OrderedResources.wrap, 'TRI')
        self.assertRaises(BadParameters, OrderedResources)


class TestClosures(unittest.TestCase):

    def test_closures(self):
        tri = gen.tri()
        self.assertEqual(down_closure(tri, [0]), frozenset([0, 1]))
        self.assertEqual(up_closure(tri, [1]), frozenset([0, 1]))
        self.assertEqual(down_closure(tri, []), frozenset())
        self.assertTrue(is_downward_closed(tri, [1]))
        self.assertFalse(is_downward_closed(tri, [0]))
        self.assertTrue(is_upward_closed(tri, [0]))
        self.assertFalse(is_upward_closed(tri, [1]))

    def test_escapes(self):
        tri = gen.tri()
        self.assertEqual(down_escape(tri, [0, 2]), (0, 1))
        self.assertIsNone(down_escape(tri, [0, 1]))
        self.assertEqual(up_escape(tri, [1]), (1, 0))
        self.assertIsNone(up_escape(tri, [0, 1]))

    def test_d_image(self):
        tri = gen.tri()
        self.assertEqual(d_image(tri, [1], 0), frozenset([1]))
        self.assertEqual(d_preimage(tri, [1], 1), frozenset([0, 1]))
        self.assertEqual(d_preimage(tri, [1], 0), frozenset())

    def test_compose_images(self):
        for theory in (gen.tri(), gen.um1(), gen.p5()):
            n = len(theory)
            for S in ([0], [n - 1], list(range(n))):
                for T in ([], [1], [0, n - 1]):
                    self.assertTrue(check_compose_images(theory, S, T))

    def test_closed_sets(self):
        tri = gen.tri()
        self.assertEqual(downward_closed_sets(tri), [
            frozenset(), frozenset([1]), frozenset([2]), frozenset([0, 1]),
            frozenset([1, 2]), frozenset([0, 1, 2])])
        self.assertEqual(upward_closed_sets(tri), [
            frozenset(), frozenset([0]), frozenset([2]), frozenset([0, 1]),
            frozenset([0, 2]), frozenset([0, 1, 2])])
        self.assertRaises(CarrierTooLarge, downward_closed_sets, tri, cap=2)
        self.assertRaises(CarrierTooLarge, downward_closed_sets, tri, count_cap=3)

    def test_closure_map(self):
        tri = gen.tri()
        family = downward_closed_sets(tri)
        f = closure_map(tri, down_closure, family)
        self.assertEqual(f.images, (0, 3, 1, 3, 2, 5, 4, 5))
        self.assertEqual(f.source_labels[5], '{e,b}')
        self.assertEqual(f.target_labels[5], '{e,a,b}')


class TestOrderMaps(unittest.TestCase):

    def test_map_between_carriers(self):
        self.assertRaises(BadParameters, MapBetweenCarriers, 'ab', 'p', [0])
        self.assertRaises(BadParameters, MapBetweenCarriers, 'a', 'p', [1])
        f = MapBetweenCarriers('ab', 'pq', [[0, 1], []], set_valued=True)
        self.assertEqual(f(0), frozenset([0, 1]))
        self.assertEqual(len(MapBetweenCarriers.identity('abc')), 3)

    def test_is_order_preserving(self):
        chain = FinitePreorder.chain('ab')
        self.assertTrue(is_order_preserving(MapBetweenCarriers.identity('ab'), chain, chain))
        swap = MapBetweenCarriers('ab', 'ab', [1, 0])
        self.assertEqual(is_order_preserving(swap, chain, chain).witness, ('a', 'b'))

    def test_kernel(self):
        f = MapBetweenCarriers('abc', 'pq', [0, 1, 0])
        self.assertEqual(kernel(f, FinitePreorder.discrete('pq')), [(0, 2), (1,)])

    def test_first_isomorphism(self):
        chain = FinitePreorder.chain('ab')
        target = FinitePreorder.chain('pq')
        verdict = first_isomorphism_check(MapBetweenCarriers('ab', 'pq', [0, 1]),
                                          chain, target)
        self.assertTrue(verdict)
        self.assertEqual(verdict.note, '2 classes')

    def test_first_isomorphism_not_reflecting(self):
        verdict = first_isomorphism_check(MapBetweenCarriers('ab', 'pq', [0, 1]),
                                          FinitePreorder.discrete('ab'),
                                          FinitePreorder.chain('pq'))
        self.assertFalse(verdict)
        self.assertEqual(verdict.witness, ('a', 'b'))
        self.assertEqual(verdict.note, 'not order-reflecting')

    def test_first_isomorphism_needs_order_preserving(self):
        self.assertRaises(NotOrderPreserving, first_isomorphism_check,
                          MapBetweenCarriers('ab', 'pq', [0, 1]),
                          FinitePreorder.chain('ab'), FinitePreorder.discrete('pq'))

    def test_removing_arrows(self):
        pre = inform.counterexample_preorder()
        for S in ([0], [1, 2], [3], []):
            for T in ([1], [0, 3], [2, 3]):
                self.assertTrue(removing_arrows_check(pre, S, T))

    def test_family_preorder(self):
        pre = family_preorder(('e', 'a'), [[], [0], [0, 1]], INCLUSION)
        self.assertEqual(pre.labels, ('{}', '{e}', '{e,a}'))
        self.assertTrue(pre.geq(2, 0))
        self.assertFalse(pre.geq(0, 2))
        rev = family_preorder(('e', 'a'), [[], [0]], REVERSE_INCLUSION)
        self.assertTrue(rev.geq(0, 1))
        self.assertRaises(BadParameters, family_preorder, ('e',), [[]], 'xxx')


if __name__ == '__main__':
    unittest.main()
