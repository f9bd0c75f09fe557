#!/usr/bin/env python3

# This file tests the k-distinguishability theories and the monotones built from contractions

import unittest

from restheory import gen, log
from restheory.core import validate
from restheory.errors import (BadParameters, BaseNotDeterministic, CarrierTooLarge,
                              DNotDownwardClosed, NotMonotone, UncertifiedInput,
                              UncertifiedMediatingMap, WdcNotDownwardClosed)
from restheory.dist import (build_k_dist, certify_commuting, certify_contraction,
                            commuting_embedding, commuting_map_check,
                            contraction_monotone, difference_indicator,
                            equality_indicator, is_k_contraction, min_distinguishability,
                            monotone_from_commuting, product_dc_check,
                            product_factorization, product_set, tuple_embedding)


def tri_contraction():
    base = gen.tri()
    tt = build_k_dist(base, 2)
    return base, tt, certify_contraction(difference_indicator(tt), tt)


class TestTupleTheory(unittest.TestCase):

    def test_build(self):
        base = gen.tri()
        tt = build_k_dist(base, 2)
        self.assertEqual(len(tt), 9)
        self.assertEqual(tt.names[:3], ('(e|e)', '(e|a)', '(e|b)'))
        self.assertEqual(tt.free, frozenset([0, 4, 8]))
        self.assertEqual(tt.neutral, frozenset([0]))
        ab = tt.index('(a|b)')
        be = tt.index('(b|e)')
        self.assertEqual(tt.combine(ab, be), frozenset([tt.index('(b|b)')]))
        self.assertEqual(tt.to_json()['tuples']['(a|b)'], ['a', 'b'])
        self.assertTrue(validate(tt))

    def test_constrained(self):
        tt = build_k_dist(gen.tri(), 2, constrained=True)
        self.assertEqual(tt.free, frozenset([0, 4]))
        self.assertEqual(tt.neutral, frozenset([0]))

    def test_bad_parameters(self):
        self.assertRaises(BadParameters, build_k_dist, gen.tri(), 1)
        self.assertRaises(CarrierTooLarge, build_k_dist, gen.tri(), 3, cap=20)
        with self.assertRaises(BaseNotDeterministic) as ctx:
            build_k_dist(gen.p5(), 2)
        self.assertEqual(ctx.exception.witness, ('r1', 's1'))

    def test_projection(self):
        tt = build_k_dist(gen.um1(), 2)
        self.assertEqual(tt.projection(2), [0, 1, 0, 1])
        self.assertRaises(BadParameters, tt.projection, 3)


class TestContractions(unittest.TestCase):

    def test_difference_indicator(self):
        for base in (gen.tri(), gen.um1(), gen.cvx1()):
            tt = build_k_dist(base, 2)
            self.assertTrue(is_k_contraction(difference_indicator(tt), tt))

    def test_equality_indicator(self):
        tt = build_k_dist(gen.um1(), 2)
        verdict = is_k_contraction(equality_indicator(tt), tt)
        self.assertFalse(verdict)
        self.assertEqual(verdict.witness, ('({}|{x})', '({x}|{x})'))
        self.assertFalse(certify_contraction(equality_indicator(tt), tt))

    def test_constrained_rejected(self):
        tt = build_k_dist(gen.tri(), 2, constrained=True)
        self.assertRaises(BadParameters, is_k_contraction, difference_indicator(tt), tt)


class TestMonotones(unittest.TestCase):

    def clear_log(self):
        self.log_lines = []

    def log(self, args):
        self.log_lines.append(' '.join([str(arg) for arg in args]))

    def tearDown(self):
        log.log_to_print()
        log.set_show(log.SHOW_NONE)

    def test_commuting_check(self):
        base = gen.tri()
        self.assertTrue(commuting_map_check(base, [0, 1, 2]))
        self.assertTrue(commuting_map_check(base, [1, 1, 2]))
        self.assertTrue(commuting_map_check(base, lambda r: 2))
        verdict = commuting_map_check(base, [0, 0, 0])
        self.assertFalse(verdict)
        self.assertEqual(verdict.witness, ('a', 'e'))
        self.assertRaises(BadParameters, commuting_map_check, base, [0, 1])

    def test_monotone_from_commuting(self):
        base, _, cert = tri_contraction()
        m = monotone_from_commuting(base, cert, certify_commuting(base, [1, 1, 2]))
        self.assertEqual(m.values, (1, 0, 0))
        self.assertEqual(m.provenance, {'construction': 'commuting',
                                        'phi': {'e': 'a', 'a': 'a', 'b': 'b'}})

    def test_uncertified_commuting(self):
        base, _, cert = tri_contraction()
        phi = certify_commuting(base, [0, 0, 0])
        with self.assertRaises(UncertifiedInput) as ctx:
            monotone_from_commuting(base, cert, phi)
        self.assertEqual(ctx.exception.witness, ('a', 'e'))
        self.clear_log()
        log.log_to_fn(self.log)
        with self.assertRaises(NotMonotone) as ctx:
            monotone_from_commuting(base, cert, phi, force=True)
        self.assertEqual(ctx.exception.witness, ('e', 'a'))
        self.assertEqual(self.log_lines, ['using a failed commuting certificate (forced)'])

    def test_wrong_certificate(self):
        base, _, cert = tri_contraction()
        phi = certify_commuting(base, [0, 1, 2])
        self.assertRaises(BadParameters, monotone_from_commuting, base, phi, cert)
        self.assertRaises(BadParameters, monotone_from_commuting, gen.tri(), cert, phi)

    def test_min_distinguishability(self):
        base, _, cert = tri_contraction()
        self.clear_log()
        log.log_to_fn(self.log)
        log.set_show(log.SHOW_SUMMARY)
        m = min_distinguishability(base, cert, [1])
        self.assertEqual(m.values, (1, 0, 1))
        self.assertEqual(m.provenance['R_dc'], ['a'])
        self.assertEqual(self.log_lines, ['min-distinguishability: e=1 a=0 b=1'])
        with self.assertRaises(DNotDownwardClosed) as ctx:
            min_distinguishability(base, cert, [0])
        self.assertEqual(ctx.exception.witness, ('e', 'a'))

    def test_min_distinguishability_uncertified(self):
        base = gen.um1()
        tt = build_k_dist(base, 2)
        cert = certify_contraction(equality_indicator(tt), tt)
        self.assertRaises(UncertifiedInput, min_distinguishability, base, cert, [0])

    def test_contraction_monotone(self):
        base, _, cert = tri_contraction()
        target = tuple_embedding(base, constrained=True).target
        W_dc = target.parse_set(['(e|b)', '(a|b)', '(b|b)'])
        m = contraction_monotone(base, cert, 1, W_dc)
        self.assertEqual(m.values, (1, 1, 0))
        self.assertEqual(m.provenance, {'construction': 'contraction', 'k': 2, 'axis': 1,
                                        'W_dc': ['(e|b)', '(a|b)', '(b|b)']})
        m = contraction_monotone(base, cert, 2, target.carrier)
        self.assertEqual(m.values, (0, 0, 0))

    def test_contraction_window(self):
        base, _, cert = tri_contraction()
        target = tuple_embedding(base, constrained=True).target
        with self.assertRaises(WdcNotDownwardClosed) as ctx:
            contraction_monotone(base, cert, 1, target.parse_set(['(e|b)']))
        self.assertEqual(ctx.exception.witness, ('(e|b)', '(a|b)'))
        self.assertRaises(BadParameters, contraction_monotone, gen.tri(), cert, 1,
                          target.carrier)


class TestProducts(unittest.TestCase):

    def test_product_dc(self):
        base = gen.tri()
        self.assertEqual(product_dc_check(base, [[1], [2]]).note, 'down')
        self.assertEqual(product_dc_check(base, [[0, 1], [2]]).note, 'down,up')
        self.assertEqual(product_dc_check(base, [[0], [2]]).note, 'up')
        self.assertEqual(product_dc_check(base, [[0], [1]]).note, 'premise does not hold')

    def test_factorization(self):
        tt = build_k_dist(gen.tri(), 2)
        P = product_set(tt, [[0, 1], [2]])
        self.assertEqual(tt.set_names(P), ['(e|b)', '(a|b)'])
        self.assertEqual(product_factorization(tt, P), [frozenset([0, 1]), frozenset([2])])
        self.assertIsNone(product_factorization(tt, [0, 4]))


class TestEmbeddings(unittest.TestCase):

    def test_tuple_embedding(self):
        E = tuple_embedding(gen.um1(), axis=2)
        self.assertEqual(E.name, 'E2')
        self.assertEqual(E.projection, (0, 1, 0, 1))
        self.assertEqual(E.to_json()['map'], {'{}': ['({}|{})', '({x}|{})'],
                                              '{x}': ['({}|{x})', '({x}|{x})']})

    def test_commuting_embedding(self):
        F = commuting_embedding(gen.tri(), [1, 1, 2])
        self.assertEqual(F.to_json()['map'], {'e': ['(e|a)'], 'a': ['(a|a)'],
                                              'b': ['(b|b)']})
        self.assertTrue(F.certificate)
        # e >= a but (e|b) does not reach (a|e)
        with self.assertRaises(UncertifiedMediatingMap) as ctx:
            commuting_embedding(gen.tri(), [2, 0, 2])
        self.assertEqual(ctx.exception.witness, ('e', 'a'))


if __name__ == '__main__':
    unittest.main()
