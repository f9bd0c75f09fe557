#!/usr/bin/env python3

# This file tests the convex alignment and the monotones built from it

import unittest
from fractions import Fraction

from restheory import gen, log
from restheory.convex import (FREE, NAMED, ConvexTheory, bilinearity_check,
                              classification_to_json, classify_constructions,
                              convex_from_json, convex_to_json, cva, cva_contraction_check,
                              cva_monotone, cva_oracle, free_robustness, mixing_weight,
                              named_monotone, non_convexity, robustness, weight)
from restheory.errors import (AxisWindowMismatch, BadParameters, DimensionMismatch,
                              FormatError, SNotDownwardClosed)

HALF = Fraction(1, 2)


def v(*coords):
    return tuple(Fraction(c) for c in coords)


def max_theory(check_bilinear=False):
    """Points 0, 1/2 and 1 combined by max: deterministic but not bilinear."""
    return ConvexTheory.from_points(['0', '1/2', '1'], [[0], [HALF], [1]],
                                    lambda p, q: tuple(max(a, b) for a, b in zip(p, q)),
                                    free=['0'], neutral=['0'], check_bilinear=check_bilinear)


class TestAlignment(unittest.TestCase):

    def test_cva(self):
        self.assertEqual(cva(v(HALF), v(1), v(0)), HALF)
        self.assertEqual(cva(v(0), v(1), v(0)), 0)
        self.assertEqual(cva(v(1), v(1), v(0)), 1)
        self.assertEqual(cva(v(2), v(1), v(0)), 1)
        self.assertEqual(cva(v(1, 2), v(1, 2), v(1, 2)), 0)
        self.assertEqual(cva(v(0, 2), v(1, 2), v(1, 2)), 1)
        self.assertEqual(cva(v(1, 0), v(1, 1), v(0, 0)), 1)
        self.assertEqual(cva(v('1/4', 3), v(1, 3), v(0, 3)), Fraction(1, 4))

    def test_mixing_weight(self):
        self.assertIsNone(mixing_weight(v(2), v(1), v(0)))
        self.assertEqual(mixing_weight(v(HALF, HALF), v(1, 0), v(0, 1)), HALF)
        self.assertRaises(DimensionMismatch, mixing_weight, v(1), v(1, 2), v(0, 0))

    def test_oracle_agrees(self):
        points = [v(a, b) for a in (0, HALF, 1) for b in (0, 1)]
        for r in points:
            for s in points:
                for t in points:
                    self.assertEqual(cva(r, s, t), cva_oracle(r, s, t))


class TestConvexTheory(unittest.TestCase):

    def test_cvx1(self):
        ct = gen.cvx1()
        self.assertEqual(ct.dimension, 1)
        half = ct.index('1/2')
        self.assertEqual(ct.point(ct.product(0, half)), v(HALF))
        self.assertEqual(ct.point(ct.product(0, 2)), v(0))
        self.assertEqual(ct.point(2), v(1))

    def test_not_deterministic(self):
        self.assertRaises(BadParameters, ConvexTheory, ['0', '1'], [[0], [1]],
                          {(0, 0): [0], (0, 1): [0, 1]}, [0], [0])

    def test_leaves_carrier(self):
        self.assertRaises(BadParameters, ConvexTheory.from_points, ['0', '1'], [[0], [1]],
                          lambda p, q: tuple(a + b for a, b in zip(p, q)), ['0'], ['0'])

    def test_checks(self):
        self.assertTrue(bilinearity_check(gen.cvx1()))
        self.assertTrue(cva_contraction_check(gen.cvx1()))
        verdict = bilinearity_check(max_theory())
        self.assertFalse(verdict)
        self.assertEqual(verdict.witness, ('1/2', '0', '1', '1/2'))
        verdict = cva_contraction_check(max_theory())
        self.assertFalse(verdict)
        self.assertEqual(verdict.witness, ('1/2', '0', '1', '1/2'))

    def test_not_bilinear(self):
        with self.assertRaises(BadParameters) as ctx:
            max_theory(check_bilinear=True)
        self.assertEqual(ctx.exception.witness, ('1/2', '0', '1', '1/2'))
        obj = convex_to_json(max_theory())
        with self.assertRaises(BadParameters) as ctx:
            convex_from_json(obj)
        self.assertEqual(ctx.exception.witness, ('1/2', '0', '1', '1/2'))

    def test_json(self):
        obj = convex_to_json(gen.cvx1())
        self.assertEqual(obj['points'], {'0': ['0'], '1/2': ['1/2'], '1': ['1']})
        self.assertEqual(obj['combine']['0,1'], ['0'])
        ct = convex_from_json(obj)
        self.assertEqual(ct.points, gen.cvx1().points)
        self.assertEqual(ct.table, gen.cvx1().table)

    def assertFormatError(self, points, field):
        obj = convex_to_json(gen.cvx1())
        if points is None:
            del obj['points']
        else:
            obj['points'] = points
        with self.assertRaises(FormatError) as ctx:
            convex_from_json(obj)
        self.assertEqual(ctx.exception.field, field)

    def test_format_errors(self):
        self.assertFormatError(None, 'points')
        self.assertFormatError({'0': ['0'], '1': ['1']}, 'points["1/2"]')
        self.assertFormatError({'0': ['0'], '1/2': ['inf'], '1': ['1']}, 'points["1/2"]')
        self.assertFormatError({'0': ['0'], '1/2': ['x'], '1': ['1']}, 'points["1/2"]')
        self.assertFormatError({'0': ['0'], '1/2': ['1/2', '0'], '1': ['1']}, 'points')


class TestConvexMonotones(unittest.TestCase):

    def clear_log(self):
        self.log_lines = []

    def log(self, args):
        self.log_lines.append(' '.join([str(arg) for arg in args]))

    def tearDown(self):
        log.log_to_print()
        log.set_show(log.SHOW_NONE)

    def test_pointwise(self):
        ct = gen.cvx1()
        half = ct.index('1/2')
        self.assertEqual(weight(ct, half), HALF)
        self.assertEqual(robustness(ct, half), 1)
        self.assertEqual(free_robustness(ct, half), 1)
        self.assertEqual(non_convexity(ct, half), HALF)
        for r in (0, 2):
            self.assertEqual(weight(ct, r), 0)
            self.assertEqual(non_convexity(ct, r), 0)

    def test_named(self):
        ct = gen.cvx1()
        self.clear_log()
        log.log_to_fn(self.log)
        log.set_show(log.SHOW_SUMMARY)
        m = named_monotone(ct, 'weight')
        self.assertEqual(m.values, (0, HALF, 0))
        self.assertEqual(m.provenance, {'construction': 'convex', 'kind': 'weight'})
        self.assertTrue(m.checked)
        self.assertEqual(self.log_lines, ['weight: 0=0 1/2=1/2 1=0'])
        self.assertEqual(named_monotone(ct, 'robustness').values, (0, 1, 0))
        self.assertEqual(sorted(NAMED), ['free-robustness', 'non-convexity',
                                         'robustness', 'weight'])
        self.assertRaises(BadParameters, named_monotone, ct, 'entropy')

    def test_windows(self):
        ct = gen.cvx1()
        m = cva_monotone(ct, 1, 'R', 'R', FREE)
        self.assertEqual(m.provenance, {'construction': 'convex', 'axis': 1,
                                        'S': ['R', 'R', 'free']})
        m = cva_monotone(ct, 3, [0, 2], 'R', 'R')
        self.assertEqual(m.provenance['S'], [['0', '1'], 'R', 'R'])
        self.assertEqual(m.values, (0, 1, 0))
        self.assertRaises(AxisWindowMismatch, cva_monotone, ct, 1, FREE, 'R', 'R')
        self.assertRaises(BadParameters, cva_monotone, ct, 4, 'R', 'R', 'R')
        with self.assertRaises(SNotDownwardClosed) as ctx:
            cva_monotone(ct, 1, 'R', [0], 'R')
        self.assertEqual(ctx.exception.witness, ('0', '1'))

    def test_classification(self):
        constructions = classify_constructions(gen.cvx1())
        self.assertEqual(len(constructions), 12)
        self.assertEqual([c.axis for c in constructions], [1] * 4 + [2] * 4 + [3] * 4)
        self.assertEqual(constructions[0].to_json(), {'axis': 1, 'S': ['R', 'R', 'R'],
                                                      'constant': True,
                                                      'values': ['0', '0', '0']})
        self.assertEqual(constructions[1].windows, ('R', 'R', 'free'))
        self.assertFalse(constructions[1].constant)
        self.assertEqual(constructions[4].windows, ('R', 'R', 'R'))
        self.assertEqual(constructions[11].windows, ('free', 'free', 'R'))
        self.assertEqual(classification_to_json(constructions)['constant'], 8)

    def test_family(self):
        for seed in range(5):
            ct = gen.convex_family(seed, dim=2)
            self.assertEqual(len(ct), 9)
            self.assertTrue(bilinearity_check(ct))
            self.assertTrue(cva_contraction_check(ct))
            for kind in NAMED:
                self.assertTrue(named_monotone(ct, kind).checked)
        self.assertRaises(BadParameters, gen.convex_family, 0, dim=4)


if __name__ == '__main__':
    unittest.main()
