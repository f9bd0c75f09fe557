#!/usr/bin/env python3

# This file tests extended rationals, valuations and the yield/cost constructions

import unittest
from fractions import Fraction

from restheory import gen, log
from restheory.core import resource_order
from restheory.errors import (BadParameters, DNotDownwardClosed, FNotMonotoneOnDomain,
                              FormatError)
from restheory.monotones import (INF, NEG_INF, MonotoneFn, PartialValuation,
                                 cost_monotone, extension_coincidence_check, f_max,
                                 f_min, format_ext, is_monotone, is_monotone_on_domain,
                                 parse_ext, valuation_from_json, window_monotonicity_check,
                                 yield_monotone)

LABELS = ('e', 'a', 'b')


def tri_f():
    """f = 1 on a and 5 on b, undefined on e."""
    return PartialValuation.from_names(LABELS, {'a': '1', 'b': '5'})


class TestExtended(unittest.TestCase):

    def test_parse(self):
        self.assertEqual(parse_ext('1/2'), Fraction(1, 2))
        self.assertEqual(parse_ext(' -3 '), Fraction(-3))
        self.assertEqual(parse_ext(3), Fraction(3))
        self.assertEqual(parse_ext('inf'), INF)
        self.assertEqual(parse_ext('+Inf'), INF)
        self.assertEqual(parse_ext('-inf'), NEG_INF)

    def test_parse_errors(self):
        self.assertRaises(FormatError, parse_ext, 1.5)
        self.assertRaises(FormatError, parse_ext, True)
        self.assertRaises(FormatError, parse_ext, 'abc')
        self.assertRaises(FormatError, parse_ext, '1/0')
        with self.assertRaises(FormatError) as ctx:
            parse_ext(None, field='values["a"]')
        self.assertEqual(ctx.exception.field, 'values["a"]')

    def test_format(self):
        self.assertEqual(format_ext(Fraction(6, 4)), '3/2')
        self.assertEqual(format_ext(Fraction(2)), '2')
        self.assertEqual(format_ext(0), '0')
        self.assertEqual(format_ext(INF), 'inf')
        self.assertEqual(format_ext(NEG_INF), '-inf')

    def test_compare_with_infinities(self):
        self.assertLess(NEG_INF, Fraction(-100))
        self.assertLess(Fraction(10 ** 9), INF)


class TestPartialValuation(unittest.TestCase):

    def test_valuation(self):
        f = tri_f()
        self.assertEqual(f.domain, frozenset([1, 2]))
        self.assertEqual(f(2), 5)
        self.assertIn(1, f)
        self.assertNotIn(0, f)
        self.assertFalse(f.is_total())
        self.assertEqual(repr(f), 'PartialValuation(a=1, b=5)')
        self.assertEqual(f.restrict([2]).domain, frozenset([2]))
        self.assertEqual(f.to_json(), {'domain': ['a', 'b'],
                                       'values': {'a': '1', 'b': '5'}})

    def test_total(self):
        f = PartialValuation.total(LABELS, [0, 1, INF])
        self.assertTrue(f.is_total())
        self.assertEqual(f.as_list(), [0, 1, INF])
        self.assertRaises(BadParameters, PartialValuation, LABELS, {3: 0})

    def test_from_json(self):
        f = valuation_from_json({'domain': ['a', 'b'], 'values': {'a': '1', 'b': 5}},
                                LABELS)
        self.assertEqual(f.values, tri_f().values)
        g = valuation_from_json({'values': {'e': '-inf'}}, LABELS)
        self.assertEqual(g.domain, frozenset([0]))

    def assertFormatError(self, obj, field):
        with self.assertRaises(FormatError) as ctx:
            valuation_from_json(obj, LABELS)
        self.assertEqual(ctx.exception.field, field)

    def test_from_json_errors(self):
        self.assertFormatError([], '<root>')
        self.assertFormatError({'values': []}, 'values')
        self.assertFormatError({'domain': ['z'], 'values': {}}, 'domain[0]')
        self.assertFormatError({'domain': ['a'], 'values': {}}, 'domain[0]')
        self.assertFormatError({'domain': ['a'], 'values': {'a': 1, 'b': 2}},
                               'values["b"]')
        self.assertFormatError({'values': {'a': 0.5}}, 'values["a"]')

    def test_f_max_min(self):
        f = tri_f()
        self.assertEqual(f_max(f, [0, 1, 2]), 5)
        self.assertEqual(f_min(f, [0, 1, 2]), 1)
        self.assertEqual(f_max(f, [0]), NEG_INF)
        self.assertEqual(f_min(f, []), INF)


class TestIsMonotone(unittest.TestCase):

    def test_is_monotone(self):
        pre = resource_order(gen.tri())
        self.assertTrue(is_monotone([1, 0, 0], pre))
        verdict = is_monotone([0, 1, 0], pre)
        self.assertFalse(verdict)
        self.assertEqual(verdict.witness, ('e', 'a'))
        self.assertTrue(is_monotone(PartialValuation.total(LABELS, [INF, 1, NEG_INF]), pre))

    def test_on_domain(self):
        pre = resource_order(gen.tri())
        self.assertTrue(is_monotone_on_domain(tri_f(), pre))
        f = PartialValuation.from_names(LABELS, {'e': 0, 'a': 1})
        self.assertEqual(is_monotone_on_domain(f, pre).witness, ('e', 'a'))


class TestYieldCost(unittest.TestCase):

    def clear_log(self):
        self.log_lines = []

    def log(self, args):
        self.log_lines.append(' '.join([str(arg) for arg in args]))

    def tearDown(self):
        log.log_to_print()
        log.set_show(log.SHOW_NONE)

    def test_yield(self):
        m = yield_monotone(gen.tri(), tri_f())
        self.assertIsInstance(m, MonotoneFn)
        self.assertEqual(m.values, (1, 1, 5))
        self.assertTrue(m.checked)
        self.assertEqual(m(m.labels.index('b')), 5)
        self.assertEqual(m.to_json(), {
            'domain': ['e', 'a', 'b'],
            'values': {'e': '1', 'a': '1', 'b': '5'},
            'provenance': {'construction': 'yield', 'W': ['a', 'b'], 'D': 'free'},
            'monotone': {'holds': True},
        })

    def test_cost(self):
        m = cost_monotone(gen.tri(), tri_f())
        self.assertEqual(m.values, (INF, 1, 5))
        self.assertEqual(repr(m), 'MonotoneFn(cost: e=inf, a=1, b=5)')

    def test_relative_to_D(self):
        tri = gen.tri()
        m = yield_monotone(tri, tri_f(), D=[1])
        self.assertEqual(m.values, (1, 1, 5))
        self.assertEqual(m.provenance['D'], ['a'])
        empty = yield_monotone(tri, tri_f(), D=[])
        self.assertEqual(empty.values, (NEG_INF,) * 3)
        self.assertEqual(cost_monotone(tri, tri_f(), D=[]).values, (INF,) * 3)

    def test_D_must_be_downward_closed(self):
        with self.assertRaises(DNotDownwardClosed) as ctx:
            yield_monotone(gen.tri(), tri_f(), D=[0])
        self.assertEqual(ctx.exception.witness, ('e', 'a'))

    def test_bare_preorder(self):
        pre = resource_order(gen.tri())
        self.assertEqual(yield_monotone(pre, tri_f()).values, (1, 1, 5))
        self.assertRaises(BadParameters, yield_monotone, pre, tri_f(), [1])

    def test_summary_logging(self):
        self.clear_log()
        log.log_to_fn(self.log)
        log.set_show(log.SHOW_SUMMARY)
        cost_monotone(gen.tri(), tri_f())
        self.assertEqual(self.log_lines, ['cost: e=inf a=1 b=5'])

    def test_unchecked(self):
        self.assertIsNone(yield_monotone(gen.tri(), tri_f(), check=False).checked)

    def test_extension_coincidence(self):
        self.assertTrue(extension_coincidence_check(gen.tri(), tri_f()))
        f = PartialValuation.from_names(LABELS, {'e': 0, 'a': 1})
        self.assertRaises(FNotMonotoneOnDomain, extension_coincidence_check, gen.tri(), f)

    def test_window_monotonicity(self):
        tri = gen.tri()
        fW = PartialValuation.from_names(LABELS, {'a': 1})
        self.assertTrue(window_monotonicity_check(tri, fW, tri_f()))
        self.assertRaises(BadParameters, window_monotonicity_check, tri, tri_f(), fW)


if __name__ == '__main__':
    unittest.main()
