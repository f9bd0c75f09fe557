#!/usr/bin/env python3

# This file tests the text dumps

import unittest
from fractions import Fraction

from restheory import gen
from restheory.core import resource_order
from restheory.dump_table import dump_relation, dump_table, dump_values
from restheory.monotones import INF
from restheory.preorder import FinitePreorder

PREFIX = '    Prefix'

class TestDumpTable(unittest.TestCase):

  def clear_log(self):
    self.log_lines = []

  def log(self, str):
    self.log_lines.append(str)
    #print(str)

  def test_empty_relation(self):
    self.clear_log()
    dump_relation(FinitePreorder([], []), prefix=PREFIX, log=self.log)
    self.assertEqual(self.log_lines, [
      '    Prefix:No data'
    ])

  def test_relation(self):
    self.clear_log()
    dump_relation(resource_order(gen.tri()), prefix=PREFIX, log=self.log)
    self.assertEqual(self.log_lines, [
      '    Prefix:  e a b',
      '    Prefix:e 1 1 0',
      '    Prefix:a 0 1 0',
      '    Prefix:b 0 0 1'
    ])

  def test_relation_wide_labels(self):
    self.clear_log()
    dump_relation(resource_order(gen.um1()), log=self.log)
    self.assertEqual(self.log_lines, [
      '    {} {x}',
      '{}   1   0',
      '{x}  0   1'
    ])

  def test_values(self):
    self.clear_log()
    dump_values(['e', 'a', 'b'], [Fraction(1), Fraction(1, 2), INF], log=self.log)
    self.assertEqual(self.log_lines, [
      'e = 1',
      'a = 1/2',
      'b = inf'
    ])

  def test_partial_values(self):
    self.clear_log()
    dump_values(['{}', '{x}'], {1: Fraction(-3)}, prefix=PREFIX, log=self.log)
    self.assertEqual(self.log_lines, [
      '    Prefix:{x} = -3'
    ])

  def test_empty_values(self):
    self.clear_log()
    dump_values(['e'], {}, prefix=PREFIX, log=self.log)
    self.assertEqual(self.log_lines, [
      '    Prefix:No data'
    ])

  def test_table(self):
    self.clear_log()
    dump_table(gen.tri(), log=self.log)
    self.assertEqual(self.log_lines, [
      'free    = {e,a}',
      'neutral = {e}',
      'e (x) e = {e}',
      'e (x) a = {a}',
      'e (x) b = {b}',
      'a (x) a = {a}',
      'a (x) b = {b}',
      'b (x) b = {b}'
    ])

  def test_table_wide_names(self):
    self.clear_log()
    dump_table(gen.um1(), prefix=PREFIX, log=self.log)
    self.assertEqual(self.log_lines, [
      '    Prefix:free    = {{}}',
      '    Prefix:neutral = {{}}',
      '    Prefix: {} (x) {}  = {{}}',
      '    Prefix: {} (x) {x} = {{x}}',
      '    Prefix:{x} (x) {x} = {{x}}'
    ])

  def test_incompatible_pairs_are_skipped(self):
    self.clear_log()
    dump_table(gen.p5(), log=self.log)
    self.assertNotIn('r1 (x) s1 = {}', self.log_lines)
    self.assertIn('r1 (x) r2 = {r2}', self.log_lines)

if __name__ == '__main__':
    unittest.main()
