#!/usr/bin/env python3

# This file tests Verdict and JSON conversion of witnesses

import unittest
from fractions import Fraction

from restheory.verdict import Verdict, jsonable


class TestVerdict(unittest.TestCase):

    def test_truth(self):
        self.assertTrue(Verdict(True))
        self.assertFalse(Verdict(0, witness=('a',)))
        self.assertEqual(Verdict(True), True)
        self.assertNotEqual(Verdict(False, witness='x'), Verdict(False, witness='y'))
        self.assertEqual(Verdict(True, note='direct'), Verdict(True, note='direct'))

    def test_to_json(self):
        self.assertEqual(Verdict(True).to_json(), {'holds': True})
        self.assertEqual(Verdict(False, witness=('e', 'a'), note='direct').to_json(),
                         {'holds': False, 'witness': ['e', 'a'], 'note': 'direct'})

    def test_jsonable(self):
        self.assertEqual(jsonable(frozenset(['b', 'a'])), ['a', 'b'])
        self.assertEqual(jsonable({1: (Fraction(1, 2),)}), {'1': ['1/2']})
        self.assertIsNone(jsonable(None))


if __name__ == '__main__':
    unittest.main()
