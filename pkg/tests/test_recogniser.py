"""
pomset-learner
Copyright (C) 2026 InkBridge Networks (legal@inkbridge.io)

pomset-learner © 2026 by InkBridge is licensed under CC BY-NC 4.0. To view a
copy of this license, visit https://creativecommons.org/licenses/by-nc/4.0/
"""
import dataclasses
import itertools
import random
import unittest

from pomset_learner import documents # pylint: disable=import-error
from pomset_learner.errors import AlphabetMismatch, FormatError, \
    InvalidBimonoid, UnknownLetter # pylint: disable=import-error
from pomset_learner.languages import LANGUAGES # pylint: disable=import-error
from pomset_learner.parsers.term import parse_context, parse_pomset # pylint: disable=import-error
from pomset_learner.pomset import Alphabet, HOLE, Op, enumerate_pomsets, \
    plug # pylint: disable=import-error
from pomset_learner.recogniser import PRODUCT_ACCEPTANCE, Bimonoid, \
    Recogniser, accepts, depth_analysis, equivalence, evaluate, \
    is_minimal, minimize, product, reachable, recogniser_from_dict, \
    recogniser_to_dict, require_axioms, validate_axioms # pylint: disable=import-error


def with_cell(bimonoid: Bimonoid, table: str, x: int, y: int,
              value: int) -> Bimonoid:
    """
    Copy of a bimonoid with one table cell overwritten
    """
    rows = [list(row) for row in getattr(bimonoid, table)]
    rows[x][y] = value
    return dataclasses.replace(bimonoid,
                               **{table: tuple(map(tuple, rows))})


def wrapped_contexts(alphabet: Alphabet, filler_nodes: int, rounds: int):
    """
    Contexts made by composing the hole with small pomsets, rounds times
    """
    fillers = [u for u in enumerate_pomsets(alphabet, filler_nodes)
               if u.nodes]
    found = {HOLE}
    frontier = [HOLE]
    for _ in range(rounds):
        frontier = [wrapped for c in frontier for w in fillers
                    for wrapped in (Op.SEQ.compose(w, c), Op.SEQ.compose(c, w),
                                    Op.PAR.compose(w, c))]
        found.update(frontier)
    return sorted(found, key=lambda c: c.order_key)


class TestAxioms(unittest.TestCase):
    """
    Contains test cases for bimonoid validation
    """

    @classmethod
    def setUpClass(cls):
        cls.loop = documents.load('loop')
        cls.nested = documents.load('nested')

    def test_samples_are_bimonoids(self):  # pylint: disable=missing-function-docstring
        for name in ('loop', 'loop_F1', 'nested', 'empty'):
            with self.subTest(name=name):
                report = validate_axioms(documents.load(name).bimonoid)
                self.assertTrue(report.ok)
                self.assertEqual(str(report), 'ok')

    def test_unit_row_mutations(self):  # pylint: disable=missing-function-docstring
        bimonoid = self.loop.bimonoid
        for y in range(bimonoid.size):
            for value in range(bimonoid.size):
                if value == y:
                    continue
                with self.subTest(y=y, value=value):
                    report = validate_axioms(
                        with_cell(bimonoid, 'seq_table', 0, y, value))
                    self.assertIn('seq-unit', report.laws)
                    report = validate_axioms(
                        with_cell(bimonoid, 'par_table', 0, y, value))
                    self.assertIn('par-unit', report.laws)

    def test_off_diagonal_par_mutations(self):  # pylint: disable=missing-function-docstring
        bimonoid = self.nested.bimonoid
        rng = random.Random(7)
        for _ in range(20):
            x, y = rng.sample(range(1, bimonoid.size), 2)
            value = rng.choice([v for v in range(bimonoid.size)
                                if v != bimonoid.par(x, y)])
            with self.subTest(x=x, y=y, value=value):
                report = validate_axioms(
                    with_cell(bimonoid, 'par_table', x, y, value))
                self.assertIn('par-commutativity', report.laws)

    def test_associativity_mutation(self):  # pylint: disable=missing-function-docstring
        # q1 . q1 = qbot is the recogniser of {1, a|b}
        report = validate_axioms(
            with_cell(self.loop.bimonoid, 'seq_table', 3, 3, 4))
        self.assertTrue(report.ok)

        # qa . qb = qa: (qa . qb) . qb = qa but qa . (qb . qb) = qbot
        broken = with_cell(self.loop.bimonoid, 'seq_table', 1, 2, 1)
        report = validate_axioms(broken)
        self.assertEqual(report.laws, {'seq-associativity'})
        self.assertIn('seq-associativity fails at', str(report))

    def test_shape(self):  # pylint: disable=missing-function-docstring
        bimonoid = dataclasses.replace(self.loop.bimonoid, unit=9)
        self.assertEqual(validate_axioms(bimonoid).laws, {'shape'})
        bimonoid = with_cell(self.loop.bimonoid, 'par_table', 2, 2, 5)
        self.assertEqual(validate_axioms(bimonoid).laws, {'shape'})

    def test_require_axioms(self):  # pylint: disable=missing-function-docstring
        broken = dataclasses.replace(
            self.loop, bimonoid=with_cell(self.loop.bimonoid,
                                          'par_table', 1, 2, 4))
        with self.assertRaises(InvalidBimonoid) as caught:
            require_axioms(broken)
        self.assertIn('par-commutativity', caught.exception.report.laws)


class TestEvaluation(unittest.TestCase):
    """
    Contains test cases for evaluation and reachability
    """

    @classmethod
    def setUpClass(cls):
        cls.loop = documents.load('loop')
        cls.nested = documents.load('nested')

    def test_evaluate(self):  # pylint: disable=missing-function-docstring
        loop = self.loop
        self.assertEqual(loop.name(evaluate(loop, parse_pomset('1'))), '1')
        self.assertEqual(loop.name(evaluate(loop, parse_pomset('a|b'))), 'q1')
        self.assertEqual(loop.name(evaluate(loop, parse_pomset('a.b'))),
                         'qbot')
        self.assertRaises(UnknownLetter, evaluate, loop, parse_pomset('c'))
        self.assertRaises(ValueError, evaluate, loop, parse_context('a|_'))

    def test_accepts_loop(self):  # pylint: disable=missing-function-docstring
        for text in ('1', 'a|b', '(a|b).(a|b)', '(a|b).(a|b).(a|b)'):
            with self.subTest(text=text):
                self.assertTrue(accepts(self.loop, parse_pomset(text)))
        for text in ('a', 'a.b', 'a|a', 'a|b|a', '(a|b).a'):
            with self.subTest(text=text):
                self.assertFalse(accepts(self.loop, parse_pomset(text)))

    def test_accepts_nested(self):  # pylint: disable=missing-function-docstring
        for text in ('b', 'a.(b|b)', 'a.(a.(b|b)|b)'):
            with self.subTest(text=text):
                self.assertTrue(accepts(self.nested, parse_pomset(text)))
        for text in ('1', 'a', 'a.b', 'b|b', 'a.(b|b|b)'):
            with self.subTest(text=text):
                self.assertFalse(accepts(self.nested, parse_pomset(text)))

    def test_reachable(self):  # pylint: disable=missing-function-docstring
        witnesses = {self.loop.name(m): str(u)
                     for m, u in reachable(self.loop).items()}
        self.assertEqual(witnesses, {'1': '1', 'qa': 'a', 'qb': 'b',
                                     'q1': 'a|b', 'qbot': 'a.a'})
        for m, u in reachable(self.nested).items():
            self.assertEqual(evaluate(self.nested, u), m)

    def test_witnesses_have_fewest_nodes(self):  # pylint: disable=missing-function-docstring
        targets = {
            'loop': self.loop,
            'nested': self.nested,
            'product': product(self.loop, self.nested,
                               PRODUCT_ACCEPTANCE['intersection']),
        }
        for name, target in targets.items():
            first = {}
            for u in enumerate_pomsets(target.alphabet, 5):
                first.setdefault(evaluate(target, u), u)
            for m, u in reachable(target).items():
                with self.subTest(name=name, element=target.name(m)):
                    self.assertEqual(evaluate(target, u), m)
                    if u.nodes <= 5:
                        self.assertEqual(u.nodes, first[m].nodes)
                    else:
                        self.assertNotIn(m, first)


class TestLaws(unittest.TestCase):
    """
    Contains test cases for the laws evaluation obeys on enumerated pomsets
    """

    @classmethod
    def setUpClass(cls):
        cls.samples = {name: documents.load(name)
                       for name in ('loop', 'nested')}

    def test_evaluation_is_a_homomorphism(self):  # pylint: disable=missing-function-docstring
        for name, target in self.samples.items():
            bimonoid = target.bimonoid
            values = {u: evaluate(target, u)
                      for u in enumerate_pomsets(target.alphabet, 4)}
            with self.subTest(name=name):
                for (u, x), (v, y) in itertools.product(values.items(),
                                                        repeat=2):
                    for op in Op:
                        self.assertEqual(
                            evaluate(target, op.compose(u, v)),
                            bimonoid.apply(op, x, y),
                            msg=f'{u} {op.name} {v}')

    def test_equal_values_agree_in_every_context(self):  # pylint: disable=missing-function-docstring
        for name, target in self.samples.items():
            predicate = LANGUAGES[name].predicate
            witnesses = reachable(target)
            contexts = wrapped_contexts(target.alphabet, 2, 2)
            for u in enumerate_pomsets(target.alphabet, 3):
                w = witnesses[evaluate(target, u)]
                if u == w:
                    continue
                with self.subTest(name=name, u=str(u), witness=str(w)):
                    for c in contexts:
                        self.assertEqual(predicate(plug(c, u)),
                                         predicate(plug(c, w)),
                                         msg=str(c))


class TestEquivalence(unittest.TestCase):
    """
    Contains test cases for equivalence, products and minimisation
    """

    @classmethod
    def setUpClass(cls):
        cls.loop = documents.load('loop')
        cls.loop_f1 = documents.load('loop_F1')
        cls.nested = documents.load('nested')
        cls.empty = documents.load('empty')

    def test_equivalence(self):  # pylint: disable=missing-function-docstring
        self.assertTrue(equivalence(self.loop, self.loop).equal)
        result = equivalence(self.loop, self.loop_f1)
        self.assertFalse(result.equal)
        self.assertEqual(str(result.counterexample), 'a|b')
        self.assertEqual(str(equivalence(self.loop, self.nested)
                             .counterexample), '1')
        self.assertRaises(AlphabetMismatch, equivalence, self.loop, self.empty)

    def test_counterexample_is_smallest(self):  # pylint: disable=missing-function-docstring
        cex = equivalence(self.loop, self.nested).counterexample
        for u in enumerate_pomsets(self.loop.alphabet, 3):
            if accepts(self.loop, u) != accepts(self.nested, u):
                self.assertEqual(u, cex)
                break

    def test_product(self):  # pylint: disable=missing-function-docstring
        both = product(self.loop, self.loop_f1,
                       PRODUCT_ACCEPTANCE['intersection'])
        differ = product(self.loop, self.loop_f1,
                         PRODUCT_ACCEPTANCE['difference'])
        self.assertTrue(validate_axioms(both.bimonoid).ok)
        for u in enumerate_pomsets(self.loop.alphabet, 4):
            with self.subTest(u=str(u)):
                self.assertEqual(accepts(both, u), accepts(self.loop, u) and
                                 accepts(self.loop_f1, u))
                self.assertEqual(accepts(differ, u),
                                 accepts(self.loop, u) !=
                                 accepts(self.loop_f1, u))
        self.assertIn('(q1,q1)', both.bimonoid.elements)
        self.assertRaises(AlphabetMismatch, product, self.loop, self.empty,
                          PRODUCT_ACCEPTANCE['union'])

    def test_minimize(self):  # pylint: disable=missing-function-docstring
        self.assertEqual(minimize(self.loop).size, 5)
        self.assertTrue(is_minimal(self.loop).ok)
        self.assertTrue(is_minimal(self.nested).ok)

        bigger = product(self.loop, self.nested, PRODUCT_ACCEPTANCE['left'])
        self.assertGreater(bigger.size, 5)
        report = is_minimal(bigger)
        self.assertFalse(report.ok)
        self.assertIsNotNone(report.merged)

        smaller = minimize(bigger)
        self.assertEqual(smaller.size, 5)
        self.assertTrue(equivalence(smaller, self.loop).equal)
        self.assertTrue(is_minimal(smaller).ok)

    def test_minimize_is_idempotent(self):  # pylint: disable=missing-function-docstring
        targets = {
            'loop': self.loop,
            'nested': self.nested,
            'left': product(self.loop, self.nested,
                            PRODUCT_ACCEPTANCE['left']),
            'intersection': product(self.loop, self.loop_f1,
                                    PRODUCT_ACCEPTANCE['intersection']),
        }
        for name, target in targets.items():
            once = minimize(target)
            twice = minimize(once)
            with self.subTest(name=name):
                self.assertTrue(is_minimal(once).ok)
                self.assertEqual(twice, once)
                self.assertTrue(equivalence(once, target).equal)

    def test_unreachable(self):  # pylint: disable=missing-function-docstring
        blind = Recogniser(self.loop.bimonoid, self.loop.alphabet,
                           {'a': 1, 'b': 1}, self.loop.accepting)
        report = is_minimal(blind)
        self.assertEqual(report.unreachable, 'qb')
        self.assertEqual(str(report), 'qb is unreachable')
        # only 1 is accepted once q1 is out of reach
        self.assertEqual(minimize(blind).size, 2)


class TestDepth(unittest.TestCase):
    """
    Contains test cases for the depth analysis
    """

    def test_loop_is_depth_nilpotent(self):  # pylint: disable=missing-function-docstring
        loop = documents.load('loop')
        report = depth_analysis(loop)
        self.assertTrue(report.is_depth_nilpotent)
        self.assertEqual(loop.name(report.zero), 'qbot')
        self.assertEqual({loop.name(m): d for m, d in report.depth.items()},
                         {'1': 1, 'qa': 2, 'qb': 2, 'q1': 3, 'qbot': 4})
        self.assertEqual(report.max_chain, 4)
        self.assertIsNone(report.failure_witness)

    def test_nested_is_not(self):  # pylint: disable=missing-function-docstring
        nested = documents.load('nested')
        report = depth_analysis(nested)
        self.assertFalse(report.is_depth_nilpotent)
        self.assertFalse(report.conditions['i'])
        self.assertEqual(report.failure_witness, 'condition (i): qb ≺ qb')

    def test_empty_has_no_zero_below_unit(self):  # pylint: disable=missing-function-docstring
        report = depth_analysis(documents.load('empty'))
        self.assertEqual(report.zero, 0)
        self.assertFalse(report.conditions['iv'])


class TestDocuments(unittest.TestCase):
    """
    Contains test cases for the recogniser JSON codec
    """

    def test_roundtrip(self):  # pylint: disable=missing-function-docstring
        loop = documents.load('loop')
        self.assertEqual(recogniser_from_dict(recogniser_to_dict(loop)), loop)

    def test_format_errors(self):  # pylint: disable=missing-function-docstring
        document = recogniser_to_dict(documents.load('loop'))
        for key in ('alphabet', 'elements', 'unit', 'seq', 'par', 'i',
                    'accepting'):
            with self.subTest(key=key):
                broken = dict(document)
                del broken[key]
                self.assertRaises(FormatError, recogniser_from_dict, broken)

        self.assertRaises(FormatError, recogniser_from_dict, [])
        self.assertRaises(FormatError, recogniser_from_dict,
                          dict(document, unit='q9'))
        self.assertRaises(FormatError, recogniser_from_dict,
                          dict(document, seq=document['seq'][:2]))
        self.assertRaises(FormatError, recogniser_from_dict,
                          dict(document, i={'a': 'qa'}))

    def test_invalid_tables(self):  # pylint: disable=missing-function-docstring
        document = recogniser_to_dict(documents.load('loop'))
        rows = [list(row) for row in document['par']]
        rows[1][2] = 'qbot'
        broken = dict(document, par=rows)
        self.assertRaises(InvalidBimonoid, recogniser_from_dict, broken)
        loaded = recogniser_from_dict(broken, validate=False)
        self.assertEqual(validate_axioms(loaded.bimonoid).laws,
                         {'par-commutativity'})

    def test_alphabet(self):  # pylint: disable=missing-function-docstring
        self.assertEqual(documents.load('empty').alphabet, Alphabet(('a',)))


if __name__ == '__main__':
    unittest.main()
