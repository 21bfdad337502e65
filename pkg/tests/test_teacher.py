"""
pomset-learner
Copyright (C) 2026 InkBridge Networks (legal@inkbridge.io)

pomset-learner © 2026 by InkBridge is licensed under CC BY-NC 4.0. To view a
copy of this license, visit https://creativecommons.org/licenses/by-nc/4.0/
"""
import unittest

from pomset_learner import documents, pa # pylint: disable=import-error
from pomset_learner.errors import AlphabetMismatch, FormatError, \
    InvalidBimonoid, NotSaturatedWithin, UnknownLetter # pylint: disable=import-error
from pomset_learner.languages import LANGUAGES # pylint: disable=import-error
from pomset_learner.learner import learn # pylint: disable=import-error
from pomset_learner.parsers.base import ParseError # pylint: disable=import-error
from pomset_learner.parsers.term import parse_pomset # pylint: disable=import-error
from pomset_learner.pomset import Alphabet, enumerate_pomsets # pylint: disable=import-error
from pomset_learner.recogniser import Bimonoid, Recogniser, accepts, \
    equivalence # pylint: disable=import-error
from pomset_learner.teachers.factory import FactoryTeacher # pylint: disable=import-error
from pomset_learner.teachers.oracles import TeacherAutomaton, \
    TeacherBounded, TeacherRecogniser # pylint: disable=import-error

BOUNDS = {'saturation': 4, 'bounded_teacher': 4}


class TestTeacherRecogniser(unittest.TestCase):
    """
    Contains test cases for the exact teachers
    """

    @classmethod
    def setUpClass(cls):
        """
        Load the samples shared by every testcase
        """
        cls.loop = documents.load('loop')
        cls.loop_f1 = documents.load('loop_F1')

    def test_queries_are_counted(self):  # pylint: disable=missing-function-docstring
        teacher = TeacherRecogniser(self.loop)
        self.assertTrue(teacher.membership(parse_pomset('a|b')))
        self.assertFalse(teacher.membership(parse_pomset('a.b')))
        self.assertEqual(teacher.membership_queries, 2)

        self.assertTrue(teacher.equivalence(self.loop).equal)
        result = teacher.equivalence(self.loop_f1)
        self.assertEqual(str(result.counterexample), 'a|b')
        self.assertEqual(teacher.equivalence_queries, 2)

    def test_unknown_letter(self):  # pylint: disable=missing-function-docstring
        teacher = TeacherRecogniser(self.loop)
        self.assertRaises(UnknownLetter, teacher.membership,
                          parse_pomset('a|c'))
        self.assertEqual(teacher.membership_queries, 0)

    def test_invalid_target(self):  # pylint: disable=missing-function-docstring
        seq_table = ((0, 1), (1, 0))
        parity = Recogniser(
            Bimonoid(('1', 'x'), 0, seq_table, ((0, 1), (1, 1))),
            Alphabet(('a',)), {'a': 1}, frozenset({0}))
        self.assertIs(TeacherRecogniser(parity).target, parity)

        # 1 | x = x but x | 1 = 1
        lopsided = Recogniser(
            Bimonoid(('1', 'x'), 0, seq_table, ((0, 1), (0, 1))),
            Alphabet(('a',)), {'a': 1}, frozenset({0}))
        self.assertRaises(InvalidBimonoid, TeacherRecogniser, lopsided)

    def test_automaton_teacher(self):  # pylint: disable=missing-function-docstring
        automaton = pa.recogniser_to_pa(self.loop)
        by_automaton = TeacherAutomaton(automaton, 4)
        by_recogniser = TeacherRecogniser(self.loop)
        for u in enumerate_pomsets(self.loop.alphabet, 4):
            with self.subTest(u=str(u)):
                self.assertEqual(by_automaton.membership(u),
                                 by_recogniser.membership(u))
        self.assertTrue(equivalence(by_automaton.target, self.loop).equal)

    def test_automaton_teacher_screens_saturation(self):  # pylint: disable=missing-function-docstring
        with self.assertRaises(NotSaturatedWithin) as caught:
            TeacherAutomaton(documents.load('problematic_pa'), 4)
        self.assertEqual(caught.exception.bound, 4)
        self.assertEqual(caught.exception.witness.source, 'q1')


class TestTeacherBounded(unittest.TestCase):
    """
    Contains test cases for teachers backed by a predicate
    """

    def test_counterexample_and_bounded_answer(self):  # pylint: disable=missing-function-docstring
        language = LANGUAGES['loop']
        teacher = TeacherBounded(language.predicate, language.alphabet, 4)

        result = teacher.equivalence(documents.load('loop_F1'))
        self.assertFalse(result.equal)
        self.assertEqual(str(result.counterexample), 'a|b')

        result = teacher.equivalence(documents.load('loop'))
        self.assertTrue(result.equal)
        self.assertTrue(result.bounded)

    def test_alphabet_mismatch(self):  # pylint: disable=missing-function-docstring
        language = LANGUAGES['small']
        teacher = TeacherBounded(language.predicate, language.alphabet, 4)
        self.assertRaises(AlphabetMismatch, teacher.equivalence,
                          documents.load('loop'))

    def test_learn_flags_bounded_runs(self):  # pylint: disable=missing-function-docstring
        language = LANGUAGES['nested']
        hypothesis, stats = learn(
            TeacherBounded(language.predicate, language.alphabet, 5))
        self.assertTrue(stats.bounded)
        self.assertTrue(str(stats).endswith(' bounded'))
        for u in enumerate_pomsets(language.alphabet, 5):
            with self.subTest(u=str(u)):
                self.assertEqual(accepts(hypothesis, u), language.predicate(u))


class TestLanguages(unittest.TestCase):
    """
    Contains test cases for the built-in languages
    """

    def test_predicates(self):  # pylint: disable=missing-function-docstring
        cases = {
            'loop': (['1', 'a|b', '(a|b).(a|b)'], ['a', 'a.b', 'a|a|b']),
            'nested': (['b', 'a.(b|b)', 'a.(a.(b|b)|b)'],
                       ['1', 'a.b', 'a.(b|b|b)', 'b|b']),
            'a_bs': (['a', 'a.b', 'a.b.b'], ['1', 'b', 'a.a', 'a|b']),
            'small': (['a', 'a.a', 'a|a'], ['1', 'a.a.a', 'a|a|a']),
            'empty': ([], ['1', 'a']),
        }
        for name, (members, others) in cases.items():
            predicate = LANGUAGES[name].predicate
            for text in members:
                with self.subTest(language=name, u=text):
                    self.assertTrue(predicate(parse_pomset(text)))
            for text in others:
                with self.subTest(language=name, u=text):
                    self.assertFalse(predicate(parse_pomset(text)))


class TestFactoryTeacher(unittest.TestCase):
    """
    Contains test cases for creating teachers from --teacher specs
    """

    @classmethod
    def setUpClass(cls):
        """
        Initiate the factory shared by every testcase
        """
        cls.factory = FactoryTeacher(BOUNDS)

    def test_recogniser_spec(self):  # pylint: disable=missing-function-docstring
        teacher = self.factory.teacher_from_spec('recogniser:loop')
        self.assertIsInstance(teacher, TeacherRecogniser)
        self.assertTrue(teacher.membership(parse_pomset('a|b')))

    def test_pa_spec(self):  # pylint: disable=missing-function-docstring
        teacher = self.factory.teacher_from_spec('pa:simple_pa')
        self.assertIsInstance(teacher, TeacherAutomaton)
        self.assertTrue(teacher.membership(parse_pomset('a.(b|c).a')))
        self.assertFalse(teacher.membership(parse_pomset('a.b.c.a')))

    def test_bounded_specs(self):  # pylint: disable=missing-function-docstring
        teacher = self.factory.teacher_from_spec('bounded:nested,6')
        self.assertIsInstance(teacher, TeacherBounded)
        self.assertEqual(teacher.bound, 6)

        teacher = self.factory.teacher_from_spec('bounded:loop')
        self.assertEqual(teacher.bound, 4)
        self.assertTrue(teacher.membership(parse_pomset('a|b')))

        teacher = self.factory.teacher_from_spec('bounded:problematic_pa')
        self.assertTrue(teacher.membership(parse_pomset('a.a.b.b')))

    def test_kind_mismatch(self):  # pylint: disable=missing-function-docstring
        self.assertRaises(FormatError, self.factory.teacher_from_spec,
                          'recogniser:simple_pa')
        self.assertRaises(FormatError, self.factory.teacher_from_spec,
                          'pa:loop')
        self.assertRaises(ParseError, self.factory.teacher_from_spec,
                          'oracle:loop')
        self.assertRaises(OSError, self.factory.teacher_from_spec,
                          'recogniser:no/such/file.json')


if __name__ == '__main__':
    unittest.main()
