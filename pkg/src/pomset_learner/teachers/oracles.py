"""
pomset-learner
Copyright (C) 2026 InkBridge Networks (legal@inkbridge.io)

pomset-learner © 2026 by InkBridge is licensed under CC BY-NC 4.0. To view a
copy of this license, visit https://creativecommons.org/licenses/by-nc/4.0/

Contains the teacher subclasses backed by a recogniser, a pomset automaton
and a membership predicate
"""
import logging
from typing import Callable

from pomset_learner import pa, recogniser
from pomset_learner.errors import AlphabetMismatch
from pomset_learner.pomset import Alphabet, Term, enumerate_pomsets
from pomset_learner.recogniser import EquivalenceResult, Recogniser
from pomset_learner.teachers.base import Teacher

logger = logging.getLogger(__name__)


class TeacherRecogniser(Teacher):
    """
    Teacher answering exactly from a target recogniser
    """

    def __init__(self, target: Recogniser):
        """

        Args:
            target: recogniser of the language to be learned

        Raises:
            InvalidBimonoid if the target breaks a bimonoid law
        """
        recogniser.require_axioms(target)
        super().__init__(target.alphabet)
        self.target = target

    def _membership(self, u: Term) -> bool:
        return recogniser.accepts(self.target, u)

    def _equivalence(self, hypothesis: Recogniser) -> EquivalenceResult:
        return recogniser.equivalence(self.target, hypothesis)


class TeacherAutomaton(TeacherRecogniser):
    """
    Teacher for the language of a saturated pomset automaton

    Equivalence is decided exactly, on the recogniser obtained by converting
    the automaton once up front.
    """

    def __init__(self, automaton: pa.PomsetAutomaton, bound: int):
        """

        Args:
            automaton: automaton of the language to be learned
            bound: node bound of the saturation screen

        Raises:
            NotSaturatedWithin if the screen finds a violation
            InvalidBimonoid if the run relations do not form a bimonoid
        """
        self.automaton = automaton
        target = pa.pa_to_recogniser(automaton, bound)
        logger.info(f'Automaton with {automaton.size} states converted to a '
                    f'recogniser with {target.size} elements')
        super().__init__(target)

    def _membership(self, u: Term) -> bool:
        return pa.accepts(self.automaton, u)


class TeacherBounded(Teacher):
    """
    Teacher for a language given as a predicate

    Equivalence compares the hypothesis with the predicate on every pomset
    up to a node bound, so an 'ok' answer is only as good as the bound.
    """

    def __init__(self, predicate: Callable[[Term], bool], alphabet: Alphabet,
                 bound: int):
        """

        Args:
            predicate: membership test of the language
            alphabet: letters of the language
            bound: largest pomset size compared on equivalence queries
        """
        super().__init__(alphabet)
        self.predicate = predicate
        self.bound = bound

    def _membership(self, u: Term) -> bool:
        return self.predicate(u)

    def _equivalence(self, hypothesis: Recogniser) -> EquivalenceResult:
        if hypothesis.alphabet != self.alphabet:
            raise AlphabetMismatch(self.alphabet.symbols,
                                   hypothesis.alphabet.symbols)

        for u in enumerate_pomsets(self.alphabet, self.bound):
            if self.predicate(u) != recogniser.accepts(hypothesis, u):
                return EquivalenceResult(u)
        logger.debug(f'Hypothesis agrees on all pomsets up to '
                     f'{self.bound} nodes')
        return EquivalenceResult(bounded=True)
