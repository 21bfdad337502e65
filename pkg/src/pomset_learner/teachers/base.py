"""
pomset-learner
Copyright (C) 2026 InkBridge Networks (legal@inkbridge.io)

pomset-learner © 2026 by InkBridge is licensed under CC BY-NC 4.0. To view a
copy of this license, visit https://creativecommons.org/licenses/by-nc/4.0/
"""
import logging
from abc import ABC, abstractmethod

from pomset_learner.pomset import Alphabet, Term
from pomset_learner.recogniser import EquivalenceResult, Recogniser

logger = logging.getLogger(__name__)


class Teacher(ABC):
    """
    Abstract class representing an oracle for a pomset language, answering
    membership and equivalence queries and counting them
    """

    def __init__(self, alphabet: Alphabet):
        """

        Args:
            alphabet: letters of the language
        """
        self.alphabet = alphabet
        self.membership_queries = 0
        self.equivalence_queries = 0

    def membership(self, u: Term) -> bool:
        """
        Whether a pomset is in the language

        Raises:
            UnknownLetter if u mentions a letter outside the alphabet
        """
        self.alphabet.check(u)
        self.membership_queries += 1
        return self._membership(u)

    def equivalence(self, hypothesis: Recogniser) -> EquivalenceResult:
        """
        Whether a hypothesis recognises the language, with a counterexample
        if it does not
        """
        self.equivalence_queries += 1
        result = self._equivalence(hypothesis)
        if result.equal:
            logger.info(f'Equivalence query {self.equivalence_queries}: ok'
                        f'{" (bounded)" if result.bounded else ""}')
        else:
            logger.info(f'Equivalence query {self.equivalence_queries}: '
                        f'counterexample {result.counterexample}')
        return result

    @abstractmethod
    def _membership(self, u: Term) -> bool:
        """
        Abstract method deciding membership of a pomset over the alphabet
        Args:
            u: pomset

        Returns:
            True if u is in the language
        """

    @abstractmethod
    def _equivalence(self, hypothesis: Recogniser) -> EquivalenceResult:
        """
        Abstract method comparing a hypothesis with the language
        Args:
            hypothesis: recogniser built by the learner

        Returns:
            EquivalenceResult whose counterexample, if any, the hypothesis
            misclassifies
        """
