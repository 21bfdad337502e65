"""
pomset-learner
Copyright (C) 2026 InkBridge Networks (legal@inkbridge.io)

pomset-learner © 2026 by InkBridge is licensed under CC BY-NC 4.0. To view a
copy of this license, visit https://creativecommons.org/licenses/by-nc/4.0/

Exceptions raised by the library. Analysis outcomes (axiom reports,
saturation reports, ...) are returned as data, not raised.
"""


class PomsetLearnerError(Exception):
    """
    Base class of every error raised by pomset-learner
    """


class UnknownLetter(PomsetLearnerError):
    """
    A pomset mentions a symbol outside the alphabet it is evaluated against
    """

    def __init__(self, letter: str, alphabet):
        super().__init__(f'Letter {letter} is not in alphabet '
                         f'{{{", ".join(alphabet)}}}')
        self.letter = letter
        self.alphabet = alphabet


class AlphabetMismatch(PomsetLearnerError):
    """
    Two objects that must share an alphabet do not
    """

    def __init__(self, left, right):
        super().__init__(f'Alphabets differ: {{{", ".join(left)}}} vs '
                         f'{{{", ".join(right)}}}')
        self.left = left
        self.right = right


class InvalidBimonoid(PomsetLearnerError):
    """
    Operation tables that break one of the bimonoid laws
    """

    def __init__(self, report):
        super().__init__(f'Bimonoid laws violated: {report}')
        self.report = report


class FormatError(PomsetLearnerError):
    """
    A JSON document does not describe a recogniser or automaton
    """

    def __init__(self, where: str, msg: str):
        super().__init__(f'{msg} (at {where})')
        self.where = where
        self.msg = msg


class TeacherInconsistent(PomsetLearnerError):
    """
    The teacher gave answers no single language can produce
    """


class DefectPresent(PomsetLearnerError):
    """
    A hypothesis was requested from a table that is not closed,
    sharp and associative
    """


class NotClosed(DefectPresent):
    """
    A composite row has no representative among the rows of S
    """


class NotSaturatedWithin(PomsetLearnerError):
    """
    Screening found a run that does not factor through the automaton's rules
    """

    def __init__(self, bound: int, witness):
        super().__init__(f'Automaton is not saturated within {bound} nodes: '
                         f'{witness}')
        self.bound = bound
        self.witness = witness


class NotDepthNilpotent(PomsetLearnerError):
    """
    The recogniser has no fork-acyclic automaton by the depth construction
    """

    def __init__(self, report):
        super().__init__(f'Recogniser is not depth-nilpotent: '
                         f'{report.failure_witness}')
        self.report = report


class ClosureDiverged(PomsetLearnerError):
    """
    A closure computation produced more elements than allowed
    """

    def __init__(self, limit: int):
        super().__init__(f'Closure exceeded {limit} elements')
        self.limit = limit
