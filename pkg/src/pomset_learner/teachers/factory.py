"""
pomset-learner
Copyright (C) 2026 InkBridge Networks (legal@inkbridge.io)

pomset-learner © 2026 by InkBridge is licensed under CC BY-NC 4.0. To view a
copy of this license, visit https://creativecommons.org/licenses/by-nc/4.0/

Contains the factory creating teachers from --teacher specs
"""
import logging

from pomset_learner import documents, pa, recogniser
from pomset_learner.errors import FormatError
from pomset_learner.languages import LANGUAGES
from pomset_learner.parsers.teacherspec import ParserTeacherSpec, TeacherSpec
from pomset_learner.teachers.base import Teacher
from pomset_learner.teachers.oracles import TeacherAutomaton, \
    TeacherBounded, TeacherRecogniser

logger = logging.getLogger(__name__)


class FactoryTeacher:
    """
    Factory class to create teachers
    """

    def __init__(self, bounds: dict):
        """

        Args:
            bounds: 'saturation' and 'bounded_teacher' node bounds
        """
        self.bounds = bounds
        self.parser = ParserTeacherSpec()

        self.teacher_handlers = {
            'recogniser': self.teacher_recogniser,
            'pa': self.teacher_pa,
            'bounded': self.teacher_bounded,
        }

    def teacher_recogniser(self, spec: TeacherSpec) -> TeacherRecogniser:
        """
        exact teacher for a recogniser document
        """
        target = documents.load(spec.source)
        if not isinstance(target, recogniser.Recogniser):
            raise FormatError(spec.source, 'Expected a recogniser')
        return TeacherRecogniser(target)

    def teacher_pa(self, spec: TeacherSpec) -> TeacherAutomaton:
        """
        exact teacher for an automaton document, screened for saturation
        """
        automaton = documents.load(spec.source)
        if not isinstance(automaton, pa.PomsetAutomaton):
            raise FormatError(spec.source, 'Expected a pomset automaton')
        return TeacherAutomaton(automaton, self.bounds['saturation'])

    def teacher_bounded(self, spec: TeacherSpec) -> TeacherBounded:
        """
        bounded teacher for a built-in language, or for any document used as
        a black-box membership test
        """
        bound = spec.bound
        if bound is None:
            bound = self.bounds['bounded_teacher']

        if spec.source in LANGUAGES:
            language = LANGUAGES[spec.source]
            return TeacherBounded(language.predicate, language.alphabet,
                                  bound)

        target = documents.load(spec.source)
        if isinstance(target, recogniser.Recogniser):
            def predicate(u):
                return recogniser.accepts(target, u)
        else:
            def predicate(u):
                return pa.accepts(target, u)
        return TeacherBounded(predicate, target.alphabet, bound)

    def teacher_from_spec(self, text: str) -> Teacher:
        """
        creates a teacher from a spec such as 'recogniser:loop.json'

        Raises:
            ParseError on a malformed spec, and whatever loading the source
            raises
        """
        spec = self.parser.parse(text)
        logger.info(f'Creating {spec.kind} teacher from {spec.source}')
        return self.teacher_handlers[spec.kind](spec)
