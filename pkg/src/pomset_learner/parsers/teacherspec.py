"""
pomset-learner
Copyright (C) 2026 InkBridge Networks (legal@inkbridge.io)

pomset-learner © 2026 by InkBridge is licensed under CC BY-NC 4.0. To view a
copy of this license, visit https://creativecommons.org/licenses/by-nc/4.0/

Parser for the --teacher option:

    recogniser:<source> | pa:<source> | bounded:<source>[,<N>]
"""
import logging
import re
from dataclasses import dataclass
from typing import Optional

from pomset_learner.parsers.base import BaseParser, ParseError

# Set up logger for this module
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TeacherSpec:
    """
    attrs:
        kind: 'recogniser', 'pa' or 'bounded'
        source: file, sample or built-in language name
        bound: node bound of a bounded teacher, if given
    """
    kind: str
    source: str
    bound: Optional[int] = None


class ParserTeacherSpec(BaseParser):
    """
    Parser class for teacher specs
    """

    def __init__(self):
        super().__init__()
        self.source_pattern = re.compile(r'[^,]+')

    def parse(self, buffer: str) -> TeacherSpec:
        """
        Entry point for parsing

        Args:
            buffer (str): string to be parsed

        Returns:
            TeacherSpec

        Raises:
            ParseError if the spec is malformed
        """
        self.reset(buffer)

        kind = self.keyword('recogniser', 'pa', 'bounded')
        self.keyword(':', remove_leading_whitespace=False)
        source = self.search_pattern(self.source_pattern, 'source').strip()

        bound = None
        if self.peek() == ',':
            if kind != 'bounded':
                raise ParseError(buffer, self.cursor_pos,
                                 f'Only bounded teachers take a node bound, '
                                 f'not {kind}')
            self.keyword(',')
            bound = self.search_positive_number()
        self.expect_end()

        return TeacherSpec(kind, source, bound)
