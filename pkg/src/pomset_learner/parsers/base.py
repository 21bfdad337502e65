"""
pomset-learner
Copyright (C) 2026 InkBridge Networks (legal@inkbridge.io)

pomset-learner © 2026 by InkBridge is licensed under CC BY-NC 4.0. To view a
copy of this license, visit https://creativecommons.org/licenses/by-nc/4.0/

Contains the base parser class with the cursor primitives shared by the
term and teacher-spec parsers
"""
import logging
import re

from pomset_learner.errors import PomsetLearnerError

# Set up logger for this module
logger = logging.getLogger(__name__)


class ParseError(PomsetLearnerError):
    """
    An error that occurs when parsing goes unexpected
    """

    def __init__(self, text: str, pos: int, msg: str):
        """
        Args:
            text (str): Text attempted to be parsed
            pos (int): Position of text when parsing error occured
            msg (str): Message describing the error
        """
        super().__init__(msg)
        self.pos = pos
        self.text = text
        self.msg = msg

    def __str__(self) -> str:
        return f'{self.msg} occured at position {self.pos} of text {self.text}'


class BaseParser:
    """
    Base parser class
    """

    def __init__(self):
        self.buffer = ''
        self.cursor_pos = 0

    def parse(self, buffer: str):
        """
        Entry point for parsing

        To be overriden in child class

        Args:
            buffer (str): string to be parsed
        """
        raise NotImplementedError

    def reset(self, buffer: str) -> None:
        """
        Points the cursor at the start of a new buffer
        """
        logger.debug(f'Attempting to parse "{buffer}"')
        self.buffer = buffer
        self.cursor_pos = 0

    def remove_leading_whitespace(self) -> None:
        """
        Moves parser cursor to next non-whitespace character

        If already at a non-whitespace character, no movement occurs
        """
        while self.cursor_pos < len(self.buffer) \
                and self.buffer[self.cursor_pos].isspace():
            self.cursor_pos += 1

    def peek(self, remove_leading_whitespace: bool = True) -> str:
        """
        Returns the character under the cursor without consuming it

        Returns:
            the character, or '' at the end of the buffer
        """
        if remove_leading_whitespace:
            self.remove_leading_whitespace()
        return self.buffer[self.cursor_pos:self.cursor_pos + 1]

    def keyword(self, *keywords: str,
                remove_leading_whitespace: bool = True) -> str:
        """
        Looks for matching keywords at current cursor position

        Args:
            keywords (str): list of string to look for

        Return:
            String of the keyword that matched

        Raises:
            ParseError if none of the keywords is present
        """
        if remove_leading_whitespace:
            self.remove_leading_whitespace()

        for keyword in keywords:
            end_pos = self.cursor_pos + len(keyword)

            # Will NOT raise index-out-of-bounds errors
            if self.buffer[self.cursor_pos:end_pos] == keyword:
                self.cursor_pos = end_pos
                return keyword

        logger.debug((f'Failed to find keywords: {", ".join(keywords)}, for '
                      f'"{self.buffer}" at position {self.cursor_pos}')
                     )
        raise ParseError(self.buffer, self.cursor_pos,
                         f"No keywords: [{','.join(keywords)}] found")

    def search_pattern(self, pattern: re.Pattern, what: str) -> str:
        """
        Consumes the longest match of a regular expression at the cursor

        Args:
            pattern: compiled expression
            what: name of the token for error messages

        Returns:
            the matched text

        Raises:
            ParseError if the expression does not match here
        """
        self.remove_leading_whitespace()
        match = pattern.match(self.buffer, self.cursor_pos)
        if match is None or match.end() == self.cursor_pos:
            raise ParseError(self.buffer, self.cursor_pos, f'No {what} found')

        self.cursor_pos = match.end()
        return match.group(0)

    def search_positive_number(self) -> int:
        """
        Looks for a number at current cursor position

        Stops at first non-numerical value (i.e., anything not [0-9]).

        Returns:
            int representing the number found

        Raises:
            ParseError if no number was detected
        """
        return int(self.search_pattern(re.compile(r'[0-9]+'), 'number'))

    def expect_end(self) -> None:
        """
        Raises ParseError unless only whitespace remains
        """
        self.remove_leading_whitespace()
        if self.cursor_pos != len(self.buffer):
            raise ParseError(self.buffer, self.cursor_pos,
                             f'Unexpected {self.buffer[self.cursor_pos]!r}')
