"""
pomset-learner
Copyright (C) 2026 InkBridge Networks (legal@inkbridge.io)

pomset-learner © 2026 by InkBridge is licensed under CC BY-NC 4.0. To view a
copy of this license, visit https://creativecommons.org/licenses/by-nc/4.0/

Parser for the textual form of pomsets and contexts:

    term := par
    par  := seq ('|' seq)*
    seq  := atom ('.' atom)*
    atom := '1' | IDENT | '_' | '(' term ')'

'_' is the hole and may only appear in contexts, exactly once.
"""
import logging

from pomset_learner.parsers.base import BaseParser, ParseError
from pomset_learner.pomset import Alphabet, EMPTY, HOLE, IDENT_PATTERN, \
    Term, letter, par_all, seq_all

# Set up logger for this module
logger = logging.getLogger(__name__)


class ParserTerm(BaseParser):
    """
    Parser turning text into canonical terms
    """

    def __init__(self, holes: int = 0, alphabet: Alphabet = None):
        """
        Args:
            holes: number of holes the parsed term must have (0 or 1)
            alphabet: if given, letters outside it are rejected
        """
        super().__init__()
        self.holes = holes
        self.alphabet = alphabet

    def parse(self, buffer: str) -> Term:
        """
        Entry point for parsing

        Args:
            buffer (str): string to be parsed

        Returns:
            canonical term

        Raises:
            ParseError on malformed text or a wrong number of holes
            UnknownLetter if a letter is outside the alphabet
        """
        self.reset(buffer)

        term = self.parse_par()
        self.expect_end()

        if term.holes != self.holes:
            raise ParseError(buffer, 0, f'Expected {self.holes} hole(s), '
                                        f'found {term.holes}')
        if self.alphabet is not None:
            self.alphabet.check(term)
        return term

    def parse_par(self) -> Term:  # pylint: disable=missing-function-docstring
        parts = [self.parse_seq()]
        while self.peek() == '|':
            self.keyword('|')
            parts.append(self.parse_seq())
        return par_all(parts)

    def parse_seq(self) -> Term:  # pylint: disable=missing-function-docstring
        parts = [self.parse_atom()]
        while self.peek() == '.':
            self.keyword('.')
            parts.append(self.parse_atom())
        return seq_all(parts)

    def parse_atom(self) -> Term:
        """
        Parses a letter, 1, the hole or a bracketed term
        """
        match self.peek():
            case '(':
                self.keyword('(')
                term = self.parse_par()
                self.keyword(')')
                return term
            case '1':
                self.keyword('1')
                return EMPTY
            case '_':
                self.keyword('_')
                return HOLE
        return letter(self.search_pattern(IDENT_PATTERN, 'letter'))


def parse_pomset(text: str, alphabet: Alphabet = None) -> Term:
    """
    Parses a pomset, e.g. 'a.(b|c).a'
    """
    return ParserTerm(0, alphabet).parse(text)


def parse_context(text: str, alphabet: Alphabet = None) -> Term:
    """
    Parses a context, e.g. 'a.(_|b)'
    """
    return ParserTerm(1, alphabet).parse(text)
