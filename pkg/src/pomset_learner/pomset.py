"""
pomset-learner
Copyright (C) 2026 InkBridge Networks (legal@inkbridge.io)

pomset-learner © 2026 by InkBridge is licensed under CC BY-NC 4.0. To view a
copy of this license, visit https://creativecommons.org/licenses/by-nc/4.0/

Canonical series-parallel terms.

A series-parallel pomset is stored as its canonical term: sequential nodes are
flattened, parallel nodes are flattened and their children sorted, and the
empty pomset never appears below a composite node. Two pomsets are equal
exactly when their canonical terms are, so the printed form doubles as the
identity of a term.

Contexts are the same terms with exactly one hole leaf.
"""
import enum
import logging
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from pomset_learner.errors import UnknownLetter

logger = logging.getLogger(__name__)

IDENT_PATTERN = re.compile(r'[a-z][a-zA-Z0-9]*')
HOLE_SYMBOL = '_'


class Kind(enum.Enum):
    """
    Node kinds of a canonical term
    """
    EMPTY = 'empty'
    LETTER = 'letter'
    HOLE = 'hole'
    SEQ = 'seq'
    PAR = 'par'


def _render(kind: Kind, symbol: str, parts: tuple) -> str:
    match kind:
        case Kind.EMPTY:
            return '1'
        case Kind.LETTER:
            return symbol
        case Kind.HOLE:
            return HOLE_SYMBOL
        case Kind.SEQ:
            return '.'.join(f'({part.text})' if part.kind is Kind.PAR
                            else part.text for part in parts)
    # '.' binds tighter than '|', so parallel children never need brackets
    return '|'.join(part.text for part in parts)


class Term:
    """
    Canonical series-parallel term over an alphabet and the hole

    Built only through the module-level constructors, which keep the term
    canonical. Terms are immutable and hashable.

    attrs:
        kind: node kind
        symbol: letter symbol for LETTER nodes
        parts: children of SEQ (in order) and PAR (sorted) nodes
        text: canonical print, minimal parentheses
        nodes: number of letter occurrences
        holes: number of hole occurrences
    """
    __slots__ = ('kind', 'symbol', 'parts', 'text', 'nodes', 'holes', '_hash')

    def __init__(self, kind: Kind, symbol: str = None, parts: tuple = ()):
        self.kind = kind
        self.symbol = symbol
        self.parts = parts
        self.text = _render(kind, symbol, parts)
        if kind is Kind.LETTER:
            self.nodes = 1
        else:
            self.nodes = sum(part.nodes for part in parts)
        if kind is Kind.HOLE:
            self.holes = 1
        else:
            self.holes = sum(part.holes for part in parts)
        self._hash = hash(self.text)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Term):
            return NotImplemented
        return self._hash == other._hash and self.text == other.text

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: 'Term') -> bool:
        return self.order_key < other.order_key

    def __str__(self) -> str:
        return self.text

    def __repr__(self) -> str:
        return f'Term({self.text!r})'

    @property
    def order_key(self) -> tuple[int, str]:
        """
        Enumeration order: node count first, then canonical print
        """
        return self.nodes, self.text

    @property
    def is_context(self) -> bool:  # pylint: disable=missing-function-docstring
        return self.holes == 1

    @property
    def is_empty(self) -> bool:  # pylint: disable=missing-function-docstring
        return self.kind is Kind.EMPTY


# Type aliases; contexts are terms with a single hole
Pomset = Term
Context = Term

EMPTY = Term(Kind.EMPTY)
HOLE = Term(Kind.HOLE)


def letter(symbol: str) -> Term:
    """
    Creates the single-node pomset for a letter

    Args:
        symbol: letter symbol, lowercase ASCII letter then alphanumerics

    Returns:
        letter term

    Raises:
        ValueError if the symbol is not an identifier
    """
    if not IDENT_PATTERN.fullmatch(symbol):
        raise ValueError(f'Invalid letter symbol {symbol!r}')
    return Term(Kind.LETTER, symbol=symbol)


def seq_all(terms: Iterable[Term]) -> Term:
    """
    Sequential composition of any number of terms, left to right
    """
    parts = []
    for term in terms:
        if term.kind is Kind.EMPTY:
            continue
        if term.kind is Kind.SEQ:
            parts.extend(term.parts)
        else:
            parts.append(term)

    if not parts:
        return EMPTY
    if len(parts) == 1:
        return parts[0]
    return Term(Kind.SEQ, parts=tuple(parts))


def par_all(terms: Iterable[Term]) -> Term:
    """
    Parallel composition of any number of terms
    """
    parts = []
    for term in terms:
        if term.kind is Kind.EMPTY:
            continue
        if term.kind is Kind.PAR:
            parts.extend(term.parts)
        else:
            parts.append(term)

    if not parts:
        return EMPTY
    if len(parts) == 1:
        return parts[0]
    return Term(Kind.PAR, parts=tuple(sorted(parts, key=lambda t: t.text)))


def seq(u: Term, v: Term) -> Term:  # pylint: disable=missing-function-docstring
    return seq_all((u, v))


def par(u: Term, v: Term) -> Term:  # pylint: disable=missing-function-docstring
    return par_all((u, v))


class Op(enum.Enum):
    """
    The two pomset compositions
    """
    SEQ = '.'
    PAR = '|'

    def compose(self, u: Term, v: Term) -> Term:
        """
        Composes two terms with this operation
        """
        if self is Op.SEQ:
            return seq(u, v)
        return par(u, v)


@dataclass(frozen=True)
class IsEmpty:
    """
    decompose() result for the empty pomset
    """


@dataclass(frozen=True)
class IsLetter:
    """
    decompose() result for a single letter
    """
    symbol: str


@dataclass(frozen=True)
class Split:
    """
    decompose() result for a composite pomset; left and right are non-empty
    """
    left: Term
    op: Op
    right: Term


Decomposition = Union[IsEmpty, IsLetter, Split]


def decompose(u: Term) -> Decomposition:
    """
    Splits a pomset into two non-empty halves

    Sequential terms split their first child from the rest, parallel terms
    their least child from the rest.

    Args:
        u: pomset without holes

    Returns:
        IsEmpty, IsLetter or Split

    Raises:
        ValueError if u contains a hole
    """
    match u.kind:
        case Kind.EMPTY:
            return IsEmpty()
        case Kind.LETTER:
            return IsLetter(u.symbol)
        case Kind.SEQ:
            return Split(u.parts[0], Op.SEQ, seq_all(u.parts[1:]))
        case Kind.PAR:
            return Split(u.parts[0], Op.PAR, par_all(u.parts[1:]))
    raise ValueError('A hole cannot be decomposed')


def _substitute(term: Term, replacement: Term) -> Term:
    match term.kind:
        case Kind.HOLE:
            return replacement
        case Kind.SEQ if term.holes:
            return seq_all(_substitute(part, replacement)
                           for part in term.parts)
        case Kind.PAR if term.holes:
            return par_all(_substitute(part, replacement)
                           for part in term.parts)
    return term


def plug(c: Context, t: Pomset) -> Pomset:
    """
    Substitutes a pomset for the hole of a context

    Args:
        c: context
        t: pomset

    Returns:
        canonical pomset c[t]

    Raises:
        ValueError if c is not a context or t has holes
    """
    if not c.is_context:
        raise ValueError(f'{c} is not a context')
    if t.holes:
        raise ValueError(f'{t} is not a pomset')
    return _substitute(c, t)


def plug_context(c: Context, d: Context) -> Context:
    """
    Substitutes a context for the hole of another; the result has one hole
    """
    if not c.is_context or not d.is_context:
        raise ValueError(f'{c} and {d} must both be contexts')
    return _substitute(c, d)


def subterms(u: Pomset) -> set[Pomset]:
    """
    All terms reachable from u by repeated decompose(), together with u and 1
    """
    found = {EMPTY}
    pending = [u]
    while pending:
        term = pending.pop()
        if term in found:
            continue
        found.add(term)
        split = decompose(term)
        if isinstance(split, Split):
            pending.append(split.left)
            pending.append(split.right)
    return found


def letters_in(u: Term) -> set[str]:
    """
    Symbols occurring in a term
    """
    if u.kind is Kind.LETTER:
        return {u.symbol}
    symbols = set()
    for part in u.parts:
        symbols |= letters_in(part)
    return symbols


@dataclass(frozen=True)
class Alphabet:
    """
    Finite non-empty set of letter symbols, kept sorted

    attrs:
        symbols: the letter symbols
    """
    symbols: tuple[str, ...]

    def __post_init__(self):
        symbols = tuple(sorted(set(self.symbols)))
        if not symbols:
            raise ValueError('Alphabet must not be empty')
        for symbol in symbols:
            if not IDENT_PATTERN.fullmatch(symbol):
                raise ValueError(f'Invalid letter symbol {symbol!r}')
        object.__setattr__(self, 'symbols', symbols)

    @classmethod
    def parse(cls, text: str) -> 'Alphabet':
        """
        Reads a comma separated list of symbols, e.g. 'a,b'
        """
        return cls(tuple(part.strip() for part in text.split(',')
                         if part.strip()))

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __contains__(self, symbol: str) -> bool:
        return symbol in self.symbols

    def letters(self) -> tuple[Term, ...]:
        """
        Single-letter pomsets in alphabet order
        """
        return tuple(letter(symbol) for symbol in self.symbols)

    def check(self, u: Term) -> None:
        """
        Raises UnknownLetter if u mentions a symbol outside the alphabet
        """
        for symbol in sorted(letters_in(u)):
            if symbol not in self.symbols:
                raise UnknownLetter(symbol, self.symbols)


def enumerate_pomsets(alphabet: Alphabet, max_nodes: int) -> Iterator[Pomset]:
    """
    Streams every pomset with at most max_nodes letters exactly once

    Order is by node count, then canonical print. Every pomset with two or
    more nodes is a composite of two smaller non-empty ones, so each level is
    built from the levels below it.

    Args:
        alphabet: letters to draw from
        max_nodes: largest node count produced

    Returns:
        iterator over pomsets, starting with 1

    Raises:
        ValueError if max_nodes is negative
    """
    if max_nodes < 0:
        raise ValueError('max_nodes must be non-negative')

    yield EMPTY
    levels: dict[int, list[Term]] = {}
    for size in range(1, max_nodes + 1):
        if size == 1:
            level = set(alphabet.letters())
        else:
            level = set()
            for left in range(1, size):
                for u in levels[left]:
                    for v in levels[size - left]:
                        level.add(seq(u, v))
                        level.add(par(u, v))
        levels[size] = sorted(level, key=lambda t: t.text)
        logger.debug(f'{len(levels[size])} pomsets with {size} nodes')
        yield from levels[size]
