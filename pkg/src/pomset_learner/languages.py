"""
pomset-learner
Copyright (C) 2026 InkBridge Networks (legal@inkbridge.io)

pomset-learner © 2026 by InkBridge is licensed under CC BY-NC 4.0. To view a
copy of this license, visit https://creativecommons.org/licenses/by-nc/4.0/

Built-in languages given by membership predicates, for bounded teachers
"""
from dataclasses import dataclass
from typing import Callable

from pomset_learner.pomset import Alphabet, Kind, Term, letter, par, seq

A = letter('a')
B = letter('b')
A_PAR_B = par(A, B)


@dataclass(frozen=True)
class Language:
    """
    Membership predicate with the alphabet it is defined over
    """
    alphabet: Alphabet
    predicate: Callable[[Term], bool]
    description: str


def in_loop(u: Term) -> bool:
    """
    Finite sequences of a|b, including the empty one
    """
    if u.is_empty or u == A_PAR_B:
        return True
    return u.kind is Kind.SEQ and all(part == A_PAR_B for part in u.parts)


def in_nested(u: Term) -> bool:
    """
    Smallest language holding b and a.(x|y) for any members x and y
    """
    if u == B:
        return True
    if u.kind is not Kind.SEQ or len(u.parts) != 2 or u.parts[0] != A:
        return False
    forked = u.parts[1]
    # members are never parallel terms, so x|y has exactly two components
    return forked.kind is Kind.PAR and len(forked.parts) == 2 and \
        all(in_nested(part) for part in forked.parts)


def in_a_bs(u: Term) -> bool:
    """
    a followed by any number of b
    """
    if u == A:
        return True
    return u.kind is Kind.SEQ and u.parts[0] == A and \
        all(part == B for part in u.parts[1:])


SMALL = frozenset({A, seq(A, A), par(A, A)})

LANGUAGES = {
    'loop': Language(Alphabet(('a', 'b')), in_loop,
                     'sequences of a|b'),
    'nested': Language(Alphabet(('a', 'b')), in_nested,
                       'b, and a.(x|y) for members x and y'),
    'a_bs': Language(Alphabet(('a', 'b')), in_a_bs,
                     'a followed by b repeated'),
    'small': Language(Alphabet(('a',)), SMALL.__contains__,
                      'a, a.a and a|a'),
    'empty': Language(Alphabet(('a',)), lambda u: False,
                      'no pomset at all'),
}
