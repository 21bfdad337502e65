"""
pomset-learner
Copyright (C) 2026 InkBridge Networks (legal@inkbridge.io)

pomset-learner © 2026 by InkBridge is licensed under CC BY-NC 4.0. To view a
copy of this license, visit https://creativecommons.org/licenses/by-nc/4.0/

Graphviz export. Accepting states are double circles, initial states get an
arrowhead stub from an empty node, and each fork is a box with dashed edges to
its thread states.
"""
from typing import Union

import jinja2

from pomset_learner.pa import PomsetAutomaton, recogniser_to_pa
from pomset_learner.recogniser import Recogniser


def _gvquote(text) -> str:
    return '"{}"'.format(str(text).replace('"', r'\"'))


environment = jinja2.Environment(
    loader=jinja2.PackageLoader('pomset_learner', 'templates'),
    trim_blocks=True, lstrip_blocks=True, keep_trailing_newline=True)
environment.filters['gvquote'] = _gvquote


def automaton_to_dot(automaton: PomsetAutomaton,
                     name: str = 'automaton') -> str:
    """
    Renders an automaton as a DOT digraph
    """
    states = [{'id': q, 'name': automaton.name(q),
               'initial': q in automaton.initial,
               'accepting': q in automaton.accepting}
              for q in range(automaton.size)]
    moves = [{'source': q, 'letter': symbol, 'target': t}
             for (q, symbol), targets in sorted(automaton.delta.items())
             for t in sorted(targets)]
    forks = [{'index': index, 'source': q, 'threads': threads,
              'targets': sorted(targets)}
             for index, ((q, threads), targets)
             in enumerate(sorted(automaton.gamma.items()))]

    return environment.get_template('pa.dot.j2').render(
        name=name, states=states, moves=moves, forks=forks)


def to_dot(value: Union[Recogniser, PomsetAutomaton]) -> str:
    """
    Renders an automaton, or a recogniser through its saturated automaton
    """
    if isinstance(value, Recogniser):
        return automaton_to_dot(recogniser_to_pa(value), 'recogniser')
    return automaton_to_dot(value)
