"""
pomset-learner
Copyright (C) 2026 InkBridge Networks (legal@inkbridge.io)

pomset-learner © 2026 by InkBridge is licensed under CC BY-NC 4.0. To view a
copy of this license, visit https://creativecommons.org/licenses/by-nc/4.0/

Pomset automata.

A pomset automaton reads letters with its sequential transitions delta and
runs parallel pomsets by forking: gamma maps a state and a multiset of
thread start states (stored as a sorted tuple of state ids, at least two)
to the states reached once every thread has read its share and stopped in
an accepting state. A thread may read the empty pomset.
"""
import functools
import itertools
import logging
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from pomset_learner.errors import FormatError, InvalidBimonoid, \
    NotDepthNilpotent, NotSaturatedWithin
from pomset_learner.pomset import Alphabet, EMPTY, Kind, Op, Term, \
    enumerate_pomsets, letter, par_all, seq_all
from pomset_learner.recogniser import Bimonoid, Recogniser, \
    depth_analysis, generate, require_axioms, validate_axioms

logger = logging.getLogger(__name__)

Relation = frozenset[tuple[int, int]]
ForkKey = tuple[int, ...]

DEAD_STATE = 'dead'


def compose(left: Relation, right: Relation) -> Relation:
    """
    Relational composition: (q, q') with q -left-> x -right-> q'
    """
    successors: dict[int, list[int]] = {}
    for x, y in right:
        successors.setdefault(x, []).append(y)
    return frozenset((q, y) for q, x in left for y in successors.get(x, ()))


def _transitive(pairs: set[tuple[int, int]]) -> set[tuple[int, int]]:
    while True:
        extra = compose(frozenset(pairs), frozenset(pairs)) - pairs
        if not extra:
            return pairs
        pairs |= extra


@dataclass(frozen=True)
class PomsetAutomaton:  # pylint: disable=too-many-instance-attributes
    """
    States with letter transitions and fork transitions

    attrs:
        alphabet: letters read
        states: state names, indexed by state id
        initial: initial state ids
        accepting: accepting state ids
        delta: (state, letter) -> successor states
        gamma: (state, sorted thread states) -> states reached after joining
    """
    alphabet: Alphabet
    states: tuple[str, ...]
    initial: frozenset[int]
    accepting: frozenset[int]
    delta: dict[tuple[int, str], frozenset[int]] = field(hash=False)
    gamma: dict[tuple[int, ForkKey], frozenset[int]] = field(hash=False)

    def __post_init__(self):
        size = len(self.states)
        if len(set(self.states)) != size:
            raise ValueError('Duplicate state names')

        def check(q):
            if not 0 <= q < size:
                raise ValueError(f'State id {q} outside the automaton')

        for q in (*self.initial, *self.accepting):
            check(q)
        for (q, symbol), targets in self.delta.items():
            if symbol not in self.alphabet:
                raise ValueError(f'Letter {symbol} is not in the alphabet')
            for x in (q, *targets):
                check(x)

        gamma = {}
        for (q, threads), targets in self.gamma.items():
            if len(threads) < 2:
                raise ValueError(f'Fork from {self.states[q]} launches fewer '
                                 f'than two threads')
            for x in (q, *threads, *targets):
                check(x)
            if targets:
                key = (q, tuple(sorted(threads)))
                gamma[key] = gamma.get(key, frozenset()) | frozenset(targets)
        object.__setattr__(self, 'gamma', gamma)
        object.__setattr__(self, 'delta', {key: frozenset(targets) for
                                           key, targets in self.delta.items()
                                           if targets})

    @property
    def size(self) -> int:  # pylint: disable=missing-function-docstring
        return len(self.states)

    def name(self, state: int) -> str:  # pylint: disable=missing-function-docstring
        return self.states[state]

    @functools.cached_property
    def runs(self) -> 'RunEvaluator':
        """
        Memoised run relations of this automaton; single-threaded use
        """
        return RunEvaluator(self)


class RunEvaluator:
    """
    Computes run relations bottom-up over canonical terms

    A pomset's relation is the least one closed under the rules: letters
    follow delta; a sequential term composes the relations of a prefix and
    the matching suffix; a fork reads its parallel components split over
    the threads, each thread finishing in an accepting state. Forks where
    two or more threads read something recurse on smaller pomsets; forks
    where one thread reads everything, and composition with the empty
    pomset's relation, are closed by iteration.
    """

    def __init__(self, automaton: PomsetAutomaton):
        self.automaton = automaton
        self.forks = sorted((q, threads, targets) for (q, threads), targets
                            in automaton.gamma.items())
        self.arities = sorted({len(threads) for _, threads, _ in self.forks})

        self.memo: dict[Term, Relation] = {}
        self.finishing: dict[Term, frozenset[int]] = {}

        self.unit = self.__unit()
        self.memo[EMPTY] = self.unit
        self.unit_finishers = self.__finishers(self.unit)

    def __finishers(self, relation: Relation) -> frozenset[int]:
        return frozenset(q for q, f in relation
                         if f in self.automaton.accepting)

    def __unit(self) -> Relation:
        pairs = {(q, q) for q in range(self.automaton.size)}
        while True:
            finishers = self.__finishers(frozenset(pairs))
            grown = set(pairs)
            for q, threads, targets in self.forks:
                if all(r in finishers for r in threads):
                    grown |= {(q, t) for t in targets}
            grown = _transitive(grown)
            if grown == pairs:
                return frozenset(pairs)
            pairs = grown

    def finishers(self, u: Term) -> frozenset[int]:
        """
        States from which reading u can stop in an accepting state
        """
        if u not in self.finishing:
            self.finishing[u] = self.__finishers(self.relation(u))
        return self.finishing[u]

    def relation(self, u: Term) -> Relation:
        """
        All (q, q') such that reading u can lead from q to q'
        """
        if u in self.memo:
            return self.memo[u]

        match u.kind:
            case Kind.LETTER:
                base = {(q, t) for (q, symbol), targets
                        in self.automaton.delta.items()
                        if symbol == u.symbol for t in targets}
            case Kind.SEQ:
                base = set()
                for cut in range(1, len(u.parts)):
                    base |= compose(self.relation(seq_all(u.parts[:cut])),
                                    self.relation(seq_all(u.parts[cut:])))
            case Kind.PAR:
                base = self.__spread(u.parts)
            case _:
                raise ValueError(f'Cannot run context {u}')

        relation = self.__close(base)
        self.memo[u] = relation
        return relation

    def __spread(self, components: tuple[Term, ...]) -> set[tuple[int, int]]:
        """
        Fork steps where at least two threads read part of the components
        """
        pairs = set()
        for arity in self.arities:
            forks = [fork for fork in self.forks if len(fork[1]) == arity]
            seen = set()
            for slots in itertools.product(range(arity),
                                           repeat=len(components)):
                if len(set(slots)) < 2:
                    continue
                blocks = tuple(par_all(c for c, slot in zip(components, slots)
                                       if slot == thread)
                               for thread in range(arity))
                if blocks in seen:
                    continue
                seen.add(blocks)

                finishers = [self.finishers(block) for block in blocks]
                for q, threads, targets in forks:
                    if all(r in finishing
                           for r, finishing in zip(threads, finishers)):
                        pairs |= {(q, t) for t in targets}
        return pairs

    def __close(self, base: set[tuple[int, int]]) -> Relation:
        pairs = set(base)
        while True:
            current = frozenset(pairs)
            grown = set(pairs)
            grown |= compose(self.unit, current)
            grown |= compose(current, self.unit)

            finishers = self.__finishers(current)
            for q, threads, targets in self.forks:
                for slot, r in enumerate(threads):
                    rest = threads[:slot] + threads[slot + 1:]
                    if r in finishers and \
                            all(x in self.unit_finishers for x in rest):
                        grown |= {(q, t) for t in targets}
                        break

            if grown == pairs:
                return current
            pairs = grown

    def fork_product(self, left: Relation, right: Relation) -> Relation:
        """
        Pairs reached by a binary fork whose threads finish the two relations
        """
        left_finish = self.__finishers(left)
        right_finish = self.__finishers(right)
        return frozenset(
            (q, t) for q, threads, targets in self.forks
            if len(threads) == 2 and (
                (threads[0] in left_finish and threads[1] in right_finish) or
                (threads[1] in left_finish and threads[0] in right_finish))
            for t in targets)


@dataclass(frozen=True)
class RunRelation:
    """
    Run relation of a pomset

    attrs:
        pomset: the pomset read
        pairs: state id pairs (q, q') such that q reads the pomset into q'
    """
    pomset: Term
    pairs: Relation

    def __contains__(self, pair: tuple[int, int]) -> bool:
        return pair in self.pairs


def run_relation(automaton: PomsetAutomaton, u: Term) -> RunRelation:
    """
    Runs of an automaton on a pomset

    Raises:
        UnknownLetter if u mentions a letter outside the alphabet
    """
    automaton.alphabet.check(u)
    return RunRelation(u, automaton.runs.relation(u))


def accepts(automaton: PomsetAutomaton, u: Term) -> bool:
    """
    Whether some run leads from an initial to an accepting state
    """
    return any(q in automaton.initial and t in automaton.accepting
               for q, t in run_relation(automaton, u).pairs)


@dataclass(frozen=True)
class SaturationViolation:
    """
    A run on left op right from source to target that does not factor
    """
    source: str
    left: Term
    right: Term
    op: Op
    target: str

    def __str__(self) -> str:
        return (f'{self.source} reads ({self.left}){self.op.value}'
                f'({self.right}) into {self.target} without a '
                f'{"intermediate state" if self.op is Op.SEQ else "fork"}')


@dataclass(frozen=True)
class SaturationReport:
    """
    Outcome of check_saturated(); only pomsets up to bound nodes are checked
    """
    bound: int
    violation: Optional[SaturationViolation] = None

    @property
    def ok(self) -> bool:  # pylint: disable=missing-function-docstring
        return self.violation is None

    def __str__(self) -> str:
        if self.ok:
            return f'ok (bounded at {self.bound} nodes)'
        return str(self.violation)


def _splits(w: Term) -> list[tuple[Term, Op, Term]]:
    """
    Ways of writing w as u op v with u and v non-empty, by left part
    """
    if w.kind is Kind.SEQ:
        splits = [(seq_all(w.parts[:cut]), Op.SEQ, seq_all(w.parts[cut:]))
                  for cut in range(1, len(w.parts))]
    elif w.kind is Kind.PAR:
        found = set()
        count = len(w.parts)
        for mask in range(1, 2 ** count - 1):
            u = par_all(w.parts[i] for i in range(count) if mask >> i & 1)
            v = par_all(w.parts[i] for i in range(count)
                        if not mask >> i & 1)
            found.add((u, v) if u.order_key <= v.order_key else (v, u))
        splits = [(u, Op.PAR, v) for u, v in found]
    else:
        splits = []
    return sorted(splits, key=lambda split: (split[0].order_key,
                                             split[2].order_key))


def iter_saturation_violations(automaton: PomsetAutomaton,
                               bound: int) -> Iterator[SaturationViolation]:
    """
    Every saturation violation on pomsets of at most bound nodes

    Pomsets w are visited in enumeration order, then their splits u op v
    by left part.

    Raises:
        ValueError if bound is below 2
    """
    if bound < 2:
        raise ValueError('Saturation bound must be at least 2')

    runs = automaton.runs
    for w in enumerate_pomsets(automaton.alphabet, bound):
        if w.nodes < 2:
            continue
        pairs = runs.relation(w)
        if not pairs:
            continue

        for u, op, v in _splits(w):
            if op is Op.SEQ:
                factored = compose(runs.relation(u), runs.relation(v))
            else:
                factored = runs.fork_product(runs.relation(u),
                                             runs.relation(v))
            for q, t in sorted(pairs - factored):
                yield SaturationViolation(automaton.name(q), u, v, op,
                                          automaton.name(t))


def check_saturated(automaton: PomsetAutomaton,
                    bound: int) -> SaturationReport:
    """
    Screens an automaton for saturation on pomsets up to a node bound

    Returns:
        report with the first violation found, if any
    """
    violation = next(iter_saturation_violations(automaton, bound), None)
    if violation is not None:
        logger.warning(f'Saturation violation: {violation}')
    return SaturationReport(bound, violation)


def _from_recogniser(recogniser: Recogniser,
                     keep_fork: Callable[[int, int, int], bool]
                     ) -> PomsetAutomaton:
    require_axioms(recogniser)
    bimonoid = recogniser.bimonoid
    carrier = range(bimonoid.size)

    delta = {}
    for symbol in recogniser.alphabet:
        image = recogniser.letters[symbol]
        for q in carrier:
            targets = frozenset(t for t in carrier
                                if bimonoid.seq(image, t) == q)
            if targets:
                delta[(q, symbol)] = targets

    gamma = {}
    for r, s in itertools.combinations_with_replacement(carrier, 2):
        joined = bimonoid.par(r, s)
        for q in carrier:
            if not keep_fork(q, r, s):
                continue
            targets = frozenset(t for t in carrier
                                if bimonoid.seq(joined, t) == q)
            if targets:
                gamma[(q, (r, s))] = targets

    return PomsetAutomaton(recogniser.alphabet, bimonoid.elements,
                           recogniser.accepting,
                           frozenset({bimonoid.unit}), delta, gamma)


def recogniser_to_pa(recogniser: Recogniser) -> PomsetAutomaton:
    """
    Saturated automaton with the recogniser's elements as states

    Reading u from q can end in q' exactly when eval(u) ⊙ q' = q; the
    accepting elements are initial and the unit is the only accepting state.

    Raises:
        InvalidBimonoid if the input breaks a bimonoid law
    """
    return _from_recogniser(recogniser, lambda q, r, s: True)


def recogniser_to_fork_acyclic_pa(recogniser: Recogniser) -> PomsetAutomaton:
    """
    Like recogniser_to_pa(), keeping only forks whose threads start strictly
    lower than the forking state in the depth order

    Raises:
        InvalidBimonoid if the input breaks a bimonoid law
        NotDepthNilpotent if the recogniser is not depth-nilpotent
    """
    report = depth_analysis(recogniser)
    if not report.is_depth_nilpotent:
        logger.error(f'Not depth-nilpotent: {report.failure_witness}')
        raise NotDepthNilpotent(report)

    depth = report.depth
    return _from_recogniser(
        recogniser,
        lambda q, r, s: depth[r] < depth[q] and depth[s] < depth[q])


def with_dead_state(automaton: PomsetAutomaton) -> PomsetAutomaton:
    """
    Adds a state with no transitions that is neither initial nor accepting
    """
    name = DEAD_STATE
    while name in automaton.states:
        name += "'"
    return PomsetAutomaton(automaton.alphabet, (*automaton.states, name),
                           automaton.initial, automaton.accepting,
                           dict(automaton.delta), dict(automaton.gamma))


def pa_to_recogniser(automaton: PomsetAutomaton, bound: int = None,
                     limit: int = None) -> Recogniser:
    """
    Recogniser whose elements are the run relations of the automaton

    The automaton must be saturated; this is screened up to bound nodes
    when a bound is given. A dead state is added first so that only the
    empty pomset has the unit relation. Elements are named by their
    smallest witness pomset.

    Args:
        automaton: saturated automaton
        bound: node bound of the saturation screen, or None to skip it
        limit: most relations to generate, default 2^(|Q|^2)

    Returns:
        recogniser of the same language

    Raises:
        NotSaturatedWithin if the screen finds a violation
        ClosureDiverged if more than limit relations are generated
        InvalidBimonoid if the relations do not form a bimonoid
    """
    if bound is not None:
        report = check_saturated(automaton, bound)
        if not report.ok:
            raise NotSaturatedWithin(bound, report.violation)

    augmented = with_dead_state(automaton)
    runs = augmented.runs
    unit = runs.unit

    def operate(op: Op, x: Relation, y: Relation) -> Relation:
        if x == unit:
            return y
        if y == unit:
            return x
        if op is Op.SEQ:
            return compose(x, y)
        return runs.fork_product(x, y)

    seeds = {unit: EMPTY}
    for term in automaton.alphabet.letters():
        seeds.setdefault(runs.relation(term), term)
    if limit is None:
        limit = 2 ** (augmented.size ** 2)
    witnesses = sorted(generate(seeds, operate, limit).items(),
                       key=lambda item: item[1].order_key)

    relations = [relation for relation, _ in witnesses]
    ids = {relation: index for index, relation in enumerate(relations)}

    def table(op):
        return tuple(tuple(ids[operate(op, x, y)] for y in relations)
                     for x in relations)

    bimonoid = Bimonoid(tuple(str(witness) for _, witness in witnesses),
                        ids[unit], table(Op.SEQ), table(Op.PAR))
    report = validate_axioms(bimonoid)
    if not report.ok:
        raise InvalidBimonoid(report)

    logger.info(f'Converted {automaton.size} states into '
                f'{bimonoid.size} elements')
    return Recogniser(
        bimonoid, automaton.alphabet,
        {symbol: ids[runs.relation(letter(symbol))]
         for symbol in automaton.alphabet},
        frozenset(ids[relation] for relation in relations
                  if any(q in automaton.initial and t in automaton.accepting
                         for q, t in relation)))


def support_preorder(automaton: PomsetAutomaton) -> frozenset[tuple[int, int]]:
    """
    Pairs (lower, upper) of the smallest preorder where successors and fork
    thread states sit below the state they are reached from
    """
    below: dict[int, set[int]] = {q: set() for q in range(automaton.size)}
    for (q, _), targets in automaton.delta.items():
        below[q] |= targets
    for (q, threads), targets in automaton.gamma.items():
        below[q] |= targets
        below[q] |= set(threads)

    pairs = set()
    for upper in range(automaton.size):
        seen = {upper}
        pending = [upper]
        while pending:
            for lower in below[pending.pop()]:
                if lower not in seen:
                    seen.add(lower)
                    pending.append(lower)
        pairs |= {(lower, upper) for lower in seen}
    return frozenset(pairs)


@dataclass(frozen=True)
class ForkAcyclicityReport:
    """
    Outcome of is_fork_acyclic()

    attrs:
        witness: forking state, thread state above or equal to it, and the
            fork's thread states, all by name
    """
    witness: Optional[tuple[str, str, tuple[str, ...]]] = None

    @property
    def ok(self) -> bool:  # pylint: disable=missing-function-docstring
        return self.witness is None

    def __str__(self) -> str:
        if self.ok:
            return 'ok'
        q, r, threads = self.witness
        return f'({q}, {r}) with fork [{", ".join(threads)}] from {q}'


def is_fork_acyclic(automaton: PomsetAutomaton) -> ForkAcyclicityReport:
    """
    Checks that no fork starts a thread in a state at or above the fork
    """
    preorder = support_preorder(automaton)
    for q, threads in sorted(automaton.gamma):
        for r in threads:
            if (q, r) in preorder:
                return ForkAcyclicityReport(
                    (automaton.name(q), automaton.name(r),
                     tuple(automaton.name(x) for x in threads)))
    return ForkAcyclicityReport()


def automaton_from_dict(document: dict) -> PomsetAutomaton:
    """
    Builds an automaton from its JSON document

    Raises:
        FormatError if keys are missing, names unknown or forks too small
    """
    if not isinstance(document, dict):
        raise FormatError('document', 'Expected an object')
    for key in ('alphabet', 'states', 'initial', 'accepting', 'delta',
                'gamma'):
        if key not in document:
            raise FormatError(key, 'Missing key')
        if not isinstance(document[key], list):
            raise FormatError(key, 'Expected a list')

    states = tuple(str(state) for state in document['states'])
    ids = {state: index for index, state in enumerate(states)}

    def lookup(where, state):
        if state not in ids:
            raise FormatError(where, f'Unknown state {state!r}')
        return ids[state]

    def lookup_all(where, names):
        if not isinstance(names, list):
            raise FormatError(where, 'Expected a list')
        return [lookup(where, name) for name in names]

    delta = {}
    for index, entry in enumerate(document['delta']):
        where = f'delta[{index}]'
        try:
            key = (lookup(where, entry['from']), str(entry['letter']))
            targets = lookup_all(where, entry['to'])
        except (KeyError, TypeError) as exc:
            raise FormatError(where, f'Malformed transition: {exc}') from exc
        delta[key] = delta.get(key, frozenset()) | frozenset(targets)

    gamma = {}
    for index, entry in enumerate(document['gamma']):
        where = f'gamma[{index}]'
        try:
            threads = tuple(sorted(lookup_all(where, entry['fork'])))
            key = (lookup(where, entry['from']), threads)
            targets = lookup_all(where, entry['to'])
        except (KeyError, TypeError) as exc:
            raise FormatError(where, f'Malformed fork: {exc}') from exc
        if len(threads) < 2:
            raise FormatError(where, 'Forks need at least two threads')
        gamma[key] = gamma.get(key, frozenset()) | frozenset(targets)

    try:
        return PomsetAutomaton(
            Alphabet(tuple(document['alphabet'])), states,
            frozenset(lookup_all('initial', document['initial'])),
            frozenset(lookup_all('accepting', document['accepting'])),
            delta, gamma)
    except (TypeError, ValueError) as exc:
        raise FormatError('document', str(exc)) from exc


def automaton_to_dict(automaton: PomsetAutomaton) -> dict:
    """
    JSON document for an automaton
    """
    name = automaton.states
    return {
        'alphabet': list(automaton.alphabet),
        'states': list(name),
        'initial': [name[q] for q in sorted(automaton.initial)],
        'accepting': [name[q] for q in sorted(automaton.accepting)],
        'delta': [{'from': name[q], 'letter': symbol,
                   'to': [name[t] for t in sorted(targets)]}
                  for (q, symbol), targets in sorted(automaton.delta.items())],
        'gamma': [{'from': name[q], 'fork': [name[r] for r in threads],
                   'to': [name[t] for t in sorted(targets)]}
                  for (q, threads), targets in sorted(automaton.gamma.items())],
    }
