"""
pomset-learner
Copyright (C) 2026 InkBridge Networks (legal@inkbridge.io)

pomset-learner © 2026 by InkBridge is licensed under CC BY-NC 4.0. To view a
copy of this license, visit https://creativecommons.org/licenses/by-nc/4.0/

Finite bimonoids and pomset recognisers.

Elements are small integers indexing a parallel table of names; both
operation tables are dense squares, row = left operand.
"""
import functools
import itertools
import logging
import operator
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterator, Optional, TypeVar

from pomset_learner.errors import AlphabetMismatch, ClosureDiverged, \
    FormatError, InvalidBimonoid, UnknownLetter
from pomset_learner.pomset import Alphabet, EMPTY, Kind, Op, Term

logger = logging.getLogger(__name__)

K = TypeVar('K', bound=Hashable)


@dataclass(frozen=True)
class Bimonoid:
    """
    Finite carrier with a sequential and a commutative parallel operation
    sharing a unit

    attrs:
        elements: element names, indexed by element id
        unit: id of the shared unit
        seq_table: seq_table[x][y] is x ⊙ y
        par_table: par_table[x][y] is x ⊛ y
    """
    elements: tuple[str, ...]
    unit: int
    seq_table: tuple[tuple[int, ...], ...]
    par_table: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:  # pylint: disable=missing-function-docstring
        return len(self.elements)

    def seq(self, x: int, y: int) -> int:  # pylint: disable=missing-function-docstring
        return self.seq_table[x][y]

    def par(self, x: int, y: int) -> int:  # pylint: disable=missing-function-docstring
        return self.par_table[x][y]

    def apply(self, op: Op, x: int, y: int) -> int:
        """
        x op y for either operation
        """
        if op is Op.SEQ:
            return self.seq_table[x][y]
        return self.par_table[x][y]

    def index(self, name: str) -> int:
        """
        Element id for a name

        Raises:
            KeyError for unknown names
        """
        try:
            return self.elements.index(name)
        except ValueError as exc:
            raise KeyError(name) from exc


@dataclass(frozen=True)
class Violation:
    """
    One broken bimonoid law with the elements exhibiting it
    """
    law: str
    witness: tuple[str, ...]

    def __str__(self) -> str:
        return f'{self.law} fails at ({", ".join(self.witness)})'


@dataclass(frozen=True)
class AxiomReport:
    """
    Outcome of validate_axioms(); at most one violation per law
    """
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:  # pylint: disable=missing-function-docstring
        return not self.violations

    @property
    def laws(self) -> set[str]:  # pylint: disable=missing-function-docstring
        return {violation.law for violation in self.violations}

    def __str__(self) -> str:
        if self.ok:
            return 'ok'
        return '; '.join(str(violation) for violation in self.violations)


def _shape_violation(bimonoid: Bimonoid) -> Optional[Violation]:
    size = bimonoid.size
    if size == 0:
        return Violation('shape', ('empty carrier',))
    if len(set(bimonoid.elements)) != size:
        return Violation('shape', ('duplicate element names',))
    if not 0 <= bimonoid.unit < size:
        return Violation('shape', ('unit outside carrier',))
    for name, table in (('seq', bimonoid.seq_table),
                        ('par', bimonoid.par_table)):
        if len(table) != size or any(len(row) != size for row in table):
            return Violation('shape', (f'{name} table is not {size}x{size}',))
        if any(not 0 <= cell < size for row in table for cell in row):
            return Violation('shape', (f'{name} table leaves the carrier',))
    return None


def iter_violations(bimonoid: Bimonoid) -> Iterator[Violation]:
    """
    Yields the first witness of every broken law, in a fixed law order
    """
    shape = _shape_violation(bimonoid)
    if shape is not None:
        yield shape
        return

    name = bimonoid.elements
    carrier = range(bimonoid.size)
    one = bimonoid.unit
    seqt, part = bimonoid.seq_table, bimonoid.par_table

    for x in carrier:
        if seqt[one][x] != x or seqt[x][one] != x:
            yield Violation('seq-unit', (name[x],))
            break
    for x in carrier:
        if part[one][x] != x or part[x][one] != x:
            yield Violation('par-unit', (name[x],))
            break
    for x, y in itertools.combinations(carrier, 2):
        if part[x][y] != part[y][x]:
            yield Violation('par-commutativity', (name[x], name[y]))
            break
    for law, table in (('seq-associativity', seqt),
                       ('par-associativity', part)):
        for x, y, z in itertools.product(carrier, repeat=3):
            if table[table[x][y]][z] != table[x][table[y][z]]:
                yield Violation(law, (name[x], name[y], name[z]))
                break


def validate_axioms(bimonoid: Bimonoid) -> AxiomReport:
    """
    Exhaustively checks the unit, commutativity and associativity laws

    Args:
        bimonoid: tables to check

    Returns:
        report listing the first witness per broken law
    """
    return AxiomReport(tuple(iter_violations(bimonoid)))


@dataclass(frozen=True)
class Recogniser:
    """
    Bimonoid with a letter interpretation and an accepting subset

    attrs:
        bimonoid: the finite bimonoid
        alphabet: letters read by the recogniser
        letters: element id interpreting each letter
        accepting: accepting element ids
    """
    bimonoid: Bimonoid
    alphabet: Alphabet
    letters: dict[str, int] = field(hash=False)
    accepting: frozenset[int]

    def __post_init__(self):
        missing = [symbol for symbol in self.alphabet
                   if symbol not in self.letters]
        if missing:
            raise ValueError(f'No interpretation for letters {missing}')
        outside = [m for m in (*self.letters.values(), *self.accepting)
                   if not 0 <= m < self.bimonoid.size]
        if outside:
            raise ValueError(f'Element ids {outside} outside the carrier')

    @property
    def size(self) -> int:  # pylint: disable=missing-function-docstring
        return self.bimonoid.size

    def name(self, element: int) -> str:  # pylint: disable=missing-function-docstring
        return self.bimonoid.elements[element]


def require_axioms(recogniser: Recogniser) -> None:
    """
    Raises InvalidBimonoid unless the recogniser's bimonoid obeys every law
    """
    report = validate_axioms(recogniser.bimonoid)
    if not report.ok:
        logger.error(f'Invalid bimonoid: {report}')
        raise InvalidBimonoid(report)


def evaluate(recogniser: Recogniser, u: Term) -> int:
    """
    Image of a pomset under the free extension of the letter interpretation

    Args:
        recogniser: recogniser to evaluate in
        u: pomset

    Returns:
        element id

    Raises:
        UnknownLetter if u mentions a letter outside the alphabet
    """
    bimonoid = recogniser.bimonoid

    def walk(term: Term) -> int:
        match term.kind:
            case Kind.EMPTY:
                return bimonoid.unit
            case Kind.LETTER:
                if term.symbol not in recogniser.letters:
                    raise UnknownLetter(term.symbol,
                                        recogniser.alphabet.symbols)
                return recogniser.letters[term.symbol]
            case Kind.SEQ:
                return functools.reduce(bimonoid.seq, map(walk, term.parts))
            case Kind.PAR:
                return functools.reduce(bimonoid.par, map(walk, term.parts))
        raise ValueError(f'Cannot evaluate context {term}')

    return walk(u)


def accepts(recogniser: Recogniser, u: Term) -> bool:  # pylint: disable=missing-function-docstring
    return evaluate(recogniser, u) in recogniser.accepting


def generate(seeds: dict[K, Term], compose: Callable[[Op, K, K], K],
             limit: int = None) -> dict[K, Term]:
    """
    Closes a set of seeds under both operations, keeping a witness each

    Witnesses have minimal node count. Among equally small candidates the
    one with the least order_key is kept, but only candidates composed from
    the kept witnesses of smaller elements are compared, so the witness is
    not always the first pomset of that image in enumeration order.

    Args:
        seeds: initial elements with their witness pomsets
        compose: composes two known elements with an operation
        limit: maximum number of elements, or None

    Returns:
        every generated element with its witness

    Raises:
        ClosureDiverged if more than limit elements are generated
    """
    witnesses = dict(seeds)
    composed: dict[tuple[Op, K, K], K] = {}

    changed = True
    while changed:
        changed = False
        known = sorted(witnesses.items(), key=lambda item: item[1].order_key)
        for (x, u), (y, v) in itertools.product(known, repeat=2):
            for op in Op:
                key = (op, x, y)
                if key not in composed:
                    composed[key] = compose(op, x, y)
                z = composed[key]

                best = witnesses.get(z)
                if best is not None and best.nodes < u.nodes + v.nodes:
                    continue
                w = op.compose(u, v)
                if best is None or w.order_key < best.order_key:
                    witnesses[z] = w
                    changed = True

        if limit is not None and len(witnesses) > limit:
            raise ClosureDiverged(limit)
    return witnesses


def reachable(recogniser: Recogniser) -> dict[int, Term]:
    """
    Elements that are the image of some pomset, with a smallest such pomset

    Returns:
        mapping element id -> witness pomset
    """
    seeds = {recogniser.bimonoid.unit: EMPTY}
    for symbol, term in zip(recogniser.alphabet, recogniser.alphabet.letters()):
        seeds.setdefault(recogniser.letters[symbol], term)
    return generate(
        seeds, lambda op, x, y: recogniser.bimonoid.apply(op, x, y))


def _product_witnesses(left: Recogniser,
                       right: Recogniser) -> dict[tuple[int, int], Term]:
    if left.alphabet != right.alphabet:
        raise AlphabetMismatch(left.alphabet.symbols, right.alphabet.symbols)

    seeds = {(left.bimonoid.unit, right.bimonoid.unit): EMPTY}
    for symbol, term in zip(left.alphabet, left.alphabet.letters()):
        seeds.setdefault((left.letters[symbol], right.letters[symbol]), term)

    def compose(op, x, y):
        return (left.bimonoid.apply(op, x[0], y[0]),
                right.bimonoid.apply(op, x[1], y[1]))

    return generate(seeds, compose)


@dataclass(frozen=True)
class EquivalenceResult:
    """
    Answer to an equivalence question

    attrs:
        counterexample: a pomset classified differently, or None if equal
        bounded: True when equality was only checked up to a node bound
    """
    counterexample: Optional[Term] = None
    bounded: bool = False

    @property
    def equal(self) -> bool:  # pylint: disable=missing-function-docstring
        return self.counterexample is None


def equivalence(left: Recogniser, right: Recogniser) -> EquivalenceResult:
    """
    Decides whether two recognisers accept the same language

    Explores the reachable part of the product bimonoid; a reachable pair
    that disagrees on acceptance yields its witness as counterexample.

    Args:
        left: first recogniser
        right: second recogniser over the same alphabet

    Returns:
        EquivalenceResult, with the smallest disagreeing witness if any

    Raises:
        AlphabetMismatch if the alphabets differ
    """
    pairs = _product_witnesses(left, right)
    disagreeing = [witness for (x, y), witness in pairs.items()
                   if (x in left.accepting) != (y in right.accepting)]
    if not disagreeing:
        return EquivalenceResult()
    return EquivalenceResult(min(disagreeing, key=lambda t: t.order_key))


PRODUCT_ACCEPTANCE = {
    'intersection': operator.and_,
    'union': operator.or_,
    'difference': operator.xor,
    'left': lambda x, _: x,
}


def product(left: Recogniser, right: Recogniser,
            accept: Callable[[bool, bool], bool]) -> Recogniser:
    """
    Reachable product of two recognisers

    Args:
        left: first recogniser
        right: second recogniser over the same alphabet
        accept: decides acceptance of a pair from its components' acceptance

    Returns:
        recogniser over element pairs, ordered by witness

    Raises:
        AlphabetMismatch if the alphabets differ
    """
    pairs = sorted(_product_witnesses(left, right).items(),
                   key=lambda item: item[1].order_key)
    ids = {pair: index for index, (pair, _) in enumerate(pairs)}
    carrier = [pair for pair, _ in pairs]

    def table(op):
        return tuple(tuple(ids[(left.bimonoid.apply(op, x[0], y[0]),
                                right.bimonoid.apply(op, x[1], y[1]))]
                           for y in carrier) for x in carrier)

    bimonoid = Bimonoid(
        tuple(f'({left.name(x)},{right.name(y)})' for x, y in carrier),
        ids[(left.bimonoid.unit, right.bimonoid.unit)],
        table(Op.SEQ), table(Op.PAR))
    return Recogniser(
        bimonoid, left.alphabet,
        {symbol: ids[(left.letters[symbol], right.letters[symbol])]
         for symbol in left.alphabet},
        frozenset(ids[(x, y)] for x, y in carrier
                  if accept(x in left.accepting, y in right.accepting)))


def _refine(recogniser: Recogniser, domain: list[int]) -> dict[int, int]:
    """
    Coarsest partition of a sub-bimonoid that respects acceptance and the
    one-step experiments m ⊙ x, x ⊙ m and m ⊛ x
    """
    bimonoid = recogniser.bimonoid
    block = {m: int(m in recogniser.accepting) for m in domain}
    count = len(set(block.values()))
    while True:
        signatures: dict[tuple, int] = {}
        refined = {}
        for m in domain:
            signature = (
                block[m],
                tuple(block[bimonoid.seq(m, x)] for x in domain),
                tuple(block[bimonoid.seq(x, m)] for x in domain),
                tuple(block[bimonoid.par(m, x)] for x in domain),
            )
            refined[m] = signatures.setdefault(signature, len(signatures))
        if len(signatures) == count:
            return refined
        block, count = refined, len(signatures)


def minimize(recogniser: Recogniser) -> Recogniser:
    """
    Smallest recogniser of the same language

    Drops unreachable elements, then merges elements no context separates.

    Raises:
        InvalidBimonoid if the input breaks a bimonoid law
    """
    require_axioms(recogniser)
    bimonoid = recogniser.bimonoid

    domain = sorted(reachable(recogniser))
    block = _refine(recogniser, domain)

    representatives: dict[int, int] = {}
    for m in domain:
        representatives.setdefault(block[m], m)
    reps = [representatives[b] for b in range(len(representatives))]

    def table(op):
        return tuple(tuple(block[bimonoid.apply(op, x, y)] for y in reps)
                     for x in reps)

    logger.info(f'Minimized {bimonoid.size} elements to {len(reps)}')
    return Recogniser(
        Bimonoid(tuple(bimonoid.elements[m] for m in reps),
                 block[bimonoid.unit], table(Op.SEQ), table(Op.PAR)),
        recogniser.alphabet,
        {symbol: block[m] for symbol, m in recogniser.letters.items()},
        frozenset(block[m] for m in reps if m in recogniser.accepting))


@dataclass(frozen=True)
class MinimalityReport:
    """
    Outcome of is_minimal(); names the first obstruction found

    attrs:
        unreachable: name of an element no pomset reaches
        merged: names of two reachable elements no context separates
    """
    unreachable: Optional[str] = None
    merged: Optional[tuple[str, str]] = None

    @property
    def ok(self) -> bool:  # pylint: disable=missing-function-docstring
        return self.unreachable is None and self.merged is None

    def __str__(self) -> str:
        if self.unreachable is not None:
            return f'{self.unreachable} is unreachable'
        if self.merged is not None:
            return f'{self.merged[0]} and {self.merged[1]} are inseparable'
        return 'ok'


def is_minimal(recogniser: Recogniser) -> MinimalityReport:
    """
    Checks that every element is reachable and all elements are separable

    Raises:
        InvalidBimonoid if the input breaks a bimonoid law
    """
    require_axioms(recogniser)
    reach = reachable(recogniser)
    for m in range(recogniser.size):
        if m not in reach:
            return MinimalityReport(unreachable=recogniser.name(m))

    block = _refine(recogniser, list(range(recogniser.size)))
    first: dict[int, int] = {}
    for m in range(recogniser.size):
        if block[m] in first:
            return MinimalityReport(
                merged=(recogniser.name(first[block[m]]), recogniser.name(m)))
        first[block[m]] = m
    return MinimalityReport()


@dataclass(frozen=True)
class DepthReport:
    """
    Outcome of depth_analysis()

    attrs:
        is_depth_nilpotent: all four conditions hold
        zero: the absorbing, rejecting element of condition (ii), if any
        strict_below: pairs (s, t) with s ≺ t, transitively closed
        depth: longest ≺-chain length starting at each element; only
            filled in when ≺ is acyclic
        conditions: outcome of conditions 'i' to 'iv'
        failure_witness: description of the first failed condition
    """
    is_depth_nilpotent: bool
    zero: Optional[int]
    strict_below: frozenset[tuple[int, int]]
    depth: dict[int, int] = field(hash=False)
    conditions: dict[str, bool] = field(hash=False)
    failure_witness: Optional[str] = None

    @property
    def max_chain(self) -> int:  # pylint: disable=missing-function-docstring
        return max(self.depth.values(), default=0)


def _generating_pairs(bimonoid: Bimonoid) -> set[tuple[int, int]]:
    """
    Pairs (s, t) with s = u ⊙ (v ⊛ (w ⊙ t ⊙ x)) ⊙ y where the fork
    v ⊛ (w ⊙ t ⊙ x) differs from w ⊙ t ⊙ x
    """
    carrier = range(bimonoid.size)
    seqt, part = bimonoid.seq_table, bimonoid.par_table

    pairs = set()
    for t in carrier:
        framed = {seqt[seqt[w][t]][x] for w in carrier for x in carrier}
        forked = {part[v][z] for z in framed for v in carrier
                  if part[v][z] != z}
        for p in forked:
            for u in carrier:
                for y in carrier:
                    pairs.add((seqt[seqt[u][p]][y], t))
    return pairs


def _nonempty_images(recogniser: Recogniser, reach: set[int]) -> set[int]:
    """
    Elements that are the image of some non-empty pomset
    """
    bimonoid = recogniser.bimonoid
    images = set(recogniser.letters.values())
    pending = list(images)
    while pending:
        x = pending.pop()
        for y in reach:
            for z in (bimonoid.seq(x, y), bimonoid.seq(y, x),
                      bimonoid.par(x, y)):
                if z not in images:
                    images.add(z)
                    pending.append(z)
    return images


def depth_analysis(recogniser: Recogniser) -> DepthReport:
    """
    Computes ≺ and its chain lengths and checks depth-nilpotency

    The conditions are: (i) ≺ is acyclic; (ii) some rejecting element 0
    absorbs every element under ⊛; (iii) s ⊛ t = t only when s is the unit
    or t is 0; (iv) only the empty pomset evaluates to the unit.

    Raises:
        InvalidBimonoid if the input breaks a bimonoid law
    """
    require_axioms(recogniser)
    bimonoid = recogniser.bimonoid
    name = bimonoid.elements
    carrier = range(bimonoid.size)

    generating = _generating_pairs(bimonoid)
    below = {s: {t for (x, t) in generating if x == s} for s in carrier}
    for k in carrier:
        for s in carrier:
            if k in below[s]:
                below[s] |= below[k]
    strict_below = frozenset((s, t) for s in carrier for t in below[s])

    conditions = {}
    witnesses = []

    cyclic = [s for s in carrier if s in below[s]]
    conditions['i'] = not cyclic
    if cyclic:
        witnesses.append(f'condition (i): {name[cyclic[0]]} ≺ '
                         f'{name[cyclic[0]]}')

    zero = next((m for m in carrier if m not in recogniser.accepting and
                 all(bimonoid.par(s, m) == m for s in carrier)), None)
    conditions['ii'] = zero is not None
    if zero is None:
        witnesses.append('condition (ii): no rejecting element absorbs ⊛')

    cancelling = next(((s, t) for s in carrier for t in carrier
                       if bimonoid.par(s, t) == t and s != bimonoid.unit
                       and t != zero), None)
    conditions['iii'] = cancelling is None
    if cancelling is not None:
        s, t = cancelling
        witnesses.append(f'condition (iii): {name[s]} ⊛ {name[t]} = {name[t]}')

    images = _nonempty_images(recogniser, set(reachable(recogniser)))
    conditions['iv'] = bimonoid.unit not in images
    if not conditions['iv']:
        witnesses.append(f'condition (iv): a non-empty pomset evaluates to '
                         f'{name[bimonoid.unit]}')

    depth: dict[int, int] = {}
    if conditions['i']:
        successors = {s: [t for (x, t) in generating if x == s]
                      for s in carrier}

        def longest(s):
            if s not in depth:
                depth[s] = 1 + max((longest(t) for t in successors[s]),
                                   default=0)
            return depth[s]

        for s in carrier:
            longest(s)

    report = DepthReport(all(conditions.values()), zero, strict_below, depth,
                         conditions, witnesses[0] if witnesses else None)
    logger.info(f'Depth analysis: {conditions}')
    return report


def recogniser_from_dict(document: dict, validate: bool = True) -> Recogniser:
    """
    Builds a recogniser from its JSON document

    Args:
        document: decoded JSON object
        validate: reject documents whose tables break a bimonoid law

    Returns:
        recogniser

    Raises:
        FormatError if keys are missing or names unknown
        InvalidBimonoid if validate is set and a law fails
    """
    if not isinstance(document, dict):
        raise FormatError('document', 'Expected an object')
    for key in ('alphabet', 'elements', 'unit', 'seq', 'par', 'i',
                'accepting'):
        if key not in document:
            raise FormatError(key, 'Missing key')
    for key in ('alphabet', 'elements', 'accepting'):
        if not isinstance(document[key], list):
            raise FormatError(key, 'Expected a list')

    elements = tuple(str(element) for element in document['elements'])
    ids = {element: index for index, element in enumerate(elements)}

    def lookup(where, element_name):
        if element_name not in ids:
            raise FormatError(where, f'Unknown element {element_name!r}')
        return ids[element_name]

    def table(key):
        rows = document[key]
        if not isinstance(rows, list) or len(rows) != len(elements):
            raise FormatError(key, f'Expected {len(elements)} rows')
        cells = []
        for x, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != len(elements):
                raise FormatError(f'{key}[{x}]',
                                  f'Expected {len(elements)} columns')
            cells.append(tuple(lookup(f'{key}[{x}][{y}]', cell)
                               for y, cell in enumerate(row)))
        return tuple(cells)

    try:
        alphabet = Alphabet(tuple(document['alphabet']))
    except (TypeError, ValueError) as exc:
        raise FormatError('alphabet', str(exc)) from exc

    bimonoid = Bimonoid(elements, lookup('unit', document['unit']),
                        table('seq'), table('par'))
    if not isinstance(document['i'], dict):
        raise FormatError('i', 'Expected an object')
    letters = {symbol: lookup(f'i.{symbol}', element)
               for symbol, element in document['i'].items()}
    accepting = frozenset(lookup('accepting', element)
                          for element in document['accepting'])

    if validate:
        report = validate_axioms(bimonoid)
        if not report.ok:
            raise InvalidBimonoid(report)

    try:
        return Recogniser(bimonoid, alphabet, letters, accepting)
    except ValueError as exc:
        raise FormatError('i', str(exc)) from exc


def recogniser_to_dict(recogniser: Recogniser) -> dict:
    """
    JSON document for a recogniser
    """
    bimonoid = recogniser.bimonoid
    name = bimonoid.elements
    return {
        'alphabet': list(recogniser.alphabet),
        'elements': list(name),
        'unit': name[bimonoid.unit],
        'seq': [[name[cell] for cell in row] for row in bimonoid.seq_table],
        'par': [[name[cell] for cell in row] for row in bimonoid.par_table],
        'i': {symbol: name[recogniser.letters[symbol]]
              for symbol in recogniser.alphabet},
        'accepting': [name[m] for m in sorted(recogniser.accepting)],
    }
