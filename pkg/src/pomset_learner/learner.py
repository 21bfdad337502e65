"""
pomset-learner
Copyright (C) 2026 InkBridge Networks (legal@inkbridge.io)

pomset-learner © 2026 by InkBridge is licensed under CC BY-NC 4.0. To view a
copy of this license, visit https://creativecommons.org/licenses/by-nc/4.0/

Observation-table learner for pomset recognisers.

The table is indexed by row pomsets S and column contexts E. Every member of
S other than 1 and the letters was added from ext(S) and keeps the pair of
members it was composed from. The learner repairs closedness and
associativity defects, builds a hypothesis, repairs compatibility defects
and then asks the teacher for a counterexample, until the teacher agrees.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Iterator, Optional, TextIO, Union

from pomset_learner.errors import DefectPresent, NotClosed, \
    TeacherInconsistent
from pomset_learner.pomset import Alphabet, EMPTY, HOLE, Kind, Op, Split, \
    Term, decompose, plug, plug_context
from pomset_learner.recogniser import Bimonoid, Recogniser, accepts
from pomset_learner.teachers.base import Teacher

logger = logging.getLogger(__name__)

# Membership queries stay below QUERY_ENVELOPE * (n^3 + m*n + k*n)
QUERY_ENVELOPE = 6


@dataclass(frozen=True)
class ClosednessDefect:
    """
    A composite whose row is not the row of any member of S
    """
    t: Term


@dataclass(frozen=True)
class AssociativityDefect:  # pylint: disable=too-many-instance-attributes
    """
    Members s1, s2, s3 for which (s1 op s2) op s3 and s1 op (s2 op s3) get
    different rows through the representatives sl and sr, differing at e
    """
    op: Op
    s1: Term
    s2: Term
    s3: Term
    sl: Term
    sr: Term
    e: Term


@dataclass(frozen=True)
class CompatibilityDefect:
    """
    A recorded cell e[s] that the hypothesis classifies differently
    """
    s: Term
    e: Term


Defect = Union[ClosednessDefect, AssociativityDefect, CompatibilityDefect]


@dataclass
class LearnStats:
    """
    Query accounting of a learning run

    attrs:
        membership_queries: distinct membership queries posed
        equivalence_queries: equivalence queries posed
        max_counterexample_ops: most compositions in any counterexample (m)
        final_carrier: size of the learned recogniser (n)
        alphabet_size: number of letters (k)
        bounded: an equivalence answer was only checked up to a node bound
    """
    membership_queries: int = 0
    equivalence_queries: int = 0
    max_counterexample_ops: int = 0
    final_carrier: int = 0
    alphabet_size: int = 0
    bounded: bool = False

    def envelope(self, constant: int = QUERY_ENVELOPE) -> int:
        """
        Upper bound on membership queries for this run's n, m and k
        """
        n, m, k = self.final_carrier, self.max_counterexample_ops, \
            self.alphabet_size
        return constant * (n ** 3 + m * n + k * n)

    def within_envelope(self, constant: int = QUERY_ENVELOPE) -> bool:  # pylint: disable=missing-function-docstring
        return self.membership_queries <= self.envelope(constant)

    def __str__(self) -> str:
        line = (f'n={self.final_carrier} k={self.alphabet_size} '
                f'm={self.max_counterexample_ops} '
                f'mq={self.membership_queries} eq={self.equivalence_queries}')
        if self.bounded:
            line += ' bounded'
        return line


class Transcript:  # pylint: disable=too-few-public-methods
    """
    Line-oriented record of a learning run
    """

    def __init__(self, stream: Optional[TextIO] = None):
        self.stream = stream

    def record(self, line: str) -> None:
        """
        Writes one transcript line
        """
        logger.debug(line)
        if self.stream is not None:
            self.stream.write(f'{line}\n')


class MembershipCache:  # pylint: disable=too-few-public-methods
    """
    Membership answers of a run; the teacher is asked at most once per pomset
    """

    def __init__(self, teacher: Teacher, transcript: Transcript):
        self.teacher = teacher
        self.transcript = transcript
        self.answers: dict[Term, bool] = {}

    @property
    def queries(self) -> int:  # pylint: disable=missing-function-docstring
        return len(self.answers)

    def __call__(self, u: Term) -> bool:
        if u not in self.answers:
            answer = bool(self.teacher.membership(u))
            self.answers[u] = answer
            self.transcript.record(f'MQ {u} -> {int(answer)}')
        return self.answers[u]


class ObservationTable:
    """
    Rows S, columns E and the cells e[t] for t in S and ext(S)

    attrs:
        members: S in insertion order, starting with 1
        decompositions: for composite members, the members they were
            composed from
        contexts: E in insertion order, starting with the hole
        cells: answers already recorded, keyed by (t, e)
    """

    def __init__(self, alphabet: Alphabet,
                 membership: Callable[[Term], bool],
                 transcript: Transcript = None):
        self.alphabet = alphabet
        self.membership = membership
        self.transcript = transcript or Transcript()

        self.members: list[Term] = [EMPTY]
        self.decompositions: dict[Term, tuple[Term, Op, Term]] = {}
        self.contexts: list[Term] = [HOLE]
        self.cells: dict[tuple[Term, Term], bool] = {}

        self.__origins = None
        self.__representatives = None

    def __invalidate(self) -> None:
        self.__origins = None
        self.__representatives = None

    def cell(self, t: Term, e: Term) -> bool:
        """
        Whether e[t] is in the language; asked once, then kept
        """
        key = (t, e)
        if key not in self.cells:
            self.cells[key] = self.membership(plug(e, t))
        return self.cells[key]

    def row(self, t: Term) -> tuple[bool, ...]:
        """
        Cells of t over the columns, in column order
        """
        return tuple(self.cell(t, e) for e in self.contexts)

    def __ext_origins(self) -> dict[Term, Optional[tuple[Term, Op, Term]]]:
        if self.__origins is None:
            origins = {}
            for term in self.alphabet.letters():
                origins.setdefault(term, None)
            for s1, s2 in itertools.product(self.members, repeat=2):
                for op in Op:
                    origins.setdefault(op.compose(s1, s2), (s1, op, s2))
            self.__origins = origins
        return self.__origins

    def ext(self) -> list[Term]:
        """
        Letters and all binary compositions of members, in enumeration order
        """
        return sorted(self.__ext_origins(), key=lambda t: t.order_key)

    def in_ext(self, t: Term) -> bool:  # pylint: disable=missing-function-docstring
        return t in self.__ext_origins()

    def ordered_members(self) -> list[Term]:
        """
        Members of S in enumeration order, the scan order for defects
        """
        return sorted(self.members, key=lambda t: t.order_key)

    def representatives(self) -> dict[tuple[bool, ...], Term]:
        """
        Row of each member of S, mapped back to the member
        """
        if self.__representatives is None:
            self.__representatives = {self.row(s): s for s in self.members}
        return self.__representatives

    def representative(self, t: Term) -> Term:
        """
        The member of S sharing t's row

        Raises:
            NotClosed if no member has that row
        """
        found = self.representatives().get(self.row(t))
        if found is None:
            raise NotClosed(f'No member of S has the row of {t}')
        return found

    def is_sharp(self) -> bool:
        """
        Distinct members of S have distinct rows
        """
        return len(self.representatives()) == len(self.members)

    def is_ext_generated(self) -> bool:
        """
        Every member is 1, a letter, or composed from two members
        """
        for s in self.members:
            if s.kind in (Kind.EMPTY, Kind.LETTER):
                continue
            origin = self.decompositions.get(s)
            if origin is None:
                return False
            s1, op, s2 = origin
            if s1 not in self.members or s2 not in self.members \
                    or op.compose(s1, s2) != s:
                return False
        return True

    def add_row(self, t: Term) -> None:
        """
        Moves a composite from ext(S) into S, recording its decomposition
        """
        origins = self.__ext_origins()
        if t not in origins:
            raise ValueError(f'{t} is not in ext(S)')
        if t in self.members:
            raise ValueError(f'{t} is already in S')

        if origins[t] is not None:
            self.decompositions[t] = origins[t]
        self.members.append(t)
        self.__invalidate()
        self.transcript.record(f'ADD-ROW {t}')
        logger.info(f'Added row {t}, {len(self.members)} rows')

    def add_column(self, e: Term) -> None:
        """
        Adds a context to E

        Raises:
            TeacherInconsistent if the context is already a column
        """
        if not e.is_context:
            raise ValueError(f'{e} is not a context')
        if e in self.contexts:
            raise TeacherInconsistent(f'Column {e} is already present')

        self.contexts.append(e)
        self.__invalidate()
        self.transcript.record(f'ADD-COL {e}')
        logger.info(f'Added column {e}, {len(self.contexts)} columns')

    def find_closedness_defect(self) -> Optional[ClosednessDefect]:
        """
        First composite in ext(S) whose row no member of S has
        """
        rows = self.representatives()
        for t in self.ext():
            if self.row(t) not in rows:
                return ClosednessDefect(t)
        return None

    def check_associativity(self, op: Op, s1: Term, s2: Term,
                            s3: Term) -> Optional[AssociativityDefect]:
        """
        Compares (s1 op s2) op s3 and s1 op (s2 op s3) through the
        representatives of the inner compositions

        Raises:
            NotClosed if an inner composition has no representative
        """
        sl = self.representative(op.compose(s1, s2))
        sr = self.representative(op.compose(s2, s3))
        left = self.row(op.compose(sl, s3))
        right = self.row(op.compose(s1, sr))
        for e, x, y in zip(self.contexts, left, right):
            if x != y:
                return AssociativityDefect(op, s1, s2, s3, sl, sr, e)
        return None

    def find_associativity_defect(
            self, op: Op) -> Optional[AssociativityDefect]:
        """
        First triple of members, in scan order, breaking associativity of op
        """
        members = self.ordered_members()
        for s1, s2, s3 in itertools.product(members, repeat=3):
            defect = self.check_associativity(op, s1, s2, s3)
            if defect is not None:
                return defect
        return None

    def fix_associativity(self, defect: AssociativityDefect) -> Term:
        """
        Adds the column separating the rows that caused the defect

        Returns:
            the added context
        """
        op, e = defect.op, defect.e
        column = self.contexts.index(e)
        b = self.membership(
            plug(e, op.compose(op.compose(defect.s1, defect.s2), defect.s3)))

        if self.row(op.compose(defect.sl, defect.s3))[column] != b:
            context = plug_context(e, op.compose(HOLE, defect.s3))
        else:
            context = plug_context(e, op.compose(defect.s1, HOLE))
        self.add_column(context)
        return context

    def build_hypothesis(self) -> Recogniser:
        """
        Recogniser whose elements are the rows of S

        Element i stands for members[i] and is named by its print.

        Raises:
            DefectPresent if the table is not sharp, closed and associative
        """
        if not self.is_sharp():
            raise DefectPresent('Table is not sharp')
        if self.find_closedness_defect() is not None:
            raise NotClosed('Table is not closed')
        for op in Op:
            if self.find_associativity_defect(op) is not None:
                raise DefectPresent(f'Table is not {op.name}-associative')

        index = {s: i for i, s in enumerate(self.members)}

        def table(op):
            return tuple(
                tuple(index[self.representative(op.compose(x, y))]
                      for y in self.members) for x in self.members)

        bimonoid = Bimonoid(tuple(str(s) for s in self.members),
                            index[EMPTY], table(Op.SEQ), table(Op.PAR))
        return Recogniser(
            bimonoid, self.alphabet,
            {symbol: index[self.representative(term)] for symbol, term in
             zip(self.alphabet, self.alphabet.letters())},
            frozenset(index[s] for s in self.members if self.cell(s, HOLE)))

    def iter_compatibility_defects(
            self, hypothesis: Recogniser) -> Iterator[CompatibilityDefect]:
        """
        Every recorded cell of S the hypothesis gets wrong, in scan order
        """
        for s in self.ordered_members():
            for e in self.contexts:
                if accepts(hypothesis, plug(e, s)) != self.cell(s, e):
                    yield CompatibilityDefect(s, e)

    def find_compatibility_defect(
            self, hypothesis: Recogniser) -> Optional[CompatibilityDefect]:
        """
        First cell of S the hypothesis gets wrong, or None
        """
        return next(self.iter_compatibility_defects(hypothesis), None)

    def handle_counterexample(self, z: Term, c: Term) -> Term:
        """
        Shrinks a misclassified c[z] until a separating context appears

        Returns:
            a member of S that can replace z inside c without changing
            membership, or a context (with a hole) to add to E
        """
        if z in self.members or self.in_ext(z):
            s = self.representative(z)
            if self.membership(plug(c, s)) == self.membership(plug(c, z)):
                return s
            return c

        split = decompose(z)
        if not isinstance(split, Split):
            raise TeacherInconsistent(f'{z} should be in S or ext(S)')

        op = split.op
        u1 = self.handle_counterexample(
            split.left, plug_context(c, op.compose(HOLE, split.right)))
        if u1.is_context:
            return u1
        u2 = self.handle_counterexample(
            split.right, plug_context(c, op.compose(u1, HOLE)))
        if u2.is_context:
            return u2
        return self.handle_counterexample(op.compose(u1, u2), c)

    def check_invariants(self) -> None:
        """
        Raises TeacherInconsistent unless the table is sharp and ext-generated
        """
        if not self.is_sharp():
            raise TeacherInconsistent('Observation table lost sharpness')
        if not self.is_ext_generated():
            raise TeacherInconsistent('Observation table is not '
                                      'ext-generated')


def _close_and_associate(table: ObservationTable) -> None:
    while True:
        table.check_invariants()
        closedness = table.find_closedness_defect()
        if closedness is not None:
            table.add_row(closedness.t)
            continue

        for op in Op:
            defect = table.find_associativity_defect(op)
            if defect is not None:
                logger.info(f'Associativity defect {defect}')
                table.fix_associativity(defect)
                break
        else:
            return


def _process_counterexample(table: ObservationTable, stats: LearnStats,
                            z: Term) -> None:
    stats.max_counterexample_ops = max(stats.max_counterexample_ops,
                                       z.nodes - 1)
    context = table.handle_counterexample(z, HOLE)
    if not context.is_context:
        raise TeacherInconsistent(f'Counterexample {z} is classified '
                                  f'correctly by the table')
    table.add_column(context)


def _stabilise(table: ObservationTable, stats: LearnStats) -> Recogniser:
    while True:
        _close_and_associate(table)
        hypothesis = table.build_hypothesis()
        defect = table.find_compatibility_defect(hypothesis)
        if defect is None:
            return hypothesis

        if defect.e == HOLE:
            raise TeacherInconsistent(f'Hypothesis misclassifies row {defect.s}')
        logger.info(f'Compatibility defect at {defect.s}, {defect.e}')
        _process_counterexample(table, stats, plug(defect.e, defect.s))


def learn(teacher: Teacher, transcript: TextIO = None,
          on_hypothesis: Callable[[ObservationTable, Recogniser], None] = None
          ) -> tuple[Recogniser, LearnStats]:
    """
    Learns a minimal recogniser of the teacher's language

    Args:
        teacher: answers membership and equivalence queries
        transcript: stream receiving the transcript lines, if any
        on_hypothesis: called with the table and each hypothesis before it is
            submitted

    Returns:
        the recogniser the teacher accepted and the run's statistics

    Raises:
        TeacherInconsistent if the teacher's answers contradict each other
    """
    record = Transcript(transcript)
    membership = MembershipCache(teacher, record)
    table = ObservationTable(teacher.alphabet, membership, record)
    stats = LearnStats(alphabet_size=len(teacher.alphabet))

    while True:
        hypothesis = _stabilise(table, stats)
        stats.equivalence_queries += 1
        record.record(f'HYP {hypothesis.size}')
        if on_hypothesis is not None:
            on_hypothesis(table, hypothesis)

        result = teacher.equivalence(hypothesis)
        if result.equal:
            record.record(f'EQ #{stats.equivalence_queries} -> ok')
            stats.bounded = stats.bounded or result.bounded
            break

        z = result.counterexample
        record.record(f'EQ #{stats.equivalence_queries} -> cex {z}')
        if accepts(hypothesis, z) == membership(z):
            raise TeacherInconsistent(f'Counterexample {z} is classified '
                                      f'correctly by the hypothesis')
        _process_counterexample(table, stats, z)

    stats.membership_queries = membership.queries
    stats.final_carrier = hypothesis.size
    logger.info(f'Learned recogniser: {stats}')
    return hypothesis, stats
