"""
pomset-learner
Copyright (C) 2026 InkBridge Networks (legal@inkbridge.io)

pomset-learner © 2026 by InkBridge is licensed under CC BY-NC 4.0. To view a
copy of this license, visit https://creativecommons.org/licenses/by-nc/4.0/

Entry point for the pomset-learner command line

Exit status: 0 ok, 1 learning failure or failed check, 2 parse or I/O
error, 3 unmet precondition, 4 alphabet mismatch.
"""
import argparse
import logging
import pathlib
import sys
from dataclasses import dataclass, field
from typing import Optional

from pomset_learner import configure_logging, documents, dot, load_config, \
    pa, recogniser
from pomset_learner.errors import AlphabetMismatch, ClosureDiverged, \
    FormatError, InvalidBimonoid, NotDepthNilpotent, NotSaturatedWithin, \
    TeacherInconsistent, UnknownLetter
from pomset_learner.learner import learn
from pomset_learner.parsers.base import ParseError
from pomset_learner.parsers.term import parse_pomset
from pomset_learner.pomset import Alphabet, enumerate_pomsets
from pomset_learner.teachers.factory import FactoryTeacher

logger = logging.getLogger(__name__)

# checked in order; an exception maps to the first matching entry
EXIT_CODES = (
    (TeacherInconsistent, 1),
    (ParseError, 2),
    (FormatError, 2),
    (OSError, 2),
    (ValueError, 2),
    (NotSaturatedWithin, 3),
    (NotDepthNilpotent, 3),
    (InvalidBimonoid, 3),
    (ClosureDiverged, 3),
    (AlphabetMismatch, 4),
    (UnknownLetter, 4),
)

CHECKS = ('axioms', 'saturated', 'fork_acyclic', 'minimal', 'depth_nilpotent')


@dataclass
class CliConfig:  # pylint: disable=too-many-instance-attributes
    """
    Everything a command needs, merged from flags and configuration

    attrs:
        command: subcommand name
        inputs: input documents (paths, '-' or sample names)
        output: output path, or None for standard output
        teacher: --teacher spec of learn
        transcript: transcript path of learn
        target: --to of convert
        checks: checks selected for check
        term: pomset text of eval
        alphabet: alphabet of enum
        saturation: node bound of saturation screens
        max_nodes: node bound of enum
        bounds: remaining bounds from the configuration
    """
    command: str
    inputs: list[str] = field(default_factory=list)
    output: Optional[str] = None
    teacher: Optional[str] = None
    transcript: Optional[str] = None
    target: Optional[str] = None
    checks: list[str] = field(default_factory=list)
    term: Optional[str] = None
    alphabet: Optional[str] = None
    saturation: int = 6
    max_nodes: int = 7
    bounds: dict = field(default_factory=dict)

    def validate(self) -> None:
        """
        Rejects bad bounds and missing inputs before any work starts

        Raises:
            ValueError on a bad bound
            FileNotFoundError on a missing input
        """
        if self.saturation < 2:
            raise ValueError('Saturation bound must be at least 2')
        if self.max_nodes < 0:
            raise ValueError('Node bound must be non-negative')
        for source in self.inputs:
            if source != '-' and not documents.resolve(source).exists():
                raise FileNotFoundError(f'No such file or sample: {source}')


def build_parser() -> argparse.ArgumentParser:
    """
    Argument parser of every subcommand
    """
    parser = argparse.ArgumentParser(
        prog='pomset-learner',
        description='Learn and convert pomset recognisers and automata')
    parser.add_argument('--config', type=pathlib.Path,
                        help='YAML configuration file')
    parser.add_argument('--log-level', help='logging level, e.g. DEBUG')
    commands = parser.add_subparsers(dest='command', required=True)

    def bound_flags(sub):
        sub.add_argument('--bound', type=int, dest='saturation',
                         help='node bound of saturation screens')

    sub = commands.add_parser('learn', help='learn a recogniser')
    sub.add_argument('--teacher', required=True,
                     help='recogniser:<src> | pa:<src> | bounded:<src>[,N]')
    sub.add_argument('-o', '--output', help='write the learned recogniser')
    sub.add_argument('--transcript', help='write the learning transcript')
    bound_flags(sub)

    sub = commands.add_parser('convert', help='convert between kinds')
    sub.add_argument('inputs', nargs='?', default='-', metavar='input')
    sub.add_argument('--to', dest='target', required=True,
                     choices=('pa', 'recogniser', 'fork-acyclic-pa'))
    sub.add_argument('-o', '--output')
    bound_flags(sub)

    sub = commands.add_parser('check', help='check properties')
    sub.add_argument('inputs', metavar='input')
    for check in CHECKS:
        sub.add_argument(f'--{check.replace("_", "-")}', dest='checks',
                         action='append_const', const=check)
    bound_flags(sub)

    sub = commands.add_parser('eval', help='membership of a pomset')
    sub.add_argument('inputs', metavar='input')
    sub.add_argument('term', help="pomset, e.g. 'a|b'")
    bound_flags(sub)

    sub = commands.add_parser('equiv', help='compare two languages')
    sub.add_argument('inputs', nargs=2, metavar='input')
    bound_flags(sub)

    sub = commands.add_parser('enum', help='list pomsets')
    sub.add_argument('--alphabet', required=True, help="letters, e.g. 'a,b'")
    sub.add_argument('--max-nodes', type=int)

    sub = commands.add_parser('minimize', help='minimise a recogniser')
    sub.add_argument('inputs', metavar='input')
    sub.add_argument('-o', '--output')
    bound_flags(sub)

    sub = commands.add_parser('dot', help='render as Graphviz DOT')
    sub.add_argument('inputs', metavar='input')
    sub.add_argument('-o', '--output')

    return parser


def config_from_args(args: argparse.Namespace, config: dict) -> CliConfig:
    """
    Merges parsed flags over the loaded configuration
    """
    inputs = getattr(args, 'inputs', [])
    if isinstance(inputs, str):
        inputs = [inputs]

    bounds = config['bounds']
    saturation = getattr(args, 'saturation', None)
    max_nodes = getattr(args, 'max_nodes', None)
    return CliConfig(
        command=args.command,
        inputs=list(inputs),
        output=getattr(args, 'output', None),
        teacher=getattr(args, 'teacher', None),
        transcript=getattr(args, 'transcript', None),
        target=getattr(args, 'target', None),
        checks=getattr(args, 'checks', None) or [],
        term=getattr(args, 'term', None),
        alphabet=getattr(args, 'alphabet', None),
        saturation=bounds['saturation'] if saturation is None else saturation,
        max_nodes=bounds['max_nodes'] if max_nodes is None else max_nodes,
        bounds=bounds,
    )


class Main:
    """
    main class dispatching a subcommand
    """

    def __init__(self, config: CliConfig):
        self.config = config
        self.command_handlers = {
            'learn': self.cmd_learn,
            'convert': self.cmd_convert,
            'check': self.cmd_check,
            'eval': self.cmd_eval,
            'equiv': self.cmd_equiv,
            'enum': self.cmd_enum,
            'minimize': self.cmd_minimize,
            'dot': self.cmd_dot,
        }

    def run(self) -> int:
        """
        Runs the configured command

        Returns:
            exit status
        """
        self.config.validate()
        return self.command_handlers[self.config.command]()

    def as_recogniser(self, value) -> recogniser.Recogniser:
        """
        Recogniser of a loaded document, converting automata with the
        saturation screen
        """
        if isinstance(value, recogniser.Recogniser):
            return value
        return pa.pa_to_recogniser(value, self.config.saturation,
                                   self.config.bounds.get('closure'))

    def cmd_learn(self) -> int:  # pylint: disable=missing-function-docstring
        bounds = dict(self.config.bounds, saturation=self.config.saturation)
        teacher = FactoryTeacher(bounds).teacher_from_spec(self.config.teacher)

        if self.config.transcript is not None:
            with open(self.config.transcript, 'w',
                      encoding='utf-8') as fileopen:
                hypothesis, stats = learn(teacher, fileopen)
        else:
            hypothesis, stats = learn(teacher)

        if self.config.output is not None:
            documents.write_document(hypothesis, self.config.output)
        print(stats)
        return 0

    def cmd_convert(self) -> int:  # pylint: disable=missing-function-docstring
        value = documents.load(self.config.inputs[0])
        match self.config.target:
            case 'pa':
                converted = pa.recogniser_to_pa(self.as_recogniser(value))
            case 'fork-acyclic-pa':
                converted = pa.recogniser_to_fork_acyclic_pa(
                    self.as_recogniser(value))
            case _:
                converted = self.as_recogniser(value)
        documents.write_document(converted, self.config.output)
        return 0

    def cmd_check(self) -> int:
        """
        Prints one line per selected check, 'ok' or the failure witness
        """
        value = documents.load(self.config.inputs[0], validate=False)
        is_automaton = isinstance(value, pa.PomsetAutomaton)
        checks = self.config.checks
        if not checks:
            checks = ['saturated', 'fork_acyclic'] if is_automaton else \
                ['axioms', 'minimal', 'depth_nilpotent']

        def automaton():
            return value if is_automaton else pa.recogniser_to_pa(value)

        passed = True
        for check in CHECKS:
            if check not in checks:
                continue
            match check:
                case 'axioms':
                    if is_automaton:
                        report = recogniser.validate_axioms(
                            self.as_recogniser(value).bimonoid)
                    else:
                        report = recogniser.validate_axioms(value.bimonoid)
                    ok, line = report.ok, str(report)
                case 'saturated':
                    report = pa.check_saturated(automaton(),
                                                self.config.saturation)
                    ok, line = report.ok, str(report)
                case 'fork_acyclic':
                    report = pa.is_fork_acyclic(automaton())
                    ok, line = report.ok, str(report)
                case 'minimal':
                    report = recogniser.is_minimal(self.as_recogniser(value))
                    ok, line = report.ok, str(report)
                case _:
                    report = recogniser.depth_analysis(
                        self.as_recogniser(value))
                    ok = report.is_depth_nilpotent
                    line = f'ok depth={report.max_chain}' if ok else \
                        report.failure_witness
            if ok:
                line = line if line.startswith('ok') else 'ok'
            passed = passed and ok
            print(line)
        return 0 if passed else 1

    def cmd_eval(self) -> int:  # pylint: disable=missing-function-docstring
        value = documents.load(self.config.inputs[0])
        u = parse_pomset(self.config.term, value.alphabet)
        if isinstance(value, recogniser.Recogniser):
            accepted = recogniser.accepts(value, u)
        else:
            accepted = pa.accepts(value, u)
        print(int(accepted))
        return 0

    def cmd_equiv(self) -> int:  # pylint: disable=missing-function-docstring
        left, right = (self.as_recogniser(documents.load(source))
                       for source in self.config.inputs)
        result = recogniser.equivalence(left, right)
        print('equal' if result.equal else f'cex {result.counterexample}')
        return 0

    def cmd_enum(self) -> int:  # pylint: disable=missing-function-docstring
        alphabet = Alphabet.parse(self.config.alphabet)
        for u in enumerate_pomsets(alphabet, self.config.max_nodes):
            print(u)
        return 0

    def cmd_minimize(self) -> int:  # pylint: disable=missing-function-docstring
        value = self.as_recogniser(documents.load(self.config.inputs[0]))
        documents.write_document(recogniser.minimize(value),
                                 self.config.output)
        return 0

    def cmd_dot(self) -> int:  # pylint: disable=missing-function-docstring
        text = dot.to_dot(documents.load(self.config.inputs[0]))
        if self.config.output is None or self.config.output == '-':
            sys.stdout.write(text)
        else:
            with open(self.config.output, 'w', encoding='utf-8') as fileopen:
                fileopen.write(text)
        return 0


def exit_code(exc: Exception) -> Optional[int]:
    """
    Exit status for an exception, or None if it is not a known failure
    """
    for kind, code in EXIT_CODES:
        if isinstance(exc, kind):
            return code
    return None


def main(argv: list[str] = None) -> int:
    """
    Parses arguments, runs the command and maps failures to exit statuses
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    try:
        config = load_config(args.config)
        if args.log_level is not None:
            config['log_level'] = args.log_level.upper()
        configure_logging(config)
        return Main(config_from_args(args, config)).run()
    except Exception as exc:  # pylint: disable=broad-exception-caught
        code = exit_code(exc)
        if code is None:
            raise
        logger.error(f'{type(exc).__name__}: {exc}')
        print(f'error: {exc}', file=sys.stderr)
        return code


if __name__ == '__main__':
    sys.exit(main())
