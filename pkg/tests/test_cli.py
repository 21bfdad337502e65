"""
pomset-learner
Copyright (C) 2026 InkBridge Networks (legal@inkbridge.io)

pomset-learner © 2026 by InkBridge is licensed under CC BY-NC 4.0. To view a
copy of this license, visit https://creativecommons.org/licenses/by-nc/4.0/
"""
import contextlib
import io
import logging
import pathlib
import tempfile
import unittest
from unittest import mock

from pomset_learner import documents, load_config, pa # pylint: disable=import-error
from pomset_learner.__main__ import main # pylint: disable=import-error
from pomset_learner.recogniser import Recogniser, equivalence # pylint: disable=import-error


class TestCommandLine(unittest.TestCase):
    """
    Contains test cases for the subcommands and their exit statuses
    """

    @classmethod
    def setUpClass(cls):
        """
        Write a configuration logging to a scratch file
        """
        cls.scratch = tempfile.TemporaryDirectory()  # pylint: disable=consider-using-with
        cls.path = pathlib.Path(cls.scratch.name)
        cls.config = cls.path / 'config.yaml'
        cls.config.write_text(
            f'log:\n'
            f'  file: {cls.path / "pomset-learner.log"}\n'
            f'log_level: DEBUG\n'
            f'bounds:\n'
            f'  saturation: 4\n'
            f'  max_nodes: 3\n'
            f'  bounded_teacher: 4\n', encoding='utf-8')

    @classmethod
    def tearDownClass(cls):
        """
        Close the log file and remove the scratch directory
        """
        project_logger = logging.getLogger('pomset_learner')
        for handler in list(project_logger.handlers):
            project_logger.removeHandler(handler)
            handler.close()
        cls.scratch.cleanup()

    def run_cli(self, *argv, stdin=None):
        """
        Runs the command line and captures its output

        Returns:
            exit status, standard output and standard error
        """
        out, err = io.StringIO(), io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            if stdin is None:
                code = main(['--config', str(self.config), *argv])
            else:
                with mock.patch('sys.stdin', io.StringIO(stdin)):
                    code = main(['--config', str(self.config), *argv])
        return code, out.getvalue(), err.getvalue()

    def test_eval(self):  # pylint: disable=missing-function-docstring
        self.assertEqual(self.run_cli('eval', 'loop', 'a|b'), (0, '1\n', ''))
        self.assertEqual(self.run_cli('eval', 'loop', 'b.a'), (0, '0\n', ''))
        self.assertEqual(self.run_cli('eval', 'simple_pa', 'a.(b|c).a'),
                         (0, '1\n', ''))

    def test_equiv(self):  # pylint: disable=missing-function-docstring
        self.assertEqual(self.run_cli('equiv', 'loop', 'loop_F1'),
                         (0, 'cex a|b\n', ''))
        self.assertEqual(self.run_cli('equiv', 'loop', 'loop'),
                         (0, 'equal\n', ''))

    def test_enum(self):  # pylint: disable=missing-function-docstring
        self.assertEqual(
            self.run_cli('enum', '--alphabet', 'a', '--max-nodes', '2'),
            (0, '1\na\na.a\na|a\n', ''))
        code, out, _ = self.run_cli('enum', '--alphabet', 'a')
        self.assertEqual(code, 0)
        self.assertEqual(len(out.splitlines()), 1 + 1 + 2 + 5)

    def test_learn(self):  # pylint: disable=missing-function-docstring
        output = self.path / 'learned.json'
        transcript = self.path / 'learn.log'
        code, out, _ = self.run_cli('learn', '--teacher', 'recogniser:loop',
                                    '-o', str(output),
                                    '--transcript', str(transcript))
        self.assertEqual(code, 0)
        self.assertRegex(out, r'^n=5 k=2 m=\d+ mq=\d+ eq=\d+\n$')

        learned = documents.load(str(output))
        self.assertIsInstance(learned, Recogniser)
        self.assertTrue(equivalence(learned, documents.load('loop')).equal)
        lines = transcript.read_text(encoding='utf-8').splitlines()
        self.assertEqual(lines[0], 'MQ 1 -> 1')
        self.assertTrue(lines[-1].endswith('-> ok'))

    def test_learn_bounded(self):  # pylint: disable=missing-function-docstring
        code, out, _ = self.run_cli('learn', '--teacher', 'bounded:nested,5')
        self.assertEqual(code, 0)
        self.assertTrue(out.rstrip('\n').endswith(' bounded'))

    def test_convert(self):  # pylint: disable=missing-function-docstring
        output = self.path / 'nested_pa.json'
        code, out, _ = self.run_cli('convert', 'nested', '--to', 'pa',
                                    '-o', str(output))
        self.assertEqual((code, out), (0, ''))
        self.assertIsInstance(documents.load(str(output)), pa.PomsetAutomaton)

        code, out, _ = self.run_cli('convert', '--to', 'recogniser',
                                    stdin=documents.resolve('simple_pa')
                                    .read_text(encoding='utf-8'))
        self.assertEqual(code, 0)
        self.assertIn('"elements"', out)

    def test_convert_preconditions(self):  # pylint: disable=missing-function-docstring
        code, _, err = self.run_cli('convert', 'nested', '--to',
                                    'fork-acyclic-pa')
        self.assertEqual(code, 3)
        self.assertIn('qb ≺ qb', err)

        code, _, err = self.run_cli('convert', 'problematic_pa', '--to',
                                    'recogniser')
        self.assertEqual(code, 3)
        self.assertIn('not saturated within 4 nodes', err)

    def test_check(self):  # pylint: disable=missing-function-docstring
        self.assertEqual(
            self.run_cli('check', 'problematic_pa', '--fork-acyclic'),
            (1, '(q1, q3) with fork [q3, q4] from q1\n', ''))
        self.assertEqual(self.run_cli('check', 'loop', '--axioms',
                                      '--minimal'),
                         (0, 'ok\nok\n', ''))
        self.assertEqual(self.run_cli('check', 'loop', '--depth-nilpotent'),
                         (0, 'ok depth=4\n', ''))
        self.assertEqual(self.run_cli('check', 'nested', '--depth-nilpotent'),
                         (1, 'condition (i): qb ≺ qb\n', ''))
        self.assertEqual(self.run_cli('check', 'simple_pa'),
                         (0, 'ok (bounded at 4 nodes)\nok\n', ''))

    def test_minimize_and_dot(self):  # pylint: disable=missing-function-docstring
        code, out, _ = self.run_cli('minimize', 'loop')
        self.assertEqual(code, 0)
        self.assertIn('"qbot"', out)

        code, out, _ = self.run_cli('dot', 'simple_pa')
        self.assertEqual(code, 0)
        self.assertIn('digraph', out)
        self.assertIn('label="fork"', out)

    def test_errors(self):  # pylint: disable=missing-function-docstring
        code, out, err = self.run_cli('eval', 'loop', 'a..b')
        self.assertEqual((code, out), (2, ''))
        self.assertTrue(err.startswith('error: '))

        self.assertEqual(self.run_cli('eval', 'loop', 'c')[0], 4)
        self.assertEqual(self.run_cli('eval', 'no-such-sample', 'a')[0], 2)
        self.assertEqual(self.run_cli('equiv', 'loop', 'empty')[0], 4)
        self.assertEqual(self.run_cli('learn', '--teacher', 'oracle:loop')[0],
                         2)
        self.assertEqual(self.run_cli('check', 'loop', '--bound', '1')[0], 2)
        self.assertEqual(self.run_cli('convert', '--to', 'pa',
                                      stdin='{"states": ')[0], 2)
        self.assertEqual(self.run_cli()[0], 2)


class TestConfig(unittest.TestCase):
    """
    Contains test cases for the YAML configuration
    """

    def setUp(self):
        self.scratch = tempfile.TemporaryDirectory()  # pylint: disable=consider-using-with
        self.path = pathlib.Path(self.scratch.name) / 'config.yaml'

    def tearDown(self):
        self.scratch.cleanup()

    def test_defaults(self):  # pylint: disable=missing-function-docstring
        self.path.write_text('', encoding='utf-8')
        config = load_config(self.path)
        self.assertEqual(config['log'], {'stream': 'stderr'})
        self.assertEqual(config['bounds']['saturation'], 6)
        self.assertIsNone(config['bounds']['closure'])

    def test_overrides(self):  # pylint: disable=missing-function-docstring
        self.path.write_text('log:\n  stream: stdout\nlog_level: debug\n'
                             'bounds:\n  closure: 1000\n', encoding='utf-8')
        config = load_config(self.path)
        self.assertEqual(config['log'], {'stream': 'stdout'})
        self.assertEqual(config['log_level'], 'DEBUG')
        self.assertEqual(config['bounds']['closure'], 1000)
        self.assertEqual(config['bounds']['max_nodes'], 7)

    def test_invalid(self):  # pylint: disable=missing-function-docstring
        self.path.write_text('log:\n  stream: stdout\n  file: x.log\n',
                             encoding='utf-8')
        self.assertRaises(ValueError, load_config, self.path)

        self.path.write_text('bounds:\n  saturation: -1\n', encoding='utf-8')
        self.assertRaises(ValueError, load_config, self.path)

        self.assertRaises(OSError, load_config,
                          self.path.with_name('missing.yaml'))


if __name__ == '__main__':
    unittest.main()
