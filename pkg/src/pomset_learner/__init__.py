"""
pomset-learner
Copyright (C) 2026 InkBridge Networks (legal@inkbridge.io)

pomset-learner © 2026 by InkBridge is licensed under CC BY-NC 4.0. To view a
copy of this license, visit https://creativecommons.org/licenses/by-nc/4.0/

This file contains the configuration and logging setup for the project.
Importing the package configures nothing; the command line calls
load_config() and setup_logging() at start up.
"""

import copy
import logging
import logging.handlers
import pathlib
import sys

import yaml


class ReprFormatter(logging.Formatter):
    """
    Custom formatter to escape all characters to string representation
    """

    def format(self, record):
        record.msg = repr(record.msg)
        return super().format(record)


def handler_file(dest):  # pylint: disable=missing-function-docstring
    return logging.FileHandler(dest)


def handler_syslog(dest):  # pylint: disable=missing-function-docstring
    address = '/dev/log'
    if 'address' in dest:
        address = dest['address']
    return logging.handlers.SysLogHandler(facility=dest['facility'],
                                          address=address)


def handler_stream(dest):  # pylint: disable=missing-function-docstring
    if dest == 'stdout':
        return logging.StreamHandler(sys.stdout)
    if dest == 'stderr':
        return logging.StreamHandler(sys.stderr)
    raise ValueError('Unsupported stream')


logging_types = {
    'file': handler_file,
    'syslog': handler_syslog,
    'stream': handler_stream
}


def setup_logging(destination_type, destination, level='INFO') -> None:
    """
    Sends the project's log records to a single destination

    Expected to be run at start of application; running it again replaces
    the previous destination.

    Args:
        destination_type: 'file', 'syslog' or 'stream'
        destination: file path, syslog settings or stream name
        level: logging level name
    """
    if destination_type not in logging_types:
        raise ValueError('Invalid destination type')

    repr_formatter = ReprFormatter(
        '%(asctime)s - %(name)s - %(levelname)s : At Line %(lineno)s of '
        '%(module)s :: %(message)s')

    # get appropriate handler
    handler = logging_types[destination_type](destination)
    handler.setFormatter(repr_formatter)
    handler.setLevel(level)

    project_logger = logging.getLogger(__name__)
    project_logger.setLevel(level)
    for old in list(project_logger.handlers):
        project_logger.removeHandler(old)
        old.close()
    project_logger.addHandler(handler)
    project_logger.propagate = False


CONFIG_FILE = pathlib.Path('etc', 'pomset-learner', 'config.yaml')

DEFAULT_CONFIG = {
    'log': {'stream': 'stderr'},
    'log_level': 'INFO',
    'bounds': {
        'saturation': 6,
        'max_nodes': 7,
        'bounded_teacher': 6,
        'closure': None,
    },
}


def load_config(path: pathlib.Path = None) -> dict:
    """
    Reads the YAML configuration over the built-in defaults

    Args:
        path: configuration file; CONFIG_FILE is used when None and is
            skipped if it does not exist

    Returns:
        configuration dict with 'log', 'log_level' and 'bounds'

    Raises:
        OSError if an explicitly given file cannot be read
        ValueError if more than one log destination is configured
    """
    config = copy.deepcopy(DEFAULT_CONFIG)
    if path is None:
        if not CONFIG_FILE.exists():
            return config
        path = CONFIG_FILE

    with open(path, 'r', encoding='utf-8') as fileopen:
        loaded = yaml.load(fileopen, Loader=yaml.FullLoader) or {}

    if 'log' in loaded:
        if len(tuple(loaded['log'].keys())) > 1:
            raise ValueError('Only one log destination can be configured '
                             'simultaneously')
        config['log'] = loaded['log']
    if 'log_level' in loaded:
        config['log_level'] = str(loaded['log_level']).upper()
    config['bounds'].update(loaded.get('bounds') or {})

    for key, value in config['bounds'].items():
        if value is not None and (not isinstance(value, int) or value < 0):
            raise ValueError(f'Bound {key} must be a non-negative integer')
    return config


def configure_logging(config: dict) -> None:
    """
    Applies the log destination and level of a loaded configuration
    """
    for key, destination in config['log'].items():
        setup_logging(key, destination, config['log_level'])
