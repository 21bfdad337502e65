"""
pomset-learner
Copyright (C) 2026 InkBridge Networks (legal@inkbridge.io)

pomset-learner © 2026 by InkBridge is licensed under CC BY-NC 4.0. To view a
copy of this license, visit https://creativecommons.org/licenses/by-nc/4.0/

Reading and writing recogniser and automaton JSON documents.

A source is a file path, '-' for standard input, or the name of a shipped
sample (see samples/) when no file of that name exists.
"""
import json
import logging
import pathlib
import re
import sys
from typing import Union

from pomset_learner.errors import FormatError
from pomset_learner.pa import PomsetAutomaton, automaton_from_dict, \
    automaton_to_dict
from pomset_learner.recogniser import Recogniser, recogniser_from_dict, \
    recogniser_to_dict

logger = logging.getLogger(__name__)

SAMPLES_PATH = pathlib.Path(__file__).parent / 'samples'
sample_name_pattern = re.compile(r'^[a-zA-Z0-9]+([-_][a-zA-Z0-9]+)*$')

Document = Union[Recogniser, PomsetAutomaton]


def resolve(source: str) -> pathlib.Path:
    """
    Path of a source, falling back to the shipped sample of that name
    """
    path = pathlib.Path(source)
    if not path.exists() and sample_name_pattern.match(source):
        sample = SAMPLES_PATH / f'{source}.json'
        if sample.exists():
            logger.debug(f'Using shipped sample {sample}')
            return sample
    return path


def read_document(source: str) -> dict:
    """
    Reads and decodes a JSON document

    Raises:
        OSError if the file cannot be read
        FormatError if the content is not JSON
    """
    if source == '-':
        text = sys.stdin.read()
    else:
        with open(resolve(source), 'r', encoding='utf-8') as fileopen:
            text = fileopen.read()

    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(source, f'Invalid JSON: {exc}') from exc


def document_kind(document: dict) -> str:
    """
    'recogniser' or 'pa', from the keys of the document

    Raises:
        FormatError if the document is neither
    """
    if isinstance(document, dict):
        if 'elements' in document:
            return 'recogniser'
        if 'states' in document:
            return 'pa'
    raise FormatError('document', 'Neither a recogniser nor an automaton')


def load(source: str, validate: bool = True) -> Document:
    """
    Reads a recogniser or an automaton, whichever the source holds

    Args:
        source: path, '-' or sample name
        validate: check the bimonoid laws of recognisers

    Raises:
        OSError, FormatError, InvalidBimonoid
    """
    document = read_document(source)
    if document_kind(document) == 'recogniser':
        return recogniser_from_dict(document, validate)
    return automaton_from_dict(document)


def to_dict(value: Document) -> dict:  # pylint: disable=missing-function-docstring
    if isinstance(value, Recogniser):
        return recogniser_to_dict(value)
    return automaton_to_dict(value)


def write_document(value: Document, destination: str = None) -> None:
    """
    Writes a recogniser or automaton as indented JSON

    Args:
        value: what to write
        destination: file path, or None / '-' for standard output
    """
    text = json.dumps(to_dict(value), indent=2) + '\n'
    if destination is None or destination == '-':
        sys.stdout.write(text)
        return

    with open(destination, 'w', encoding='utf-8') as fileopen:
        fileopen.write(text)
    logger.info(f'Wrote {destination}')
