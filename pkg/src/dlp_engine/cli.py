# -*- coding: utf-8 -*-
"""
Created the 17/10/2026

@author: dlp_engine developers

Command line front end: models, check, transform and properties. Input files are read as DLP components in
argument order, standard input being read when no file is given.

Exit status is 0 on success, 1 when no model is found, the candidate is rejected or a property fails, and 2 on
any input error.
"""
import functools
import json
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import click

from pymodaq_utils.logger import set_logger, get_module_name

from dlp_engine import scenarios
from dlp_engine.interp import Interpretation
from dlp_engine.modelset import SemanticsId
from dlp_engine.parser import ParseError, parse_dlp
from dlp_engine.principles.report import PropertyReport, SuiteSummary
from dlp_engine.principles.table import (RECOVERY_PROPERTIES, TABLE_PROPERTIES, property_factory,
                                         run_property_suite)
from dlp_engine.syntax import DLP, Alphabet, DLPError, render
from dlp_engine.updates.semantics import check_candidate, models
from dlp_engine.updates.transformations import TRANSFORMATIONS, transform
from dlp_engine.utils import InvalidLimitError, set_debug_level

logger = set_logger(get_module_name(__file__))

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2

COMMANDS = ('models', 'check', 'transform', 'properties')


@dataclass(frozen=True)
class RunConfig:
    """Everything a command needs, gathered from the command line"""
    command: str
    semantics: SemanticsId
    sources: Tuple[Tuple[str, str], ...] = ()  # (name, text) of every input
    alphabet_extras: Tuple[str, ...] = ()
    enumeration_limit: Optional[int] = None
    json: bool = False
    trace: bool = False
    random: Optional[int] = None
    seed: int = 0
    case: Optional[str] = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f'Unknown command {self.command}, possible values are {COMMANDS}')
        if self.enumeration_limit is not None and self.enumeration_limit < 1:
            raise InvalidLimitError(f'The enumeration limit must be at least 1, got {self.enumeration_limit}')

    @property
    def alphabet(self) -> Optional[Alphabet]:
        return Alphabet.from_names(self.alphabet_extras) if self.alphabet_extras else None

    def read_dlp(self) -> DLP:
        """Components of all the sources, each source split on its separator lines"""
        components = []
        for name, text in self.sources:
            try:
                components.extend(parse_dlp(text).components)
            except ParseError as e:
                raise ParseError(f'{name}: {e.message}', e.line, e.column, e.component) from None
        return DLP(tuple(components))


def _read_text(name: str, stream) -> str:
    try:
        return stream.read()
    except UnicodeDecodeError as e:
        raise ParseError(f'{name}: not a valid UTF-8 text ({e.reason} at byte {e.start})') from None


def read_sources(files: Sequence, stdin: bool = True) -> Tuple[Tuple[str, str], ...]:
    if not files and stdin:
        return (('<stdin>', _read_text('<stdin>', click.get_text_stream('stdin', encoding='utf-8'))),)
    return tuple((file.name, _read_text(file.name, file)) for file in files)


def split_alphabet(value: Optional[str]) -> Tuple[str, ...]:
    return tuple(name.strip() for name in value.split(',') if name.strip()) if value else ()


def handle_errors(func):
    """Map engine errors onto exit status 2 with their message on stderr"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except DLPError as e:
            logger.debug(f'{type(e).__name__}: {e}')
            click.echo(f'Error: {e}', err=True)
            sys.exit(EXIT_ERROR)
    return wrapper


COMMON_OPTIONS = [
    click.option('--semantics', '-s', default=SemanticsId.ERD.tag, show_default=True,
                 type=click.Choice(SemanticsId.tags(), case_sensitive=False)),
    click.option('--json', 'as_json', is_flag=True, help='JSON output'),
    click.option('--verbose', '-v', is_flag=True, help='Debug logging'),
]

EVALUATION_OPTIONS = [
    click.option('--alphabet', '-a', default=None, help='Extra atoms to evaluate over, as in a,b,c'),
    click.option('--limit', '-l', type=int, default=None,
                 help='Enumeration limit on the alphabet size, defaults to $DLP_ENGINE_LIMIT or the config'),
]


def add_options(options):
    def decorator(func):
        for option in reversed(options):
            func = option(func)
        return func
    return decorator


def make_config(command: str, semantics: str, files: Sequence, alphabet: Optional[str], limit: Optional[int],
                as_json: bool, verbose: bool, stdin: bool = True, **kwargs) -> RunConfig:
    if verbose:
        set_debug_level()
    return RunConfig(command, SemanticsId.from_tag(semantics), read_sources(files, stdin),
                     split_alphabet(alphabet), limit, as_json, **kwargs)


@click.group()
@click.version_option(package_name='dlp_engine')
def cli():
    """Models of dynamic logic programs with strong and default negation"""
    pass


@cli.command('models', help='Print the models of a DLP')
@click.argument('files', nargs=-1, type=click.File('r', encoding='utf-8'))
@add_options(COMMON_OPTIONS)
@add_options(EVALUATION_OPTIONS)
@handle_errors
def cmd_models(files, semantics, alphabet, limit, as_json, verbose):
    cfg = make_config('models', semantics, files, alphabet, limit, as_json, verbose)
    found = models(cfg.read_dlp(), cfg.semantics, cfg.alphabet, cfg.enumeration_limit)
    if cfg.json:
        click.echo(json.dumps(found.to_dict()))
    else:
        for model in found:
            click.echo(str(model))
    logger.info(f'{len(found)} model(s) under {cfg.semantics.tag}')
    sys.exit(EXIT_OK if len(found) > 0 else EXIT_NEGATIVE)


@cli.command('check', help='Check whether CANDIDATE, as in "{-p, q}", is a model of a DLP')
@click.argument('candidate')
@click.argument('files', nargs=-1, type=click.File('r', encoding='utf-8'))
@add_options(COMMON_OPTIONS)
@add_options(EVALUATION_OPTIONS)
@click.option('--trace', is_flag=True, help='Print the iterates of the extended rejection operator')
@handle_errors
def cmd_check(candidate, files, semantics, alphabet, limit, as_json, verbose, trace):
    cfg = make_config('check', semantics, files, alphabet, limit, as_json, verbose, trace=trace)
    verdict = check_candidate(cfg.read_dlp(), Interpretation.parse(candidate), cfg.semantics, cfg.alphabet)
    if cfg.json:
        click.echo(json.dumps(dict(semantics=verdict.semantics.tag, candidate=verdict.candidate.to_strings(),
                                   model=verdict.accepted,
                                   rejected=[str(occ) for occ in verdict.rejected or ()])))
    else:
        click.echo(verdict.render(cfg.trace))
    sys.exit(EXIT_OK if verdict.accepted else EXIT_NEGATIVE)


@cli.command('transform', help='Print the DLP produced by the expone or exptwo transformation')
@click.argument('kind', type=click.Choice(TRANSFORMATIONS))
@click.argument('files', nargs=-1, type=click.File('r', encoding='utf-8'))
@click.option('--alphabet', '-a', default=None, help='Extra atoms to add coherence rules for')
@click.option('--verbose', '-v', is_flag=True, help='Debug logging')
@handle_errors
def cmd_transform(kind, files, alphabet, verbose):
    cfg = make_config('transform', SemanticsId.RD.tag, files, alphabet, None, False, verbose)
    click.echo(render(transform(cfg.read_dlp(), kind, cfg.alphabet)))


def property_names(case: Optional[str]) -> List[str]:
    return [case] if case is not None else list(TABLE_PROPERTIES + RECOVERY_PROPERTIES)


def summarize_inputs(name: str, semantics: SemanticsId, dlp: Optional[DLP]) -> SuiteSummary:
    """Check a property on the inputs read from a DLP, or on its built-in cases without any DLP"""
    prop = property_factory.get(name)
    summary = SuiteSummary(name, semantics, expected_failure=semantics in prop.expected_failures)
    if dlp is None:
        for inputs in scenarios.builtin_cases(name):
            summary.add(prop.check(semantics, *inputs))
        return summary
    inputs = prop.from_dlp(dlp)
    if inputs is None:
        summary.add(PropertyReport.not_applicable(name, semantics, (dlp,), 'the input does not fit the property'))
    else:
        summary.add(prop.check(semantics, *inputs))
    return summary


def render_summaries(summaries: Sequence[SuiteSummary]) -> str:
    width = max(len(summary.property_name) for summary in summaries) + 2
    lines = [f"{'property':<{width}}{'status':<18}{'passed':>8}{'failed':>8}{'n/a':>6}"]
    for summary in summaries:
        lines.append(f'{summary.property_name:<{width}}{summary.status:<18}{summary.passed:>8}'
                     f'{summary.failed:>8}{summary.not_applicable:>6}')
    for summary in summaries:
        if summary.first_counterexample is not None:
            lines.append(str(summary.first_counterexample))
    return '\n'.join(lines)


@cli.command('properties', help='Check the update properties on files, built-in cases or random instances')
@click.argument('files', nargs=-1, type=click.File('r', encoding='utf-8'))
@add_options(COMMON_OPTIONS)
@click.option('--random', 'count', type=click.IntRange(min=1), default=None,
              help='Number of seeded random instances per property')
@click.option('--seed', type=int, default=0, show_default=True)
@click.option('--case', type=click.Choice(TABLE_PROPERTIES + RECOVERY_PROPERTIES), default=None,
              help='Single property to check')
@handle_errors
def cmd_properties(files, semantics, as_json, verbose, count, seed, case):
    cfg = make_config('properties', semantics, files, None, None, as_json, verbose, stdin=False, random=count,
                      seed=seed, case=case)
    dlp = cfg.read_dlp() if cfg.sources else None
    summaries = []
    for name in property_names(cfg.case):
        if cfg.random is not None:
            summaries.append(run_property_suite(name, cfg.semantics, cfg.random, cfg.seed))
        else:
            summaries.append(summarize_inputs(name, cfg.semantics, dlp))
    if cfg.json:
        click.echo(json.dumps([summary.to_dict() for summary in summaries]))
    else:
        click.echo(render_summaries(summaries))
    sys.exit(EXIT_OK if all(summary.ok for summary in summaries) else EXIT_NEGATIVE)


def main():
    cli(prog_name='dlp-engine')


if __name__ == '__main__':
    main()
