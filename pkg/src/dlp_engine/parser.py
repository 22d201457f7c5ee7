# -*- coding: utf-8 -*-
"""
Created the 17/10/2026

@author: dlp_engine developers

Text format of programs and dynamic logic programs::

    % comments run to the end of the line
    cross :- -train.
    wait :- train.
    listen :- not train, not -train.
    #update.
    train.

Lines equal to ``#update.`` separate the components of a DLP.
"""
import re
from typing import List, Optional, Tuple

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedInput, VisitError

from pymodaq_utils.logger import set_logger, get_module_name

from dlp_engine.syntax import (Atom, DLP, DLPError, Literal, ObjectiveLiteral, Program, Rule,
                               UPDATE_SEPARATOR, AlphabetError)

logger = set_logger(get_module_name(__file__))


GRAMMAR = r"""
    program: rule*
    rule: literal [":-" body] "."
    body: literal ("," literal)*
    literal: [NOT] [STRONG] ATOM

    interpretation: "{" "}"
                  | "{" literal ("," literal)* "}"

    NOT.2: /not(?=\s)/
    STRONG: "-"
    ATOM: /[a-z][A-Za-z0-9_]*/
    COMMENT: /%[^\n]*/

    %import common.WS
    %ignore WS
    %ignore COMMENT
"""

DOUBLE_NEGATIONS = (
    (re.compile(r'(?<![A-Za-z0-9_])not\s+not(?=\s)'), '`not not` is not allowed, absorb the double negation'),
    (re.compile(r'(?<!:)-\s*-'), '`--` is not allowed, absorb the double strong negation'),
)


class ParseError(DLPError):
    """Malformed program text, located by line and column (1-based)"""

    def __init__(self, message: str, line: int = 0, column: int = 0, component: Optional[int] = None):
        self.message = message
        self.line = line
        self.column = column
        self.component = component
        super().__init__(str(self))

    def __str__(self):
        where = f'line {self.line}, column {self.column}'
        if self.component is not None:
            where = f'component {self.component}, {where}'
        return f'{where}: {self.message}'

    def shifted(self, line_offset: int, component: int) -> 'ParseError':
        return ParseError(self.message, self.line + line_offset, self.column, component)


@v_args(inline=True)
class ProgramBuilder(Transformer):
    """Turn the lark parse tree into syntax objects"""

    def program(self, *rules) -> Program:
        return Program(tuple(rules))

    def rule(self, head: Literal, body=None) -> Rule:
        return Rule(head, frozenset(body) if body is not None else frozenset())

    def body(self, *literals) -> List[Literal]:
        return list(literals)

    def literal(self, naf, strong, name) -> Literal:
        return Literal(ObjectiveLiteral(Atom(str(name)), strong is not None), naf is not None)

    def interpretation(self, *literals) -> Tuple[Literal, ...]:
        return tuple(lit for lit in literals if lit is not None)


_parser = Lark(GRAMMAR, start=['program', 'interpretation', 'literal'], parser='lalr',
               maybe_placeholders=True)


def _check_double_negations(text: str):
    for ind_line, line in enumerate(text.splitlines(), start=1):
        code = line.split('%', 1)[0]
        for pattern, message in DOUBLE_NEGATIONS:
            match = pattern.search(code)
            if match is not None:
                raise ParseError(message, ind_line, match.start() + 1)


def _parse(text: str, start: str):
    _check_double_negations(text)
    try:
        tree = _parser.parse(text, start=start)
        return ProgramBuilder().transform(tree)
    except UnexpectedInput as e:
        context = e.get_context(text).strip()
        raise ParseError(f'unexpected input near {context!r}', e.line, e.column) from None
    except VisitError as e:
        if isinstance(e.orig_exc, AlphabetError):
            raise ParseError(str(e.orig_exc)) from None
        raise


def parse_program(text: str) -> Program:
    """Parse a single program, rules are kept in textual order

    Raises
    ------
    ParseError: on malformed input, `not not`, `--` and rules without head
    """
    return _parse(text, 'program')


def split_components(text: str) -> List[Tuple[int, str]]:
    """Split a DLP text on separator lines, returning (line offset, text) for each component"""
    components = []
    current = []
    offset = 0
    for ind, line in enumerate(text.splitlines()):
        if line.strip() == UPDATE_SEPARATOR:
            components.append((offset, '\n'.join(current)))
            current = []
            offset = ind + 1
        else:
            current.append(line)
    components.append((offset, '\n'.join(current)))
    return components


def parse_dlp(text: str) -> DLP:
    """Parse a DLP, n separator lines giving n + 1 components

    Examples
    --------
    >>> len(parse_dlp('p.\\n#update.'))
    2
    """
    programs = []
    for ind, (offset, chunk) in enumerate(split_components(text)):
        try:
            programs.append(parse_program(chunk))
        except ParseError as e:
            raise e.shifted(offset, ind) from None
    return DLP(tuple(programs))


def parse_literal(text: str) -> Literal:
    return _parse(text, 'literal')


def parse_interpretation(text: str) -> Tuple[ObjectiveLiteral, ...]:
    """Parse the `{-p, q}` rendering of an interpretation into its objective literals"""
    literals = _parse(text, 'interpretation')
    for lit in literals:
        if lit.default_negated:
            raise ParseError(f'Interpretations hold objective literals only, got {lit}')
    return tuple(lit.objective for lit in literals)
