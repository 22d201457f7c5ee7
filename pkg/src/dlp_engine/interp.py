# -*- coding: utf-8 -*-
"""
Created the 17/10/2026

@author: dlp_engine developers

Interpretations, satisfaction, the total completion J' of an interpretation, the immediate consequence
operator and least models of programs whose literals are read as plain propositional atoms.
"""
import itertools
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Iterator, List, Optional, Union

from multipledispatch import dispatch

from pymodaq_utils.logger import set_logger, get_module_name

from dlp_engine.syntax import (Alphabet, AlphabetError, DLPError, Literal, ObjectiveLiteral, Program, Rule,
                               RuleOccurrence)
from dlp_engine.parser import parse_interpretation
from dlp_engine.utils import get_enumeration_limit

logger = set_logger(get_module_name(__file__))


class InconsistentInterpretationError(DLPError, ValueError):
    pass


class EnumerationLimitError(DLPError):
    pass


class FixpointError(DLPError, RuntimeError):
    pass


@dataclass(frozen=True)
class Interpretation:
    """A consistent set of objective literals

    Examples
    --------
    >>> str(Interpretation.parse('{q, -p}'))
    '{-p, q}'
    """
    literals: FrozenSet[ObjectiveLiteral] = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.literals, frozenset):
            object.__setattr__(self, 'literals', frozenset(self.literals))
        for lit in self.literals:
            if lit.complement() in self.literals:
                raise InconsistentInterpretationError(f'{lit} and {lit.complement()} cannot be both true')

    @classmethod
    def parse(cls, text: str) -> 'Interpretation':
        return cls(frozenset(parse_interpretation(text)))

    def __contains__(self, item: Union[ObjectiveLiteral, Literal]) -> bool:
        if isinstance(item, Literal):
            return satisfies(self, item)
        return item in self.literals

    def __iter__(self) -> Iterator[ObjectiveLiteral]:
        return iter(sorted(self.literals))

    def __len__(self):
        return len(self.literals)

    def __str__(self):
        return '{' + ', '.join(str(lit) for lit in self) + '}'

    @property
    def atoms(self) -> Alphabet:
        return Alphabet(frozenset(lit.atom for lit in self.literals))

    def as_literals(self) -> FrozenSet[Literal]:
        return frozenset(Literal(lit) for lit in self.literals)

    def to_strings(self) -> List[str]:
        return [str(lit) for lit in self]


@dataclass(frozen=True)
class LiteralValuation:
    """A set S of literals, objective and default negated, with its projections S+ and S-"""
    true_literals: FrozenSet[Literal] = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.true_literals, frozenset):
            object.__setattr__(self, 'true_literals', frozenset(self.true_literals))

    def __contains__(self, item: Literal) -> bool:
        return item in self.true_literals

    def __iter__(self) -> Iterator[Literal]:
        return iter(sorted(self.true_literals))

    def __len__(self):
        return len(self.true_literals)

    def __str__(self):
        return '{' + ', '.join(str(lit) for lit in self) + '}'

    @property
    def positive(self) -> FrozenSet[ObjectiveLiteral]:
        return frozenset(lit.objective for lit in self.true_literals if not lit.default_negated)

    @property
    def negative(self) -> FrozenSet[ObjectiveLiteral]:
        return frozenset(lit.objective for lit in self.true_literals if lit.default_negated)

    def matches(self, literals: Iterable[Literal]) -> bool:
        return self.true_literals == frozenset(literals)


@dispatch(Interpretation, Literal)
def satisfies(interpretation, lit):
    if lit.default_negated:
        return lit.objective not in interpretation.literals
    return lit.objective in interpretation.literals


@dispatch(Interpretation, (set, frozenset, list, tuple))
def satisfies(interpretation, items):
    return all(satisfies(interpretation, item) for item in items)


@dispatch(Interpretation, Rule)
def satisfies(interpretation, rule):
    return not satisfies(interpretation, rule.body) or satisfies(interpretation, rule.head)


@dispatch(Interpretation, RuleOccurrence)
def satisfies(interpretation, occurrence):
    return satisfies(interpretation, occurrence.rule)


@dispatch(Interpretation, Program)
def satisfies(interpretation, program):
    return all(satisfies(interpretation, rule) for rule in program)


def completion(interpretation: Interpretation, universe: Iterable[ObjectiveLiteral]) -> FrozenSet[Literal]:
    """J together with not l for every l of the universe outside J"""
    return frozenset(itertools.chain(
        (Literal(lit) for lit in interpretation.literals),
        (Literal(lit, True) for lit in universe if lit not in interpretation.literals)))


def twiall(interpretation: Interpretation, alphabet: Alphabet) -> LiteralValuation:
    """The total completion J' = J u not(L \\ J) of J over the alphabet

    Raises
    ------
    AlphabetError: if J holds an atom outside the alphabet
    """
    outside = interpretation.atoms.atoms - alphabet.atoms
    if outside:
        raise AlphabetError(f"Atoms {', '.join(sorted(str(a) for a in outside))} are not in the alphabet")
    return LiteralValuation(completion(interpretation, alphabet.objective_literals()))


def _rules(program: Union[Program, Iterable[Rule]]) -> Iterable[Rule]:
    return program.rules if isinstance(program, Program) else program


def tp_step(program: Union[Program, Iterable[Rule]], literals: FrozenSet[Literal]) -> FrozenSet[Literal]:
    """Immediate consequence operator: heads of the rules whose body is included in the given set"""
    return frozenset(rule.head for rule in _rules(program) if rule.body <= literals)


def tp_iterates(program: Union[Program, Iterable[Rule]]) -> List[FrozenSet[Literal]]:
    """Iterates T^0(empty) = empty, T^1, ... up to the fixpoint, both ends included"""
    rules = tuple(_rules(program))
    bound = len(frozenset(rule.head for rule in rules)) + 1
    iterates = [frozenset()]
    for _ in range(bound + 1):
        current = tp_step(rules, iterates[-1])
        if current == iterates[-1]:
            return iterates
        iterates.append(current)
    raise FixpointError(f'The immediate consequence operator did not converge within {bound} steps')


def least_model(program: Union[Program, Iterable[Rule]]) -> FrozenSet[Literal]:
    """Least model of the program, every literal being read as a propositional atom

    Examples
    --------
    >>> from dlp_engine.parser import parse_program
    >>> sorted(str(lit) for lit in least_model(parse_program('p :- not q. not q.')))
    ['not q', 'p']
    """
    return tp_iterates(program)[-1]


def first_levels(iterates: List[FrozenSet[Literal]]) -> dict:
    """Map each objective literal to the first iteration index where it or its default negation appears"""
    levels = {}
    for index, iterate in enumerate(iterates):
        for lit in iterate:
            levels.setdefault(lit.objective, index)
    return levels


def enumerate_interpretations(alphabet: Alphabet, limit: Optional[int] = None) -> Iterator[Interpretation]:
    """All 3^n consistent interpretations over the alphabet

    Order is lexicographic by atom name, each atom going absent, positive then strongly negated.

    Raises
    ------
    EnumerationLimitError: if the alphabet holds more atoms than the enumeration limit
    """
    limit = get_enumeration_limit(limit)
    if len(alphabet) > limit:
        raise EnumerationLimitError(f'Refusing to enumerate 3^{len(alphabet)} interpretations: the alphabet '
                                    f'has {len(alphabet)} atoms and the enumeration limit is {limit}')
    atoms = list(alphabet)
    logger.debug(f'Enumerating {3 ** len(atoms)} interpretations over {len(atoms)} atoms')
    return _interpretations(atoms)


def _interpretations(atoms) -> Iterator[Interpretation]:
    choices = [(None, ObjectiveLiteral(a), ObjectiveLiteral(a, True)) for a in atoms]
    for combination in itertools.product(*choices):
        yield Interpretation(frozenset(lit for lit in combination if lit is not None))
