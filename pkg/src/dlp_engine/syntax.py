# -*- coding: utf-8 -*-
"""
Created the 17/10/2026

@author: dlp_engine developers

Atoms, literals, rules, programs and dynamic logic programs (DLP) together with the complement and
conflict operations they support.
"""
import re
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Iterator, List, Tuple, Union

from multipledispatch import dispatch

from pymodaq_utils.logger import set_logger, get_module_name

logger = set_logger(get_module_name(__file__))

ATOM_PATTERN = re.compile(r'^[a-z][A-Za-z0-9_]*$')
UPDATE_SEPARATOR = '#update.'


class DLPError(Exception):
    """Base class of every error raised by the dlp_engine package"""
    pass


class AlphabetError(DLPError):
    pass


@dataclass(frozen=True, order=True)
class Atom:
    """A propositional atom, identified by its name"""
    name: str

    def __post_init__(self):
        if not isinstance(self.name, str) or ATOM_PATTERN.match(self.name) is None:
            raise AlphabetError(f'Invalid atom name: {self.name!r}')

    def __str__(self):
        return self.name


@dataclass(frozen=True, order=True)
class ObjectiveLiteral:
    """An atom p or its strong negation -p

    Ordering follows the canonical rendering: by atom name, positive before strongly negated.
    """
    atom: Atom
    strongly_negated: bool = False

    def __str__(self):
        return f'-{self.atom}' if self.strongly_negated else str(self.atom)

    def complement(self) -> 'ObjectiveLiteral':
        return ObjectiveLiteral(self.atom, not self.strongly_negated)

    def as_literal(self) -> 'Literal':
        return Literal(self)


@dataclass(frozen=True, order=True)
class Literal:
    """An objective literal l or the default literal not l"""
    objective: ObjectiveLiteral
    default_negated: bool = False

    def __str__(self):
        return f'not {self.objective}' if self.default_negated else str(self.objective)

    @property
    def atom(self) -> Atom:
        return self.objective.atom

    @property
    def is_objective(self) -> bool:
        return not self.default_negated

    @property
    def is_strong(self) -> bool:
        return self.objective.strongly_negated


@dataclass(frozen=True)
class Rule:
    """A rule head <- body, the body being a set of literals"""
    head: Literal
    body: FrozenSet[Literal] = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.body, frozenset):
            object.__setattr__(self, 'body', frozenset(self.body))

    def __str__(self):
        if self.is_fact:
            return f'{self.head}.'
        return f"{self.head} :- {', '.join(str(lit) for lit in self.sorted_body())}."

    def sorted_body(self) -> List[Literal]:
        return sorted(self.body)

    @property
    def is_fact(self) -> bool:
        return len(self.body) == 0

    @property
    def is_tautology(self) -> bool:
        return self.head in self.body

    @property
    def has_strong_negation(self) -> bool:
        return self.head.is_strong or any(lit.is_strong for lit in self.body)

    def literals(self) -> Iterator[Literal]:
        yield self.head
        yield from self.body


@dataclass(frozen=True)
class Program:
    """An ordered list of rules, duplicates preserved"""
    rules: Tuple[Rule, ...] = ()

    def __post_init__(self):
        if not isinstance(self.rules, tuple):
            object.__setattr__(self, 'rules', tuple(self.rules))

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def __len__(self):
        return len(self.rules)

    def __getitem__(self, item) -> Rule:
        return self.rules[item]

    def __add__(self, other: Union['Program', Iterable[Rule]]) -> 'Program':
        return Program(self.rules + tuple(other))

    def __str__(self):
        return render(self)

    @property
    def is_generalised(self) -> bool:
        return not any(rule.has_strong_negation for rule in self.rules)

    @property
    def is_normal(self) -> bool:
        return self.is_generalised and all(rule.head.is_objective for rule in self.rules)

    @property
    def is_facts(self) -> bool:
        return all(rule.is_fact for rule in self.rules)

    @property
    def is_tautologies(self) -> bool:
        return all(rule.is_tautology for rule in self.rules)

    def heads(self) -> FrozenSet[Literal]:
        return frozenset(rule.head for rule in self.rules)


@dataclass(frozen=True, order=True)
class RuleOccurrence:
    """A rule tagged with its position in a DLP, rejection sets are sets of occurrences"""
    component: int
    position: int
    rule: Rule = field(compare=False)

    def __str__(self):
        return f'({self.rule})'


@dataclass(frozen=True)
class DLP:
    """A dynamic logic program: a nonempty sequence of programs, each one updating the previous ones"""
    components: Tuple[Program, ...]

    def __post_init__(self):
        components = tuple(comp if isinstance(comp, Program) else Program(tuple(comp))
                           for comp in self.components)
        if len(components) == 0:
            raise DLPError('A DLP needs at least one component')
        object.__setattr__(self, 'components', components)

    @classmethod
    def single(cls, program: Program) -> 'DLP':
        return cls((program,))

    def __iter__(self) -> Iterator[Program]:
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def __getitem__(self, item) -> Program:
        return self.components[item]

    def __str__(self):
        return render(self)

    def all(self) -> Tuple[RuleOccurrence, ...]:
        """The multiset all(P) of rule occurrences, tagged by component and position"""
        return tuple(RuleOccurrence(ind_comp, ind_rule, rule)
                     for ind_comp, comp in enumerate(self.components)
                     for ind_rule, rule in enumerate(comp))

    def all_rules(self) -> Program:
        return Program(tuple(occ.rule for occ in self.all()))

    def append(self, program: Program) -> 'DLP':
        return DLP(self.components + (program,))

    @property
    def is_generalised(self) -> bool:
        return all(comp.is_generalised for comp in self.components)

    @property
    def has_strong_negation(self) -> bool:
        return not self.is_generalised


@dataclass(frozen=True)
class Alphabet:
    """A finite set of atoms, the objective literal universe is {p, -p | p in atoms}"""
    atoms: FrozenSet[Atom] = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.atoms, frozenset):
            object.__setattr__(self, 'atoms', frozenset(self.atoms))

    @classmethod
    def from_names(cls, names: Iterable[str]) -> 'Alphabet':
        return cls(frozenset(Atom(name.strip()) for name in names if name.strip()))

    def __iter__(self) -> Iterator[Atom]:
        return iter(sorted(self.atoms))

    def __len__(self):
        return len(self.atoms)

    def __contains__(self, item) -> bool:
        return item in self.atoms

    def __or__(self, other: 'Alphabet') -> 'Alphabet':
        return Alphabet(self.atoms | other.atoms)

    def __str__(self):
        return ', '.join(str(atom) for atom in self)

    def positive_literals(self) -> List[ObjectiveLiteral]:
        return [ObjectiveLiteral(atom) for atom in self]

    def objective_literals(self) -> List[ObjectiveLiteral]:
        return [ObjectiveLiteral(atom, negated) for atom in self for negated in (False, True)]

    def isdisjoint(self, other: 'Alphabet') -> bool:
        return self.atoms.isdisjoint(other.atoms)


def atom(name: str) -> Atom:
    return Atom(name)


def objective(name: str, strongly_negated: bool = False) -> ObjectiveLiteral:
    return ObjectiveLiteral(Atom(name), strongly_negated)


def default_complement(lit: Literal) -> Literal:
    """Toggle default negation: p -> not p, not -p -> -p"""
    return Literal(lit.objective, not lit.default_negated)


def strong_complement(lit: ObjectiveLiteral) -> ObjectiveLiteral:
    """Toggle strong negation: p -> -p, -p -> p"""
    return lit.complement()


def con(lit: Literal) -> FrozenSet[Literal]:
    """Literals in direct conflict with lit

    con(l) = {not l, -l} for an objective literal l and con(not l) = {l}

    Examples
    --------
    >>> sorted(str(x) for x in con(Literal(objective('p'))))
    ['-p', 'not p']
    """
    if lit.default_negated:
        return frozenset({Literal(lit.objective)})
    return frozenset({default_complement(lit), Literal(strong_complement(lit.objective))})


@dispatch(Rule)
def alphabet_of(rule):
    return Alphabet(frozenset(lit.atom for lit in rule.literals()))


@dispatch(Program)
def alphabet_of(program):
    return Alphabet(frozenset(lit.atom for rule in program for lit in rule.literals()))


@dispatch(DLP)
def alphabet_of(dlp):
    atoms = frozenset()
    for comp in dlp:
        atoms = atoms | alphabet_of(comp).atoms
    return Alphabet(atoms)


@dispatch(Program)
def render(program):
    return '\n'.join(str(rule) for rule in program)


@dispatch(DLP)
def render(dlp):
    return f'\n{UPDATE_SEPARATOR}\n'.join(render(comp) for comp in dlp)


@dispatch(object)
def render(obj):
    """Interpretations, literals and rules carry their canonical rendering in __str__"""
    return str(obj)
