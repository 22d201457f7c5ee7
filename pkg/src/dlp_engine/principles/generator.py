# -*- coding: utf-8 -*-
"""
Created the 17/10/2026

@author: dlp_engine developers

Seeded random programs and DLPs feeding the property suites. Every generator takes a numpy Generator so that
an instance is fully determined by its seed.
"""
from dataclasses import dataclass, fields
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from pymodaq_utils.logger import set_logger, get_module_name

from dlp_engine.principles.recovery import conflicting_pairs, solves
from dlp_engine.syntax import DLP, Atom, Literal, ObjectiveLiteral, Program, Rule
from dlp_engine.utils import config

logger = set_logger(get_module_name(__file__))

ATOM_NAMES = ('p', 'q', 'r', 's', 't', 'u', 'v', 'w')

Seed = Union[int, Sequence[int], np.random.Generator]


@dataclass(frozen=True)
class GeneratorParams:
    """Bounds of the generated instances"""
    max_components: int = 3
    max_atoms: int = 4
    max_rules: int = 7
    max_body: int = 2
    strong_negation_rate: float = 0.3
    default_negation_rate: float = 0.4
    tautology_max_body: int = 2

    def __post_init__(self):
        for name in ('max_components', 'max_atoms', 'max_rules', 'tautology_max_body'):
            if getattr(self, name) < 1:
                raise ValueError(f'{name} should be a positive integer, got {getattr(self, name)}')
        if self.max_body < 0:
            raise ValueError(f'max_body should be a natural number, got {self.max_body}')
        for name in ('strong_negation_rate', 'default_negation_rate'):
            if not 0 <= getattr(self, name) <= 1:
                raise ValueError(f'{name} should be a probability, got {getattr(self, name)}')

    @classmethod
    def from_config(cls) -> 'GeneratorParams':
        return cls(**{param.name: config('generator', param.name) for param in fields(cls)})


def get_rng(seed: Seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def atom_pool(count: int) -> List[Atom]:
    return [Atom(ATOM_NAMES[ind] if ind < len(ATOM_NAMES) else f'a{ind}') for ind in range(count)]


def random_literal(rng: np.random.Generator, atoms: Sequence[Atom], params: GeneratorParams,
                   strong_negation: bool) -> Literal:
    atom = atoms[rng.integers(len(atoms))]
    strong = bool(strong_negation and rng.random() < params.strong_negation_rate)
    return Literal(ObjectiveLiteral(atom, strong), bool(rng.random() < params.default_negation_rate))


def random_rule(rng: np.random.Generator, atoms: Sequence[Atom], params: GeneratorParams,
                strong_negation: bool, body_atoms: Optional[Sequence[Atom]] = None) -> Rule:
    head = random_literal(rng, atoms, params, strong_negation)
    body_atoms = atoms if body_atoms is None else body_atoms
    size = rng.integers(0, params.max_body + 1) if len(body_atoms) > 0 else 0
    body = frozenset(random_literal(rng, body_atoms, params, strong_negation) for _ in range(size))
    return Rule(head, body)


def random_program(rng: np.random.Generator, atoms: Sequence[Atom], params: GeneratorParams,
                   strong_negation: bool, max_rules: Optional[int] = None) -> Program:
    max_rules = params.max_rules if max_rules is None else max_rules
    return Program(tuple(random_rule(rng, atoms, params, strong_negation)
                         for _ in range(rng.integers(0, max_rules + 1))))


def random_atoms(rng: np.random.Generator, params: GeneratorParams, minimum: int = 1) -> List[Atom]:
    return atom_pool(int(rng.integers(min(minimum, params.max_atoms), params.max_atoms + 1)))


def generate_random_dlp(seed: Seed, params: Optional[GeneratorParams] = None, strong_negation: bool = True) -> DLP:
    """Random DLP within the bounds of params, deterministic for a given seed

    Parameters
    ----------
    seed: int, sequence of int or numpy Generator
    params: GeneratorParams
        bounds on the number of components, atoms, rules and body literals
    strong_negation: bool
        if False the DLP is made of generalised programs
    """
    rng = get_rng(seed)
    params = GeneratorParams() if params is None else params
    atoms = random_atoms(rng, params)
    n_components = int(rng.integers(1, params.max_components + 1))
    components = [[] for _ in range(n_components)]
    for _ in range(rng.integers(0, params.max_rules + 1)):
        components[rng.integers(n_components)].append(random_rule(rng, atoms, params, strong_negation))
    return DLP(tuple(Program(tuple(rules)) for rules in components))


def _fact_patterns(atom: Atom, strong_negation: bool) -> List[Tuple[Literal, ...]]:
    pos, neg = ObjectiveLiteral(atom), ObjectiveLiteral(atom, True)
    patterns = [(), (Literal(pos),), (Literal(pos, True),)]
    if strong_negation:
        patterns += [(Literal(neg),), (Literal(neg, True),), (Literal(pos), Literal(neg, True)),
                     (Literal(neg), Literal(pos, True)), (Literal(pos, True), Literal(neg, True))]
    return patterns


def random_consistent_facts(rng: np.random.Generator, atoms: Sequence[Atom], strong_negation: bool) -> Program:
    rules = []
    for atom in atoms:
        patterns = _fact_patterns(atom, strong_negation)
        rules.extend(Rule(head) for head in patterns[rng.integers(len(patterns))])
    return Program(tuple(rules))


def random_facts(rng: np.random.Generator, atoms: Sequence[Atom], strong_negation: bool) -> Program:
    """Facts with possible conflicts, each literal of the atoms being asserted with probability one half"""
    literals = [Literal(ObjectiveLiteral(atom, strong), naf) for atom in atoms
                for strong in ((False, True) if strong_negation else (False,)) for naf in (False, True)]
    return Program(tuple(Rule(lit) for lit in literals if rng.random() < 0.5))


def consistent_fact_dlp(seed: Seed, params: Optional[GeneratorParams] = None, strong_negation: bool = True) -> DLP:
    rng = get_rng(seed)
    params = GeneratorParams() if params is None else params
    atoms = random_atoms(rng, params)
    return DLP(tuple(random_consistent_facts(rng, atoms, strong_negation)
                     for _ in range(rng.integers(1, params.max_components + 1))))


def _resolving_fact(pair: Tuple[Rule, Rule]) -> Rule:
    """not l. for the objective head l of a conflicting pair, l. conflicts with both heads"""
    objective_head = pair[0].head if pair[0].head.is_objective else pair[1].head
    return Rule(Literal(objective_head.objective, True))


def early_recovery_instance(seed: Seed, params: Optional[GeneratorParams] = None,
                            strong_negation: bool = True) -> Tuple[Program, Program]:
    """A fact base and a consistent fact update solving all its conflicts"""
    rng = get_rng(seed)
    params = GeneratorParams() if params is None else params
    atoms = random_atoms(rng, params)
    program = random_facts(rng, atoms, strong_negation)
    update = list(random_consistent_facts(rng, atoms, strong_negation))
    for pair in conflicting_pairs(program):
        if not any(solves(fact, pair) for fact in update):
            update.append(_resolving_fact(pair))
    return program, Program(tuple(update))


def acyclic_solved_dlp(seed: Seed, params: Optional[GeneratorParams] = None, strong_negation: bool = True) -> DLP:
    """An acyclic DLP whose conflicts are all solved by a trailing component of default facts

    Body atoms of a rule are strictly lower than its head atom in a random order of the atoms.
    """
    rng = get_rng(seed)
    params = GeneratorParams() if params is None else params
    atoms = random_atoms(rng, params)
    order = [atoms[ind] for ind in rng.permutation(len(atoms))]
    n_components = int(rng.integers(1, params.max_components + 1))
    components = [[] for _ in range(n_components)]
    for _ in range(rng.integers(0, params.max_rules + 1)):
        rank = int(rng.integers(len(order)))
        rule = random_rule(rng, [order[rank]], params, strong_negation, body_atoms=order[:rank])
        components[rng.integers(n_components)].append(rule)
    programs = [Program(tuple(rules)) for rules in components]
    resolving = []
    for index, program in enumerate(programs):
        later_facts = [rule for later in programs[index + 1:] for rule in later if rule.is_fact]
        for pair in conflicting_pairs(program):
            if not any(solves(fact, pair) for fact in later_facts + resolving):
                resolving.append(_resolving_fact(pair))
    if resolving:
        programs.append(Program(tuple(dict.fromkeys(resolving))))
    return DLP(tuple(programs))


def tautology(rng: np.random.Generator, atoms: Sequence[Atom], params: GeneratorParams,
              strong_negation: bool) -> Rule:
    """A rule whose head belongs to its body, objective or default headed"""
    head = random_literal(rng, atoms, params, strong_negation)
    others = [random_literal(rng, atoms, params, strong_negation)
              for _ in range(rng.integers(0, params.tautology_max_body))]
    return Rule(head, frozenset([head] + others))


def tautology_dlp(rng: np.random.Generator, atoms: Sequence[Atom], params: GeneratorParams,
                  strong_negation: bool, n_components: int) -> DLP:
    return DLP(tuple(Program(tuple(tautology(rng, atoms, params, strong_negation)
                                   for _ in range(rng.integers(0, 3))))
                     for _ in range(n_components)))


def split_atoms(rng: np.random.Generator, params: GeneratorParams) -> Tuple[List[Atom], List[Atom], List[Atom]]:
    """All atoms together with two disjoint nonempty parts of them"""
    atoms = random_atoms(rng, params, minimum=2)
    shuffled = [atoms[ind] for ind in rng.permutation(len(atoms))]
    cut = int(rng.integers(1, len(shuffled))) if len(shuffled) > 1 else 1
    return atoms, shuffled[:cut], shuffled[cut:]
