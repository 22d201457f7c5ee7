# -*- coding: utf-8 -*-
"""
Created the 17/10/2026

@author: dlp_engine developers

Semantics of a single extended program: stable models and well-supported models.
"""
from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping, Optional, Union

from pymodaq_utils.logger import set_logger, get_module_name

from dlp_engine.interp import (Interpretation, enumerate_interpretations, least_model, satisfies, tp_iterates,
                               twiall)
from dlp_engine.modelset import ModelSet, SemanticsId
from dlp_engine.syntax import Alphabet, Literal, ObjectiveLiteral, Program, Rule, alphabet_of

logger = set_logger(get_module_name(__file__))


@dataclass(frozen=True)
class LevelMapping:
    """Natural number levels of objective literals, with level(not l) = level(l)

    Examples
    --------
    >>> from dlp_engine.syntax import objective
    >>> mapping = LevelMapping({objective('p'): 2})
    >>> mapping.up([Literal(objective('p'), True)]), mapping.up([])
    (2, 0)
    """
    levels: Mapping[ObjectiveLiteral, int] = field(default_factory=dict)

    @classmethod
    def uniform(cls, alphabet: Alphabet, value: int = 1) -> 'LevelMapping':
        return cls({lit: value for lit in alphabet.objective_literals()})

    @classmethod
    def from_levels(cls, levels: Mapping[ObjectiveLiteral, int], alphabet: Alphabet) -> 'LevelMapping':
        """Complete a partial mapping over the alphabet, missing literals getting level 0"""
        full = {lit: 0 for lit in alphabet.objective_literals()}
        full.update(levels)
        return cls(full)

    def level(self, lit: Union[Literal, ObjectiveLiteral]) -> int:
        if isinstance(lit, Literal):
            lit = lit.objective
        return int(self.levels.get(lit, 0))

    def __call__(self, lit: Union[Literal, ObjectiveLiteral]) -> int:
        return self.level(lit)

    def up(self, literals: Iterable[Literal]) -> int:
        """Maximum level of the literals, 0 for the empty set"""
        return max((self.level(lit) for lit in literals), default=0)

    def down(self, literals: Iterable[Literal]) -> int:
        """Minimum level of a nonempty set of literals"""
        return min(self.level(lit) for lit in literals)

    def supports(self, rule: Rule) -> bool:
        return self.level(rule.head) > self.up(rule.body)

    def as_dict(self) -> Dict[str, int]:
        return {str(lit): int(value) for lit, value in sorted(self.levels.items())}

    def __str__(self):
        return ', '.join(f'{lit}: {value}' for lit, value in self.as_dict().items())


def _alphabet(program: Program, interpretation: Optional[Interpretation] = None,
              alphabet: Optional[Alphabet] = None) -> Alphabet:
    result = alphabet_of(program)
    if alphabet is not None:
        result = result | alphabet
    if interpretation is not None:
        result = result | interpretation.atoms
    return result


def def_assumptions(interpretation: Interpretation, alphabet: Alphabet) -> Program:
    """Default facts not l. for every objective literal of the alphabet outside J"""
    return Program(tuple(Rule(Literal(lit, True)) for lit in alphabet.objective_literals()
                         if lit not in interpretation.literals))


def is_stable_model(program: Program, interpretation: Interpretation, alphabet: Optional[Alphabet] = None) -> bool:
    """J is a stable model iff J' is the least model of P together with def(J)"""
    alphabet = _alphabet(program, interpretation, alphabet)
    return twiall(interpretation, alphabet).matches(
        least_model(program + def_assumptions(interpretation, alphabet)))


def stable_models(program: Program, alphabet: Optional[Alphabet] = None, limit: Optional[int] = None) -> ModelSet:
    alphabet = _alphabet(program, alphabet=alphabet)
    return ModelSet(tuple(interpretation for interpretation in enumerate_interpretations(alphabet, limit)
                          if is_stable_model(program, interpretation, alphabet)), SemanticsId.SM)


def verify_well_supported(program: Program, interpretation: Interpretation, mapping: LevelMapping) -> bool:
    """Check J models P and each literal of J has a rule with satisfied body and a lower level body"""
    if not satisfies(interpretation, program):
        return False
    for lit in interpretation.literals:
        if not any(rule.head == Literal(lit) and satisfies(interpretation, rule.body) and mapping.supports(rule)
                   for rule in program):
            return False
    return True


def find_level_mapping(program: Program, interpretation: Interpretation,
                       alphabet: Optional[Alphabet] = None) -> Optional[LevelMapping]:
    """Witness level mapping built from the iteration indices of the consequence operator

    Literals of J take the first index k at which they belong to T_Q^k(empty), Q being P with def(J),
    any other literal gets level 0.

    Returns
    -------
    LevelMapping or None if J is not well-supported
    """
    if not satisfies(interpretation, program):
        return None
    alphabet = _alphabet(program, interpretation, alphabet)
    iterates = tp_iterates(program + def_assumptions(interpretation, alphabet))
    levels = {}
    for lit in interpretation.literals:
        index = next((ind for ind, iterate in enumerate(iterates) if Literal(lit) in iterate), None)
        if index is None:
            return None
        levels[lit] = index
    mapping = LevelMapping.from_levels(levels, alphabet)
    if verify_well_supported(program, interpretation, mapping):
        return mapping
    return None


def well_supported_models(program: Program, alphabet: Optional[Alphabet] = None,
                          limit: Optional[int] = None) -> ModelSet:
    alphabet = _alphabet(program, alphabet=alphabet)
    return ModelSet(tuple(interpretation for interpretation in enumerate_interpretations(alphabet, limit)
                          if find_level_mapping(program, interpretation, alphabet) is not None),
                    SemanticsId.WS_SINGLE)
