# -*- coding: utf-8 -*-
"""
Created the 17/10/2026

@author: dlp_engine developers

Early recovery principles: a fact update solving every conflict of a fact base, or more generally an acyclic
DLP whose conflicts are all solved by later facts, must have a model.
"""
from itertools import combinations
from typing import Iterable, Optional, Tuple, Union

from pymodaq_utils.logger import set_logger, get_module_name

from dlp_engine.constraints import LevelConstraints
from dlp_engine.modelset import SemanticsId
from dlp_engine.principles.report import PropertyReport, ShapeError
from dlp_engine.single import LevelMapping
from dlp_engine.syntax import DLP, Alphabet, Program, Rule, alphabet_of, con
from dlp_engine.updates.rejection import PreconditionError
from dlp_engine.updates.semantics import models

logger = set_logger(get_module_name(__file__))

EXPTWO_SEMANTICS = (SemanticsId.RD_EXPTWO, SemanticsId.WS_EXPTWO)


def in_conflict(first: Rule, second: Rule) -> bool:
    return second.head in con(first.head)


def conflicting_pairs(program: Program) -> Iterable[Tuple[Rule, Rule]]:
    """Pairs of rules of the program with conflicting heads, con being symmetric on heads up to l / -l"""
    for first, second in combinations(program.rules, 2):
        if in_conflict(first, second) or in_conflict(second, first):
            yield first, second


def solves(fact: Rule, pair: Tuple[Rule, Rule]) -> bool:
    return fact.head in con(pair[0].head) or fact.head in con(pair[1].head)


def is_consistent_facts(program: Program) -> bool:
    """A set of facts is consistent when it has a model: no l. with not l. or -l."""
    return program.is_facts and not any(True for _ in conflicting_pairs(program))


def solves_all_conflicts(program: Program, update: Program) -> bool:
    """True if every conflict between two facts of the program is solved by a fact of the update

    Raises
    ------
    ShapeError: if any of the programs has a rule with a nonempty body
    """
    if not (program.is_facts and update.is_facts):
        raise ShapeError('Conflicts can only be solved between sets of facts')
    return all(any(solves(fact, pair) for fact in update) for pair in conflicting_pairs(program))


def check_early_recovery(semantics: Union[SemanticsId, str], program: Program, update: Program,
                         alphabet: Optional[Alphabet] = None) -> PropertyReport:
    """A consistent fact update solving all the conflicts of a fact base must lead to a model"""
    semantics = SemanticsId.from_tag(semantics)
    inputs = (program, update)
    name = 'early-recovery'
    if not (program.is_facts and update.is_facts):
        return PropertyReport.not_applicable(name, semantics, inputs, 'inputs must be sets of facts')
    if not is_consistent_facts(update):
        return PropertyReport.not_applicable(name, semantics, inputs, 'the update is not consistent')
    if not solves_all_conflicts(program, update):
        return PropertyReport.not_applicable(name, semantics, inputs, 'the update does not solve all conflicts')
    try:
        found = models(DLP((program, update)), semantics, alphabet)
    except PreconditionError as e:
        return PropertyReport.not_applicable(name, semantics, inputs, str(e))
    if len(found) > 0:
        return PropertyReport(name, semantics, inputs, True)
    return PropertyReport(name, semantics, inputs, False, witness=found,
                          expected_failure=semantics in EXPTWO_SEMANTICS)


def _rules(program: Union[Program, DLP]) -> Program:
    return program.all_rules() if isinstance(program, DLP) else program


def is_acyclic(program: Union[Program, DLP]) -> Optional[LevelMapping]:
    """Level mapping under which every rule head is above its body, -p sharing the level of p

    Computed by longest path layering of the atom dependency graph, a fact constraining nothing.

    Returns
    -------
    LevelMapping or None if the dependency graph has a cycle
    """
    program = _rules(program)
    alphabet = alphabet_of(program)
    constraints = LevelConstraints(list(alphabet))
    for rule in program:
        for lit in rule.body:
            constraints.greater(rule.head.atom, lit.atom)
    levels = constraints.solve()
    if levels is None:
        return None
    return LevelMapping({lit: levels[lit.atom] for lit in alphabet.objective_literals()})


def verify_acyclic(program: Union[Program, DLP], mapping: LevelMapping) -> bool:
    """Check both acyclicity clauses literally for the given level mapping"""
    program = _rules(program)
    for lit in alphabet_of(program).objective_literals():
        if mapping.level(lit) != mapping.level(lit.complement()):
            return False
    return all(mapping.level(rule.head) > mapping.level(lit) for rule in program for lit in rule.body)


def all_conflicts_solved(dlp: DLP) -> bool:
    """Every conflict inside a component is solved by a fact of a later component"""
    for index, component in enumerate(dlp):
        later_facts = [rule for later in dlp.components[index + 1:] for rule in later if rule.is_fact]
        for pair in conflicting_pairs(component):
            if not any(solves(fact, pair) for fact in later_facts):
                return False
    return True


def check_generalised_early_recovery(semantics: Union[SemanticsId, str], dlp: DLP,
                                     alphabet: Optional[Alphabet] = None) -> PropertyReport:
    """An acyclic DLP whose conflicts are all solved must have a model"""
    semantics = SemanticsId.from_tag(semantics)
    inputs = (dlp,)
    name = 'generalised-early-recovery'
    if is_acyclic(dlp) is None:
        return PropertyReport.not_applicable(name, semantics, inputs, 'the program is cyclic')
    if not all_conflicts_solved(dlp):
        return PropertyReport.not_applicable(name, semantics, inputs, 'some conflict is not solved')
    try:
        found = models(dlp, semantics, alphabet)
    except PreconditionError as e:
        return PropertyReport.not_applicable(name, semantics, inputs, str(e))
    if len(found) > 0:
        return PropertyReport(name, semantics, inputs, True)
    return PropertyReport(name, semantics, inputs, False, witness=found,
                          expected_failure=semantics in EXPTWO_SEMANTICS)
