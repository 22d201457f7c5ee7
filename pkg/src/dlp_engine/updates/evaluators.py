# -*- coding: utf-8 -*-
"""
Created the 17/10/2026

@author: dlp_engine developers

Model computation of the DLP semantics by enumeration of the candidate interpretations:

* RD: J' is the least model of the unrejected rules together with the constrained defaults
* WS: J is supported w.r.t. a level mapping, rules being rejected only from later components
* extended RD: J' is reached by iterating the guarded consequence operator t_rds from the empty set
* extended WS: as WS with conflicts given by con and supporting rules taken from the remainder
"""
from typing import FrozenSet, List, Optional, Tuple

from pymodaq_utils.logger import set_logger, get_module_name

from dlp_engine.constraints import LevelConstraints, ZERO
from dlp_engine.interp import (FixpointError, Interpretation, LiteralValuation, enumerate_interpretations,
                               first_levels, tp_iterates)
from dlp_engine.modelset import ModelSet, SemanticsId
from dlp_engine.single import LevelMapping, def_assumptions
from dlp_engine.syntax import Alphabet, DLP, Literal, ObjectiveLiteral, alphabet_of, con
from dlp_engine.updates.rejection import (check_generalised, conflicting_witnesses, def_constrained, rej_rd,
                                          rej_ws, rej_wss, rem, valuation_of, occurrences_by_head)

logger = set_logger(get_module_name(__file__))


def full_alphabet(dlp: DLP, alphabet: Optional[Alphabet] = None) -> Alphabet:
    return alphabet_of(dlp) if alphabet is None else alphabet_of(dlp) | alphabet


def _filter_models(dlp: DLP, alphabet: Optional[Alphabet], limit: Optional[int], semantics: SemanticsId,
                   accepts) -> ModelSet:
    alphabet = full_alphabet(dlp, alphabet)
    models = tuple(interpretation for interpretation in enumerate_interpretations(alphabet, limit)
                   if accepts(interpretation))
    logger.debug(f'{semantics.tag}: {len(models)} model(s) over {len(alphabet)} atoms')
    return ModelSet(models, semantics)


# RD and WS

def rd_iterates(dlp: DLP, interpretation: Interpretation, alphabet: Optional[Alphabet] = None,
                opaque: bool = False) -> List[FrozenSet[Literal]]:
    """Iterates of the consequence operator of the unrejected rules plus the constrained defaults"""
    rejected = rej_rd(dlp, interpretation, alphabet, opaque)
    rules = [occ.rule for occ in dlp.all() if occ not in rejected]
    rules.extend(def_constrained(dlp, interpretation, alphabet, opaque))
    return tp_iterates(rules)


def is_rd_model(dlp: DLP, interpretation: Interpretation, alphabet: Optional[Alphabet] = None,
                opaque: bool = False) -> bool:
    return rd_iterates(dlp, interpretation, alphabet, opaque)[-1] == \
        valuation_of(dlp, interpretation, alphabet, opaque)


def rd_models(dlp: DLP, alphabet: Optional[Alphabet] = None, limit: Optional[int] = None,
              opaque: bool = False) -> ModelSet:
    """RD-models of a DLP without strong negation

    Raises
    ------
    PreconditionError: if the DLP has strong negation and -p is not read as an opaque atom
    EnumerationLimitError
    """
    if not opaque:
        check_generalised(dlp, 'RD')
    return _filter_models(dlp, alphabet, limit, SemanticsId.RD,
                          lambda interpretation: is_rd_model(dlp, interpretation, alphabet, opaque))


def rd_level_mapping(dlp: DLP, interpretation: Interpretation, alphabet: Optional[Alphabet] = None,
                     opaque: bool = False) -> LevelMapping:
    """Level of l: first iteration where l or not l is derived from the unrejected rules and defaults"""
    levels = first_levels(rd_iterates(dlp, interpretation, alphabet, opaque))
    return LevelMapping.from_levels(levels, full_alphabet(dlp, alphabet))


def is_ws_model(dlp: DLP, interpretation: Interpretation, mapping: LevelMapping,
                alphabet: Optional[Alphabet] = None, opaque: bool = False) -> bool:
    """Check both conditions of a WS-model w.r.t. the given level mapping"""
    valuation = valuation_of(dlp, interpretation, alphabet, opaque)
    rejected = rej_ws(dlp, interpretation, mapping, alphabet, opaque)
    kept = [occ.rule for occ in dlp.all() if occ not in rejected]
    if any(rule.body <= valuation and rule.head not in valuation for rule in kept):
        return False
    for lit in interpretation.literals:
        if not any(rule.head == Literal(lit) and rule.body <= valuation and mapping.supports(rule)
                   for rule in kept):
            return False
    return True


def ws_models(dlp: DLP, alphabet: Optional[Alphabet] = None, limit: Optional[int] = None,
              opaque: bool = False) -> ModelSet:
    """WS-models of a DLP without strong negation, the witness mapping coming from the RD iteration"""
    if not opaque:
        check_generalised(dlp, 'WS')

    def accepts(interpretation):
        mapping = rd_level_mapping(dlp, interpretation, alphabet, opaque)
        return is_ws_model(dlp, interpretation, mapping, alphabet, opaque)

    return _filter_models(dlp, alphabet, limit, SemanticsId.WS, accepts)


# extended RD and extended WS

class GuardedOperator:
    """The consequence operator of the extended RD semantics for a fixed interpretation J

    Heads of rules from rem(P, J') and def(J) whose body is included in S, unless a rule of rem(P, S) in
    conflict with them has a body included in J'.
    """

    def __init__(self, dlp: DLP, interpretation: Interpretation, alphabet: Optional[Alphabet] = None):
        self.dlp = dlp
        self.alphabet = full_alphabet(dlp, alphabet)
        self.valuation = valuation_of(dlp, interpretation, self.alphabet)
        self._witnesses = conflicting_witnesses(dlp)
        self.candidates = [occ.rule for occ in self._remainder(self.valuation)]
        self.candidates.extend(def_assumptions(interpretation, self.alphabet))
        by_head = occurrences_by_head(dlp.all())
        self._blockers = {}
        for rule in self.candidates:
            if rule.head not in self._blockers:
                self._blockers[rule.head] = [occ for head in con(rule.head) for occ in by_head.get(head, [])
                                             if occ.rule.body <= self.valuation]

    def _remainder(self, literals: FrozenSet[Literal]):
        return [occ for occ, witnesses in self._witnesses.items()
                if not any(witness.rule.body <= literals for witness in witnesses)]

    def __call__(self, literals: FrozenSet[Literal]) -> FrozenSet[Literal]:
        remainder = frozenset(self._remainder(literals))
        return frozenset(rule.head for rule in self.candidates
                         if rule.body <= literals and not any(occ in remainder for occ in self._blockers[rule.head]))

    def iterates(self, early_exit: bool = False) -> List[FrozenSet[Literal]]:
        """T^0(empty) = empty, T^1(empty), ... up to the first repeated iterate

        With early_exit, the iteration stops at the first iterate holding a literal outside J'.
        """
        bound = 2 * len(self.alphabet.objective_literals()) + 1
        iterates = [frozenset()]
        for _ in range(bound + 1):
            current = self(iterates[-1])
            if current in iterates:
                return iterates
            iterates.append(current)
            if early_exit and not current <= self.valuation:
                return iterates
        raise FixpointError(f'The extended consequence operator did not converge within {bound} steps')


def t_rds(dlp: DLP, interpretation: Interpretation, literals: FrozenSet[Literal],
          alphabet: Optional[Alphabet] = None) -> FrozenSet[Literal]:
    """One application of the extended RD consequence operator to the literal set S"""
    if isinstance(literals, LiteralValuation):
        literals = literals.true_literals
    return GuardedOperator(dlp, interpretation, alphabet)(frozenset(literals))


def extended_rd_trace(dlp: DLP, interpretation: Interpretation,
                      alphabet: Optional[Alphabet] = None) -> List[LiteralValuation]:
    return [LiteralValuation(iterate) for iterate in GuardedOperator(dlp, interpretation, alphabet).iterates()]


def is_extended_rd_model(dlp: DLP, interpretation: Interpretation, alphabet: Optional[Alphabet] = None) -> bool:
    """J' must be the union of the iterates of t_rds from the empty set"""
    operator = GuardedOperator(dlp, interpretation, alphabet)
    accumulated = frozenset()
    for iterate in operator.iterates(early_exit=True):
        accumulated = accumulated | iterate
    return accumulated == operator.valuation


def extended_rd_models(dlp: DLP, alphabet: Optional[Alphabet] = None, limit: Optional[int] = None) -> ModelSet:
    return _filter_models(dlp, alphabet, limit, SemanticsId.ERD,
                          lambda interpretation: is_extended_rd_model(dlp, interpretation, alphabet))


def extended_level_mapping(dlp: DLP, interpretation: Interpretation,
                           alphabet: Optional[Alphabet] = None) -> LevelMapping:
    """Level of l: first iteration of t_rds where l or not l shows up, 0 if it never does"""
    operator = GuardedOperator(dlp, interpretation, alphabet)
    return LevelMapping.from_levels(first_levels(operator.iterates()), operator.alphabet)


def is_extended_ws_model(dlp: DLP, interpretation: Interpretation, mapping: LevelMapping,
                         alphabet: Optional[Alphabet] = None) -> bool:
    """Check both conditions of an extended WS-model w.r.t. the given level mapping"""
    valuation = valuation_of(dlp, interpretation, alphabet)
    rejected = rej_wss(dlp, interpretation, mapping, alphabet)
    if any(occ.rule.body <= valuation and occ.rule.head not in valuation
           for occ in dlp.all() if occ not in rejected):
        return False
    remainder = [occ.rule for occ in rem(dlp, valuation)]
    for lit in interpretation.literals:
        if not any(rule.head == Literal(lit) and rule.body <= valuation and mapping.supports(rule)
                   for rule in remainder):
            return False
    return True


LevelChoice = List[Tuple[ObjectiveLiteral, FrozenSet[Literal]]]  # (literal, body) pairs: literal above body


def _raise_above(constraints: LevelConstraints, choice: LevelChoice):
    for high, body in choice:
        constraints.greater(high, ZERO)
        for lit in body:
            constraints.greater(high, lit.objective)


def _first_solution(constraints: LevelConstraints, groups: List[List[LevelChoice]]) -> Optional[dict]:
    if not constraints.is_feasible():
        return None
    if not groups:
        return constraints.solve()
    for choice in groups[0]:
        branch = constraints.copy()
        _raise_above(branch, choice)
        levels = _first_solution(branch, groups[1:])
        if levels is not None:
            return levels
    return None


def search_extended_mapping(dlp: DLP, interpretation: Interpretation,
                            alphabet: Optional[Alphabet] = None) -> Optional[LevelMapping]:
    """Level mapping under which J is an extended WS-model, None if there is none

    Every rule violated in J' picks a rejecting rule of a later component, the literals in conflict with the
    violated head going above the rejecting body. Every literal of J picks a supporting rule of rem(P, J'),
    going above its body. Choices are explored depth first, a branch being cut as soon as its ordering
    constraints have no solution.
    """
    alphabet = full_alphabet(dlp, alphabet)
    valuation = valuation_of(dlp, interpretation, alphabet)
    groups: List[List[LevelChoice]] = []
    for occ, witnesses in conflicting_witnesses(dlp).items():
        if occ.rule.body <= valuation and occ.rule.head not in valuation:
            conflicting = [lit.objective for lit in con(occ.rule.head)]
            choices = [[(high, witness.rule.body) for high in conflicting]
                       for witness in witnesses if witness.rule.body <= valuation]
            if not choices:
                return None
            groups.append(choices)
    remainder = rem(dlp, valuation)
    for lit in interpretation.literals:
        choices = [[(lit, occ.rule.body)] for occ in remainder
                   if occ.rule.head == Literal(lit) and occ.rule.body <= valuation]
        if not choices:
            return None
        groups.append(choices)
    groups.sort(key=len)
    levels = _first_solution(LevelConstraints(alphabet.objective_literals(), with_zero=True), groups)
    if levels is None:
        return None
    return LevelMapping.from_levels(levels, alphabet)


def extended_ws_mapping(dlp: DLP, interpretation: Interpretation,
                        alphabet: Optional[Alphabet] = None) -> Optional[LevelMapping]:
    """Witness level mapping of an extended WS-model

    The t_rds iteration levels are tried first, the constraint search being run when they do not qualify.

    Returns
    -------
    LevelMapping or None if J is not an extended WS-model
    """
    mapping = extended_level_mapping(dlp, interpretation, alphabet)
    if is_extended_ws_model(dlp, interpretation, mapping, alphabet):
        return mapping
    mapping = search_extended_mapping(dlp, interpretation, alphabet)
    if mapping is None:
        return None
    if not is_extended_ws_model(dlp, interpretation, mapping, alphabet):
        logger.warning(f'Discarding the level mapping {mapping} found for {interpretation}: it does not verify')
        return None
    return mapping


def extended_ws_models(dlp: DLP, alphabet: Optional[Alphabet] = None, limit: Optional[int] = None) -> ModelSet:
    return _filter_models(dlp, alphabet, limit, SemanticsId.EWS,
                          lambda interpretation: extended_ws_mapping(dlp, interpretation, alphabet) is not None)
