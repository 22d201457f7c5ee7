# -*- coding: utf-8 -*-
"""
Created the 17/10/2026

@author: dlp_engine developers

Brute force decision procedures for the level mapping based semantics, independent of the constructive
mappings used by the evaluators.
"""
import itertools
from typing import Hashable, List, Optional, Sequence, Tuple

from pymodaq_utils.logger import set_logger, get_module_name

from dlp_engine.constraints import LevelConstraints, ZERO
from dlp_engine.interp import Interpretation, completion
from dlp_engine.single import LevelMapping, verify_well_supported
from dlp_engine.syntax import DLP, Alphabet, DLPError, Literal, Program, RuleOccurrence, alphabet_of, con
from dlp_engine.updates.rejection import occurrences_by_head, rem
from dlp_engine.utils import get_oracle_limit

logger = set_logger(get_module_name(__file__))

Constraint = Tuple[bool, Hashable, Hashable]  # (strict, high, low)


class OracleLimitError(DLPError):
    pass


def _above_body(high: Hashable, body) -> List[Constraint]:
    """high > every body literal and high > 0, that is high > the body level"""
    return [(True, high, lit.objective) for lit in body] + [(True, high, ZERO)]


def _solvable(nodes: Sequence[Hashable], constraints: Sequence[Constraint]) -> bool:
    graph = LevelConstraints(nodes, with_zero=True)
    for strict, high, low in constraints:
        if strict:
            graph.greater(high, low)
        else:
            graph.greater_equal(high, low)
    return graph.is_feasible()


def ws_oracle(dlp: DLP, interpretation: Interpretation, extended: bool, alphabet: Optional[Alphabet] = None,
              limit: Optional[int] = None) -> bool:
    """Decide whether some level mapping makes J a (extended) WS-model of the DLP

    Every violated rule picks a rejecting rule and every true literal picks a supporting rule, non extended
    supporters also picking, for each later rule that could reject them, a body literal keeping it from doing
    so. Each choice turns into ordering constraints between literal levels, and J is accepted iff one choice
    leads to satisfiable constraints.

    Raises
    ------
    OracleLimitError: if the DLP has more rule occurrences than the oracle limit
    """
    limit = get_oracle_limit(limit)
    occurrences = dlp.all()
    if len(occurrences) > limit:
        raise OracleLimitError(f'The oracle handles at most {limit} rules, got {len(occurrences)}')
    alphabet = alphabet_of(dlp) | interpretation.atoms | (Alphabet() if alphabet is None else alphabet)
    valuation = completion(interpretation, alphabet.objective_literals())
    by_head = occurrences_by_head(occurrences)
    nodes = alphabet.objective_literals()

    def rejecters(occ: RuleOccurrence) -> List[RuleOccurrence]:
        heads = con(occ.rule.head) if extended else [Literal(occ.rule.head.objective,
                                                             not occ.rule.head.default_negated)]
        return [witness for head in heads for witness in by_head.get(head, [])
                if witness.component > occ.component and witness.rule.body <= valuation]

    groups: List[List[List[Constraint]]] = []
    for occ in occurrences:
        if occ.rule.body <= valuation and occ.rule.head not in valuation:
            alternatives = []
            for witness in rejecters(occ):
                if extended:
                    alternatives.append([constraint for conflicting in con(occ.rule.head)
                                         for constraint in _above_body(conflicting.objective, witness.rule.body)])
                else:
                    alternatives.append(_above_body(witness.rule.head.objective, witness.rule.body))
            if not alternatives:
                return False
            groups.append(alternatives)

    supporting = rem(dlp, valuation) if extended else occurrences
    for lit in interpretation.literals:
        alternatives = []
        for occ in supporting:
            if occ.rule.head != Literal(lit) or not occ.rule.body <= valuation:
                continue
            support = _above_body(lit, occ.rule.body)
            if extended:
                alternatives.append(support)
                continue
            blockers = [[(False, body_lit.objective, lit) for body_lit in witness.rule.body]
                        or [(False, ZERO, lit)] for witness in rejecters(occ)]
            for blocking in itertools.product(*blockers):
                alternatives.append(support + list(blocking))
        if not alternatives:
            return False
        groups.append(alternatives)

    for choice in itertools.product(*groups):
        if _solvable(nodes, [constraint for alternative in choice for constraint in alternative]):
            return True
    return False


def search_level_mapping(program: Program, interpretation: Interpretation, alphabet: Optional[Alphabet] = None,
                         bound: Optional[int] = None) -> Optional[LevelMapping]:
    """Exhaustive search of a level mapping under which J is a well-supported model of the program

    Levels range over 0..bound, bound defaulting to the number of objective literals.
    """
    alphabet = alphabet_of(program) | interpretation.atoms | (Alphabet() if alphabet is None else alphabet)
    literals = alphabet.objective_literals()
    bound = len(literals) if bound is None else bound
    for levels in itertools.product(range(bound + 1), repeat=len(literals)):
        mapping = LevelMapping(dict(zip(literals, levels)))
        if verify_well_supported(program, interpretation, mapping):
            return mapping
    return None
