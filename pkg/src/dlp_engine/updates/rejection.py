# -*- coding: utf-8 -*-
"""
Created the 17/10/2026

@author: dlp_engine developers

Rejected rules of a DLP under the causal rejection semantics.

RD and WS deal with DLPs without strong negation, a rule being rejected by a rule with the default complement
of its head. The extended semantics reject a rule by a later rule whose head is in conflict with its head, see
`con`. When called with ``opaque=True``, RD and WS read -p as a fresh atom, the universe of the completion J'
then being every objective literal of the alphabet instead of the atoms only.
"""
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple, Union

from pymodaq_utils.logger import set_logger, get_module_name

from dlp_engine.interp import Interpretation, LiteralValuation, completion
from dlp_engine.single import LevelMapping
from dlp_engine.syntax import (Alphabet, DLP, DLPError, Literal, ObjectiveLiteral, Program, Rule, RuleOccurrence,
                               alphabet_of, con, default_complement)

logger = set_logger(get_module_name(__file__))


class PreconditionError(DLPError):
    pass


@dataclass(frozen=True)
class RejectionSet:
    """Rejected rule occurrences of a DLP, identified by component and position"""
    occurrences: FrozenSet[RuleOccurrence] = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.occurrences, frozenset):
            object.__setattr__(self, 'occurrences', frozenset(self.occurrences))

    def __iter__(self) -> Iterator[RuleOccurrence]:
        return iter(sorted(self.occurrences))

    def __len__(self):
        return len(self.occurrences)

    def __contains__(self, item: RuleOccurrence) -> bool:
        return item in self.occurrences

    def __str__(self):
        return '{' + ', '.join(str(occ) for occ in self) + '}'

    def rules(self) -> List[Rule]:
        return [occ.rule for occ in self]

    def positions(self) -> FrozenSet[Tuple[int, int]]:
        return frozenset((occ.component, occ.position) for occ in self.occurrences)


LiteralSet = Union[FrozenSet[Literal], LiteralValuation]


def _literal_set(literals: LiteralSet) -> FrozenSet[Literal]:
    if isinstance(literals, LiteralValuation):
        return literals.true_literals
    return frozenset(literals)


def check_generalised(dlp: DLP, name: str):
    if dlp.has_strong_negation:
        raise PreconditionError(f'The {name} semantics requires a DLP without strong negation')


def universe(dlp: DLP, alphabet: Optional[Alphabet] = None, opaque: bool = True) -> List[ObjectiveLiteral]:
    """Objective literals the completion J' ranges over: atoms only unless -p is an opaque token"""
    alphabet = alphabet_of(dlp) if alphabet is None else alphabet_of(dlp) | alphabet
    return alphabet.objective_literals() if opaque else alphabet.positive_literals()


def valuation_of(dlp: DLP, interpretation: Interpretation, alphabet: Optional[Alphabet] = None,
                 opaque: bool = True) -> FrozenSet[Literal]:
    return completion(interpretation, universe(dlp, alphabet, opaque))


def occurrences_by_head(occurrences: Iterable[RuleOccurrence]) -> Dict[Literal, List[RuleOccurrence]]:
    by_head = defaultdict(list)
    for occ in occurrences:
        by_head[occ.rule.head].append(occ)
    return by_head


def _default_rejected(dlp: DLP, valuation: FrozenSet[Literal], same_component: bool,
                      mapping: Optional[LevelMapping] = None) -> RejectionSet:
    occurrences = dlp.all()
    by_head = occurrences_by_head(occurrences)
    rejected = []
    for occ in occurrences:
        for witness in by_head.get(default_complement(occ.rule.head), []):
            if witness.component < occ.component or (witness.component == occ.component and not same_component):
                continue
            if not witness.rule.body <= valuation:
                continue
            if mapping is not None and not mapping.supports(witness.rule):
                continue
            rejected.append(occ)
            break
    return RejectionSet(frozenset(rejected))


def rej_rd(dlp: DLP, interpretation: Interpretation, alphabet: Optional[Alphabet] = None,
           opaque: bool = False) -> RejectionSet:
    """Rules of a component rejected by a rule of the same or a later component

    The rejecting rule has the default complement of the rejected head and a body satisfied in J.

    Raises
    ------
    PreconditionError: if the DLP has strong negation and -p is not read as an opaque atom
    """
    if not opaque:
        check_generalised(dlp, 'RD')
    return _default_rejected(dlp, valuation_of(dlp, interpretation, alphabet, opaque), same_component=True)


def def_constrained(dlp: DLP, interpretation: Interpretation, alphabet: Optional[Alphabet] = None,
                    opaque: bool = False) -> Program:
    """Default facts not p. for the atoms p without any rule p :- B. of the DLP such that J satisfies B"""
    if not opaque:
        check_generalised(dlp, 'RD')
    valuation = valuation_of(dlp, interpretation, alphabet, opaque)
    supported = frozenset(occ.rule.head for occ in dlp.all() if occ.rule.body <= valuation)
    return Program(tuple(Rule(Literal(lit, True)) for lit in universe(dlp, alphabet, opaque)
                         if Literal(lit) not in supported))


def rej_ws(dlp: DLP, interpretation: Interpretation, mapping: LevelMapping, alphabet: Optional[Alphabet] = None,
           opaque: bool = False) -> RejectionSet:
    """Rules rejected by a strictly later rule with the complementary head, a body satisfied in J and a
    head level above its body levels"""
    if not opaque:
        check_generalised(dlp, 'WS')
    return _default_rejected(dlp, valuation_of(dlp, interpretation, alphabet, opaque), same_component=False,
                             mapping=mapping)


def conflicting_witnesses(dlp: DLP) -> Dict[RuleOccurrence, List[RuleOccurrence]]:
    """For each occurrence, the occurrences of strictly later components whose head is in conflict with it"""
    occurrences = dlp.all()
    by_head = occurrences_by_head(occurrences)
    witnesses = {}
    for occ in occurrences:
        witnesses[occ] = [witness for head in con(occ.rule.head) for witness in by_head.get(head, [])
                          if witness.component > occ.component]
    return witnesses


def rej_rds(dlp: DLP, literals: LiteralSet) -> RejectionSet:
    """Rules rejected by a strictly later conflicting rule whose body is included in the literal set S

    S is any set of literals, it does not need to be consistent.
    """
    literals = _literal_set(literals)
    return RejectionSet(frozenset(occ for occ, witnesses in conflicting_witnesses(dlp).items()
                                  if any(witness.rule.body <= literals for witness in witnesses)))


def rem(dlp: DLP, literals: LiteralSet) -> Tuple[RuleOccurrence, ...]:
    """Remainder of the DLP: all its rule occurrences but the ones rejected w.r.t. S"""
    rejected = rej_rds(dlp, literals)
    return tuple(occ for occ in dlp.all() if occ not in rejected)


def rej_wss(dlp: DLP, interpretation: Interpretation, mapping: LevelMapping,
            alphabet: Optional[Alphabet] = None) -> RejectionSet:
    """Rules rejected by a strictly later conflicting rule with a body satisfied in J, whose body levels all
    stay below the level of every literal in conflict with the rejected head"""
    valuation = valuation_of(dlp, interpretation, alphabet)
    rejected = []
    for occ, witnesses in conflicting_witnesses(dlp).items():
        threshold = mapping.down(con(occ.rule.head))
        if any(witness.rule.body <= valuation and threshold > mapping.up(witness.rule.body)
               for witness in witnesses):
            rejected.append(occ)
    return RejectionSet(frozenset(rejected))
