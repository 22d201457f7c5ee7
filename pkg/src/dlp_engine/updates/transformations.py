# -*- coding: utf-8 -*-
"""
Created the 17/10/2026

@author: dlp_engine developers

Coherence transformations encoding conflicts between l and -l as conflicts between l and not l, so that
causal rejection semantics meant for default negation only can be applied to programs with strong negation.
"""
from typing import Optional

from pymodaq_utils.logger import set_logger, get_module_name

from dlp_engine.syntax import Alphabet, DLP, Literal, Program, Rule, alphabet_of

logger = set_logger(get_module_name(__file__))

TRANSFORMATIONS = ('expone', 'exptwo')


def coherence_rules(alphabet: Alphabet) -> Program:
    """Rules not -p :- p. and not p :- -p. for every atom p"""
    return Program(tuple(Rule(Literal(lit.complement(), True), frozenset({Literal(lit)}))
                         for lit in alphabet.objective_literals()))


def expone(dlp: DLP, alphabet: Optional[Alphabet] = None) -> DLP:
    """Add the coherence rules of every atom of the DLP alphabet to every component, empty ones included"""
    if alphabet is not None:
        alphabet = alphabet_of(dlp) | alphabet
    else:
        alphabet = alphabet_of(dlp)
    coherence = coherence_rules(alphabet)
    return DLP(tuple(comp + coherence for comp in dlp))


def exptwo(dlp: DLP, alphabet: Optional[Alphabet] = None) -> DLP:
    """Add not -H :- B. to a component for each of its rules H :- B. with an objective head

    Components without rules stay empty. The alphabet is unused and only there to share the signature of
    expone.
    """
    components = []
    for comp in dlp:
        companions = tuple(Rule(Literal(rule.head.objective.complement(), True), rule.body)
                           for rule in comp if rule.head.is_objective)
        components.append(comp + companions)
    return DLP(tuple(components))


def transform(dlp: DLP, name: str, alphabet: Optional[Alphabet] = None) -> DLP:
    if name == 'expone':
        return expone(dlp, alphabet)
    elif name == 'exptwo':
        return exptwo(dlp, alphabet)
    raise ValueError(f'Unknown transformation {name}, possible values are {TRANSFORMATIONS}')
