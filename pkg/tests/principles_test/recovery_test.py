# -*- coding: utf-8 -*-
"""
Created the 17/10/2026

@author: dlp_engine developers
"""
import pytest

from dlp_engine import scenarios
from dlp_engine.parser import parse_dlp, parse_program
from dlp_engine.principles.generator import GeneratorParams, acyclic_solved_dlp, generate_random_dlp
from dlp_engine.principles.recovery import (all_conflicts_solved, check_early_recovery,
                                            check_generalised_early_recovery, conflicting_pairs, is_acyclic,
                                            is_consistent_facts, solves_all_conflicts, verify_acyclic)
from dlp_engine.principles.report import ShapeError
from dlp_engine.single import LevelMapping
from dlp_engine.syntax import objective

RANDOM_PARAMS = GeneratorParams(max_components=3, max_atoms=4, max_rules=8, max_body=2)


class TestConflicts:
    def test_pairs(self):
        pairs = list(conflicting_pairs(parse_program('p. -p. not p. q.')))
        assert {(str(first), str(second)) for first, second in pairs} == {('p.', '-p.'), ('p.', 'not p.')}

    @pytest.mark.parametrize('text, expected', [
        ('p. not q.', True),
        ('p. -q. not -p.', True),
        ('p. not p.', False),
        ('p. -p.', False),
        ('p :- q.', False),
        ('', True),
    ])
    def test_consistent_facts(self, text, expected):
        assert is_consistent_facts(parse_program(text)) == expected

    def test_solves_all_conflicts(self):
        base = parse_program('p. -p. q. not q.')
        assert solves_all_conflicts(base, parse_program('not p. -q.'))
        assert not solves_all_conflicts(base, parse_program('not p.'))
        assert solves_all_conflicts(parse_program('p. q.'), parse_program(''))

    def test_solves_all_conflicts_needs_facts(self):
        with pytest.raises(ShapeError):
            solves_all_conflicts(parse_program('p :- q.'), parse_program('q.'))


class TestEarlyRecovery:
    BASE = parse_program('p.\n-p.')

    @pytest.mark.parametrize('semantics', ['erd', 'ews'])
    def test_holds(self, semantics):
        report = check_early_recovery(semantics, self.BASE, parse_program('not p.'))
        assert report.applicable
        assert report.holds

    @pytest.mark.parametrize('semantics', ['rd+exptwo', 'ws+exptwo'])
    def test_exptwo_fails(self, semantics):
        report = check_early_recovery(semantics, self.BASE, parse_program('not p.'))
        assert not report.holds
        assert report.expected_failure
        assert len(report.witness) == 0
        assert report.status == 'expected failure'

    def test_not_applicable(self):
        assert not check_early_recovery('erd', self.BASE, parse_program('')).applicable
        assert not check_early_recovery('erd', self.BASE, parse_program('q :- p.')).applicable
        assert not check_early_recovery('erd', self.BASE, parse_program('q. not q. not p.')).applicable
        assert not check_early_recovery('rd', self.BASE, parse_program('not p.')).applicable


class TestAcyclic:
    STRATIFIED = scenarios.load('stratified')

    def test_stratified_levels(self):
        mapping = is_acyclic(self.STRATIFIED)
        assert mapping is not None
        assert {name: mapping(objective(name)) for name in 'pqrs'} == {'p': 3, 'q': 0, 'r': 2, 's': 1}
        assert mapping(objective('r', True)) == mapping(objective('r'))
        assert verify_acyclic(self.STRATIFIED, mapping)

    def test_hand_written_levels(self):
        levels = {objective(name, negated): value for name, value in zip('pqrs', (3, 0, 2, 1))
                  for negated in (False, True)}
        assert verify_acyclic(self.STRATIFIED, LevelMapping(levels))
        levels[objective('p', True)] = 4
        assert not verify_acyclic(self.STRATIFIED, LevelMapping(levels))

    @pytest.mark.parametrize('text', ['p :- not p.', 'p :- q.\nq :- p.', 'p :- -p.', 'p :- q.\n-q :- p.'])
    def test_cyclic(self, text):
        assert is_acyclic(parse_program(text)) is None

    def test_facts_are_acyclic(self):
        assert is_acyclic(parse_program('p. -p. not q.')) is not None

    def test_all_conflicts_solved(self):
        assert all_conflicts_solved(self.STRATIFIED)
        assert all_conflicts_solved(scenarios.load('faulty-sensor'))
        assert not all_conflicts_solved(scenarios.load('empty-update'))
        assert not all_conflicts_solved(parse_dlp('p.\nnot p :- q.'))
        assert all_conflicts_solved(parse_dlp('p.\n#update.\nnot p :- q.'))

    @pytest.mark.parametrize('seed', range(200))
    def test_random_levels_verify(self, seed):
        dlp = generate_random_dlp((13, seed), RANDOM_PARAMS)
        mapping = is_acyclic(dlp)
        if mapping is not None:
            assert verify_acyclic(dlp, mapping), str(dlp)

    @pytest.mark.parametrize('seed', range(200))
    def test_generated_acyclic_dlps(self, seed):
        dlp = acyclic_solved_dlp((14, seed), RANDOM_PARAMS)
        mapping = is_acyclic(dlp)
        assert mapping is not None, str(dlp)
        assert verify_acyclic(dlp, mapping)


class TestGeneralisedEarlyRecovery:
    @pytest.mark.parametrize('semantics', ['erd', 'ews'])
    @pytest.mark.parametrize('name', ['stratified', 'faulty-sensor'])
    def test_holds(self, semantics, name):
        report = check_generalised_early_recovery(semantics, scenarios.load(name))
        assert report.applicable
        assert report.holds

    def test_exptwo(self):
        report = check_generalised_early_recovery('rd+exptwo', scenarios.load('faulty-sensor'))
        assert not report.holds
        assert report.expected_failure

    def test_not_applicable(self):
        assert not check_generalised_early_recovery('erd', parse_dlp('p :- not p.')).applicable
        assert not check_generalised_early_recovery('erd', scenarios.load('empty-update')).applicable
