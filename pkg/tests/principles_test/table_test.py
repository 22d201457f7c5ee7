# -*- coding: utf-8 -*-
"""
Created the 17/10/2026

@author: dlp_engine developers
"""
import pytest

from dlp_engine import scenarios
from dlp_engine.interp import Interpretation
from dlp_engine.modelset import ModelSet, SemanticsId
from dlp_engine.parser import parse_dlp, parse_program
from dlp_engine.principles.report import PropertyReport, ShapeError, SuiteSummary
from dlp_engine.principles.table import (RECOVERY_PROPERTIES, TABLE_PROPERTIES, check_table1, fact_update_model,
                                         property_factory, run_property_suite)

N_INSTANCES = 200
EXTENDED = ('erd', 'ews')


class TestRegistry:
    def test_every_row_registered(self):
        assert len(TABLE_PROPERTIES) == 11
        assert set(property_factory.properties) == set(TABLE_PROPERTIES + RECOVERY_PROPERTIES)

    def test_arity(self):
        with pytest.raises(ShapeError):
            check_table1('absorption', 'erd', parse_program('p.'))

    def test_shape(self):
        with pytest.raises(ShapeError):
            check_table1('augmentation', 'erd', parse_program('p.'), parse_program('q.'), parse_program('r.'))
        with pytest.raises(ShapeError):
            check_table1('non-interference', 'erd', parse_program('p.'), parse_program('q.'), parse_program('q.'))
        with pytest.raises(ShapeError):
            check_table1('absorption', 'erd', parse_dlp('p.\n#update.\nq.'), parse_program('q.'))


class TestBuiltinCases:
    @pytest.mark.parametrize('semantics', EXTENDED)
    @pytest.mark.parametrize('name', TABLE_PROPERTIES + RECOVERY_PROPERTIES)
    def test_rows_hold(self, semantics, name):
        cases = scenarios.builtin_cases(name)
        assert cases
        for inputs in cases:
            report = check_table1(name, semantics, *inputs)
            assert report.holds, str(report)

    def test_fact_update_model(self):
        assert str(fact_update_model(parse_dlp('p.\nnot q.\n#update.\n-p.\nq.'))) == '{-p, q}'
        assert str(fact_update_model(parse_dlp('p.\n#update.\nnot -p.'))) == '{p}'

    def test_tautologies_from_dlp(self):
        prop = property_factory.get('tautologies')
        others, tautologies = prop.from_dlp(parse_dlp('p.\np :- p.\n#update.\nq :- q, r.'))
        assert len(others[0]) == 1 and len(others[1]) == 0
        assert len(tautologies[0]) == 1 and len(tautologies[1]) == 1
        assert prop.from_dlp(parse_dlp('p.')) is None


class TestExpectedFailures:
    @pytest.mark.parametrize('semantics', ['rd+expone', 'ws+expone'])
    def test_empty_update(self, semantics):
        report = check_table1('empty-update', semantics, scenarios.load('empty-update'))
        assert not report.holds
        assert report.expected_failure
        left, right = report.witness
        assert left != right

    @pytest.mark.parametrize('semantics', ['rd+exptwo', 'ws+exptwo'])
    def test_early_recovery(self, semantics):
        report = check_table1('early-recovery', semantics, parse_program('p.\n-p.'), parse_program('not p.'))
        assert report.status == 'expected failure'

    def test_unexpected_failure(self):
        report = check_table1('empty-update', 'rd+exptwo', scenarios.load('empty-update'))
        assert report.holds

    def test_not_applicable_under_rd(self):
        report = check_table1('primacy', 'rd', scenarios.load('faulty-sensor'))
        assert not report.applicable


class TestReports:
    def test_witness_required(self):
        with pytest.raises(ValueError):
            PropertyReport('primacy', SemanticsId.ERD, (), False)
        with pytest.raises(ValueError):
            PropertyReport('primacy', SemanticsId.ERD, (), True, witness=Interpretation())

    def test_rendering(self):
        report = PropertyReport('primacy', SemanticsId.ERD, (), False, witness=Interpretation.parse('{p}'))
        assert str(report) == 'primacy [erd]: fails\n  witness: {p}'
        pair = PropertyReport('idempotence', SemanticsId.RD, (), False,
                              witness=(ModelSet.from_strings(['{p}', '{q}']), ModelSet()))
        assert 'witness: {{p}, {q}} vs {}' in str(pair)

    def test_summary(self):
        summary = SuiteSummary('primacy', SemanticsId.ERD)
        summary.add(PropertyReport('primacy', SemanticsId.ERD, (), True))
        summary.add(PropertyReport.not_applicable('primacy', SemanticsId.ERD, (), 'shape'))
        assert (summary.passed, summary.failed, summary.not_applicable) == (1, 0, 1)
        assert summary.ok and summary.status == 'pass'
        failing = PropertyReport('primacy', SemanticsId.ERD, (), False, witness=Interpretation())
        summary.add(failing)
        assert summary.status == 'FAIL'
        assert summary.first_counterexample is failing
        assert summary.to_dict()['failed'] == 1


class TestSuites:
    @pytest.mark.parametrize('semantics', EXTENDED)
    @pytest.mark.parametrize('name', TABLE_PROPERTIES + RECOVERY_PROPERTIES)
    def test_random_instances(self, semantics, name):
        summary = run_property_suite(name, semantics, N_INSTANCES, seed=7)
        assert summary.failed == 0, str(summary.first_counterexample)
        assert summary.passed > 0

    @pytest.mark.parametrize('semantics', ['rd', 'ws-dlp'])
    @pytest.mark.parametrize('name', ['primacy', 'support', 'idempotence'])
    def test_without_strong_negation(self, semantics, name):
        summary = run_property_suite(name, semantics, 50, seed=3)
        assert summary.failed == 0, str(summary.first_counterexample)
        assert summary.not_applicable == 0

    def test_reproducible(self):
        first = run_property_suite('absorption', 'erd', 20, seed=11)
        second = run_property_suite('absorption', 'erd', 20, seed=11)
        assert first.to_dict() == second.to_dict()
