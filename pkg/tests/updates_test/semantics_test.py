# -*- coding: utf-8 -*-
"""
Created the 17/10/2026

@author: dlp_engine developers
"""
import pytest

from dlp_engine import scenarios
from dlp_engine.interp import EnumerationLimitError, Interpretation
from dlp_engine.modelset import ModelSet, SemanticsId
from dlp_engine.parser import parse_dlp, parse_program
from dlp_engine.principles.oracle import ws_oracle
from dlp_engine.single import stable_models
from dlp_engine.syntax import DLP, Alphabet, objective
from dlp_engine.updates.evaluators import (extended_level_mapping, extended_rd_models, extended_rd_trace,
                                           extended_ws_mapping, extended_ws_models, is_extended_rd_model,
                                           is_extended_ws_model, rd_models, search_extended_mapping, t_rds,
                                           ws_models)
from dlp_engine.updates.rejection import PreconditionError
from dlp_engine.updates.semantics import SemanticsFactory, check_candidate, models, semantics_factory

DLP_SEMANTICS = ('rd', 'ws-dlp', 'erd', 'ews')
EXTENDED = ('erd', 'ews')


class TestSemanticsId:
    def test_tags(self):
        assert SemanticsId.from_tag('ERD') is SemanticsId.ERD
        assert SemanticsId.from_tag(SemanticsId.WS) is SemanticsId.WS
        assert SemanticsId.from_tag('rd+exptwo').transformation == 'exptwo'
        assert SemanticsId.WS_EXPONE.base is SemanticsId.WS
        assert SemanticsId.ERD.base is SemanticsId.ERD
        assert SemanticsId.RD.requires_generalised
        assert not SemanticsId.RD_EXPONE.requires_generalised

    def test_factory(self):
        assert set(semantics_factory.semantics) == set(SemanticsId.tags())
        assert isinstance(SemanticsFactory(), SemanticsFactory)


class TestIrrelevantUpdates:
    @pytest.mark.parametrize('name', ['irrelevant-update', 'venus-update'])
    @pytest.mark.parametrize('semantics', DLP_SEMANTICS)
    def test_day_only(self, name, semantics):
        assert models(scenarios.load(name), semantics).to_strings() == ['{day}']

    def test_stable_models_of_base(self):
        assert stable_models(parse_program(scenarios.DAY_NIGHT)).to_strings() == ['{day}']

    def test_verdicts(self):
        dlp = scenarios.load('irrelevant-update')
        refused = check_candidate(dlp, Interpretation.parse('{night, stars}'), 'rd')
        assert not refused.accepted
        assert refused.rejected.positions() == {(0, 2), (0, 3)}
        assert check_candidate(dlp, Interpretation.parse('{day}'), 'rd').accepted


class TestConflictingFacts:
    def test_expone_keeps_the_conflict_alive(self):
        dlp = scenarios.load('empty-update')
        assert models(dlp, 'rd+expone').to_strings() == ['{-p}', '{p}']
        assert models(dlp, 'ws+expone').to_strings() == ['{-p}', '{p}']

    @pytest.mark.parametrize('semantics', EXTENDED)
    def test_unsolved_conflict(self, semantics):
        assert len(models(scenarios.load('empty-update'), semantics)) == 0

    @pytest.mark.parametrize('semantics', ['rd+exptwo', 'ws+exptwo'])
    def test_exptwo_loses_the_recovery(self, semantics):
        assert len(models(scenarios.load('faulty-sensor'), semantics)) == 0

    @pytest.mark.parametrize('semantics', EXTENDED)
    def test_recovery(self, semantics):
        assert models(scenarios.load('faulty-sensor'), semantics).to_strings() == ['{-p}']

    def test_rejected_candidate(self):
        verdict = check_candidate(scenarios.load('faulty-sensor'), Interpretation.parse('{p}'), 'erd')
        assert not verdict.accepted
        assert 'model: no' in verdict.render()


class TestScenarios:
    @pytest.mark.parametrize('semantics', EXTENDED)
    def test_stratified(self, semantics):
        assert models(scenarios.load('stratified'), semantics).to_strings() == ['{-p, q, -r, s}']

    @pytest.mark.parametrize('semantics', EXTENDED)
    def test_railway(self, semantics):
        assert models(scenarios.load('railway-train'), semantics).to_strings() == ['{train, wait}']
        assert models(scenarios.load('railway-reset'), semantics).to_strings() == ['{listen}']

    def test_fact_update(self):
        assert models(scenarios.load('fact-update'), 'erd').to_strings() == ['{-p}']


class TestPreconditions:
    def test_strong_negation(self):
        for semantics in ('rd', 'ws-dlp'):
            with pytest.raises(PreconditionError):
                models(scenarios.load('faulty-sensor'), semantics)
        with pytest.raises(PreconditionError):
            rd_models(scenarios.load('faulty-sensor'))
        with pytest.raises(PreconditionError):
            ws_models(scenarios.load('faulty-sensor'))

    @pytest.mark.parametrize('semantics', ['sm', 'ws'])
    def test_single_program(self, semantics):
        with pytest.raises(PreconditionError):
            models(scenarios.load('fact-update'), semantics)

    def test_enumeration_limit(self):
        with pytest.raises(EnumerationLimitError):
            models(scenarios.load('stratified'), 'erd', limit=3)


class TestModels:
    def test_extra_atoms(self):
        dlp = parse_dlp('p.')
        assert models(dlp, 'erd', Alphabet.from_names('q')).to_strings() == ['{p}']

    def test_model_set_equality(self):
        dlp = scenarios.load('railway-train')
        assert models(dlp, 'erd') == models(dlp, 'ews')
        assert models(dlp, 'erd').semantics is SemanticsId.ERD
        assert models(dlp, 'erd') == ModelSet.from_strings(['{wait, train}'])

    def test_functions_match_semantics(self):
        dlp = scenarios.load('stratified')
        assert extended_rd_models(dlp) == models(dlp, 'erd')
        assert extended_ws_models(dlp) == models(dlp, 'ews')

    def test_json_payload(self):
        payload = models(scenarios.load('faulty-sensor'), 'erd').to_dict()
        assert payload == {'semantics': 'erd', 'models': [['-p']], 'count': 1}

    def test_single_program_semantics(self):
        dlp = DLP.single(parse_program(scenarios.DAY_NIGHT))
        assert models(dlp, 'sm') == models(dlp, 'ws') == models(dlp, 'erd')


class TestExtendedOperator:
    def test_trace_reaches_the_model(self):
        dlp = scenarios.load('faulty-sensor')
        interpretation = Interpretation.parse('{-p}')
        trace = extended_rd_trace(dlp, interpretation)
        assert len(trace[0]) == 0
        assert {str(lit) for lit in trace[-1]} == {'-p', 'not p'}
        assert is_extended_rd_model(dlp, interpretation)

    def test_single_step(self):
        dlp = scenarios.load('faulty-sensor')
        step = t_rds(dlp, Interpretation.parse('{-p}'), frozenset())
        assert {str(lit) for lit in step} == {'-p', 'not p'}

    def test_trace_rendering(self):
        verdict = check_candidate(scenarios.load('stratified'), Interpretation.parse('{-p, q, -r, s}'), 'erd')
        assert verdict.accepted
        text = verdict.render(trace=True)
        assert 'T^0: {}' in text
        assert text.splitlines()[-1] == 'model: yes'


class TestExtendedWSMapping:
    LATE_REJECTION = parse_dlp('s :- p, s.\np :- not p.\n#update.\nq :- not r, s.\nnot p :- not q.')

    def test_iteration_levels_are_not_enough(self):
        interpretation = Interpretation()
        mapping = extended_level_mapping(self.LATE_REJECTION, interpretation)
        assert not is_extended_ws_model(self.LATE_REJECTION, interpretation, mapping)
        found = search_extended_mapping(self.LATE_REJECTION, interpretation)
        assert found is not None
        assert is_extended_ws_model(self.LATE_REJECTION, interpretation, found)
        assert found(objective('p')) > found(objective('q'))
        assert found(objective('p', True)) > found(objective('q'))

    def test_models(self):
        assert models(self.LATE_REJECTION, 'ews').to_strings() == ['{}']
        assert models(self.LATE_REJECTION, 'ews') == models(self.LATE_REJECTION, 'erd')

    def test_verdict(self):
        verdict = check_candidate(self.LATE_REJECTION, Interpretation(), 'ews')
        assert verdict.accepted
        assert is_extended_ws_model(self.LATE_REJECTION, Interpretation(), verdict.level_mapping)

    def test_no_mapping(self):
        dlp = scenarios.load('faulty-sensor')
        assert search_extended_mapping(dlp, Interpretation.parse('{p}')) is None
        assert extended_ws_mapping(dlp, Interpretation.parse('{p}')) is None
        assert extended_ws_mapping(dlp, Interpretation.parse('{-p}')) is not None


class TestLevelBlockedRejection:
    """The only rule rejecting p :- not -p, q. has not -p in its body"""
    DLP_TEXT = 'q.\n#update.\np :- not -p, q.\n#update.\n-r :- r.\nnot p :- not -p, q.'

    def test_model_sets(self):
        dlp = parse_dlp(self.DLP_TEXT)
        assert models(dlp, 'erd').to_strings() == ['{q}']
        assert models(dlp, 'ews').to_strings() == []

    def test_no_level_mapping(self):
        dlp = parse_dlp(self.DLP_TEXT)
        interpretation = Interpretation.parse('{q}')
        assert is_extended_rd_model(dlp, interpretation)
        assert search_extended_mapping(dlp, interpretation) is None
        assert not ws_oracle(dlp, interpretation, extended=True)


class TestCandidateAlphabet:
    @pytest.mark.parametrize('semantics', ['rd+expone', 'ws+expone', 'rd+exptwo', 'erd'])
    @pytest.mark.parametrize('candidate', ['{q}', '{-q}', '{p}', '{p, -q}'])
    def test_candidate_atoms_join_the_alphabet(self, semantics, candidate):
        dlp = parse_dlp('p.\n#update.\nnot -p :- p.')
        interpretation = Interpretation.parse(candidate)
        verdict = check_candidate(dlp, interpretation, semantics)
        assert verdict == check_candidate(dlp, interpretation, semantics, interpretation.atoms)
        assert verdict.accepted == (interpretation in models(dlp, semantics, interpretation.atoms))
